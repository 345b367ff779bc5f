#include "simulator.hpp"

#include <stdexcept>
#include <utility>

namespace ptie {

PayloadStore generate_payloads(const ProblemInstance& instance, std::uint64_t seed,
                               std::uint32_t width_bits) {
  SplitMix64 rng(seed);
  const std::size_t words = (width_bits + 63) / 64;
  std::vector<std::uint64_t> scratch(words);

  PayloadStore store;
  for (const PairId& pair : all_pairs(instance.clients())) {
    for (std::size_t w = 0; w < words; ++w) scratch[w] = rng.next();
    store.emplace(pair, Payload(width_bits, scratch));
  }
  return store;
}

ExchangeReport run_exchange(const ProblemInstance& instance, std::uint64_t seed,
                            std::uint32_t width_bits) {
  const std::uint32_t n = instance.clients();
  const std::uint32_t k = instance.privileged();
  const TransmissionPlan plan = build_plan(instance);
  const Schedule schedule = build_schedule(instance);

  if (schedule.entries.size() != plan.total()) {
    throw std::logic_error("schedule length " + std::to_string(schedule.entries.size()) +
                           " disagrees with plan total " + std::to_string(plan.total()));
  }
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (schedule.for_sender(i).size() != plan.counts[i - 1]) {
      throw std::logic_error("client " + std::to_string(i) + " scheduled for " +
                             std::to_string(schedule.for_sender(i).size()) + " packets, plan says " +
                             std::to_string(plan.counts[i - 1]));
    }
  }

  const PayloadStore truth = generate_payloads(instance, seed, width_bits);
  std::vector<CodedPacket> packets;
  packets.reserve(schedule.entries.size());
  for (const ScheduleEntry& entry : schedule.entries) {
    packets.push_back(encode(entry, truth));
  }

  ExchangeReport report{instance, seed, width_bits, schedule.entries.size(),
                        true,     {},   {},         {}};
  report.solved_counts.reserve(n);
  report.redundant_counts.reserve(k);
  report.missing.reserve(k);

  for (std::uint32_t client = 1; client <= n; ++client) {
    PayloadStore local;
    for (const PairId& pair : local_set(instance, client)) {
      local.emplace(pair, truth.at(pair));
    }
    Decoder decoder(instance, client, local);
    for (const CodedPacket& packet : packets) {
      if (packet.sender != client) decoder.ingest(packet);
    }

    report.solved_counts.push_back(decoder.solved_count());
    if (instance.is_privileged(client)) {
      report.redundant_counts.push_back(decoder.redundant_count());
      report.missing.push_back(decoder.missing());
      if (!decoder.complete()) report.success = false;
      for (const auto& [pair, payload] : decoder.solved()) {
        if (payload != truth.at(pair)) report.success = false;
      }
    }
  }
  return report;
}

}  // namespace ptie
