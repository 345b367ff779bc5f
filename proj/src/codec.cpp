#include "codec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ptie {

namespace {

bool test_bit(const std::vector<std::uint64_t>& bits, std::uint64_t index) {
  return (bits[index / 64] >> (index % 64)) & 1;
}

void xor_into(std::vector<std::uint64_t>& target, const std::vector<std::uint64_t>& source) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] ^= source[i];
}

bool is_zero(const std::vector<std::uint64_t>& bits) {
  return std::all_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t lowest_set_bit(const std::vector<std::uint64_t>& bits) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    if (bits[w] != 0) return w * 64 + std::countr_zero(bits[w]);
  }
  throw std::logic_error("lowest_set_bit on zero row");
}

std::uint64_t popcount(const std::vector<std::uint64_t>& bits) {
  std::uint64_t count = 0;
  for (const std::uint64_t w : bits) count += std::popcount(w);
  return count;
}

}  // namespace

std::string to_line(const ScheduleEntry& entry) {
  return "sender=" + std::to_string(entry.sender) + " j=" + std::to_string(entry.index) +
         " packet=" + to_string(entry.vector);
}

std::span<const ScheduleEntry> Schedule::for_sender(std::uint32_t sender) const {
  auto begin = entries.begin();
  while (begin != entries.end() && begin->sender < sender) ++begin;
  auto end = begin;
  while (end != entries.end() && end->sender == sender) ++end;
  return {begin, end};
}

Schedule build_schedule(const ProblemInstance& instance) {
  const std::uint32_t n = instance.clients();
  const std::uint32_t k = instance.privileged();
  const TransmissionPlan plan = build_plan(instance);
  const auto succ = [k](std::uint32_t m) { return m % k + 1; };
  const std::uint32_t redirected = (k % 2 == 1 && k >= 5) ? (k - 3) / 2 : 0;

  Schedule schedule{instance, {}};
  schedule.entries.reserve(plan.total());
  for (std::uint32_t i = 1; i <= n; ++i) {
    const auto y = static_cast<std::uint32_t>(plan.counts[i - 1]);
    for (std::uint32_t j = 1; j <= y; ++j) {
      if (i <= k) {
        const PairId anchor(i, succ(i));
        const std::uint32_t partner = (i <= redirected && j == y) ? k : succ(i + j);
        schedule.entries.push_back({i, j, CodingVector::pair_xor(anchor, PairId(i, partner))});
      } else if (j < k) {
        schedule.entries.push_back({i, j, CodingVector::pair_xor(PairId(1, i), PairId(1 + j, i))});
      } else {
        schedule.entries.push_back({i, j, CodingVector::single(PairId(i, i + j - k + 1))});
      }
    }
  }
  return schedule;
}

CodedPacket encode(const ScheduleEntry& entry, const PayloadStore& payloads) {
  const std::span<const PairId> terms = entry.vector.terms();
  const auto lookup = [&payloads](const PairId& term) -> const Payload& {
    const auto it = payloads.find(term);
    if (it == payloads.end()) {
      throw std::invalid_argument("no payload stored for " + to_string(term));
    }
    return it->second;
  };
  Payload acc = lookup(terms.front());
  for (const PairId& term : terms.subspan(1)) acc ^= lookup(term);
  return CodedPacket(entry.sender, entry.vector, std::move(acc));
}

Decoder::Decoder(const ProblemInstance& instance, std::uint32_t client, const PayloadStore& local)
    : instance_(instance),
      client_(client),
      width_(local.empty() ? 0 : local.begin()->second.width()),
      universe_(instance.pair_count()),
      words_((universe_ + 63) / 64) {
  const std::vector<PairId> expected = local_set(instance, client);
  if (local.size() != expected.size()) {
    throw std::invalid_argument("local store holds " + std::to_string(local.size()) +
                                " payloads, expected " + std::to_string(expected.size()));
  }
  for (const PairId& pair : expected) {
    const auto it = local.find(pair);
    if (it == local.end()) {
      throw std::invalid_argument("local store is missing " + to_string(pair));
    }
    if (it->second.width() != width_) {
      throw std::invalid_argument("local store mixes payload widths");
    }
  }

  rows_.reserve(expected.size());
  for (const PairId& pair : expected) {
    Row row{std::vector<std::uint64_t>(words_, 0), local.at(pair), pair_rank(pair, instance.clients())};
    row.bits[row.pivot / 64] |= std::uint64_t{1} << (row.pivot % 64);
    rows_.push_back(std::move(row));
    solved_.emplace(pair, local.at(pair));
  }
  std::sort(rows_.begin(), rows_.end(),
            [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
}

std::vector<PairId> Decoder::ingest(const CodedPacket& packet) {
  if (packet.payload.width() != width_) {
    throw std::invalid_argument("packet width " + std::to_string(packet.payload.width()) +
                                " does not match decoder width " + std::to_string(width_));
  }

  std::vector<std::uint64_t> bits(words_, 0);
  for (const PairId& term : packet.vector.terms()) {
    const std::uint64_t rank = pair_rank(term, instance_.clients());
    bits[rank / 64] ^= std::uint64_t{1} << (rank % 64);
  }
  Payload value = packet.payload;

  // Basis rows are reduced against each other, so one ascending pass
  // eliminates every pivot the incoming row touches.
  for (const Row& row : rows_) {
    if (test_bit(bits, row.pivot)) {
      xor_into(bits, row.bits);
      value ^= row.value;
    }
  }
  if (is_zero(bits)) {
    ++redundant_;
    return {};
  }

  Row fresh{std::move(bits), std::move(value), 0};
  fresh.pivot = lowest_set_bit(fresh.bits);

  std::vector<PairId> newly;
  const auto solve_if_singleton = [this, &newly](const Row& row) {
    if (popcount(row.bits) != 1) return;
    const PairId pair = pair_at_rank(row.pivot, instance_.clients());
    if (solved_.emplace(pair, row.value).second) newly.push_back(pair);
  };

  // Back-substitute the new pivot out of the existing rows.
  for (Row& row : rows_) {
    if (test_bit(row.bits, fresh.pivot)) {
      xor_into(row.bits, fresh.bits);
      row.value ^= fresh.value;
      solve_if_singleton(row);
    }
  }
  solve_if_singleton(fresh);

  const auto position = std::lower_bound(
      rows_.begin(), rows_.end(), fresh.pivot,
      [](const Row& row, std::uint64_t pivot) { return row.pivot < pivot; });
  rows_.insert(position, std::move(fresh));

  std::sort(newly.begin(), newly.end());
  return newly;
}

bool Decoder::complete() const { return solved_.size() == universe_; }

bool Decoder::is_solved(const PairId& pair) const { return solved_.contains(pair); }

const Payload& Decoder::payload_of(const PairId& pair) const {
  const auto it = solved_.find(pair);
  if (it == solved_.end()) {
    throw std::invalid_argument(to_string(pair) + " is not solved yet");
  }
  return it->second;
}

std::vector<PairId> Decoder::missing() const {
  std::vector<PairId> gaps;
  for (const PairId& pair : all_pairs(instance_.clients())) {
    if (!solved_.contains(pair)) gaps.push_back(pair);
  }
  return gaps;
}

}  // namespace ptie
