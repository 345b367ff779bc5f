#include "ptie/ptie.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "codec.hpp"
#include "core.hpp"
#include "oracle.hpp"
#include "planner.hpp"
#include "simulator.hpp"

struct ptie_schedule {
  ptie::Schedule value;
};

struct ptie_report {
  ptie::ExchangeReport value;
};

namespace {

constexpr char kVersion[] = "0.1.0";

template <typename Fn>
ptie_status guarded(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const std::invalid_argument&) {
    return PTIE_ERROR_INVALID_ARGUMENT;
  } catch (const std::domain_error&) {
    return PTIE_ERROR_UNSUPPORTED;
  } catch (const std::bad_alloc&) {
    return PTIE_ERROR_INTERNAL;
  } catch (...) {
    return PTIE_ERROR_INTERNAL;
  }
}

// Deterministic cross-check of the fast feasibility test against the
// exhaustive quantifier: the optimal plan, a few canonical degenerate plans,
// and seeded random plans.
bool feasibility_agrees(const ptie::ProblemInstance& instance) {
  const std::uint32_t n = instance.clients();
  const std::uint64_t optimal = ptie::optimal_count(instance);

  const auto agrees = [&instance](const ptie::TransmissionPlan& plan) {
    return ptie::is_feasible(plan, instance) == ptie::oracle::exhaustive_feasible(plan, instance);
  };

  ptie::TransmissionPlan plan = ptie::build_plan(instance);
  if (!agrees(plan)) return false;
  plan.counts.assign(n, 0);
  if (!agrees(plan)) return false;
  plan.counts.assign(n, 1);
  if (!agrees(plan)) return false;

  ptie::SplitMix64 rng((std::uint64_t{n} << 32) | instance.privileged());
  for (int i = 0; i < 256; ++i) {
    for (std::uint32_t c = 0; c < n; ++c) {
      plan.counts[c] = rng.next() % (optimal + 3);
    }
    if (!agrees(plan)) return false;
  }
  return true;
}

}  // namespace

extern "C" {

const char* ptie_status_name(ptie_status status) {
  switch (status) {
    case PTIE_OK:
      return "ok";
    case PTIE_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case PTIE_ERROR_UNSUPPORTED:
      return "unsupported";
    case PTIE_ERROR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case PTIE_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* ptie_version(void) { return kVersion; }

ptie_status ptie_optimal_count(uint32_t clients, uint32_t privileged, uint64_t* out_count) {
  if (out_count == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_count = ptie::optimal_count(ptie::ProblemInstance(clients, privileged));
    return PTIE_OK;
  });
}

ptie_status ptie_uncoded_count(uint32_t clients, uint32_t privileged, uint64_t* out_count) {
  if (out_count == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_count = ptie::uncoded_count(ptie::ProblemInstance(clients, privileged));
    return PTIE_OK;
  });
}

ptie_status ptie_plan_counts(uint32_t clients, uint32_t privileged, uint64_t* counts,
                             size_t capacity) {
  if (counts == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const ptie::TransmissionPlan plan =
        ptie::build_plan(ptie::ProblemInstance(clients, privileged));
    if (capacity < plan.counts.size()) return PTIE_ERROR_BUFFER_TOO_SMALL;
    std::memcpy(counts, plan.counts.data(), plan.counts.size() * sizeof(uint64_t));
    return PTIE_OK;
  });
}

ptie_status ptie_plan_feasible(uint32_t clients, uint32_t privileged, const uint64_t* counts,
                               size_t count_len, int* out_feasible) {
  if (counts == nullptr || out_feasible == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const ptie::ProblemInstance instance(clients, privileged);
    ptie::TransmissionPlan plan;
    plan.counts.assign(counts, counts + count_len);
    *out_feasible = ptie::is_feasible(plan, instance) ? 1 : 0;
    return PTIE_OK;
  });
}

ptie_status ptie_schedule_create(uint32_t clients, uint32_t privileged,
                                 ptie_schedule** out_schedule) {
  if (out_schedule == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_schedule =
        new ptie_schedule{ptie::build_schedule(ptie::ProblemInstance(clients, privileged))};
    return PTIE_OK;
  });
}

void ptie_schedule_destroy(ptie_schedule* schedule) { delete schedule; }

size_t ptie_schedule_entry_count(const ptie_schedule* schedule) {
  return schedule == nullptr ? 0 : schedule->value.entries.size();
}

ptie_status ptie_schedule_entry_at(const ptie_schedule* schedule, size_t position,
                                   ptie_schedule_entry* out_entry) {
  if (schedule == nullptr || out_entry == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  if (position >= schedule->value.entries.size()) return PTIE_ERROR_INVALID_ARGUMENT;
  const ptie::ScheduleEntry& entry = schedule->value.entries[position];
  out_entry->sender = entry.sender;
  out_entry->index = entry.index;
  out_entry->term_count = static_cast<uint32_t>(entry.vector.size());
  for (std::size_t t = 0; t < entry.vector.size() && t < 2; ++t) {
    out_entry->term_lo[t] = entry.vector.terms()[t].lo;
    out_entry->term_hi[t] = entry.vector.terms()[t].hi;
  }
  return PTIE_OK;
}

ptie_status ptie_schedule_render_entry(const ptie_schedule* schedule, size_t position,
                                       char* buffer, size_t capacity) {
  if (schedule == nullptr || buffer == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  if (position >= schedule->value.entries.size()) return PTIE_ERROR_INVALID_ARGUMENT;
  const std::string rendered = ptie::to_string(schedule->value.entries[position].vector);
  if (capacity < rendered.size() + 1) return PTIE_ERROR_BUFFER_TOO_SMALL;
  std::memcpy(buffer, rendered.c_str(), rendered.size() + 1);
  return PTIE_OK;
}

ptie_status ptie_simulate(uint32_t clients, uint32_t privileged, uint64_t seed,
                          uint32_t payload_bits, ptie_report** out_report) {
  if (out_report == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_report = new ptie_report{
        ptie::run_exchange(ptie::ProblemInstance(clients, privileged), seed, payload_bits)};
    return PTIE_OK;
  });
}

void ptie_report_destroy(ptie_report* report) { delete report; }

int ptie_report_success(const ptie_report* report) {
  return (report != nullptr && report->value.success) ? 1 : 0;
}

uint64_t ptie_report_total_transmissions(const ptie_report* report) {
  return report == nullptr ? 0 : report->value.total_transmissions;
}

ptie_status ptie_report_solved_count(const ptie_report* report, uint32_t client,
                                     uint64_t* out_count) {
  if (report == nullptr || out_count == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  if (client < 1 || client > report->value.solved_counts.size()) {
    return PTIE_ERROR_INVALID_ARGUMENT;
  }
  *out_count = report->value.solved_counts[client - 1];
  return PTIE_OK;
}

ptie_status ptie_report_redundant_count(const ptie_report* report, uint32_t client,
                                        uint64_t* out_count) {
  if (report == nullptr || out_count == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  if (client < 1 || client > report->value.redundant_counts.size()) {
    return PTIE_ERROR_INVALID_ARGUMENT;
  }
  *out_count = report->value.redundant_counts[client - 1];
  return PTIE_OK;
}

ptie_status ptie_report_missing_count(const ptie_report* report, uint32_t client,
                                      size_t* out_count) {
  if (report == nullptr || out_count == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  if (client < 1 || client > report->value.missing.size()) return PTIE_ERROR_INVALID_ARGUMENT;
  *out_count = report->value.missing[client - 1].size();
  return PTIE_OK;
}

ptie_status ptie_report_missing_pair(const ptie_report* report, uint32_t client, size_t position,
                                     uint32_t* out_lo, uint32_t* out_hi) {
  if (report == nullptr || out_lo == nullptr || out_hi == nullptr) {
    return PTIE_ERROR_INVALID_ARGUMENT;
  }
  if (client < 1 || client > report->value.missing.size()) return PTIE_ERROR_INVALID_ARGUMENT;
  const auto& gaps = report->value.missing[client - 1];
  if (position >= gaps.size()) return PTIE_ERROR_INVALID_ARGUMENT;
  *out_lo = gaps[position].lo;
  *out_hi = gaps[position].hi;
  return PTIE_OK;
}

ptie_status ptie_verify_instance(uint32_t clients, uint32_t privileged, uint32_t checks,
                                 uint32_t* out_failed_checks) {
  if (out_failed_checks == nullptr) return PTIE_ERROR_INVALID_ARGUMENT;
  const uint32_t known =
      PTIE_CHECK_OPTIMALITY | PTIE_CHECK_FEASIBILITY | PTIE_CHECK_DECODABILITY;
  if (checks == 0 || (checks & ~known) != 0) return PTIE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const ptie::ProblemInstance instance(clients, privileged);
    if ((checks & PTIE_CHECK_OPTIMALITY) && clients > ptie::oracle::kMaxSearchClients) {
      return PTIE_ERROR_UNSUPPORTED;
    }
    if ((checks & PTIE_CHECK_FEASIBILITY) && clients > 10) {
      return PTIE_ERROR_UNSUPPORTED;
    }

    uint32_t failed = 0;
    if (checks & PTIE_CHECK_OPTIMALITY) {
      if (!ptie::oracle::confirms_minimum(instance, ptie::optimal_count(instance))) {
        failed |= PTIE_CHECK_OPTIMALITY;
      }
    }
    if (checks & PTIE_CHECK_FEASIBILITY) {
      if (!feasibility_agrees(instance)) failed |= PTIE_CHECK_FEASIBILITY;
    }
    if (checks & PTIE_CHECK_DECODABILITY) {
      if (!ptie::oracle::schedule_decodable(instance, ptie::build_schedule(instance))) {
        failed |= PTIE_CHECK_DECODABILITY;
      }
    }
    *out_failed_checks = failed;
    return PTIE_OK;
  });
}

}  // extern "C"
