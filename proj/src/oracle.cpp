#include "oracle.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace ptie::oracle {

namespace {

void require_plan_shape(const TransmissionPlan& plan, const ProblemInstance& instance) {
  if (plan.counts.size() != instance.clients()) {
    throw std::invalid_argument("plan has " + std::to_string(plan.counts.size()) +
                                " counts for " + std::to_string(instance.clients()) + " clients");
  }
}

}  // namespace

bool exhaustive_feasible(const TransmissionPlan& plan, const ProblemInstance& instance) {
  require_plan_shape(plan, instance);
  const std::uint32_t n = instance.clients();
  if (n > kMaxExhaustiveClients) {
    throw std::domain_error("exhaustive feasibility is capped at " +
                            std::to_string(kMaxExhaustiveClients) + " clients, got " +
                            std::to_string(n));
  }

  std::vector<std::uint64_t> others;
  others.reserve(n - 1);
  for (std::uint32_t i = 1; i <= instance.privileged(); ++i) {
    others.clear();
    for (std::uint32_t j = 1; j <= n; ++j) {
      if (j != i) others.push_back(plan.counts[j - 1]);
    }
    const std::uint32_t masks = 1u << (n - 1);
    for (std::uint32_t mask = 1; mask < masks; ++mask) {
      std::uint64_t sum = 0;
      for (std::uint32_t b = 0; b < n - 1; ++b) {
        if (mask & (1u << b)) sum += others[b];
      }
      const std::uint64_t size = std::popcount(mask);
      if (sum < size * (size - 1) / 2) return false;
    }
  }
  return true;
}

SearchResult search_minimum(const ProblemInstance& instance) {
  const std::uint32_t n = instance.clients();
  if (n > kMaxSearchClients) {
    throw std::domain_error("plan-space search is capped at " +
                            std::to_string(kMaxSearchClients) + " clients, got " +
                            std::to_string(n));
  }

  // Sending every pair uncoded is always feasible, so the search terminates
  // at or before that total.
  const std::uint64_t ceiling = instance.pair_count() + n;

  SearchResult result;
  TransmissionPlan candidate;
  candidate.counts.assign(n, 0);

  const auto enumerate = [&](auto&& self, std::uint32_t position, std::uint64_t remaining) -> bool {
    if (position == n - 1) {
      candidate.counts[position] = remaining;
      ++result.plans_examined;
      return exhaustive_feasible(candidate, instance);
    }
    for (std::uint64_t value = 0; value <= remaining; ++value) {
      candidate.counts[position] = value;
      if (self(self, position + 1, remaining - value)) return true;
    }
    return false;
  };

  for (std::uint64_t total = 0; total <= ceiling; ++total) {
    if (enumerate(enumerate, 0, total)) {
      result.minimum_total = total;
      result.witness = candidate;
      return result;
    }
  }
  throw std::logic_error("no feasible plan up to the uncoded ceiling");
}

bool confirms_minimum(const ProblemInstance& instance, std::uint64_t claimed_total) {
  return search_minimum(instance).minimum_total == claimed_total;
}

bool schedule_decodable(const ProblemInstance& instance, const Schedule& schedule) {
  const std::uint64_t universe = instance.pair_count();
  const std::size_t words = (universe + 63) / 64;

  for (std::uint32_t client = 1; client <= instance.privileged(); ++client) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (const PairId& pair : local_set(instance, client)) {
      std::vector<std::uint64_t> row(words, 0);
      const std::uint64_t rank = pair_rank(pair, instance.clients());
      row[rank / 64] |= std::uint64_t{1} << (rank % 64);
      rows.push_back(std::move(row));
    }
    for (const ScheduleEntry& entry : schedule.entries) {
      std::vector<std::uint64_t> row(words, 0);
      for (const PairId& term : entry.vector.terms()) {
        const std::uint64_t rank = pair_rank(term, instance.clients());
        row[rank / 64] ^= std::uint64_t{1} << (rank % 64);
      }
      rows.push_back(std::move(row));
    }

    // Pivot-indexed basis insertion: repeatedly cancel the row's lowest set
    // bit against the basis row owning that pivot, until the row dies or
    // claims a free pivot. The lowest set bit strictly increases each step.
    std::vector<std::vector<std::uint64_t>> basis_by_pivot(universe);
    std::uint64_t rank = 0;
    for (auto& row : rows) {
      while (true) {
        std::uint64_t pivot = universe;
        for (std::size_t w = 0; w < words && pivot == universe; ++w) {
          if (row[w] != 0) pivot = w * 64 + std::countr_zero(row[w]);
        }
        if (pivot == universe) break;  // dependent row
        if (basis_by_pivot[pivot].empty()) {
          basis_by_pivot[pivot] = std::move(row);
          ++rank;
          break;
        }
        for (std::size_t w = 0; w < words; ++w) row[w] ^= basis_by_pivot[pivot][w];
      }
    }
    if (rank != universe) return false;
  }
  return true;
}

}  // namespace ptie::oracle
