#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"

namespace ptie {

/// Per-client broadcast budget: counts[i] packets for client i+1. Plans are
/// plain count sequences so tests can feed perturbed plans to the
/// feasibility checks directly.
struct TransmissionPlan {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;

  bool operator==(const TransmissionPlan&) const = default;
};

/// Minimum number of broadcasts needed so every privileged client can
/// recover the full pair universe: (n-1)(n-2)/2 + floor((k-1)/2). The floor
/// form equals ceil((k-2)/2) for every k >= 1 and avoids a negative ceiling
/// operand at k=1.
std::uint64_t optimal_count(const ProblemInstance& instance);

/// Broadcasts needed with no coding at all: every pair some privileged
/// client is missing must be sent plainly. n(n-1)/2 for k >= 3, one fewer
/// for k = 2 (the two privileged clients share one pair). Undefined for
/// k = 1 and rejected.
std::uint64_t uncoded_count(const ProblemInstance& instance);

/// The per-client counts that attain optimal_count: floor((k-1)/2) for each
/// privileged client before the last, k/2-1 (k even) or 0 (k odd) for the
/// last privileged client, and n+k-i-1 for each client i past the
/// privileged prefix.
TransmissionPlan build_plan(const ProblemInstance& instance);

/// Feasibility of an arbitrary plan: for every privileged client and every
/// l in 1..n-1, the l smallest counts among the other clients must sum to at
/// least l(l-1)/2. Checking sorted prefixes is equivalent to quantifying
/// over all size-l subsets because the constraint lower-bounds subset sums.
bool is_feasible(const TransmissionPlan& plan, const ProblemInstance& instance);

/// Single CSV row "y1,...,yN".
std::string to_csv(const TransmissionPlan& plan);

}  // namespace ptie
