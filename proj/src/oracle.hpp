#pragma once

#include <cstdint>

#include "codec.hpp"
#include "core.hpp"
#include "planner.hpp"

namespace ptie::oracle {

/// Maximum client count for the exponential subset check.
inline constexpr std::uint32_t kMaxExhaustiveClients = 16;
/// Maximum client count for the plan-space search.
inline constexpr std::uint32_t kMaxSearchClients = 6;

/// Literal evaluation of the feasibility quantifier: for every privileged
/// client and every non-empty subset S of the other clients, the counts over
/// S must sum to at least |S|(|S|-1)/2. Enumerates all 2^(n-1) subsets per
/// privileged client; rejects instances above kMaxExhaustiveClients.
bool exhaustive_feasible(const TransmissionPlan& plan, const ProblemInstance& instance);

struct SearchResult {
  std::uint64_t minimum_total = 0;
  TransmissionPlan witness;
  std::uint64_t plans_examined = 0;
};

/// Finds the cheapest exhaustively-feasible plan by enumerating every
/// composition of every total from zero upward. Because totals are swept in
/// order, the result certifies both achievability at minimum_total and
/// infeasibility of every smaller total. Rejects instances above
/// kMaxSearchClients.
SearchResult search_minimum(const ProblemInstance& instance);

/// True iff search_minimum lands exactly on claimed_total.
bool confirms_minimum(const ProblemInstance& instance, std::uint64_t claimed_total);

/// Payload-free decodability: for every privileged client, the GF(2) matrix
/// of its local identity rows plus all schedule coding vectors must span the
/// whole pair universe. Independent of the incremental decoder.
bool schedule_decodable(const ProblemInstance& instance, const Schedule& schedule);

}  // namespace ptie::oracle
