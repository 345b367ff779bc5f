#pragma once

#include <cstdint>
#include <vector>

#include "codec.hpp"
#include "core.hpp"

namespace ptie {

/// splitmix64 stream (Vigna's mixer). The payload generator is pinned to
/// this exact algorithm so that identical (seed, instance, width) inputs
/// reproduce identical exchanges in any implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Ground-truth payloads for every pair. Pairs consume ceil(width/64)
/// consecutive words of one splitmix64 stream, in pair-rank order; the top
/// word is masked to the remaining bits.
PayloadStore generate_payloads(const ProblemInstance& instance, std::uint64_t seed,
                               std::uint32_t width_bits);

/// Outcome of one simulated exchange.
struct ExchangeReport {
  ProblemInstance instance;
  std::uint64_t seed = 0;
  std::uint32_t payload_width = 0;
  std::uint64_t total_transmissions = 0;
  bool success = false;
  /// Pairs solved per client (all clients decode; only privileged ones must
  /// finish, the rest are recorded diagnostically).
  std::vector<std::uint64_t> solved_counts;
  /// Rank-neutral packets seen per privileged client.
  std::vector<std::uint64_t> redundant_counts;
  /// Unsolved pairs per privileged client; all empty iff decoding succeeded.
  std::vector<std::vector<PairId>> missing;

  bool operator==(const ExchangeReport&) const = default;
};

/// Builds the schedule, encodes it against generated ground truth, delivers
/// every packet to every other client over the lossless broadcast channel,
/// and decodes at each client. Success means every privileged client solved
/// the whole universe and every recovered payload matches ground truth
/// bit for bit. A schedule that disagrees with the plan is an internal
/// error and throws.
ExchangeReport run_exchange(const ProblemInstance& instance, std::uint64_t seed,
                            std::uint32_t width_bits);

}  // namespace ptie
