#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ptie {

/// An exchange instance: `clients()` peers on a lossless broadcast channel,
/// each initially holding the link values it shares with the others. The
/// first `privileged()` clients must end up with every link value in the
/// network; all clients participate in transmitting.
class ProblemInstance {
 public:
  ProblemInstance(std::uint32_t client_count, std::uint32_t privileged_count);

  std::uint32_t clients() const { return clients_; }
  std::uint32_t privileged() const { return privileged_; }

  /// Number of distinct client pairs, i.e. link values in the network.
  std::uint64_t pair_count() const;

  bool is_privileged(std::uint32_t client) const {
    return client >= 1 && client <= privileged_;
  }

  bool operator==(const ProblemInstance&) const = default;

 private:
  std::uint32_t clients_;
  std::uint32_t privileged_;
};

/// Unordered client pair in canonical form (lo < hi, both 1-based).
/// Identifies the link value shared by the two endpoints.
struct PairId {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  PairId() = default;
  /// Canonicalizes the endpoint order; endpoints must be distinct and >= 1.
  PairId(std::uint32_t a, std::uint32_t b);

  bool contains(std::uint32_t client) const { return client == lo || client == hi; }

  auto operator<=>(const PairId&) const = default;
};

/// Rank of `pair` in the lexicographic enumeration of all pairs over
/// `client_count` clients; a bijection onto 0..pair_count-1.
std::uint64_t pair_rank(const PairId& pair, std::uint32_t client_count);

/// Inverse of pair_rank.
PairId pair_at_rank(std::uint64_t rank, std::uint32_t client_count);

/// Every pair over `client_count` clients, in rank order.
std::vector<PairId> all_pairs(std::uint32_t client_count);

/// "x[lo,hi]"
std::string to_string(const PairId& pair);

/// Fixed-width opaque bit vector. XOR is the only arithmetic; operands must
/// share a width. Unused high bits of the top word are always zero.
class Payload {
 public:
  static constexpr std::uint32_t kMaxWidth = 4096;

  /// All-zero payload of the given width (1..kMaxWidth bits).
  explicit Payload(std::uint32_t width_bits);
  /// Payload from raw words; exactly ceil(width/64) words, top word masked.
  Payload(std::uint32_t width_bits, std::span<const std::uint64_t> words);

  std::uint32_t width() const { return width_; }
  std::span<const std::uint64_t> words() const { return words_; }

  Payload& operator^=(const Payload& other);
  friend Payload operator^(Payload lhs, const Payload& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  bool operator==(const Payload&) const = default;

  /// "0x..." with exactly ceil(width/4) hex digits.
  std::string to_hex() const;

 private:
  std::uint32_t width_;
  std::vector<std::uint64_t> words_;
};

/// GF(2) indicator of which link packets one transmission combines. Terms
/// keep the order they were written in (renderings preserve it); as a coding
/// vector the term set is what matters.
class CodingVector {
 public:
  /// Terms must be non-empty and free of duplicates.
  explicit CodingVector(std::vector<PairId> terms);

  static CodingVector single(const PairId& pair);
  static CodingVector pair_xor(const PairId& first, const PairId& second);

  std::span<const PairId> terms() const { return terms_; }
  /// Sorted copy of the term set.
  std::vector<PairId> support() const;
  bool contains(const PairId& pair) const;
  std::size_t size() const { return terms_.size(); }

  bool operator==(const CodingVector&) const = default;

 private:
  std::vector<PairId> terms_;
};

/// "x[a,b]" or "x[a,b]+x[c,d]", in term order.
std::string to_string(const CodingVector& vector);

/// One broadcast transmission: the sender, which packets it combined, and
/// the XOR of their payloads. A sender only combines packets it holds, so
/// every term must have the sender as an endpoint.
struct CodedPacket {
  std::uint32_t sender;
  CodingVector vector;
  Payload payload;

  CodedPacket(std::uint32_t sender, CodingVector vector, Payload payload);
};

/// Ground-truth or per-client payload storage keyed by pair.
using PayloadStore = std::map<PairId, Payload>;

/// The pairs `client` holds initially: every pair with `client` as an
/// endpoint. Sorted, size clients()-1.
std::vector<PairId> local_set(const ProblemInstance& instance, std::uint32_t client);

/// The pairs `client` is missing: the complement of local_set in the
/// universe. Sorted, size (n-1)(n-2)/2. Meaningful as a requirement only for
/// privileged clients; others may query it diagnostically.
std::vector<PairId> wanted_set(const ProblemInstance& instance, std::uint32_t client);

}  // namespace ptie
