#include "core.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptie {

namespace {

void require_client(const ProblemInstance& instance, std::uint32_t client) {
  if (client < 1 || client > instance.clients()) {
    throw std::invalid_argument("client index " + std::to_string(client) +
                                " out of range 1.." + std::to_string(instance.clients()));
  }
}

}  // namespace

ProblemInstance::ProblemInstance(std::uint32_t client_count, std::uint32_t privileged_count)
    : clients_(client_count), privileged_(privileged_count) {
  if (client_count < 2) {
    throw std::invalid_argument("instance needs at least 2 clients, got " +
                                std::to_string(client_count));
  }
  if (privileged_count < 1 || privileged_count > client_count) {
    throw std::invalid_argument("privileged count " + std::to_string(privileged_count) +
                                " out of range 1.." + std::to_string(client_count));
  }
}

std::uint64_t ProblemInstance::pair_count() const {
  return std::uint64_t{clients_} * (clients_ - 1) / 2;
}

PairId::PairId(std::uint32_t a, std::uint32_t b) : lo(std::min(a, b)), hi(std::max(a, b)) {
  if (a == 0 || b == 0) {
    throw std::invalid_argument("client indices are 1-based; got 0");
  }
  if (a == b) {
    throw std::invalid_argument("pair endpoints must differ, got {" + std::to_string(a) + "," +
                                std::to_string(b) + "}");
  }
}

std::uint64_t pair_rank(const PairId& pair, std::uint32_t client_count) {
  if (pair.lo < 1 || pair.hi > client_count) {
    throw std::invalid_argument(to_string(pair) + " not a pair over " +
                                std::to_string(client_count) + " clients");
  }
  // Pairs are enumerated (1,2),(1,3),..,(1,n),(2,3),..; rows for lo' < lo
  // contribute n - lo' entries each.
  const std::uint64_t n = client_count;
  const std::uint64_t lo = pair.lo;
  return (lo - 1) * n - lo * (lo - 1) / 2 + (pair.hi - pair.lo - 1);
}

PairId pair_at_rank(std::uint64_t rank, std::uint32_t client_count) {
  const std::uint64_t total = std::uint64_t{client_count} * (client_count - 1) / 2;
  if (rank >= total) {
    throw std::invalid_argument("pair rank " + std::to_string(rank) + " out of range 0.." +
                                std::to_string(total) + "-1");
  }
  std::uint32_t lo = 1;
  std::uint64_t row = client_count - 1;
  while (rank >= row) {
    rank -= row;
    ++lo;
    --row;
  }
  return PairId(lo, lo + 1 + static_cast<std::uint32_t>(rank));
}

std::vector<PairId> all_pairs(std::uint32_t client_count) {
  std::vector<PairId> pairs;
  pairs.reserve(std::uint64_t{client_count} * (client_count - 1) / 2);
  for (std::uint32_t lo = 1; lo < client_count; ++lo) {
    for (std::uint32_t hi = lo + 1; hi <= client_count; ++hi) {
      pairs.emplace_back(lo, hi);
    }
  }
  return pairs;
}

std::string to_string(const PairId& pair) {
  return "x[" + std::to_string(pair.lo) + "," + std::to_string(pair.hi) + "]";
}

Payload::Payload(std::uint32_t width_bits)
    : width_(width_bits), words_((width_bits + 63) / 64, 0) {
  if (width_bits < 1 || width_bits > kMaxWidth) {
    throw std::invalid_argument("payload width " + std::to_string(width_bits) +
                                " out of range 1.." + std::to_string(kMaxWidth));
  }
}

Payload::Payload(std::uint32_t width_bits, std::span<const std::uint64_t> words)
    : Payload(width_bits) {
  if (words.size() != words_.size()) {
    throw std::invalid_argument("expected " + std::to_string(words_.size()) +
                                " payload words, got " + std::to_string(words.size()));
  }
  std::copy(words.begin(), words.end(), words_.begin());
  if (width_ % 64 != 0) {
    words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
  }
}

Payload& Payload::operator^=(const Payload& other) {
  if (other.width_ != width_) {
    throw std::invalid_argument("payload width mismatch: " + std::to_string(width_) + " vs " +
                                std::to_string(other.width_));
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

std::string Payload::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint32_t digits = (width_ + 3) / 4;
  std::string out(digits, '0');
  for (std::uint32_t d = 0; d < digits; ++d) {
    const std::uint32_t nibble = digits - 1 - d;  // most significant first
    out[d] = kDigits[(words_[nibble / 16] >> ((nibble % 16) * 4)) & 0xF];
  }
  return "0x" + out;
}

CodingVector::CodingVector(std::vector<PairId> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw std::invalid_argument("coding vector must combine at least one packet");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    for (std::size_t j = i + 1; j < terms_.size(); ++j) {
      if (terms_[i] == terms_[j]) {
        throw std::invalid_argument("duplicate term " + to_string(terms_[i]) +
                                    " in coding vector");
      }
    }
  }
}

CodingVector CodingVector::single(const PairId& pair) { return CodingVector({pair}); }

CodingVector CodingVector::pair_xor(const PairId& first, const PairId& second) {
  return CodingVector({first, second});
}

std::vector<PairId> CodingVector::support() const {
  std::vector<PairId> sorted = terms_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

bool CodingVector::contains(const PairId& pair) const {
  return std::find(terms_.begin(), terms_.end(), pair) != terms_.end();
}

std::string to_string(const CodingVector& vector) {
  std::string out;
  for (const PairId& term : vector.terms()) {
    if (!out.empty()) out += "+";
    out += to_string(term);
  }
  return out;
}

CodedPacket::CodedPacket(std::uint32_t sender_index, CodingVector coding_vector,
                         Payload payload_value)
    : sender(sender_index), vector(std::move(coding_vector)), payload(std::move(payload_value)) {
  for (const PairId& term : vector.terms()) {
    if (!term.contains(sender)) {
      throw std::invalid_argument("sender " + std::to_string(sender) + " does not hold " +
                                  to_string(term));
    }
  }
}

std::vector<PairId> local_set(const ProblemInstance& instance, std::uint32_t client) {
  require_client(instance, client);
  std::vector<PairId> pairs;
  pairs.reserve(instance.clients() - 1);
  // Ascending `other` yields canonical pairs already in rank order.
  for (std::uint32_t other = 1; other <= instance.clients(); ++other) {
    if (other != client) pairs.emplace_back(client, other);
  }
  return pairs;
}

std::vector<PairId> wanted_set(const ProblemInstance& instance, std::uint32_t client) {
  require_client(instance, client);
  std::vector<PairId> pairs;
  for (std::uint32_t lo = 1; lo < instance.clients(); ++lo) {
    if (lo == client) continue;
    for (std::uint32_t hi = lo + 1; hi <= instance.clients(); ++hi) {
      if (hi == client) continue;
      pairs.emplace_back(lo, hi);
    }
  }
  return pairs;
}

}  // namespace ptie
