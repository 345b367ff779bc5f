#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"
#include "planner.hpp"

namespace ptie {

/// One scheduled transmission: the index-th packet (1-based) of `sender`.
struct ScheduleEntry {
  std::uint32_t sender = 0;
  std::uint32_t index = 0;
  CodingVector vector;

  bool operator==(const ScheduleEntry&) const = default;
};

/// "sender=<i> j=<j> packet=<rendered vector>"
std::string to_line(const ScheduleEntry& entry);

/// Deterministic pairwise-XOR broadcast schedule. Entries are ordered by
/// sender, then per-sender index; per-sender entry counts equal
/// build_plan(instance).
struct Schedule {
  ProblemInstance instance;
  std::vector<ScheduleEntry> entries;

  /// Contiguous slice of this sender's entries.
  std::span<const ScheduleEntry> for_sender(std::uint32_t sender) const;
};

/// Builds the schedule for an instance.
///
/// Privileged sender i pairs its anchor packet x[i,s(i)] with x[i,s(i+j)]
/// for packet j, where s(m) = (m mod k) + 1 walks the privileged ring. A
/// sender past the prefix first sends x[1,i] XOR x[1+j,i] for j < k, then
/// its remaining pairs x[i,i+j-k+1] plain.
///
/// When k is odd, client k stays silent and the ring walk alone never
/// transmits pairs {a,k} for a <= (k-3)/2, which would strand every other
/// privileged client; senders in that range aim their final packet at
/// client k instead. The pair each such swap drops off the air is still
/// covered from its other endpoint.
Schedule build_schedule(const ProblemInstance& instance);

/// XORs the stored payloads of the entry's terms into one packet.
CodedPacket encode(const ScheduleEntry& entry, const PayloadStore& payloads);

/// Per-client GF(2) elimination workspace over the pair universe. The row
/// basis is kept in reduced row-echelon form with the lowest-ranked pair of
/// each row as its pivot; a pair is solved exactly when its singleton row
/// exists. Ingestion order cannot change the final solved set.
class Decoder {
 public:
  /// `local` must hold exactly the payloads of local_set(client), all of one
  /// width. Those pairs start out solved.
  Decoder(const ProblemInstance& instance, std::uint32_t client, const PayloadStore& local);

  /// Reduces the packet against the basis, inserts it if independent, and
  /// restores reduced echelon form. Returns the pairs that became solved
  /// (empty if the packet was redundant).
  std::vector<PairId> ingest(const CodedPacket& packet);

  bool complete() const;
  std::uint32_t client() const { return client_; }
  std::uint32_t payload_width() const { return width_; }
  std::size_t solved_count() const { return solved_.size(); }
  bool is_solved(const PairId& pair) const;
  const Payload& payload_of(const PairId& pair) const;
  const PayloadStore& solved() const { return solved_; }
  std::vector<PairId> missing() const;
  /// Packets ingested so far that added no rank.
  std::uint64_t redundant_count() const { return redundant_; }

 private:
  struct Row {
    std::vector<std::uint64_t> bits;
    Payload value;
    std::uint64_t pivot;
  };

  ProblemInstance instance_;
  std::uint32_t client_;
  std::uint32_t width_;
  std::uint64_t universe_;
  std::size_t words_;
  std::vector<Row> rows_;  // ascending pivot
  PayloadStore solved_;
  std::uint64_t redundant_ = 0;
};

}  // namespace ptie
