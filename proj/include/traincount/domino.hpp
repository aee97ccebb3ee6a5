#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "traincount/symalg.hpp"

namespace traincount {

inline constexpr int kDefaultEnumCap = 10;

// One physical domino piece. copy_id distinguishes repeated faces; within a
// PieceList the ids for equal faces run 0, 1, ... in list order.
struct Piece {
  BasisElement face;
  std::uint32_t copy_id = 0;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// An ordered list of distinguishable pieces (a multiset with identity).
class PieceList {
public:
  PieceList() = default;
  explicit PieceList(std::span<const BasisElement> faces);

  std::size_t size() const { return pieces_.size(); }
  bool empty() const { return pieces_.empty(); }
  const Piece& at(std::size_t i) const { return pieces_.at(i); }
  std::span<const Piece> pieces() const { return pieces_; }
  std::vector<BasisElement> faces() const;

  friend bool operator==(const PieceList&, const PieceList&) = default;

private:
  std::vector<Piece> pieces_;
};

// forward: the piece is laid lo->hi, reversed: hi->lo. For a double the two
// coincide; enumeration emits only forward so each physical train appears
// once, while is_train accepts either.
enum class Orientation : std::uint8_t { forward = 0, reversed = 1 };

struct TrainStep {
  std::uint32_t piece = 0;
  Orientation orient = Orientation::forward;

  friend bool operator==(const TrainStep&, const TrainStep&) = default;
};

// An ordered placement of pieces. Validity (each piece exactly once, right
// face of each step equal to the left face of the next) is checked by
// is_train, not enforced by the type.
struct TrainSequence {
  std::vector<TrainStep> steps;

  Label left_end(const PieceList& pieces) const;
  Label right_end(const PieceList& pieces) const;
  // v0, v1, ..., vm as visited left to right.
  std::vector<Label> vertex_sequence(const PieceList& pieces) const;

  friend bool operator==(const TrainSequence&, const TrainSequence&) = default;
};

// Symmetric table {start, end} -> number of directed trains from start to
// end (equal to the end->start count by reversal). Zero entries are omitted.
using CountTable = std::map<BasisElement, BigInt>;

// True iff steps uses every piece exactly once and consecutive faces chain.
// Throws std::out_of_range on a piece index outside the list.
bool is_train(const PieceList& pieces, const TrainSequence& steps);

struct CountOptions {
  Engine engine = Engine::dp;
  int naive_cap = kDefaultNaiveCap;
  int dp_cap = kDefaultDpCap;
  int threads = 1;
};

// Raw symmetrization coefficients -> train counts: every coefficient must be
// divisible by 2^(m-1) with a nonnegative quotient, anything else throws
// invariant_error (it would mean the engine itself is broken).
CountTable counts_from_raw(const SymMatrix& raw, std::size_t m);

// Number of trains per (start, end) pair, computed as S_m / 2^(m-1) with the
// selected algebra engine. Engine::oracle is not accepted here; use
// eul_counts for the cross-checking path.
CountTable count_trains(const PieceList& pieces, const CountOptions& opts = {});

// All trains, optionally filtered by endpoints, in lexicographic order of
// the per-step (piece index, orientation) tuples. Deterministic; doubles are
// emitted forward-only.
std::vector<TrainSequence> enumerate_trains(const PieceList& pieces,
                                            std::optional<Label> start = std::nullopt,
                                            std::optional<Label> end = std::nullopt,
                                            std::optional<std::uint64_t> limit = std::nullopt,
                                            int cap = kDefaultEnumCap);

// Number of distinct orders in which a fixed train of n pieces can be laid
// down one piece at a time: 2^(n-1). n = 0 is rejected.
BigInt count_placement_orders(unsigned n);

}  // namespace traincount
