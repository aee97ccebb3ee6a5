#include "traincount/domino.hpp"

#include <map>
#include <stdexcept>

#include "traincount/errors.hpp"

namespace traincount {

PieceList::PieceList(std::span<const BasisElement> faces) {
  pieces_.reserve(faces.size());
  std::map<BasisElement, std::uint32_t> seen;
  for (const BasisElement& f : faces) {
    pieces_.push_back(Piece{f, seen[f]++});
  }
}

std::vector<BasisElement> PieceList::faces() const {
  std::vector<BasisElement> out;
  out.reserve(pieces_.size());
  for (const Piece& p : pieces_) out.push_back(p.face);
  return out;
}

namespace {

Label step_left(const Piece& p, Orientation o) {
  return o == Orientation::forward ? p.face.lo : p.face.hi;
}

Label step_right(const Piece& p, Orientation o) {
  return o == Orientation::forward ? p.face.hi : p.face.lo;
}

}  // namespace

Label TrainSequence::left_end(const PieceList& pieces) const {
  const TrainStep& s = steps.at(0);
  return step_left(pieces.at(s.piece), s.orient);
}

Label TrainSequence::right_end(const PieceList& pieces) const {
  const TrainStep& s = steps.at(steps.size() - 1);
  return step_right(pieces.at(s.piece), s.orient);
}

std::vector<Label> TrainSequence::vertex_sequence(const PieceList& pieces) const {
  std::vector<Label> out;
  out.reserve(steps.size() + 1);
  if (steps.empty()) return out;
  out.push_back(left_end(pieces));
  for (const TrainStep& s : steps) out.push_back(step_right(pieces.at(s.piece), s.orient));
  return out;
}

bool is_train(const PieceList& pieces, const TrainSequence& seq) {
  for (const TrainStep& s : seq.steps) {
    if (s.piece >= pieces.size()) {
      throw std::out_of_range("train step references piece " + std::to_string(s.piece) +
                              " of a " + std::to_string(pieces.size()) + "-piece list");
    }
  }
  if (seq.steps.size() != pieces.size()) return false;

  std::vector<bool> used(pieces.size(), false);
  bool first = true;
  Label prev_right = 0;
  for (const TrainStep& s : seq.steps) {
    if (used[s.piece]) return false;
    used[s.piece] = true;
    const Piece& p = pieces.at(s.piece);
    if (!first && step_left(p, s.orient) != prev_right) return false;
    prev_right = step_right(p, s.orient);
    first = false;
  }
  return true;
}

CountTable counts_from_raw(const SymMatrix& raw, std::size_t m) {
  if (m == 0) throw std::invalid_argument("empty product");
  const BigInt divisor = pow2(static_cast<unsigned long>(m) - 1);
  CountTable table;
  for (const auto& [e, coeff] : raw.entries()) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), coeff.get_mpz_t(), divisor.get_mpz_t());
    if (r != 0 || q < 0) {
      throw invariant_error("coefficient of " + to_string(e) + " is " + coeff.get_str() +
                            ", not a nonnegative multiple of 2^" + std::to_string(m - 1));
    }
    table.emplace(e, std::move(q));
  }
  return table;
}

CountTable count_trains(const PieceList& pieces, const CountOptions& opts) {
  const std::vector<BasisElement> faces = pieces.faces();
  SymMatrix raw;
  switch (opts.engine) {
    case Engine::naive:
      raw = symmetrize_naive(faces, opts.naive_cap);
      break;
    case Engine::dp:
      raw = symmetrize_dp(faces, DpOptions{opts.dp_cap, opts.threads});
      break;
    case Engine::oracle:
      throw std::invalid_argument("count_trains accepts the naive and dp engines only");
  }
  return counts_from_raw(raw, pieces.size());
}

namespace {

struct TrainSearch {
  const PieceList& pieces;
  std::optional<Label> start;
  std::optional<Label> end;
  std::optional<std::uint64_t> limit;
  std::vector<TrainSequence>& out;

  std::vector<bool> used;
  TrainSequence current;

  bool full() const { return limit && out.size() >= *limit; }

  void dfs(bool first, Label prev_right) {
    if (full()) return;
    if (current.steps.size() == pieces.size()) {
      if (!end || prev_right == *end) out.push_back(current);
      return;
    }
    for (std::uint32_t i = 0; i < pieces.size(); ++i) {
      if (used[i]) continue;
      const Piece& p = pieces.at(i);
      // forward, then reversed; doubles only forward so each physical train
      // shows up once.
      for (int o = 0; o < (p.face.diagonal() ? 1 : 2); ++o) {
        const Orientation orient = static_cast<Orientation>(o);
        const Label left = step_left(p, orient);
        if (first ? (start && left != *start) : (left != prev_right)) continue;
        used[i] = true;
        current.steps.push_back(TrainStep{i, orient});
        dfs(false, step_right(p, orient));
        current.steps.pop_back();
        used[i] = false;
        if (full()) return;
      }
    }
  }
};

}  // namespace

std::vector<TrainSequence> enumerate_trains(const PieceList& pieces, std::optional<Label> start,
                                            std::optional<Label> end,
                                            std::optional<std::uint64_t> limit, int cap) {
  if (cap >= 0 && pieces.size() > static_cast<std::size_t>(cap)) {
    throw cap_error("enumeration cap exceeded (m=" + std::to_string(pieces.size()) +
                    ", cap=" + std::to_string(cap) + ")");
  }
  std::vector<TrainSequence> out;
  if (pieces.empty()) return out;
  TrainSearch search{pieces, start, end, limit, out, std::vector<bool>(pieces.size(), false), {}};
  search.dfs(true, 0);
  return out;
}

BigInt count_placement_orders(unsigned n) {
  if (n == 0) throw std::invalid_argument("a train has at least one piece");
  return pow2(n - 1);
}

}  // namespace traincount
