#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "traincount/symmatrix.hpp"

namespace traincount {

// Which engine computes the symmetrization S_m. naive sums all m!
// left-nested products, dp runs the subset recursion, oracle (used one
// level up, on graphs) never touches the algebra at all.
enum class Engine { naive, dp, oracle };

const char* to_string(Engine e);

inline constexpr int kDefaultNaiveCap = 9;
inline constexpr int kDefaultDpCap = 22;

// Product of two basis elements under A*B = AB + BA, computed by expanding
// into matrix units e_ij and folding the (symmetric) result back into the
// e_bar basis. Total on every index overlap pattern, including the mixed
// diagonal cases; coefficients land in {1, 2} on at most two elements.
SymMatrix bullet_basis(BasisElement a, BasisElement b);

// Bilinear extension. Commutative, not associative.
SymMatrix bullet(const SymMatrix& a, const SymMatrix& b);

// out += scale * (a * e_bar(b)). The accumulation primitive both engines
// fold with.
void bullet_acc(SymMatrix& out, const SymMatrix& a, BasisElement b, const BigInt& scale);

// ((a1 * a2) * a3) * ... folded left in the given order.
// Throws std::invalid_argument("empty product") on an empty sequence.
SymMatrix left_nested_product(std::span<const BasisElement> seq);

// S_m(pieces) = sum over all m! orderings of the left-nested product.
// Reference engine; refuses m > cap with a cap_error.
SymMatrix symmetrize_naive(std::span<const BasisElement> pieces, int cap = kDefaultNaiveCap);

struct DpOptions {
  int cap = kDefaultDpCap;
  int threads = 1;  // per-layer parallelism; results are bit-identical for any value
};

struct DpStats {
  std::uint64_t subsets_evaluated = 0;
  std::uint64_t peak_live_matrices = 0;
};

// Same value as symmetrize_naive, via the subset recursion
//   T({k})   = e_bar(k)
//   T(S)     = sum over k in S of T(S \ {k}) * e_bar(k)
// evaluated layer by ascending popcount; a layer is dropped as soon as the
// next one is complete, so peak memory is the two largest adjacent layers.
SymMatrix symmetrize_dp(std::span<const BasisElement> pieces, const DpOptions& opts = {},
                        DpStats* stats = nullptr);

// The full table T(S) for every subset mask (index = bitmask over piece
// positions; entry 0 is empty). Keeps all 2^m matrices alive — intended for
// verification at small m, not production counting.
std::vector<SymMatrix> symmetrize_dp_table(std::span<const BasisElement> pieces,
                                           const DpOptions& opts = {});

}  // namespace traincount
