#include "traincount/symalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "traincount/errors.hpp"

namespace traincount {

const char* to_string(Engine e) {
  switch (e) {
    case Engine::naive: return "naive";
    case Engine::dp: return "dp";
    case Engine::oracle: return "oracle";
  }
  return "?";
}

namespace {

// A basis product has at most two distinct elements with coefficients in
// {1, 2}; slots are oversized so the accumulator never has to think.
struct BasisProduct {
  int n = 0;
  BasisElement elem[4];
  int coef[4] = {0, 0, 0, 0};
};

// e_bar(a) * e_bar(b) with * the anticommutator AB + BA, expanded on matrix
// units (e_ij e_kl = [j==k] e_il). The sum is symmetric, so collecting only
// the products that land on row <= col yields the e_bar coefficients
// directly: the e_rc coefficient with r <= c equals the e_bar(r,c) one.
BasisProduct bullet_basis_terms(BasisElement a, BasisElement b) {
  struct Unit {
    Label r, c;
  };
  Unit ua[2], ub[2];
  const int na = a.diagonal() ? 1 : 2;
  const int nb = b.diagonal() ? 1 : 2;
  ua[0] = {a.lo, a.hi};
  ua[1] = {a.hi, a.lo};
  ub[0] = {b.lo, b.hi};
  ub[1] = {b.hi, b.lo};

  BasisProduct out;
  auto acc = [&out](Label r, Label c) {
    if (r > c) return;  // the mirrored term is counted from the transposed product
    const BasisElement e(r, c);
    for (int i = 0; i < out.n; ++i) {
      if (out.elem[i] == e) {
        ++out.coef[i];
        return;
      }
    }
    out.elem[out.n] = e;
    out.coef[out.n] = 1;
    ++out.n;
  };

  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      if (ua[i].c == ub[j].r) acc(ua[i].r, ub[j].c);  // a-unit * b-unit
      if (ub[j].c == ua[i].r) acc(ub[j].r, ua[i].c);  // b-unit * a-unit
    }
  }
  return out;
}

}  // namespace

SymMatrix bullet_basis(BasisElement a, BasisElement b) {
  const BasisProduct p = bullet_basis_terms(a, b);
  SymMatrix out;
  for (int i = 0; i < p.n; ++i) out.add(p.elem[i], p.coef[i]);
  return out;
}

void bullet_acc(SymMatrix& out, const SymMatrix& a, BasisElement b, const BigInt& scale) {
  if (scale == 0) return;
  for (const auto& [ea, ca] : a.entries()) {
    const BasisProduct p = bullet_basis_terms(ea, b);
    for (int i = 0; i < p.n; ++i) {
      BigInt term = ca;
      if (p.coef[i] != 1) term *= p.coef[i];
      if (scale != 1) term *= scale;
      out.add(p.elem[i], term);
    }
  }
}

SymMatrix bullet(const SymMatrix& a, const SymMatrix& b) {
  SymMatrix out;
  for (const auto& [eb, cb] : b.entries()) bullet_acc(out, a, eb, cb);
  return out;
}

SymMatrix left_nested_product(std::span<const BasisElement> seq) {
  if (seq.empty()) throw std::invalid_argument("empty product");
  SymMatrix cur = SymMatrix::unit(seq[0]);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    SymMatrix next;
    bullet_acc(next, cur, seq[i], 1);
    cur = std::move(next);
  }
  return cur;
}

SymMatrix symmetrize_naive(std::span<const BasisElement> pieces, int cap) {
  const std::size_t m = pieces.size();
  if (m == 0) throw std::invalid_argument("empty product");
  if (cap >= 0 && m > static_cast<std::size_t>(cap)) {
    throw cap_error("naive engine cap exceeded, use dp engine (m=" + std::to_string(m) +
                    ", cap=" + std::to_string(cap) + ")");
  }

  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0);

  SymMatrix total;
  do {
    SymMatrix cur = SymMatrix::unit(pieces[order[0]]);
    for (std::size_t r = 1; r < m && !cur.zero(); ++r) {
      SymMatrix next;
      bullet_acc(next, cur, pieces[order[r]], 1);
      cur = std::move(next);
    }
    total += cur;
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

namespace {

std::vector<std::uint32_t> masks_of_popcount(unsigned m, unsigned c) {
  std::vector<std::uint32_t> out;
  if (c == 0 || c > m) return out;
  const std::uint64_t limit = std::uint64_t(1) << m;
  std::uint64_t v = (std::uint64_t(1) << c) - 1;
  while (v < limit) {
    out.push_back(static_cast<std::uint32_t>(v));
    const std::uint64_t t = v | (v - 1);  // Gosper: next value with the same popcount
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

void parallel_over(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    fn(0, n);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, n);
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(fn, lo, hi);
  }
  fn(0, std::min(n, chunk));
  for (std::thread& t : pool) t.join();
}

double binom_d(unsigned n, unsigned k) {
  if (k > n) return 0;
  double r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

std::string human_bytes(double b) {
  static const char* kUnits[] = {"B", "KiB", "MiB", "GiB", "TiB", "PiB"};
  int u = 0;
  while (b >= 1024 && u < 5) {
    b /= 1024;
    ++u;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f %s", b, kUnits[u]);
  return buf;
}

std::string dp_memory_estimate(std::size_t m, std::size_t distinct_labels) {
  // Table skeleton plus the two largest adjacent layers of live matrices,
  // each bounded by the number of possible basis elements in its support.
  const double support = double(distinct_labels) * double(distinct_labels + 1) / 2.0;
  const double per_matrix = sizeof(SymMatrix) + support * 48.0;
  const double live = binom_d(m, m / 2) + binom_d(m, m / 2 > 0 ? m / 2 - 1 : 0);
  const double bytes = std::ldexp(double(sizeof(SymMatrix)), int(m)) + live * per_matrix;
  return human_bytes(bytes);
}

std::size_t count_distinct_labels(std::span<const BasisElement> pieces) {
  std::vector<Label> ls;
  ls.reserve(pieces.size() * 2);
  for (const BasisElement& e : pieces) {
    ls.push_back(e.lo);
    ls.push_back(e.hi);
  }
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  return ls.size();
}

std::vector<SymMatrix> dp_all_subsets(std::span<const BasisElement> pieces, const DpOptions& opts,
                                      bool keep_layers, DpStats* stats) {
  const std::size_t m = pieces.size();
  if (m == 0) throw std::invalid_argument("empty product");
  if ((opts.cap >= 0 && m > static_cast<std::size_t>(opts.cap)) || m > 31) {
    throw cap_error("dp engine cap exceeded (m=" + std::to_string(m) + ", cap=" +
                    std::to_string(std::min<long long>(opts.cap, 31)) + ", estimated memory " +
                    dp_memory_estimate(m, count_distinct_labels(pieces)) + ")");
  }

  std::vector<SymMatrix> table(std::size_t(1) << m);
  for (std::size_t k = 0; k < m; ++k) {
    table[std::size_t(1) << k] = SymMatrix::unit(pieces[k]);
  }

  std::uint64_t peak = m;
  std::vector<std::uint32_t> prev = masks_of_popcount(m, 1);
  for (unsigned c = 2; c <= m; ++c) {
    std::vector<std::uint32_t> masks = masks_of_popcount(m, c);
    peak = std::max<std::uint64_t>(peak, prev.size() + masks.size());
    parallel_over(masks.size(), opts.threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t) {
        const std::uint32_t mask = masks[t];
        SymMatrix acc;
        for (std::uint32_t rest = mask; rest != 0;) {
          const std::uint32_t bit = rest & (~rest + 1u);
          rest ^= bit;
          bullet_acc(acc, table[mask ^ bit], pieces[std::countr_zero(bit)], 1);
        }
        table[mask] = std::move(acc);
      }
    });
    if (!keep_layers) {
      for (const std::uint32_t pm : prev) table[pm] = SymMatrix();
    }
    prev = std::move(masks);
  }

  if (stats) {
    stats->subsets_evaluated = (std::uint64_t(1) << m) - 1;
    stats->peak_live_matrices = peak;
  }
  return table;
}

}  // namespace

SymMatrix symmetrize_dp(std::span<const BasisElement> pieces, const DpOptions& opts,
                        DpStats* stats) {
  std::vector<SymMatrix> table = dp_all_subsets(pieces, opts, /*keep_layers=*/false, stats);
  return std::move(table.back());
}

std::vector<SymMatrix> symmetrize_dp_table(std::span<const BasisElement> pieces,
                                           const DpOptions& opts) {
  return dp_all_subsets(pieces, opts, /*keep_layers=*/true, nullptr);
}

}  // namespace traincount
