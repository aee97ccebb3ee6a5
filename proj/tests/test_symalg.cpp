#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "traincount/errors.hpp"
#include "traincount/symalg.hpp"

#include "corpus.hpp"

using namespace traincount;
using namespace testsupport;

namespace {

SymMatrix unit(Label i, Label j) { return SymMatrix::unit(BasisElement(i, j)); }

SymMatrix expect(std::initializer_list<std::pair<BasisElement, long>> entries) {
  SymMatrix m;
  for (const auto& [e, c] : entries) m.add(e, c);
  return m;
}

}  // namespace

TEST_CASE("basis element canonicalizes and compares") {
  CHECK(BasisElement(2, 1) == BasisElement(1, 2));
  CHECK(BasisElement(1, 2).lo == 1);
  CHECK(BasisElement(1, 2).hi == 2);
  CHECK(BasisElement(3, 3).diagonal());
  CHECK_FALSE(BasisElement(1, 2).diagonal());
  CHECK(BasisElement(1, 2) < BasisElement(1, 3));
  CHECK(BasisElement(1, 3) < BasisElement(2, 2));
  CHECK(to_string(BasisElement(2, 1)) == "{1,2}");
}

TEST_CASE("sparse matrix keeps exact support") {
  SymMatrix m;
  CHECK(m.support_size() == 0);
  m.add(BasisElement(1, 2), 3);
  m.add(BasisElement(1, 1), 1);
  CHECK(m.support_size() == 2);
  m.add(BasisElement(1, 2), -3);  // cancels to zero: entry must vanish
  CHECK(m.support_size() == 1);
  CHECK(m.find(BasisElement(1, 2)) == nullptr);
  CHECK(m.coeff(BasisElement(1, 1)) == 1);

  SymMatrix a = expect({{{1, 2}, 2}, {{3, 3}, 5}});
  SymMatrix b = expect({{{1, 2}, -2}, {{2, 2}, 7}});
  CHECK(a + b == expect({{{2, 2}, 7}, {{3, 3}, 5}}));
  a *= 0;
  CHECK(a == SymMatrix());
}

TEST_CASE("product of basis elements: quoted table rows") {
  CHECK(bullet_basis({1, 2}, {1, 3}) == expect({{{2, 3}, 1}}));
  CHECK(bullet_basis({1, 2}, {1, 2}) == expect({{{1, 1}, 2}, {{2, 2}, 2}}));
  CHECK(bullet_basis({1, 1}, {1, 1}) == expect({{{1, 1}, 2}}));
  CHECK(bullet_basis({1, 2}, {3, 4}) == SymMatrix());
  CHECK(bullet_basis({1, 1}, {1, 2}) == expect({{{1, 2}, 1}}));
}

TEST_CASE("product of basis elements: full dense cross-check on 5 labels") {
  const std::vector<Label> labels = {1, 2, 3, 4, 5};
  std::vector<BasisElement> all;
  for (Label i = 1; i <= 5; ++i)
    for (Label j = i; j <= 5; ++j) all.emplace_back(i, j);
  REQUIRE(all.size() == 15);

  int pairs = 0;
  for (const BasisElement a : all) {
    for (const BasisElement b : all) {
      ++pairs;
      const SymMatrix got = bullet_basis(a, b);
      const auto want = dense_decompose(
          dense_jordan(dense_of(a, labels), dense_of(b, labels)), labels);
      CAPTURE(to_string(a));
      CAPTURE(to_string(b));
      CHECK(matches_dense(got, want));
      CHECK(bullet_basis(b, a) == got);  // commutativity
      for (const auto& [e, c] : got.entries()) {
        CHECK(c >= 0);
        CHECK(c <= 2);
      }
    }
  }
  CHECK(pairs == 225);
}

TEST_CASE("bilinear product") {
  const SymMatrix zero = SymMatrix();
  const SymMatrix x = expect({{{1, 2}, 3}, {{4, 5}, 1}});
  CHECK(bullet(zero, x) == zero);
  CHECK(bullet(x, zero) == zero);

  const SymMatrix a = unit(1, 2) + unit(2, 3);
  CHECK(bullet(a, unit(1, 2)) == expect({{{1, 1}, 2}, {{2, 2}, 2}, {{1, 3}, 1}}));

  // Commutativity on a few sparse random-ish values.
  const SymMatrix p = expect({{{1, 1}, 2}, {{1, 3}, 5}, {{2, 4}, 1}});
  const SymMatrix q = expect({{{1, 2}, 7}, {{3, 4}, 3}, {{4, 4}, 2}});
  CHECK(bullet(p, q) == bullet(q, p));

  // Cross-check the bilinear path against the dense oracle.
  const std::vector<Label> labels = {1, 2, 3, 4};
  const auto densify = [&](const SymMatrix& m) {
    Dense d = dense_zero(4);
    for (const auto& [e, c] : m.entries()) {
      const Dense one = dense_of(e, labels);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) d[i][j] += c.get_si() * one[i][j];
    }
    return d;
  };
  const auto want = dense_decompose(dense_jordan(densify(p), densify(q)), labels);
  CHECK(matches_dense(bullet(p, q), want));
}

TEST_CASE("non-associativity witness") {
  const SymMatrix left = bullet(bullet(unit(1, 2), unit(1, 2)), unit(2, 3));
  const SymMatrix right = bullet(unit(1, 2), bullet(unit(1, 2), unit(2, 3)));
  CHECK(left == expect({{{2, 3}, 2}}));
  CHECK(right == expect({{{2, 3}, 1}}));
  CHECK_FALSE(left == right);
}

TEST_CASE("left-nested product") {
  CHECK(left_nested_product(std::vector<BasisElement>{{1, 2}}) == unit(1, 2));
  CHECK(left_nested_product(std::vector<BasisElement>{{1, 2}, {2, 3}, {1, 3}}) ==
        expect({{{1, 1}, 2}, {{3, 3}, 2}}));
  CHECK(left_nested_product(std::vector<BasisElement>{{1, 2}, {3, 4}}) == SymMatrix());
  CHECK_THROWS_WITH_AS(left_nested_product(std::vector<BasisElement>{}), "empty product",
                       std::invalid_argument);
}

TEST_CASE("symmetrization, small closed forms") {
  const std::vector<BasisElement> one = {{1, 2}};
  CHECK(symmetrize_naive(one) == unit(1, 2));
  CHECK(symmetrize_dp(one) == unit(1, 2));

  const std::vector<BasisElement> two = {{1, 2}, {2, 3}};
  CHECK(symmetrize_naive(two) == expect({{{1, 3}, 2}}));
  CHECK(symmetrize_dp(two) == expect({{{1, 3}, 2}}));

  CHECK_THROWS_AS(symmetrize_naive(std::vector<BasisElement>{}), std::invalid_argument);
  CHECK_THROWS_AS(symmetrize_dp(std::vector<BasisElement>{}), std::invalid_argument);
}

TEST_CASE("symmetrization matches the published fixtures") {
  const std::vector<BasisElement> full3 = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  SymMatrix want;
  want.add({1, 1}, BigInt(32 * 4));
  want.add({2, 2}, BigInt(32 * 4));
  want.add({3, 3}, BigInt(32 * 4));
  CHECK(symmetrize_naive(full3) == want);
  CHECK(symmetrize_dp(full3) == want);

  const std::vector<BasisElement> quad = {{1, 2}, {1, 3}, {2, 3}, {2, 3}, {2, 4}, {3, 4}};
  SymMatrix want2;
  want2.add({1, 1}, BigInt(32 * 12));
  want2.add({2, 2}, BigInt(32 * 24));
  want2.add({3, 3}, BigInt(32 * 24));
  want2.add({4, 4}, BigInt(32 * 12));
  CHECK(symmetrize_dp(quad) == want2);

  const std::vector<BasisElement> eight = {{1, 2}, {1, 3}, {2, 3}, {2, 4},
                                           {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  SymMatrix want3;
  want3.add({4, 5}, BigInt(128 * 44));
  CHECK(symmetrize_dp(eight) == want3);
}

TEST_CASE("engine equivalence on the random corpus") {
  const auto corpus = random_corpus(200);
  for (const auto& pieces : corpus) {
    const SymMatrix a = symmetrize_naive(pieces);
    const SymMatrix b = symmetrize_dp(pieces);
    CAPTURE(pieces.size());
    CHECK(a == b);
  }
}

TEST_CASE("divisibility and nonnegativity of every coefficient") {
  const auto corpus = random_corpus(200);
  for (const auto& pieces : corpus) {
    const SymMatrix s = symmetrize_dp(pieces);
    const BigInt scale = pow2(static_cast<unsigned long>(pieces.size() - 1));
    for (const auto& [e, c] : s.entries()) {
      CHECK(c > 0);  // zero entries are never stored
      CHECK(c % scale == 0);
    }
  }
}

TEST_CASE("permutation invariance of the dp engine") {
  std::vector<BasisElement> pieces = {{1, 2}, {2, 3}, {2, 3}, {3, 3}, {1, 3}};
  const SymMatrix reference = symmetrize_dp(pieces);
  std::mt19937 rng(7);
  for (int round = 0; round < 10; ++round) {
    for (std::size_t i = pieces.size(); i > 1; --i) std::swap(pieces[i - 1], pieces[rng() % i]);
    CHECK(symmetrize_dp(pieces) == reference);
  }
}

TEST_CASE("thread count never changes the result") {
  const std::vector<BasisElement> pieces = {{1, 2}, {1, 3}, {2, 3}, {2, 3},
                                            {2, 4}, {3, 4}, {1, 4}, {1, 1}};
  const SymMatrix one = symmetrize_dp(pieces, {.cap = kDefaultDpCap, .threads = 1});
  const SymMatrix four = symmetrize_dp(pieces, {.cap = kDefaultDpCap, .threads = 4});
  CHECK(one == four);
}

TEST_CASE("caps are enforced with instructive messages") {
  std::vector<BasisElement> pieces(10, BasisElement(1, 2));
  CHECK_THROWS_AS(symmetrize_naive(pieces, 9), cap_error);
  CHECK_THROWS_AS(symmetrize_dp(pieces, {.cap = 9, .threads = 1}), cap_error);
  try {
    symmetrize_naive(pieces, 9);
    FAIL("expected cap_error");
  } catch (const cap_error& e) {
    const std::string what = e.what();
    CHECK(what.find("naive") != std::string::npos);
    CHECK(what.find("dp engine") != std::string::npos);  // points at the fallback
  }
  try {
    symmetrize_dp(pieces, {.cap = 9, .threads = 1});
    FAIL("expected cap_error");
  } catch (const cap_error& e) {
    CHECK(std::string(e.what()).find("memory") != std::string::npos);
  }
}

TEST_CASE("dp statistics are populated") {
  const std::vector<BasisElement> pieces = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
  DpStats stats;
  symmetrize_dp(pieces, {}, &stats);
  // 2^4 - 1 non-empty subsets evaluated.
  CHECK(stats.subsets_evaluated == 15);
  CHECK(stats.peak_live_matrices >= 6);  // the two middle layers coexist
}

TEST_CASE("full subset table indexes by bitmask") {
  const std::vector<BasisElement> pieces = {{1, 2}, {2, 3}, {1, 3}};
  const auto table = symmetrize_dp_table(pieces);
  REQUIRE(table.size() == 8);
  CHECK(table[0] == SymMatrix());
  CHECK(table[0b001] == unit(1, 2));
  CHECK(table[0b010] == unit(2, 3));
  CHECK(table[0b100] == unit(1, 3));
  CHECK(table[0b011] == expect({{{1, 3}, 2}}));  // S_2 of {e12, e23}
  CHECK(table[0b111] == symmetrize_dp(pieces));
}
