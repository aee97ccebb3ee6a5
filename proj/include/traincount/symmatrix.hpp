#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "traincount/basis.hpp"
#include "traincount/bigint.hpp"

namespace traincount {

// A finitely supported integer vector over the basis of symmetrized matrix
// units: sum of coeff * e_bar(lo,hi). Stored as a flat sorted vector with
// exact support — a zero coefficient is never kept, so equality of values
// is equality of representations.
class SymMatrix {
public:
  using Entry = std::pair<BasisElement, BigInt>;

  SymMatrix() = default;

  static SymMatrix unit(BasisElement e) {
    SymMatrix s;
    s.entries_.emplace_back(e, 1);
    return s;
  }

  bool zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // nullptr when the element is not in the support.
  const BigInt* find(BasisElement e) const;
  BigInt coeff(BasisElement e) const;

  // Accumulate one term; erases the entry if the sum cancels to zero.
  void add(BasisElement e, const BigInt& c);
  void add(BasisElement e, long c);

  SymMatrix& operator+=(const SymMatrix& rhs);
  SymMatrix& operator*=(const BigInt& k);

  friend SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend SymMatrix operator*(SymMatrix lhs, const BigInt& k) {
    lhs *= k;
    return lhs;
  }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
  std::vector<Entry> entries_;
};

std::string to_string(const SymMatrix& s);

}  // namespace traincount
