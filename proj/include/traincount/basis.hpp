#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace traincount {

// External vertex name / domino number. Labels need not be contiguous;
// anything that has to index an array goes through LabelIndex below.
using Label = std::uint32_t;

// Unordered pair {lo, hi} of labels, stored canonically with lo <= hi.
// This is simultaneously the index of a symmetrized matrix unit and a
// domino face pair; lo == hi is a diagonal unit (a double piece / a loop).
struct BasisElement {
  Label lo = 0;
  Label hi = 0;

  BasisElement() = default;
  BasisElement(Label a, Label b) : lo(std::min(a, b)), hi(std::max(a, b)) {}

  bool diagonal() const { return lo == hi; }
  bool touches(Label v) const { return lo == v || hi == v; }

  // The far endpoint when entering through v. Only meaningful if touches(v);
  // for a loop both ends coincide.
  Label across(Label v) const { return v == lo ? hi : lo; }

  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

std::string to_string(const BasisElement& e);

// Dense 0-based indexing of a finite label set. Keeps sparse external labels
// (say, a double-nine domino set) from inflating anything sized by label.
class LabelIndex {
public:
  LabelIndex() = default;
  explicit LabelIndex(std::span<const Label> labels);

  std::size_t size() const { return labels_.size(); }
  bool contains(Label v) const;
  std::size_t index_of(Label v) const;  // throws std::out_of_range if absent
  Label label_at(std::size_t i) const { return labels_.at(i); }
  std::span<const Label> labels() const { return labels_; }

private:
  std::vector<Label> labels_;  // sorted, unique
};

}  // namespace traincount
