#include "traincount/symmatrix.hpp"

#include <algorithm>

namespace traincount {

namespace {

auto lower_bound_entry(std::vector<SymMatrix::Entry>& entries, BasisElement e) {
  return std::lower_bound(entries.begin(), entries.end(), e,
                          [](const SymMatrix::Entry& a, BasisElement b) { return a.first < b; });
}

}  // namespace

const BigInt* SymMatrix::find(BasisElement e) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                             [](const Entry& a, BasisElement b) { return a.first < b; });
  if (it == entries_.end() || it->first != e) return nullptr;
  return &it->second;
}

BigInt SymMatrix::coeff(BasisElement e) const {
  const BigInt* c = find(e);
  return c ? *c : BigInt(0);
}

void SymMatrix::add(BasisElement e, const BigInt& c) {
  if (c == 0) return;
  auto it = lower_bound_entry(entries_, e);
  if (it != entries_.end() && it->first == e) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.emplace(it, e, c);
  }
}

void SymMatrix::add(BasisElement e, long c) {
  if (c == 0) return;
  auto it = lower_bound_entry(entries_, e);
  if (it != entries_.end() && it->first == e) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.emplace(it, e, c);
  }
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& rhs) {
  if (rhs.entries_.empty()) return *this;
  if (entries_.empty()) {
    entries_ = rhs.entries_;
    return *this;
  }
  // Two sorted runs; merge into a fresh vector.
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + rhs.entries_.size());
  auto a = entries_.begin();
  auto b = rhs.entries_.begin();
  while (a != entries_.end() && b != rhs.entries_.end()) {
    if (a->first < b->first) {
      merged.push_back(std::move(*a++));
    } else if (b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt sum = std::move(a->second);
      sum += b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), std::make_move_iterator(a), std::make_move_iterator(entries_.end()));
  merged.insert(merged.end(), b, rhs.entries_.end());
  entries_ = std::move(merged);
  return *this;
}

SymMatrix& SymMatrix::operator*=(const BigInt& k) {
  if (k == 0) {
    entries_.clear();
    return *this;
  }
  for (Entry& e : entries_) e.second *= k;
  return *this;
}

std::string to_string(const SymMatrix& s) {
  if (s.zero()) return "0";
  std::string out;
  for (const auto& [e, c] : s.entries()) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*" + to_string(e);
  }
  return out;
}

}  // namespace traincount
