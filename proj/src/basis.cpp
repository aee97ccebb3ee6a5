#include "traincount/basis.hpp"

#include <stdexcept>

namespace traincount {

std::string to_string(const BasisElement& e) {
  return "{" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}";
}

LabelIndex::LabelIndex(std::span<const Label> labels) : labels_(labels.begin(), labels.end()) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

bool LabelIndex::contains(Label v) const {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

std::size_t LabelIndex::index_of(Label v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) {
    throw std::out_of_range("label " + std::to_string(v) + " not indexed");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

}  // namespace traincount
