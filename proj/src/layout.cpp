#include "zpd/layout.hpp"

#include <string>

#include "zpd/errors.hpp"

namespace zpd {

DirectSumLayout::DirectSumLayout(std::vector<std::size_t> component_dims) : dims_(std::move(component_dims)) {
  if (dims_.empty()) throw InvalidParameter("direct sum layout needs at least one component");
  for (auto d : dims_) {
    if (d == 0) throw InvalidParameter("direct sum components must have positive dimension");
    offsets_.push_back(total_);
    total_ += d;
  }
}

std::size_t DirectSumLayout::component_of(std::size_t basis_index) const {
  if (basis_index >= total_) throw DimensionMismatch("basis index " + std::to_string(basis_index) + " out of range");
  std::size_t c = 0;
  while (basis_index >= offsets_[c] + dims_[c]) ++c;
  return c;
}

std::vector<std::size_t> DirectSumLayout::block_coordinates(std::size_t i, std::size_t j) const {
  if (i >= dims_.size() || j >= dims_.size()) throw DimensionMismatch("block index out of range");
  std::vector<std::size_t> coords;
  coords.reserve(dims_[i] * dims_[j]);
  for (std::size_t r = 0; r < dims_[i]; ++r)
    for (std::size_t s = 0; s < dims_[j]; ++s) coords.push_back((offsets_[i] + r) * total_ + offsets_[j] + s);
  return coords;
}

}  // namespace zpd
