#pragma once

#include <cstddef>
#include <vector>

namespace zpd {

/// Block bookkeeping for a direct sum A_1 + ... + A_r: the basis of the sum is
/// the concatenation of the component bases, and the tensor square splits into
/// blocks A_i (x) A_j under the global (i, j) -> i*n + j coordinate convention.
class DirectSumLayout {
 public:
  /// Throws InvalidParameter on an empty list or a zero component dimension.
  explicit DirectSumLayout(std::vector<std::size_t> component_dims);

  const std::vector<std::size_t>& component_dims() const { return dims_; }
  const std::vector<std::size_t>& offsets() const { return offsets_; }
  std::size_t component_count() const { return dims_.size(); }
  std::size_t total_dim() const { return total_; }

  /// Index of the component owning basis vector `basis_index`.
  std::size_t component_of(std::size_t basis_index) const;

  /// Tensor coordinates of the block A_i (x) A_j inside the square of the sum,
  /// in increasing order.
  std::vector<std::size_t> block_coordinates(std::size_t i, std::size_t j) const;

  friend bool operator==(const DirectSumLayout& a, const DirectSumLayout& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

}  // namespace zpd
