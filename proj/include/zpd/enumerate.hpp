#pragma once

// Exhaustive enumeration of vectors in F_p^dim.
//
// Order is fixed: odometer order with the last coordinate changing fastest,
// e.g. over F_2 in dimension 2: (0,0) (0,1) (1,0) (1,1). The projective
// variant visits, in the same order, exactly the vectors whose first nonzero
// coordinate is 1; the zero vector is included only when asked for.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zpd/field.hpp"

namespace zpd {

struct EnumerationOptions {
  bool projective = false;
  bool include_zero = true;
  /// Maximum number of vectors the enumeration may visit.
  std::uint64_t budget = 1'000'000;
};

/// p^dim, saturating at UINT64_MAX.
std::uint64_t vector_count(std::uint32_t p, std::size_t dim);
/// (p^dim - 1) / (p - 1), saturating at UINT64_MAX.
std::uint64_t projective_count(std::uint32_t p, std::size_t dim);

class VectorEnumerator {
 public:
  /// Throws FieldKindError for Q and BudgetExceeded when count() > budget.
  VectorEnumerator(FieldSpec field, std::size_t dim, EnumerationOptions options = {});

  /// Number of vectors this enumerator yields.
  std::uint64_t count() const { return count_; }

  /// Writes the next vector into out; returns false once exhausted.
  bool next(std::vector<std::uint32_t>& out);

 private:
  bool advance_tail();

  std::uint32_t p_;
  std::size_t dim_;
  EnumerationOptions options_;
  std::uint64_t count_ = 0;

  std::vector<std::uint32_t> current_;
  std::size_t lead_ = 0;  // position of the leading 1 (projective mode)
  bool started_ = false;
  bool pending_zero_ = false;
  bool done_ = false;
};

}  // namespace zpd
