#pragma once

// Finite-dimensional algebras given by structure constants
//
//   e_i e_j = sum_k c[i][j][k] e_k,
//
// the multiplication map mu : A (x) A -> A as an explicit n x n^2 matrix, and
// the factorization of bilinear maps through mu.
//
// Tensor coordinates: the pure tensor e_i (x) e_j has coordinate i*n + j.
// Every matrix acting on A (x) A, every certificate and every file format
// uses this convention.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "zpd/field.hpp"
#include "zpd/layout.hpp"
#include "zpd/linalg.hpp"

namespace zpd {

constexpr std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t n) { return i * n + j; }

/// One nonzero structure constant c[i][j][k] = value, field-independent.
struct StructureEntry {
  std::size_t i = 0, j = 0, k = 0;
  mpq_class value;
};

template <class F>
class Algebra {
 public:
  using Element = typename F::Element;

  /// `constants` holds n^3 values, c[i][j][k] at index (i*n + j)*n + k.
  Algebra(std::string name, F field, std::size_t dim, std::vector<Element> constants,
          std::optional<DirectSumLayout> layout = std::nullopt);

  /// Builds from sparse rational entries, mapping each value into the field.
  /// Entries must be in range; repeated (i,j,k) triples are rejected.
  static Algebra from_entries(std::string name, F field, std::size_t dim, const std::vector<StructureEntry>& entries,
                              std::optional<DirectSumLayout> layout = std::nullopt);

  const std::string& name() const { return name_; }
  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::optional<DirectSumLayout>& layout() const { return layout_; }

  const Element& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  /// Coordinates of e_i e_j.
  std::span<const Element> basis_product(std::size_t i, std::size_t j) const {
    return {constants_.data() + (i * dim_ + j) * dim_, dim_};
  }
  const std::vector<Element>& constants() const { return constants_; }

  /// Nonzero constants in lexicographic (i, j, k) order.
  std::vector<StructureEntry> entries() const;

  Algebra with_name(std::string name) const;
  Algebra with_layout(std::optional<DirectSumLayout> layout) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.name_ == b.name_ && a.field_ == b.field_ && a.dim_ == b.dim_ && a.constants_ == b.constants_ &&
           a.layout_ == b.layout_;
  }

 private:
  std::string name_;
  F field_;
  std::size_t dim_;
  std::vector<Element> constants_;
  std::optional<DirectSumLayout> layout_;
};

using RationalAlgebra = Algebra<Rationals>;
using ModularAlgebra = Algebra<PrimeField>;
using AnyAlgebra = std::variant<RationalAlgebra, ModularAlgebra>;

FieldSpec field_of(const AnyAlgebra& alg);
std::size_t dim_of(const AnyAlgebra& alg);

/// Reduces rational structure constants into `field`.
template <class F>
Algebra<F> change_field(const RationalAlgebra& alg, const F& field);

/// Same algebra over the runtime field `spec`.
AnyAlgebra change_field(const RationalAlgebra& alg, FieldSpec spec);

/// a (x) b in tensor coordinates.
template <class F>
Vec<F> tensor(const F& field, std::span<const typename F::Element> a, std::span<const typename F::Element> b);

/// A bilinear map A x A -> F^m stored as its linear map on A (x) A (m x n^2).
template <class F>
struct BilinearMap {
  Matrix<F> matrix;

  std::size_t codomain_dim() const { return matrix.rows(); }
};

template <class F>
Vec<F> multiply(const Algebra<F>& alg, std::span<const typename F::Element> a, std::span<const typename F::Element> b);

/// n x n^2 matrix of mu; column i*n + j is e_i e_j.
template <class F>
Matrix<F> mu_matrix(const Algebra<F>& alg);

/// Ker mu inside A (x) A.
template <class F>
Subspace<F> ker_mu(const Algebra<F>& alg);

/// A^2 = Im mu inside A.
template <class F>
Subspace<F> a_squared(const Algebra<F>& alg);

/// Matrix of L_a : b -> ab.
template <class F>
Matrix<F> left_mult_matrix(const Algebra<F>& alg, std::span<const typename F::Element> a);

template <class F>
struct Classification {
  bool is_commutative = false;
  bool is_anticommutative = false;
  bool is_associative = false;
  bool satisfies_jacobi = false;
  /// Alternating (e_i e_i = 0, which implies anticommutativity) and Jacobi.
  bool is_lie = false;
  std::optional<Vec<F>> identity;
};

template <class F>
Classification<F> classify(const Algebra<F>& alg);

/// The unique linear map phi~ : A^2 -> F^m with phi~ . mu = phi, expressed in
/// the reduced-row-echelon basis of A^2 (column r is phi~ of basis vector r).
template <class F>
struct FactoredMap {
  Subspace<F> a_squared;
  Matrix<F> map;
};

/// t in Ker mu with phi(t) != 0.
template <class F>
struct Counterexample {
  Vec<F> tensor;
};

template <class F>
using FactorResult = std::variant<FactoredMap<F>, Counterexample<F>>;

/// Factors phi through mu when Ker mu lies in Ker phi, else returns a witness.
template <class F>
FactorResult<F> factor_through_mu(const Algebra<F>& alg, const BilinearMap<F>& phi);

/// True iff phi(a (x) b) = 0 for every pair with ab = 0. Exhaustive over the
/// projective points a of F_p^n; throws BudgetExceeded past `budget` points.
bool vanishes_on_zero_products(const ModularAlgebra& alg, const BilinearMap<PrimeField>& phi,
                               std::uint64_t budget);

}  // namespace zpd
