#pragma once

// Exact dense linear algebra over a field type (Rationals or PrimeField):
// matrices, reduced row echelon form, kernels, linear solves and a canonical
// subspace type whose basis is always kept in reduced row echelon form.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zpd/errors.hpp"
#include "zpd/field.hpp"

namespace zpd {

template <class F>
using Vec = std::vector<typename F::Element>;

template <class F>
Vec<F> zero_vector(const F& field, std::size_t n) {
  return Vec<F>(n, field.zero());
}

template <class F>
Vec<F> unit_vector(const F& field, std::size_t n, std::size_t i) {
  Vec<F> v(n, field.zero());
  v.at(i) = field.one();
  return v;
}

template <class F>
bool is_zero_vector(const F& field, std::span<const typename F::Element> v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return field.is_zero(x); });
}

inline void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": length " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

/// Dense row-major matrix over F.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Builds a matrix whose rows are the given vectors (all of length cols).
  static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      require_same_length(rows[r].size(), cols, "Matrix::from_rows");
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  /// Builds a matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(const F& field, const std::vector<Vec<F>>& columns, std::size_t rows) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      require_same_length(columns[c].size(), rows, "Matrix::from_columns");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vec<F> column(std::size_t c) const {
    Vec<F> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  /// this * v
  Vec<F> apply(std::span<const Element> v) const {
    require_same_length(v.size(), cols_, "Matrix::apply");
    Vec<F> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
      auto rw = row(r);
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!field_.is_zero(v[c]) && !field_.is_zero(rw[c])) field_.add_mul(out[r], rw[c], v[c]);
      }
    }
    return out;
  }

  Matrix operator*(const Matrix& other) const {
    require_same_length(cols_, other.rows_, "Matrix::operator*");
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Element& a = (*this)(r, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t c = 0; c < other.cols_; ++c) {
          if (!field_.is_zero(other(k, c))) field_.add_mul(out(r, c), a, other(k, c));
        }
      }
    }
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const Element& x) { return field_.is_zero(x); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <class F>
struct RrefResult {
  Matrix<F> matrix;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. The result is the unique reduced row echelon
/// form of m; zero rows are kept at the bottom.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && field.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(pivot_row).begin());

    auto prow = m.row(pivot_row);
    if (!field.is_one(prow[col])) {
      auto scale = field.inv(prow[col]);
      for (std::size_t c = col; c < m.cols(); ++c) prow[c] = field.mul(prow[c], scale);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      auto rw = m.row(r);
      if (field.is_zero(rw[col])) continue;
      auto factor = rw[col];
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!field.is_zero(prow[c])) field.sub_mul(rw[c], factor, prow[c]);
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank();
}

template <class F>
class Subspace;

/// Solution set {v : m v = 0}.
template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m);

/// Some x with a x = b (free variables set to zero), or nullopt.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& a, std::span<const typename F::Element> b) {
  require_same_length(b.size(), a.rows(), "solve");
  const F& field = a.field();
  Matrix<F> aug(field, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug(r, a.cols()) = b[r];
  }
  auto red = rref(std::move(aug));
  Vec<F> x(a.cols(), field.zero());
  for (std::size_t k = 0; k < red.pivots.size(); ++k) {
    if (red.pivots[k] == a.cols()) return std::nullopt;
    x[red.pivots[k]] = red.matrix(k, a.cols());
  }
  return x;
}

/// A subspace of F^ambient_dim, stored as its reduced-row-echelon basis.
/// Two subspaces are equal iff their stored bases are identical.
template <class F>
class Subspace {
 public:
  using Element = typename F::Element;

  Subspace(F field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

  static Subspace full(const F& field, std::size_t ambient_dim) {
    Subspace s(field, ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      s.basis_.push_back(unit_vector(field, ambient_dim, i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  /// Row space of an already reduced matrix (nonzero rows only).
  static Subspace from_rref(const RrefResult<F>& red) {
    Subspace s(red.matrix.field(), red.matrix.cols());
    for (std::size_t k = 0; k < red.pivots.size(); ++k) {
      auto rw = red.matrix.row(k);
      s.basis_.emplace_back(rw.begin(), rw.end());
      s.pivots_.push_back(red.pivots[k]);
    }
    return s;
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residual of v after eliminating every pivot coordinate; zero iff v lies in the subspace.
  Vec<F> reduce(Vec<F> v) const {
    require_same_length(v.size(), ambient_, "Subspace::reduce");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Element c = v[pivots_[k]];
      if (field_.is_zero(c)) continue;
      const auto& b = basis_[k];
      for (std::size_t col = pivots_[k]; col < ambient_; ++col) {
        if (!field_.is_zero(b[col])) field_.sub_mul(v[col], c, b[col]);
      }
    }
    return v;
  }

  bool contains(std::span<const Element> v) const {
    return is_zero_vector(field_, std::span<const Element>(reduce(Vec<F>(v.begin(), v.end()))));
  }

  /// Coordinates of v with respect to basis(); v must lie in the subspace.
  Vec<F> coordinates(std::span<const Element> v) const {
    require_same_length(v.size(), ambient_, "Subspace::coordinates");
    Vec<F> out;
    out.reserve(pivots_.size());
    for (auto p : pivots_) out.push_back(v[p]);
    return out;
  }

  /// Adds v to the subspace, keeping the basis in reduced form.
  /// Returns true iff the dimension grew.
  bool insert(Vec<F> v) {
    v = reduce(std::move(v));
    std::size_t lead = 0;
    while (lead < ambient_ && field_.is_zero(v[lead])) ++lead;
    if (lead == ambient_) return false;

    if (!field_.is_one(v[lead])) {
      auto scale = field_.inv(v[lead]);
      for (std::size_t c = lead; c < ambient_; ++c) v[c] = field_.mul(v[c], scale);
    }
    for (auto& b : basis_) {
      if (field_.is_zero(b[lead])) continue;
      auto factor = b[lead];
      for (std::size_t c = lead; c < ambient_; ++c) {
        if (!field_.is_zero(v[c])) field_.sub_mul(b[c], factor, v[c]);
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    basis_.insert(basis_.begin() + pos, std::move(v));
    return true;
  }

  bool is_subspace_of(const Subspace& other) const {
    require_same_length(ambient_, other.ambient_, "Subspace::is_subspace_of");
    return std::all_of(basis_.begin(), basis_.end(), [&](const Vec<F>& b) { return other.contains(b); });
  }

  Matrix<F> basis_matrix() const { return Matrix<F>::from_rows(field_, basis_, ambient_); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> basis_;
  std::vector<std::size_t> pivots_;
};

template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
  const F& field = m.field();
  auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;

  // Build one kernel vector per free column, then canonicalize.
  std::vector<Vec<F>> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = field.neg(red.matrix(k, free));
    vectors.push_back(std::move(v));
  }
  Subspace<F> s(field, m.cols());
  for (auto& v : vectors) s.insert(std::move(v));
  return s;
}

/// Canonical subspace spanned by the given vectors.
template <class F>
Subspace<F> span(const F& field, const std::vector<Vec<F>>& vectors, std::size_t ambient_dim) {
  for (const auto& v : vectors) require_same_length(v.size(), ambient_dim, "span");
  if (vectors.empty()) return Subspace<F>(field, ambient_dim);
  return Subspace<F>::from_rref(rref(Matrix<F>::from_rows(field, vectors, ambient_dim)));
}

/// Column space of m as a subspace of F^rows.
template <class F>
Subspace<F> image(const Matrix<F>& m) {
  return Subspace<F>::from_rref(rref(m.transpose()));
}

template <class F>
bool subspace_contains(const Subspace<F>& s, std::span<const typename F::Element> v) {
  return s.contains(v);
}

template <class F>
bool subspace_equal(const Subspace<F>& s, const Subspace<F>& t) {
  require_same_length(s.ambient_dim(), t.ambient_dim(), "subspace_equal");
  return s == t;
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& s, const Subspace<F>& t) {
  require_same_length(s.ambient_dim(), t.ambient_dim(), "subspace_sum");
  Subspace<F> out = s;
  for (const auto& b : t.basis()) out.insert(b);
  return out;
}

}  // namespace zpd
