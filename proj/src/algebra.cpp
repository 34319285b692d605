#include "zpd/algebra.hpp"

#include <set>
#include <tuple>

#include "zpd/enumerate.hpp"

namespace zpd {

template <class F>
Algebra<F>::Algebra(std::string name, F field, std::size_t dim, std::vector<Element> constants,
                    std::optional<DirectSumLayout> layout)
    : name_(std::move(name)), field_(std::move(field)), dim_(dim), constants_(std::move(constants)),
      layout_(std::move(layout)) {
  if (dim_ == 0) throw InvalidParameter("algebra dimension must be at least 1");
  require_same_length(constants_.size(), dim_ * dim_ * dim_, "structure constants");
  if (layout_ && layout_->total_dim() != dim_) {
    throw DimensionMismatch("layout covers " + std::to_string(layout_->total_dim()) + " basis vectors, algebra has " +
                            std::to_string(dim_));
  }
}

template <class F>
Algebra<F> Algebra<F>::from_entries(std::string name, F field, std::size_t dim,
                                    const std::vector<StructureEntry>& entries,
                                    std::optional<DirectSumLayout> layout) {
  if (dim == 0) throw InvalidParameter("algebra dimension must be at least 1");
  std::vector<Element> constants(dim * dim * dim, field.zero());
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) {
      throw DimensionMismatch("structure constant index (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                              std::to_string(e.k) + ") out of range for dimension " + std::to_string(dim));
    }
    if (!seen.emplace(e.i, e.j, e.k).second) {
      throw InvalidParameter("structure constant (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                             std::to_string(e.k) + ") given twice");
    }
    constants[(e.i * dim + e.j) * dim + e.k] = field.from_rational(e.value);
  }
  return Algebra(std::move(name), std::move(field), dim, std::move(constants), std::move(layout));
}

template <class F>
std::vector<StructureEntry> Algebra<F>::entries() const {
  std::vector<StructureEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const auto& c = constant(i, j, k);
        if (!field_.is_zero(c)) out.push_back({i, j, k, field_.to_rational(c)});
      }
  return out;
}

template <class F>
Algebra<F> Algebra<F>::with_name(std::string name) const {
  Algebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

template <class F>
Algebra<F> Algebra<F>::with_layout(std::optional<DirectSumLayout> layout) const {
  return Algebra(name_, field_, dim_, constants_, std::move(layout));
}

FieldSpec field_of(const AnyAlgebra& alg) {
  return std::visit([](const auto& a) { return a.field().spec(); }, alg);
}

std::size_t dim_of(const AnyAlgebra& alg) {
  return std::visit([](const auto& a) { return a.dim(); }, alg);
}

template <class F>
Algebra<F> change_field(const RationalAlgebra& alg, const F& field) {
  std::vector<typename F::Element> constants;
  constants.reserve(alg.constants().size());
  for (const auto& c : alg.constants()) constants.push_back(field.from_rational(c));
  return Algebra<F>(alg.name(), field, alg.dim(), std::move(constants), alg.layout());
}

AnyAlgebra change_field(const RationalAlgebra& alg, FieldSpec spec) {
  if (spec.is_prime_field()) return change_field(alg, PrimeField(spec.p));
  return alg;
}

template <class F>
Vec<F> tensor(const F& field, std::span<const typename F::Element> a, std::span<const typename F::Element> b) {
  const std::size_t n = a.size();
  require_same_length(b.size(), n, "tensor");
  Vec<F> t(n * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (field.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!field.is_zero(b[j])) t[tensor_index(i, j, n)] = field.mul(a[i], b[j]);
    }
  }
  return t;
}

template <class F>
Vec<F> multiply(const Algebra<F>& alg, std::span<const typename F::Element> a,
                std::span<const typename F::Element> b) {
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  require_same_length(a.size(), n, "multiply (left factor)");
  require_same_length(b.size(), n, "multiply (right factor)");
  Vec<F> out(n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (field.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (field.is_zero(b[j])) continue;
      auto coeff = field.mul(a[i], b[j]);
      auto prod = alg.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!field.is_zero(prod[k])) field.add_mul(out[k], coeff, prod[k]);
      }
    }
  }
  return out;
}

template <class F>
Matrix<F> mu_matrix(const Algebra<F>& alg) {
  const std::size_t n = alg.dim();
  Matrix<F> m(alg.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, tensor_index(i, j, n)) = alg.constant(i, j, k);
  return m;
}

template <class F>
Subspace<F> ker_mu(const Algebra<F>& alg) {
  auto m = mu_matrix(alg);
  auto ker = kernel_basis(m);
  if (ker.dim() + rank(m) != alg.dim() * alg.dim()) throw std::logic_error("rank-nullity violated for mu");
  return ker;
}

template <class F>
Subspace<F> a_squared(const Algebra<F>& alg) {
  return image(mu_matrix(alg));
}

template <class F>
Matrix<F> left_mult_matrix(const Algebra<F>& alg, std::span<const typename F::Element> a) {
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  require_same_length(a.size(), n, "left_mult_matrix");
  // column j is a * e_j
  Matrix<F> m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (field.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = alg.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!field.is_zero(prod[k])) field.add_mul(m(k, j), a[i], prod[k]);
      }
    }
  }
  return m;
}

namespace {

// (e_i e_j) e_k in coordinates
template <class F>
Vec<F> left_nested(const Algebra<F>& alg, std::size_t i, std::size_t j, std::size_t k) {
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  Vec<F> out(n, field.zero());
  auto ij = alg.basis_product(i, j);
  for (std::size_t m = 0; m < n; ++m) {
    if (field.is_zero(ij[m])) continue;
    auto mk = alg.basis_product(m, k);
    for (std::size_t l = 0; l < n; ++l) {
      if (!field.is_zero(mk[l])) field.add_mul(out[l], ij[m], mk[l]);
    }
  }
  return out;
}

// e_i (e_j e_k) in coordinates
template <class F>
Vec<F> right_nested(const Algebra<F>& alg, std::size_t i, std::size_t j, std::size_t k) {
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  Vec<F> out(n, field.zero());
  auto jk = alg.basis_product(j, k);
  for (std::size_t m = 0; m < n; ++m) {
    if (field.is_zero(jk[m])) continue;
    auto im = alg.basis_product(i, m);
    for (std::size_t l = 0; l < n; ++l) {
      if (!field.is_zero(im[l])) field.add_mul(out[l], jk[m], im[l]);
    }
  }
  return out;
}

template <class F>
std::optional<Vec<F>> find_identity(const Algebra<F>& alg) {
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  // Unknown x = sum_i x_i e_i. Rows: (x e_j)_k = delta_jk, then (e_j x)_k = delta_jk.
  Matrix<F> system(field, 2 * n * n, n);
  Vec<F> rhs(2 * n * n, field.zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t left_row = j * n + k;
      const std::size_t right_row = n * n + j * n + k;
      for (std::size_t i = 0; i < n; ++i) {
        system(left_row, i) = alg.constant(i, j, k);
        system(right_row, i) = alg.constant(j, i, k);
      }
      if (j == k) rhs[left_row] = rhs[right_row] = field.one();
    }
  }
  return solve(system, std::span<const typename F::Element>(rhs));
}

}  // namespace

template <class F>
Classification<F> classify(const Algebra<F>& alg) {
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  Classification<F> out;

  out.is_commutative = true;
  out.is_anticommutative = true;
  bool alternating = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& cij = alg.constant(i, j, k);
        const auto& cji = alg.constant(j, i, k);
        if (cij != cji) out.is_commutative = false;
        if (!field.is_zero(field.add(cij, cji))) out.is_anticommutative = false;
        if (i == j && !field.is_zero(cij)) alternating = false;
      }
    }
  }

  out.is_associative = true;
  out.satisfies_jacobi = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = left_nested(alg, i, j, k);
        if (out.is_associative && lhs != right_nested(alg, i, j, k)) out.is_associative = false;
        if (out.satisfies_jacobi) {
          auto second = left_nested(alg, j, k, i);
          auto third = left_nested(alg, k, i, j);
          for (std::size_t l = 0; l < n; ++l) {
            if (!field.is_zero(field.add(field.add(lhs[l], second[l]), third[l]))) {
              out.satisfies_jacobi = false;
              break;
            }
          }
        }
      }
    }
  }

  out.is_lie = out.is_anticommutative && alternating && out.satisfies_jacobi;
  out.identity = find_identity(alg);
  return out;
}

template <class F>
FactorResult<F> factor_through_mu(const Algebra<F>& alg, const BilinearMap<F>& phi) {
  const std::size_t n = alg.dim();
  require_same_length(phi.matrix.cols(), n * n, "factor_through_mu (phi columns)");
  if (!(phi.matrix.field() == alg.field())) throw FieldMismatch("phi and algebra are over different fields");

  const auto& field = alg.field();
  auto ker = ker_mu(alg);
  for (const auto& t : ker.basis()) {
    auto image = phi.matrix.apply(t);
    if (!is_zero_vector(field, std::span<const typename F::Element>(image))) return Counterexample<F>{t};
  }

  auto mu = mu_matrix(alg);
  auto a2 = a_squared(alg);
  Matrix<F> map(field, phi.codomain_dim(), a2.dim());
  for (std::size_t r = 0; r < a2.dim(); ++r) {
    auto preimage = solve(mu, std::span<const typename F::Element>(a2.basis()[r]));
    if (!preimage) throw std::logic_error("A^2 basis vector has no preimage under mu");
    auto column = phi.matrix.apply(*preimage);
    for (std::size_t row = 0; row < column.size(); ++row) map(row, r) = column[row];
  }
  return FactoredMap<F>{std::move(a2), std::move(map)};
}

bool vanishes_on_zero_products(const ModularAlgebra& alg, const BilinearMap<PrimeField>& phi, std::uint64_t budget) {
  const std::size_t n = alg.dim();
  require_same_length(phi.matrix.cols(), n * n, "vanishes_on_zero_products (phi columns)");
  const auto& field = alg.field();
  VectorEnumerator points(field.spec(), n, {.projective = true, .include_zero = false, .budget = budget});
  std::vector<std::uint32_t> a;
  while (points.next(a)) {
    auto partners = kernel_basis(left_mult_matrix(alg, std::span<const std::uint32_t>(a)));
    for (const auto& b : partners.basis()) {
      auto value = phi.matrix.apply(tensor(field, std::span<const std::uint32_t>(a), std::span<const std::uint32_t>(b)));
      if (!is_zero_vector(field, std::span<const std::uint32_t>(value))) return false;
    }
  }
  return true;
}

#define ZPD_INSTANTIATE_ALGEBRA(F)                                                                             \
  template class Algebra<F>;                                                                                   \
  template Algebra<F> change_field<F>(const RationalAlgebra&, const F&);                                       \
  template Vec<F> tensor<F>(const F&, std::span<const F::Element>, std::span<const F::Element>);               \
  template Vec<F> multiply<F>(const Algebra<F>&, std::span<const F::Element>, std::span<const F::Element>);    \
  template Matrix<F> mu_matrix<F>(const Algebra<F>&);                                                          \
  template Subspace<F> ker_mu<F>(const Algebra<F>&);                                                           \
  template Subspace<F> a_squared<F>(const Algebra<F>&);                                                        \
  template Matrix<F> left_mult_matrix<F>(const Algebra<F>&, std::span<const F::Element>);                      \
  template Classification<F> classify<F>(const Algebra<F>&);                                                   \
  template FactorResult<F> factor_through_mu<F>(const Algebra<F>&, const BilinearMap<F>&);

ZPD_INSTANTIATE_ALGEBRA(Rationals)
ZPD_INSTANTIATE_ALGEBRA(PrimeField)

#undef ZPD_INSTANTIATE_ALGEBRA

}  // namespace zpd
