#include "zpd/decision.hpp"

#include <numeric>
#include <type_traits>

#include "zpd/enumerate.hpp"

namespace zpd {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::ProvenZPD: return "ProvenZPD";
    case VerdictKind::ProvenNotZPD: return "ProvenNotZPD";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

template <class F>
VerdictKind Verdict<F>::kind() const {
  if (std::holds_alternative<Certificate<F>>(outcome)) return VerdictKind::ProvenZPD;
  if (std::holds_alternative<SaturationStats>(outcome)) return VerdictKind::Unknown;
  return VerdictKind::ProvenNotZPD;
}

template struct Verdict<Rationals>;
template struct Verdict<PrimeField>;

void SaturationBudget::validate() const {
  if (max_samples == 0 || prng_seed == 0 || max_enumeration == 0) {
    throw InvalidParameter("saturation budget fields (samples, seed, enumeration cap) must all be positive");
  }
}

namespace {

// Rescales a rational vector to the primitive integer vector on the same line
// with positive leading coordinate.
Vec<Rationals> primitive_integer(Vec<Rationals> v) {
  mpz_class lcm = 1, gcd = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  for (auto& x : v) {
    x *= lcm;
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num_mpz_t());
  }
  if (gcd == 0) return v;
  auto lead = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return sgn(x) != 0; });
  if (sgn(*lead) < 0) gcd = -gcd;
  for (auto& x : v) x /= gcd;
  return v;
}

template <class F>
VerdictDims base_dims(const Algebra<F>& alg, const Subspace<F>& ker) {
  const std::size_t n = alg.dim();
  return {n, n * n - ker.dim(), ker.dim(), 0};
}

}  // namespace

template <class F>
std::vector<Vec<F>> zero_product_partners(const Algebra<F>& alg, std::span<const typename F::Element> a) {
  auto ker = kernel_basis(left_mult_matrix(alg, a));
  std::vector<Vec<F>> out(ker.basis().begin(), ker.basis().end());
  if constexpr (std::is_same_v<F, Rationals>) {
    for (auto& v : out) v = primitive_integer(std::move(v));
  }
  return out;
}

template <class F>
Subspace<F> pure_kernel_subspace(const Algebra<F>& alg, std::span<const typename F::Element> a) {
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  Subspace<F> out(field, n * n);
  if (is_zero_vector(field, a)) return out;
  for (const auto& b : zero_product_partners(alg, a)) out.insert(tensor(field, a, std::span<const typename F::Element>(b)));
  return out;
}

PureTensorSpan pure_tensor_span_exhaustive(const ModularAlgebra& alg, std::uint64_t max_enumeration) {
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  VectorEnumerator points(field.spec(), n, {.projective = true, .include_zero = false, .budget = max_enumeration});
  const std::size_t target = ker_mu(alg).dim();

  PureTensorSpan out{Subspace<PrimeField>(field, n * n), {}, 0};
  std::vector<std::uint32_t> a;
  while (out.span.dim() < target && points.next(a)) {
    ++out.points_visited;
    for (auto& b : zero_product_partners(alg, std::span<const std::uint32_t>(a))) {
      // Only pairs that enlarge the span are kept, so the kept tensors are
      // linearly independent.
      if (out.span.insert(tensor(field, std::span<const std::uint32_t>(a), std::span<const std::uint32_t>(b)))) {
        out.contributors.pairs.emplace_back(a, std::move(b));
        if (out.span.dim() == target) break;
      }
    }
  }
  return out;
}

Verdict<PrimeField> decide_zpd_exhaustive(const ModularAlgebra& alg, const SaturationBudget& budget) {
  budget.validate();
  auto ker = ker_mu(alg);
  auto result = pure_tensor_span_exhaustive(alg, budget.max_enumeration);

  Verdict<PrimeField> verdict;
  verdict.dims = base_dims(alg, ker);
  verdict.dims.dim_span = result.span.dim();
  verdict.samples = result.points_visited;
  if (!result.span.is_subspace_of(ker)) throw std::logic_error("pure tensor span escaped Ker mu");
  if (result.span.dim() == ker.dim()) {
    verdict.outcome = std::move(result.contributors);
  } else {
    verdict.outcome = ExhaustiveGap{result.span.dim(), ker.dim()};
  }
  return verdict;
}

SampleSchedule::SampleSchedule(std::size_t dim, std::uint64_t seed) : dim_(dim), rng_(seed) {
  if (dim_ < 2) phase_ = dim_ == 0 ? 3 : 0;
}

std::vector<long> SampleSchedule::next() {
  std::vector<long> v(dim_, 0);
  ++drawn_;
  if (phase_ == 0) {
    v[i_] = 1;
    if (++i_ == dim_) {
      i_ = 0;
      j_ = 1;
      phase_ = dim_ >= 2 ? 1 : 3;
    }
    return v;
  }
  if (phase_ == 1 || phase_ == 2) {
    v[i_] = 1;
    v[j_] = phase_ == 1 ? 1 : -1;
    if (++j_ == dim_) {
      ++i_;
      j_ = i_ + 1;
      if (j_ == dim_) {
        i_ = 0;
        j_ = 1;
        ++phase_;
      }
    }
    return v;
  }
  // Entry = (draw mod 5) - 2; mt19937_64 output is fully specified, so the
  // sequence is identical on every platform.
  do {
    for (auto& x : v) x = static_cast<long>(rng_() % 5) - 2;
  } while (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }) && dim_ > 0);
  return v;
}

Verdict<Rationals> saturate_zpd(const RationalAlgebra& alg, const SaturationBudget& budget,
                                const SaturationOptions& options) {
  budget.validate();
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  auto ker = ker_mu(alg);

  Verdict<Rationals> verdict;
  verdict.dims = base_dims(alg, ker);

  SampleSchedule schedule(n, budget.prng_seed);
  Subspace<Rationals> span(field, n * n);
  Certificate<Rationals> cert;

  if (options.assume_no_zero_divisors) {
    while (schedule.drawn() < budget.max_samples) {
      auto raw = schedule.next();
      Vec<Rationals> a(raw.begin(), raw.end());
      auto partners = zero_product_partners(alg, std::span<const mpq_class>(a));
      if (!partners.empty()) {
        std::string a_s, b_s;
        for (std::size_t i = 0; i < n; ++i) {
          a_s += (i ? "," : "") + field.to_string(a[i]);
          b_s += (i ? "," : "") + field.to_string(partners.front()[i]);
        }
        throw FlagMisuse("assume-no-zero-divisors contradicted at sample " + std::to_string(schedule.drawn()) +
                         ": a = (" + a_s + "), b = (" + b_s + ") has ab = 0");
      }
      if (options.on_sample) options.on_sample(span, schedule.drawn());
    }
    verdict.samples = schedule.drawn();
    if (ker.dim() > 0) {
      verdict.outcome = NoZeroDivisorsAssumed{ker.dim()};
    } else {
      verdict.outcome = cert;
    }
    return verdict;
  }

  while (span.dim() < ker.dim() && schedule.drawn() < budget.max_samples) {
    auto raw = schedule.next();
    Vec<Rationals> a(raw.begin(), raw.end());
    for (auto& b : zero_product_partners(alg, std::span<const mpq_class>(a))) {
      if (span.insert(tensor(field, std::span<const mpq_class>(a), std::span<const mpq_class>(b)))) {
        cert.pairs.emplace_back(a, std::move(b));
        if (span.dim() == ker.dim()) break;
      }
    }
    if (options.on_sample) options.on_sample(span, schedule.drawn());
  }

  verdict.samples = schedule.drawn();
  verdict.dims.dim_span = span.dim();
  if (span.dim() == ker.dim()) {
    verdict.outcome = std::move(cert);
  } else {
    verdict.outcome = SaturationStats{static_cast<std::size_t>(schedule.drawn()), span.dim(), ker.dim()};
  }
  return verdict;
}

Matrix<PrimeField> quotient_projection(const Subspace<PrimeField>& u) {
  const auto& field = u.field();
  const std::size_t ambient = u.ambient_dim();
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : u.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix<PrimeField> proj(field, free_cols.size(), ambient);
  for (std::size_t c = 0; c < ambient; ++c) {
    auto residual = u.reduce(unit_vector(field, ambient, c));
    for (std::size_t r = 0; r < free_cols.size(); ++r) proj(r, c) = residual[free_cols[r]];
  }
  return proj;
}

namespace {

Matrix<PrimeField> random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix<PrimeField> m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<std::uint32_t>(rng() % field.modulus());
  return m;
}

}  // namespace

PropertySuiteReport zpd_map_property_suite(const ModularAlgebra& alg, std::size_t trials, std::uint64_t seed,
                                           std::uint64_t max_enumeration) {
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  const std::size_t n2 = n * n;
  std::mt19937_64 rng(seed);
  PropertySuiteReport report;

  auto span = pure_tensor_span_exhaustive(alg, max_enumeration);
  auto ker = ker_mu(alg);
  report.algebra_is_zpd = span.span.dim() == ker.dim();
  auto mu = mu_matrix(alg);

  auto fail = [&](std::string what) { report.failures.push_back(std::move(what)); };

  for (std::size_t t = 0; t < trials; ++t) {
    // phi = psi . mu vanishes on T_mu by construction and always factors.
    {
      const std::size_t m = 1 + rng() % 3;
      auto psi = random_matrix(field, m, n, rng);
      BilinearMap<PrimeField> phi{psi * mu};
      ++report.composed_maps;
      if (!vanishes_on_zero_products(alg, phi, max_enumeration)) fail("psi.mu trial " + std::to_string(t) + " does not vanish on T_mu");
      auto result = factor_through_mu(alg, phi);
      if (auto* fm = std::get_if<FactoredMap<PrimeField>>(&result)) {
        ++report.composed_maps_factored;
        for (std::size_t r = 0; r < fm->a_squared.dim(); ++r) {
          if (fm->map.column(r) != psi.apply(fm->a_squared.basis()[r])) {
            fail("psi.mu trial " + std::to_string(t) + ": factored map differs from psi on A^2");
            break;
          }
        }
      } else {
        fail("psi.mu trial " + std::to_string(t) + " did not factor");
      }
    }
    // Projection by a random superspace U of <T_mu>.
    {
      auto u = span.span;
      const std::size_t extra = rng() % 3;
      for (std::size_t e = 0; e < extra; ++e) {
        auto row = random_matrix(field, 1, n2, rng);
        u.insert(Vec<PrimeField>(row.row(0).begin(), row.row(0).end()));
      }
      BilinearMap<PrimeField> phi{quotient_projection(u)};
      ++report.quotient_maps;
      bool vanishes = vanishes_on_zero_products(alg, phi, max_enumeration);
      if (vanishes) ++report.quotient_maps_vanishing;
      else fail("quotient trial " + std::to_string(t) + " does not vanish on T_mu");
      bool factors = std::holds_alternative<FactoredMap<PrimeField>>(factor_through_mu(alg, phi));
      if (factors) ++report.quotient_maps_factored;
      if (report.algebra_is_zpd && vanishes && !factors) fail("quotient trial " + std::to_string(t) + " vanishes but does not factor");
    }
    // Unconstrained map.
    {
      const std::size_t m = 1 + rng() % 3;
      BilinearMap<PrimeField> phi{random_matrix(field, m, n2, rng)};
      ++report.random_maps;
      bool vanishes = vanishes_on_zero_products(alg, phi, max_enumeration);
      bool factors = std::holds_alternative<FactoredMap<PrimeField>>(factor_through_mu(alg, phi));
      if (vanishes) ++report.random_maps_vanishing;
      if (factors) ++report.random_maps_factored;
      if (factors && !vanishes) fail("random trial " + std::to_string(t) + " factors but does not vanish on T_mu");
      if (report.algebra_is_zpd && vanishes && !factors) fail("random trial " + std::to_string(t) + " vanishes but does not factor");
    }
  }

  BilinearMap<PrimeField> canonical{quotient_projection(span.span)};
  report.canonical_projection_vanishes = vanishes_on_zero_products(alg, canonical, max_enumeration);
  report.canonical_projection_factors = std::holds_alternative<FactoredMap<PrimeField>>(factor_through_mu(alg, canonical));
  if (!report.canonical_projection_vanishes) fail("projection by <T_mu> does not vanish on T_mu");
  if (report.canonical_projection_factors != report.algebra_is_zpd) {
    fail(report.algebra_is_zpd ? "projection by <T_mu> fails to factor for a ZPD algebra"
                               : "projection by <T_mu> factors although <T_mu> != Ker mu");
  }
  return report;
}

template std::vector<Vec<Rationals>> zero_product_partners<Rationals>(const RationalAlgebra&, std::span<const mpq_class>);
template std::vector<Vec<PrimeField>> zero_product_partners<PrimeField>(const ModularAlgebra&,
                                                                        std::span<const std::uint32_t>);
template Subspace<Rationals> pure_kernel_subspace<Rationals>(const RationalAlgebra&, std::span<const mpq_class>);
template Subspace<PrimeField> pure_kernel_subspace<PrimeField>(const ModularAlgebra&, std::span<const std::uint32_t>);

}  // namespace zpd
