#pragma once

// Deciding the zero-product-determined (ZPD) property.
//
// An algebra is ZPD exactly when Ker mu is spanned by the pure tensors a (x) b
// with ab = 0. The span of those tensors is built up slice by slice: for a
// fixed left factor a, the admissible right factors are Ker L_a, so
// a (x) Ker L_a is a subspace of Ker mu. Over F_p every slice can be visited
// (one per projective point a); over Q slices are sampled from a fixed
// schedule and the result is either a certificate or an honest Unknown.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zpd/algebra.hpp"

namespace zpd {

/// Zero-product pairs (a_t, b_t) whose tensors are claimed to span Ker mu.
template <class F>
struct Certificate {
  std::vector<std::pair<Vec<F>, Vec<F>>> pairs;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Exhaustive search over F_p found dim <T_mu> < dim Ker mu.
struct ExhaustiveGap {
  std::size_t dim_span = 0;
  std::size_t dim_ker = 0;
};

/// Under the caller's no-zero-divisor assumption T_mu = 0, yet Ker mu != 0.
struct NoZeroDivisorsAssumed {
  std::size_t dim_ker = 0;
};

/// Sampling budget ran out before the span reached Ker mu.
struct SaturationStats {
  std::size_t samples_tried = 0;
  std::size_t dim_reached = 0;
  std::size_t dim_required = 0;
};

enum class VerdictKind { ProvenZPD, ProvenNotZPD, Unknown };

std::string to_string(VerdictKind kind);

struct VerdictDims {
  std::size_t n = 0;
  std::size_t dim_a2 = 0;
  std::size_t dim_ker = 0;
  std::size_t dim_span = 0;
};

template <class F>
struct Verdict {
  std::variant<Certificate<F>, ExhaustiveGap, NoZeroDivisorsAssumed, SaturationStats> outcome;
  VerdictDims dims;
  /// Projective points visited (F_p) or schedule samples drawn (Q).
  std::uint64_t samples = 0;

  VerdictKind kind() const;
  const Certificate<F>* certificate() const { return std::get_if<Certificate<F>>(&outcome); }
};

struct SaturationBudget {
  std::uint64_t max_samples = 5000;
  std::uint64_t prng_seed = 1;
  /// Cap on projective points visited by exhaustive search.
  std::uint64_t max_enumeration = 50'000;

  /// Throws InvalidParameter unless every field is positive.
  void validate() const;
};

/// Basis of Ker L_a, i.e. all b with ab = 0.
template <class F>
std::vector<Vec<F>> zero_product_partners(const Algebra<F>& alg, std::span<const typename F::Element> a);

/// span{a (x) b : ab = 0} inside A (x) A. Zero when a = 0.
template <class F>
Subspace<F> pure_kernel_subspace(const Algebra<F>& alg, std::span<const typename F::Element> a);

/// <T_mu> over F_p together with the pairs that enlarged it.
struct PureTensorSpan {
  Subspace<PrimeField> span;
  Certificate<PrimeField> contributors;
  std::uint64_t points_visited = 0;
};

/// Joins pure_kernel_subspace(a) over the projective points of F_p^n in
/// enumeration order. Stops early once the span reaches Ker mu (it can only
/// grow, and never leaves Ker mu), so the result is always all of <T_mu>.
PureTensorSpan pure_tensor_span_exhaustive(const ModularAlgebra& alg, std::uint64_t max_enumeration);

/// Exact decision over F_p. Throws BudgetExceeded when (p^n-1)/(p-1) exceeds
/// budget.max_enumeration.
Verdict<PrimeField> decide_zpd_exhaustive(const ModularAlgebra& alg, const SaturationBudget& budget = {});

/// Deterministic sample sequence for saturation over Q: basis vectors
/// e_0..e_{n-1}; sums e_i + e_j (i < j, lexicographic); differences e_i - e_j
/// (same order); then pseudorandom vectors with entries in {-2, ..., 2} drawn
/// from mt19937_64(seed), skipping the zero vector.
class SampleSchedule {
 public:
  SampleSchedule(std::size_t dim, std::uint64_t seed);

  std::vector<long> next();
  std::uint64_t drawn() const { return drawn_; }

 private:
  std::size_t dim_;
  std::uint64_t drawn_ = 0;
  std::size_t phase_ = 0;
  std::size_t i_ = 0, j_ = 1;
  std::mt19937_64 rng_;
};

struct SaturationOptions {
  /// Conclude non-ZPD from Ker mu != 0 assuming A has no zero divisors. Any
  /// sampled zero-divisor pair makes saturate_zpd throw FlagMisuse.
  bool assume_no_zero_divisors = false;
  /// Called after every sample with the current span and sample count.
  std::function<void(const Subspace<Rationals>&, std::uint64_t)> on_sample;
};

/// Semi-decision over Q: ProvenZPD with a certificate once the sampled span
/// reaches Ker mu, Unknown when budget.max_samples runs out.
Verdict<Rationals> saturate_zpd(const RationalAlgebra& alg, const SaturationBudget& budget = {},
                                const SaturationOptions& options = {});

struct VerificationReport {
  bool ok = false;
  std::optional<std::size_t> failing_pair;
  std::size_t span_dim = 0;
  std::size_t required_dim = 0;
  std::string message;
};

/// Re-checks a certificate from the structure constants alone: every pair
/// multiplies to zero, and the pair tensors lie in Ker mu and span a space of
/// dimension n^2 - dim A^2. Failures are reported, never thrown.
template <class F>
VerificationReport verify_certificate(const Algebra<F>& alg, const Certificate<F>& cert);

struct PropertySuiteReport {
  bool algebra_is_zpd = false;
  std::size_t composed_maps = 0;           // psi . mu
  std::size_t composed_maps_factored = 0;
  std::size_t quotient_maps = 0;           // projections by supersets of <T_mu>
  std::size_t quotient_maps_vanishing = 0;
  std::size_t quotient_maps_factored = 0;
  std::size_t random_maps = 0;
  std::size_t random_maps_vanishing = 0;
  std::size_t random_maps_factored = 0;
  bool canonical_projection_vanishes = false;
  bool canonical_projection_factors = false;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Matrix of the quotient map A (x) A -> (A (x) A) / U, in coordinates given
/// by the non-pivot columns of U's reduced basis.
Matrix<PrimeField> quotient_projection(const Subspace<PrimeField>& u);

/// Checks the factorization criterion on generated maps phi over F_p: maps
/// built to vanish on T_mu (psi . mu, quotient projections) and unconstrained
/// random maps. For ZPD algebras every vanishing map must factor through mu;
/// otherwise the projection by <T_mu> must vanish on T_mu and not factor.
PropertySuiteReport zpd_map_property_suite(const ModularAlgebra& alg, std::size_t trials, std::uint64_t seed,
                                           std::uint64_t max_enumeration = 50'000);

}  // namespace zpd
