// Certificate verification. Deliberately rebuilt from the raw structure
// constants: nothing here calls into the multiplication helpers or the
// decision procedures, only into the exact linear algebra layer.

#include "zpd/decision.hpp"

namespace zpd {

namespace {

template <class F>
Vec<F> product_from_constants(const Algebra<F>& alg, const Vec<F>& a, const Vec<F>& b) {
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  Vec<F> out(n, field.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (field.is_zero(a[i]) || field.is_zero(b[j])) continue;
      for (std::size_t k = 0; k < n; ++k) field.add_mul(out[k], field.mul(a[i], b[j]), alg.constant(i, j, k));
    }
  return out;
}

template <class F>
Vec<F> outer(const F& field, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> t;
  t.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) t.push_back(field.mul(x, y));
  return t;
}

}  // namespace

template <class F>
VerificationReport verify_certificate(const Algebra<F>& alg, const Certificate<F>& cert) {
  const auto& field = alg.field();
  const std::size_t n = alg.dim();
  VerificationReport report;

  Matrix<F> mu(field, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mu(k, i * n + j) = alg.constant(i, j, k);
  report.required_dim = n * n - rref(mu).rank();

  std::vector<Vec<F>> tensors;
  for (std::size_t t = 0; t < cert.pairs.size(); ++t) {
    const auto& [a, b] = cert.pairs[t];
    if (a.size() != n || b.size() != n) {
      report.failing_pair = t;
      report.message = "pair " + std::to_string(t) + " has wrong length (expected " + std::to_string(n) + ")";
      return report;
    }
    auto ab = product_from_constants(alg, a, b);
    if (!is_zero_vector(field, std::span<const typename F::Element>(ab))) {
      report.failing_pair = t;
      report.message = "pair " + std::to_string(t) + " does not multiply to zero";
      return report;
    }
    auto tensor = outer(field, a, b);
    auto image = mu.apply(tensor);
    if (!is_zero_vector(field, std::span<const typename F::Element>(image))) {
      report.failing_pair = t;
      report.message = "tensor of pair " + std::to_string(t) + " is not in Ker mu";
      return report;
    }
    tensors.push_back(std::move(tensor));
  }

  report.span_dim = span(field, tensors, n * n).dim();
  if (report.span_dim != report.required_dim) {
    report.message = "dimension gap: pair tensors span " + std::to_string(report.span_dim) + " < dim Ker mu = " +
                     std::to_string(report.required_dim);
    return report;
  }
  report.ok = true;
  report.message = "certificate verified: " + std::to_string(cert.pairs.size()) + " pairs span Ker mu (dim " +
                   std::to_string(report.required_dim) + ")";
  return report;
}

template VerificationReport verify_certificate<Rationals>(const RationalAlgebra&, const Certificate<Rationals>&);
template VerificationReport verify_certificate<PrimeField>(const ModularAlgebra&, const Certificate<PrimeField>&);

}  // namespace zpd
