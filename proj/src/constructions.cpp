#include "zpd/constructions.hpp"

#include "zpd/decision.hpp"

namespace zpd {

template <class F>
Algebra<F> direct_sum(const std::vector<Algebra<F>>& components) {
  if (components.empty()) throw InvalidParameter("direct sum of an empty list");
  const F& field = components.front().field();
  std::vector<std::size_t> dims;
  std::string name = "dsum(";
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (!(components[c].field() == field)) throw FieldMismatch("direct sum components are over different fields");
    dims.push_back(components[c].dim());
    name += (c ? "," : "") + components[c].name();
  }
  name += ")";

  DirectSumLayout layout(dims);
  const std::size_t n = layout.total_dim();
  std::vector<typename F::Element> constants(n * n * n, field.zero());
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& part = components[c];
    const std::size_t off = layout.offsets()[c];
    const std::size_t m = part.dim();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          constants[((off + i) * n + off + j) * n + off + k] = part.constant(i, j, k);
  }
  return Algebra<F>(std::move(name), field, n, std::move(constants), std::move(layout));
}

AnyAlgebra direct_sum(const std::vector<AnyAlgebra>& components) {
  if (components.empty()) throw InvalidParameter("direct sum of an empty list");
  const FieldSpec spec = field_of(components.front());
  for (const auto& c : components) {
    if (!(field_of(c) == spec)) {
      throw FieldMismatch("direct sum components are over different fields (" + spec.label() + " vs " +
                          field_of(c).label() + ")");
    }
  }
  return std::visit(
      [&](const auto& first) -> AnyAlgebra {
        using A = std::decay_t<decltype(first)>;
        std::vector<A> typed;
        for (const auto& c : components) typed.push_back(std::get<A>(c));
        return direct_sum(typed);
      },
      components.front());
}

template <class F>
Algebra<F> component(const Algebra<F>& sum, std::size_t c) {
  if (!sum.layout()) throw MissingLayout("algebra '" + sum.name() + "' has no direct-sum layout");
  const auto& layout = *sum.layout();
  if (c >= layout.component_count()) throw DimensionMismatch("component index out of range");
  const std::size_t off = layout.offsets()[c];
  const std::size_t m = layout.component_dims()[c];
  std::vector<typename F::Element> constants;
  constants.reserve(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) constants.push_back(sum.constant(off + i, off + j, off + k));
  return Algebra<F>(sum.name() + "[" + std::to_string(c) + "]", sum.field(), m, std::move(constants));
}

namespace {

// (+)_i S_i  (+)  (+)_{i != j} A_i (x) A_j, where S_i lives in A_i (x) A_i.
template <class F>
Subspace<F> block_assembly(const DirectSumLayout& layout, const F& field, const std::vector<Subspace<F>>& diagonal) {
  const std::size_t n = layout.total_dim();
  Subspace<F> out(field, n * n);
  for (std::size_t c = 0; c < layout.component_count(); ++c) {
    const std::size_t off = layout.offsets()[c];
    const std::size_t m = layout.component_dims()[c];
    for (const auto& v : diagonal[c].basis()) {
      Vec<F> embedded(n * n, field.zero());
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) embedded[tensor_index(off + r, off + s, n)] = v[tensor_index(r, s, m)];
      out.insert(std::move(embedded));
    }
  }
  for (std::size_t i = 0; i < layout.component_count(); ++i)
    for (std::size_t j = 0; j < layout.component_count(); ++j) {
      if (i == j) continue;
      for (auto coord : layout.block_coordinates(i, j)) out.insert(unit_vector(field, n * n, coord));
    }
  return out;
}

}  // namespace

template <class F>
DecompositionCheck check_kernel_decomposition(const Algebra<F>& sum) {
  if (!sum.layout()) throw MissingLayout("algebra '" + sum.name() + "' has no direct-sum layout");
  auto lhs = ker_mu(sum);
  std::vector<Subspace<F>> parts;
  for (std::size_t c = 0; c < sum.layout()->component_count(); ++c) parts.push_back(ker_mu(component(sum, c)));
  auto rhs = block_assembly(*sum.layout(), sum.field(), parts);
  return {lhs == rhs, lhs.dim(), rhs.dim()};
}

DecompositionCheck check_pure_tensor_decomposition(const ModularAlgebra& sum, std::uint64_t max_enumeration) {
  if (!sum.layout()) throw MissingLayout("algebra '" + sum.name() + "' has no direct-sum layout");
  auto lhs = pure_tensor_span_exhaustive(sum, max_enumeration).span;
  std::vector<Subspace<PrimeField>> parts;
  for (std::size_t c = 0; c < sum.layout()->component_count(); ++c) {
    parts.push_back(pure_tensor_span_exhaustive(component(sum, c), max_enumeration).span);
  }
  auto rhs = block_assembly(*sum.layout(), sum.field(), parts);
  return {lhs == rhs, lhs.dim(), rhs.dim()};
}

template <class F>
WitnessReport witness_check(const Algebra<F>& alg, std::span<const typename F::Element> w,
                            std::uint64_t max_enumeration) {
  const std::size_t n = alg.dim();
  require_same_length(w.size(), n * n, "witness_check");
  const auto& field = alg.field();
  WitnessReport report;
  auto image = mu_matrix(alg).apply(w);
  report.in_kernel = is_zero_vector(field, std::span<const typename F::Element>(image));
  report.nonzero = !is_zero_vector(field, w);
  if constexpr (std::is_same_v<F, PrimeField>) {
    try {
      report.in_pure_span = pure_tensor_span_exhaustive(alg, max_enumeration).span.contains(w);
    } catch (const BudgetExceeded&) {
      report.in_pure_span.reset();
    }
  }
  return report;
}

template Algebra<Rationals> direct_sum<Rationals>(const std::vector<RationalAlgebra>&);
template Algebra<PrimeField> direct_sum<PrimeField>(const std::vector<ModularAlgebra>&);
template Algebra<Rationals> component<Rationals>(const RationalAlgebra&, std::size_t);
template Algebra<PrimeField> component<PrimeField>(const ModularAlgebra&, std::size_t);
template DecompositionCheck check_kernel_decomposition<Rationals>(const RationalAlgebra&);
template DecompositionCheck check_kernel_decomposition<PrimeField>(const ModularAlgebra&);
template WitnessReport witness_check<Rationals>(const RationalAlgebra&, std::span<const mpq_class>, std::uint64_t);
template WitnessReport witness_check<PrimeField>(const ModularAlgebra&, std::span<const std::uint32_t>, std::uint64_t);

}  // namespace zpd
