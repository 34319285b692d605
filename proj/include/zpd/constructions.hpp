#pragma once

// Direct sums with their block decomposition checks, and a catalog of
// concrete algebras (abelian, matrix, sl/gl, parabolics, Heisenberg,
// triangular, truncated polynomial/tensor/symmetric algebras).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zpd/algebra.hpp"

namespace zpd {

/// Direct sum with componentwise product; the result carries a
/// DirectSumLayout. Throws InvalidParameter on an empty list.
template <class F>
Algebra<F> direct_sum(const std::vector<Algebra<F>>& components);

/// Runtime-field variant; throws FieldMismatch unless all fields agree.
AnyAlgebra direct_sum(const std::vector<AnyAlgebra>& components);

/// Component i of an algebra that carries a layout, read off its diagonal block.
template <class F>
Algebra<F> component(const Algebra<F>& sum, std::size_t i);

struct DecompositionCheck {
  bool holds = false;
  std::size_t lhs_dim = 0;
  std::size_t rhs_dim = 0;
};

/// Ker mu == (+)_i Ker mu_i  (+)  (+)_{i != j} A_i (x) A_j, compared as
/// canonical subspaces. Throws MissingLayout without a layout.
template <class F>
DecompositionCheck check_kernel_decomposition(const Algebra<F>& sum);

/// <T_mu> == (+)_i <T_mu_i>  (+)  (+)_{i != j} A_i (x) A_j, with every pure
/// tensor span computed exhaustively over F_p.
DecompositionCheck check_pure_tensor_decomposition(const ModularAlgebra& sum, std::uint64_t max_enumeration = 50'000);

struct WitnessReport {
  bool in_kernel = false;
  bool nonzero = false;
  /// Over F_p (within budget): whether w lies in the exhaustively computed <T_mu>.
  std::optional<bool> in_pure_span;
};

template <class F>
WitnessReport witness_check(const Algebra<F>& alg, std::span<const typename F::Element> w,
                            std::uint64_t max_enumeration = 50'000);

/// Flags a catalog constructor guarantees; nullopt means "not asserted".
struct ExpectedFlags {
  std::optional<bool> is_lie;
  std::optional<bool> is_associative;
  std::optional<bool> is_commutative;
  std::optional<bool> has_identity;
};

struct CatalogAlgebra {
  AnyAlgebra algebra;
  ExpectedFlags expected;
  /// Caveats about the instance (e.g. p | n for sl(n)).
  std::vector<std::string> notes;
};

struct CatalogEntry {
  std::string name;
  std::string parameters;
  std::string description;
};

/// Names and parameter grammar of every constructor.
const std::vector<CatalogEntry>& catalog_entries();

/// Builds an algebra from an expression such as "sl(3)",
/// "parabolic_sl(3,[1,2])" or "lie_from_associative(matrix(2))".
/// Throws InvalidParameter (unknown name, bad parameters, characteristic
/// constraint) or ParseError (malformed expression).
CatalogAlgebra catalog(std::string_view expression, FieldSpec field);

/// CLI form: name plus comma-separated parameter text, e.g. ("parabolic_sl", "3,[1,2]").
CatalogAlgebra catalog(std::string_view name, std::string_view parameters, FieldSpec field);

/// Basis index of the word (letters 0..d-1) in trunc_tensor(d, deg); words are
/// ordered by length, then lexicographically.
std::size_t trunc_tensor_basis_index(std::size_t d, std::size_t deg, const std::vector<std::size_t>& word);

/// Basis index of the monomial with the given exponents in trunc_sym(d, deg);
/// monomials are ordered by total degree, then by exponent vector descending
/// (v1^2, v1 v2, v2^2, ...).
std::size_t trunc_sym_basis_index(std::size_t d, std::size_t deg, const std::vector<std::size_t>& exponents);

}  // namespace zpd
