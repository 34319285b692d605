#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "zpd/decision.hpp"

using namespace zpd;
using namespace zpd::testing;

namespace {

template <class F>
Algebra<F> dsum(std::initializer_list<Algebra<F>> parts) {
  return direct_sum(std::vector<Algebra<F>>(parts));
}

template <class F>
void check_flags(const Algebra<F>& alg, const ExpectedFlags& e) {
  auto c = classify(alg);
  if (e.is_lie) CHECK(c.is_lie == *e.is_lie);
  if (e.is_associative) CHECK(c.is_associative == *e.is_associative);
  if (e.is_commutative) CHECK(c.is_commutative == *e.is_commutative);
  if (e.has_identity) CHECK(c.identity.has_value() == *e.has_identity);
}

}  // namespace

TEST_CASE("direct sum examples") {
  Rationals q;
  auto two = dsum({catq("abelian(1)"), catq("abelian(1)")});
  CHECK(two.dim() == 2);
  CHECK(two.constants() == catq("abelian(2)").constants());
  REQUIRE(two.layout());
  CHECK(two.layout()->component_dims() == std::vector<std::size_t>{1, 1});

  auto ss = dsum({catq("sl(2)"), catq("sl(2)")});
  CHECK(ss.dim() == 6);
  // (e, 0) * (0, f) = 0
  CHECK(is_zero_vector(q, std::span<const mpq_class>(multiply(ss, unit_vector(q, 6, 0), unit_vector(q, 6, 4)))));

  auto dd = dsum({catq("trunc_poly(2)"), catq("trunc_poly(2)")});
  CHECK(ker_mu(dd).dim() == 12);

  CHECK_THROWS_AS(direct_sum(std::vector<RationalAlgebra>{}), InvalidParameter);
  std::vector<AnyAlgebra> mixed{catq("abelian(1)"), catp("abelian(1)", 3)};
  CHECK_THROWS_AS(direct_sum(mixed), FieldMismatch);
}

TEST_CASE("componentwise product law and component extraction") {
  std::mt19937_64 rng(13);
  Rationals q;
  std::vector<RationalAlgebra> parts{catq("sl(2)"), catq("heisenberg"), catq("trunc_poly(3)")};
  auto sum = direct_sum(parts);
  const auto& layout = *sum.layout();
  for (int t = 0; t < 20; ++t) {
    auto a = random_vector(q, sum.dim(), rng), b = random_vector(q, sum.dim(), rng);
    auto ab = multiply(sum, a, b);
    for (std::size_t c = 0; c < parts.size(); ++c) {
      const std::size_t off = layout.offsets()[c], n = parts[c].dim();
      Vec<Rationals> ac(a.begin() + off, a.begin() + off + n), bc(b.begin() + off, b.begin() + off + n);
      Vec<Rationals> expected = multiply(parts[c], ac, bc);
      CHECK(Vec<Rationals>(ab.begin() + off, ab.begin() + off + n) == expected);
    }
  }
  for (std::size_t c = 0; c < parts.size(); ++c) CHECK(component(sum, c).constants() == parts[c].constants());
  CHECK_THROWS_AS(component(catq("sl(2)"), 0), MissingLayout);
}

TEST_CASE("layout block bookkeeping") {
  DirectSumLayout l({2, 1});
  CHECK(l.total_dim() == 3);
  CHECK(l.offsets() == std::vector<std::size_t>{0, 2});
  CHECK(l.component_of(2) == 1);
  CHECK(l.block_coordinates(0, 1) == std::vector<std::size_t>{2, 5});
  CHECK(l.block_coordinates(1, 1) == std::vector<std::size_t>{8});
  std::vector<int> hits(9, 0);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (auto c : l.block_coordinates(i, j)) ++hits[c];
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(DirectSumLayout({}), InvalidParameter);
  CHECK_THROWS_AS(DirectSumLayout({2, 0}), InvalidParameter);
}

TEST_CASE("kernel decomposition examples") {
  auto ab = check_kernel_decomposition(dsum({catq("abelian(2)"), catq("abelian(1)")}));
  CHECK(ab.holds);
  CHECK(ab.lhs_dim == 9);

  auto ss = check_kernel_decomposition(dsum({catp("sl(2)", 5), catp("sl(2)", 5)}));
  CHECK(ss.holds);
  CHECK(ss.lhs_dim == 30);
  CHECK(ss.rhs_dim == 30);

  CHECK(check_kernel_decomposition(dsum({catq("sl(2)"), catq("abelian(2)")})).holds);
  CHECK_THROWS_AS(check_kernel_decomposition(catq("sl(2)")), MissingLayout);
}

TEST_CASE("pure tensor decomposition examples") {
  CHECK(check_pure_tensor_decomposition(dsum({catp("abelian(1)", 2), catp("abelian(1)", 2)})).holds);
  auto dd = check_pure_tensor_decomposition(dsum({catp("trunc_poly(2)", 3), catp("trunc_poly(2)", 3)}));
  CHECK(dd.holds);
  CHECK(dd.lhs_dim == 10);
  CHECK(dd.rhs_dim == 10);
  CHECK(check_pure_tensor_decomposition(dsum({catp("sl(2)", 5), catp("trunc_poly(2)", 5)})).holds);
  CHECK_THROWS_AS(check_pure_tensor_decomposition(catp("sl(2)", 5)), MissingLayout);
}

TEST_CASE("direct sum theorem on a small matrix over F_3") {
  std::vector<const char*> names{"abelian(1)", "sl(2)", "trunc_poly(2)", "heisenberg"};
  std::vector<bool> zpd;
  for (auto n : names) zpd.push_back(decide_zpd_exhaustive(catp(n, 3)).kind() == VerdictKind::ProvenZPD);
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      auto sum = dsum({catp(names[i], 3), catp(names[j], 3)});
      auto v = decide_zpd_exhaustive(sum);
      CHECK((v.kind() == VerdictKind::ProvenZPD) == (zpd[i] && zpd[j]));
      CHECK(check_kernel_decomposition(sum).holds);
      CHECK(check_pure_tensor_decomposition(sum).holds);
    }
  }
}

TEST_CASE("catalog dimensions and shapes") {
  CHECK(catq("parabolic_sl(3,[1,2])").dim() == 6);
  CHECK(catq("parabolic_sl(3,[2,1])").dim() == 6);
  CHECK(catq("parabolic_sl(3,[1,1,1])").dim() == 5);
  CHECK(catq("sl(3)").dim() == 8);
  CHECK(catq("gl(2)").dim() == 4);
  CHECK(catq("gl(2)").layout()->component_dims() == std::vector<std::size_t>{1, 3});
  CHECK(catq("upper_triangular(3)").dim() == 6);
  CHECK(catq("strictly_upper_triangular(3)").dim() == 3);
  CHECK(catq("trunc_tensor(2,3)").dim() == 15);
  CHECK(catq("trunc_sym(2,2)").dim() == 6);
  CHECK(catq("trunc_poly(4)").dim() == 4);
  CHECK(catq("lie_from_associative(matrix(2))").dim() == 4);
  for (std::size_t n : {2u, 3u}) {
    auto sl = catq("sl(" + std::to_string(n) + ")");
    auto par = catq("parabolic_sl(" + std::to_string(n) + ",[" + std::to_string(n) + "])");
    CHECK(par.dim() == sl.dim());
    CHECK(par.constants() == sl.constants());
  }
  auto heis = catq("heisenberg");
  CHECK(heis.entries().size() == 2);
}

TEST_CASE("catalog flags match expectations") {
  std::vector<std::string> exprs{"abelian(1)", "abelian(3)", "matrix(1)", "matrix(2)", "matrix(3)", "sl(2)", "sl(3)", "sl(4)",
                                 "heisenberg", "upper_triangular(2)", "upper_triangular(3)", "strictly_upper_triangular(3)",
                                 "parabolic_sl(3,[1,2])", "parabolic_sl(3,[2,1])", "parabolic_sl(4,[2,2])",
                                 "parabolic_sl(3,[1,1,1])", "trunc_poly(1)", "trunc_poly(3)", "trunc_tensor(2,2)",
                                 "trunc_tensor(2,3)", "trunc_sym(2,2)", "trunc_sym(3,2)", "unit_field",
                                 "lie_from_associative(matrix(2))", "lie_from_associative(upper_triangular(3))",
                                 "jordan_from_associative(matrix(2))"};
  for (const auto& e : exprs) {
    CAPTURE(e);
    auto built = catalog(e, FieldSpec::rationals());
    check_flags(std::get<RationalAlgebra>(built.algebra), built.expected);
    for (std::uint32_t p : {3u, 5u}) {
      auto bp = catalog(e, FieldSpec::prime(p));
      check_flags(std::get<ModularAlgebra>(bp.algebra), bp.expected);
    }
  }
  auto gl = catalog("gl(3)", FieldSpec::rationals());
  check_flags(std::get<RationalAlgebra>(gl.algebra), gl.expected);
  CHECK(catalog("sl(3)", FieldSpec::prime(3)).notes.size() == 1);
  CHECK(catalog("sl(3)", FieldSpec::prime(5)).notes.empty());
}

TEST_CASE("catalog errors") {
  auto Q = FieldSpec::rationals();
  CHECK_THROWS_AS(catalog("nonsense(2)", Q), InvalidParameter);
  CHECK_THROWS_AS(catalog("sl(0)", Q), InvalidParameter);
  CHECK_THROWS_AS(catalog("parabolic_sl(3,[1,1])", Q), InvalidParameter);
  CHECK_THROWS_AS(catalog("gl(2)", FieldSpec::prime(5)), InvalidParameter);
  CHECK_THROWS_AS(catalog("jordan_from_associative(matrix(2))", FieldSpec::prime(2)), InvalidParameter);
  CHECK_THROWS_AS(catalog("lie_from_associative(sl(2))", Q), InvalidParameter);
  CHECK_THROWS_AS(catalog("sl(2", Q), ParseError);
  CHECK_THROWS_AS(catalog("sl(2)x", Q), ParseError);
  auto cli = catalog("parabolic_sl", "3,[1,2]", Q);
  CHECK(std::get<RationalAlgebra>(cli.algebra).dim() == 6);
  CHECK(catalog_entries().size() == 14);
}

TEST_CASE("truncated algebra indexing") {
  // Words by length then lexicographically: 1, v1, v2, v1v1, v1v2, ...
  CHECK(trunc_tensor_basis_index(2, 3, {}) == 0);
  CHECK(trunc_tensor_basis_index(2, 3, {0}) == 1);
  CHECK(trunc_tensor_basis_index(2, 3, {1}) == 2);
  CHECK(trunc_tensor_basis_index(2, 3, {0, 1}) == 4);
  CHECK(trunc_tensor_basis_index(2, 3, {1, 0, 1}) == 12);
  // Monomials by degree, exponents descending: 1, v1, v2, v1^2, v1v2, v2^2.
  CHECK(trunc_sym_basis_index(2, 2, {0, 0}) == 0);
  CHECK(trunc_sym_basis_index(2, 2, {1, 0}) == 1);
  CHECK(trunc_sym_basis_index(2, 2, {0, 1}) == 2);
  CHECK(trunc_sym_basis_index(2, 2, {1, 1}) == 4);

  Rationals q;
  auto tt = catq("trunc_tensor(2,3)");
  auto v1 = unit_vector(q, 15, trunc_tensor_basis_index(2, 3, {0}));
  auto v2 = unit_vector(q, 15, trunc_tensor_basis_index(2, 3, {1}));
  auto v1v2 = unit_vector(q, 15, trunc_tensor_basis_index(2, 3, {0, 1}));
  CHECK(multiply(tt, v1, v2) == v1v2);
  CHECK(multiply(tt, v1v2, v1) == unit_vector(q, 15, trunc_tensor_basis_index(2, 3, {0, 1, 0})));
  CHECK(is_zero_vector(q, std::span<const mpq_class>(multiply(tt, v1v2, v1v2))));
}

TEST_CASE("kernel witnesses in truncated tensor and symmetric algebras") {
  Rationals q;
  auto tt = catq("trunc_tensor(2,3)");
  const std::size_t n = tt.dim();
  Vec<Rationals> w(n * n, 0);
  const auto v1 = trunc_tensor_basis_index(2, 3, {0});
  const auto v1v2 = trunc_tensor_basis_index(2, 3, {0, 1});
  const auto v2v1 = trunc_tensor_basis_index(2, 3, {1, 0});
  w[tensor_index(v1v2, v1, n)] += 1;
  w[tensor_index(v1, v2v1, n)] -= 1;
  auto r = witness_check(tt, std::span<const mpq_class>(w));
  CHECK(r.in_kernel);
  CHECK(r.nonzero);
  CHECK_FALSE(r.in_pure_span);

  auto ts = catq("trunc_sym(2,2)");
  const std::size_t m = ts.dim();
  Vec<Rationals> u(m * m, 0);
  const auto s1 = trunc_sym_basis_index(2, 2, {1, 0});
  const auto s2 = trunc_sym_basis_index(2, 2, {0, 1});
  u[tensor_index(s1, s2, m)] = 1;
  u[tensor_index(s2, s1, m)] = -1;
  auto rs = witness_check(ts, std::span<const mpq_class>(u));
  CHECK(rs.in_kernel);
  CHECK(rs.nonzero);

  auto zero = witness_check(ts, std::span<const mpq_class>(Vec<Rationals>(m * m, 0)));
  CHECK(zero.in_kernel);
  CHECK_FALSE(zero.nonzero);

  // Over F_3 the symmetric witness is also checked against <T_mu>.
  auto tsp = catp("trunc_sym(2,2)", 3);
  PrimeField f3(3);
  Vec<PrimeField> up(m * m, 0);
  up[tensor_index(s1, s2, m)] = 1;
  up[tensor_index(s2, s1, m)] = 2;
  auto rp = witness_check(tsp, std::span<const std::uint32_t>(up));
  CHECK(rp.in_kernel);
  CHECK(rp.nonzero);
  CHECK(rp.in_pure_span.has_value());
}
