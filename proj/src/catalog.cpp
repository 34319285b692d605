#include <cctype>
#include <algorithm>
#include <map>
#include <variant>

#include "zpd/constructions.hpp"

namespace zpd {

namespace {

// ---------------------------------------------------------------------------
// Expression grammar:
//   expr := ident [ '(' [ arg { ',' arg } ] ')' ]
//   arg  := integer | '[' integer { ',' integer } ']' | expr

struct Expr;
using Arg = std::variant<long, std::vector<long>, Expr>;

struct Expr {
  std::string name;
  std::vector<Arg> args;
};

std::string canonical(const Expr& e);

std::string canonical(const Arg& a) {
  if (const auto* v = std::get_if<long>(&a)) return std::to_string(*v);
  if (const auto* list = std::get_if<std::vector<long>>(&a)) {
    std::string s = "[";
    for (std::size_t i = 0; i < list->size(); ++i) s += (i ? "," : "") + std::to_string((*list)[i]);
    return s + "]";
  }
  return canonical(std::get<Expr>(a));
}

std::string canonical(const Expr& e) {
  if (e.args.empty()) return e.name;
  std::string s = e.name + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? "," : "") + canonical(e.args[i]);
  return s + ")";
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("catalog expression '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected integer");
    auto digits = std::string(text_.substr(start, pos_ - start));
    if (digits.size() > 9) fail("integer too large");
    return std::stol(digits);
  }

  Expr expr() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (pos_ == start || std::isdigit(static_cast<unsigned char>(text_[start]))) fail("expected constructor name");
    Expr e{std::string(text_.substr(start, pos_ - start)), {}};
    if (peek('(')) {
      ++pos_;
      if (!peek(')')) {
        e.args.push_back(arg());
        while (peek(',')) {
          ++pos_;
          e.args.push_back(arg());
        }
      }
      expect(')');
    }
    return e;
  }

  Arg arg() {
    skip_ws();
    if (peek('[')) {
      ++pos_;
      std::vector<long> list{integer()};
      while (peek(',')) {
        ++pos_;
        list.push_back(integer());
      }
      expect(']');
      return list;
    }
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      return integer();
    }
    return expr();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Rational builders. Every constructor produces integer or rational structure
// constants; reduction into F_p happens at the end.

const Rationals kQ{};

struct Built {
  RationalAlgebra algebra;
  ExpectedFlags expected;
  std::vector<std::string> notes;
};

using RMatrix = Matrix<Rationals>;

RMatrix unit_matrix(std::size_t n, std::size_t a, std::size_t b) {
  RMatrix m(kQ, n, n);
  m(a, b) = 1;
  return m;
}

Vec<Rationals> flatten(const RMatrix& m) {
  Vec<Rationals> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

enum class Product { Associative, Bracket };

// Structure constants of a space of n x n matrices closed under the matrix
// product or the commutator, in the given basis.
RationalAlgebra from_matrix_basis(std::string name, const std::vector<RMatrix>& basis, Product product) {
  const std::size_t d = basis.size();
  const std::size_t n = basis.front().rows();
  std::vector<Vec<Rationals>> columns;
  for (const auto& b : basis) columns.push_back(flatten(b));
  auto coords = RMatrix::from_columns(kQ, columns, n * n);

  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      RMatrix prod = basis[i] * basis[j];
      if (product == Product::Bracket) {
        RMatrix rev = basis[j] * basis[i];
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) prod(r, c) -= rev(r, c);
      }
      if (prod.is_zero()) continue;
      auto flat = flatten(prod);
      auto x = solve(coords, std::span<const mpq_class>(flat));
      if (!x) throw std::logic_error(name + ": basis is not closed under the product");
      for (std::size_t k = 0; k < d; ++k)
        if (sgn((*x)[k]) != 0) entries.push_back({i, j, k, (*x)[k]});
    }
  }
  return RationalAlgebra::from_entries(std::move(name), kQ, d, entries);
}

// Traceless diagonal part: H_k = E_kk - E_{k+1,k+1}.
void append_cartan(std::vector<RMatrix>& basis, std::size_t n) {
  for (std::size_t k = 0; k + 1 < n; ++k) {
    RMatrix h(kQ, n, n);
    h(k, k) = 1;
    h(k + 1, k + 1) = -1;
    basis.push_back(std::move(h));
  }
}

std::size_t positive(long v, long min, const std::string& what) {
  if (v < min) throw InvalidParameter(what + " must be at least " + std::to_string(min) + ", got " + std::to_string(v));
  if (v > 64) throw InvalidParameter(what + " = " + std::to_string(v) + " is beyond desk scale");
  return static_cast<std::size_t>(v);
}

void require_args(const Expr& e, std::size_t count, const std::string& signature) {
  if (e.args.size() != count) {
    throw InvalidParameter(e.name + " expects " + signature + ", got " + std::to_string(e.args.size()) + " argument(s)");
  }
}

long int_arg(const Expr& e, std::size_t i) {
  const auto* v = std::get_if<long>(&e.args[i]);
  if (!v) throw InvalidParameter(e.name + ": argument " + std::to_string(i + 1) + " must be an integer");
  return *v;
}

Built build(const Expr& e, FieldSpec field);

RationalAlgebra abelian(std::size_t n) {
  return RationalAlgebra::from_entries("abelian(" + std::to_string(n) + ")", kQ, n, {});
}

RationalAlgebra matrix_algebra(std::size_t n) {
  std::vector<RMatrix> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) basis.push_back(unit_matrix(n, a, b));
  return from_matrix_basis("matrix(" + std::to_string(n) + ")", basis, Product::Associative);
}

RationalAlgebra sl_algebra(std::size_t n, const std::vector<std::size_t>& blocks, std::string name) {
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) block_of.insert(block_of.end(), blocks[b], b);
  std::vector<RMatrix> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && block_of[a] <= block_of[b]) basis.push_back(unit_matrix(n, a, b));
  append_cartan(basis, n);
  return from_matrix_basis(std::move(name), basis, Product::Bracket);
}

RationalAlgebra triangular(std::size_t n, bool strict) {
  std::vector<RMatrix> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = strict ? a + 1 : a; b < n; ++b) basis.push_back(unit_matrix(n, a, b));
  std::string name = (strict ? "strictly_upper_triangular(" : "upper_triangular(") + std::to_string(n) + ")";
  return from_matrix_basis(std::move(name), basis, Product::Associative);
}

RationalAlgebra trunc_poly(std::size_t m) {
  std::vector<StructureEntry> entries;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; a + b < m; ++b) entries.push_back({a, b, a + b, 1});
  return RationalAlgebra::from_entries("trunc_poly(" + std::to_string(m) + ")", kQ, m, entries);
}

std::vector<std::vector<std::size_t>> words_up_to(std::size_t d, std::size_t deg) {
  std::vector<std::vector<std::size_t>> words{{}};
  std::vector<std::vector<std::size_t>> layer{{}};
  for (std::size_t len = 1; len <= deg; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : layer)
      for (std::size_t letter = 0; letter < d; ++letter) {
        auto x = w;
        x.push_back(letter);
        next.push_back(std::move(x));
      }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return words;
}

// Exponent vectors of total degree t, in descending lexicographic order.
void monomials_of_degree(std::size_t d, std::size_t t, std::vector<std::size_t>& prefix,
                         std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() + 1 == d) {
    prefix.push_back(t);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t e = t + 1; e-- > 0;) {
    prefix.push_back(e);
    monomials_of_degree(d, t - e, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<std::size_t>> monomials_up_to(std::size_t d, std::size_t deg) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t t = 0; t <= deg; ++t) {
    std::vector<std::size_t> prefix;
    monomials_of_degree(d, t, prefix, out);
  }
  return out;
}

RationalAlgebra trunc_tensor(std::size_t d, std::size_t deg) {
  auto words = words_up_to(d, deg);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (words[i].size() + words[j].size() > deg) continue;
      auto w = words[i];
      w.insert(w.end(), words[j].begin(), words[j].end());
      entries.push_back({i, j, index.at(w), 1});
    }
  return RationalAlgebra::from_entries("trunc_tensor(" + std::to_string(d) + "," + std::to_string(deg) + ")", kQ,
                                       words.size(), entries);
}

RationalAlgebra trunc_sym(std::size_t d, std::size_t deg) {
  auto monos = monomials_up_to(d, deg);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      std::vector<std::size_t> m(d);
      std::size_t total = 0;
      for (std::size_t v = 0; v < d; ++v) total += m[v] = monos[i][v] + monos[j][v];
      if (total <= deg) entries.push_back({i, j, index.at(m), 1});
    }
  return RationalAlgebra::from_entries("trunc_sym(" + std::to_string(d) + "," + std::to_string(deg) + ")", kQ,
                                       monos.size(), entries);
}

bool associative_over(const RationalAlgebra& alg, FieldSpec field) {
  return std::visit([](const auto& a) { return classify(a).is_associative; }, change_field(alg, field));
}

RationalAlgebra symmetrized(const RationalAlgebra& base, const Expr& e, FieldSpec field) {
  const bool jordan = e.name == "jordan_from_associative";
  const std::size_t n = base.dim();
  const mpq_class scale = jordan && !field.is_prime_field() ? mpq_class(1, 2) : mpq_class(1);
  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        mpq_class v = jordan ? mpq_class(base.constant(i, j, k) + base.constant(j, i, k))
                             : mpq_class(base.constant(i, j, k) - base.constant(j, i, k));
        v *= scale;
        if (sgn(v) != 0) entries.push_back({i, j, k, v});
      }
  return RationalAlgebra::from_entries(canonical(e), kQ, n, entries);
}

Built build(const Expr& e, FieldSpec field) {
  const std::string& name = e.name;
  const std::string label = canonical(e);

  if (name == "abelian") {
    require_args(e, 1, "(n)");
    return {abelian(positive(int_arg(e, 0), 1, "n")), {true, true, true, false}, {}};
  }
  if (name == "matrix") {
    require_args(e, 1, "(n)");
    auto n = positive(int_arg(e, 0), 1, "n");
    return {matrix_algebra(n), {false, true, n == 1, true}, {}};
  }
  if (name == "lie_from_associative" || name == "jordan_from_associative") {
    require_args(e, 1, "(associative algebra expression)");
    const auto* inner = std::get_if<Expr>(&e.args[0]);
    if (!inner) throw InvalidParameter(name + ": argument must be an algebra expression");
    Built base = build(*inner, field);
    if (!associative_over(base.algebra, field)) throw InvalidParameter(name + ": " + canonical(*inner) + " is not associative");
    std::vector<std::string> notes = base.notes;
    if (name == "lie_from_associative") return {symmetrized(base.algebra, e, field), {true, {}, {}, {}}, notes};
    if (field.is_prime_field() && field.p == 2) {
      throw InvalidParameter("jordan_from_associative requires characteristic != 2");
    }
    if (field.is_prime_field()) notes.push_back(label + ": product is ab + ba over " + field.label() + " (factor 1/2 omitted)");
    return {symmetrized(base.algebra, e, field), {{}, {}, true, {}}, notes};
  }
  if (name == "sl") {
    require_args(e, 1, "(n)");
    auto n = positive(int_arg(e, 0), 2, "n");
    std::vector<std::string> notes;
    if (field.is_prime_field() && n % field.p == 0) {
      notes.push_back(label + ": characteristic " + std::to_string(field.p) + " divides " + std::to_string(n) +
                      ", so the identity matrix is traceless and central");
    }
    return {sl_algebra(n, {n}, label), {true, {}, {}, {}}, notes};
  }
  if (name == "gl") {
    require_args(e, 1, "(n)");
    auto n = positive(int_arg(e, 0), 2, "n");
    if (field.is_prime_field()) throw InvalidParameter("gl(n) = center + sl(n) is built over Q only");
    auto sum = direct_sum(std::vector<RationalAlgebra>{abelian(1), sl_algebra(n, {n}, "sl(" + std::to_string(n) + ")")});
    return {sum.with_name(label), {true, {}, false, false}, {}};
  }
  if (name == "heisenberg") {
    require_args(e, 0, "no arguments");
    auto alg = RationalAlgebra::from_entries("heisenberg", kQ, 3, {{0, 1, 2, 1}, {1, 0, 2, -1}});
    return {alg, {true, true, false, false}, {}};
  }
  if (name == "upper_triangular" || name == "strictly_upper_triangular") {
    require_args(e, 1, "(n)");
    const bool strict = name == "strictly_upper_triangular";
    auto n = positive(int_arg(e, 0), strict ? 2 : 1, "n");
    return {triangular(n, strict), {{}, true, {}, !strict}, {}};
  }
  if (name == "parabolic_sl") {
    require_args(e, 2, "(n, [block sizes])");
    auto n = positive(int_arg(e, 0), 2, "n");
    const auto* blocks = std::get_if<std::vector<long>>(&e.args[1]);
    if (!blocks) throw InvalidParameter("parabolic_sl: second argument must be a list of block sizes");
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    for (long b : *blocks) total += sizes.emplace_back(positive(b, 1, "block size"));
    if (total != n) throw InvalidParameter("parabolic_sl: block sizes sum to " + std::to_string(total) + ", not " + std::to_string(n));
    return {sl_algebra(n, sizes, label), {true, {}, {}, {}}, {}};
  }
  if (name == "trunc_poly") {
    require_args(e, 1, "(m)");
    return {trunc_poly(positive(int_arg(e, 0), 1, "m")), {{}, true, true, true}, {}};
  }
  if (name == "trunc_tensor" || name == "trunc_sym") {
    require_args(e, 2, "(d, deg)");
    auto d = positive(int_arg(e, 0), 1, "d");
    auto deg = static_cast<std::size_t>(positive(int_arg(e, 1), 0, "deg"));
    if (name == "trunc_tensor") return {trunc_tensor(d, deg), {{}, true, d == 1 || deg < 2, true}, {}};
    return {trunc_sym(d, deg), {{}, true, true, true}, {}};
  }
  if (name == "unit_field") {
    require_args(e, 0, "no arguments");
    return {RationalAlgebra::from_entries("unit_field", kQ, 1, {{0, 0, 0, 1}}), {{}, true, true, true}, {}};
  }
  throw InvalidParameter("unknown catalog constructor '" + name + "'");
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {"abelian", "n", "n-dimensional algebra with zero product"},
      {"matrix", "n", "full matrix algebra M_n, basis E_ab row-major"},
      {"lie_from_associative", "A", "commutator algebra ab - ba of an associative expression A"},
      {"jordan_from_associative", "A", "Jordan product (ab + ba)/2 over Q, ab + ba over F_p (p > 2)"},
      {"sl", "n", "traceless n x n matrices under the commutator; basis E_ab (a != b) row-major, then E_kk - E_k+1,k+1"},
      {"gl", "n", "center (+) sl(n), over Q only; layout [1, n^2 - 1]"},
      {"heisenberg", "", "basis x, y, z with [x, y] = z central"},
      {"upper_triangular", "n", "upper triangular n x n matrices"},
      {"strictly_upper_triangular", "n", "strictly upper triangular n x n matrices"},
      {"parabolic_sl", "n,[b1,...,br]", "block upper triangular traceless matrices for the block sizes b1 + ... + br = n"},
      {"trunc_poly", "m", "K[x]/(x^m), basis 1, x, ..., x^(m-1)"},
      {"trunc_tensor", "d,deg", "tensor algebra on d generators, words of length > deg set to zero"},
      {"trunc_sym", "d,deg", "polynomial algebra on d generators, monomials of degree > deg set to zero"},
      {"unit_field", "", "one-dimensional algebra e e = e"},
  };
  return entries;
}

CatalogAlgebra catalog(std::string_view expression, FieldSpec field) {
  Expr e = ExprParser(expression).parse();
  Built built = build(e, field);
  auto alg = built.algebra.with_name(canonical(e));
  return {change_field(alg, field), built.expected, std::move(built.notes)};
}

CatalogAlgebra catalog(std::string_view name, std::string_view parameters, FieldSpec field) {
  std::string expression(name);
  if (!parameters.empty()) expression += "(" + std::string(parameters) + ")";
  return catalog(expression, field);
}

std::size_t trunc_tensor_basis_index(std::size_t d, std::size_t deg, const std::vector<std::size_t>& word) {
  if (word.size() > deg) throw InvalidParameter("word longer than the truncation degree");
  std::size_t index = 0, layer = 1;
  for (std::size_t len = 0; len < word.size(); ++len, layer *= d) index += layer;
  std::size_t rank = 0;
  for (auto letter : word) {
    if (letter >= d) throw InvalidParameter("letter out of range");
    rank = rank * d + letter;
  }
  return index + rank;
}

std::size_t trunc_sym_basis_index(std::size_t d, std::size_t deg, const std::vector<std::size_t>& exponents) {
  if (exponents.size() != d) throw InvalidParameter("exponent vector has wrong length");
  auto monos = monomials_up_to(d, deg);
  auto it = std::find(monos.begin(), monos.end(), exponents);
  if (it == monos.end()) throw InvalidParameter("monomial degree exceeds the truncation degree");
  return static_cast<std::size_t>(it - monos.begin());
}

}  // namespace zpd
