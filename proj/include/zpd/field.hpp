#pragma once

// Exact scalar fields: arbitrary-precision rationals and prime fields F_p.
//
// Both field types expose the same small interface (zero/one, add/sub/mul,
// inverse, sub_mul, canonical string form) so the linear algebra layer can be
// written once as templates over the field.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "zpd/errors.hpp"

namespace zpd {

enum class FieldKind { Rationals, PrimeField };

/// Runtime description of a base field: Q or F_p.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;  // prime when kind == PrimeField, 0 otherwise

  static FieldSpec rationals() { return {}; }
  /// Throws InvalidParameter unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Parses "Q" or "F<p>" (e.g. "F5"); throws ParseError, including for composite p.
  static FieldSpec parse(std::string_view text);

  bool is_prime_field() const { return kind == FieldKind::PrimeField; }
  /// "Q" or "F<p>".
  std::string label() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// The rational numbers. Elements are always in lowest terms with positive
/// denominator (mpq_class canonical form).
class Rationals {
 public:
  using Element = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  Element from_rational(const mpq_class& q) const { return q; }
  mpq_class to_rational(const Element& a) const { return a; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  /// acc -= a * b
  void sub_mul(Element& acc, const Element& a, const Element& b) const { acc -= a * b; }
  /// acc += a * b
  void add_mul(Element& acc, const Element& a, const Element& b) const { acc += a * b; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  /// "3", "-1/2"
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// The prime field F_p with residues stored in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint64_t p);

  FieldSpec spec() const { return FieldSpec::prime(p_); }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const;
  /// Maps num/den to num * den^-1 mod p; throws InvalidParameter when p | den.
  Element from_rational(const mpq_class& q) const;
  /// The residue as an integer in [0, p).
  mpq_class to_rational(Element a) const { return mpq_class(static_cast<unsigned long>(a)); }

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b); }
  Element mul(Element a, Element b) const { return static_cast<Element>(std::uint64_t{a} * b % p_); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  void sub_mul(Element& acc, Element a, Element b) const { acc = sub(acc, mul(a, b)); }
  void add_mul(Element& acc, Element a, Element b) const { acc = add(acc, mul(a, b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

 private:
  std::uint32_t p_;
};

/// Parses an exact decimal integer or "num/den" string. Throws ParseError.
mpq_class parse_rational(std::string_view text);

}  // namespace zpd
