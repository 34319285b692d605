#include "zpd/field.hpp"

#include <cctype>
#include <charconv>

namespace zpd {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) throw InvalidParameter("prime modulus must be below 2^31: " + std::to_string(p));
  if (!is_prime(p)) throw InvalidParameter("not a prime: " + std::to_string(p));
  return {FieldKind::PrimeField, static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::uint64_t p = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      try {
        return prime(p);
      } catch (const InvalidParameter& e) {
        throw ParseError(e.what());
      }
    }
  }
  throw ParseError("unrecognized field '" + std::string(text) + "' (expected Q or F<p>)");
}

std::string FieldSpec::label() const {
  return kind == FieldKind::Rationals ? std::string("Q") : "F" + std::to_string(p);
}

Rationals::Element Rationals::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  return Element(1) / a;
}

PrimeField::PrimeField(std::uint64_t p) : p_(FieldSpec::prime(p).p) {}

PrimeField::Element PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0) throw InvalidParameter("denominator " + q.get_den().get_str() + " is not invertible mod " + std::to_string(p_));
  return mul(static_cast<Element>(num.get_ui()), inv(static_cast<Element>(den.get_ui())));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

mpq_class parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw ParseError("invalid exact value '" + std::string(text) + "'");
  }
  std::string num_s(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_s, 10), d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace zpd
