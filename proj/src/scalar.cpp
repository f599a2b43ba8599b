#include "rigor/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace rigor {

ModP ModP::from_integer(const Integer& v) {
  Integer r = v % Integer(kModulus);
  if (r < 0) r += Integer(kModulus);
  return from_u64(r.convert_to<std::uint64_t>());
}

ModP ModP::from_rational(const Rational& v) {
  const ModP den = from_integer(boost::multiprecision::denominator(v));
  if (den.is_zero()) throw std::domain_error("denominator vanishes mod P");
  return from_integer(boost::multiprecision::numerator(v)) / den;
}

ModP ModP::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F_P");
  // Fermat: a^(P-2).
  ModP base = *this;
  ModP result = 1;
  std::uint64_t e = kModulus - 2;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, ModP v) { return os << v.value(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num))
    throw std::invalid_argument("malformed rational: " + std::string(text));
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den))
    throw std::invalid_argument("malformed rational: " + std::string(text));
  const Integer d = parse_integer(den);
  if (d.is_zero()) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& v) {
  const Integer& den = boost::multiprecision::denominator(v);
  if (den == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

}  // namespace rigor
