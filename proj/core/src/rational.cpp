#include "monty/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace monty {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  // cpp_rational reduces but requires a positive denominator; move the sign up.
  if (den < 0) {
    v_ = boost::multiprecision::cpp_rational(-num, -den);
  } else {
    v_ = boost::multiprecision::cpp_rational(num, den);
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

BigInt parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("Rational::parse: sign without digits");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw std::invalid_argument("Rational::parse: non-digit character");
    }
  }
  return BigInt(std::string(s));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)),
                  parse_integer(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw std::domain_error("Rational::to_decimal: negative digit count");
  BigInt num = numerator();
  const BigInt den = denominator();
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  const BigInt scaled = num * scale;
  BigInt q = scaled / den;
  const BigInt rem = scaled % den;
  if (2 * rem >= den) ++q;  // ties round away from zero

  std::string out;
  if (negative && q != 0) out += '-';
  out += BigInt(q / scale).str();
  if (digits > 0) {
    std::string frac = BigInt(q % scale).str();
    out += '.';
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

double Rational::to_double() const { return static_cast<double>(v_); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace monty
