#include "polyzeta/rational.hpp"

#include <cctype>
#include <ostream>

#include "polyzeta/errors.hpp"

namespace polyzeta {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_text(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

// Exact value of a decimal literal: [sign] digits [. digits] [e|E [sign] digits].
mpq_class parse_decimal(std::string_view s) {
  const std::string text(s);
  auto fail = [&] { return ParseError("not a rational number: '" + text + "'"); };
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  std::string mantissa;
  long frac_digits = 0;
  bool seen_dot = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (seen_dot) throw fail();
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      mantissa.push_back(s[i]);
      if (seen_dot) ++frac_digits;
    } else {
      throw fail();
    }
  }
  if (mantissa.empty()) throw fail();
  long exponent = 0;
  if (i < s.size()) {
    const auto exp_text = s.substr(i + 1);
    if (!is_integer_text(exp_text) || exp_text.size() > 6) throw fail();
    exponent = std::stol(std::string(exp_text));
  }
  mpq_class value{mpz_class(mantissa, 10)};
  const long shift = exponent - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) {
    value *= pow10;
  } else {
    value /= pow10;
  }
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

}  // namespace

BigRational::BigRational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational::BigRational(mpq_class value) : q_(std::move(value)) {
  if (q_.get_den() == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const mpz_class num = parse_integer(std::string_view(s).substr(0, slash));
    const mpz_class den = parse_integer(std::string_view(s).substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return BigRational(mpq_class(num, den));
  }
  return BigRational(parse_decimal(s));
}

XReal BigRational::to_xreal(Bits bits) const {
  XReal r(0L, bits);
  mpfr_set_q(r.get(), q_.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::string BigRational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DomainError("division of a rational by zero");
  q_ /= o.q_;
  return *this;
}

BigRational abs(const BigRational& q) { return q.sign() < 0 ? -q : q; }

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

}  // namespace polyzeta
