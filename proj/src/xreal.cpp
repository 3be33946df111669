#include "polyzeta/xreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "polyzeta/errors.hpp"

namespace polyzeta {

namespace {

Bits clamp_bits(Bits bits) { return std::max(bits, XReal::kMinBits); }

void set_from_text(mpfr_ptr dst, const std::string& text) {
  if (text.empty() || mpfr_set_str(dst, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("not a real number: '" + text + "'");
  }
}

}  // namespace

XReal::XReal() : XReal(0L, kMinBits) {}

XReal::XReal(long value, Bits bits) {
  mpfr_init2(value_, clamp_bits(bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

XReal XReal::from_double(double value, Bits bits) {
  XReal r(0L, bits);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

XReal XReal::parse(std::string_view text, Bits bits) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  XReal r(0L, bits);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    XReal den(0L, bits);
    set_from_text(r.value_, s.substr(0, slash));
    set_from_text(den.value_, s.substr(slash + 1));
    if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'");
    r /= den;
  } else {
    set_from_text(r.value_, s);
  }
  return r;
}

XReal XReal::pi(Bits bits) {
  XReal r(0L, bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

XReal XReal::ln2(Bits bits) {
  XReal r(0L, bits);
  mpfr_const_log2(r.value_, MPFR_RNDN);
  return r;
}

XReal XReal::euler_gamma(Bits bits) {
  XReal r(0L, bits);
  mpfr_const_euler(r.value_, MPFR_RNDN);
  return r;
}

XReal::XReal(const XReal& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

XReal::XReal(XReal&& other) noexcept {
  mpfr_init2(value_, kMinBits);
  mpfr_swap(value_, other.value_);
}

XReal& XReal::operator=(const XReal& other) {
  if (this != &other) {
    if (bits() != other.bits()) mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

XReal& XReal::operator=(XReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

XReal::~XReal() { mpfr_clear(value_); }

XReal XReal::with_bits(Bits b) const {
  XReal r(0L, b);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

void XReal::widen_to(Bits b) {
  if (b > bits()) mpfr_prec_round(value_, b, MPFR_RNDN);
}

std::string XReal::to_string(int digits) const {
  digits = std::max(digits, 1);
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  std::string mant;
  long exp10 = 0;
  if (is_zero()) {
    mant.assign(static_cast<std::size_t>(digits), '0');
    exp10 = 1;
  } else {
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), value_, MPFR_RNDN);
    mant = raw;
    mpfr_free_str(raw);
    exp10 = e;
  }
  std::string out;
  if (!mant.empty() && mant.front() == '-') {
    out.push_back('-');
    mant.erase(0, 1);
  }
  out.push_back(mant[0]);
  if (mant.size() > 1) {
    out.push_back('.');
    out.append(mant, 1, std::string::npos);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%+03ld", exp10 - 1);
  out += buf;
  return out;
}

XReal& XReal::operator+=(const XReal& rhs) {
  widen_to(rhs.bits());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
XReal& XReal::operator-=(const XReal& rhs) {
  widen_to(rhs.bits());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
XReal& XReal::operator*=(const XReal& rhs) {
  widen_to(rhs.bits());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
XReal& XReal::operator/=(const XReal& rhs) {
  widen_to(rhs.bits());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
XReal& XReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
XReal& XReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
XReal& XReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
XReal& XReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

XReal XReal::operator-() const& {
  XReal r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}
XReal XReal::operator-() && {
  mpfr_neg(value_, value_, MPFR_RNDN);
  return std::move(*this);
}

XReal operator+(const XReal& a, const XReal& b) {
  XReal r(a);
  r += b;
  return r;
}
XReal operator+(XReal&& a, const XReal& b) { return std::move(a += b); }
XReal operator+(const XReal& a, XReal&& b) { return std::move(b += a); }
XReal operator+(XReal&& a, XReal&& b) { return std::move(a += b); }

XReal operator-(const XReal& a, const XReal& b) {
  XReal r(a);
  r -= b;
  return r;
}
XReal operator-(XReal&& a, const XReal& b) { return std::move(a -= b); }
XReal operator-(const XReal& a, XReal&& b) {
  if (a.bits() > b.bits()) return a - static_cast<const XReal&>(b);
  mpfr_sub(b.get(), a.get(), b.get(), MPFR_RNDN);
  return std::move(b);
}
XReal operator-(XReal&& a, XReal&& b) { return std::move(a -= b); }

XReal operator*(const XReal& a, const XReal& b) {
  XReal r(a);
  r *= b;
  return r;
}
XReal operator*(XReal&& a, const XReal& b) { return std::move(a *= b); }
XReal operator*(const XReal& a, XReal&& b) { return std::move(b *= a); }
XReal operator*(XReal&& a, XReal&& b) { return std::move(a *= b); }

XReal operator/(const XReal& a, const XReal& b) {
  XReal r(a);
  r /= b;
  return r;
}
XReal operator/(XReal&& a, const XReal& b) { return std::move(a /= b); }
XReal operator/(const XReal& a, XReal&& b) {
  if (a.bits() > b.bits()) return a / static_cast<const XReal&>(b);
  mpfr_div(b.get(), a.get(), b.get(), MPFR_RNDN);
  return std::move(b);
}
XReal operator/(XReal&& a, XReal&& b) { return std::move(a /= b); }

XReal operator+(XReal a, long b) { return std::move(a += b); }
XReal operator+(long a, XReal b) { return std::move(b += a); }
XReal operator-(XReal a, long b) { return std::move(a -= b); }
XReal operator-(long a, XReal b) {
  mpfr_si_sub(b.get(), a, b.get(), MPFR_RNDN);
  return b;
}
XReal operator*(XReal a, long b) { return std::move(a *= b); }
XReal operator*(long a, XReal b) { return std::move(b *= a); }
XReal operator/(XReal a, long b) { return std::move(a /= b); }
XReal operator/(long a, XReal b) {
  mpfr_si_div(b.get(), a, b.get(), MPFR_RNDN);
  return b;
}

bool operator==(const XReal& a, const XReal& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

std::partial_ordering operator<=>(const XReal& a, const XReal& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const XReal& a, long b) { return !mpfr_nan_p(a.get()) && mpfr_cmp_si(a.get(), b) == 0; }

std::partial_ordering operator<=>(const XReal& a, long b) {
  if (mpfr_nan_p(a.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.get(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const XReal& x) {
  return os << x.to_string(static_cast<int>(os.precision()));
}

#define POLYZETA_UNARY(name, fn)               \
  XReal name(XReal x) {                        \
    fn(x.get(), x.get(), MPFR_RNDN);           \
    return x;                                  \
  }

POLYZETA_UNARY(abs, mpfr_abs)
POLYZETA_UNARY(sqrt, mpfr_sqrt)
POLYZETA_UNARY(square, mpfr_sqr)
POLYZETA_UNARY(log, mpfr_log)
POLYZETA_UNARY(log1p, mpfr_log1p)
POLYZETA_UNARY(exp, mpfr_exp)
POLYZETA_UNARY(expm1, mpfr_expm1)
POLYZETA_UNARY(sin, mpfr_sin)
POLYZETA_UNARY(cos, mpfr_cos)
POLYZETA_UNARY(sinh, mpfr_sinh)
POLYZETA_UNARY(cosh, mpfr_cosh)
POLYZETA_UNARY(tanh, mpfr_tanh)
POLYZETA_UNARY(atan, mpfr_atan)

#undef POLYZETA_UNARY

XReal pow(XReal x, long n) {
  mpfr_pow_si(x.get(), x.get(), n, MPFR_RNDN);
  return x;
}

XReal pow(const XReal& x, const XReal& y) {
  XReal r(0L, std::max(x.bits(), y.bits()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

XReal ldexp(XReal x, long e) {
  mpfr_mul_2si(x.get(), x.get(), e, MPFR_RNDN);
  return x;
}

XReal round_to_integer(XReal x) {
  mpfr_round(x.get(), x.get());
  return x;
}

const XReal& max(const XReal& a, const XReal& b) { return (a < b) ? b : a; }
const XReal& min(const XReal& a, const XReal& b) { return (b < a) ? b : a; }

}  // namespace polyzeta

namespace polyzeta {

double XReal::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, value_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

}  // namespace polyzeta
