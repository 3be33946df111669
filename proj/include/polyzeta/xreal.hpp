#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace polyzeta {

using Bits = mpfr_prec_t;

/// Extended-precision real number backed by an MPFR value.
///
/// Every XReal carries its own mantissa width (at least 64 bits). Binary
/// arithmetic between two XReals is carried out at the larger of the two
/// widths; arithmetic with machine integers keeps the XReal's width. There
/// is no process-wide default precision: every construction names its width.
class XReal {
 public:
  static constexpr Bits kMinBits = 64;

  XReal();
  XReal(long value, Bits bits);
  static XReal from_double(double value, Bits bits);
  /// Parses a decimal literal ("1.25", "-3e-4") or a ratio "p/q".
  static XReal parse(std::string_view text, Bits bits);

  static XReal pi(Bits bits);
  static XReal ln2(Bits bits);
  static XReal euler_gamma(Bits bits);

  XReal(const XReal& other);
  XReal(XReal&& other) noexcept;
  XReal& operator=(const XReal& other);
  XReal& operator=(XReal&& other) noexcept;
  ~XReal();

  Bits bits() const { return mpfr_get_prec(value_); }
  /// Returns a copy rounded (or widened) to the given width.
  XReal with_bits(Bits bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// log2 of the magnitude without underflow; -inf for zero.
  double log2_abs() const;
  int sign() const { return mpfr_sgn(value_); }

  /// Scientific notation with exactly `digits` significant digits,
  /// e.g. "1.2020569031595942854e+00".
  std::string to_string(int digits) const;

  XReal& operator+=(const XReal& rhs);
  XReal& operator-=(const XReal& rhs);
  XReal& operator*=(const XReal& rhs);
  XReal& operator/=(const XReal& rhs);
  XReal& operator+=(long rhs);
  XReal& operator-=(long rhs);
  XReal& operator*=(long rhs);
  XReal& operator/=(long rhs);

  XReal operator-() const&;
  XReal operator-() &&;

 private:
  void widen_to(Bits bits);

  mpfr_t value_;
};

XReal operator+(const XReal& a, const XReal& b);
XReal operator+(XReal&& a, const XReal& b);
XReal operator+(const XReal& a, XReal&& b);
XReal operator+(XReal&& a, XReal&& b);
XReal operator-(const XReal& a, const XReal& b);
XReal operator-(XReal&& a, const XReal& b);
XReal operator-(const XReal& a, XReal&& b);
XReal operator-(XReal&& a, XReal&& b);
XReal operator*(const XReal& a, const XReal& b);
XReal operator*(XReal&& a, const XReal& b);
XReal operator*(const XReal& a, XReal&& b);
XReal operator*(XReal&& a, XReal&& b);
XReal operator/(const XReal& a, const XReal& b);
XReal operator/(XReal&& a, const XReal& b);
XReal operator/(const XReal& a, XReal&& b);
XReal operator/(XReal&& a, XReal&& b);

XReal operator+(XReal a, long b);
XReal operator+(long a, XReal b);
XReal operator-(XReal a, long b);
XReal operator-(long a, XReal b);
XReal operator*(XReal a, long b);
XReal operator*(long a, XReal b);
XReal operator/(XReal a, long b);
XReal operator/(long a, XReal b);

bool operator==(const XReal& a, const XReal& b);
std::partial_ordering operator<=>(const XReal& a, const XReal& b);
bool operator==(const XReal& a, long b);
std::partial_ordering operator<=>(const XReal& a, long b);

// Mixing with machine floats would silently round through long; convert
// explicitly with XReal::from_double instead.
template <std::floating_point F> XReal operator+(const XReal&, F) = delete;
template <std::floating_point F> XReal operator+(F, const XReal&) = delete;
template <std::floating_point F> XReal operator-(const XReal&, F) = delete;
template <std::floating_point F> XReal operator-(F, const XReal&) = delete;
template <std::floating_point F> XReal operator*(const XReal&, F) = delete;
template <std::floating_point F> XReal operator*(F, const XReal&) = delete;
template <std::floating_point F> XReal operator/(const XReal&, F) = delete;
template <std::floating_point F> XReal operator/(F, const XReal&) = delete;
template <std::floating_point F> bool operator==(const XReal&, F) = delete;
template <std::floating_point F> std::partial_ordering operator<=>(const XReal&, F) = delete;

std::ostream& operator<<(std::ostream& os, const XReal& x);

XReal abs(XReal x);
XReal sqrt(XReal x);
XReal square(XReal x);
XReal log(XReal x);
XReal log1p(XReal x);
XReal exp(XReal x);
XReal expm1(XReal x);
XReal sin(XReal x);
XReal cos(XReal x);
XReal sinh(XReal x);
XReal cosh(XReal x);
XReal tanh(XReal x);
XReal atan(XReal x);
XReal pow(XReal x, long n);
XReal pow(const XReal& x, const XReal& y);
/// x * 2^e, exact.
XReal ldexp(XReal x, long e);
XReal round_to_integer(XReal x);
const XReal& max(const XReal& a, const XReal& b);
const XReal& min(const XReal& a, const XReal& b);

}  // namespace polyzeta
