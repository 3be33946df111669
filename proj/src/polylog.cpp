#include "polyzeta/polylog.hpp"

#include <cmath>
#include <string>

#include "polyzeta/constants.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/quadrature.hpp"

namespace polyzeta {

namespace {

constexpr Bits kExtraBits = 24;

void divide_by_power(XReal& x, long k, long s) {
  if (static_cast<double>(s) * std::log2(static_cast<double>(k)) < 62.0) {
    long p = 1;
    for (long i = 0; i < s; ++i) p *= k;
    x /= p;
  } else {
    for (long i = 0; i < s; ++i) x /= k;
  }
}

// sum_{k>=1} z^k / k^s for |z| < 1, truncated by the geometric tail bound
// |z|^{N+1} / ((N+1)^s (1 - |z|)).
XReal series(long s, const XReal& z, Bits wp) {
  if (!(abs(z) < 1)) throw DomainError("direct series needs |z| < 1");
  XReal sum(0, wp);
  if (z.is_zero()) return sum;
  const double log2a = z.log2_abs();
  const double a = std::exp2(log2a);
  const double log2_gap = std::log2(1.0 - a);
  const double goal = -static_cast<double>(wp) + log2a;
  XReal zk = z.with_bits(wp);
  for (long k = 1;; ++k) {
    XReal term = zk;
    divide_by_power(term, k, s);
    sum += term;
    const double tail = static_cast<double>(k + 1) * log2a - static_cast<double>(s) * std::log2(k + 1.0) - log2_gap;
    if (tail < goal) break;
    zk *= z;
  }
  return sum;
}

// Li_s(-x) for 0 < x <= 1 by the Cohen-Villegas-Zagier acceleration of
// -sum_{k>=0} (-1)^k x^{k+1} / (k+1)^s.
XReal alternating(long s, const XReal& x, Bits wp) {
  const Bits bits = wp + 16;
  const long n = static_cast<long>(std::ceil(static_cast<double>(bits + 8) / std::log2(3.0 + std::sqrt(8.0))));
  XReal d = pow(3 + sqrt(XReal(8, bits)), n);
  d = (d + 1 / d) / 2;
  XReal b(-1, bits);
  XReal c = -d;
  XReal sum(0, bits);
  XReal xk = x.with_bits(bits);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    XReal a = xk;
    divide_by_power(a, k + 1, s);
    sum += c * a;
    b *= (k + n);
    b *= (k - n);
    b *= 2;
    b /= (2 * k + 1);
    b /= (k + 1);
    xk *= x;
  }
  return (-(sum / d)).with_bits(wp);
}

XReal eval(long s, const XReal& z, Bits wp, LiPath path);

XReal reflection(long s, const XReal& z, Bits wp) {
  const XReal one_minus = 1 - z;
  const XReal lz = log(z);
  const XReal l1z = log(one_minus);
  const XReal pi2_6 = square(XReal::pi(wp)) / 6;
  if (s == 2) {
    return pi2_6 - lz * l1z - eval(2, one_minus, wp, LiPath::kAutomatic);
  }
  XReal rhs = zeta_value(3, wp) + pow(lz, 3) / 6 + pi2_6 * lz - square(lz) * l1z / 2;
  rhs -= eval(3, one_minus, wp, LiPath::kAutomatic);
  rhs -= eval(3, 1 - 1 / z, wp, LiPath::kAutomatic);
  return rhs;
}

XReal inversion(long s, const XReal& z, Bits wp) {
  const XReal inv = 1 / z;
  const XReal l = log(-z);
  const XReal pi2_6 = square(XReal::pi(wp)) / 6;
  if (s == 2) {
    return -eval(2, inv, wp, LiPath::kAutomatic) - square(l) / 2 - pi2_6;
  }
  return eval(3, inv, wp, LiPath::kAutomatic) - pow(l, 3) / 6 - pi2_6 * l;
}

XReal eval(long s, const XReal& z, Bits wp, LiPath path) {
  if (s < 1) throw DomainError("polylogarithm weight s must be >= 1");
  if (!z.is_finite()) throw DomainError("polylogarithm argument must be finite");
  if (z > 1) throw DomainError("polylogarithm argument z must be <= 1 (branch cut z > 1)");
  if (s == 1 && z == 1) throw DomainError("Li_1(z) = -log(1 - z) diverges at z = 1");
  if (z.is_zero()) return XReal(0, wp);

  const XReal zw = z.with_bits(wp);
  const int sgn = z.sign();
  const bool small = abs(zw) * 2 <= 1;

  switch (path) {
    case LiPath::kSeries:
      if (!(abs(zw) < 1)) throw DomainError("series path needs |z| < 1");
      return series(s, zw, wp);
    case LiPath::kAlternating:
      if (!(sgn < 0 && zw >= -1)) throw DomainError("alternating path needs -1 <= z < 0");
      return alternating(s, -zw, wp);
    case LiPath::kReflection:
      if (!(s == 2 || s == 3) || !(sgn > 0 && zw < 1)) {
        throw DomainError("reflection path needs s in {2, 3} and 0 < z < 1");
      }
      return reflection(s, zw, wp);
    case LiPath::kInversion:
      if (!(s == 2 || s == 3) || sgn >= 0) throw DomainError("inversion path needs s in {2, 3} and z < 0");
      return inversion(s, zw, wp);
    case LiPath::kAutomatic:
      break;
  }

  if (s == 1) return -log1p(-zw);
  if (zw == 1) return zeta_value(s, wp);
  if (small) return series(s, zw, wp);
  if (sgn < 0 && zw >= -1) return alternating(s, -zw, wp);
  if (sgn > 0) {
    if (s == 2) return reflection(2, zw, wp);
    if (s == 3) {
      // 1 - 1/z leaves [-1/2, 1/2) for z < 2/3, where the series is still quick.
      if (3 * zw <= 2) return series(3, zw, wp);
      return reflection(3, zw, wp);
    }
    throw UnsupportedError("unsupported continuation: Li_" + std::to_string(s) + " on (1/2, 1)");
  }
  if (s == 2 || s == 3) return inversion(s, zw, wp);
  throw UnsupportedError("unsupported continuation: Li_" + std::to_string(s) + " for z < -1");
}

}  // namespace

XReal li(long s, const XReal& z, const PrecisionPolicy& prec, LiPath path) {
  return eval(s, z, prec.work_bits + kExtraBits, path).with_bits(prec.work_bits);
}

XReal li2_via_integral(const XReal& z, const PrecisionPolicy& prec) {
  if (z > 1) throw DomainError("integral representation needs z <= 1 (branch cut z > 1)");
  if (z.is_zero()) return XReal(0, prec.work_bits);
  const Bits wp = prec.work_bits + kExtraBits;
  const XReal zw = z.with_bits(wp);
  const XReal one_minus_z = 1 - zw;
  // t = 1 - z u maps [1, 1 - z] onto u in [0, 1]: Li_2(z) = -int_0^1 log(1 - z u) / u du.
  const UnitFn f = [&](const XReal& u, const XReal& cu) {
    XReal l = (u * 2 < 1) ? log1p(-(zw * u)) : log(cu + one_minus_z * u);
    return -(l / u);
  };
  QuadOptions opts;
  opts.method = QuadMethod::kTanhSinh;
  const QuadResult r = integrate_unit(f, opts, PrecisionPolicy::from_bits(wp, prec.guard_bits + kExtraBits));
  return r.value.with_bits(prec.work_bits);
}

XReal li_via_integral(long s, const XReal& z, const PrecisionPolicy& prec) {
  if (s < 1) throw DomainError("polylogarithm weight s must be >= 1");
  if (z > 1) throw DomainError("integral representation needs z <= 1");
  if (s == 1 && z == 1) throw DomainError("Li_1(z) diverges at z = 1");
  if (z.is_zero()) return XReal(0, prec.work_bits);
  const Bits wp = prec.work_bits + kExtraBits;
  const XReal zw = z.with_bits(wp);
  const XReal one_minus_z = 1 - zw;
  const UnitFn f = [&](const XReal& u, const XReal& cu) {
    const XReal minus_log = (u * 2 < 1) ? -log(u) : -log1p(-cu);
    return pow(minus_log, s - 1) / (cu + one_minus_z * u);
  };
  QuadOptions opts;
  opts.method = QuadMethod::kTanhSinh;
  const QuadResult r = integrate_unit(f, opts, PrecisionPolicy::from_bits(wp, prec.guard_bits + kExtraBits));
  XReal fact(1, wp);
  for (long k = 2; k < s; ++k) fact *= k;
  return (zw * r.value / fact).with_bits(prec.work_bits);
}

}  // namespace polyzeta
