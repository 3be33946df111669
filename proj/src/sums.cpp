#include "polyzeta/sums.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "polyzeta/asymptotic.hpp"
#include "polyzeta/constants.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/polylog.hpp"
#include "polyzeta/quadrature.hpp"

namespace polyzeta {

namespace {

constexpr double kLog2Of3 = 1.584962500721156;
constexpr long kMaxSeriesTerms = 5000;

XReal pow2(long e, Bits bits) { return ldexp(XReal(1, bits), e); }

// Smallest K with r^(K+2) (K+1) / (1-r)^2 below 2^-target_bits, where the
// coefficients of the series are at most k in size.
long power_series_terms(double r, Bits target_bits) {
  if (r == 0.0) return 0;
  const double log2r = std::log2(r);
  const double denom = 2.0 * std::log2(1.0 - r);
  for (long k = 1; k <= kMaxSeriesTerms; ++k) {
    const double b = (k + 2) * log2r + std::log2(static_cast<double>(k + 1)) - denom;
    if (b < -static_cast<double>(target_bits)) return k;
  }
  throw ConvergenceError("series path needs more than " + std::to_string(kMaxSeriesTerms) +
                         " terms at this argument; use the closed path");
}

enum class Weight { kH, kH2, kH2Alt };

XReal harmonic_series(Weight which, const XReal& z, const PrecisionPolicy& prec) {
  if (!(abs(z) < 1)) throw DomainError("series path needs |z| < 1");
  if (z.is_zero()) return prec.zero();
  const double r = std::exp2(z.log2_abs());
  const Bits wp = prec.work_bits + 16;
  const long terms = power_series_terms(r, prec.work_bits - prec.guard_bits + 4);
  const auto cache = HarmonicCache::shared(static_cast<std::size_t>(terms));
  const XReal x = z.with_bits(wp);
  XReal zk = x * x;  // z^(k+1) for k = 1
  XReal sum(0, wp);
  for (long k = 1; k <= terms; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    XReal c(0, wp);
    switch (which) {
      case Weight::kH:
        c = cache->H(uk).to_xreal(wp) / ((k + 1) * (k + 1));
        break;
      case Weight::kH2:
        c = cache->H2(uk).to_xreal(wp) / (k + 1);
        break;
      case Weight::kH2Alt:
        c = cache->H2alt(uk).to_xreal(wp) / (k + 1);
        break;
    }
    sum += c * zk;
    zk *= x;
  }
  return sum.with_bits(prec.work_bits);
}

void check_closed_domain(const XReal& z) {
  if (z.sign() < 0 || !(z < 1)) throw DomainError("closed form needs z in [0, 1)");
}

}  // namespace

HarmonicCache::HarmonicCache(std::size_t n) {
  h_.reserve(n + 1);
  h2_.reserve(n + 1);
  h2alt_.reserve(n + 1);
  halt_.reserve(n + 1);
  h_.emplace_back(0);
  h2_.emplace_back(0);
  h2alt_.emplace_back(0);
  halt_.emplace_back(0);
  for (std::size_t j = 1; j <= n; ++j) {
    const long jl = static_cast<long>(j);
    const BigRational inv(1, jl);
    const BigRational inv2(1, jl * jl);
    const bool odd = j % 2 == 1;
    h_.push_back(h_.back() + inv);
    h2_.push_back(h2_.back() + inv2);
    h2alt_.push_back(odd ? h2alt_.back() + inv2 : h2alt_.back() - inv2);
    halt_.push_back(odd ? halt_.back() + inv : halt_.back() - inv);
  }
}

std::shared_ptr<const HarmonicCache> HarmonicCache::shared(std::size_t n) {
  static std::mutex mu;
  static std::shared_ptr<const HarmonicCache> cache = std::make_shared<const HarmonicCache>(256);
  std::lock_guard<std::mutex> lock(mu);
  if (cache->size() < n) cache = std::make_shared<const HarmonicCache>(std::max(n, 2 * cache->size()));
  return cache;
}

XReal inner_tail(long k, const PrecisionPolicy& prec) {
  if (k < 1) throw DomainError("inner_tail needs k >= 1");
  mpq_class partial = 0;
  for (long j = 1; j < k; ++j) {
    mpz_class den = j;
    den <<= static_cast<mp_bitcnt_t>(j);
    partial += mpq_class(1, den);
  }
  partial.canonicalize();
  const Bits wp = prec.work_bits + static_cast<Bits>(k) + 16;
  const XReal v = XReal::ln2(wp) - BigRational(partial).to_xreal(wp);
  return v.with_bits(prec.work_bits);
}

XReal hyp2f1_kk(long k, const PrecisionPolicy& prec) {
  if (k < 1) throw DomainError("hyp2f1_kk needs k >= 1");
  const Bits wp = prec.work_bits + 16;
  const long terms = static_cast<long>(prec.work_bits) + 16;
  XReal sum(0, wp);
  for (long j = terms; j >= 0; --j) sum += ldexp(XReal(k, wp) / (k + j), -j);
  return ldexp(sum, -k).with_bits(prec.work_bits);
}

TruncatedSum double_sum(DoubleSum which, long terms, const PrecisionPolicy& prec) {
  if (terms < 1) throw DomainError("double_sum needs at least one term");
  const Bits wp = prec.work_bits + 16;
  const long inner_end = terms + static_cast<long>(prec.work_bits) + 16;
  const int outer_power = which == DoubleSum::kRamanujan ? 1 : 2;
  const int inner_power = which == DoubleSum::kRamanujan ? 2 : 1;

  // inner(k) = sum_{k <= j <= inner_end} 1/(j^b 2^j), accumulated backward.
  std::vector<XReal> inner(static_cast<std::size_t>(terms + 1), XReal(0, wp));
  XReal acc(0, wp);
  for (long j = inner_end; j >= 1; --j) {
    XReal t = ldexp(XReal(1, wp), -j);
    for (int p = 0; p < inner_power; ++p) t /= j;
    acc += t;
    if (j <= terms) inner[static_cast<std::size_t>(j)] = acc;
  }
  XReal sum(0, wp);
  for (long k = 1; k <= terms; ++k) {
    XReal t = inner[static_cast<std::size_t>(k)];
    for (int p = 0; p < outer_power; ++p) t /= k;
    if (which == DoubleSum::kS3 && k % 2 == 0) {
      sum -= t;
    } else {
      sum += t;
    }
  }
  // Outer tail: inner(k) <= 2^(1-k)/k^b, so sum_{k>K} <= 2^(1-K)/(K+1)^3.
  // Inner cut: each inner(k) misses at most 2^-inner_end; outer weights sum to <= 1 + ln K.
  const Bits bb = 64;
  XReal bound = pow2(1 - terms, bb) / XReal(terms + 1, bb) / (terms + 1) / (terms + 1);
  bound += pow2(-inner_end, bb) * XReal::from_double(1.0 + std::log(static_cast<double>(terms)), bb);
  bound += pow2(-static_cast<long>(wp) + 2, bb) * (terms + inner_end);
  return TruncatedSum{sum.with_bits(prec.work_bits), bound, terms};
}

TruncatedSum double_sum(DoubleSum which, const PrecisionPolicy& prec) {
  const double target = static_cast<double>(prec.work_bits - prec.guard_bits) + 4;
  long terms = 1;
  while ((1.0 - terms) - 3.0 * std::log2(terms + 1.0) > -target) ++terms;
  return double_sum(which, terms, prec);
}

XReal s3(const PrecisionPolicy& prec) { return double_sum(DoubleSum::kS3, prec).value; }
XReal s3_plus(const PrecisionPolicy& prec) { return double_sum(DoubleSum::kS3Plus, prec).value; }
XReal ramanujan(const PrecisionPolicy& prec) { return double_sum(DoubleSum::kRamanujan, prec).value; }

namespace {

// c_p = sum_n 3^-n / n * sum_{i<=n} i^p for p = 0..order.
std::vector<XReal> companion_moments(int order, Bits wp) {
  std::vector<XReal> c(static_cast<std::size_t>(order + 1), XReal(0, wp));
  std::vector<XReal> power_sums(static_cast<std::size_t>(order + 1), XReal(0, wp));
  XReal w(1, wp);
  for (long n = 1;; ++n) {
    w /= 3;
    XReal np(1, wp);
    const XReal weight = w / n;
    for (int p = 0; p <= order; ++p) {
      power_sums[static_cast<std::size_t>(p)] += np;
      c[static_cast<std::size_t>(p)] += power_sums[static_cast<std::size_t>(p)] * weight;
      np *= n;
    }
    const double remaining = n * kLog2Of3 - (order + 1) * std::log2(static_cast<double>(n));
    if (n > order && remaining > static_cast<double>(wp) + 20) break;
  }
  return c;
}

// sum over odd k > m (m even) of F(k), F(k) = sum_p (-1)^p c_p k^-(p+2).
XReal odd_tail(const std::vector<XReal>& c, int order, long m, Bits wp) {
  LogPowerSeries f(order, 0, wp);
  for (int p = 0; p + 2 <= order; ++p) {
    f.at(p + 2, 0) = p % 2 == 0 ? c[static_cast<std::size_t>(p)] : -c[static_cast<std::size_t>(p)];
  }
  const XReal mx(m, wp);
  const XReal s = partial_sum_expansion(f).evaluate(mx);
  const XReal g = alternating_sum_expansion(f).evaluate(mx);
  return (g - s) / 2;
}

}  // namespace

Estimate companion(const PrecisionPolicy& prec) {
  const Bits wp = prec.work_bits + 32;
  long m = static_cast<long>(std::ceil(2.0 * (static_cast<double>(wp) + 10) / kLog2Of3));
  if (m % 2 == 1) ++m;
  const int order = std::clamp(static_cast<int>(m / 3), 20, 240);
  const long n_terms = static_cast<long>(std::ceil((static_cast<double>(wp) + 10) / kLog2Of3)) + 2;

  XReal direct(0, wp);
  for (long k = 1; k < m; k += 2) {
    XReal diff(0, wp);  // H_{k+n} - H_k
    XReal w(1, wp);
    XReal inner(0, wp);
    for (long n = 1; n <= n_terms; ++n) {
      diff += XReal(1, wp) / (k + n);
      w /= 3;
      inner += diff * w / n;
    }
    direct += inner / k;
  }
  const std::vector<XReal> c = companion_moments(order, wp);
  const XReal tail = odd_tail(c, order, m, wp);
  const XReal tail_low = odd_tail(c, order - 6, m, wp);
  XReal err = abs(tail - tail_low) * 10;
  // Dropped n beyond n_terms, plus rounding in the direct part.
  err += pow2(-static_cast<long>(n_terms * kLog2Of3) + 2, wp);
  err += pow2(-static_cast<long>(wp) + 4, wp) * (m * n_terms);
  return Estimate{(direct + tail).with_bits(prec.work_bits), err.with_bits(64)};
}

XReal g_fn(const XReal& z, const PrecisionPolicy& prec, SumPath path) {
  if (path == SumPath::kSeries) return harmonic_series(Weight::kH, z, prec);
  check_closed_domain(z);
  if (z.is_zero()) return prec.zero();
  const PrecisionPolicy inner = prec.widened(16);
  const Bits b = inner.work_bits;
  const XReal x = z.with_bits(b);
  const XReal w = 1 - x;
  const XReal lw = log(w);
  XReal v = square(lw) * log(x) / 2 + li(2, w, inner) * lw - li(3, w, inner) + zeta_value(3, b);
  return v.with_bits(prec.work_bits);
}

XReal h_fn(const XReal& z, const PrecisionPolicy& prec, SumPath path) {
  if (path == SumPath::kSeries) return harmonic_series(Weight::kH2, z, prec);
  check_closed_domain(z);
  if (z.is_zero()) return prec.zero();
  const PrecisionPolicy inner = prec.widened(16);
  const Bits b = inner.work_bits;
  const XReal w = 1 - z.with_bits(b);
  const XReal lw = log(w);
  XReal v = 2 * li(3, w, inner) - li(2, w, inner) * lw - zeta_value(2, b) * lw - 2 * zeta_value(3, b);
  return v.with_bits(prec.work_bits);
}

XReal h_tilde(const XReal& z, const PrecisionPolicy& prec, SumPath path) {
  if (path == SumPath::kSeries) return harmonic_series(Weight::kH2Alt, z, prec);
  check_closed_domain(z);
  if (z.is_zero()) return prec.zero();
  const PrecisionPolicy inner = prec.widened(16);
  const Bits b = inner.work_bits;
  const XReal x = z.with_bits(b);
  QuadOptions opts;
  opts.method = QuadMethod::kTanhSinh;
  opts.target = 0.0;
  opts.max_level = 10;
  const QuadResult r = integrate_1d([](const XReal& t) { return log1p(-t) * log1p(t) / t; }, XReal(0, b), x,
                                    opts, inner);
  if (!r.converged) throw ConvergenceError("h_tilde integral did not converge");
  XReal v = log1p(-x) * li(2, -x, inner) + r.value;
  return v.with_bits(prec.work_bits);
}

mpz_class apery_A(long n) {
  if (n < 0) throw DomainError("apery_A needs n >= 0");
  const auto un = static_cast<unsigned long>(n);
  mpz_class sum = 0;
  for (unsigned long k = 0; k <= un; ++k) {
    const mpz_class a = binomial(un, k) * binomial(un + k, k);
    sum += a * a;
  }
  return sum;
}

BeukersDecomposition beukers_decompose(long n, const PrecisionPolicy& prec) {
  if (n < 0) throw DomainError("beukers_decompose needs n >= 0");
  if (n > 3) throw UnsupportedError("beukers_decompose supports n <= 3");
  IntegralSpec spec;
  spec.id = CatalogId::kBeukersJ;
  spec.n = static_cast<int>(n);
  const QuadResult q = catalog_eval(spec, prec);
  if (!q.converged) throw ConvergenceError("Beukers integral did not converge");
  const Bits b = prec.work_bits;
  BeukersDecomposition d;
  d.A = apery_A(n);
  d.J = q.value;
  d.J_error = q.est_error;
  d.B = d.J - BigRational(d.A).to_xreal(b) * zeta_value(3, b);
  const mpz_class dn = lcm_upto(n).numerator();
  const XReal scaled = d.B * BigRational(mpz_class(dn * dn * dn)).to_xreal(b);
  mpfr_get_z(d.b_scaled.get_mpz_t(), scaled.get(), MPFR_RNDN);
  d.residue = abs(scaled - BigRational(d.b_scaled).to_xreal(b));
  return d;
}

}  // namespace polyzeta
