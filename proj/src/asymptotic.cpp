#include "polyzeta/asymptotic.hpp"

#include "polyzeta/constants.hpp"
#include "polyzeta/errors.hpp"

namespace polyzeta {

LogPowerSeries::LogPowerSeries(int max_power, int max_log, Bits bits)
    : max_power_(max_power),
      max_log_(max_log),
      bits_(bits),
      c_(static_cast<std::size_t>((max_power + 1) * (max_log + 1)), XReal(0, bits)) {}

LogPowerSeries& LogPowerSeries::operator+=(const LogPowerSeries& o) {
  for (int p = 0; p <= max_power_ && p <= o.max_power_; ++p) {
    for (int i = 0; i <= o.max_log_; ++i) {
      if (o.at(p, i).is_zero()) continue;
      if (i > max_log_) throw UnsupportedError("log power exceeds expansion capacity");
      at(p, i) += o.at(p, i);
    }
  }
  return *this;
}

LogPowerSeries& LogPowerSeries::operator*=(const XReal& factor) {
  for (auto& c : c_) c *= factor;
  return *this;
}

LogPowerSeries LogPowerSeries::operator-() const {
  LogPowerSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LogPowerSeries LogPowerSeries::derivative() const {
  LogPowerSeries d(max_power_, max_log_, bits_);
  for (int p = 0; p < max_power_; ++p) {
    for (int i = 0; i <= max_log_; ++i) {
      const XReal& c = at(p, i);
      if (c.is_zero()) continue;
      // (L^i m^-p)' = (i L^(i-1) - p L^i) m^-(p+1)
      if (p > 0) d.at(p + 1, i) -= c * p;
      if (i > 0) d.at(p + 1, i - 1) += c * i;
    }
  }
  return d;
}

LogPowerSeries LogPowerSeries::shifted_back() const {
  LogPowerSeries result = *this;
  LogPowerSeries d = *this;
  XReal coef(1, bits_);
  for (int r = 1; r <= max_power_; ++r) {
    d = d.derivative();
    coef /= -r;
    LogPowerSeries term = d;
    term *= coef;
    result += term;
  }
  return result;
}

LogPowerSeries LogPowerSeries::times_power(int s) const {
  LogPowerSeries r(max_power_, max_log_, bits_);
  for (int p = 0; p + s <= max_power_; ++p) {
    for (int i = 0; i <= max_log_; ++i) r.at(p + s, i) = at(p, i);
  }
  return r;
}

LogPowerSeries LogPowerSeries::antiderivative() const {
  LogPowerSeries r(max_power_, max_log_, bits_);
  for (int i = 0; i <= max_log_; ++i) {
    if (!at(0, i).is_zero()) throw DomainError("divergent partial sum: expansion has an m^0 term");
  }
  for (int i = 0; i <= max_log_; ++i) {
    const XReal& c = at(1, i);
    if (c.is_zero()) continue;
    if (i + 1 > max_log_) throw UnsupportedError("log power exceeds expansion capacity");
    r.at(0, i + 1) += c / (i + 1);
  }
  for (int p = 2; p <= max_power_; ++p) {
    const long a = p - 1;
    for (int i = 0; i <= max_log_; ++i) {
      const XReal& c = at(p, i);
      if (c.is_zero()) continue;
      // int L^i x^-p = -sum_l i!/(i-l)! L^(i-l) x^(1-p) / (p-1)^(l+1)
      XReal term = -(c / a);
      for (int l = 0; l <= i; ++l) {
        r.at(p - 1, i - l) += term;
        term *= (i - l);
        term /= a;
      }
    }
  }
  return r;
}

XReal LogPowerSeries::evaluate(const XReal& m) const {
  const XReal lg = log(m.with_bits(bits_));
  const XReal inv = 1 / m.with_bits(bits_);
  XReal total(0, bits_);
  for (int p = max_power_; p >= 0; --p) {
    XReal row(0, bits_);
    for (int i = max_log_; i >= 0; --i) {
      row *= lg;
      row += at(p, i);
    }
    total *= inv;
    total += row;
  }
  return total;
}

LogPowerSeries partial_sum_expansion(const LogPowerSeries& f) {
  LogPowerSeries s = f.antiderivative();
  LogPowerSeries half = f;
  half *= XReal(1, f.bits()) / 2;
  s += half;
  LogPowerSeries d = f;
  mpz_class fact = 1;
  for (int j = 2; j <= f.max_power() + 1; ++j) {
    d = d.derivative();
    fact *= j;
    if (j % 2 == 1) continue;
    LogPowerSeries term = d;
    term *= (bernoulli_number(j) / BigRational(fact)).to_xreal(f.bits());
    s += term;
  }
  return s;
}

LogPowerSeries alternating_sum_expansion(const LogPowerSeries& f) {
  // 1/(1 + e^-x) = 1/2 + sum_n (2^(2n) - 1) B_2n / (2n)! x^(2n-1)
  LogPowerSeries g = f;
  g *= XReal(1, f.bits()) / 2;
  LogPowerSeries d = f;
  mpz_class fact = 1;
  for (int j = 1; j <= f.max_power(); ++j) {
    d = d.derivative();
    if (j % 2 == 0) continue;
    const int two_n = j + 1;
    fact = 1;
    for (int k = 2; k <= two_n; ++k) fact *= k;
    mpz_class pow2 = 1;
    pow2 <<= two_n;
    const BigRational coef = bernoulli_number(two_n) * BigRational(mpz_class(pow2 - 1)) / BigRational(fact);
    LogPowerSeries term = d;
    term *= coef.to_xreal(f.bits());
    g += term;
  }
  return g;
}

LogPowerSeries geometric_sum_expansion(const LogPowerSeries& f, const BigRational& q) {
  if (!(abs(q) < BigRational(1))) throw DomainError("geometric smoothing needs |q| < 1");
  const int order = f.max_power();
  // lambda_r = sum_{d>=0} d^r q^d, from lambda_r (1 - q) = q sum_{i<r} C(r, i) lambda_i.
  std::vector<BigRational> lambda;
  const BigRational one_minus_q = BigRational(1) - q;
  lambda.push_back(BigRational(1) / one_minus_q);
  for (int r = 1; r <= order; ++r) {
    BigRational acc(0);
    for (int i = 0; i < r; ++i) acc += BigRational(binomial(r, i)) * lambda[i];
    lambda.push_back(q * acc / one_minus_q);
  }
  LogPowerSeries g = f;
  g *= lambda[0].to_xreal(f.bits());
  LogPowerSeries d = f;
  mpz_class fact = 1;
  for (int r = 1; r <= order; ++r) {
    d = d.derivative();
    fact *= r;
    BigRational coef = lambda[r] / BigRational(fact);
    if (r % 2 == 1) coef = -coef;
    LogPowerSeries term = d;
    term *= coef.to_xreal(f.bits());
    g += term;
  }
  return g;
}

}  // namespace polyzeta
