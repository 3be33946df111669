#pragma once

#include <vector>

#include "polyzeta/rational.hpp"
#include "polyzeta/xreal.hpp"

namespace polyzeta {

/// Truncated asymptotic expansion sum_{p<=P, i<=K} c[p][i] log(m)^i m^-p
/// of a sequence in the integer variable m.
class LogPowerSeries {
 public:
  LogPowerSeries(int max_power, int max_log, Bits bits);

  int max_power() const { return max_power_; }
  int max_log() const { return max_log_; }
  Bits bits() const { return bits_; }

  XReal& at(int p, int i) { return c_[index(p, i)]; }
  const XReal& at(int p, int i) const { return c_[index(p, i)]; }

  LogPowerSeries& operator+=(const LogPowerSeries& o);
  LogPowerSeries& operator*=(const XReal& factor);
  LogPowerSeries operator-() const;

  LogPowerSeries derivative() const;
  /// The expansion of F(m - 1).
  LogPowerSeries shifted_back() const;
  /// The expansion of m^-s F(m); terms beyond max_power are dropped.
  LogPowerSeries times_power(int s) const;
  /// Antiderivative without constant. Raises DomainError on m^0 terms.
  LogPowerSeries antiderivative() const;

  XReal evaluate(const XReal& m) const;

 private:
  std::size_t index(int p, int i) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(max_log_ + 1) + static_cast<std::size_t>(i);
  }

  int max_power_;
  int max_log_;
  Bits bits_;
  std::vector<XReal> c_;
};

/// S with S(m) - S(m-1) = F(m): the Euler-Maclaurin partial-sum expansion,
/// determined up to an additive constant (returned with constant term zero).
LogPowerSeries partial_sum_expansion(const LogPowerSeries& f);

/// G with G(m) + G(m-1) = F(m), so that sum_{n<=m} (-1)^n F(n) = C + (-1)^m G(m).
LogPowerSeries alternating_sum_expansion(const LogPowerSeries& f);

/// sum_{d>=0} q^d F(m - d) for a rational |q| < 1.
LogPowerSeries geometric_sum_expansion(const LogPowerSeries& f, const BigRational& q);

}  // namespace polyzeta
