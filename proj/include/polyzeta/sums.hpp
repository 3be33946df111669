#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "polyzeta/multipolylog.hpp"
#include "polyzeta/precision.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/xreal.hpp"

namespace polyzeta {

/// Exact harmonic-type partial sums for 0 <= k <= size(); index 0 holds 0.
class HarmonicCache {
 public:
  explicit HarmonicCache(std::size_t n);

  std::size_t size() const { return h_.size() - 1; }
  /// sum_{j<=k} 1/j
  const BigRational& H(std::size_t k) const { return h_.at(k); }
  /// sum_{j<=k} 1/j^2
  const BigRational& H2(std::size_t k) const { return h2_.at(k); }
  /// sum_{j<=k} (-1)^(j-1)/j^2
  const BigRational& H2alt(std::size_t k) const { return h2alt_.at(k); }
  /// sum_{j<=k} (-1)^(j-1)/j
  const BigRational& Halt(std::size_t k) const { return halt_.at(k); }

  /// A process-wide cache holding at least n entries. Safe to call concurrently.
  static std::shared_ptr<const HarmonicCache> shared(std::size_t n);

 private:
  std::vector<BigRational> h_, h2_, h2alt_, halt_;
};

/// sum_{j>=k} 1/(j 2^j) = log 2 - sum_{j<k} 1/(j 2^j), with the finite sum exact.
XReal inner_tail(long k, const PrecisionPolicy& prec);

/// 2F1(k, k; k+1; -1) = 2^-k sum_{j>=0} k/(k+j) 2^-j after a Pfaff transformation.
XReal hyp2f1_kk(long k, const PrecisionPolicy& prec);

enum class DoubleSum {
  kS3,         // sum_k sum_{j>=k} (-1)^(k-1)/k^2 * 1/(j 2^j)
  kS3Plus,     // sum_k sum_{j>=k} 1/k^2 * 1/(j 2^j)
  kRamanujan,  // sum_k sum_{j>=k} 1/k * 1/(j^2 2^j)
};

struct TruncatedSum {
  XReal value;
  /// Certified bound on |full sum - value|.
  XReal bound;
  long terms = 0;
};

/// The outer sum cut after `terms` values of k.
TruncatedSum double_sum(DoubleSum which, long terms, const PrecisionPolicy& prec);
/// Cut where the certified bound drops below tol/16.
TruncatedSum double_sum(DoubleSum which, const PrecisionPolicy& prec);

XReal s3(const PrecisionPolicy& prec);
XReal s3_plus(const PrecisionPolicy& prec);
XReal ramanujan(const PrecisionPolicy& prec);

/// sum over odd k and m, n >= 1 of 3^-n / (k (k+m) (k+m+n)). The m-sum is
/// (H_{k+n} - H_k)/n; the k-tail comes from an asymptotic expansion in 1/k.
Estimate companion(const PrecisionPolicy& prec);

enum class SumPath { kSeries, kClosed };

/// g(z) = sum_k H_k z^(k+1)/(k+1)^2.
XReal g_fn(const XReal& z, const PrecisionPolicy& prec, SumPath path = SumPath::kSeries);
/// h(z) = sum_k H2_k z^(k+1)/(k+1).
XReal h_fn(const XReal& z, const PrecisionPolicy& prec, SumPath path = SumPath::kSeries);
/// h~(z) = sum_k H2alt_k z^(k+1)/(k+1); the closed path integrates log(1-t) log(1+t)/t.
XReal h_tilde(const XReal& z, const PrecisionPolicy& prec, SumPath path = SumPath::kSeries);

/// sum_k C(n,k)^2 C(n+k,k)^2
mpz_class apery_A(long n);

struct BeukersDecomposition {
  mpz_class A;
  XReal J;
  XReal J_error;
  /// J - A zeta(3)
  XReal B;
  /// |d_n^3 B - nearest integer|, d_n = lcm(1..n)
  XReal residue;
  /// Nearest integer to d_n^3 B.
  mpz_class b_scaled;
};

/// Splits the Beukers integral J_n into A(n) zeta(3) + B(n); n <= 3.
BeukersDecomposition beukers_decompose(long n, const PrecisionPolicy& prec);

}  // namespace polyzeta
