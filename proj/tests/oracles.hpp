#pragma once

// Brute-force reference computations. They use only elementary arithmetic
// (plus MPFR's own log where a closed form needs one) and never call into the
// algorithms under test.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "polyzeta/precision.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/xreal.hpp"

namespace oracle {

using polyzeta::BigRational;
using polyzeta::Bits;
using polyzeta::XReal;

/// zeta(3) = 5/2 sum_{n>=1} (-1)^(n-1) / (n^3 C(2n, n)).
XReal zeta3(Bits bits);
/// zeta(2) = 3 sum_{n>=1} 1 / (n^2 C(2n, n)).
XReal zeta2(Bits bits);
/// log 2 = sum_{k>=1} 1 / (k 2^k).
XReal log2(Bits bits);

/// sum_{k=1}^{terms} z^k / k^s.
XReal li_series(long s, const BigRational& z, long terms, Bits bits);

/// Li_{s_1..s_k}(z_1..z_k) by the nested loop N > n_1 > ... > n_k >= 1 in
/// long double, with running inner sums. Depth 1 to 3.
long double mpl_loop(const std::vector<int>& weights, const std::vector<double>& args, long n);
/// Upper bound on the terms the loop above drops (all |z_j| and products < 1).
long double mpl_loop_tail(const std::vector<int>& weights, const std::vector<double>& args, long n);

/// sum_{n1 > n2, n1 <= N} (1/2)^n1 (-1)^n2 / (n1 n2^2), as a literal double loop.
double li12_double_loop(long n);

/// sum over odd k <= K, m <= K, n <= K of 3^-n / (k (k+m) (k+m+n)).
double companion_triple_loop(long k_max);
/// Bound on what the truncated triple loop leaves out.
double companion_triple_tail(long k_max);

/// sum_{j<=J} sum_{k<=j} 1/k * 1/(j^2 2^j), and a bound on the rest.
double ramanujan_double_loop(long j_max);
double ramanujan_tail(long j_max);

/// sum_k C(n,k)^2 C(n+k,k)^2 with binomials from Pascal's triangle.
mpz_class apery_pascal(long n);
/// lcm(1..n) by repeated gcd.
unsigned long lcm_loop(unsigned long n);

struct Check {
  std::string name;
  XReal oracle;
  XReal value;
  XReal tolerance;
  bool passed = false;
  std::string note;
};

/// Every worked example whose expected value is computed rather than quoted:
/// the oracle runs first, then the implementation is compared against it.
std::vector<Check> derived_checks(const polyzeta::PrecisionPolicy& prec, bool include_full_suite = true);

}  // namespace oracle
