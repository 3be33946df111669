#include "polyzeta/constants.hpp"

#include <array>
#include <string>
#include <vector>

#include "polyzeta/errors.hpp"

namespace polyzeta {

namespace {

constexpr int kMaxBernoulli = 400;

constexpr std::array<std::pair<Constant, std::string_view>, 6> kNames{{
    {Constant::kPi, "pi"},
    {Constant::kLog2, "log2"},
    {Constant::kLog3, "log3"},
    {Constant::kZeta2, "zeta2"},
    {Constant::kZeta3, "zeta3"},
    {Constant::kEulerGamma, "euler_gamma"},
}};

std::vector<BigRational> compute_bernoulli() {
  std::vector<BigRational> b(kMaxBernoulli + 1);
  b[0] = BigRational(1);
  b[1] = BigRational(-1, 2);
  for (int m = 2; m <= kMaxBernoulli; ++m) {
    if (m % 2 == 1) continue;
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    mpq_class acc = 0;
    mpz_class c = 1;  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      acc += mpq_class(c) * b[k].get();
      c = c * (m + 1 - k) / (k + 1);
    }
    b[m] = BigRational(mpq_class(-acc / mpq_class(m + 1)));
  }
  return b;
}

}  // namespace

std::optional<Constant> constant_from_name(std::string_view name) {
  for (const auto& [c, n] : kNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string_view constant_name(Constant c) {
  for (const auto& [k, n] : kNames) {
    if (k == c) return n;
  }
  return "?";
}

const BigRational& bernoulli_number(int n) {
  static const std::vector<BigRational> table = compute_bernoulli();
  if (n < 0 || n > kMaxBernoulli) {
    throw UnsupportedError("Bernoulli number index out of range: " + std::to_string(n));
  }
  return table[static_cast<std::size_t>(n)];
}

XReal zeta_value(long s, Bits bits) {
  if (s < 2) throw DomainError("zeta_value requires s >= 2");
  const Bits wp = bits + 16;
  const long n_cut = 16 + static_cast<long>(bits) / 4;
  XReal sum(0, wp);
  for (long n = n_cut - 1; n >= 1; --n) sum += pow(XReal(n, wp), -s);

  const XReal big_n(n_cut, wp);
  const XReal inv_n = 1 / big_n;
  XReal n_pow = pow(big_n, 1 - s);  // N^(1-s)
  sum += n_pow / (s - 1);
  n_pow *= inv_n;  // N^-s
  sum += n_pow / 2;

  // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1)
  const XReal eps = ldexp(XReal(1, wp), -static_cast<long>(wp));
  XReal factor = n_pow * s;  // s(s+1)...(s+2j-2) N^(-s-2j+2)
  mpz_class fact = 2;        // (2j)!
  for (int j = 1; 2 * j <= kMaxBernoulli; ++j) {
    if (j > 1) {
      factor *= (s + 2 * j - 3);
      factor *= (s + 2 * j - 2);
      factor *= square(inv_n);
      fact *= (2 * j - 1) * (2 * j);
    }
    XReal term = bernoulli_number(2 * j).to_xreal(wp) * factor / BigRational(mpz_class(fact)).to_xreal(wp);
    term *= inv_n;
    sum += term;
    if (abs(term) < eps) break;
  }
  return sum.with_bits(bits);
}

XReal constant(Constant c, const PrecisionPolicy& prec) {
  const Bits b = prec.work_bits;
  switch (c) {
    case Constant::kPi:
      return XReal::pi(b);
    case Constant::kLog2:
      return XReal::ln2(b);
    case Constant::kLog3:
      return log(XReal(3, b));
    case Constant::kZeta2:
      return square(XReal::pi(b)) / 6;
    case Constant::kZeta3:
      return zeta_value(3, b);
    case Constant::kEulerGamma:
      return XReal::euler_gamma(b);
  }
  throw DomainError("unsupported constant");
}

XReal constant(std::string_view name, const PrecisionPolicy& prec) {
  const auto c = constant_from_name(name);
  if (!c) throw DomainError("unsupported constant: '" + std::string(name) + "'");
  return constant(*c, prec);
}

XReal bernoulli_poly(int n, const XReal& x) {
  switch (n) {
    case 2: {
      XReal r = square(x) - x;
      r += XReal(1, x.bits()) / 6;
      return r;
    }
    case 3: {
      XReal r = pow(x, 3) - 3 * square(x) / 2;
      r += x / 2;
      return r;
    }
    default:
      throw DomainError("bernoulli_poly supports only n = 2 and n = 3");
  }
}

BigRational lcm_upto(long n) {
  mpz_class d = 1;
  for (long k = 2; k <= n; ++k) {
    mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return BigRational(d);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace polyzeta
