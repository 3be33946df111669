#pragma once

#include <optional>
#include <string_view>

#include "polyzeta/precision.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/xreal.hpp"

namespace polyzeta {

enum class Constant { kPi, kLog2, kLog3, kZeta2, kZeta3, kEulerGamma };

std::optional<Constant> constant_from_name(std::string_view name);
std::string_view constant_name(Constant c);

XReal constant(Constant c, const PrecisionPolicy& prec);
/// Throws DomainError("unsupported constant ...") for names outside the catalog.
XReal constant(std::string_view name, const PrecisionPolicy& prec);

/// Riemann zeta at an integer s >= 2: partial sum plus Euler-Maclaurin tail.
XReal zeta_value(long s, Bits bits);

/// Exact Bernoulli number B_n with B_1 = -1/2, for 0 <= n <= 400.
const BigRational& bernoulli_number(int n);

/// B_2(x) or B_3(x); other degrees raise DomainError.
XReal bernoulli_poly(int n, const XReal& x);

/// lcm(1, ..., n), with lcm_upto(0) = 1.
BigRational lcm_upto(long n);

mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace polyzeta
