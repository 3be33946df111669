#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polyzeta/constants.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/precision.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/xreal.hpp"

using namespace polyzeta;

namespace {

XReal q(long a, long b, Bits bits) { return BigRational(a, b).to_xreal(bits); }

}  // namespace

TEST_CASE("precision policy") {
  const auto p50 = PrecisionPolicy::from_digits(50);
  CHECK(p50.work_bits == 171);
  CHECK(p50.guard_bits == 32);
  CHECK(PrecisionPolicy::from_digits(100).work_bits == 337);
  CHECK(p50.tol() == ldexp(XReal(1, 171), 32 - 171));
  // tol shrinks as the working width grows
  for (Bits b = 64; b < 1024; b += 37) {
    CHECK(PrecisionPolicy::from_bits(b + 1).tol() < PrecisionPolicy::from_bits(b).tol());
  }
  CHECK(PrecisionPolicy::from_bits(10).work_bits == XReal::kMinBits);
}

TEST_CASE("xreal width rules") {
  const XReal a(1, 100);
  const XReal b(3, 300);
  CHECK((a / b).bits() == 300);
  CHECK((a + 1).bits() == 100);
  CHECK(XReal(1, 8).bits() >= XReal::kMinBits);
  CHECK(XReal::parse("1/8", 80) == XReal::parse("0.125", 80));
  CHECK(q(-1, 3, 64).to_string(5) == "-3.3333e-01");
  CHECK(XReal(0, 64).to_string(3) == "0.00e+00");
}

TEST_CASE("rationals stay reduced") {
  const BigRational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(BigRational::parse("0.125") == BigRational(1, 8));
  CHECK(BigRational::parse("-2.5e-1") == BigRational(-1, 4));
  CHECK(BigRational::parse(" 3 / 9 ") == BigRational(1, 3));
  CHECK(BigRational::parse("7").to_string() == "7");
  CHECK_THROWS_AS(BigRational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(BigRational::parse("abc"), ParseError);
  CHECK_THROWS_AS(BigRational::parse(""), ParseError);
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), DomainError);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int i = 0; i < 500; ++i) {
    long a = dist(rng);
    long b = dist(rng);
    if (a == 0) a = 1;
    if (b == 0) b = -7;
    const BigRational x(a, b);
    const BigRational y(b, a);
    CHECK(x * y == BigRational(1));
    CHECK(x.denominator() > 0);
    CHECK(BigRational::parse(x.to_string()) == x);
  }
}

TEST_CASE("constants against independent series") {
  for (int digits : {30, 50, 100}) {
    const auto p = PrecisionPolicy::from_digits(digits);
    CAPTURE(digits);
    CHECK(abs(constant(Constant::kZeta3, p) - oracle::zeta3(p.work_bits)) <= p.tol());
    CHECK(abs(constant(Constant::kZeta2, p) - oracle::zeta2(p.work_bits)) <= p.tol());
    CHECK(abs(constant(Constant::kLog2, p) - oracle::log2(p.work_bits)) <= p.tol());
  }
  const auto p = PrecisionPolicy::from_digits(50);
  CHECK(constant(Constant::kZeta3, p).to_string(20) == "1.2020569031595942854e+00");
  CHECK(constant(Constant::kZeta2, p).to_string(17) == "1.6449340668482264e+00");
  CHECK(constant(Constant::kLog2, p) == log(XReal(2, p.work_bits)));
  CHECK(constant(Constant::kZeta2, p) == square(XReal::pi(p.work_bits)) / 6);
  CHECK(constant("zeta3", p) == constant(Constant::kZeta3, p));
  CHECK(constant(Constant::kZeta3, p) == constant(Constant::kZeta3, p));
}

TEST_CASE("unknown constant") {
  const auto p = PrecisionPolicy::from_digits(20);
  CHECK_THROWS_WITH_AS(constant("zeta5", p), doctest::Contains("unsupported constant"), DomainError);
}

TEST_CASE("constant stability under 64 more bits") {
  for (int digits : {20, 50, 80}) {
    const auto p = PrecisionPolicy::from_digits(digits);
    const auto wide = p.widened(64);
    for (Constant c : {Constant::kPi, Constant::kLog2, Constant::kLog3, Constant::kZeta2, Constant::kZeta3,
                       Constant::kEulerGamma}) {
      CAPTURE(constant_name(c));
      CHECK(abs(constant(c, p) - constant(c, wide)) < p.tol());
      CHECK(abs(constant(c, p) - constant(c, wide)) < ldexp(XReal(1, 64), 8 - p.work_bits));
    }
  }
}

TEST_CASE("zeta at integers") {
  const Bits bits = 200;
  CHECK(abs(zeta_value(2, bits) - oracle::zeta2(bits)) < ldexp(XReal(1, bits), 8 - bits));
  CHECK(abs(zeta_value(3, bits) - oracle::zeta3(bits)) < ldexp(XReal(1, bits), 8 - bits));
  // zeta(4) = 2/5 * zeta(2)^2
  const XReal z2 = oracle::zeta2(bits);
  CHECK(abs(zeta_value(4, bits) - z2 * z2 * 2 / 5) < ldexp(XReal(1, bits), 8 - bits));
}

TEST_CASE("bernoulli polynomials") {
  const Bits bits = 128;
  const XReal eps = ldexp(XReal(1, bits), -120);
  CHECK(abs(bernoulli_poly(2, XReal(0, bits)) - q(1, 6, bits)) < eps);
  CHECK(bernoulli_poly(3, XReal(0, bits)).is_zero());
  // x^2 - x + 1/6 at 1/2, worked out by substitution
  const BigRational h(1, 2);
  CHECK(abs(bernoulli_poly(2, h.to_xreal(bits)) - (h * h - h + BigRational(1, 6)).to_xreal(bits)) < eps);
  CHECK(abs(bernoulli_poly(2, h.to_xreal(bits)) - q(-1, 12, bits)) < eps);
  CHECK_THROWS_AS(bernoulli_poly(4, XReal(0, bits)), DomainError);
  CHECK_THROWS_AS(bernoulli_poly(1, XReal(0, bits)), DomainError);
  CHECK(bernoulli_number(2) == BigRational(1, 6));
  CHECK(bernoulli_number(12) == BigRational(-691, 2730));
}

TEST_CASE("bernoulli symmetry B2(x) = B2(1 - x)") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-300, 300);
  const Bits bits = 128;
  for (int i = 0; i < 50; ++i) {
    const BigRational x(dist(rng), 97);
    const XReal d = bernoulli_poly(2, x.to_xreal(bits)) - bernoulli_poly(2, (BigRational(1) - x).to_xreal(bits));
    CHECK(abs(d) < ldexp(XReal(1, bits), -100));
  }
}

TEST_CASE("lcm of 1..n") {
  CHECK(lcm_upto(0) == BigRational(1));
  CHECK(lcm_upto(1) == BigRational(1));
  CHECK(lcm_upto(4) == BigRational(12));
  CHECK(lcm_upto(10) == BigRational(2520));
  for (long n = 0; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(lcm_upto(n) == BigRational(mpz_class(std::to_string(oracle::lcm_loop(static_cast<unsigned long>(n))))));
  }
}
