#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/multipolylog.hpp"
#include "polyzeta/polylog.hpp"

using namespace polyzeta;

namespace {

const PrecisionPolicy P = PrecisionPolicy::from_digits(50);

BigRational R(long a, long b = 1) { return BigRational(a, b); }

XReal num(double v) { return XReal::from_double(v, P.work_bits); }

// Passes when |a - b| is covered by both reported errors plus tol.
bool agree(const Estimate& a, const Estimate& b) {
  return abs(a.value - b.value) <= P.tol() + 10 * (a.error + b.error);
}

}  // namespace

TEST_CASE("classification") {
  const MPLSpec a{{2, 1}, {R(1, 2), R(2)}};
  CHECK(ys_of(a) == std::vector<BigRational>{R(2), R(1)});
  CHECK(mpl_classify(a) == MplClass::kHarmonicTail);
  const MPLSpec b{{1, 1, 1}, {R(1, 3), R(3, 2), R(2)}};
  CHECK(ys_of(b) == std::vector<BigRational>{R(3), R(2), R(1)});
  CHECK(mpl_classify(b) == MplClass::kHarmonicTail);
  CHECK(mpl_classify(MPLSpec{{2, 1}, {R(1), R(1)}}) == MplClass::kHarmonicTail);
  CHECK(mpl_classify(MPLSpec{{1, 2}, {R(1, 2), R(-1)}}) == MplClass::kGeometric);
  CHECK(mpl_classify(MPLSpec{{1, 1}, {R(1), R(1, 2)}}) == MplClass::kDivergent);
  CHECK(mpl_classify(MPLSpec{{2, 1}, {R(1, 2), R(4)}}) == MplClass::kDivergent);
  CHECK(mpl_classify(MPLSpec{{2}, {R(0)}}) == MplClass::kGeometric);
}

TEST_CASE("l-notation conversions") {
  const LNotationSpec l{{1, 2}, {R(2), R(-2)}};
  const MPLSpec m = to_mpl(l);
  CHECK(m.args == std::vector<BigRational>{R(1, 2), R(-1)});
  CHECK(to_l_notation(m) == l);
  CHECK(l.to_string() == "l(1,2; 2,-2)");
  CHECK(m.to_string() == "Li_{1,2}(1/2,-1)");
  CHECK(m.weight() == 3);
  CHECK_THROWS_AS(to_mpl(LNotationSpec{{1, 2}, {R(2), R(0)}}), DomainError);
  CHECK_THROWS_AS(l_eval(LNotationSpec{{3}, {R(0)}}, P), DomainError);
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(validate(MPLSpec{{2, 1}, {R(1, 2)}}), DomainError);
  CHECK_THROWS_AS(validate(MPLSpec{{0}, {R(1, 2)}}), DomainError);
  CHECK_THROWS_AS(validate(MPLSpec{{}, {}}), DomainError);
  CHECK_THROWS_AS(mpl_eval(MPLSpec{{1, 1, 1, 1}, {R(1, 2), R(1, 2), R(1, 2), R(1, 2)}}, P), UnsupportedError);
  CHECK_THROWS_AS(mpl_eval(MPLSpec{{1, 1}, {R(1), R(1, 2)}}, P), DomainError);
  CHECK_THROWS_AS(mzv({1, 2}, P), DomainError);
}

TEST_CASE("worked examples") {
  const XReal z3 = oracle::zeta3(P.work_bits);
  const XReal z2 = oracle::zeta2(P.work_bits);
  const auto z21 = mpl_eval(MPLSpec{{2, 1}, {R(1), R(1)}}, P);
  CHECK(abs(z21.value - z3) <= P.tol() + z21.error);
  CHECK(z21.error < num(1e-30));

  const double loop_n = oracle::li12_double_loop(10000);
  const double loop_2n = oracle::li12_double_loop(20000);
  CHECK(std::abs(loop_n - loop_2n) < 1e-15);
  const auto li12 = mpl_eval(MPLSpec{{1, 2}, {R(1, 2), R(-1)}}, P);
  CHECK(abs(li12.value - num(loop_2n)) < num(1e-13));
  CHECK(li12.value.to_double() == doctest::Approx(-0.178517).epsilon(1e-5));

  CHECK(mpl_eval(MPLSpec{{2, 1}, {R(0), R(5)}}, P).value.is_zero());
  CHECK(mpl_eval(MPLSpec{{3}, {R(0)}}, P).value.is_zero());

  const auto l111 = mpl_eval(MPLSpec{{1, 1, 1}, {R(1, 3), R(3), R(1)}}, P);
  CHECK(abs(l111.value + li(3, BigRational(-1, 2).to_xreal(P.work_bits), P)) <= P.tol() + 10 * l111.error);

  CHECK(abs(mzv({3}, P).value - z3) <= P.tol());
  CHECK(abs(mzv({2}, P).value - z2) <= P.tol());
  const auto m21 = mzv({2, 1}, P);
  CHECK(abs(m21.value - z3) <= P.tol() + m21.error);
}

TEST_CASE("l-notation examples") {
  CHECK(agree(l_eval(LNotationSpec{{1, 2}, {R(2), R(-2)}}, P), mpl_eval(MPLSpec{{1, 2}, {R(1, 2), R(-1)}}, P)));
  const auto l3 = l_eval(LNotationSpec{{3}, {R(1)}}, P);
  CHECK(abs(l3.value - oracle::zeta3(P.work_bits)) <= P.tol() + l3.error);
  const auto lm = l_eval(LNotationSpec{{3}, {R(-2)}}, P);
  CHECK(abs(lm.value - li(3, BigRational(-1, 2).to_xreal(P.work_bits), P)) <= P.tol());
}

TEST_CASE("geometric class against the N = 2000 nested loop") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> depth_dist(1, 3);
  std::uniform_int_distribution<int> weight_dist(1, 3);
  std::uniform_int_distribution<long> num_dist(3, 8);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    // Random y_j with 3/2 <= |y_j| <= 4, then z from the l-notation map.
    const int depth = depth_dist(rng);
    LNotationSpec l;
    for (int j = 0; j < depth; ++j) {
      l.weights.push_back(weight_dist(rng));
      l.ys.push_back(BigRational(num_dist(rng) * (sign_dist(rng) ? 1 : -1), 2));
    }
    const MPLSpec spec = to_mpl(l);
    REQUIRE(mpl_classify(spec) == MplClass::kGeometric);
    std::vector<double> args;
    for (const auto& z : spec.args) args.push_back(z.to_double());
    const long double loop = oracle::mpl_loop(spec.weights, args, 2000);
    const long double tail = oracle::mpl_loop_tail(spec.weights, args, 2000);
    const auto r = mpl_eval(spec, P);
    CAPTURE(spec.to_string());
    CHECK(r.error <= P.tol());
    CHECK(std::fabs(static_cast<long double>(r.value.to_double()) - loop) <= tail + 1e-15L);
  }
}

TEST_CASE("stuffle relation Li2(a) Li1(b) = Li_{2,1}(a,b) + Li_{1,2}(b,a) + Li3(ab)") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> dist(-49, 49);
  for (int trial = 0; trial < 20; ++trial) {
    long an = dist(rng);
    long bn = dist(rng);
    if (an == 0) an = 17;
    if (bn == 0) bn = -23;
    const BigRational a(an, 100);
    const BigRational b(bn, 100);
    const Bits w = P.work_bits;
    const XReal lhs = li(2, a.to_xreal(w), P) * li(1, b.to_xreal(w), P);
    const XReal rhs = mpl_eval(MPLSpec{{2, 1}, {a, b}}, P).value + mpl_eval(MPLSpec{{1, 2}, {b, a}}, P).value +
                      li(3, (a * b).to_xreal(w), P);
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CHECK(abs(lhs - rhs) <= P.tol());
  }
}

TEST_CASE("double sum in polylogarithm form") {
  const auto li12 = mpl_eval(MPLSpec{{1, 2}, {R(1, 2), R(-1)}}, P);
  const XReal s3 = -li12.value - li(3, BigRational(-1, 2).to_xreal(P.work_bits), P);
  CHECK(abs(s3 - oracle::zeta3(P.work_bits) * 13 / 24) <= P.tol() + 10 * li12.error);
}

TEST_CASE("depth-three rewritings") {
  CHECK(agree(mpl_eval(MPLSpec{{1, 2}, {R(1, 2), R(-1)}}, P), mpl_eval(MPLSpec{{1, 1, 1}, {R(1, 3), R(3), R(-1)}}, P)));
  const auto l111 = mpl_eval(MPLSpec{{1, 1, 1}, {R(1, 3), R(3), R(1)}}, P);
  CHECK(abs(l111.value + li(3, BigRational(-1, 2).to_xreal(P.work_bits), P)) <= P.tol() + 10 * l111.error);
}

TEST_CASE("harmonic-tail estimates cover the true error") {
  const XReal z3 = oracle::zeta3(P.work_bits);
  const XReal z2 = oracle::zeta2(P.work_bits);
  const XReal ln2 = oracle::log2(P.work_bits);
  // zeta(2,1) = zeta(3)
  const auto a = mpl_eval(MPLSpec{{2, 1}, {R(1), R(1)}}, P);
  CHECK(abs(a.value - z3) <= a.error + P.tol());
  // Li_{2,1}(-1, -1) = pi^2/4 log 2 - 13/8 zeta(3)
  const auto b = mpl_eval(MPLSpec{{2, 1}, {R(-1), R(-1)}}, P);
  CHECK(abs(b.value - (z2 * 3 / 2 * ln2 - z3 * 13 / 8)) <= b.error + P.tol());
  // combination reproducing the triple integral, 5/24 zeta(3)
  const auto c = mpl_eval(MPLSpec{{2, 1}, {R(1, 2), R(2)}}, P);
  const auto d = mpl_eval(MPLSpec{{1, 1, 1}, {R(1, 3), R(3, 2), R(2)}}, P);
  const XReal combo = z3 * 19 / 8 - 2 * ln2 * z2 - c.value - d.value;
  CHECK(abs(combo - z3 * 5 / 24) <= P.tol() + 10 * (c.error + d.error));
  CHECK(c.error + d.error < num(1e-20));
}

TEST_CASE("precision 100 digits") {
  const auto p = PrecisionPolicy::from_digits(100);
  const auto r = mpl_eval(MPLSpec{{2, 1}, {R(1), R(1)}}, p);
  CHECK(abs(r.value - oracle::zeta3(p.work_bits)) <= p.tol() + r.error);
  const auto g = mpl_eval(MPLSpec{{1, 2}, {R(1, 2), R(-1)}}, p);
  CHECK(g.error <= p.tol());
}
