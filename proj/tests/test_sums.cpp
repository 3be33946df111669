#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/polylog.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/sums.hpp"

using namespace polyzeta;

namespace {

const PrecisionPolicy P = PrecisionPolicy::from_digits(50);

XReal num(double v) { return XReal::from_double(v, P.work_bits); }
XReal q(long a, long b) { return BigRational(a, b).to_xreal(P.work_bits); }

QuadResult catalog(CatalogId id) {
  IntegralSpec s;
  s.id = id;
  return catalog_eval(s, P);
}

}  // namespace

TEST_CASE("harmonic cache") {
  const HarmonicCache h(60);
  CHECK(h.size() == 60);
  CHECK(h.H(0).is_zero());
  for (std::size_t k = 1; k <= 60; ++k) {
    const BigRational kk(static_cast<long>(k));
    const BigRational sign = k % 2 ? BigRational(1) : BigRational(-1);
    CHECK(h.H(k) - h.H(k - 1) == BigRational(1) / kk);
    CHECK(h.H2(k) - h.H2(k - 1) == BigRational(1) / (kk * kk));
    CHECK(h.H2alt(k) - h.H2alt(k - 1) == sign / (kk * kk));
    CHECK(h.Halt(k) - h.Halt(k - 1) == sign / kk);
  }
  CHECK(h.H(4) == BigRational(25, 12));
  const auto shared = HarmonicCache::shared(100);
  CHECK(shared->size() >= 100);
  CHECK(shared->H(60) == h.H(60));
}

TEST_CASE("inner tails and the hypergeometric value") {
  const XReal ln2 = oracle::log2(P.work_bits);
  CHECK(abs(inner_tail(1, P) - ln2) <= P.tol());
  CHECK(abs(inner_tail(2, P) - (ln2 - q(1, 2))) <= P.tol());
  CHECK(inner_tail(2, P).to_double() == doctest::Approx(0.1931471806).epsilon(1e-10));
  CHECK(abs(hyp2f1_kk(1, P) - ln2) <= P.tol());
  CHECK(abs(hyp2f1_kk(2, P) - 2 * (ln2 - q(1, 2))) <= P.tol());
  for (long k = 1; k <= 50; ++k) {
    CAPTURE(k);
    const XReal t = inner_tail(k, P);
    CHECK(abs(hyp2f1_kk(k, P) - k * t) <= P.tol());
    CHECK(t > 0);
    CHECK(t <= ldexp(P.num(1), 2 - k) / k);
  }
}

TEST_CASE("double sums") {
  const XReal z3 = oracle::zeta3(P.work_bits);
  const XReal z2 = oracle::zeta2(P.work_bits);
  const XReal ln2 = oracle::log2(P.work_bits);
  CHECK(abs(s3(P) - z3 * 13 / 24) <= P.tol());
  CHECK(abs(s3_plus(P) - z3 * 5 / 8) <= P.tol());
  CHECK(abs(ramanujan(P) - (z3 - z2 / 2 * ln2)) <= P.tol());
  CHECK(s3(P).to_double() == doctest::Approx(0.6511141559).epsilon(1e-10));
  CHECK(s3_plus(P).to_double() == doctest::Approx(0.7512855645).epsilon(1e-10));
  CHECK(ramanujan(P).to_double() == doctest::Approx(0.6319661978).epsilon(1e-10));
  const double brute = oracle::ramanujan_double_loop(200);
  CHECK(std::abs(ramanujan(P).to_double() - brute) <= oracle::ramanujan_tail(200) + 1e-14);
}

TEST_CASE("truncation soundness at three precisions") {
  for (int digits : {30, 50, 100}) {
    const auto p = PrecisionPolicy::from_digits(digits);
    for (DoubleSum which : {DoubleSum::kS3, DoubleSum::kS3Plus, DoubleSum::kRamanujan}) {
      const auto chosen = double_sum(which, p);
      CHECK(chosen.bound < p.tol());
      for (long k : {5L, 20L, chosen.terms}) {
        CAPTURE(digits);
        CAPTURE(k);
        const auto a = double_sum(which, k, p);
        const auto b = double_sum(which, 2 * k, p);
        CHECK(abs(a.value - b.value) <= a.bound);
        CHECK(b.bound <= a.bound);
      }
    }
  }
}

TEST_CASE("companion sum") {
  const XReal z3 = oracle::zeta3(P.work_bits);
  const auto c = companion(P);
  CHECK(abs(c.value - z3 * 13 / 48) < num(1e-8));
  // the reported estimate covers the true error
  CHECK(abs(c.value - z3 * 13 / 48) <= c.error + P.tol());
  CHECK(c.value.to_double() == doctest::Approx(0.3255570780).epsilon(1e-10));
  // the n = 1 slice alone is log(2)/3
  CHECK(oracle::log2(P.work_bits) / 3 <= c.value);
  const double brute = oracle::companion_triple_loop(400);
  const double tail = oracle::companion_triple_tail(400);
  const double gap = c.value.to_double() - brute;
  CHECK(gap >= 0.0);
  CHECK(gap <= tail);
}

TEST_CASE("companion at 100 digits") {
  const auto p = PrecisionPolicy::from_digits(100);
  const auto c = companion(p);
  CHECK(abs(c.value - oracle::zeta3(p.work_bits) * 13 / 48) <= c.error + p.tol());
  CHECK(c.error < XReal::from_double(1e-10, p.work_bits));
}

TEST_CASE("g, h and h-tilde") {
  const XReal z3 = oracle::zeta3(P.work_bits);
  const XReal z2 = oracle::zeta2(P.work_bits);
  const XReal ln2 = oracle::log2(P.work_bits);
  const XReal half = q(1, 2);
  const XReal li3h = li(3, half, P);
  CHECK(abs(h_fn(half, P) + li3h - z3 * 5 / 8) <= P.tol());
  CHECK(abs(g_fn(half, P) + li3h - (z3 - z2 / 2 * ln2)) <= P.tol());
  CHECK(abs(h_tilde(half, P) - li(3, -half, P) - s3(P)) <= P.tol());
  for (SumPath path : {SumPath::kSeries, SumPath::kClosed}) {
    CHECK(g_fn(P.zero(), P, path).is_zero());
    CHECK(h_fn(P.zero(), P, path).is_zero());
    CHECK(h_tilde(P.zero(), P, path).is_zero());
  }
  for (long n : {1L, 10L, 25L, 50L, 75L, 90L}) {
    const XReal z = q(n, 100);
    CAPTURE(n);
    CHECK(abs(g_fn(z, P) - g_fn(z, P, SumPath::kClosed)) <= P.tol());
    CHECK(abs(h_fn(z, P) - h_fn(z, P, SumPath::kClosed)) <= P.tol());
    CHECK(abs(h_tilde(z, P) - h_tilde(z, P, SumPath::kClosed)) <= P.tol());
  }
  CHECK_THROWS_AS(g_fn(P.num(1), P), DomainError);
  CHECK_THROWS_AS(h_fn(q(3, 2), P, SumPath::kClosed), DomainError);
  CHECK_THROWS_AS(h_tilde(q(-1, 2), P, SumPath::kClosed), DomainError);
  CHECK(abs(h_fn(q(-1, 2), P) - h_fn(q(-1, 2), P, SumPath::kSeries)) <= P.tol());
}

TEST_CASE("h' = Li2(z)/(1 - z)") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> dist(100, 600);
  const XReal delta = ldexp(P.num(1), -40);
  for (int i = 0; i < 10; ++i) {
    const XReal z = q(dist(rng), 1000);
    const XReal fd = (h_fn(z + delta, P) - h_fn(z - delta, P)) / (2 * delta);
    CHECK(abs(fd - li(2, z, P) / (1 - z)) < num(1e-8));
  }
}

TEST_CASE("integral forms of the double sum") {
  const XReal sum = s3(P);
  const XReal z3 = oracle::zeta3(P.work_bits);
  const auto z3d = catalog(CatalogId::kZ3Direct);
  CHECK(abs(z3d.value - (z3 * 3 / 4 - sum)) <= P.tol() + 10 * z3d.est_error);
  const auto rat = catalog(CatalogId::kS3Rational);
  const auto trig = catalog(CatalogId::kS3Trig);
  CHECK(abs(rat.value - sum) <= P.tol() + 10 * rat.est_error);
  CHECK(abs(trig.value - sum) <= P.tol() + 10 * trig.est_error);
  const auto ll = catalog(CatalogId::kS3LogLog);
  const XReal mh = q(-1, 2);
  const XReal rhs = ll.value - li(3, mh, P) - oracle::log2(P.work_bits) * li(2, mh, P);
  CHECK(abs(sum - rhs) <= P.tol() + 10 * ll.est_error);
}

TEST_CASE("Apery numbers") {
  CHECK(apery_A(0) == 1);
  CHECK(apery_A(1) == 5);
  CHECK(apery_A(2) == 73);
  CHECK(apery_A(3) == 1445);
  for (long n = 0; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(apery_A(n) == oracle::apery_pascal(n));
  }
}

TEST_CASE("Beukers decomposition") {
  const XReal z3 = oracle::zeta3(P.work_bits);
  for (long n = 0; n <= 3; ++n) {
    CAPTURE(n);
    const auto d = beukers_decompose(n, P);
    CHECK(d.A == oracle::apery_pascal(n));
    CHECK(d.residue < num(1e-4));
    CHECK(d.J > d.J_error);
    CHECK(abs(d.B - (d.J - BigRational(d.A).to_xreal(P.work_bits) * z3)) <= P.tol());
  }
  const auto one = beukers_decompose(1, P);
  CHECK(one.b_scaled == -6);
  CHECK(abs(one.B + 6) < num(1e-8));
  CHECK_THROWS_AS(beukers_decompose(4, P), UnsupportedError);
  CHECK_THROWS_AS(beukers_decompose(-1, P), DomainError);
}
