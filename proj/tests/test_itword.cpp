#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/itword.hpp"
#include "polyzeta/polylog.hpp"

using namespace polyzeta;

namespace {

const PrecisionPolicy P = PrecisionPolicy::from_digits(50);

BigRational R(long a, long b = 1) { return BigRational(a, b); }

SignedWord W(int sign, std::vector<BigRational> letters) { return SignedWord{sign, std::move(letters)}; }

XReal num(double v) { return XReal::from_double(v, P.work_bits); }

}  // namespace

TEST_CASE("encode") {
  CHECK(encode(LNotationSpec{{2, 1}, {R(1), R(1)}}) == W(1, {R(0), R(1), R(1)}));
  CHECK(encode(LNotationSpec{{1, 2}, {R(2), R(-2)}}) == W(1, {R(2), R(0), R(-2)}));
  CHECK(encode(LNotationSpec{{3}, {R(-2)}}) == W(-1, {R(0), R(0), R(-2)}));
  CHECK_THROWS_AS(encode(LNotationSpec{{3}, {R(0)}}), DomainError);
  CHECK_THROWS_AS(encode(LNotationSpec{{3, 1}, {R(2)}}), DomainError);
}

TEST_CASE("dual") {
  CHECK(dual(W(1, {R(0), R(1), R(1)})) == W(-1, {R(0), R(0), R(1)}));
  CHECK(dual(W(1, {R(2), R(0), R(-2)})) == W(-1, {R(3), R(1), R(-1)}));
  CHECK(dual(W(-1, {R(1, 3)})) == W(1, {R(2, 3)}));
}

TEST_CASE("decode") {
  const Decoded a = decode(W(-1, {R(0), R(0), R(1)}));
  CHECK(a.coefficient == 1);
  CHECK(a.spec == LNotationSpec{{3}, {R(1)}});
  const Decoded b = decode(W(-1, {R(3), R(1), R(-1)}));
  CHECK(b.coefficient == 1);
  CHECK(b.spec == LNotationSpec{{1, 1, 1}, {R(3), R(1), R(-1)}});
  CHECK_THROWS_WITH_AS(decode(W(1, {R(1), R(0)})), doctest::Contains("non-decodable word"), DomainError);
  CHECK_THROWS_AS(decode(W(1, {})), DomainError);
}

TEST_CASE("duality chains, structurally") {
  struct Chain {
    LNotationSpec input;
    SignedWord word;
    SignedWord dual_word;
    int coefficient;
    LNotationSpec output;
  };
  const std::vector<Chain> chains = {
      {{{2, 1}, {R(1), R(1)}}, W(1, {R(0), R(1), R(1)}), W(-1, {R(0), R(0), R(1)}), 1, {{3}, {R(1)}}},
      {{{1, 2}, {R(2), R(-2)}}, W(1, {R(2), R(0), R(-2)}), W(-1, {R(3), R(1), R(-1)}), 1,
       {{1, 1, 1}, {R(3), R(1), R(-1)}}},
      {{{3}, {R(-2)}}, W(-1, {R(0), R(0), R(-2)}), W(1, {R(3), R(1), R(1)}), -1, {{1, 1, 1}, {R(3), R(1), R(1)}}},
  };
  for (const auto& c : chains) {
    CAPTURE(c.input.to_string());
    const SignedWord w = encode(c.input);
    CHECK(w == c.word);
    const SignedWord d = dual(w);
    CHECK(d == c.dual_word);
    const Decoded out = decode(d);
    CHECK(out.coefficient == c.coefficient);
    CHECK(out.spec == c.output);
  }
}

TEST_CASE("serialization") {
  const SignedWord w = W(-1, {R(3), R(1), R(-1)});
  CHECK(w.to_string() == "-[3,1,-1]");
  CHECK(SignedWord::parse("-[3,1,-1]") == w);
  CHECK(SignedWord::parse(" [1/2, 0, -2] ") == W(1, {R(1, 2), R(0), R(-2)}));
  CHECK(SignedWord::parse("+[0.5]") == W(1, {R(1, 2)}));
  for (const char* bad : {"", "[", "+[1,]", "*[1]", "-[1,2", "+[a]", "+[1]x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(SignedWord::parse(bad), ParseError);
  }
}

TEST_CASE("dual is an involution on 200 random words") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<long> numer(-50, 50);
  std::uniform_int_distribution<long> denom(1, 12);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 200; ++i) {
    SignedWord w;
    w.sign = coin(rng) ? 1 : -1;
    const int n = len(rng);
    for (int j = 0; j < n; ++j) w.letters.emplace_back(numer(rng), denom(rng));
    CAPTURE(w.to_string());
    CHECK(dual(dual(w)) == w);
    CHECK(SignedWord::parse(w.to_string()) == w);
    CHECK(dual(w).letters.size() == w.letters.size());
  }
}

TEST_CASE("decode inverts encode") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> depth(1, 4);
  std::uniform_int_distribution<int> weight(1, 4);
  std::uniform_int_distribution<long> numer(1, 30);
  std::uniform_int_distribution<long> denom(1, 7);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 100; ++i) {
    LNotationSpec l;
    const int k = depth(rng);
    for (int j = 0; j < k; ++j) {
      l.weights.push_back(weight(rng));
      l.ys.emplace_back(numer(rng) * (coin(rng) ? 1 : -1), denom(rng));
    }
    const Decoded d = decode(encode(l));
    CHECK(d.coefficient == 1);
    CHECK(d.spec == l);
  }
}

TEST_CASE("sign bookkeeping on 50 random words") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> len(1, 4);
  const std::vector<BigRational> alphabet = {R(0), R(1), R(-1), R(2), R(-2), R(3), R(3, 2), R(-1, 2), R(5, 2)};
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  int checked = 0;
  int attempts = 0;
  while (checked < 50 && attempts < 5000) {
    ++attempts;
    SignedWord w{attempts % 2 ? 1 : -1, {}};
    const int n = len(rng);
    for (int j = 0; j < n; ++j) w.letters.push_back(alphabet[pick(rng)]);
    if (w.letters.back().is_zero() || w.letters.front() == R(1)) continue;
    const Decoded a = decode(w);
    const Decoded b = decode(dual(w));
    if (a.spec.depth() > 3 || b.spec.depth() > 3) continue;
    if (mpl_classify(to_mpl(a.spec)) == MplClass::kDivergent) continue;
    if (mpl_classify(to_mpl(b.spec)) == MplClass::kDivergent) continue;
    CAPTURE(w.to_string());
    const auto va = l_eval(a.spec, P);
    const auto vb = l_eval(b.spec, P);
    const XReal diff = abs(va.value * a.coefficient - vb.value * b.coefficient);
    CHECK(diff <= P.tol() + 10 * (va.error + vb.error));
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("word quadrature errors") {
  CHECK_THROWS_AS(word_value_quadrature(W(1, {}), P), DomainError);
  CHECK_THROWS_AS(word_value_quadrature(W(1, {R(0), R(0), R(2), R(2)}), P), UnsupportedError);
  CHECK_THROWS_AS(word_value_quadrature(W(1, {R(0), R(1, 2)}), P), DomainError);
  CHECK_THROWS_AS(word_value_quadrature(W(1, {R(1)}), P), DomainError);
  CHECK_THROWS_AS(word_value_quadrature(W(1, {R(2), R(0)}), P), DomainError);
}

TEST_CASE("word quadrature matches the series for every weight-3 word of the duality chains") {
  const double oracle_li12 = oracle::li12_double_loop(20000);
  const auto w = word_value_quadrature(W(1, {R(2), R(0), R(-2)}), P);
  CHECK(abs(w.value - num(oracle_li12)) < num(1e-8));

  const XReal z3 = oracle::zeta3(P.work_bits);
  CHECK(abs(word_value_quadrature(W(1, {R(0), R(1), R(1)}), P).value - z3) < num(1e-8));
  CHECK(abs(word_value_quadrature(W(-1, {R(0), R(0), R(1)}), P).value - z3) < num(1e-8));

  for (const char* text : {"+[2,0,-2]", "-[3,1,-1]", "-[0,0,-2]", "+[3,1,1]", "+[0,1,1]", "-[0,0,1]"}) {
    CAPTURE(text);
    const SignedWord word = SignedWord::parse(text);
    const Decoded d = decode(word);
    const auto series = l_eval(d.spec, P);
    const auto quad = word_value_quadrature(word, P);
    CHECK(abs(quad.value - series.value * d.coefficient) < num(1e-8));
    CHECK(abs(quad.value - series.value * d.coefficient) <= 10 * quad.error + 10 * series.error + P.tol());
  }
}

TEST_CASE("short words") {
  // int_0^1 dx/(x - 2) = log(1/2)
  const auto a = word_value_quadrature(W(1, {R(2)}), P);
  CHECK(abs(a.value + log(XReal(2, P.work_bits))) < num(1e-10));
  // -int dx/(x-2) int dy/(y+1) is l(1,1; 2,-1) up to sign
  const SignedWord w = W(1, {R(2), R(-1)});
  const Decoded d = decode(w);
  CHECK(abs(word_value_quadrature(w, P).value - l_eval(d.spec, P).value * d.coefficient) < num(1e-10));
}
