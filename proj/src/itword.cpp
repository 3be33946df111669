#include "polyzeta/itword.hpp"

#include <algorithm>
#include <cctype>

#include "polyzeta/errors.hpp"
#include "polyzeta/quadrature.hpp"

namespace polyzeta {

namespace {

enum class LetterKind { kZero, kOne, kOther };

LetterKind kind_of(const BigRational& a) {
  if (a.is_zero()) return LetterKind::kZero;
  if (a == BigRational(1)) return LetterKind::kOne;
  return LetterKind::kOther;
}

}  // namespace

std::string SignedWord::to_string() const {
  std::string s = sign < 0 ? "-[" : "+[";
  for (std::size_t i = 0; i < letters.size(); ++i) s += (i ? "," : "") + letters[i].to_string();
  return s + "]";
}

SignedWord SignedWord::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  SignedWord w;
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    w.sign = s[0] == '-' ? -1 : 1;
    pos = 1;
  }
  if (s.size() < pos + 2 || s[pos] != '[' || s.back() != ']') {
    throw ParseError("word must look like +[a1,a2,...]: '" + std::string(text) + "'");
  }
  const std::string body = s.substr(pos + 1, s.size() - pos - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    w.letters.push_back(BigRational::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return w;
}

SignedWord encode(const LNotationSpec& spec) {
  if (spec.weights.size() != spec.ys.size()) throw DomainError("weights and y-parameters differ in length");
  if (spec.weights.empty()) throw DomainError("l-notation needs at least one block");
  SignedWord w;
  for (std::size_t j = 0; j < spec.weights.size(); ++j) {
    if (spec.weights[j] < 1) throw DomainError("weights must be >= 1");
    if (spec.ys[j].is_zero()) throw DomainError("y-parameters must be nonzero");
    for (int z = 1; z < spec.weights[j]; ++z) w.letters.emplace_back(0);
    w.letters.push_back(spec.ys[j]);
  }
  w.sign = spec.weights.size() % 2 == 0 ? 1 : -1;
  return w;
}

SignedWord dual(const SignedWord& w) {
  SignedWord d;
  d.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) d.letters.push_back(BigRational(1) - *it);
  d.sign = w.letters.size() % 2 == 0 ? w.sign : -w.sign;
  return d;
}

Decoded decode(const SignedWord& w) {
  if (w.letters.empty()) throw DomainError("non-decodable word: no letters");
  if (w.letters.back().is_zero()) throw DomainError("non-decodable word: trailing letter 0 in " + w.to_string());
  Decoded d;
  int zeros = 0;
  for (const auto& a : w.letters) {
    if (a.is_zero()) {
      ++zeros;
      continue;
    }
    d.spec.weights.push_back(zeros + 1);
    d.spec.ys.push_back(a);
    zeros = 0;
  }
  d.coefficient = d.spec.weights.size() % 2 == 0 ? w.sign : -w.sign;
  return d;
}

Estimate word_value_quadrature(const SignedWord& w, const PrecisionPolicy& prec) {
  const std::size_t n = w.letters.size();
  if (n == 0) throw DomainError("empty word");
  if (n > 3) throw UnsupportedError("word quadrature supports length <= 3");
  for (const auto& a : w.letters) {
    if (a > BigRational(0) && a < BigRational(1)) {
      throw DomainError("letter " + a.to_string() + " lies inside (0, 1): pole in the integration domain");
    }
  }
  const Decoded dec = decode(w);
  if (mpl_classify(to_mpl(dec.spec)) == MplClass::kDivergent) {
    throw DomainError("word " + w.to_string() + " has a divergent iterated integral");
  }

  const Bits bits = prec.work_bits;
  std::vector<LetterKind> kinds;
  std::vector<XReal> a;
  for (const auto& l : w.letters) {
    kinds.push_back(kind_of(l));
    a.push_back(l.to_xreal(bits));
  }
  // Nest from the end whose singular letters are more numerous, so those
  // factors become monomials in the cube coordinates. From 0: x_1 = c_1,
  // x_2 = c_1 c_2, ...; from 1: 1 - x_n = c_1, 1 - x_(n-1) = c_1 c_2, ...
  const auto ones = std::count(kinds.begin(), kinds.end(), LetterKind::kOne);
  const auto zeros = std::count(kinds.begin(), kinds.end(), LetterKind::kZero);
  const bool from_one = ones > zeros;
  std::vector<XReal> one_minus_a;
  for (const auto& l : w.letters) one_minus_a.push_back((BigRational(1) - l).to_xreal(bits));
  const CubeFn f = [&](std::span<const XReal> c, std::span<const XReal> cc) {
    std::vector<XReal> prod{c[0]};
    std::vector<XReal> comp{cc[0]};
    XReal jac(1, bits);
    for (std::size_t j = 1; j < n; ++j) {
      jac *= prod[j - 1];
      comp.push_back(comp[j - 1] + prod[j - 1] * cc[j]);
      prod.push_back(prod[j - 1] * c[j]);
    }
    XReal den(1, bits);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = from_one ? n - 1 - i : i;
      const XReal& x = from_one ? comp[j] : prod[j];
      const XReal& cx = from_one ? prod[j] : comp[j];
      switch (kinds[i]) {
        case LetterKind::kZero:
          den *= x;
          break;
        case LetterKind::kOne:
          den *= -cx;
          break;
        case LetterKind::kOther:
          den *= from_one ? one_minus_a[i] - cx : x - a[i];
          break;
      }
    }
    return jac / den;
  };
  QuadOptions opts;
  opts.method = QuadMethod::kTanhSinh;
  opts.target = 1e-10;
  opts.min_level = 1;
  opts.max_level = n == 3 ? 4 : 6;
  opts.trunc_eps = std::max(std::ldexp(1.0, 20 - static_cast<int>(bits)), 1e-40);
  const QuadResult r = integrate_cube(f, static_cast<int>(n), opts, prec);
  if (!r.converged) {
    throw ConvergenceError("word quadrature did not converge for " + w.to_string());
  }
  return Estimate{w.sign < 0 ? -r.value : r.value, r.est_error};
}

}  // namespace polyzeta
