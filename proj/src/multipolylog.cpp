#include "polyzeta/multipolylog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "polyzeta/asymptotic.hpp"
#include "polyzeta/errors.hpp"

namespace polyzeta {

namespace {

constexpr Bits kExtraBits = 32;
constexpr int kMaxDepth = 3;
constexpr long kMaxTerms = 5'000'000;

std::string join(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

std::string join(const std::vector<BigRational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s;
}

bool any_zero(const std::vector<BigRational>& v) {
  return std::any_of(v.begin(), v.end(), [](const BigRational& q) { return q.is_zero(); });
}

struct Levels {
  int k;
  std::vector<int> s;           // s[1..k]
  std::vector<BigRational> y;   // y[0] = 1, y[1..k]
  std::vector<XReal> inv_y;     // 1 / y[j]
};

Levels make_levels(const MPLSpec& spec, Bits wp) {
  Levels lv;
  lv.k = spec.depth();
  lv.s.push_back(0);
  lv.s.insert(lv.s.end(), spec.weights.begin(), spec.weights.end());
  lv.y.push_back(BigRational(1));
  const auto ys = ys_of(spec);
  lv.y.insert(lv.y.end(), ys.begin(), ys.end());
  for (const auto& y : lv.y) lv.inv_y.push_back((BigRational(1) / y).to_xreal(wp));
  return lv;
}

// Runs V_j(m) = V_j(m-1)/y_{j-1} + V_{j+1}(m-1) / (m^s_j y_j) up to m = last,
// with V_{k+1}(m) = y_k^-m and V_j(0) = 0. Returns V_1..V_{k+1} at m = last.
std::vector<XReal> run_recurrence(const Levels& lv, long last, Bits wp) {
  const int k = lv.k;
  std::vector<XReal> v(static_cast<std::size_t>(k + 2), XReal(0, wp));
  v[static_cast<std::size_t>(k + 1)] = XReal(1, wp);
  for (long m = 1; m <= last; ++m) {
    for (int j = 1; j <= k; ++j) {
      XReal inner = v[static_cast<std::size_t>(j + 1)] * lv.inv_y[static_cast<std::size_t>(j)];
      for (int e = 0; e < lv.s[static_cast<std::size_t>(j)]; ++e) inner /= m;
      XReal& vj = v[static_cast<std::size_t>(j)];
      vj *= lv.inv_y[static_cast<std::size_t>(j - 1)];
      vj += inner;
    }
    v[static_cast<std::size_t>(k + 1)] *= lv.inv_y[static_cast<std::size_t>(k)];
  }
  return v;
}

Estimate eval_geometric(const MPLSpec& spec, const PrecisionPolicy& prec) {
  const Bits wp = prec.work_bits + kExtraBits;
  const Levels lv = make_levels(spec, wp);
  const int k = lv.k;
  double r = 0;
  for (int j = 1; j <= k; ++j) r = std::max(r, std::fabs((BigRational(1) / lv.y[j]).to_double()));
  // Terms with n_1 = n number at most n^(k-1), each bounded by r^n.
  auto log2_bound = [&](long n) {
    const double ratio = r * std::pow((n + 2.0) / (n + 1.0), k - 1);
    if (ratio >= 1) return HUGE_VAL;
    return (k - 1) * std::log2(n + 1.0) + (n + 1.0) * std::log2(r) - std::log2(1 - ratio);
  };
  const double goal = -static_cast<double>(prec.work_bits) - 8;
  long n = 1;
  while (log2_bound(n) > goal) {
    n = n < 64 ? n + 1 : n + n / 8;
    if (n > kMaxTerms) throw UnsupportedError("multiple polylogarithm converges too slowly: " + spec.to_string());
  }
  const auto v = run_recurrence(lv, n, wp);
  Estimate e;
  e.value = v[1].with_bits(prec.work_bits);
  e.error = ldexp(XReal(1, prec.work_bits), static_cast<long>(std::ceil(log2_bound(n))));
  e.error += ldexp(XReal(n, prec.work_bits), -static_cast<long>(wp) + 4);
  return e;
}

struct Expansion {
  LogPowerSeries smooth;
  LogPowerSeries alt;  // coefficient of (-1)^m
};

XReal sign_power(long m, Bits bits) { return XReal(m % 2 == 0 ? 1 : -1, bits); }

// Value of the harmonic-tail spec with expansions truncated at m^-order.
XReal harmonic_value(const Levels& lv, const std::vector<XReal>& exact, long m_fit, int order, Bits wp) {
  const int k = lv.k;
  const int logs = k + 1;
  const XReal m_x(m_fit, wp);
  const XReal sgn = sign_power(m_fit, wp);

  Expansion e{LogPowerSeries(order, logs, wp), LogPowerSeries(order, logs, wp)};
  const BigRational& yk = lv.y[static_cast<std::size_t>(k)];
  if (yk == BigRational(1)) e.smooth.at(0, 0) = XReal(1, wp);
  if (yk == BigRational(-1)) e.alt.at(0, 0) = XReal(1, wp);

  for (int j = k; j >= 1; --j) {
    const int s = lv.s[static_cast<std::size_t>(j)];
    const XReal& inv_yj = lv.inv_y[static_cast<std::size_t>(j)];
    LogPowerSeries fs = e.smooth.shifted_back().times_power(s);
    fs *= inv_yj;
    LogPowerSeries fa = (-e.alt.shifted_back()).times_power(s);
    fa *= inv_yj;

    const BigRational& y_prev = lv.y[static_cast<std::size_t>(j - 1)];
    const XReal& vj = exact[static_cast<std::size_t>(j)];
    if (y_prev == BigRational(1)) {
      Expansion next{partial_sum_expansion(fs), alternating_sum_expansion(fa)};
      next.smooth.at(0, 0) += vj - next.smooth.evaluate(m_x) - sgn * next.alt.evaluate(m_x);
      e = std::move(next);
    } else if (y_prev == BigRational(-1)) {
      Expansion next{alternating_sum_expansion(fs), partial_sum_expansion(fa)};
      next.alt.at(0, 0) += sgn * (vj - next.smooth.evaluate(m_x)) - next.alt.evaluate(m_x);
      e = std::move(next);
    } else {
      const BigRational q = BigRational(1) / y_prev;
      e = Expansion{geometric_sum_expansion(fs, q), geometric_sum_expansion(fa, -q)};
    }
  }
  return e.smooth.at(0, 0);
}

Estimate eval_harmonic(const MPLSpec& spec, const PrecisionPolicy& prec) {
  const Bits wp = prec.work_bits + kExtraBits;
  const Levels lv = make_levels(spec, wp);
  const int order = std::clamp(static_cast<int>(wp / 6), 16, 80);
  const double target_bits = static_cast<double>(wp) + 10;
  // Radius of convergence of each transform's generating function in x = d/dm.
  double radius = M_PI;
  double m_fit = 200;
  for (int j = 1; j <= lv.k; ++j) {
    const double q = (BigRational(1) / lv.y[static_cast<std::size_t>(j - 1)]).to_double();
    if (std::fabs(q) < 1) {
      const double lq = std::log(1 / std::fabs(q));
      radius = std::min(radius, std::sqrt(lq * lq + (q < 0 ? M_PI * M_PI : 0.0)));
      m_fit = std::max(m_fit, target_bits / std::log2(1 / std::fabs(q)));
    }
  }
  m_fit = std::max(m_fit, order / (M_E * radius) * std::exp2(target_bits / order));
  const long m = static_cast<long>(std::ceil(m_fit));
  if (m > kMaxTerms) throw UnsupportedError("multiple polylogarithm converges too slowly: " + spec.to_string());

  const auto exact = run_recurrence(lv, m, wp);
  const XReal coarse = harmonic_value(lv, exact, m, order, wp);
  const XReal fine = harmonic_value(lv, exact, m, order + 4, wp);
  Estimate e;
  e.value = fine.with_bits(prec.work_bits);
  e.error = abs(fine - coarse).with_bits(prec.work_bits) * 10;
  e.error += ldexp(XReal(m, prec.work_bits), -static_cast<long>(wp) + 4);
  return e;
}

}  // namespace

int MPLSpec::weight() const { return std::accumulate(weights.begin(), weights.end(), 0); }

std::string MPLSpec::to_string() const { return "Li_{" + join(weights) + "}(" + join(args) + ")"; }

std::string LNotationSpec::to_string() const { return "l(" + join(weights) + "; " + join(ys) + ")"; }

std::string_view mpl_class_name(MplClass c) {
  switch (c) {
    case MplClass::kGeometric:
      return "geometric";
    case MplClass::kHarmonicTail:
      return "harmonic-tail";
    case MplClass::kDivergent:
      return "divergent";
  }
  return "?";
}

void validate(const MPLSpec& spec) {
  if (spec.weights.empty()) throw DomainError("multiple polylogarithm needs at least one weight");
  if (spec.weights.size() != spec.args.size()) {
    throw DomainError("weights and arguments differ in length: " + std::to_string(spec.weights.size()) + " vs " +
                      std::to_string(spec.args.size()));
  }
  for (int s : spec.weights) {
    if (s < 1) throw DomainError("weights must be >= 1");
  }
}

std::vector<BigRational> ys_of(const MPLSpec& spec) {
  if (any_zero(spec.args)) throw DomainError("y-parameters are undefined for a zero argument");
  std::vector<BigRational> ys;
  BigRational prev(1);
  for (const auto& z : spec.args) {
    prev = prev / z;
    ys.push_back(prev);
  }
  return ys;
}

MPLSpec to_mpl(const LNotationSpec& spec) {
  if (spec.weights.size() != spec.ys.size()) throw DomainError("weights and y-parameters differ in length");
  if (any_zero(spec.ys)) throw DomainError("conversion error: y-parameter equal to 0");
  MPLSpec m;
  m.weights = spec.weights;
  BigRational prev(1);
  for (const auto& y : spec.ys) {
    m.args.push_back(prev / y);
    prev = y;
  }
  return m;
}

LNotationSpec to_l_notation(const MPLSpec& spec) {
  validate(spec);
  return LNotationSpec{spec.weights, ys_of(spec)};
}

MplClass mpl_classify(const MPLSpec& spec) {
  validate(spec);
  if (any_zero(spec.args)) return MplClass::kGeometric;
  const auto ys = ys_of(spec);
  bool boundary = false;
  for (const auto& y : ys) {
    const BigRational a = abs(y);
    if (a < BigRational(1)) return MplClass::kDivergent;
    if (a == BigRational(1)) boundary = true;
  }
  if (!boundary) return MplClass::kGeometric;
  if (spec.weights[0] == 1 && ys[0] == BigRational(1)) return MplClass::kDivergent;
  return MplClass::kHarmonicTail;
}

Estimate mpl_eval(const MPLSpec& spec, const PrecisionPolicy& prec) {
  validate(spec);
  if (spec.depth() > kMaxDepth) {
    throw UnsupportedError("unsupported depth " + std::to_string(spec.depth()) + " (at most 3)");
  }
  if (any_zero(spec.args)) return Estimate{XReal(0, prec.work_bits), XReal(0, prec.work_bits)};
  switch (mpl_classify(spec)) {
    case MplClass::kDivergent:
      throw DomainError("divergent multiple polylogarithm: " + spec.to_string());
    case MplClass::kGeometric:
      return eval_geometric(spec, prec);
    case MplClass::kHarmonicTail:
      return eval_harmonic(spec, prec);
  }
  throw DomainError("unclassified multiple polylogarithm");
}

Estimate mzv(const std::vector<int>& weights, const PrecisionPolicy& prec) {
  if (weights.empty()) throw DomainError("multiple zeta value needs at least one weight");
  if (weights[0] == 1) throw DomainError("divergent multiple zeta value: s_1 = 1");
  MPLSpec spec{weights, std::vector<BigRational>(weights.size(), BigRational(1))};
  return mpl_eval(spec, prec);
}

Estimate l_eval(const LNotationSpec& spec, const PrecisionPolicy& prec) { return mpl_eval(to_mpl(spec), prec); }

}  // namespace polyzeta
