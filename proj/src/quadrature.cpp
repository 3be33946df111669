#include "polyzeta/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "polyzeta/errors.hpp"
#include "polyzeta/polylog.hpp"

namespace polyzeta {

namespace {

// Nodes and weights on (0, 1); cx[i] = 1 - x[i] computed without cancellation.
struct Rule {
  std::vector<XReal> x;
  std::vector<XReal> cx;
  std::vector<XReal> w;
};

using RulePtr = std::shared_ptr<const Rule>;

RulePtr build_gauss_legendre(int n, Bits bits) {
  auto rule = std::make_shared<Rule>();
  const Bits wp = bits + 16;
  const XReal eps = ldexp(XReal(1, wp), 8 - static_cast<long>(wp));
  std::vector<XReal> xs, ws;
  for (int i = 1; i <= n / 2; ++i) {
    // Largest roots first; refine a double estimate by Newton on P_n.
    double guess = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    for (int it = 0; it < 10; ++it) {
      double p0 = 1, p1 = guess;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * guess * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (guess * p1 - p0) / (guess * guess - 1);
      guess -= p1 / dp;
    }
    XReal xi = XReal::from_double(guess, wp);
    XReal dp(0, wp);
    for (int it = 0; it < 64; ++it) {
      XReal p0(1, wp), p1 = xi;
      for (int k = 2; k <= n; ++k) {
        XReal p2 = ((2 * k - 1) * (xi * p1) - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = n * (xi * p1 - p0) / (square(xi) - 1);
      const XReal step = p1 / dp;
      xi -= step;
      if (abs(step) < eps) {
        if (it > 0) break;
      }
    }
    XReal w = 2 / ((1 - square(xi)) * square(dp));
    xs.push_back(std::move(xi));
    ws.push_back(std::move(w));
  }
  const std::size_t half = xs.size();
  // Map xi in (-1, 1) to x = (1 + xi)/2 and 1 - x = (1 - xi)/2.
  auto push = [&](const XReal& xi, const XReal& w) {
    rule->x.push_back(((1 + xi) / 2).with_bits(bits));
    rule->cx.push_back(((1 - xi) / 2).with_bits(bits));
    rule->w.push_back((w / 2).with_bits(bits));
  };
  for (std::size_t i = 0; i < half; ++i) push(-xs[i], ws[i]);
  if (n % 2 == 1) {
    XReal p0(1, wp), p1(0, wp);
    for (int k = 2; k <= n; ++k) {
      XReal p2 = (-(k - 1) * p0) / k;
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    const XReal dp = n * p0;  // P_n'(0) = n P_{n-1}(0)
    push(XReal(0, wp), 2 / square(dp));
  }
  for (std::size_t i = half; i-- > 0;) push(xs[i], ws[i]);
  return rule;
}

RulePtr gauss_legendre_rule(int n, Bits bits) {
  static std::mutex mu;
  static std::map<std::pair<int, Bits>, RulePtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({n, bits}); it != cache.end()) return it->second;
  }
  RulePtr rule = build_gauss_legendre(n, bits);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(n, bits), rule).first->second;
}

RulePtr tanh_sinh_rule(int level, Bits bits, const XReal& eps) {
  auto rule = std::make_shared<Rule>();
  const XReal h = ldexp(XReal(1, bits), -level);
  const XReal pi = XReal::pi(bits);
  std::vector<std::array<XReal, 3>> half;
  for (long k = 0;; ++k) {
    const XReal t = h * k;
    const XReal e = exp(-(pi * sinh(t)));
    if (k > 0 && e < eps) break;
    XReal x = 1 / (1 + e);
    XReal cx = e * x;
    XReal w = h * pi * cosh(t) * x * cx;
    half.push_back({std::move(x), std::move(cx), std::move(w)});
  }
  for (std::size_t i = half.size(); i-- > 1;) {
    rule->x.push_back(half[i][1]);
    rule->cx.push_back(half[i][0]);
    rule->w.push_back(half[i][2]);
  }
  for (auto& node : half) {
    rule->x.push_back(node[0]);
    rule->cx.push_back(node[1]);
    rule->w.push_back(node[2]);
  }
  return rule;
}

RulePtr rule_for(QuadMethod method, int level, Bits bits, const XReal& trunc_eps) {
  if (method == QuadMethod::kGaussLegendre) return gauss_legendre_rule(gauss_legendre_nodes(level), bits);
  return tanh_sinh_rule(level, bits, trunc_eps);
}

[[noreturn]] void interior_singularity(std::span<const XReal> x) {
  std::string where;
  for (const XReal& xi : x) where += (where.empty() ? "" : ", ") + xi.to_string(6);
  throw DomainError("interior singularity: integrand is not finite at (" + where + ")");
}

XReal cube_sum(const CubeFn& f, int dim, const Rule& rule, Bits bits, long& evals) {
  const std::size_t n = rule.x.size();
  XReal total(0, bits);
  std::array<std::size_t, 3> idx{0, 0, 0};
  std::array<XReal, 3> x{XReal(0, bits), XReal(0, bits), XReal(0, bits)};
  std::array<XReal, 3> cx{XReal(0, bits), XReal(0, bits), XReal(0, bits)};
  const std::span<const XReal> xs(x.data(), static_cast<std::size_t>(dim));
  const std::span<const XReal> cxs(cx.data(), static_cast<std::size_t>(dim));
  if (n == 0) return total;
  // Innermost dimension is summed first so partial sums stay comparable in size.
  for (;;) {
    XReal weight(1, bits);
    for (int d = 0; d < dim; ++d) {
      x[d] = rule.x[idx[d]];
      cx[d] = rule.cx[idx[d]];
      weight *= rule.w[idx[d]];
    }
    XReal v = f(xs, cxs);
    ++evals;
    if (!v.is_finite()) interior_singularity(xs);
    total += v * weight;
    int d = dim - 1;
    while (d >= 0 && ++idx[d] == n) idx[d--] = 0;
    if (d < 0) break;
  }
  return total;
}

template <typename LevelFn>
QuadResult refine(const LevelFn& compute, const QuadOptions& opts, const PrecisionPolicy& prec) {
  QuadResult r;
  r.est_error = XReal(0, prec.work_bits);
  const XReal goal = max(XReal::from_double(opts.target, prec.work_bits), prec.tol());
  int first = opts.min_level;
  int last = opts.max_level;
  if (opts.fixed_level) {
    last = *opts.fixed_level;
    first = std::max(0, last - 1);
  }
  if (first > last) first = last;
  for (int level = first; level <= last; ++level) {
    XReal q = compute(level, r.evaluations);
    r.level = level;
    if (!r.history.empty()) {
      r.est_error = abs(q - r.history.back());
      r.estimates.push_back(r.est_error);
    }
    r.history.push_back(q);
    r.value = q;
    if (r.history.size() >= 2 && r.est_error <= goal) {
      r.converged = true;
      if (!opts.fixed_level) break;
    }
  }
  if (opts.fixed_level) r.converged = r.history.size() >= 2 && r.est_error <= goal;
  return r;
}

XReal effective_trunc(const QuadOptions& opts, Bits bits) {
  if (opts.trunc_eps > 0) return XReal::from_double(opts.trunc_eps, bits);
  // Far enough out that an integrable log^k endpoint singularity leaves no visible tail.
  return ldexp(XReal(1, bits), -2 * static_cast<long>(bits));
}

}  // namespace

std::string_view method_name(QuadMethod m) {
  return m == QuadMethod::kGaussLegendre ? "gauss-legendre" : "tanh-sinh";
}

int gauss_legendre_nodes(int level) { return 4 << level; }

QuadResult integrate_unit(const UnitFn& f, const QuadOptions& opts, const PrecisionPolicy& prec) {
  const Bits bits = prec.work_bits + 16;
  const XReal trunc = effective_trunc(opts, prec.work_bits);
  auto compute = [&](int level, long& evals) {
    const RulePtr rule = rule_for(opts.method, level, bits, trunc);
    XReal total(0, bits);
    for (std::size_t i = 0; i < rule->x.size(); ++i) {
      XReal v = f(rule->x[i], rule->cx[i]);
      ++evals;
      if (!v.is_finite()) interior_singularity(std::span<const XReal>(&rule->x[i], 1));
      total += v * rule->w[i];
    }
    return total.with_bits(prec.work_bits);
  };
  return refine(compute, opts, prec);
}

QuadResult integrate_1d(const Fn1& f, const XReal& a, const XReal& b, const QuadOptions& opts,
                        const PrecisionPolicy& prec) {
  if (a == b) {
    QuadResult r;
    r.value = XReal(0, prec.work_bits);
    r.est_error = XReal(0, prec.work_bits);
    r.converged = true;
    return r;
  }
  const Bits bits = prec.work_bits + 16;
  const XReal lo = a.with_bits(bits);
  const XReal len = b.with_bits(bits) - lo;
  const UnitFn g = [&](const XReal& u, const XReal&) { return f(lo + len * u); };
  QuadResult r = integrate_unit(g, opts, prec);
  r.value = (r.value * len).with_bits(prec.work_bits);
  r.est_error = abs(r.est_error * len).with_bits(prec.work_bits);
  for (auto& h : r.history) h = (h * len).with_bits(prec.work_bits);
  for (auto& e : r.estimates) e = abs(e * len).with_bits(prec.work_bits);
  return r;
}

QuadResult integrate_cube(const CubeFn& f, int dim, const QuadOptions& opts, const PrecisionPolicy& prec) {
  if (dim < 1 || dim > 3) throw UnsupportedError("cube integration supports dimensions 1 to 3");
  const Bits bits = prec.work_bits;
  const XReal trunc = effective_trunc(opts, prec.work_bits);
  auto compute = [&](int level, long& evals) {
    const RulePtr rule = rule_for(opts.method, level, bits, trunc);
    return cube_sum(f, dim, *rule, bits, evals);
  };
  return refine(compute, opts, prec);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

struct CatalogInfo {
  CatalogId id;
  std::string_view name;
  QuadMethod method;
  int dim;
};

constexpr std::array<CatalogInfo, 13> kCatalog{{
    {CatalogId::kZ3Direct, "z3_direct", QuadMethod::kGaussLegendre, 3},
    {CatalogId::kZ3Symmetrized, "z3_symmetrized", QuadMethod::kGaussLegendre, 3},
    {CatalogId::kZ2, "z2", QuadMethod::kGaussLegendre, 2},
    {CatalogId::kKzZeta3, "kz_zeta3", QuadMethod::kTanhSinh, 3},
    {CatalogId::kZetaCube, "zeta_cube", QuadMethod::kTanhSinh, 3},
    {CatalogId::kBeukersJ, "beukers_J", QuadMethod::kTanhSinh, 3},
    {CatalogId::kIntLog2Third, "int_log2_3", QuadMethod::kTanhSinh, 1},
    {CatalogId::kLewinLhs, "lewin_lhs", QuadMethod::kTanhSinh, 1},
    {CatalogId::kMellinLog2, "mellin_log2", QuadMethod::kTanhSinh, 1},
    {CatalogId::kS3Rational, "s3_rational", QuadMethod::kTanhSinh, 1},
    {CatalogId::kS3Trig, "s3_trig", QuadMethod::kTanhSinh, 1},
    {CatalogId::kS3LogLog, "s3_loglog", QuadMethod::kTanhSinh, 1},
    {CatalogId::kZ3Li2Form, "z3_li2_form", QuadMethod::kTanhSinh, 1},
}};

const CatalogInfo& info(CatalogId id) {
  for (const auto& c : kCatalog) {
    if (c.id == id) return c;
  }
  throw DomainError("unknown catalog entry");
}

// 1 - a b c without cancellation near the corner (1, 1, 1).
XReal one_minus_product(std::span<const XReal> x, std::span<const XReal> cx) {
  XReal acc = cx[x.size() - 1];
  for (std::size_t i = x.size() - 1; i-- > 0;) {
    acc *= x[i];
    acc += cx[i];
  }
  return acc;
}

XReal product(std::span<const XReal> x) {
  XReal p = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) p *= x[i];
  return p;
}

XReal z3_integrand(const XReal& x, const XReal& y, const XReal& z) {
  XReal d1 = x * y;
  d1 += 1;
  XReal d2 = x * (y + z);
  d2 += 1;
  return x / (d1 * d2);
}

QuadResult cube_entry(const CatalogInfo& ci, const IntegralSpec& spec, const CubeFn& f, int dim,
                      const PrecisionPolicy& prec) {
  QuadOptions opts;
  opts.method = spec.method.value_or(ci.method);
  opts.target = catalog_target(spec);
  opts.fixed_level = spec.level;
  if (opts.method == QuadMethod::kGaussLegendre) {
    opts.min_level = 1;
    opts.max_level = dim == 3 ? 5 : 6;
  } else {
    opts.min_level = 1;
    opts.max_level = dim == 3 ? 4 : 6;
    opts.trunc_eps = std::max(std::ldexp(1.0, 20 - static_cast<int>(prec.work_bits)), 1e-40);
  }
  return integrate_cube(f, dim, opts, prec);
}

QuadResult line_entry(const IntegralSpec& spec, const Fn1& f, const XReal& a, const XReal& b,
                      const PrecisionPolicy& prec) {
  QuadOptions opts;
  opts.method = spec.method.value_or(QuadMethod::kTanhSinh);
  opts.target = catalog_target(spec);
  opts.fixed_level = spec.level;
  opts.max_level = opts.method == QuadMethod::kGaussLegendre ? 8 : 10;
  return integrate_1d(f, a, b, opts, prec);
}

}  // namespace

std::optional<CatalogId> catalog_id_from_name(std::string_view name) {
  for (const auto& c : kCatalog) {
    if (c.name == name) return c.id;
  }
  return std::nullopt;
}

std::string_view catalog_name(CatalogId id) { return info(id).name; }

const std::vector<CatalogId>& catalog_ids() {
  static const std::vector<CatalogId> ids = [] {
    std::vector<CatalogId> v;
    for (const auto& c : kCatalog) v.push_back(c.id);
    return v;
  }();
  return ids;
}

double catalog_target(const IntegralSpec& spec) {
  const CatalogInfo& ci = info(spec.id);
  if (ci.dim == 1) return 0.0;
  const QuadMethod m = spec.method.value_or(ci.method);
  if (m == QuadMethod::kGaussLegendre) return 1e-30;
  // The n = 0 integrand is the least damped at the singular edge.
  if (spec.id == CatalogId::kBeukersJ) return 1e-10;
  return 1e-13;
}

QuadResult catalog_eval(const IntegralSpec& spec, const PrecisionPolicy& prec) {
  const CatalogInfo& ci = info(spec.id);
  const Bits bits = prec.work_bits;
  if (spec.level && *spec.level < 1) throw DomainError("quadrature level must be >= 1");
  switch (spec.id) {
    case CatalogId::kZ3Direct:
      return cube_entry(ci, spec, [](auto x, auto) { return z3_integrand(x[0], x[1], x[2]); }, 3, prec);
    case CatalogId::kZ3Symmetrized:
      return cube_entry(
          ci, spec,
          [](auto x, auto) {
            XReal s = z3_integrand(x[0], x[1], x[2]);
            s += z3_integrand(x[1], x[2], x[0]);
            s += z3_integrand(x[2], x[0], x[1]);
            return s / 3;
          },
          3, prec);
    case CatalogId::kZ2:
      return cube_entry(ci, spec, [](auto x, auto) { return 1 / (1 + x[0] * x[1]); }, 2, prec);
    case CatalogId::kKzZeta3:
      // z = t3, y = t2 t3, x = t1 t2 t3 has Jacobian t2 t3^2, which cancels
      // y z (1 - x) down to 1 - t1 t2 t3.
      return cube_entry(ci, spec, [](auto x, auto cx) { return 1 / one_minus_product(x, cx); }, 3, prec);
    case CatalogId::kZetaCube: {
      if (spec.m != 2 && spec.m != 3) throw UnsupportedError("zeta_cube supports m = 2 or m = 3");
      if (spec.sign != 1 && spec.sign != -1) throw DomainError("zeta_cube sign must be + or -");
      IntegralSpec s = spec;
      if (!s.method) s.method = spec.sign < 0 ? QuadMethod::kTanhSinh : QuadMethod::kGaussLegendre;
      if (spec.sign < 0) {
        return cube_entry(ci, s, [](auto x, auto cx) { return 1 / one_minus_product(x, cx); }, spec.m, prec);
      }
      return cube_entry(ci, s, [](auto x, auto) { return 1 / (1 + product(x)); }, spec.m, prec);
    }
    case CatalogId::kBeukersJ: {
      if (spec.n < 0) throw DomainError("beukers_J needs n >= 0");
      if (spec.n > 3) throw UnsupportedError("beukers_J is limited to n <= 3");
      const long n = spec.n;
      return cube_entry(
          ci, spec,
          [n](auto x, auto cx) {
            // 1 - (1 - x y) z = (1 - z) + x y z
            XReal den = x[0] * x[1] * x[2];
            den += cx[2];
            XReal v = pow(den, -(n + 1)) / 2;
            if (n > 0) v *= pow(x[0] * cx[0] * x[1] * cx[1] * x[2] * cx[2], n);
            return v;
          },
          3, prec);
    }
    case CatalogId::kIntLog2Third:
      return line_entry(
          spec, [](const XReal& t) { return square(log(t)) / (1 - square(t)); }, XReal(0, bits),
          XReal(1, bits + 16) / 3, prec);
    case CatalogId::kLewinLhs: {
      const XReal t = spec.param.to_xreal(bits + 16);
      if (!(t > -1)) throw DomainError("lewin_lhs needs t > -1");
      return line_entry(
          spec, [](const XReal& u) { return square(log1p(u)) / u; }, XReal(0, bits), t, prec);
    }
    case CatalogId::kMellinLog2: {
      if (spec.n < 1) throw DomainError("mellin_log2 needs n >= 1");
      if (spec.param.sign() <= 0) throw DomainError("mellin_log2 needs x > 0");
      const long n = spec.n;
      return line_entry(
          spec, [n](const XReal& t) { return pow(t, n - 1) * square(log(t)); }, XReal(0, bits),
          spec.param.to_xreal(bits + 16), prec);
    }
    case CatalogId::kS3Rational: {
      const PrecisionPolicy inner = prec.widened(16);
      return line_entry(
          spec, [&inner](const XReal& t) { return -(li(2, -t, inner) / (t * (1 - t))); }, XReal(0, bits),
          XReal(1, bits + 16) / 2, prec);
    }
    case CatalogId::kS3Trig: {
      const PrecisionPolicy inner = prec.widened(16);
      return line_entry(
          spec,
          [&inner](const XReal& phi) {
            const XReal s = sin(phi);
            return -4 * li(2, -square(s), inner) / sin(2 * phi);
          },
          XReal(0, bits), XReal::pi(bits + 16) / 4, prec);
    }
    case CatalogId::kS3LogLog:
      return line_entry(
          spec, [](const XReal& t) { return log1p(-t) * log1p(t) / t; }, XReal(0, bits), XReal(1, bits + 16) / 2,
          prec);
    case CatalogId::kZ3Li2Form: {
      const PrecisionPolicy inner = prec.widened(16);
      const XReal li2_m1 = li(2, XReal(-1, inner.work_bits), inner);
      return line_entry(
          spec,
          [&inner, &li2_m1](const XReal& z) {
            XReal v = li(2, -1 - z, inner) - li2_m1 - li(2, -z, inner);
            return v / z;
          },
          XReal(0, bits), XReal(1, bits), prec);
    }
  }
  throw DomainError("unknown catalog entry");
}

}  // namespace polyzeta
