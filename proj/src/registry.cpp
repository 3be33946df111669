#include "polyzeta/registry.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"

#include "polyzeta/constants.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/polylog.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/sums.hpp"

namespace polyzeta {

Estimate EvalCache::get(const std::string& key, const std::function<Estimate()>& compute) {
  std::promise<Estimate> promise;
  std::shared_future<Estimate> fut;
  bool owner = false;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      fut = promise.get_future().share();
      entries_.emplace(key, fut);
      owner = true;
    } else {
      fut = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(compute());
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return fut.get();
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kUnconverged:
      return "unconverged";
  }
  return "fail";
}

namespace {

using R = BigRational;

// Shared numeric vocabulary of the identities.
struct Consts {
  explicit Consts(const PrecisionPolicy& p)
      : bits(p.work_bits),
        pi(XReal::pi(bits)),
        ln2(XReal::ln2(bits)),
        ln3(log(XReal(3, bits))),
        z2(zeta_value(2, bits)),
        z3(zeta_value(3, bits)) {}
  Bits bits;
  XReal pi, ln2, ln3, z2, z3;
  XReal q(long p, long d = 1) const { return R(p, d).to_xreal(bits); }
};

Estimate exact(XReal v) { return Estimate{std::move(v), XReal(0, 64)}; }

Estimate operator-(const Estimate& a, const Estimate& b) { return {a.value - b.value, a.error + b.error}; }
Estimate operator+(const Estimate& a, const XReal& b) { return {a.value + b, a.error}; }
Estimate operator-(const Estimate& a) { return {-a.value, a.error}; }
Estimate scaled(const Estimate& a, const XReal& c) { return {a.value * c, a.error * abs(c)}; }

XReal param(const Sample& s, std::size_t i, const PrecisionPolicy& p) { return s.params.at(i).to_xreal(p.work_bits); }
long int_param(const Sample& s, std::size_t i) { return static_cast<long>(s.params.at(i).to_double()); }

XReal L(long s, const XReal& z, const PrecisionPolicy& p, LiPath path = LiPath::kAutomatic) {
  return li(s, z, p, path);
}

Estimate catalog(const IntegralSpec& spec, const PrecisionPolicy& p, EvalCache& cache) {
  std::string key = std::string(catalog_name(spec.id)) + "/n=" + std::to_string(spec.n) + "/m=" +
                    std::to_string(spec.m) + "/s=" + std::to_string(spec.sign) + "/x=" + spec.param.to_string() +
                    "/bits=" + std::to_string(p.work_bits);
  return cache.get(key, [&spec, &p] {
    const QuadResult r = catalog_eval(spec, p);
    if (!r.converged) throw ConvergenceError(std::string(catalog_name(spec.id)) + " did not converge");
    return Estimate{r.value, r.est_error};
  });
}

Estimate catalog(CatalogId id, const PrecisionPolicy& p, EvalCache& cache) {
  IntegralSpec spec;
  spec.id = id;
  return catalog(spec, p, cache);
}

Estimate line_integral(const Fn1& f, const XReal& a, const XReal& b, const PrecisionPolicy& p) {
  QuadOptions opts;
  opts.method = QuadMethod::kTanhSinh;
  opts.max_level = 10;
  const QuadResult r = integrate_1d(f, a, b, opts, p);
  if (!r.converged) throw ConvergenceError("line integral did not converge");
  return Estimate{r.value, r.est_error};
}

Estimate mpl(std::vector<int> weights, std::vector<R> args, const PrecisionPolicy& p) {
  return mpl_eval(MPLSpec{std::move(weights), std::move(args)}, p);
}

std::vector<Sample> z_samples(const std::vector<R>& zs) {
  std::vector<Sample> out;
  for (const auto& z : zs) out.push_back(Sample{"z=" + z.to_string(), {z}});
  return out;
}

const std::vector<Sample> kUnit = z_samples({R(1, 10), R(1, 4), R(1, 2), R(7, 10), R(9, 10)});
const std::vector<Sample> kInversion = z_samples({R(-3, 2), R(-2), R(-5)});
const std::vector<Sample> kSingle = {Sample{"", {}}};

IdentityRecord constant_record(std::string id, std::string ref, TolClass tc, Evaluator lhs, Evaluator rhs) {
  return IdentityRecord{std::move(id), std::move(ref), IdentityKind::kConstant, kSingle, tc, std::move(lhs),
                        std::move(rhs)};
}

IdentityRecord param_record(std::string id, std::string ref, std::vector<Sample> samples, TolClass tc, Evaluator lhs,
                            Evaluator rhs) {
  return IdentityRecord{std::move(id), std::move(ref), IdentityKind::kParametric, std::move(samples), tc,
                        std::move(lhs), std::move(rhs)};
}

// 7/8 zeta(3) - Li3(1/3) - Li2(1/3) log 3 - 1/6 log(9/8) log^2 3 without the rational zeta(3) part.
XReal third_tail(const Consts& c, const PrecisionPolicy& p) {
  const XReal third = c.q(1, 3);
  return -L(3, third, p) - L(2, third, p) * c.ln3 - log(c.q(9, 8)) * square(c.ln3) / 6;
}

// The harmonic polylogarithm H(1, -2; x) in terms of tri- and dilogarithms.
XReal hpl_closed(const XReal& x, const Consts& c, const PrecisionPolicy& p) {
  const XReal one_m = 1 - x;
  const XReal one_p = 1 + x;
  XReal v = L(3, -x, p) - L(3, one_m, p) + L(3, x / one_p, p) + L(3, one_m / 2, p) + L(3, one_p / 2, p) -
            L(3, 2 * x / (x - 1), p) - L(3, 2 * x / one_p, p) - L(2, x, p) * log(one_p);
  v += log(one_m / 8) * square(log(one_m)) / 6;
  v -= log(x) * square(log(one_m)) / 2;
  v += square(c.ln2) / 2 * log(one_m * one_p);
  v -= c.ln2 / 2 * square(log(one_p));
  v += square(c.pi) / 12 * log(one_m / one_p);
  v -= c.z3 * 3 / 4;
  v -= pow(c.ln2, 3) / 3;
  v += square(c.pi) / 6 * c.ln2;
  return v;
}

std::vector<IdentityRecord> build_registry() {
  std::vector<IdentityRecord> r;
  const auto strict = TolClass::kStrict;
  const auto estimated = TolClass::kEstimated;

  for (long s : {2L, 3L}) {
    r.push_back(param_record(
        "duplication_s" + std::to_string(s), "duplication formula Li_s(-z) = -Li_s(z) + 2^(1-s) Li_s(z^2)", kUnit,
        strict, [s](const Sample& x, const PrecisionPolicy& p, EvalCache&) { return exact(L(s, -param(x, 0, p), p)); },
        [s](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
          const XReal z = param(x, 0, p);
          return exact(-L(s, z, p) + ldexp(L(s, square(z), p), 1 - s));
        }));
  }
  // li() itself applies inversion for z < -1, so the left sides use the integral representations.
  r.push_back(param_record(
      "inversion_li2", "dilogarithm inversion formula Li2(z) = -Li2(1/z) - log^2(-z)/2 - pi^2/6", kInversion, strict,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) { return exact(li2_via_integral(param(x, 0, p), p)); },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        const XReal z = param(x, 0, p);
        return exact(-L(2, 1 / z, p) - square(log(-z)) / 2 - square(c.pi) / 6);
      }));
  r.push_back(param_record(
      "inversion_li3", "trilogarithm inversion formula Li3(z) = Li3(1/z) - log^3(-z)/6 - pi^2/6 log(-z)", kInversion,
      strict,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) { return exact(li_via_integral(3, param(x, 0, p), p)); },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        const XReal z = param(x, 0, p);
        const XReal lg = log(-z);
        return exact(L(3, 1 / z, p) - pow(lg, 3) / 6 - square(c.pi) / 6 * lg);
      }));
  r.push_back(param_record(
      "reflection_li2", "dilogarithm reflection Li2(z) + Li2(1-z) = pi^2/6 - log(z) log(1-z)", kUnit, strict,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const XReal z = param(x, 0, p);
        return exact(L(2, z, p, LiPath::kSeries) + L(2, 1 - z, p, LiPath::kSeries));
      },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        const XReal z = param(x, 0, p);
        return exact(square(c.pi) / 6 - log(z) * log(1 - z));
      }));
  r.push_back(param_record(
      "reflection_li3", "trilogarithm reflection for Li3(z) + Li3(1-z) + Li3(1-1/z)", kUnit, strict,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const XReal z = param(x, 0, p);
        return exact(L(3, z, p, LiPath::kSeries) + L(3, 1 - z, p, LiPath::kSeries) + L(3, 1 - 1 / z, p));
      },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        const XReal z = param(x, 0, p);
        const XReal lz = log(z);
        return exact(c.z3 + pow(lz, 3) / 6 + square(c.pi) / 6 * lz - square(lz) * log(1 - z) / 2);
      }));
  r.push_back(param_record(
      "landen_li3", "Lewin's trilogarithm identity at (1-z)/(1+z)", kUnit, strict,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const XReal z = param(x, 0, p);
        const XReal w = (1 - z) / (1 + z);
        return exact(L(3, w, p) - L(3, -w, p));
      },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        const XReal z = param(x, 0, p);
        const XReal z2 = square(z);
        XReal v = L(3, -z2 / (1 - z2), p) / 2 - 2 * L(3, -z / (1 - z), p) - 2 * L(3, z / (1 + z), p);
        v += c.z3 * 7 / 4;
        v += square(c.pi) / 4 * log((1 - z) / (1 + z));
        v += square(log((1 + z) / (1 - z))) * log((1 - z2) / z2) / 4;
        return exact(v);
      }));
  r.push_back(constant_record(
      "li2_half", "Li2(1/2) = pi^2/12 - log^2(2)/2", strict,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(L(2, Consts(p).q(1, 2), p)); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        return exact(square(c.pi) / 12 - square(c.ln2) / 2);
      }));
  r.push_back(constant_record(
      "li3_half", "Li3(1/2) = 7/8 zeta(3) - pi^2/12 log 2 + log^3(2)/6", strict,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(L(3, Consts(p).q(1, 2), p)); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        return exact(c.z3 * 7 / 8 - square(c.pi) / 12 * c.ln2 + pow(c.ln2, 3) / 6);
      }));
  r.push_back(constant_record(
      "li3_minus_one", "Li3(-1) = -3/4 zeta(3)", strict,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(L(3, XReal(-1, p.work_bits), p)); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(-Consts(p).z3 * 3 / 4); }));
  r.push_back(constant_record(
      "li2_third_combo", "2 Li2(1/3) - Li2(-1/3) = pi^2/6 - log^2(3)/2", strict,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const XReal t = Consts(p).q(1, 3);
        return exact(2 * L(2, t, p) - L(2, -t, p));
      },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        return exact(square(c.pi) / 6 - square(c.ln3) / 2);
      }));
  r.push_back(constant_record(
      "li3_third_combo", "2 Li3(1/3) - Li3(-1/3) = 13/6 zeta(3) - pi^2/6 log 3 + log^3(3)/6", strict,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const XReal t = Consts(p).q(1, 3);
        return exact(2 * L(3, t, p) - L(3, -t, p));
      },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        return exact(c.z3 * 13 / 6 - square(c.pi) / 6 * c.ln3 + pow(c.ln3, 3) / 6);
      }));
  r.push_back(constant_record(
      "li2_ninth", "Li2(1/9) = 6 Li2(1/3) + log^2(3) - pi^2/3, the real part of a CAS evaluation", strict,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(L(2, Consts(p).q(1, 9), p)); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        return exact(6 * L(2, c.q(1, 3), p) + square(c.ln3) - square(c.pi) / 3);
      }));
  r.push_back(param_record(
      "li2_integral_rep", "Li2(z) as the integral of log(t)/(1-t) from 1 to 1-z",
      z_samples({R(-5), R(-1, 2), R(1, 2), R(9, 10)}), strict,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) { return exact(li2_via_integral(param(x, 0, p), p)); },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) { return exact(L(2, param(x, 0, p), p)); }));
  r.push_back(constant_record(
      "zeta3_alt_int", "integral of Li2(-z)/z over (0,1) = -3/4 zeta(3), term by term", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const PrecisionPolicy inner = p.widened(8);
        return line_integral([&inner](const XReal& z) { return L(2, -z, inner) / z; }, p.zero(), p.num(1), p);
      },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(-Consts(p).z3 * 3 / 4); }));
  r.push_back(constant_record(
      "z3_li2_form", "Z3 as the integral of [Li2(-z-1) - Li2(-1) - Li2(-z)]/z", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache& c) { return catalog(CatalogId::kZ3Li2Form, p, c); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z3 * 5 / 24); }));
  r.push_back(constant_record(
      "z3_loglog_form", "Z3 = integral of log(t) log(t+2)/(1+t) over (0,1) + 3/4 zeta(3)", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        return line_integral([](const XReal& t) { return log(t) * log(t + 2) / (1 + t); }, p.zero(), p.num(1), p) +
               Consts(p).z3 * 3 / 4;
      },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z3 * 5 / 24); }));
  r.push_back(constant_record(
      "z3_two_int_form",
      "Z3 = 1/2 int_0^1 log^2(t+2)/(1+t) - int_0^(1/3) log^2(t)/(1-t^2) + 3/2 zeta(3)", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache& cache) {
        const Estimate a =
            line_integral([](const XReal& t) { return square(log(t + 2)) / (1 + t); }, p.zero(), p.num(1), p);
        const Estimate b = catalog(CatalogId::kIntLog2Third, p, cache);
        return scaled(a, XReal(1, p.work_bits) / 2) - b + Consts(p).z3 * 3 / 2;
      },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z3 * 5 / 24); }));
  r.push_back(constant_record(
      "int_log2_third",
      "int_0^(1/3) log^2(t)/(1-t^2) dt = 13/6 zeta(3) - Li3(1/3) - Li2(1/3) log 3 - log(9/8) log^2(3)/6",
      estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache& c) { return catalog(CatalogId::kIntLog2Third, p, c); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        return exact(c.z3 * 13 / 6 + third_tail(c, p));
      }));
  r.push_back(param_record(
      "lewin_628", "Lewin's formula for int_0^t log^2(u+1)/u du",
      {Sample{"t=1/2", {R(1, 2)}}, Sample{"t=1", {R(1)}}, Sample{"t=2", {R(2)}}}, estimated,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache& c) {
        IntegralSpec spec;
        spec.id = CatalogId::kLewinLhs;
        spec.param = x.params.at(0);
        return catalog(spec, p, c);
      },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        const XReal t = param(x, 0, p);
        const XReal l1 = log(t + 1);
        const XReal inv = 1 / (t + 1);
        return exact(log(t) * square(l1) - 2 * pow(l1, 3) / 3 - 2 * l1 * L(2, inv, p) - 2 * L(3, inv, p) +
                     2 * c.z3);
      }));
  r.push_back(constant_record(
      "int_log2_shift",
      "1/2 int_0^1 log^2(t+2)/(1+t) dt = 7/8 zeta(3) - Li3(1/3) - Li2(1/3) log 3 - log(9/8) log^2(3)/6", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const Estimate a =
            line_integral([](const XReal& t) { return square(log(t + 2)) / (1 + t); }, p.zero(), p.num(1), p);
        return scaled(a, XReal(1, p.work_bits) / 2);
      },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        return exact(c.z3 * 7 / 8 + third_tail(c, p));
      }));
  r.push_back(constant_record(
      "theorem_z3", "triple integral Z3 = 5/24 zeta(3)", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache& c) { return catalog(CatalogId::kZ3Direct, p, c); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z3 * 5 / 24); }));
  r.push_back(constant_record(
      "theorem_z3_sym", "cyclically symmetrized unit-cube form of Z3 = 5/24 zeta(3)", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache& c) { return catalog(CatalogId::kZ3Symmetrized, p, c); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z3 * 5 / 24); }));
  r.push_back(constant_record(
      "theorem_s3", "double sum S3 = 13/24 zeta(3)", strict,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(s3(p)); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z3 * 13 / 24); }));
  r.push_back(constant_record(
      "lemma_z3_s3", "Z3 = 3/4 zeta(3) - S3 by expanding the integrand as a geometric series", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache& c) { return catalog(CatalogId::kZ3Direct, p, c); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z3 * 3 / 4 - s3(p)); }));
  r.push_back(param_record(
      "s3_int_forms", "S3 as integrals of Li2(-t)/(t(1-t)) and of Li2(-sin^2 phi)/sin(2 phi)",
      {Sample{"rational", {}}, Sample{"trig", {}}}, estimated,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache& c) {
        return catalog(x.label == "rational" ? CatalogId::kS3Rational : CatalogId::kS3Trig, p, c);
      },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(s3(p)); }));
  r.push_back(constant_record(
      "s3_h1_form", "S3 = int_0^(1/2) log(1-t) log(1+t)/t dt - Li3(-1/2) - log 2 Li2(-1/2)", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(s3(p)); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache& cache) {
        const Consts c(p);
        const XReal h = c.q(-1, 2);
        return catalog(CatalogId::kS3LogLog, p, cache) + (-L(3, h, p) - c.ln2 * L(2, h, p));
      }));
  r.push_back(constant_record(
      "s3_li_form", "S3 = -Li_{1,2}(1/2,-1) - Li3(-1/2)", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(s3(p)); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        return -mpl({1, 2}, {R(1, 2), R(-1)}, p) + (-L(3, Consts(p).q(-1, 2), p));
      }));
  r.push_back(constant_record(
      "s3_h_tilde", "S3 = h~(1/2) - Li3(-1/2)", strict,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(s3(p)); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const XReal h = Consts(p).q(1, 2);
        return exact(h_tilde(h, p) - L(3, -h, p));
      }));
  r.push_back(constant_record(
      "euler_duality", "Euler's formula zeta(2,1) = zeta(3) as an instance of duality", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return mzv({2, 1}, p); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z3); }));
  r.push_back(constant_record(
      "dual_pair_12", "Li_{1,2}(1/2,-1) = l(1,1,1; 3,1,-1) = Li_{1,1,1}(1/3,3,-1) by duality", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return mpl({1, 2}, {R(1, 2), R(-1)}, p); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        return mpl({1, 1, 1}, {R(1, 3), R(3), R(-1)}, p);
      }));
  r.push_back(constant_record(
      "dual_pair_3", "Li3(-1/2) = -Li_{1,1,1}(1/3,3,1) by duality", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(L(3, Consts(p).q(-1, 2), p)); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return -mpl({1, 1, 1}, {R(1, 3), R(3), R(1)}, p); }));
  r.push_back(constant_record(
      "companion", "companion triple sum over odd k of 3^-n/(k(k+m)(k+m+n)) = 13/48 zeta(3)", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return companion(p); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z3 * 13 / 48); }));
  r.push_back(param_record(
      "g_closed", "Ramanujan's closed form for g(z) = sum H_k z^(k+1)/(k+1)^2", kUnit, strict,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) { return exact(g_fn(param(x, 0, p), p)); },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        return exact(g_fn(param(x, 0, p), p, SumPath::kClosed));
      }));
  r.push_back(param_record(
      "h_closed", "closed form for h(z) = sum H2_k z^(k+1)/(k+1)", kUnit, strict,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) { return exact(h_fn(param(x, 0, p), p)); },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        return exact(h_fn(param(x, 0, p), p, SumPath::kClosed));
      }));
  r.push_back(param_record(
      "h_tilde_integral", "h~(z) = log(1-z) Li2(-z) + int_0^z log(1-t) log(1+t)/t dt", kUnit, strict,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) { return exact(h_tilde(param(x, 0, p), p)); },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        return exact(h_tilde(param(x, 0, p), p, SumPath::kClosed));
      }));
  r.push_back(param_record(
      "corollary_s3_plus", "non-alternating double sum = h(1/2) + Li3(1/2) = 5/8 zeta(3)",
      {Sample{"double_sum", {}}, Sample{"h_form", {}}}, strict,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        if (x.label == "double_sum") return exact(s3_plus(p));
        const XReal h = Consts(p).q(1, 2);
        return exact(h_fn(h, p) + L(3, h, p));
      },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z3 * 5 / 8); }));
  r.push_back(param_record(
      "ramanujan_sum", "Ramanujan's double sum = g(1/2) + Li3(1/2) = zeta(3) - pi^2/12 log 2",
      {Sample{"double_sum", {}}, Sample{"g_form", {}}}, strict,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        if (x.label == "double_sum") return exact(ramanujan(p));
        const XReal h = Consts(p).q(1, 2);
        return exact(g_fn(h, p) + L(3, h, p));
      },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        return exact(c.z3 - square(c.pi) / 12 * c.ln2);
      }));
  r.push_back(param_record(
      "hpl_reduction", "H(1,-2;x) = -Li_{1,2}(x,-1) reduced to tri- and dilogarithms",
      {Sample{"x=1/3", {R(1, 3)}}, Sample{"x=1/2", {R(1, 2)}}, Sample{"x=2/3", {R(2, 3)}}}, estimated,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) { return -mpl({1, 2}, {x.params.at(0), R(-1)}, p); },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const PrecisionPolicy inner = p.widened(16);
        const Consts c(inner);
        return exact(hpl_closed(param(x, 0, inner), c, inner).with_bits(p.work_bits));
      }));
  r.push_back(constant_record(
      "value_z3_cas",
      "Z3 = Li3(-1/3) - 2 Li3(1/3) + 19/8 zeta(3) - pi^2/6 log 3 + log^3(3)/6 from a CAS evaluation", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache& c) { return catalog(CatalogId::kZ3Direct, p, c); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        const XReal t = c.q(1, 3);
        return exact(L(3, -t, p) - 2 * L(3, t, p) + c.z3 * 19 / 8 - square(c.pi) / 6 * c.ln3 + pow(c.ln3, 3) / 6);
      }));
  r.push_back(constant_record(
      "hyperint_form",
      "Z3 = 19/8 zeta(3) - 2 log 2 zeta(2) - Li_{2,1}(1/2,2) - Li_{1,1,1}(1/3,3/2,2) (hyperlogarithm evaluation)",
      estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache& c) { return catalog(CatalogId::kZ3Direct, p, c); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) {
        const Consts c(p);
        return -mpl({2, 1}, {R(1, 2), R(2)}, p) - mpl({1, 1, 1}, {R(1, 3), R(3, 2), R(2)}, p) +
               (c.z3 * 19 / 8 - 2 * c.ln2 * c.z2);
      }));
  r.push_back(constant_record(
      "kz_period", "zeta(3) as the period integral over 0 < x < y < z < 1 of 1/((1-x) y z)", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache& c) { return catalog(CatalogId::kKzZeta3, p, c); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z3); }));
  r.push_back(constant_record(
      "z2_eval", "unit-square integral of 1/(1+xy) = zeta(2)/2", estimated,
      [](const Sample&, const PrecisionPolicy& p, EvalCache& c) { return catalog(CatalogId::kZ2, p, c); },
      [](const Sample&, const PrecisionPolicy& p, EvalCache&) { return exact(Consts(p).z2 / 2); }));
  r.push_back(param_record(
      "zeta_cubes", "unit-cube integrals of 1/(1 -+ x1...xm) = zeta(m) and (1 - 2^(1-m)) zeta(m)",
      {Sample{"m=2,-", {R(2), R(-1)}}, Sample{"m=2,+", {R(2), R(1)}}, Sample{"m=3,-", {R(3), R(-1)}},
       Sample{"m=3,+", {R(3), R(1)}}},
      estimated,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache& c) {
        IntegralSpec spec;
        spec.id = CatalogId::kZetaCube;
        spec.m = static_cast<int>(int_param(x, 0));
        spec.sign = static_cast<int>(int_param(x, 1));
        return catalog(spec, p, c);
      },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const long m = int_param(x, 0);
        const XReal z = zeta_value(m, p.work_bits);
        if (int_param(x, 1) < 0) return exact(z);
        return exact(z * (1 - ldexp(XReal(1, p.work_bits), 1 - m)));
      }));
  r.push_back(param_record(
      "beukers_j0_j1", "Beukers' integrals J_0 = zeta(3) and J_1 = 5 zeta(3) - 6",
      {Sample{"n=0", {R(0)}}, Sample{"n=1", {R(1)}}}, estimated,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache& c) {
        IntegralSpec spec;
        spec.id = CatalogId::kBeukersJ;
        spec.n = static_cast<int>(int_param(x, 0));
        return catalog(spec, p, c);
      },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const XReal z = Consts(p).z3;
        return exact(int_param(x, 0) == 0 ? z : 5 * z - 6);
      }));
  std::vector<Sample> mellin;
  for (long n : {1L, 2L, 3L}) {
    for (const R& x : {R(1, 3), R(1, 2)}) {
      mellin.push_back(Sample{"n=" + std::to_string(n) + ",x=" + x.to_string(), {R(n), x}});
    }
  }
  r.push_back(param_record(
      "mellin_log2", "int_0^x t^(n-1) log^2(t) dt = x^n/n^3 (2 - 2n log x + n^2 log^2 x)", mellin, estimated,
      [](const Sample& x, const PrecisionPolicy& p, EvalCache& c) {
        IntegralSpec spec;
        spec.id = CatalogId::kMellinLog2;
        spec.n = static_cast<int>(int_param(x, 0));
        spec.param = x.params.at(1);
        return catalog(spec, p, c);
      },
      [](const Sample& x, const PrecisionPolicy& p, EvalCache&) {
        const long n = int_param(x, 0);
        const XReal v = param(x, 1, p);
        const XReal lg = log(v);
        return exact(pow(v, n) / (n * n * n) * (2 - 2 * n * lg + n * n * square(lg)));
      }));
  return r;
}

}  // namespace

const std::vector<IdentityRecord>& list_identities() {
  static const std::vector<IdentityRecord> records = build_registry();
  return records;
}

const IdentityRecord& find_identity(std::string_view id) {
  for (const auto& rec : list_identities()) {
    if (rec.id == id) return rec;
  }
  throw DomainError("unknown identity: " + std::string(id));
}

ReportEntry verify(const IdentityRecord& rec, const PrecisionPolicy& prec, EvalCache& cache, double perturbation) {
  const auto start = std::chrono::steady_clock::now();
  ReportEntry e;
  e.id = rec.id;
  e.paper_ref = rec.paper_ref;
  e.abs_diff = XReal(0, 64);
  e.tolerance = prec.tol().with_bits(64);
  e.status = Status::kPass;
  double worst_ratio = -1.0;
  const XReal pert = XReal::from_double(perturbation, prec.work_bits);
  for (const Sample& s : rec.samples) {
    try {
      const Estimate lhs = rec.lhs(s, prec, cache);
      const Estimate rhs = rec.rhs(s, prec, cache);
      const XReal diff = abs(lhs.value - (rhs.value + pert));
      XReal tol = prec.tol();
      if (rec.tol_class == TolClass::kEstimated) tol += (lhs.error + rhs.error) * 10;
      const double ratio = (diff / tol).to_double();
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        e.abs_diff = diff.with_bits(64);
        e.tolerance = tol.with_bits(64);
        e.worst_sample = s.label;
      }
      if (!(diff < tol) && e.status == Status::kPass) e.status = Status::kFail;
    } catch (const ConvergenceError& ex) {
      e.status = Status::kUnconverged;
      e.worst_sample = s.label;
      e.detail = ex.what();
      break;
    } catch (const std::exception& ex) {
      e.status = Status::kFail;
      e.worst_sample = s.label;
      e.detail = ex.what();
      break;
    }
  }
  e.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return e;
}

ReportEntry verify(std::string_view id, const PrecisionPolicy& prec, double perturbation) {
  EvalCache cache;
  return verify(find_identity(id), prec, cache, perturbation);
}

VerificationReport verify_all(const PrecisionPolicy& prec, bool parallel,
                              const std::map<std::string, double>& perturbations) {
  const auto& records = list_identities();
  EvalCache cache;
  auto pert_of = [&perturbations](const std::string& id) {
    auto it = perturbations.find(id);
    return it == perturbations.end() ? 0.0 : it->second;
  };
  VerificationReport report;
  report.precision_digits = prec.digits;
  report.results.resize(records.size());
  if (parallel) {
    std::vector<std::future<ReportEntry>> futures;
    futures.reserve(records.size());
    for (const auto& rec : records) {
      futures.push_back(std::async(std::launch::async, [&rec, &prec, &cache, p = pert_of(rec.id)] {
        return verify(rec, prec, cache, p);
      }));
    }
    for (std::size_t i = 0; i < records.size(); ++i) report.results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < records.size(); ++i) {
      report.results[i] = verify(records[i], prec, cache, pert_of(records[i].id));
    }
  }
  for (const auto& e : report.results) {
    if (e.status == Status::kPass) {
      ++report.passed;
    } else {
      ++report.failed;
    }
  }
  return report;
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::json j;
  j["precision_digits"] = precision_digits;
  const int digits = precision_digits > 0 ? precision_digits : 6;
  j["results"] = nlohmann::json::array();
  for (const auto& e : results) {
    j["results"].push_back({{"id", e.id},
                            {"paper_ref", e.paper_ref},
                            {"status", std::string(status_name(e.status))},
                            {"abs_diff", e.abs_diff.to_string(digits)},
                            {"tolerance", e.tolerance.to_string(digits)},
                            {"millis", e.millis}});
  }
  j["passed"] = passed;
  j["failed"] = failed;
  return j.dump(indent);
}

}  // namespace polyzeta
