#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyzeta/precision.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/xreal.hpp"

namespace polyzeta {

enum class QuadMethod { kGaussLegendre, kTanhSinh };

std::string_view method_name(QuadMethod m);

struct QuadResult {
  XReal value;
  /// |Q_L - Q_{L-1}| for the last two refinement levels.
  XReal est_error;
  long evaluations = 0;
  bool converged = false;
  int level = 0;
  /// Value at every level that was computed, coarsest first.
  std::vector<XReal> history;
  /// est_error after every level from the second one on.
  std::vector<XReal> estimates;
};

struct QuadOptions {
  QuadMethod method = QuadMethod::kTanhSinh;
  /// Refinement stops once est_error <= max(target, tol(prec)).
  double target = 0.0;
  int min_level = 1;
  int max_level = 10;
  /// When set, only levels fixed_level - 1 and fixed_level are computed.
  std::optional<int> fixed_level;
  /// Tanh-sinh abscissae are dropped once their distance to an endpoint
  /// falls below this; zero means 2^(-2 work_bits).
  double trunc_eps = 0.0;
};

/// Integrand on (0, 1): receives u and 1 - u, both accurate near either end.
using UnitFn = std::function<XReal(const XReal& u, const XReal& one_minus_u)>;
using Fn1 = std::function<XReal(const XReal& x)>;
/// Integrand on (0, 1)^d: coordinates and their complements.
using CubeFn = std::function<XReal(std::span<const XReal> x, std::span<const XReal> one_minus_x)>;

/// Gauss-Legendre level L uses 4 * 2^L nodes per dimension.
int gauss_legendre_nodes(int level);

QuadResult integrate_unit(const UnitFn& f, const QuadOptions& opts, const PrecisionPolicy& prec);
QuadResult integrate_1d(const Fn1& f, const XReal& a, const XReal& b, const QuadOptions& opts,
                        const PrecisionPolicy& prec);
QuadResult integrate_cube(const CubeFn& f, int dim, const QuadOptions& opts, const PrecisionPolicy& prec);

enum class CatalogId {
  kZ3Direct,
  kZ3Symmetrized,
  kZ2,
  kKzZeta3,
  kZetaCube,
  kBeukersJ,
  kIntLog2Third,
  kLewinLhs,
  kMellinLog2,
  kS3Rational,
  kS3Trig,
  kS3LogLog,
  kZ3Li2Form,
};

struct IntegralSpec {
  CatalogId id = CatalogId::kZ3Direct;
  /// Beukers index or Mellin exponent.
  int n = 0;
  /// Dimension of the zeta cube.
  int m = 3;
  /// -1 for 1/(1 - x1...xm), +1 for 1/(1 + x1...xm).
  int sign = -1;
  /// Upper endpoint t of lewin_lhs, or x of mellin_log2.
  BigRational param{1};
  std::optional<QuadMethod> method;
  std::optional<int> level;
};

std::optional<CatalogId> catalog_id_from_name(std::string_view name);
std::string_view catalog_name(CatalogId id);
const std::vector<CatalogId>& catalog_ids();

/// Validates parameters, then integrates with the entry's mandated method.
QuadResult catalog_eval(const IntegralSpec& spec, const PrecisionPolicy& prec);

/// Accuracy each entry is refined to (on top of tol(prec)).
double catalog_target(const IntegralSpec& spec);

}  // namespace polyzeta
