#pragma once

#include <string>
#include <vector>

#include "polyzeta/precision.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/xreal.hpp"

namespace polyzeta {

/// A value with an absolute error bound or estimate.
struct Estimate {
  XReal value;
  XReal error;
};

/// Li_{s_1,...,s_k}(z_1,...,z_k) = sum_{n_1 > ... > n_k >= 1} prod z_j^n_j / n_j^s_j.
/// The first weight and argument belong to the outermost index n_1.
struct MPLSpec {
  std::vector<int> weights;
  std::vector<BigRational> args;

  int depth() const { return static_cast<int>(weights.size()); }
  int weight() const;
  std::string to_string() const;
};

/// l(s_1..s_k; y_1..y_k) = Li_{s_1..s_k}(1/y_1, y_1/y_2, ..., y_{k-1}/y_k).
struct LNotationSpec {
  std::vector<int> weights;
  std::vector<BigRational> ys;

  int depth() const { return static_cast<int>(weights.size()); }
  std::string to_string() const;
  friend bool operator==(const LNotationSpec&, const LNotationSpec&) = default;
};

enum class MplClass { kGeometric, kHarmonicTail, kDivergent };

std::string_view mpl_class_name(MplClass c);

/// Raises DomainError when weights and arguments do not pair up or a weight is < 1.
void validate(const MPLSpec& spec);

/// y_1 = 1/z_1, y_j = y_{j-1}/z_j. Requires every z_j nonzero.
std::vector<BigRational> ys_of(const MPLSpec& spec);

/// z_1 = 1/y_1, z_j = y_{j-1}/y_j; any y_j = 0 raises DomainError.
MPLSpec to_mpl(const LNotationSpec& spec);
LNotationSpec to_l_notation(const MPLSpec& spec);

/// Geometric when every |y_j| > 1; harmonic-tail when every |y_j| >= 1 with
/// equality somewhere and (s_1, y_1) != (1, 1); divergent otherwise. A zero
/// argument makes every term vanish and counts as geometric.
MplClass mpl_classify(const MPLSpec& spec);

/// Geometric class: certified truncation bound. Harmonic-tail class: the
/// nested partial sums are continued by their asymptotic expansions, and the
/// error is ten times the change between two expansion orders.
Estimate mpl_eval(const MPLSpec& spec, const PrecisionPolicy& prec);

/// Multiple zeta value; s_1 = 1 raises DomainError.
Estimate mzv(const std::vector<int>& weights, const PrecisionPolicy& prec);

Estimate l_eval(const LNotationSpec& spec, const PrecisionPolicy& prec);

}  // namespace polyzeta
