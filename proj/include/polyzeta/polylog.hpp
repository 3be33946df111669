#pragma once

#include "polyzeta/precision.hpp"
#include "polyzeta/xreal.hpp"

namespace polyzeta {

/// Evaluation route for li(). kAutomatic picks by region; the others force
/// one application of the named transformation (inner values automatic).
enum class LiPath {
  kAutomatic,
  kSeries,       // sum z^k / k^s, |z| < 1
  kReflection,   // z -> 1 - z (and 1 - 1/z for s = 3), 0 < z < 1, s in {2, 3}
  kInversion,    // z -> 1/z, z < 0, s in {2, 3}
  kAlternating,  // accelerated alternating series, -1 <= z < 0
};

/// Classical polylogarithm Li_s(z) for integer s >= 1 and real z <= 1.
///
/// Raises DomainError when z > 1 or (s, z) = (1, 1), and UnsupportedError
/// for s >= 4 with z in (1/2, 1) or z < -1.
XReal li(long s, const XReal& z, const PrecisionPolicy& prec, LiPath path = LiPath::kAutomatic);

/// Li_2(z) as the integral of log(t)/(1-t) from 1 to 1-z.
XReal li2_via_integral(const XReal& z, const PrecisionPolicy& prec);

/// Li_s(z) = z/(s-1)! * int_0^1 (-log u)^(s-1) / (1 - z u) du, for z <= 1, s >= 2.
///
/// Shares no code path with li(), so identities that li() uses internally
/// can be checked against it.
XReal li_via_integral(long s, const XReal& z, const PrecisionPolicy& prec);

}  // namespace polyzeta
