#pragma once

#include <cmath>

#include "polyzeta/xreal.hpp"

namespace polyzeta {

/// Working precision plus the guard margin used when comparing results.
struct PrecisionPolicy {
  Bits work_bits = 171;
  Bits guard_bits = 32;
  int digits = 50;

  static PrecisionPolicy from_digits(int digits, Bits guard_bits = 32) {
    PrecisionPolicy p;
    p.digits = digits;
    p.guard_bits = guard_bits;
    p.work_bits = static_cast<Bits>(std::ceil(digits * 3.321928094887362)) + 4;
    if (p.work_bits < XReal::kMinBits) p.work_bits = XReal::kMinBits;
    return p;
  }

  static PrecisionPolicy from_bits(Bits bits, Bits guard_bits = 32) {
    PrecisionPolicy p;
    p.work_bits = bits < XReal::kMinBits ? XReal::kMinBits : bits;
    p.guard_bits = guard_bits;
    p.digits = static_cast<int>(std::floor(static_cast<double>(p.work_bits - 4) / 3.321928094887362));
    return p;
  }

  /// Same policy with `extra` more working bits.
  PrecisionPolicy widened(Bits extra) const {
    PrecisionPolicy p = from_bits(work_bits + extra, guard_bits);
    p.digits = digits;
    return p;
  }

  /// 2^(guard_bits - work_bits).
  XReal tol() const { return ldexp(XReal(1, work_bits), guard_bits - work_bits); }
  double tol_double() const { return std::ldexp(1.0, static_cast<int>(guard_bits - work_bits)); }

  XReal zero() const { return XReal(0, work_bits); }
  XReal num(long v) const { return XReal(v, work_bits); }
};

}  // namespace polyzeta
