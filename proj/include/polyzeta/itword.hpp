#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyzeta/multipolylog.hpp"
#include "polyzeta/precision.hpp"
#include "polyzeta/rational.hpp"

namespace polyzeta {

/// sign * int_0^1 w(a_1) ... w(a_n), where w(a) = dx/(x - a) and the
/// integration runs over 1 > x_1 > x_2 > ... > x_n > 0.
struct SignedWord {
  int sign = 1;
  std::vector<BigRational> letters;

  /// "+[0,1,1]", "-[3,1,-1]", "+[1/2,0,-2]".
  std::string to_string() const;
  /// Inverse of to_string(); a missing sign means "+".
  static SignedWord parse(std::string_view text);

  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

struct Decoded {
  int coefficient = 1;
  LNotationSpec spec;
};

/// Letters are the blocks 0^(s_j - 1) y_j in order, with sign (-1)^k.
SignedWord encode(const LNotationSpec& spec);

/// Reverses the letters and maps a -> 1 - a; the sign picks up (-1)^n.
SignedWord dual(const SignedWord& w);

/// Splits the letters into blocks 0^(s_j - 1) y_j; coefficient = sign * (-1)^k,
/// so coefficient * l(spec) equals the word's value. A trailing 0 letter
/// raises DomainError("non-decodable word").
Decoded decode(const SignedWord& w);

/// Nested-simplex integral of a word of length <= 3 by tanh-sinh cubature.
/// Letters inside (0, 1) and words whose decoded polylogarithm diverges
/// raise DomainError.
Estimate word_value_quadrature(const SignedWord& w, const PrecisionPolicy& prec);

}  // namespace polyzeta
