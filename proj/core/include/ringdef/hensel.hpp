#pragma once

#include <vector>

#include "ringdef/elem.hpp"

namespace ringdef {

// Monic integer polynomial, coefficients low degree first, leading 1 implicit
// in callers' responsibility? No: the full coefficient list including the
// leading coefficient, which must be 1.
struct IntPoly {
  std::vector<BigInt> coeffs;  // c_0 .. c_n, c_n = 1 expected for lifting

  BigInt eval(const BigInt& x) const;
  IntPoly derivative() const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  // "X^3-8" style univariate syntax: terms k*X^e, X^e, +-k.
  static IntPoly parse(std::string_view text);
  std::string to_string() const;
};

// Unique root of P modulo p^q lifting the simple residual root x0 (Newton
// iteration with exponent doubling). Requires P(x0) = 0 mod p and
// P'(x0) != 0 mod p, else NotASimpleRoot.
BigInt hensel_lift(const IntPoly& P, const BigInt& p, const BigInt& x0, unsigned q);

}  // namespace ringdef
