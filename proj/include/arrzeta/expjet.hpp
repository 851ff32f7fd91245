#pragma once

#include "arrzeta/ratfunc.hpp"

namespace arrzeta {

// Truncated Laurent series in h whose coefficients are polynomials in s.
// Coefficients are stored for the exponents [shift, shift + size); every
// stored position is exact, and every exponent below shift is exactly zero.
class ExpJet {
 public:
  ExpJet() = default;

  // exp(c * h) truncated to len coefficients, c a polynomial in s.
  static ExpJet exp_of(const Poly<Rat>& c, int len);
  static ExpJet constant(const Rat& v, int len);
  static ExpJet from_coeffs(std::vector<Poly<Rat>> cs, long shift = 0);

  long shift() const { return shift_; }
  long end() const { return shift_ + static_cast<long>(c_.size()); }
  int size() const { return static_cast<int>(c_.size()); }

  // Coefficient of h^e; exact for e < end().
  const Poly<Rat>& at(long e) const;

  friend ExpJet operator+(const ExpJet& x, const ExpJet& y);
  friend ExpJet operator*(const ExpJet& x, const ExpJet& y);

  // Multiplicative inverse. The lowest nonzero coefficient must be a nonzero
  // rational constant; throws InvariantError otherwise.
  ExpJet inverse() const;

  ExpJet pow(int e) const;

 private:
  void strip_leading_zeros();
  long shift_ = 0;
  std::vector<Poly<Rat>> c_;
};

// Denef-Loeser style topological specialization: substitute p = exp(h),
// t = exp(-h*s) into a rational function of (p, t), expand as a Laurent
// series in h, check that all negative-degree coefficients vanish, and
// return the h^0 coefficient as a factored rational function of s.
// Throws InvariantError if a negative-degree coefficient survives (the input
// is not of zeta type) or if the truncation cap is exhausted.
RatFuncS specialize_p_to_1(const RatFuncT& Z, int order_cap = 64);

}  // namespace arrzeta
