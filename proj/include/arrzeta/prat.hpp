#pragma once

#include <string>

#include "arrzeta/polynomial.hpp"

namespace arrzeta {

// Element of Q(p): a fraction of integer polynomials in the symbolic prime p.
// Canonical form: numerator and denominator are integer polynomials, each
// primitive part pair coprime, gcd(content(num), content(den)) = 1, and the
// denominator has positive leading coefficient. Equality is structural.
class PRat {
 public:
  PRat() : num_(), den_(Rat(1)) {}
  PRat(long v) : num_(Rat(v)), den_(Rat(1)) {}
  PRat(const Rat& v);
  explicit PRat(Poly<Rat> num) : num_(std::move(num)), den_(Rat(1)) { reduce(); }
  PRat(Poly<Rat> num, Poly<Rat> den);

  static PRat var() { return PRat(Poly<Rat>::monomial(Rat(1), 1)); }
  // p^e for any integer e.
  static PRat p_power(long e);

  const Poly<Rat>& num() const { return num_; }
  const Poly<Rat>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend PRat operator+(const PRat& a, const PRat& b) {
    return PRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend PRat operator-(const PRat& a, const PRat& b) {
    return PRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend PRat operator*(const PRat& a, const PRat& b) {
    return PRat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend PRat operator/(const PRat& a, const PRat& b) {
    if (b.is_zero()) throw InvariantError("division by zero in Q(p)");
    return PRat(a.num_ * b.den_, a.den_ * b.num_);
  }
  PRat operator-() const {
    PRat r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend bool operator==(const PRat& a, const PRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const PRat& a, const PRat& b) { return !(a == b); }

  PRat pow(long e) const;

  // Substitutes a concrete rational for p; throws on vanishing denominator.
  Rat eval(const Rat& p0) const;

  std::string str(const std::string& var = "p") const;

 private:
  void reduce();
  Poly<Rat> num_, den_;
};

}  // namespace arrzeta
