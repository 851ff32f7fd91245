#include "arrzeta/prat.hpp"

namespace arrzeta {

PRat::PRat(const Rat& v) : num_(v), den_(Rat(1)) { reduce(); }

PRat::PRat(Poly<Rat> num, Poly<Rat> den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvariantError("zero denominator in Q(p)");
  reduce();
}

void PRat::reduce() {
  if (num_.is_zero()) {
    den_ = Poly<Rat>(Rat(1));
    return;
  }
  Poly<Rat> g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = *num_.exact_div(g);
    den_ = *den_.exact_div(g);
  }
  // Scale to coprime integer polynomials with positive-leading denominator.
  Rat cn = poly_content(num_);
  Rat cd = poly_content(den_);
  Rat scale = cn / cd;  // positive; numerator/denominator already coprime
  num_ = num_.scaled(Rat(scale.get_num()) / cn);
  den_ = den_.scaled(Rat(scale.get_den()) / cd);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

PRat PRat::p_power(long e) {
  if (e >= 0) return PRat(Poly<Rat>::monomial(Rat(1), static_cast<int>(e)));
  return PRat(Poly<Rat>(Rat(1)), Poly<Rat>::monomial(Rat(1), static_cast<int>(-e)));
}

PRat PRat::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw InvariantError("negative power of zero in Q(p)");
    return PRat(den_, num_).pow(-e);
  }
  PRat r(1);
  PRat base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Rat PRat::eval(const Rat& p0) const {
  Rat d = den_.eval(p0);
  if (d == 0) throw InvariantError("Q(p) denominator vanishes at evaluation point");
  return Rat(num_.eval(p0) / d);
}

std::string PRat::str(const std::string& var) const {
  if (den_ == Poly<Rat>(Rat(1))) return poly_str(num_, var);
  std::string n = poly_str(num_, var);
  std::string d = poly_str(den_, var);
  if (num_.degree() > 0) n = "(" + n + ")";
  if (den_.degree() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace arrzeta
