#include "arrzeta/expjet.hpp"

#include <algorithm>

namespace arrzeta {

ExpJet ExpJet::exp_of(const Poly<Rat>& c, int len) {
  ExpJet j;
  j.c_.reserve(len);
  Poly<Rat> term(Rat(1));
  Rat fact(1);
  for (int i = 0; i < len; ++i) {
    if (i > 0) {
      term = term * c;
      fact *= Rat(i);
    }
    j.c_.push_back(term.scaled(Rat(1) / fact));
  }
  return j;
}

ExpJet ExpJet::constant(const Rat& v, int len) {
  ExpJet j;
  j.c_.assign(len, Poly<Rat>());
  if (!j.c_.empty()) j.c_[0] = Poly<Rat>(v);
  return j;
}

ExpJet ExpJet::from_coeffs(std::vector<Poly<Rat>> cs, long shift) {
  ExpJet j;
  j.shift_ = shift;
  j.c_ = std::move(cs);
  return j;
}

const Poly<Rat>& ExpJet::at(long e) const {
  static const Poly<Rat> zero;
  if (e < shift_ || e >= end()) return zero;
  return c_[e - shift_];
}

void ExpJet::strip_leading_zeros() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + lead);
    shift_ += static_cast<long>(lead);
  }
}

ExpJet operator+(const ExpJet& x, const ExpJet& y) {
  if (x.c_.empty()) return y;
  if (y.c_.empty()) return x;
  ExpJet r;
  r.shift_ = std::min(x.shift_, y.shift_);
  long end = std::min(x.end(), y.end());
  if (end <= r.shift_) return r;
  r.c_.assign(end - r.shift_, Poly<Rat>());
  for (long e = r.shift_; e < end; ++e) r.c_[e - r.shift_] = x.at(e) + y.at(e);
  return r;
}

ExpJet operator*(const ExpJet& x, const ExpJet& y) {
  ExpJet r;
  if (x.c_.empty() || y.c_.empty()) return r;
  r.shift_ = x.shift_ + y.shift_;
  int len = std::min(x.size(), y.size());
  r.c_.assign(len, Poly<Rat>());
  for (int i = 0; i < x.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (int j = 0; j < y.size() && i + j < len; ++j)
      r.c_[i + j] = r.c_[i + j] + x.c_[i] * y.c_[j];
  }
  return r;
}

ExpJet ExpJet::inverse() const {
  ExpJet a = *this;
  a.strip_leading_zeros();
  if (a.c_.empty()) throw InvariantError("inverse of zero jet");
  const Poly<Rat>& lead = a.c_[0];
  if (lead.degree() != 0)
    throw InvariantError("jet inverse requires a constant lowest coefficient");
  Rat inv_lead = Rat(1) / lead.coeff(0);
  ExpJet r;
  r.shift_ = -a.shift_;
  r.c_.assign(a.c_.size(), Poly<Rat>());
  r.c_[0] = Poly<Rat>(inv_lead);
  for (size_t n = 1; n < a.c_.size(); ++n) {
    Poly<Rat> acc;
    for (size_t k = 1; k <= n; ++k) acc = acc + a.c_[k] * r.c_[n - k];
    r.c_[n] = acc.scaled(-inv_lead);
  }
  return r;
}

ExpJet ExpJet::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  ExpJet r = ExpJet::constant(Rat(1), size() > 0 ? size() : 1);
  ExpJet base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

namespace {

// n(exp(h)) for a polynomial n in p.
ExpJet poly_in_p_at_exp(const Poly<Rat>& n, int len) {
  ExpJet acc = ExpJet::constant(Rat(0), len);
  for (int i = 0; i <= n.degree(); ++i) {
    if (n.coeff(i) == 0) continue;
    ExpJet e = ExpJet::exp_of(Poly<Rat>(Rat(i)), len);
    acc = acc + e * ExpJet::constant(n.coeff(i), len);
  }
  return acc;
}

// Unit series U with 1 - exp(-h*x) = h * x * U(h), i.e.
// U = sum_{i>=0} (-x)^i h^i / (i+1)!.
ExpJet atom_unit_series(const Poly<Rat>& x, int len) {
  std::vector<Poly<Rat>> cs;
  cs.reserve(len);
  Poly<Rat> term(Rat(1));
  Rat fact(1);
  for (int i = 0; i < len; ++i) {
    if (i > 0) term = term * (-x);
    fact *= Rat(i + 1);
    cs.push_back(term.scaled(Rat(1) / fact));
  }
  return ExpJet::from_coeffs(std::move(cs));
}

}  // namespace

RatFuncS specialize_p_to_1(const RatFuncT& Z, int order_cap) {
  if (Z.is_zero()) return RatFuncS();

  long A = 0;
  for (const auto& [atom, power] : Z.atoms()) A += power;

  int order = static_cast<int>(A) + Z.num().degree() + 2;
  order = std::max(order, 4);

  const Poly<Rat> s = Poly<Rat>::monomial(Rat(1), 1);

  for (;; order *= 2) {
    if (order > order_cap)
      throw InvariantError("specialization truncation order exhausted");

    // Numerator: sum over k of c_k(exp(h)) * exp(-k*s*h).
    ExpJet numjet = ExpJet::constant(Rat(0), order);
    for (int k = 0; k <= Z.num().degree(); ++k) {
      const PRat& ck = Z.num().coeff(k);
      if (ck.is_zero()) continue;
      ExpJet cj = poly_in_p_at_exp(ck.num(), order) *
                  poly_in_p_at_exp(ck.den(), order).inverse();
      numjet = numjet + cj * ExpJet::exp_of(s.scaled(Rat(-k)), order);
    }

    // Each atom 1 - p^{-b} t^a becomes 1 - exp(-h*(a*s+b)) =
    // h * (a*s+b) * U(h). The h powers shift the Laurent expansion by -A in
    // total, the linear parts become the atoms of the result, and only the
    // unit series U enter the jet product.
    ExpJet units = ExpJet::constant(Rat(1), order);
    for (const auto& [atom, power] : Z.atoms()) {
      Poly<Rat> x = Poly<Rat>::from_coeffs({Rat(atom.b), Rat(atom.a)});
      units = units * atom_unit_series(x, order).inverse().pow(power);
    }

    ExpJet S = numjet * units;

    if (S.end() <= A) continue;  // not enough precision to read h^A

    for (long e = S.shift(); e < A; ++e)
      if (!S.at(e).is_zero())
        throw InvariantError(
            "nonvanishing negative-order term in topological specialization");

    std::vector<std::tuple<long, long, int>> raw;
    for (const auto& [atom, power] : Z.atoms())
      raw.emplace_back(atom.a, atom.b, power);
    return RatFuncS(S.at(A), raw);
  }
}

}  // namespace arrzeta
