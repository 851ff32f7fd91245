#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arrzeta/common.hpp"

namespace arrzeta {

// Dense univariate polynomial over a field-like coefficient type K.
// The zero polynomial has an empty coefficient vector and degree -1.
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(const K& constant) {
    coeffs_.push_back(constant);
    trim();
  }

  static Poly monomial(const K& coeff, int deg) {
    Poly r;
    r.coeffs_.assign(static_cast<size_t>(deg) + 1, K());
    r.coeffs_[deg] = coeff;
    r.trim();
    return r;
  }

  static Poly from_coeffs(std::vector<K> cs) {
    Poly r;
    r.coeffs_ = std::move(cs);
    r.trim();
    return r;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const K& coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_;
    return coeffs_[i];
  }
  const K& leading() const {
    if (is_zero()) throw InvariantError("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  const std::vector<K>& coeffs() const { return coeffs_; }

  Poly operator-() const {
    Poly r = *this;
    for (K& c : r.coeffs_) c = K() - c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), K());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i)
      r.coeffs_[i] = r.coeffs_[i] + b.coeffs_[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, K());
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const K& s) const {
    Poly r = *this;
    for (K& c : r.coeffs_) c = c * s;
    r.trim();
    return r;
  }

  K eval(const K& x) const {
    K acc{};
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
  }

  Poly pow(int e) const {
    if (e < 0) throw InvariantError("negative polynomial power");
    Poly r(K() + unit());
    Poly base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // Long division; remainder returned alongside the quotient.
  static void divmod(const Poly& num, const Poly& den, Poly& q, Poly& rem) {
    if (den.is_zero()) throw InvariantError("polynomial division by zero");
    q = Poly();
    rem = num;
    if (num.degree() < den.degree()) return;
    q.coeffs_.assign(num.degree() - den.degree() + 1, K());
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
      K c = rem.leading() / den.leading();
      int shift = rem.degree() - den.degree();
      q.coeffs_[shift] = c;
      for (int i = 0; i <= den.degree(); ++i)
        rem.coeffs_[i + shift] = rem.coeffs_[i + shift] - c * den.coeffs_[i];
      rem.trim();
    }
    q.trim();
  }

  std::optional<Poly> exact_div(const Poly& den) const {
    Poly q, rem;
    divmod(*this, den, q, rem);
    if (!rem.is_zero()) return std::nullopt;
    return q;
  }

 private:
  static K unit() {
    // K must be constructible from 1.
    return K(1);
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == zero_) coeffs_.pop_back();
  }

  inline static const K zero_{};
  std::vector<K> coeffs_;
};

// Positive rational c such that f / c has coprime integer coefficients.
Rat poly_content(const Poly<Rat>& f);

// Monic gcd over Q[x] (Euclid). gcd(0,0) = 0.
Poly<Rat> poly_gcd(Poly<Rat> a, Poly<Rat> b);

// Human-readable form, highest degree first, e.g. "-2*s^2 + s + 1".
std::string poly_str(const Poly<Rat>& f, const std::string& var);

}  // namespace arrzeta
