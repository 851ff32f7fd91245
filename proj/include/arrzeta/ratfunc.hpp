#pragma once

#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "arrzeta/prat.hpp"

namespace arrzeta {

// Linear denominator atom a*s + b with a > 0 and gcd(a, b) = 1.
struct LinAtom {
  long a = 1, b = 0;
  friend auto operator<=>(const LinAtom&, const LinAtom&) = default;
  Poly<Rat> poly() const;
  std::string str(const std::string& var = "s") const;
};

// Exact rational function in s, kept as numerator / product of linear atoms.
// Fully cancelled and atom-sorted, so equal values have identical
// representations.
class RatFuncS {
 public:
  RatFuncS() = default;  // the zero function
  explicit RatFuncS(Poly<Rat> numerator) : num_(std::move(numerator)) {}
  // Raw atoms (a, b, power) are rescaled to primitive form; the freed
  // rational constants are folded into the numerator.
  RatFuncS(Poly<Rat> numerator, const std::vector<std::tuple<long, long, int>>& raw_atoms);

  static RatFuncS one() { return RatFuncS(Poly<Rat>(Rat(1))); }

  const Poly<Rat>& num() const { return num_; }
  const std::vector<std::pair<LinAtom, int>>& atoms() const { return atoms_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFuncS operator+(const RatFuncS& x, const RatFuncS& y);
  friend RatFuncS operator-(const RatFuncS& x, const RatFuncS& y);
  friend RatFuncS operator*(const RatFuncS& x, const RatFuncS& y);
  RatFuncS scaled(const Rat& c) const;
  // Multiplies by 1 / (a*s + b)^power.
  RatFuncS div_atom(long a, long b, int power = 1) const;
  friend bool operator==(const RatFuncS& x, const RatFuncS& y) {
    return x.num_ == y.num_ && x.atoms_ == y.atoms_;
  }
  friend bool operator!=(const RatFuncS& x, const RatFuncS& y) { return !(x == y); }

  // Poles with multiplicities, ordered by decreasing value (closest to 0
  // first). Canonical form guarantees the numerator misses every pole.
  std::vector<std::pair<Rat, int>> poles() const;

  Rat eval(const Rat& s) const;  // throws InputError at a pole

  std::string str(const std::string& var = "s") const;

 private:
  void normalize();
  Poly<Rat> num_;
  std::vector<std::pair<LinAtom, int>> atoms_;
};

// Geometric denominator atom (1 - p^{-b} t^a), a >= 1, b >= 1.
struct GeomAtom {
  long a = 1, b = 1;
  friend auto operator<=>(const GeomAtom&, const GeomAtom&) = default;
  Poly<PRat> poly() const;
  std::string str() const;
};

// Exact rational function in t = p^{-s} with coefficients in Q(p), kept as
// numerator / product of geometric atoms. Atoms need not be irreducible, so
// the fully-cancelled representation is not unique; operator== compares
// values by cross-multiplication.
class RatFuncT {
 public:
  RatFuncT() = default;
  explicit RatFuncT(Poly<PRat> numerator) : num_(std::move(numerator)) {}
  RatFuncT(Poly<PRat> numerator, const std::vector<std::tuple<long, long, int>>& raw_atoms);

  static RatFuncT one() { return RatFuncT(Poly<PRat>(PRat(1))); }

  const Poly<PRat>& num() const { return num_; }
  const std::vector<std::pair<GeomAtom, int>>& atoms() const { return atoms_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFuncT operator+(const RatFuncT& x, const RatFuncT& y);
  friend RatFuncT operator*(const RatFuncT& x, const RatFuncT& y);
  RatFuncT scaled(const PRat& c) const;
  RatFuncT times_t_power(int e) const;
  RatFuncT div_atom(long a, long b, int power = 1) const;

  friend bool operator==(const RatFuncT& x, const RatFuncT& y);
  friend bool operator!=(const RatFuncT& x, const RatFuncT& y) { return !(x == y); }

  Poly<PRat> den_expanded() const;

  // {-b/a} over surviving atoms: real parts of the poles in s.
  std::set<Rat> pole_real_parts() const;

  // Substitutes concrete values for p and t.
  Rat eval(const Rat& p0, const Rat& t0) const;

  // Exact check that the value at t = 1 is the constant 1 in Q(p).
  bool is_one_at_t1() const;

  std::string str() const;

 private:
  void normalize();
  Poly<PRat> num_;
  std::vector<std::pair<GeomAtom, int>> atoms_;
};

}  // namespace arrzeta
