#include "arrzeta/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace arrzeta {

Poly<Rat> LinAtom::poly() const {
  return Poly<Rat>::from_coeffs({Rat(b), Rat(a)});
}

std::string LinAtom::str(const std::string& var) const {
  std::ostringstream out;
  if (a != 1) out << a << "*";
  out << var;
  if (b > 0) out << " + " << b;
  if (b < 0) out << " - " << -b;
  return out.str();
}

RatFuncS::RatFuncS(Poly<Rat> numerator,
                   const std::vector<std::tuple<long, long, int>>& raw_atoms)
    : num_(std::move(numerator)) {
  Rat fold(1);
  std::map<LinAtom, int> merged;
  for (auto [a, b, power] : raw_atoms) {
    if (power == 0) continue;
    if (a <= 0 || power < 0) throw InvariantError("bad linear atom");
    long g = std::gcd(a, b < 0 ? -b : b);
    if (g == 0) g = a;  // b == 0
    LinAtom atom{a / g, b / g};
    merged[atom] += power;
    for (int i = 0; i < power; ++i) fold *= g;
  }
  num_ = num_.scaled(Rat(1) / fold);
  atoms_.assign(merged.begin(), merged.end());
  normalize();
}

void RatFuncS::normalize() {
  if (num_.is_zero()) {
    atoms_.clear();
    return;
  }
  for (auto& [atom, power] : atoms_) {
    Poly<Rat> ap = atom.poly();
    while (power > 0) {
      auto q = num_.exact_div(ap);
      if (!q) break;
      num_ = *q;
      --power;
    }
  }
  std::erase_if(atoms_, [](const auto& e) { return e.second == 0; });
  std::sort(atoms_.begin(), atoms_.end());
}

static std::vector<std::pair<LinAtom, int>> atom_union(
    const std::vector<std::pair<LinAtom, int>>& x,
    const std::vector<std::pair<LinAtom, int>>& y) {
  std::map<LinAtom, int> u(x.begin(), x.end());
  for (const auto& [atom, power] : y) {
    int& e = u[atom];
    e = std::max(e, power);
  }
  return {u.begin(), u.end()};
}

RatFuncS operator+(const RatFuncS& x, const RatFuncS& y) {
  auto common = atom_union(x.atoms(), y.atoms());
  auto lift = [&common](const RatFuncS& f) {
    Poly<Rat> n = f.num();
    std::map<LinAtom, int> have(f.atoms().begin(), f.atoms().end());
    for (const auto& [atom, power] : common) {
      int missing = power - (have.count(atom) ? have[atom] : 0);
      if (missing > 0) n = n * atom.poly().pow(missing);
    }
    return n;
  };
  RatFuncS r;
  r.num_ = lift(x) + lift(y);
  r.atoms_ = common;
  r.normalize();
  return r;
}

RatFuncS operator-(const RatFuncS& x, const RatFuncS& y) {
  return x + y.scaled(Rat(-1));
}

RatFuncS operator*(const RatFuncS& x, const RatFuncS& y) {
  RatFuncS r;
  r.num_ = x.num_ * y.num_;
  std::map<LinAtom, int> merged(x.atoms_.begin(), x.atoms_.end());
  for (const auto& [atom, power] : y.atoms_) merged[atom] += power;
  r.atoms_.assign(merged.begin(), merged.end());
  r.normalize();
  return r;
}

RatFuncS RatFuncS::scaled(const Rat& c) const {
  RatFuncS r = *this;
  r.num_ = r.num_.scaled(c);
  if (c == 0) r.atoms_.clear();
  return r;
}

RatFuncS RatFuncS::div_atom(long a, long b, int power) const {
  std::vector<std::tuple<long, long, int>> raw;
  for (const auto& [atom, p] : atoms_) raw.emplace_back(atom.a, atom.b, p);
  raw.emplace_back(a, b, power);
  return RatFuncS(num_, raw);
}

std::vector<std::pair<Rat, int>> RatFuncS::poles() const {
  std::vector<std::pair<Rat, int>> ps;
  for (const auto& [atom, power] : atoms_)
    ps.emplace_back(make_rat(Int(-atom.b), Int(atom.a)), power);
  std::sort(ps.begin(), ps.end(),
            [](const auto& l, const auto& r) { return l.first > r.first; });
  return ps;
}

Rat RatFuncS::eval(const Rat& s) const {
  Rat den(1);
  for (const auto& [atom, power] : atoms_) {
    Rat v = Rat(atom.a) * s + Rat(atom.b);
    if (v == 0) throw InputError("evaluation at a pole");
    for (int i = 0; i < power; ++i) den *= v;
  }
  return Rat(num_.eval(s) / den);
}

std::string RatFuncS::str(const std::string& var) const {
  std::string n = poly_str(num_, var);
  if (atoms_.empty()) return n;
  std::ostringstream out;
  out << "(" << n << ") / (";
  bool first = true;
  for (const auto& [atom, power] : atoms_) {
    if (!first) out << "*";
    first = false;
    out << "(" << atom.str(var) << ")";
    if (power > 1) out << "^" << power;
  }
  out << ")";
  return out.str();
}

Poly<PRat> GeomAtom::poly() const {
  std::vector<PRat> cs(static_cast<size_t>(a) + 1, PRat(0));
  cs[0] = PRat(1);
  cs[a] = -PRat::p_power(-b);
  return Poly<PRat>::from_coeffs(std::move(cs));
}

std::string GeomAtom::str() const {
  std::ostringstream out;
  out << "1 - p^-" << b;
  if (a == 1)
    out << "*t";
  else
    out << "*t^" << a;
  return out.str();
}

RatFuncT::RatFuncT(Poly<PRat> numerator,
                   const std::vector<std::tuple<long, long, int>>& raw_atoms)
    : num_(std::move(numerator)) {
  std::map<GeomAtom, int> merged;
  for (auto [a, b, power] : raw_atoms) {
    if (power == 0) continue;
    if (a < 1 || b < 1 || power < 0) throw InvariantError("bad geometric atom");
    merged[GeomAtom{a, b}] += power;
  }
  atoms_.assign(merged.begin(), merged.end());
  normalize();
}

void RatFuncT::normalize() {
  if (num_.is_zero()) {
    atoms_.clear();
    return;
  }
  for (auto& [atom, power] : atoms_) {
    Poly<PRat> ap = atom.poly();
    while (power > 0) {
      auto q = num_.exact_div(ap);
      if (!q) break;
      num_ = *q;
      --power;
    }
  }
  std::erase_if(atoms_, [](const auto& e) { return e.second == 0; });
  std::sort(atoms_.begin(), atoms_.end());
}

static std::vector<std::pair<GeomAtom, int>> atom_union_t(
    const std::vector<std::pair<GeomAtom, int>>& x,
    const std::vector<std::pair<GeomAtom, int>>& y) {
  std::map<GeomAtom, int> u(x.begin(), x.end());
  for (const auto& [atom, power] : y) {
    int& e = u[atom];
    e = std::max(e, power);
  }
  return {u.begin(), u.end()};
}

RatFuncT operator+(const RatFuncT& x, const RatFuncT& y) {
  auto common = atom_union_t(x.atoms(), y.atoms());
  auto lift = [&common](const RatFuncT& f) {
    Poly<PRat> n = f.num();
    std::map<GeomAtom, int> have(f.atoms().begin(), f.atoms().end());
    for (const auto& [atom, power] : common) {
      int missing = power - (have.count(atom) ? have[atom] : 0);
      if (missing > 0) n = n * atom.poly().pow(missing);
    }
    return n;
  };
  RatFuncT r;
  r.num_ = lift(x) + lift(y);
  r.atoms_ = common;
  r.normalize();
  return r;
}

RatFuncT operator*(const RatFuncT& x, const RatFuncT& y) {
  RatFuncT r;
  r.num_ = x.num_ * y.num_;
  std::map<GeomAtom, int> merged(x.atoms_.begin(), x.atoms_.end());
  for (const auto& [atom, power] : y.atoms_) merged[atom] += power;
  r.atoms_.assign(merged.begin(), merged.end());
  r.normalize();
  return r;
}

RatFuncT RatFuncT::scaled(const PRat& c) const {
  RatFuncT r = *this;
  r.num_ = r.num_.scaled(c);
  if (c.is_zero()) r.atoms_.clear();
  return r;
}

RatFuncT RatFuncT::times_t_power(int e) const {
  RatFuncT r = *this;
  r.num_ = r.num_ * Poly<PRat>::monomial(PRat(1), e);
  return r;
}

RatFuncT RatFuncT::div_atom(long a, long b, int power) const {
  RatFuncT r;
  r.num_ = num_;
  std::map<GeomAtom, int> merged(atoms_.begin(), atoms_.end());
  if (a < 1 || b < 1 || power < 0) throw InvariantError("bad geometric atom");
  merged[GeomAtom{a, b}] += power;
  r.atoms_.assign(merged.begin(), merged.end());
  r.normalize();
  return r;
}

Poly<PRat> RatFuncT::den_expanded() const {
  Poly<PRat> d(PRat(1));
  for (const auto& [atom, power] : atoms_) d = d * atom.poly().pow(power);
  return d;
}

bool operator==(const RatFuncT& x, const RatFuncT& y) {
  // Atoms are not irreducible, so compare values, not representations.
  return x.num() * y.den_expanded() == y.num() * x.den_expanded();
}

std::set<Rat> RatFuncT::pole_real_parts() const {
  std::set<Rat> out;
  for (const auto& [atom, power] : atoms_)
    if (power > 0) out.insert(make_rat(Int(-atom.b), Int(atom.a)));
  return out;
}

Rat RatFuncT::eval(const Rat& p0, const Rat& t0) const {
  Rat n(0), tp(1);
  for (int i = 0; i <= num_.degree(); ++i) {
    n += num_.coeff(i).eval(p0) * tp;
    tp *= t0;
  }
  Rat d(1);
  for (const auto& [atom, power] : atoms_) {
    Rat pb = PRat::p_power(-atom.b).eval(p0);
    Rat ta(1);
    for (long i = 0; i < atom.a; ++i) ta *= t0;
    Rat v = Rat(1) - pb * ta;
    if (v == 0) throw InputError("evaluation at a pole");
    for (int i = 0; i < power; ++i) d *= v;
  }
  return Rat(n / d);
}

bool RatFuncT::is_one_at_t1() const {
  PRat n(0);
  for (int i = 0; i <= num_.degree(); ++i) n = n + num_.coeff(i);
  PRat d(1);
  for (const auto& [atom, power] : atoms_)
    d = d * (PRat(1) - PRat::p_power(-atom.b)).pow(power);
  return n == d;
}

static std::string poly_prat_str(const Poly<PRat>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const PRat& c = f.coeff(i);
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c.str();
      continue;
    }
    if (!(c == PRat(1))) out << "(" << c.str() << ")*";
    out << "t";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

std::string RatFuncT::str() const {
  std::string n = poly_prat_str(num_);
  if (atoms_.empty()) return n;
  std::ostringstream out;
  out << "(" << n << ") / (";
  bool first = true;
  for (const auto& [atom, power] : atoms_) {
    if (!first) out << "*";
    first = false;
    out << "(" << atom.str() << ")";
    if (power > 1) out << "^" << power;
  }
  out << ")";
  return out.str();
}

}  // namespace arrzeta
