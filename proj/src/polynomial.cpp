#include "arrzeta/polynomial.hpp"

namespace arrzeta {

Rat poly_content(const Poly<Rat>& f) {
  if (f.is_zero()) return Rat(0);
  Int den_lcm = 1;
  for (const Rat& c : f.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Int num_gcd = 0;
  for (const Rat& c : f.coeffs()) {
    Int scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  return make_rat(num_gcd, den_lcm);
}

Poly<Rat> poly_gcd(Poly<Rat> a, Poly<Rat> b) {
  while (!b.is_zero()) {
    Poly<Rat> q, r;
    Poly<Rat>::divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scaled(Rat(1) / a.leading());
}

std::string poly_str(const Poly<Rat>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Rat c = f.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat abs = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    bool unit_coeff = (abs == 1) && i > 0;
    if (!unit_coeff) out << rat_str(abs);
    if (i > 0) {
      if (!unit_coeff) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace arrzeta
