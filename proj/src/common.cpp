#include "arrzeta/common.hpp"

#include <cctype>

namespace arrzeta {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InputError("zero denominator in rational");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InputError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw InputError("not a rational: '" + text + "'");
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw InputError("not a rational: '" + text + "'");
  return make_rat(Int(num), Int(den));
}

std::string rat_str(const Rat& q) { return q.get_str(); }

bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

Rat rat_mod1(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  Rat r = q - Rat(fl);
  r.canonicalize();
  return r;
}

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw InvariantError("integer out of long range");
  return z.get_si();
}

}  // namespace arrzeta
