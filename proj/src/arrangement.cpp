#include "arrzeta/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "arrzeta/linalg.hpp"

namespace arrzeta {

void Hyperplane::canonicalize() {
  bool all_zero = std::all_of(normal.begin(), normal.end(),
                              [](const Rat& c) { return c == 0; });
  if (all_zero) throw InputError("zero normal vector");
  Int den_lcm = 1;
  for (const Rat& c : normal)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Int content = 0;
  for (const Rat& c : normal) {
    Int scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat scale = make_rat(den_lcm, content);
  for (const Rat& c : normal)
    if (c != 0) {
      if (c * scale < 0) scale = -scale;
      break;
    }
  for (Rat& c : normal) c *= scale;
  offset *= scale;
  if (mult < 1) throw InputError("multiplicity must be positive");
}

bool Arrangement::central() const {
  return std::all_of(hyperplanes.begin(), hyperplanes.end(),
                     [](const Hyperplane& h) { return h.offset == 0; });
}

long Arrangement::degree() const {
  long d = 0;
  for (const Hyperplane& h : hyperplanes) d += h.mult;
  return d;
}

bool Arrangement::reduced() const {
  return std::all_of(hyperplanes.begin(), hyperplanes.end(),
                     [](const Hyperplane& h) { return h.mult == 1; });
}

void Arrangement::normalize() {
  if (dim < 1) throw InputError("ambient dimension must be positive");
  for (Hyperplane& h : hyperplanes) {
    if (static_cast<int>(h.normal.size()) != dim)
      throw InputError("normal vector length does not match dimension");
    h.canonicalize();
  }
  std::map<std::pair<std::vector<Rat>, Rat>, long> merged;
  for (const Hyperplane& h : hyperplanes)
    merged[{h.normal, h.offset}] += h.mult;
  hyperplanes.clear();
  for (const auto& [key, mult] : merged)
    hyperplanes.push_back(Hyperplane{key.first, key.second, mult});
}

std::string var_name(int i, int n) {
  static const char* alias = "xyzw";
  if (n <= 4) return std::string(1, alias[i]);
  return "x" + std::to_string(i + 1);
}

namespace {

int var_index(const std::string& name, int n) {
  if (n <= 4 && name.size() == 1) {
    const std::string alias = "xyzw";
    auto pos = alias.find(name[0]);
    if (pos != std::string::npos && static_cast<int>(pos) < n)
      return static_cast<int>(pos);
  }
  if (name.size() >= 2 && name[0] == 'x') {
    bool digits = std::all_of(name.begin() + 1, name.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
    if (digits) {
      int idx = std::stoi(name.substr(1));
      if (idx >= 1 && idx <= n) return idx - 1;
      throw InputError("variable '" + name + "' out of range for n=" +
                       std::to_string(n));
    }
  }
  throw InputError("unknown variable '" + name + "'");
}

// Parses a linear form like "x + 2*y - 1/2*z" into a normal vector.
std::vector<Rat> parse_form(const std::string& text, int n) {
  std::vector<Rat> normal(n, Rat(0));
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  bool any_term = false;
  skip_ws();
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = (text[i] == '-') ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any_term) {
      throw InputError("expected '+' or '-' in linear form: '" + text + "'");
    }
    // optional rational coefficient
    std::string num;
    while (i < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      num.push_back(text[i++]);
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    // variable name
    std::string name;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i]))))
      name.push_back(text[i++]);
    if (name.empty()) {
      if (!num.empty())
        throw InputError("constant term in linear form (use '= c' for offsets): '" +
                         text + "'");
      throw InputError("malformed linear form: '" + text + "'");
    }
    Rat coeff = num.empty() ? Rat(1) : parse_rat(num);
    normal[var_index(name, n)] += Rat(sign) * coeff;
    any_term = true;
    skip_ws();
  }
  if (!any_term) throw InputError("empty linear form");
  return normal;
}

Arrangement parse_arrangement_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad JSON arrangement: ") + e.what());
  }
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw InputError("JSON arrangement needs an integer field 'n'");
  Arrangement A;
  A.dim = j["n"].get<int>();
  for (const auto& hj : j.value("hyperplanes", nlohmann::json::array())) {
    Hyperplane h;
    for (const auto& c : hj.at("normal"))
      h.normal.push_back(parse_rat(c.get<std::string>()));
    h.offset = hj.contains("offset") ? parse_rat(hj["offset"].get<std::string>())
                                     : Rat(0);
    h.mult = hj.value("mult", 1);
    A.hyperplanes.push_back(std::move(h));
  }
  A.normalize();
  return A;
}

}  // namespace

Arrangement parse_arrangement(const std::string& text) {
  size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{')
    return parse_arrangement_json(text);

  // ';' is accepted as a line separator for one-line descriptions.
  std::string unfolded = text;
  std::replace(unfolded.begin(), unfolded.end(), ';', '\n');
  std::istringstream in(unfolded);
  std::string line;
  Arrangement A;
  bool have_dim = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto notspace = line.find_first_not_of(" \t\r");
    if (notspace == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(notspace, last - notspace + 1);
    if (!have_dim) {
      if (line.rfind("n", 0) != 0 || line.find('=') == std::string::npos)
        throw InputError("first line must be 'n=<int>'");
      std::string v = line.substr(line.find('=') + 1);
      A.dim = static_cast<int>(parse_rat(v).get_num().get_si());
      if (A.dim < 1) throw InputError("dimension must be positive");
      have_dim = true;
      continue;
    }
    std::string form = line, offset_text;
    auto eq = line.find('=');
    if (eq != std::string::npos) {
      form = line.substr(0, eq);
      offset_text = line.substr(eq + 1);
    }
    long mult = 1;
    auto caret = form.find('^');
    if (caret != std::string::npos) {
      Rat m = parse_rat(form.substr(caret + 1));
      if (!rat_is_integer(m) || m < 1) throw InputError("bad multiplicity");
      mult = m.get_num().get_si();
      form = form.substr(0, caret);
    }
    Hyperplane h;
    h.normal = parse_form(form, A.dim);
    h.offset = offset_text.empty() ? Rat(0) : parse_rat(offset_text);
    h.mult = mult;
    A.hyperplanes.push_back(std::move(h));
  }
  if (!have_dim) throw InputError("empty arrangement description");
  A.normalize();
  return A;
}

std::string serialize_arrangement(const Arrangement& A) {
  std::ostringstream out;
  out << "n=" << A.dim << "\n";
  for (const Hyperplane& h : A.hyperplanes) {
    bool first = true;
    for (int i = 0; i < A.dim; ++i) {
      const Rat& c = h.normal[i];
      if (c == 0) continue;
      Rat abs = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (abs != 1) out << rat_str(abs) << "*";
      out << var_name(i, A.dim);
      first = false;
    }
    if (h.mult != 1) out << " ^" << h.mult;
    if (h.offset != 0) out << " = " << rat_str(h.offset);
    out << "\n";
  }
  return out.str();
}

std::string serialize_arrangement_json(const Arrangement& A) {
  nlohmann::ordered_json j;
  j["n"] = A.dim;
  j["hyperplanes"] = nlohmann::ordered_json::array();
  for (const Hyperplane& h : A.hyperplanes) {
    nlohmann::ordered_json hj;
    hj["normal"] = nlohmann::ordered_json::array();
    for (const Rat& c : h.normal) hj["normal"].push_back(rat_str(c));
    hj["offset"] = rat_str(h.offset);
    hj["mult"] = h.mult;
    j["hyperplanes"].push_back(std::move(hj));
  }
  return j.dump();
}

Arrangement localize_at(const Arrangement& A, const std::vector<Rat>& x0) {
  if (static_cast<int>(x0.size()) != A.dim)
    throw InputError("point length does not match dimension");
  Arrangement out;
  out.dim = A.dim;
  for (const Hyperplane& h : A.hyperplanes) {
    Rat v(0);
    for (int i = 0; i < A.dim; ++i) v += h.normal[i] * x0[i];
    if (v == h.offset)
      out.hyperplanes.push_back(Hyperplane{h.normal, Rat(0), h.mult});
  }
  out.normalize();
  return out;
}

std::pair<Arrangement, int> essentialize(const Arrangement& A) {
  if (!A.central()) throw InputError("essentialize requires a central arrangement");
  std::vector<std::vector<Rat>> rows;
  for (const Hyperplane& h : A.hyperplanes) rows.push_back(h.normal);
  std::vector<int> pivots = rref(rows);
  int rank = static_cast<int>(rows.size());
  int center_dim = A.dim - rank;
  if (center_dim == 0) return {A, 0};
  if (rank == 0)
    throw InputError("cannot essentialize an empty arrangement");
  // New coordinates y_i = r_i . x for the RREF rows r_i; a normal in the row
  // space has quotient coordinates given by its pivot entries.
  Arrangement out;
  out.dim = rank;
  for (const Hyperplane& h : A.hyperplanes) {
    Hyperplane q;
    q.offset = Rat(0);
    q.mult = h.mult;
    for (int r = 0; r < rank; ++r) q.normal.push_back(h.normal[pivots[r]]);
    out.hyperplanes.push_back(std::move(q));
  }
  out.normalize();
  return {out, center_dim};
}

}  // namespace arrzeta
