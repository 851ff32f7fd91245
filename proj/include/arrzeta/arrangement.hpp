#pragma once

#include <string>
#include <vector>

#include "arrzeta/common.hpp"

namespace arrzeta {

// One affine hyperplane { x : normal . x = offset } with a positive integer
// multiplicity. Canonical form: integer normal entries with content 1 and a
// positive leading nonzero entry; the offset is scaled along.
struct Hyperplane {
  std::vector<Rat> normal;
  Rat offset;
  long mult = 1;

  void canonicalize();
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// A hyperplane arrangement given by linear factors with multiplicities.
// Normalized: canonical hyperplanes, duplicates merged (multiplicities
// summed), hyperplanes sorted canonically.
struct Arrangement {
  int dim = 0;
  std::vector<Hyperplane> hyperplanes;

  bool central() const;
  long degree() const;  // sum of multiplicities
  bool reduced() const;

  void normalize();
};

// Text format: first line "n=<int>", then one linear form per line in
// x1..xn (aliases x,y,z,w when n <= 4), with rational coefficients, an
// optional "^<mult>" suffix and an optional "= <rational>" offset.
// '#' starts a comment. A leading '{' selects the JSON equivalent.
Arrangement parse_arrangement(const std::string& text);

std::string serialize_arrangement(const Arrangement& A);
std::string serialize_arrangement_json(const Arrangement& A);

// Central arrangement of the hyperplanes through x0, translated to the
// origin; multiplicities preserved.
Arrangement localize_at(const Arrangement& A, const std::vector<Rat>& x0);

// Quotient of a central arrangement by its center (the intersection of all
// hyperplanes). The result is essential; returns the center dimension.
std::pair<Arrangement, int> essentialize(const Arrangement& A);

// Variable name for coordinate i (0-based) in dimension n.
std::string var_name(int i, int n);

}  // namespace arrzeta
