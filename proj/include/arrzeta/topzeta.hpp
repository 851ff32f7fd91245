#pragma once

#include "arrzeta/lattice.hpp"
#include "arrzeta/ratfunc.hpp"

namespace arrzeta {

struct CandidatePole {
  int edge_id = 0;
  int codim = 0;
  long a = 0;
  Rat value;  // -codim / a
};

struct EigenvalueCertificate {
  Rat pole;
  int witness_edge = 0;
  uint64_t witness_support = 0;
  Rat eigenvalue_class;  // pole mod 1, in [0,1); class of exp(2*pi*i*pole)
  static constexpr const char* justification =
      "indecomposable-local-eigenvalues+deformation-retract";
};

// Local topological zeta function at the origin of a central arrangement,
// computed by the origin-blowup recursion over the intersection lattice.
RatFuncS zeta_top(const Arrangement& A);

// Zeta of every localization A_W, indexed by edge id; entry at the top edge
// (after essentialization the input itself) equals zeta_top.
std::vector<RatFuncS> zeta_top_localizations(const IntersectionLattice& L);

RatFuncS zeta_top_at_point(const Arrangement& A, const std::vector<Rat>& x0);

// One candidate -codim(W)/a_W per dense edge W.
std::vector<CandidatePole> candidate_poles(const Arrangement& A,
                                           const IntersectionLattice& L);

// For every pole of zeta_top, finds the dense-edge witnesses with matching
// -codim/a_W and emits one certificate per pole (first witness recorded).
// A pole without a witness is an InvariantError.
std::vector<EigenvalueCertificate> verify_theorem_A(const Arrangement& A);

struct MonodromyZeta {
  long degree = 0;    // total degree d
  long exponent = 0;  // chi(U)
  std::string str() const;
};
// Monodromy zeta function (1 - t^d)^{chi(U)} of the Milnor fiber at 0.
MonodromyZeta monodromy_zeta(const Arrangement& A, const IntersectionLattice& L);

// {k/d mod 1 : k = 1..d} for an indecomposable central arrangement; the
// classes of all monodromy eigenvalues. Throws InputError when decomposable.
std::vector<Rat> eigenvalue_set(const Arrangement& A);

}  // namespace arrzeta
