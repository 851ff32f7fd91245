#pragma once

#include "arrzeta/expjet.hpp"
#include "arrzeta/lattice.hpp"
#include "arrzeta/topzeta.hpp"

namespace arrzeta {

struct GoodReductionCheck {
  long prime = 0;
  bool ok = true;
  struct Failure {
    std::string what;    // hyperplane pair or edge description
    std::string reason;
  };
  std::vector<Failure> failures;
};

// Whether the intersection lattice survives reduction mod p: no hyperplane
// collisions, every edge keeps its rank, and no new incidences appear.
GoodReductionCheck good_reduction(const Arrangement& A, long p);

// For each edge, the number of residue-field points on the edge and off all
// smaller edges, as a polynomial in p. The counts partition p^n.
std::vector<Poly<Rat>> stratum_counts(const Arrangement& A,
                                      const IntersectionLattice& L);

// Igusa zeta function over the full integer polydisc with symbolic p,
// computed by the homogeneity recursion over the intersection lattice.
RatFuncT igusa_zeta(const Arrangement& A);

// The same integral restricted to the maximal-ideal polydisc:
// p^{-n} t^d * igusa_zeta.
RatFuncT igusa_zeta_local(const Arrangement& A);

// Per-localization values, indexed by edge id (top = the full zeta).
std::vector<RatFuncT> igusa_zeta_localizations(const IntersectionLattice& L);

std::set<Rat> pole_real_parts(const RatFuncT& Z);

struct BruteForceResult {
  Rat lo, hi;                   // rigorous interval for the integral
  std::vector<uint64_t> exact;  // residues with valuation v < k
  uint64_t ambiguous = 0;       // residues with f = 0 mod p^k
  std::string kernel;           // kernel used for the enumeration
};

// Rigorous enclosure of the Igusa integral at integer s >= 1 by exhaustive
// enumeration of residues mod p^k. Residues with valuation v < k contribute
// exactly; residues where f vanishes mod p^k contribute [0, p^{-ks - kn}].
// Feasibility guard: p^{kn} <= 10^8.
BruteForceResult brute_force_igusa(const Arrangement& A, long p, int k,
                                   const Rat& s, bool force_scalar = false);

struct BridgeWitness {
  RatFuncT igusa;
  RatFuncS specialized;
  RatFuncS topological;
  bool equal = false;
};

// Computes the symbolic-p Igusa zeta, applies the p -> 1 specialization and
// compares with the topological zeta function; inequality is an
// InvariantError, never silently returned.
BridgeWitness specialization_bridge(const Arrangement& A);

}  // namespace arrzeta
