#pragma once

#include <optional>
#include <set>

#include "arrzeta/topzeta.hpp"

namespace arrzeta {

// Roots of the b-function of a reduced generic central essential arrangement
// of d hyperplanes in C^n: { -(i+n)/d : 0 <= i <= 2d-n-2 }.
std::set<Rat> generic_bfunction_roots(int n, long d);

struct ModerateCheck {
  bool moderate = true;
  // First violating pair (w, w') of dense edges with w strictly inside w'.
  std::optional<std::pair<int, int>> violation;
};
// Checks codim(W)/a_W <= codim(W')/a_W' over all nested pairs of dense
// edges W inside W'.
ModerateCheck is_moderate(const Arrangement& A, const IntersectionLattice& L);

enum class JumpingVerdict { kJumping, kNotJumping };
// The dimension-3 jumping-number criterion for 3/d: jumping iff the number
// of projective points of multiplicity m with 2d/3 < m <= d differs from 1.
// Requires central, essential, reduced, n = 3, d >= 5.
JumpingVerdict jumping_3d_criterion(const Arrangement& A,
                                    const IntersectionLattice& L);

enum class ConjectureStatus {
  kVerifiedGeneric,
  kVerifiedModerate,
  kVerifiedDim3Jumping,
  kConditionalOnNDOverD,
};
const char* status_name(ConjectureStatus s);

struct EdgeConjectureReport {
  int edge_id = 0;
  uint64_t support = 0;
  int codim = 0;
  long a = 0;
  Rat candidate;  // -codim/a
  ConjectureStatus status = ConjectureStatus::kConditionalOnNDOverD;
  std::string evidence;
  std::string literature;  // optional known-result note from corpus data
};

struct ConjectureReport {
  std::vector<EdgeConjectureReport> edges;  // one per dense edge
  bool decomposable = false;
  bool all_verified = false;
};

// Classifies the candidate -codim(W)/a_W of every dense edge W by the
// strongest applicable criterion: generic closed form, moderate type, or the
// dimension-3 jumping test; anything else stays conditional on the -n/d
// root conjecture for indecomposable arrangements.
ConjectureReport conjecture_report(const Arrangement& A,
                                   const IntersectionLattice& L);

}  // namespace arrzeta
