#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arrzeta/arrangement.hpp"
#include "arrzeta/polynomial.hpp"

namespace arrzeta {

// One element of the intersection lattice: a subspace obtained by
// intersecting hyperplanes. The support is closed (it lists every hyperplane
// containing the subspace), so supports identify edges uniquely and
// containment of edges is reverse containment of supports.
struct Edge {
  int id = 0;
  uint64_t support = 0;
  int dim = 0, codim = 0;
  long a = 0;             // sum of multiplicities over the support
  long mobius = 0;        // mu(bottom, this)
  bool dense = false;
  std::vector<std::vector<Rat>> rref;   // defining normal space, RREF rows
  std::vector<int> pivots;
  std::vector<std::vector<Rat>> basis;  // basis of the subspace itself

  std::vector<int> support_indices() const;
};

// Intersection lattice of a central arrangement, ordered by reverse
// inclusion: bottom = ambient space, top = center. Immutable once built.
class IntersectionLattice {
 public:
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }
  int bottom() const { return 0; }
  int top() const { return top_; }

  // Lattice order: i <= j iff edge i contains edge j as a subspace.
  bool leq(int i, int j) const {
    return (edges_[i].support & ~edges_[j].support) == 0;
  }
  // mu(i, j) for i <= j; 0 if incomparable.
  long mobius(int i, int j) const { return mobius_[i][j]; }

  std::vector<int> dense_edge_ids() const;

  friend IntersectionLattice build_lattice(const Arrangement& A);

 private:
  int dim_ = 0;
  int top_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<long>> mobius_;
};

// Enumerates every intersection of hyperplanes of a central arrangement by
// saturation, with Moebius values by recursive inversion from the bottom and
// dense flags decided through the localized complement Euler characteristic.
IntersectionLattice build_lattice(const Arrangement& A);

// Poincare polynomial sum_X mu(X) (-t)^codim(X); multiplicities ignored.
Poly<Rat> poincare_polynomial(const IntersectionLattice& L);

// Euler characteristic of the projective complement U = P^{m-1} \ P(A),
// computed as (pi(A,t)/(1+t)) at t = -1. Nonzero iff indecomposable.
long proj_complement_euler(const IntersectionLattice& L);

// Same, for the localization interval [bottom, W]: the complement Euler
// characteristic of the arrangement of hyperplanes through W in the quotient.
long localized_proj_euler(const IntersectionLattice& L, int w);

// Euler characteristic of the open stratum of the interval [y, x]:
// P(y/x) minus the projectivized strictly smaller edges of the interval.
// Requires y < x in the lattice order.
long interval_stratum_euler(const IntersectionLattice& L, int y, int x);

// chi of P(W) minus the projectivizations of all strictly smaller edges;
// for the center itself: 1 when the center is {0}, else chi(P(center)).
long stratum_proj_euler(const IntersectionLattice& L, int w);

struct GenericCheck {
  bool generic = false;
  bool essential = false;
};
// A central reduced arrangement is generic when every nonzero edge W is
// contained in exactly codim(W) hyperplanes.
GenericCheck is_generic(const Arrangement& A, const IntersectionLattice& L);

// Finest partition of the hyperplanes for which the matroid of the normals
// is the direct sum over the parts; one part means indecomposable.
std::vector<std::vector<int>> matroid_decompose(const Arrangement& A);

// nu_m = number of codimension-2 edges supported on exactly m hyperplanes.
// Requires a central essential reduced arrangement in dimension 3.
std::map<long, long> nu_counts(const Arrangement& A, const IntersectionLattice& L);

// The arrangement induced on the quotient by an edge: hyperplanes through W,
// viewed in C^n / W. Central and essential by construction.
Arrangement localize_at_edge(const Arrangement& A, const IntersectionLattice& L, int w);

}  // namespace arrzeta
