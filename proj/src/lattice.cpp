#include "arrzeta/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>

#include "arrzeta/linalg.hpp"

namespace arrzeta {

std::vector<int> Edge::support_indices() const {
  std::vector<int> out;
  for (int j = 0; j < 64; ++j)
    if (support & (uint64_t(1) << j)) out.push_back(j);
  return out;
}

namespace {

std::string rref_key(const std::vector<std::vector<Rat>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (const Rat& c : row) out << c.get_str() << ",";
    out << ";";
  }
  return out.str();
}

}  // namespace

IntersectionLattice build_lattice(const Arrangement& A) {
  if (!A.central()) throw InputError("intersection lattice requires a central arrangement");
  const int n = A.dim;
  const int d = static_cast<int>(A.hyperplanes.size());
  if (d > 64) throw InputError("at most 64 distinct hyperplanes supported");

  std::vector<std::vector<Rat>> normals;
  for (const Hyperplane& h : A.hyperplanes) normals.push_back(h.normal);

  struct Node {
    std::vector<std::vector<Rat>> rref;
    std::vector<int> pivots;
  };
  std::map<std::string, Node> seen;
  Node bottom;  // ambient space: empty normal set
  seen.emplace(rref_key(bottom.rref), bottom);
  std::vector<Node> frontier{bottom};
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int j = 0; j < d; ++j) {
        if (in_rowspace(node.rref, node.pivots, normals[j])) continue;
        Node child;
        child.rref = node.rref;
        child.rref.push_back(normals[j]);
        child.pivots = rref(child.rref);
        std::string key = rref_key(child.rref);
        if (seen.emplace(key, child).second) next.push_back(child);
      }
    }
    frontier = std::move(next);
  }

  IntersectionLattice L;
  L.dim_ = n;
  for (auto& [key, node] : seen) {
    Edge e;
    e.rref = node.rref;
    e.pivots = node.pivots;
    e.codim = static_cast<int>(node.rref.size());
    e.dim = n - e.codim;
    for (int j = 0; j < d; ++j)
      if (in_rowspace(node.rref, node.pivots, normals[j])) {
        e.support |= uint64_t(1) << j;
        e.a += A.hyperplanes[j].mult;
      }
    e.basis = kernel_basis(node.rref, node.pivots, n);
    L.edges_.push_back(std::move(e));
  }
  std::sort(L.edges_.begin(), L.edges_.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.codim, x.support) < std::pair(y.codim, y.support);
  });
  const int E = L.size();
  for (int i = 0; i < E; ++i) L.edges_[i].id = i;
  L.top_ = E - 1;
  if (L.edges_[L.top_].support != (d == 64 ? ~uint64_t(0) : ((uint64_t(1) << d) - 1)))
    throw InvariantError("center support is not the full hyperplane set");

  // Pairwise Moebius values by recursive inversion: for i <= k <= j,
  // mu(i, j) = -sum_{i <= k < j} mu(i, k). Sorted order is a linear
  // extension, so a forward sweep suffices.
  L.mobius_.assign(E, std::vector<long>(E, 0));
  for (int i = 0; i < E; ++i) {
    L.mobius_[i][i] = 1;
    for (int j = i + 1; j < E; ++j) {
      if (!L.leq(i, j)) continue;
      long acc = 0;
      for (int k = i; k < j; ++k)
        if (L.leq(i, k) && L.leq(k, j)) acc += L.mobius_[i][k];
      L.mobius_[i][j] = -acc;
    }
  }
  for (int i = 0; i < E; ++i) L.edges_[i].mobius = L.mobius_[0][i];

  for (int w = 1; w < E; ++w)
    L.edges_[w].dense = localized_proj_euler(L, w) != 0;
  for (int w = 0; w < E; ++w)
    if (L.edges_[w].codim == 1 && !L.edges_[w].dense)
      throw InvariantError("a hyperplane edge failed the density test");
  return L;
}

std::vector<int> IntersectionLattice::dense_edge_ids() const {
  std::vector<int> out;
  for (const Edge& e : edges_)
    if (e.dense) out.push_back(e.id);
  return out;
}

namespace {

// (poly / (1+t)) evaluated at t = -1; the division must be exact.
long chi_from_pi(const Poly<Rat>& pi) {
  auto q = pi.exact_div(Poly<Rat>::from_coeffs({Rat(1), Rat(1)}));
  if (!q)
    throw InvariantError("(1+t) does not divide the Poincare polynomial");
  Rat v = q->eval(Rat(-1));
  if (!rat_is_integer(v))
    throw InvariantError("non-integer Euler characteristic");
  return to_long(v.get_num());
}

}  // namespace

Poly<Rat> poincare_polynomial(const IntersectionLattice& L) {
  Poly<Rat> pi;
  for (const Edge& e : L.edges())
    pi = pi + Poly<Rat>::monomial(Rat(e.mobius), e.codim)
                  .scaled((e.codim % 2) ? Rat(-1) : Rat(1));
  return pi;
}

long proj_complement_euler(const IntersectionLattice& L) {
  return chi_from_pi(poincare_polynomial(L));
}

long localized_proj_euler(const IntersectionLattice& L, int w) {
  Poly<Rat> pi;
  for (const Edge& e : L.edges()) {
    if (!L.leq(e.id, w)) continue;
    Rat sign = (e.codim % 2) ? Rat(-1) : Rat(1);
    pi = pi + Poly<Rat>::monomial(Rat(e.mobius) * sign, e.codim);
  }
  return chi_from_pi(pi);
}

long interval_stratum_euler(const IntersectionLattice& L, int y, int x) {
  if (y == x || !L.leq(y, x))
    throw InvariantError("interval_stratum_euler requires y < x");
  const int dim_y = L.edge(y).dim;
  Poly<Rat> pi;
  for (const Edge& e : L.edges()) {
    if (!L.leq(y, e.id) || !L.leq(e.id, x)) continue;
    int c = dim_y - e.dim;
    Rat sign = (c % 2) ? Rat(-1) : Rat(1);
    pi = pi + Poly<Rat>::monomial(Rat(L.mobius(y, e.id)) * sign, c);
  }
  return chi_from_pi(pi);
}

long stratum_proj_euler(const IntersectionLattice& L, int w) {
  if (w == L.top()) {
    const Edge& center = L.edge(w);
    return center.dim == 0 ? 1 : center.dim;
  }
  return interval_stratum_euler(L, w, L.top());
}

GenericCheck is_generic(const Arrangement& A, const IntersectionLattice& L) {
  if (!A.reduced())
    throw InputError("genericity is defined for reduced arrangements");
  GenericCheck out;
  out.essential = (L.edge(L.top()).dim == 0);
  out.generic = true;
  for (const Edge& e : L.edges()) {
    if (e.dim == 0) continue;  // only nonzero edges constrain genericity
    if (std::popcount(e.support) != e.codim) {
      out.generic = false;
      break;
    }
  }
  return out;
}

std::vector<std::vector<int>> matroid_decompose(const Arrangement& A) {
  const int d = static_cast<int>(A.hyperplanes.size());
  std::vector<int> parent(d);
  for (int i = 0; i < d; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

  // Greedy basis; each non-basis element is joined to the basis elements of
  // its fundamental circuit. The classes generated this way are exactly the
  // connected components of the matroid.
  std::vector<std::vector<Rat>> basis_rref;
  std::vector<int> basis_pivots, basis_ids;
  for (int j = 0; j < d; ++j) {
    if (!in_rowspace(basis_rref, basis_pivots, A.hyperplanes[j].normal)) {
      basis_rref.push_back(A.hyperplanes[j].normal);
      basis_pivots = rref(basis_rref);
      basis_ids.push_back(j);
    }
  }
  for (int j = 0; j < d; ++j) {
    // coefficients of normal j in the basis expansion
    std::vector<std::vector<Rat>> rows;
    for (int b : basis_ids) rows.push_back(A.hyperplanes[b].normal);
    // solve c^T rows = normal_j by elimination on the transpose
    const int r = static_cast<int>(rows.size());
    std::vector<std::vector<Rat>> aug(A.dim, std::vector<Rat>(r + 1, Rat(0)));
    for (int col = 0; col < A.dim; ++col) {
      for (int i = 0; i < r; ++i) aug[col][i] = rows[i][col];
      aug[col][r] = A.hyperplanes[j].normal[col];
    }
    std::vector<int> piv = rref(aug);
    for (size_t row = 0; row < aug.size(); ++row) {
      if (piv[row] == r)
        throw InvariantError("basis expansion failed");
      if (aug[row][r] != 0) unite(j, basis_ids[piv[row]]);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int j = 0; j < d; ++j) groups[find(j)].push_back(j);
  std::vector<std::vector<int>> parts;
  for (auto& [root, members] : groups) parts.push_back(members);
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::map<long, long> nu_counts(const Arrangement& A, const IntersectionLattice& L) {
  if (A.dim != 3) throw InputError("nu counts are defined in dimension 3");
  if (!A.reduced()) throw InputError("nu counts require a reduced arrangement");
  if (L.edge(L.top()).dim != 0)
    throw InputError("nu counts require an essential arrangement");
  std::map<long, long> nu;
  for (const Edge& e : L.edges())
    if (e.codim == 2) nu[std::popcount(e.support)]++;
  return nu;
}

Arrangement localize_at_edge(const Arrangement& A, const IntersectionLattice& L, int w) {
  const Edge& e = L.edge(w);
  if (e.codim == 0)
    throw InputError("cannot localize at the ambient edge");
  Arrangement out;
  out.dim = e.codim;
  for (int j : e.support_indices()) {
    Hyperplane q;
    q.offset = Rat(0);
    q.mult = A.hyperplanes[j].mult;
    for (size_t r = 0; r < e.rref.size(); ++r)
      q.normal.push_back(A.hyperplanes[j].normal[e.pivots[r]]);
    out.hyperplanes.push_back(std::move(q));
  }
  out.normalize();
  return out;
}

}  // namespace arrzeta
