#include "arrzeta/igusa.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "arrzeta/kernels/valuation.hpp"
#include "arrzeta/linalg.hpp"

namespace arrzeta {

namespace {

std::vector<std::vector<long>> normals_mod_p(const Arrangement& A, long p) {
  std::vector<std::vector<long>> rows;
  for (const Hyperplane& h : A.hyperplanes) {
    std::vector<long> r;
    for (const Rat& c : h.normal) {
      if (c.get_den() != 1)
        throw InvariantError("non-integer canonical normal");
      Int residue = c.get_num() % p;
      long v = to_long(residue);
      r.push_back(((v % p) + p) % p);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// Support sets of the mod-p intersection lattice, by the same saturation
// walk as the rational lattice.
std::set<uint64_t> lattice_supports_mod_p(
    const std::vector<std::vector<long>>& normals, long p) {
  struct Node {
    std::vector<std::vector<long>> rref;
    std::vector<int> pivots;
  };
  const int d = static_cast<int>(normals.size());
  auto key_of = [](const Node& nd) {
    std::ostringstream out;
    for (const auto& row : nd.rref) {
      for (long c : row) out << c << ",";
      out << ";";
    }
    return out.str();
  };
  std::map<std::string, Node> seen;
  Node bottom;
  seen.emplace(key_of(bottom), bottom);
  std::vector<Node> frontier{bottom};
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int j = 0; j < d; ++j) {
        if (in_rowspace_mod_p(node.rref, node.pivots, normals[j], p)) continue;
        Node child;
        child.rref = node.rref;
        child.rref.push_back(normals[j]);
        child.pivots = rref_mod_p(child.rref, p);
        if (seen.emplace(key_of(child), child).second) next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  std::set<uint64_t> supports;
  for (const auto& [key, node] : seen) {
    uint64_t mask = 0;
    for (int j = 0; j < d; ++j)
      if (in_rowspace_mod_p(node.rref, node.pivots, normals[j], p))
        mask |= uint64_t(1) << j;
    supports.insert(mask);
  }
  return supports;
}

std::string hyperplane_label(const Arrangement& A, int j) {
  std::ostringstream out;
  out << "H" << j << " (";
  bool first = true;
  for (int i = 0; i < A.dim; ++i) {
    if (A.hyperplanes[j].normal[i] == 0) continue;
    if (!first) out << "+";
    out << rat_str(A.hyperplanes[j].normal[i]) << "*" << var_name(i, A.dim);
    first = false;
  }
  out << ")";
  return out.str();
}

}  // namespace

GoodReductionCheck good_reduction(const Arrangement& A, long p) {
  if (!A.central()) throw InputError("good reduction requires a central arrangement");
  GoodReductionCheck check;
  check.prime = p;
  const int d = static_cast<int>(A.hyperplanes.size());
  auto rows = normals_mod_p(A, p);

  // (i) no two hyperplanes collide mod p
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      std::vector<std::vector<long>> pair{rows[i], rows[j]};
      if (rank_mod_p(pair, p) < 2) {
        check.ok = false;
        check.failures.push_back(
            {hyperplane_label(A, i) + ", " + hyperplane_label(A, j),
             "hyperplanes coincide mod p"});
      }
    }

  // (ii) every rational edge keeps its codimension mod p
  IntersectionLattice L = build_lattice(A);
  for (const Edge& e : L.edges()) {
    if (e.codim == 0) continue;
    std::vector<std::vector<long>> sub;
    for (int j : e.support_indices()) sub.push_back(rows[j]);
    if (rank_mod_p(sub, p) != e.codim) {
      check.ok = false;
      std::ostringstream what;
      what << "edge of codim " << e.codim << " with support {";
      for (int j : e.support_indices()) what << j << " ";
      what << "}";
      check.failures.push_back({what.str(), "rank drops mod p"});
    }
  }
  if (!check.ok) return check;

  // (iii) the mod-p lattice has exactly the same closed supports
  std::set<uint64_t> rational_supports;
  for (const Edge& e : L.edges()) rational_supports.insert(e.support);
  std::set<uint64_t> modp_supports = lattice_supports_mod_p(rows, p);
  if (modp_supports != rational_supports) {
    check.ok = false;
    check.failures.push_back(
        {"lattice", "mod-p lattice has extra or missing incidences"});
  }
  return check;
}

std::vector<Poly<Rat>> stratum_counts(const Arrangement& A,
                                      const IntersectionLattice& L) {
  (void)A;
  const int E = L.size();
  // N(X) = p^{dim X} - sum over strictly smaller edges; iterate upward from
  // the center, i.e. in decreasing codimension (increasing dim) order.
  std::vector<Poly<Rat>> counts(E);
  for (int x = E - 1; x >= 0; --x) {
    Poly<Rat> c = Poly<Rat>::monomial(Rat(1), L.edge(x).dim);
    for (int z = x + 1; z < E; ++z)
      if (L.leq(x, z)) c = c - counts[z];
    counts[x] = c;
  }
  return counts;
}

namespace {

// Interval stratum count: residue points on y/x off all smaller edges of the
// localization at x, as a polynomial in p.
Poly<Rat> interval_stratum_count(const IntersectionLattice& L, int y, int x) {
  Poly<Rat> c;
  const int dx = L.edge(x).dim;
  for (const Edge& e : L.edges()) {
    if (!L.leq(y, e.id) || !L.leq(e.id, x)) continue;
    c = c + Poly<Rat>::monomial(Rat(L.mobius(y, e.id)), e.dim - dx);
  }
  return c;
}

}  // namespace

std::vector<RatFuncT> igusa_zeta_localizations(const IntersectionLattice& L) {
  const int E = L.size();
  std::vector<RatFuncT> Z(E);
  Z[L.bottom()] = RatFuncT::one();
  for (int x = 1; x < E; ++x) {
    const Edge& ex = L.edge(x);
    const int m = ex.codim;
    RatFuncT sum;
    for (int y = 0; y < x; ++y) {
      if (!L.leq(y, x)) continue;
      Poly<Rat> count = interval_stratum_count(L, y, x);
      if (count.is_zero()) continue;
      PRat weight = PRat(count) * PRat::p_power(-m);
      sum = sum + Z[y].scaled(weight).times_t_power(static_cast<int>(L.edge(y).a));
    }
    Z[x] = sum.div_atom(ex.a, m);
  }
  return Z;
}

RatFuncT igusa_zeta(const Arrangement& A) {
  if (!A.central())
    throw InputError("igusa_zeta requires a central arrangement");
  if (A.hyperplanes.empty()) return RatFuncT::one();
  Arrangement essential = essentialize(A).first;
  IntersectionLattice L = build_lattice(essential);
  return igusa_zeta_localizations(L)[L.top()];
}

RatFuncT igusa_zeta_local(const Arrangement& A) {
  RatFuncT Z = igusa_zeta(A);
  return Z.scaled(PRat::p_power(-A.dim))
      .times_t_power(static_cast<int>(A.degree()));
}

std::set<Rat> pole_real_parts(const RatFuncT& Z) { return Z.pole_real_parts(); }

BruteForceResult brute_force_igusa(const Arrangement& A, long p, int k,
                                   const Rat& s, bool force_scalar) {
  if (k < 1) throw InputError("depth k must be >= 1");
  if (!(s > 0)) throw InputError("s must be positive");
  if (!rat_is_integer(s))
    throw InputError("brute-force enclosure supports integer s only");
  long s_int = to_long(s.get_num());

  // feasibility guard: p^{kn} <= 1e8
  double cells = 1;
  for (int i = 0; i < k * A.dim; ++i) {
    cells *= static_cast<double>(p);
    if (cells > 1e8) throw InputError("p^{k*n} exceeds the 1e8 feasibility guard");
  }

  Int M = 1;
  for (int i = 0; i < k; ++i) M *= p;

  kernels::ValuationJob job;
  job.modulus = to_long(M);
  job.p = p;
  job.k = k;
  job.nvars = A.dim;
  job.nforms = static_cast<int>(A.hyperplanes.size());
  for (const Hyperplane& h : A.hyperplanes) {
    for (const Rat& c : h.normal) {
      Int r = c.get_num() % M;
      if (r < 0) r += M;
      job.coeff.push_back(static_cast<int32_t>(to_long(r)));
    }
    // hyperplane normal.x = offset contributes the linear form normal.x - offset
    Rat off = h.offset;
    if (off.get_den() != 1) {
      // clear the denominator: scaling a factor by a p-unit changes nothing,
      // but a denominator divisible by p would; canonical offsets with
      // denominators are rejected for the p-adic integral.
      throw InputError("non-integer offset in p-adic integral");
    }
    Int r = (-off.get_num()) % M;
    if (r < 0) r += M;
    job.constant.push_back(static_cast<int32_t>(to_long(r)));
    job.mult.push_back(static_cast<int32_t>(h.mult));
  }

  kernels::ValuationCounts counts = kernels::count_valuations(job, force_scalar);

  BruteForceResult out;
  out.exact = counts.exact;
  out.ambiguous = counts.ambiguous;
  bool vectorized =
      !force_scalar && job.modulus >= 16 && kernels::avx2_available();
  out.kernel = vectorized ? "avx2" : "scalar";

  Int total_cells = 1;
  for (int i = 0; i < A.dim; ++i) total_cells *= M;
  Rat cell_measure = make_rat(Int(1), total_cells);
  Int ps = 1;
  for (long i = 0; i < s_int; ++i) ps *= p;
  Rat t = make_rat(Int(1), ps);

  Rat lo(0), tv(1);
  for (int v = 0; v < k; ++v) {
    lo += Rat(long(counts.exact[v])) * tv;
    tv *= t;
  }
  lo *= cell_measure;
  Rat hi = lo + Rat(long(counts.ambiguous)) * tv * cell_measure;  // tv = t^k
  out.lo = lo;
  out.hi = hi;
  return out;
}

BridgeWitness specialization_bridge(const Arrangement& A) {
  if (!A.central()) throw InputError("requires a central arrangement");
  BridgeWitness w;
  w.igusa = igusa_zeta(A);
  w.specialized = specialize_p_to_1(w.igusa);
  w.topological = zeta_top(A);
  w.equal = (w.specialized == w.topological);
  if (!w.equal)
    throw InvariantError(
        "specialization bridge mismatch: " + w.specialized.str() + " vs " +
        w.topological.str());
  return w;
}

}  // namespace arrzeta
