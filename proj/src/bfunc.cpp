#include "arrzeta/bfunc.hpp"

#include <sstream>

namespace arrzeta {

std::set<Rat> generic_bfunction_roots(int n, long d) {
  if (n < 1 || d < n)
    throw InputError("generic roots need d >= n >= 1");
  std::set<Rat> roots;
  for (long i = 0; i <= 2 * d - n - 2; ++i)
    roots.insert(make_rat(Int(-(i + n)), Int(d)));
  if (roots.empty()) roots.insert(Rat(-1));  // d = n = 1: b(s) = s + 1
  return roots;
}

ModerateCheck is_moderate(const Arrangement& A, const IntersectionLattice& L) {
  if (!A.central()) throw InputError("moderate type requires a central arrangement");
  ModerateCheck out;
  std::vector<int> dense = L.dense_edge_ids();
  for (int w : dense) {
    for (int wp : dense) {
      if (w == wp) continue;
      // w strictly inside wp: wp < w in the reverse-inclusion order
      if (!L.leq(wp, w)) continue;
      const Edge& small = L.edge(w);
      const Edge& big = L.edge(wp);
      Rat lhs = make_rat(Int(small.codim), Int(small.a));
      Rat rhs = make_rat(Int(big.codim), Int(big.a));
      if (lhs > rhs) {
        out.moderate = false;
        out.violation = {w, wp};
        return out;
      }
    }
  }
  return out;
}

JumpingVerdict jumping_3d_criterion(const Arrangement& A,
                                    const IntersectionLattice& L) {
  long d = A.degree();
  if (d < 5)
    throw InputError("the dimension-3 jumping criterion assumes d >= 5");
  std::map<long, long> nu = nu_counts(A, L);  // enforces n=3/essential/reduced
  long total = 0;
  for (const auto& [m, count] : nu)
    if (3 * m > 2 * d && m <= d) total += count;
  return total != 1 ? JumpingVerdict::kJumping : JumpingVerdict::kNotJumping;
}

const char* status_name(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::kVerifiedGeneric: return "VerifiedGeneric";
    case ConjectureStatus::kVerifiedModerate: return "VerifiedModerate";
    case ConjectureStatus::kVerifiedDim3Jumping: return "VerifiedDim3Jumping";
    case ConjectureStatus::kConditionalOnNDOverD: return "ConditionalOnConjecture1.2";
  }
  return "?";
}

ConjectureReport conjecture_report(const Arrangement& A,
                                   const IntersectionLattice& L) {
  if (!A.central()) throw InputError("requires a central arrangement");
  ConjectureReport report;
  report.decomposable = (proj_complement_euler(L) == 0);
  report.all_verified = true;
  for (int w : L.dense_edge_ids()) {
    const Edge& e = L.edge(w);
    EdgeConjectureReport r;
    r.edge_id = w;
    r.support = e.support;
    r.codim = e.codim;
    r.a = e.a;
    r.candidate = make_rat(Int(-e.codim), Int(e.a));

    Arrangement local = localize_at_edge(A, L, w);
    IntersectionLattice localL = build_lattice(local);
    std::ostringstream ev;
    if (local.reduced() && is_generic(local, localL).generic) {
      r.status = ConjectureStatus::kVerifiedGeneric;
      ev << "localized arrangement is generic (n=" << local.dim
         << ", d=" << local.degree() << "); root -" << local.dim << "/"
         << local.degree() << " from the closed form";
    } else if (is_moderate(local, localL).moderate) {
      r.status = ConjectureStatus::kVerifiedModerate;
      ev << "localized arrangement is of moderate type; every dense-edge "
            "candidate is a jumping number, hence a b-function root";
    } else if (local.dim == 3 && local.reduced() && local.degree() >= 5 &&
               jumping_3d_criterion(local, localL) == JumpingVerdict::kJumping) {
      r.status = ConjectureStatus::kVerifiedDim3Jumping;
      ev << "3/" << local.degree()
         << " is a jumping number by the dimension-3 multiplicity criterion";
    } else {
      r.status = ConjectureStatus::kConditionalOnNDOverD;
      ev << "no implemented criterion applies; candidate is a b-function "
            "root if -n/d is always a root for indecomposable essential "
            "central arrangements";
      report.all_verified = false;
    }
    r.evidence = ev.str();
    report.edges.push_back(std::move(r));
  }
  return report;
}

}  // namespace arrzeta
