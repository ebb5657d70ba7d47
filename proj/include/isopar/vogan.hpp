// Extended Vogan diagrams and the congruence count for symmetric-pair
// foliations.  The pipeline per catalog record:
//
//   admissible_points      closed-form set J of torus elements T in the closed
//                          chamber with alpha(T) = +-1 on noncompact roots
//   admissible_points_oracle
//                          the same set by exhaustive bounded search (the
//                          defining conditions, no closed form)
//   diagram_automorphisms  symmetries of the extended diagram fixing the
//                          painted nodes
//   induced_map            the action of such a symmetry on dual-basis
//                          coordinates of the torus
//   count_classes          orbit count N of the symmetry group on J
//
// Torus points are coordinate vectors over the dual basis h_1..h_p
// (alpha_i(h_j) = delta_ij).
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "isopar/orbits.hpp"
#include "isopar/rational.hpp"
#include "isopar/root_system.hpp"
#include "isopar/symmetric_pair.hpp"

namespace isopar {

// Node 0 carries alpha_0 = -mu; nodes 1..p carry the simple roots.  Edge data
// is the full matrix of Cartan integers, which determines bond multiplicity
// and arrow direction.
struct ExtendedDiagram {
  int p = 0;
  std::vector<IntVec> node_roots;                // (p+1) coefficient vectors
  std::vector<std::vector<long long>> pairing;   // (p+1)x(p+1) Cartan integers
  std::set<int> painted;
};

inline ExtendedDiagram build_extended_vogan(const SymmetricPairRecord& rec) {
  const int p = rec.p;
  const auto gram = detail::gram_matrix(rec.type);
  ExtendedDiagram d;
  d.p = p;
  IntVec neg_mu(rec.mu);
  for (auto& c : neg_mu) c = -c;
  d.node_roots.push_back(neg_mu);
  for (int i = 0; i < p; ++i) {
    IntVec e(p, 0);
    e[i] = 1;
    d.node_roots.push_back(e);
  }
  // All node roots are simple roots except node 0, so the Cartan integers
  // come straight from the Gram matrix plus the single product G*mu.
  RatVec mu_g(p, Rat(0));
  for (int i = 0; i < p; ++i) {
    if (rec.mu[i] == 0) continue;
    for (int j = 0; j < p; ++j) mu_g[j] += Rat(rec.mu[i]) * gram[i][j];
  }
  Rat mu_norm(0);
  for (int j = 0; j < p; ++j) mu_norm += mu_g[j] * Rat(rec.mu[j]);
  auto as_int = [](const Rat& r) {
    ISOPAR_REQUIRE(r.denominator() == 1, "Cartan pairing of diagram nodes is not integral");
    return r.numerator();
  };
  d.pairing.assign(p + 1, std::vector<long long>(p + 1, 0));
  d.pairing[0][0] = 2;
  for (int j = 1; j <= p; ++j) {
    d.pairing[0][j] = as_int(Rat(-2) * mu_g[j - 1] / gram[j - 1][j - 1]);
    d.pairing[j][0] = as_int(Rat(-2) * mu_g[j - 1] / mu_norm);
    d.pairing[j][j] = 2;
    for (int i = 1; i <= p; ++i)
      if (i != j) d.pairing[i][j] = as_int(Rat(2) * gram[i - 1][j - 1] / gram[j - 1][j - 1]);
  }
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j < i; ++j) {
      long long bond = d.pairing[i][j] * d.pairing[j][i];
      ISOPAR_REQUIRE(bond >= 0 && bond <= 4, "impossible bond multiplicity in extended diagram");
    }
  d.painted.insert(rec.nu);
  if (rec.hermitian) d.painted.insert(0);
  return d;
}

using NodePerm = std::vector<int>;  // image of node i at index i

// All node permutations preserving the Cartan-integer matrix and the painted
// set.  Backtracking in node order with per-node signature pruning; the
// signature of a node is its painted flag together with the multiset of
// Cartan-integer pairs shared with its neighbours.
inline std::vector<NodePerm> diagram_automorphisms(const ExtendedDiagram& d) {
  const int n = d.p + 1;
  std::vector<std::vector<std::pair<long long, long long>>> sig(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (j != i && d.pairing[i][j] != 0) sig[i].emplace_back(d.pairing[i][j], d.pairing[j][i]);
    std::sort(sig[i].begin(), sig[i].end());
  }
  std::vector<NodePerm> result;
  NodePerm perm(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> place = [&](int i) {
    if (i == n) {
      result.push_back(perm);
      return;
    }
    bool i_painted = d.painted.count(i) != 0;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      if ((d.painted.count(c) != 0) != i_painted) continue;
      if (sig[c] != sig[i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = d.pairing[c][perm[j]] == d.pairing[i][j] && d.pairing[perm[j]][c] == d.pairing[j][i];
      if (!ok) continue;
      perm[i] = c;
      used[c] = 1;
      place(i + 1);
      used[c] = 0;
      perm[i] = -1;
    }
  };
  place(0);
  return result;
}

// Action of a diagram symmetry on dual-basis coordinates.  For the coweights
// one has phi(h_i) = h_{sigma(i)} - y_i h_{sigma(0)}, where h_0 is read as 0;
// this single formula covers the identity-on-0 case, the swap with the
// painted node (Hermitian only), and symmetries moving node 0 elsewhere.
inline IntMat induced_map(const SymmetricPairRecord& rec, const NodePerm& sigma) {
  const int p = rec.p;
  ISOPAR_REQUIRE(static_cast<int>(sigma.size()) == p + 1, "permutation size mismatch");
  ISOPAR_REQUIRE(sigma[0] != rec.nu || rec.hermitian,
                 "a symmetry can move node 0 to the painted node only in the Hermitian case");
  IntMat m(p, IntVec(p, 0));  // column i = coordinates of phi(h_i)
  for (int i = 1; i <= p; ++i) {
    if (sigma[i] != 0) m[sigma[i] - 1][i - 1] += 1;
    if (sigma[0] != 0) m[sigma[0] - 1][i - 1] -= rec.mu[i - 1];
  }
  return m;
}

// Closed form for J in the closed chamber: -h_nu always works; -h_nu + 2h_i
// works exactly when lambda's coefficient z_i is 1 (so all noncompact
// evaluations stay in {+-1}) and mu's coefficient y_i is 1 (so the affine
// chamber wall is respected); in the Hermitian case z = y and +h_nu is also
// admissible.
inline std::vector<RatVec> admissible_points(const SymmetricPairRecord& rec) {
  std::vector<RatVec> pts;
  RatVec minus(rec.p, Rat(0));
  minus[rec.nu - 1] = Rat(-1);
  pts.push_back(minus);
  if (rec.hermitian) {
    RatVec plus(rec.p, Rat(0));
    plus[rec.nu - 1] = Rat(1);
    pts.push_back(plus);
  }
  for (int i = 1; i <= rec.p; ++i) {
    if (i == rec.nu) continue;
    bool ok = rec.hermitian ? rec.mu[i - 1] == 1
                            : (rec.mu[i - 1] == 1 && rec.lambda[i - 1] == 1);
    if (ok) {
      RatVec t(minus);
      t[i - 1] = Rat(2);
      pts.push_back(t);
    }
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

// The same set from the definitions alone: search integer dual-basis
// coordinates in [-bound, bound]^p for points satisfying the chamber
// inequalities (simple compact roots, plus alpha_0 when it is compact) and
// the +-1 conditions on every noncompact positive root.
inline std::vector<RatVec> admissible_points_oracle(const SymmetricPairRecord& rec,
                                                    long long bound = 2) {
  ISOPAR_REQUIRE(bound >= 2, "oracle needs bound >= 2");
  auto nc = noncompact_positive_roots(rec);
  std::vector<RatVec> pts;
  IntVec x(rec.p, 0);
  std::function<void(int)> sweep = [&](int i) {
    if (i == rec.p) {
      if (!rec.hermitian) {
        long long mu_val = 0;  // alpha_0(T) = -mu(T) must be >= 0
        for (int j = 0; j < rec.p; ++j) mu_val += rec.mu[j] * x[j];
        if (mu_val > 0) return;
      }
      for (const auto& root : nc) {
        long long v = 0;
        for (int j = 0; j < rec.p; ++j) v += root[j] * x[j];
        if (v != 1 && v != -1) return;
      }
      pts.push_back(to_rat(x));
      return;
    }
    // Chamber wall: coordinates at unpainted nodes are nonnegative.
    long long lo = (i == rec.nu - 1) ? -bound : 0;
    for (long long v = lo; v <= bound; ++v) {
      x[i] = v;
      sweep(i + 1);
    }
  };
  sweep(0);
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

// The admissible sets as tabulated per family in the case-by-case
// classification; kept as an independent third comparand.
inline std::vector<RatVec> reference_admissible_points(const SymmetricPairRecord& rec) {
  const int p = rec.p, nu = rec.nu;
  auto h = [&](int i, Rat c) {
    RatVec v(p, Rat(0));
    v[i - 1] = c;
    return v;
  };
  auto minus_plus2 = [&](int i) {
    RatVec v = h(nu, Rat(-1));
    v[i - 1] = Rat(2);
    return v;
  };
  std::vector<RatVec> pts;
  if (rec.label == "A III") {
    pts = {h(nu, Rat(1)), h(nu, Rat(-1))};
    for (int i = 1; i <= p; ++i)
      if (i != nu) pts.push_back(minus_plus2(i));
  } else if (rec.label == "B I") {
    if (nu == 1)
      pts = {h(1, Rat(1)), h(1, Rat(-1))};
    else
      pts = {h(nu, Rat(-1)), minus_plus2(1)};
  } else if (rec.label == "C I") {
    pts = {h(p, Rat(1)), h(p, Rat(-1))};
  } else if (rec.label == "C II") {
    pts = {h(nu, Rat(-1)), minus_plus2(p)};
  } else if (rec.label == "D I") {
    if (nu == 1)
      pts = {h(1, Rat(1)), h(1, Rat(-1)), minus_plus2(p - 1), minus_plus2(p)};
    else
      pts = {h(nu, Rat(-1)), minus_plus2(1), minus_plus2(p - 1), minus_plus2(p)};
  } else if (rec.label == "D III") {
    pts = {h(p, Rat(1)), h(p, Rat(-1)), minus_plus2(1), minus_plus2(p - 1)};
  } else if (rec.label == "E II") {
    pts = {h(2, Rat(-1)), minus_plus2(1), minus_plus2(6)};
  } else if (rec.label == "E III") {
    pts = {h(6, Rat(1)), h(6, Rat(-1)), minus_plus2(1)};
  } else if (rec.label == "E V") {
    pts = {h(2, Rat(-1)), minus_plus2(7)};
  } else if (rec.label == "E VI") {
    pts = {h(1, Rat(-1)), minus_plus2(7)};
  } else if (rec.label == "E VII") {
    pts = {h(7, Rat(1)), h(7, Rat(-1))};
  } else if (rec.label == "E VIII") {
    pts = {h(1, Rat(-1))};
  } else if (rec.label == "E IX") {
    pts = {h(8, Rat(-1))};
  } else if (rec.label == "F I") {
    pts = {h(4, Rat(-1))};
  } else if (rec.label == "F II") {
    pts = {h(1, Rat(-1))};
  } else if (rec.label == "G") {
    pts = {h(2, Rat(-1))};
  } else {
    throw invariant_error("no reference admissible set for label " + rec.label);
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

// Tabulated class count per family; empty for the rank-one row that the
// tables leave unassigned.
inline std::optional<long long> table_class_count(const SymmetricPairRecord& rec) {
  const int p = rec.p, nu = rec.nu;
  if (rec.label == "A III")
    return 2 * nu == p + 1 ? 1 + nu / 2 : 1 + nu / 2 + (p - nu + 1) / 2;
  if (rec.label == "B I") return 1;
  if (rec.label == "C I") return 1;
  if (rec.label == "C II") return 2 * nu == p ? 1 : 2;
  if (rec.label == "D I") return 2 * nu == p ? 1 : 2;
  if (rec.label == "D III") return 2;
  if (rec.label == "E II") return 2;
  if (rec.label == "E III") return 2;
  if (rec.label == "E V") return 1;
  if (rec.label == "E VI") return 2;
  if (rec.label == "E VII") return 1;
  if (rec.label == "E VIII") return 1;
  if (rec.label == "E IX") return 1;
  if (rec.label == "F I") return 1;
  if (rec.label == "F II") return std::nullopt;
  if (rec.label == "G") return 1;
  throw invariant_error("unknown symmetric pair label: " + rec.label);
}

struct ClassCount {
  long long n = 0;
  std::vector<std::vector<RatVec>> orbits;  // each sorted, least representative first
  std::vector<IntMat> group;
};

inline ClassCount count_classes(const SymmetricPairRecord& rec) {
  auto points = admissible_points(rec);
  auto diagram = build_extended_vogan(rec);
  std::vector<IntMat> gens;
  for (const auto& sigma : diagram_automorphisms(diagram)) gens.push_back(induced_map(rec, sigma));
  ClassCount cc;
  cc.group = close_group(std::move(gens), rec.p);
  cc.orbits = orbit_partition(points, cc.group);
  cc.n = static_cast<long long>(cc.orbits.size());
  return cc;
}

}  // namespace isopar
