// Catalog of irreducible inner compact symmetric pairs (g, k) in
// Borel-de Siebenthal form: an ambient type, a painted simple root alpha_nu,
// and the derived data used by the classification — the highest root mu, the
// highest noncompact root lambda, dimensions, and the rank of the associated
// symmetric space.
//
// The tabulated mu and lambda coefficient vectors are stored as literals and
// recomputed from the root system on construction; any disagreement aborts.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isopar/rational.hpp"
#include "isopar/root_system.hpp"

namespace isopar {

struct SymmetricPairRecord {
  std::string label;  // Cartan notation: "A III", "B I", ..., "G"
  CartanType type;    // ambient complexified type of g
  int p = 0;          // rank of g
  int nu = 0;         // painted simple-root index, 1-based
  bool hermitian = false;
  IntVec mu;          // highest root of g
  IntVec lambda;      // highest noncompact root
  std::string g_desc, k_desc, space_desc;
  // F II carries no projected-foliation count (rank one; that case is
  // represented by the odd orthogonal family with nu = p).
  bool census_excluded = false;
};

struct PairDims {
  long long dim_g = 0;   // real dimension of the compact Lie algebra g
  long long dim_k = 0;
  long long dim_p = 0;   // dimension of the isotropy module p = g/k
  long long n = 0;       // ambient projective dimension: dim_p = 2n+2
  int rank_ss = 0;       // rank of the symmetric space G/K
  int codim = 0;         // codimension of the regular foliation: rank_ss - 1
};

inline bool is_noncompact(const IntVec& root, int nu) { return root[nu - 1] % 2 != 0; }

inline std::vector<IntVec> noncompact_positive_roots(const SymmetricPairRecord& rec) {
  std::vector<IntVec> out;
  for (const auto& r : cached_root_system(rec.type).positive_roots())
    if (is_noncompact(r, rec.nu)) out.push_back(r);
  return out;
}

namespace detail {

inline IntVec highest_root_literal(const CartanType& t) {
  const int p = t.rank;
  switch (t.series) {
    case Series::A:
      return IntVec(p, 1);
    case Series::B: {
      IntVec v(p, 2);
      v[0] = 1;
      return v;
    }
    case Series::C: {
      IntVec v(p, 2);
      v[p - 1] = 1;
      return v;
    }
    case Series::D: {
      IntVec v(p, 2);
      v[0] = v[p - 2] = v[p - 1] = 1;
      return v;
    }
    case Series::E:
      if (p == 6) return {1, 2, 2, 3, 2, 1};
      if (p == 7) return {2, 2, 3, 4, 3, 2, 1};
      return {2, 3, 4, 6, 5, 4, 3, 2};
    case Series::F:
      return {2, 4, 3, 2};
    case Series::G:
      return {3, 2};
  }
  return {};
}

// Tabulated highest noncompact root per family.
inline IntVec lambda_literal(const std::string& label, const CartanType& t, int nu) {
  const int p = t.rank;
  if (label == "A III") return IntVec(p, 1);
  if (label == "B I") {
    IntVec v(p, 2);
    std::fill(v.begin(), v.begin() + nu, 1);
    return v;
  }
  if (label == "C I") return highest_root_literal(t);
  if (label == "C II") {
    IntVec v(p, 2);
    std::fill(v.begin(), v.begin() + nu, 1);
    v[p - 1] = 1;
    return v;
  }
  if (label == "D I") {
    IntVec v(p, 2);
    std::fill(v.begin(), v.begin() + nu, 1);
    v[p - 2] = v[p - 1] = 1;
    return v;
  }
  if (label == "D III") return highest_root_literal(t);
  if (label == "E II") return {1, 1, 2, 3, 2, 1};
  if (label == "E III") return {1, 2, 2, 3, 2, 1};
  if (label == "E V") return {1, 1, 2, 3, 3, 2, 1};
  if (label == "E VI") return {1, 2, 3, 4, 3, 2, 1};
  if (label == "E VII") return {2, 2, 3, 4, 3, 2, 1};
  if (label == "E VIII") return {1, 3, 3, 5, 4, 3, 2, 1};
  if (label == "E IX") return {2, 3, 4, 6, 5, 4, 3, 1};
  if (label == "F I") return {2, 4, 3, 1};
  if (label == "F II") return {1, 3, 2, 1};
  if (label == "G") return {3, 1};
  throw invariant_error("unknown symmetric pair label: " + label);
}

inline void validate_record(const SymmetricPairRecord& rec) {
  const RootSystem& rs = cached_root_system(rec.type);
  ISOPAR_REQUIRE(rec.mu == rs.highest_root(),
                 rec.label + ": tabulated highest root disagrees with the generated one");
  long long ynu = rec.mu[rec.nu - 1];
  ISOPAR_REQUIRE(ynu == 1 || ynu == 2,
                 rec.label + ": painted node must carry highest-root coefficient 1 or 2");
  ISOPAR_REQUIRE(rec.hermitian == (ynu == 1), rec.label + ": Hermitian flag inconsistent");
  // lambda must be the unique maximal noncompact positive root; maximality is
  // coefficientwise, so check dominance over the full noncompact list.
  auto nc = noncompact_positive_roots(rec);
  ISOPAR_REQUIRE(!nc.empty(), rec.label + ": no noncompact roots");
  const IntVec* best = &nc.front();
  for (const auto& r : nc)
    if (graded_lex_less(*best, r)) best = &r;
  ISOPAR_REQUIRE(rec.lambda == *best,
                 rec.label + ": tabulated highest noncompact root disagrees with recomputation");
  for (const auto& r : nc)
    for (int i = 0; i < rec.p; ++i)
      ISOPAR_REQUIRE(r[i] <= rec.lambda[i],
                     rec.label + ": highest noncompact root fails coefficientwise dominance");
  ISOPAR_REQUIRE(rec.lambda[rec.nu - 1] == 1,
                 rec.label + ": highest noncompact root must have coefficient 1 at the painted node");
}

inline SymmetricPairRecord make_record(std::string label, CartanType type, int nu, bool hermitian,
                                       std::string g_desc, std::string k_desc,
                                       std::string space_desc, bool excluded = false) {
  SymmetricPairRecord rec;
  rec.label = std::move(label);
  rec.type = type;
  rec.p = type.rank;
  rec.nu = nu;
  rec.hermitian = hermitian;
  rec.mu = highest_root_literal(type);
  rec.lambda = lambda_literal(rec.label, type, nu);
  rec.g_desc = std::move(g_desc);
  rec.k_desc = std::move(k_desc);
  rec.space_desc = std::move(space_desc);
  rec.census_excluded = excluded;
  validate_record(rec);
  return rec;
}

inline std::string num(long long v) { return std::to_string(v); }

}  // namespace detail

// One validated catalog row, constructible at any rank without sweeping the
// whole catalog (the census needs isolated rows at large rank).
inline SymmetricPairRecord catalog_record(const std::string& label, int p, int nu) {
  using detail::make_record;
  using detail::num;
  if (label == "A III") {
    ISOPAR_REQUIRE(p >= 3 && nu >= 2 && nu <= p - 1, "A III needs p >= 3, 2 <= nu <= p-1");
    return make_record("A III", {Series::A, p}, nu, true, "su(" + num(p + 1) + ")",
                       "s(u(" + num(nu) + ")+u(" + num(p + 1 - nu) + "))",
                       "Gr_" + num(nu) + "(C^" + num(p + 1) + ")");
  }
  if (label == "B I") {
    // nu = p is the rank-one member (an odd-dimensional real projective
    // space as the Grassmannian of hyperplanes' orthogonal lines).
    ISOPAR_REQUIRE(p >= 1 && nu >= 1 && nu <= p, "B I needs 1 <= nu <= p");
    return make_record("B I", {Series::B, p}, nu, nu == 1, "so(" + num(2 * p + 1) + ")",
                       "so(" + num(2 * nu) + ")+so(" + num(2 * (p - nu) + 1) + ")",
                       "Gr_" + num(2 * nu) + "(R^" + num(2 * p + 1) + ")");
  }
  if (label == "C I") {
    ISOPAR_REQUIRE(p >= 2 && nu == p, "C I needs nu = p >= 2");
    // Sp(2)/U(2) is isometric to the quadric SO(5)/(SO(2)x SO(3)); the census
    // counts that space once, under its orthogonal presentation.
    if (p == 2)
      return make_record("C I", {Series::C, 2}, 2, true, "sp(2)", "u(2)", "Sp(2)/U(2)",
                         /*excluded=*/true);
    return make_record("C I", {Series::C, p}, p, true, "sp(" + num(p) + ")", "u(" + num(p) + ")",
                       "Sp(" + num(p) + ")/U(" + num(p) + ")");
  }
  if (label == "C II") {
    ISOPAR_REQUIRE(p >= 4 && nu >= 2 && nu <= p - 2, "C II needs p >= 4, 2 <= nu <= p-2");
    return make_record("C II", {Series::C, p}, nu, false, "sp(" + num(p) + ")",
                       "sp(" + num(nu) + ")+sp(" + num(p - nu) + ")",
                       "Gr_" + num(nu) + "(H^" + num(p) + ")");
  }
  if (label == "D I") {
    ISOPAR_REQUIRE(p >= 4 && nu >= 1 && nu <= p - 2, "D I needs p >= 4, 1 <= nu <= p-2");
    return make_record("D I", {Series::D, p}, nu, nu == 1, "so(" + num(2 * p) + ")",
                       "so(" + num(2 * nu) + ")+so(" + num(2 * (p - nu)) + ")",
                       "Gr_" + num(2 * nu) + "(R^" + num(2 * p) + ")");
  }
  if (label == "D III") {
    // The other spinor node nu = p-1 paints the same pair; the canonical
    // representative is nu = p.  SO(8)/U(4) is carried onto the quadric
    // SO(8)/(SO(2)x SO(6)) by triality; the census counts that space once,
    // under its orthogonal presentation.
    ISOPAR_REQUIRE(p >= 4 && nu == p, "D III needs nu = p >= 4");
    return make_record("D III", {Series::D, p}, p, true, "so(" + num(2 * p) + ")",
                       "u(" + num(p) + ")", "SO(" + num(2 * p) + ")/U(" + num(p) + ")",
                       /*excluded=*/p == 4);
  }
  struct Fixed {
    const char* label;
    Series series;
    int p, nu;
    bool hermitian;
    const char* g;
    const char* k;
    const char* space;
    bool excluded;
  };
  static const Fixed fixed[] = {
      {"E II", Series::E, 6, 2, false, "e6", "su(6)+su(2)", "E6/(SU(6)xSU(2))", false},
      {"E III", Series::E, 6, 6, true, "e6", "so(10)+u(1)", "E6/(Spin(10)xU(1))", false},
      {"E V", Series::E, 7, 2, false, "e7", "su(8)", "E7/SU(8)", false},
      {"E VI", Series::E, 7, 1, false, "e7", "so(12)+su(2)", "E7/(Spin(12)xSU(2))", false},
      {"E VII", Series::E, 7, 7, true, "e7", "e6+u(1)", "E7/(E6xU(1))", false},
      {"E VIII", Series::E, 8, 1, false, "e8", "so(16)", "E8/Spin(16)", false},
      {"E IX", Series::E, 8, 8, false, "e8", "e7+su(2)", "E8/(E7xSU(2))", false},
      {"F I", Series::F, 4, 4, false, "f4", "sp(3)+su(2)", "F4/(Sp(3)xSp(1))", false},
      {"F II", Series::F, 4, 1, false, "f4", "so(9)", "F4/Spin(9)", true},
      {"G", Series::G, 2, 2, false, "g2", "su(2)+su(2)", "G2/SO(4)", false},
  };
  for (const auto& fx : fixed)
    if (label == fx.label) {
      ISOPAR_REQUIRE(p == fx.p && nu == fx.nu, std::string(fx.label) + ": fixed p and nu");
      return make_record(fx.label, {fx.series, fx.p}, fx.nu, fx.hermitian, fx.g, fx.k, fx.space,
                         fx.excluded);
    }
  throw invariant_error("unknown symmetric pair label: " + label);
}

// All catalog rows with rank p <= max_rank, every legal painted index.
// Families with a painted-node mirror symmetry (complex/real/quaternionic
// Grassmannians) list every legal nu; deduplication to one record per
// underlying space happens at census level.
inline std::vector<SymmetricPairRecord> catalog(int max_rank) {
  ISOPAR_REQUIRE(max_rank >= 1, "catalog needs max_rank >= 1");
  std::vector<SymmetricPairRecord> out;
  for (int p = 3; p <= max_rank; ++p)
    for (int nu = 2; nu <= p - 1; ++nu) out.push_back(catalog_record("A III", p, nu));
  for (int p = 1; p <= max_rank; ++p)
    for (int nu = 1; nu <= p; ++nu) out.push_back(catalog_record("B I", p, nu));
  for (int p = 2; p <= max_rank; ++p) out.push_back(catalog_record("C I", p, p));
  for (int p = 4; p <= max_rank; ++p)
    for (int nu = 2; nu <= p - 2; ++nu) out.push_back(catalog_record("C II", p, nu));
  for (int p = 4; p <= max_rank; ++p)
    for (int nu = 1; nu <= p - 2; ++nu) out.push_back(catalog_record("D I", p, nu));
  for (int p = 4; p <= max_rank; ++p) out.push_back(catalog_record("D III", p, p));
  if (max_rank >= 6) {
    out.push_back(catalog_record("E II", 6, 2));
    out.push_back(catalog_record("E III", 6, 6));
  }
  if (max_rank >= 7) {
    out.push_back(catalog_record("E V", 7, 2));
    out.push_back(catalog_record("E VI", 7, 1));
    out.push_back(catalog_record("E VII", 7, 7));
  }
  if (max_rank >= 8) {
    out.push_back(catalog_record("E VIII", 8, 1));
    out.push_back(catalog_record("E IX", 8, 8));
  }
  if (max_rank >= 4) {
    out.push_back(catalog_record("F I", 4, 4));
    out.push_back(catalog_record("F II", 4, 1));
  }
  if (max_rank >= 2) out.push_back(catalog_record("G", 2, 2));
  return out;
}

inline std::optional<SymmetricPairRecord> find_record(const std::string& label, int p, int nu,
                                                      int max_rank = 8) {
  for (auto& rec : catalog(std::max(max_rank, p)))
    if (rec.label == label && (p == 0 || rec.p == p) && (nu == 0 || rec.nu == nu)) return rec;
  return std::nullopt;
}

namespace detail {

inline long long algebra_dim(const CartanType& t) {
  const long long p = t.rank;
  switch (t.series) {
    case Series::A: return p * (p + 2);
    case Series::B: return p * (2 * p + 1);
    case Series::C: return p * (2 * p + 1);
    case Series::D: return p * (2 * p - 1);
    case Series::E: return p == 6 ? 78 : (p == 7 ? 133 : 248);
    case Series::F: return 52;
    case Series::G: return 14;
  }
  return 0;
}

inline int rank_ss_closed_form(const SymmetricPairRecord& rec) {
  const int p = rec.p, nu = rec.nu;
  if (rec.label == "A III") return std::min(nu, p + 1 - nu);
  if (rec.label == "B I") return std::min(2 * nu, 2 * (p - nu) + 1);
  if (rec.label == "C I") return p;
  if (rec.label == "C II") return std::min(nu, p - nu);
  if (rec.label == "D I") return std::min(2 * nu, 2 * (p - nu));
  if (rec.label == "D III") return p / 2;
  if (rec.label == "E II") return 4;
  if (rec.label == "E III") return 2;
  if (rec.label == "E V") return 7;
  if (rec.label == "E VI") return 4;
  if (rec.label == "E VII") return 3;
  if (rec.label == "E VIII") return 8;
  if (rec.label == "E IX") return 4;
  if (rec.label == "F I") return 4;
  if (rec.label == "F II") return 1;
  if (rec.label == "G") return 2;
  throw invariant_error("unknown symmetric pair label: " + rec.label);
}

}  // namespace detail

inline PairDims dims(const SymmetricPairRecord& rec) {
  PairDims d;
  d.dim_g = detail::algebra_dim(rec.type);
  d.dim_p = 2 * static_cast<long long>(noncompact_positive_roots(rec).size());
  d.dim_k = d.dim_g - d.dim_p;
  ISOPAR_REQUIRE(d.dim_p % 2 == 0 && d.dim_p >= 2, "isotropy module dimension must be even");
  d.n = d.dim_p / 2 - 1;
  d.rank_ss = detail::rank_ss_closed_form(rec);
  d.codim = d.rank_ss - 1;
  return d;
}

// Independent computation of the symmetric-space rank: the maximal number of
// pairwise strongly orthogonal noncompact positive roots (a, b strongly
// orthogonal when neither a+b nor a-b is a root).  Exact branch-and-bound
// maximum clique; used to cross-check rank_ss.
inline int strongly_orthogonal_rank(const SymmetricPairRecord& rec) {
  const RootSystem& rs = cached_root_system(rec.type);
  auto nc = noncompact_positive_roots(rec);
  const int n = static_cast<int>(nc.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      IntVec sum(nc[i]), diff(nc[i]);
      for (int c = 0; c < rec.p; ++c) {
        sum[c] += nc[j][c];
        diff[c] -= nc[j][c];
      }
      bool strong = !rs.is_root(sum) && !rs.is_root(diff);
      adj[i][j] = adj[j][i] = strong ? 1 : 0;
    }
  int best = 0;
  // Greedy-coloring bound on the candidate set, then branch on vertices.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::function<void(std::vector<int>&, int)> expand = [&](std::vector<int>& cand, int size) {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    // Color classes give an upper bound on the clique extension.
    std::vector<int> color(cand.size(), 0);
    int classes = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      int c = 1;
      while (true) {
        bool clash = false;
        for (std::size_t j = 0; j < i; ++j)
          if (color[j] == c && adj[cand[i]][cand[j]]) {
            clash = true;
            break;
          }
        if (!clash) break;
        ++c;
      }
      color[i] = c;
      classes = std::max(classes, c);
    }
    if (size + classes <= best) return;
    for (int i = static_cast<int>(cand.size()) - 1; i >= 0; --i) {
      if (size + color[i] <= best) return;
      int v = cand[i];
      std::vector<int> next;
      for (int j = 0; j < i; ++j)
        if (adj[v][cand[j]]) next.push_back(cand[j]);
      expand(next, size + 1);
    }
  };
  expand(order, 0);
  return best;
}

}  // namespace isopar
