// Projecting Clifford-type isoparametric families to complex projective
// space: weight systems of the symmetry algebra so(m+1) + h, the admissible
// torus elements (every weight evaluates to +-1), the symmetry generators
// acting on them, and the resulting congruence count N.
//
// Torus coordinates are flat rational vectors: spin block x^s_1..x^s_p first,
// then the h block (x_1..x_q, or x^+ then x^- for split h).
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isopar/clifford.hpp"
#include "isopar/orbits.hpp"
#include "isopar/rational.hpp"

namespace isopar {

inline void require_scope(const FkmFamily& f) {
  if (!f.m1_le_m2)
    throw invariant_error("family has m1 > m2: outside the classification's scope");
}

namespace detail {

// Chamber shape of one simple factor, acting on a contiguous coordinate
// block.  B: x_1 >= ... >= x_r >= 0 (odd orthogonal); D: x_1 >= ... >=
// x_{r-1} >= |x_r| (even orthogonal); A: x_1 >= ... >= x_r (unitary);
// C: x_1 >= ... >= x_r >= 0 (symplectic).
enum class ChamberKind { B, D, A, C };

struct FactorBlock {
  long long offset = 0;
  long long rank = 0;
  ChamberKind kind = ChamberKind::B;
  bool zero_weight = false;  // odd orthogonal factors contribute the weight 0
};

inline std::vector<FactorBlock> factor_blocks(const FkmFamily& f) {
  std::vector<FactorBlock> blocks;
  blocks.push_back({0, f.p, f.m % 2 == 0 ? ChamberKind::B : ChamberKind::D, false});
  auto orth = [](long long off, long long rank, long long k) {
    return FactorBlock{off, rank, k % 2 != 0 ? ChamberKind::B : ChamberKind::D, k % 2 != 0};
  };
  switch (f.kind) {
    case HKind::Orthogonal:
      blocks.push_back(orth(f.p, f.q, f.k));
      break;
    case HKind::Unitary:
      blocks.push_back({f.p, f.q, ChamberKind::A, false});
      break;
    case HKind::Symplectic:
      blocks.push_back({f.p, f.q, ChamberKind::C, false});
      break;
    case HKind::OrthogonalPair:
      blocks.push_back(orth(f.p, f.qplus, f.kplus));
      blocks.push_back(orth(f.p + f.qplus, f.qminus, f.kminus));
      break;
    case HKind::SymplecticPair:
      blocks.push_back({f.p, f.qplus, ChamberKind::C, false});
      blocks.push_back({f.p + f.qplus, f.qminus, ChamberKind::C, false});
      break;
  }
  return blocks;
}

inline Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

inline bool block_in_chamber(const FactorBlock& b, const RatVec& x) {
  for (long long i = 0; i + 1 < b.rank; ++i)
    if (x[b.offset + i] < x[b.offset + i + 1]) return false;
  if (b.rank >= 1) {
    const Rat& last = x[b.offset + b.rank - 1];
    if ((b.kind == ChamberKind::B || b.kind == ChamberKind::C) && last < Rat(0)) return false;
    if (b.kind == ChamberKind::D && b.rank >= 2 && x[b.offset + b.rank - 2] < rat_abs(last))
      return false;
  }
  return true;
}

// All block vectors of the given chamber shape with entries drawn from vals
// (sorted descending), written into scratch[offset..offset+rank).
inline void block_chains(const FactorBlock& b, const std::vector<Rat>& vals, RatVec& scratch,
                         const std::function<void()>& cb) {
  std::function<void(long long)> rec = [&](long long i) {
    if (i == b.rank) {
      cb();
      return;
    }
    bool is_last = i == b.rank - 1;
    for (const Rat& v : vals) {
      if (i > 0 && v > scratch[b.offset + i - 1]) continue;
      if ((b.kind == ChamberKind::B || b.kind == ChamberKind::C) && v < Rat(0)) continue;
      if (b.kind == ChamberKind::D) {
        if (!is_last && v < Rat(0)) continue;
        if (is_last && b.rank >= 2 && rat_abs(v) > scratch[b.offset + b.rank - 2]) continue;
      }
      scratch[b.offset + i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

inline std::vector<Rat> half_integer_grid(long long bound) {
  std::vector<Rat> vals;  // descending
  for (long long j = 2 * bound; j >= -2 * bound; --j) vals.push_back(Rat(j, 2));
  return vals;
}

}  // namespace detail

// Weights of the complexified module representation: every sum of a spin
// weight (all sign patterns on half the spin coordinates) with a standard
// weight of h; for unitary h the negatives of these sums are weights as
// well, and odd orthogonal factors contribute a zero standard weight.
inline std::vector<RatVec> weight_system(const FkmFamily& f) {
  require_scope(f);
  const long long p = f.p, d = f.torus_rank();
  auto blocks = detail::factor_blocks(f);
  std::vector<RatVec> hw;
  for (std::size_t bi = 1; bi < blocks.size(); ++bi) {
    const auto& b = blocks[bi];
    for (long long j = 0; j < b.rank; ++j) {
      RatVec w(d, Rat(0));
      w[b.offset + j] = Rat(1);
      hw.push_back(w);
    }
    if (f.kind != HKind::Unitary)  // for unitary h the negation acts on whole sums
      for (long long j = 0; j < b.rank; ++j) {
        RatVec w(d, Rat(0));
        w[b.offset + j] = Rat(-1);
        hw.push_back(w);
      }
    if (b.zero_weight) hw.push_back(RatVec(d, Rat(0)));
  }
  std::vector<RatVec> weights;
  for (long long bits = 0; bits < (1LL << p); ++bits) {
    RatVec s(d, Rat(0));
    for (long long i = 0; i < p; ++i) s[i] = (bits >> i) & 1 ? Rat(-1, 2) : Rat(1, 2);
    for (const auto& w : hw) {
      RatVec sum(d);
      for (long long i = 0; i < d; ++i) sum[i] = s[i] + w[i];
      if (f.kind == HKind::Unitary) {
        RatVec neg(d);
        for (long long i = 0; i < d; ++i) neg[i] = -sum[i];
        weights.push_back(std::move(sum));
        weights.push_back(std::move(neg));
      } else {
        weights.push_back(std::move(sum));
      }
    }
  }
  ISOPAR_REQUIRE(static_cast<long long>(weights.size()) == f.dimV,
                 "weight count must equal the module dimension");
  return weights;
}

inline bool chamber_contains(const FkmFamily& f, const RatVec& x) {
  for (const auto& b : detail::factor_blocks(f))
    if (!detail::block_in_chamber(b, x)) return false;
  return true;
}

// Admissible torus elements by depth-first search over the half-integer grid
// [-bound, bound], restricted to the closed chamber.
//
// Spin-block pruning: two sign patterns agreeing outside the processed prefix
// can be completed with the same remaining signs and the same h-weight; the
// two resulting full weights differ exactly by the difference of the prefix
// sums.  Full evaluations lie in {+-1}, so every pairwise difference of
// prefix sums must lie in {0, +-2} at every step, and since the prefix-sum
// set is symmetric it must equal {0} or {-1, +1}.  The h coordinates then
// range over the values v with s + v in {+-1} for every final spin sum s;
// an odd orthogonal factor (zero weight present) additionally forces the
// spin sums themselves into {+-1}.
inline std::vector<RatVec> admissible_points_fkm(const FkmFamily& f, long long bound = 2) {
  require_scope(f);
  ISOPAR_REQUIRE(bound >= 2, "search needs bound >= 2");
  const auto grid = detail::half_integer_grid(bound);
  const long long d = f.torus_rank();
  auto blocks = detail::factor_blocks(f);
  const auto& spin = blocks[0];
  bool zero_weight = false;
  for (std::size_t bi = 1; bi < blocks.size(); ++bi) zero_weight |= blocks[bi].zero_weight;

  std::vector<RatVec> pts;
  RatVec x(d, Rat(0));

  auto finish_h = [&](const std::set<Rat>& sums) {
    if (zero_weight && sums.count(Rat(0))) return;  // zero weight would evaluate to 0
    std::vector<Rat> allowed;
    for (const Rat& v : grid) {
      bool ok = true;
      for (const Rat& s : sums)
        if (detail::rat_abs(s + v) != Rat(1)) {
          ok = false;
          break;
        }
      if (ok) allowed.push_back(v);
    }
    std::function<void(std::size_t)> per_block = [&](std::size_t bi) {
      if (bi == blocks.size()) {
        pts.push_back(x);
        return;
      }
      detail::block_chains(blocks[bi], allowed, x, [&] { per_block(bi + 1); });
    };
    per_block(1);
  };

  std::function<void(long long, const std::set<Rat>&)> sweep_spin = [&](long long i,
                                                                        const std::set<Rat>& sums) {
    if (i == spin.rank) {
      finish_h(sums);
      return;
    }
    bool is_last = i == spin.rank - 1;
    for (const Rat& v : grid) {
      if (i > 0 && v > x[i - 1]) continue;
      if (spin.kind == detail::ChamberKind::B && v < Rat(0)) continue;
      if (spin.kind == detail::ChamberKind::D) {
        if (!is_last && v < Rat(0)) continue;
        if (is_last && spin.rank >= 2 && detail::rat_abs(v) > x[spin.rank - 2]) continue;
      }
      std::set<Rat> next;
      for (const Rat& s : sums) {
        next.insert(s + v / 2);
        next.insert(s - v / 2);
      }
      bool feasible =
          (next.size() == 1 && *next.begin() == Rat(0)) ||
          (next.size() == 2 && *next.begin() == Rat(-1) && *next.rbegin() == Rat(1));
      if (!feasible) continue;
      x[i] = v;
      sweep_spin(i + 1, next);
    }
  };
  sweep_spin(0, std::set<Rat>{Rat(0)});
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

// Unpruned cross-check: scan the whole grid and test every weight directly.
// Exponential in the torus rank; only for small families.
inline std::vector<RatVec> admissible_points_fkm_naive(const FkmFamily& f, long long bound = 2) {
  require_scope(f);
  const auto grid = detail::half_integer_grid(bound);
  const long long d = f.torus_rank();
  ISOPAR_REQUIRE(d <= 6, "naive scan is limited to torus rank <= 6");
  auto weights = weight_system(f);
  std::vector<RatVec> pts;
  RatVec x(d, Rat(0));
  std::function<void(long long)> rec = [&](long long i) {
    if (i == d) {
      if (!chamber_contains(f, x)) return;
      for (const auto& w : weights) {
        Rat v(0);
        for (long long j = 0; j < d; ++j) v += w[j] * x[j];
        if (v != Rat(1) && v != Rat(-1)) return;
      }
      pts.push_back(x);
      return;
    }
    for (const Rat& v : grid) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

// The admissible sets as tabulated in the case-by-case classification;
// constructed per case and deduplicated, which also covers the degenerate
// shapes (k- = 0, ranks 0 or 1) where distinct formula entries coincide.
inline std::vector<RatVec> reference_admissible_points_fkm(const FkmFamily& f) {
  require_scope(f);
  const long long d = f.torus_rank(), p = f.p;
  std::set<RatVec> pts;
  RatVec top(d, Rat(0));
  top[0] = Rat(2);
  pts.insert(top);  // 2e^s_1 in every case
  if (f.m == 1) {
    RatVec bottom(d, Rat(0));
    bottom[0] = Rat(-2);
    pts.insert(bottom);
  }
  auto ones = [&](long long offset, long long rank, bool flip_last) {
    RatVec v(d, Rat(0));
    for (long long j = 0; j < rank; ++j) v[offset + j] = Rat(1);
    if (flip_last && rank >= 1) v[offset + rank - 1] = Rat(-1);
    return v;
  };
  auto add = [&](const RatVec& a, const RatVec& b) {
    RatVec v(d);
    for (long long j = 0; j < d; ++j) v[j] = a[j] + b[j];
    return v;
  };
  switch (f.kind) {
    case HKind::Orthogonal:
      if (f.k % 2 == 0) {
        pts.insert(ones(p, f.q, false));
        pts.insert(ones(p, f.q, true));
      }
      break;
    case HKind::Unitary:
      for (long long a = f.k; a >= 0; --a) {
        RatVec v(d, Rat(0));
        for (long long j = 0; j < f.k; ++j) v[p + j] = j < a ? Rat(1) : Rat(-1);
        pts.insert(v);
      }
      break;
    case HKind::Symplectic:
      pts.insert(ones(p, f.q, false));
      break;
    case HKind::OrthogonalPair:
      if (f.kplus % 2 == 0 && f.kminus % 2 == 0)
        for (int fp = 0; fp < 2; ++fp)
          for (int fm = 0; fm < 2; ++fm)
            pts.insert(add(ones(p, f.qplus, fp != 0), ones(p + f.qplus, f.qminus, fm != 0)));
      break;
    case HKind::SymplecticPair:
      pts.insert(add(ones(p, f.qplus, false), ones(p + f.qplus, f.qminus, false)));
      break;
  }
  std::vector<RatVec> out(pts.begin(), pts.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Generators of the symmetry group acting on the torus, as coordinate maps.
// Each generator is emitted whenever its structural condition holds:
//   sigma  (m odd)                      flips the last spin coordinate;
//   phi    (even orthogonal factor,     flips the last coordinate of that
//           rank >= 1)                  factor's block;
//   tau    (split h with k+ = k-)       swaps the two h blocks;
//   sigma_u (unitary h)                 x_j -> -x_{k+1-j}.
inline std::vector<IntMat> outpm_generators(const FkmFamily& f) {
  require_scope(f);
  const long long d = f.torus_rank(), p = f.p;
  std::vector<IntMat> gens;
  auto flip = [&](long long idx) {
    IntMat m = identity_map(d);
    m[idx][idx] = -1;
    return m;
  };
  if (f.m % 2 != 0) gens.push_back(flip(p - 1));
  switch (f.kind) {
    case HKind::Orthogonal:
      if (f.k % 2 == 0 && f.q >= 1) gens.push_back(flip(p + f.q - 1));
      break;
    case HKind::Unitary: {
      IntMat m = identity_map(d);
      for (long long j = 0; j < f.k; ++j) {
        m[p + j][p + j] = 0;
        m[p + j][p + f.k - 1 - j] = -1;
      }
      gens.push_back(m);
      break;
    }
    case HKind::Symplectic:
      break;
    case HKind::OrthogonalPair:
      if (f.kplus % 2 == 0 && f.kplus >= 2) gens.push_back(flip(p + f.qplus - 1));
      if (f.kminus % 2 == 0 && f.kminus >= 2) gens.push_back(flip(p + f.qplus + f.qminus - 1));
      break;
    case HKind::SymplecticPair:
      break;
  }
  if (f.split && f.kplus == f.kminus) {
    IntMat m = identity_map(d);
    for (long long j = 0; j < f.qplus; ++j) {
      m[p + j][p + j] = 0;
      m[p + f.qplus + j][p + f.qplus + j] = 0;
      m[p + j][p + f.qplus + j] = 1;
      m[p + f.qplus + j][p + j] = 1;
    }
    gens.push_back(m);
  }
  return gens;
}

// Congruence count in closed form: 2 for symplectic h and for split or even
// orthogonal h with even parts, 2 + floor(k/2) for unitary h, 1 otherwise.
// A vanishing k- counts as even (the search and the orbit count confirm).
inline long long closed_form_N(const FkmFamily& f) {
  require_scope(f);
  switch (f.kind) {
    case HKind::Orthogonal: return f.k % 2 == 0 ? 2 : 1;
    case HKind::Unitary: return 2 + f.k / 2;
    case HKind::Symplectic: return 2;
    case HKind::OrthogonalPair: return f.kplus % 2 == 0 && f.kminus % 2 == 0 ? 2 : 1;
    case HKind::SymplecticPair: return 2;
  }
  throw invariant_error("unhandled family kind");
}

struct FkmClassCount {
  long long n = 0;
  std::vector<std::vector<RatVec>> orbits;
  std::vector<IntMat> group;
};

inline FkmClassCount count_classes_fkm(const FkmFamily& f) {
  auto points = admissible_points_fkm(f);
  FkmClassCount cc;
  cc.group = close_group(outpm_generators(f), f.torus_rank());
  cc.orbits = orbit_partition(points, cc.group);
  cc.n = static_cast<long long>(cc.orbits.size());
  ISOPAR_REQUIRE(cc.n == closed_form_N(f),
                 "orbit count disagrees with the closed-form congruence count");
  return cc;
}

// ---------------------------------------------------------------------------
// Lowest weight diagrams.

struct DiagramNode {
  std::string name;
  RatVec vec;  // functional in the orthonormal dual coordinates
  bool black = false;
};

struct LowestWeightDiagram {
  std::vector<DiagramNode> nodes;
  struct Edge {
    std::size_t white = 0, black = 0;  // node indices
    Rat label;                         // 2<w,b>/<w,w>
  };
  std::vector<Edge> edges;

  long long black_count() const {
    long long c = 0;
    for (const auto& n : nodes) c += n.black ? 1 : 0;
    return c;
  }
};

inline LowestWeightDiagram lowest_weight_diagram(const FkmFamily& f) {
  require_scope(f);
  const long long d = f.torus_rank(), p = f.p;
  LowestWeightDiagram dia;
  auto unit = [&](long long i, Rat c) {
    RatVec v(d, Rat(0));
    v[i] = c;
    return v;
  };
  auto chain_roots = [&](long long off, long long rank, detail::ChamberKind kind,
                         const std::string& stem) {
    // Simple roots of one factor: e_i - e_{i+1} along the chain, closed by
    // e_r (B), e_{r-1} + e_r (D, rank >= 2), nothing (A drops the closer and
    // D of rank 1 is abelian), or 2e_r (C).
    for (long long i = 0; i + 1 < rank; ++i) {
      RatVec v(d, Rat(0));
      v[off + i] = Rat(1);
      v[off + i + 1] = Rat(-1);
      dia.nodes.push_back({stem + std::to_string(i + 1), v, false});
    }
    if (rank >= 1) {
      if (kind == detail::ChamberKind::B)
        dia.nodes.push_back({stem + std::to_string(rank), unit(off + rank - 1, Rat(1)), false});
      else if (kind == detail::ChamberKind::C)
        dia.nodes.push_back({stem + std::to_string(rank), unit(off + rank - 1, Rat(2)), false});
      else if (kind == detail::ChamberKind::D && rank >= 2) {
        RatVec v(d, Rat(0));
        v[off + rank - 2] = Rat(1);
        v[off + rank - 1] = Rat(1);
        dia.nodes.push_back({stem + std::to_string(rank), v, false});
      }
    }
  };
  auto blocks = detail::factor_blocks(f);
  chain_roots(blocks[0].offset, blocks[0].rank, blocks[0].kind, "a_s");
  if (f.split) {
    chain_roots(blocks[1].offset, blocks[1].rank, blocks[1].kind, "a+");
    chain_roots(blocks[2].offset, blocks[2].rank, blocks[2].kind, "a-");
  } else {
    chain_roots(blocks[1].offset, blocks[1].rank, blocks[1].kind, "a");
  }

  // Lowest weights: spin part -1/2 everywhere, except that for odd m the
  // last spin sign splits into a +- pair; the h part attaches -omega_1 of a
  // factor (and +omega_1 when that factor has exactly two summands, or
  // +omega_k for unitary h, or nothing at rank-one orthogonal factors).
  auto spin_part = [&](int last_sign) {
    RatVec v(d, Rat(0));
    for (long long i = 0; i < p; ++i) v[i] = Rat(-1, 2);
    if (last_sign < 0) v[p - 1] = Rat(1, 2);  // -1/2 * (-omega_p)
    return v;
  };
  auto with_h = [&](RatVec v, long long idx, Rat c) {
    v[idx] += c;
    return v;
  };
  auto black = [&](const std::string& name, RatVec v) { dia.nodes.push_back({name, v, true}); };
  switch (f.kind) {
    case HKind::Orthogonal:
      for (int sg : {+1, -1}) {
        std::string tag = sg > 0 ? "+" : "-";
        if (f.k >= 2) black("lambda" + tag, with_h(spin_part(sg), p, Rat(-1)));
        if (f.k == 2) black("mu" + tag, with_h(spin_part(sg), p, Rat(1)));
        if (f.k == 1) black("lambda" + tag, spin_part(sg));
      }
      break;
    case HKind::Unitary:
      black("lambda+", with_h(spin_part(+1), p, Rat(-1)));
      black("lambda-", with_h(spin_part(+1), p + f.k - 1, Rat(1)));
      break;
    case HKind::Symplectic:
      for (int sg : {+1, -1})
        black(std::string("lambda") + (sg > 0 ? "+" : "-"), with_h(spin_part(sg), p, Rat(-1)));
      break;
    case HKind::OrthogonalPair: {
      auto do_block = [&](const std::string& tag, long long off, long long kb) {
        if (kb >= 2) black("lambda" + tag, with_h(spin_part(+1), off, Rat(-1)));
        if (kb == 2) black("mu" + tag, with_h(spin_part(+1), off, Rat(1)));
        if (kb == 1) black("lambda0", spin_part(+1));
      };
      do_block("+", p, f.kplus);
      do_block("-", p + f.qplus, f.kminus);
      break;
    }
    case HKind::SymplecticPair:
      if (f.kplus >= 1) black("lambda+", with_h(spin_part(+1), p, Rat(-1)));
      if (f.kminus >= 1) black("lambda-", with_h(spin_part(+1), p + f.qplus, Rat(-1)));
      break;
  }

  auto inner = [&](const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (long long i = 0; i < d; ++i) s += a[i] * b[i];
    return s;
  };
  for (std::size_t i = 0; i < dia.nodes.size(); ++i) {
    if (dia.nodes[i].black) continue;
    for (std::size_t j = 0; j < dia.nodes.size(); ++j) {
      if (!dia.nodes[j].black) continue;
      Rat ip = inner(dia.nodes[i].vec, dia.nodes[j].vec);
      if (ip != Rat(0))
        dia.edges.push_back({i, j, Rat(2) * ip / inner(dia.nodes[i].vec, dia.nodes[i].vec)});
    }
  }
  return dia;
}

// Symmetries of a lowest weight diagram: colour-preserving node permutations
// preserving all inner products in the orthonormal dual metric (hence bond
// data between simple roots, edge labels, and the pairwise geometry of the
// lowest weights).
inline long long diagram_automorphism_count(const LowestWeightDiagram& dia) {
  const std::size_t n = dia.nodes.size();
  std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat s(0);
      for (std::size_t t = 0; t < dia.nodes[i].vec.size(); ++t)
        s += dia.nodes[i].vec[t] * dia.nodes[j].vec[t];
      gram[i][j] = s;
    }
  long long count = 0;
  std::vector<long long> perm(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == n) {
      ++count;
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || dia.nodes[c].black != dia.nodes[i].black) continue;
      if (gram[c][c] != gram[i][i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = gram[c][perm[j]] == gram[i][j];
      if (!ok) continue;
      perm[i] = static_cast<long long>(c);
      used[c] = 1;
      place(i + 1);
      used[c] = 0;
      perm[i] = -1;
    }
  };
  place(0);
  return count;
}

}  // namespace isopar
