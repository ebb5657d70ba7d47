// Irreducible root systems in simple-root coordinates.
//
// A root is stored as its integer coefficient vector over the simple basis
// (alpha_1, ..., alpha_p).  The invariant inner product is normalized so that
// long roots have squared length 2; it is encoded once per type as an exact
// rational Gram matrix, and every other quantity (Cartan integers, heights,
// the highest root, root strings) is derived from it.
//
// Numbering conventions, fixed here and relied on by the rest of the library:
//   A_p  chain alpha_1 - ... - alpha_p.
//   B_p  chain with alpha_p short (|alpha_p|^2 = 1), p >= 1; B_1 is the
//        rank-one system with a single short simple root.
//   C_p  chain with alpha_1..alpha_{p-1} short (|.|^2 = 1) and alpha_p long.
//   D_p  chain alpha_1..alpha_{p-1} with alpha_p attached to alpha_{p-2}.
//   E_p  chain alpha_1 - alpha_3 - alpha_4 - alpha_5 - alpha_6 (- alpha_7
//        (- alpha_8)) with alpha_2 attached to alpha_4.
//   F_4  alpha_1, alpha_2 short, alpha_3, alpha_4 long, double bond 2-3.
//   G_2  alpha_1 short (|alpha_1|^2 = 2/3), alpha_2 long.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "isopar/rational.hpp"

namespace isopar {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Series series;
  int rank;

  bool operator<(const CartanType& o) const {
    if (series != o.series) return series < o.series;
    return rank < o.rank;
  }
  bool operator==(const CartanType& o) const { return series == o.series && rank == o.rank; }

  std::string str() const {
    return std::string(1, static_cast<char>(series)) + std::to_string(rank);
  }

  static CartanType parse(const std::string& s) {
    ISOPAR_REQUIRE(s.size() >= 2, "Cartan type must look like A3, B2, E8, ...");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    ISOPAR_REQUIRE(c >= 'A' && c <= 'G', "unknown series letter: " + s);
    int r = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      ISOPAR_REQUIRE(std::isdigit(static_cast<unsigned char>(s[i])), "bad rank in type: " + s);
      r = 10 * r + (s[i] - '0');
    }
    CartanType t{static_cast<Series>(c), r};
    t.validate();
    return t;
  }

  void validate() const {
    switch (series) {
      case Series::A:
        ISOPAR_REQUIRE(rank >= 1, "A_p needs p >= 1");
        break;
      case Series::B:
        // B_1 (a single short root) is admitted: it is abstractly A_1 but the
        // short normalization matters when it appears inside ambient data.
        ISOPAR_REQUIRE(rank >= 1, "B_p needs p >= 1");
        break;
      case Series::C:
        ISOPAR_REQUIRE(rank >= 2, "C_p needs p >= 2");
        break;
      case Series::D:
        ISOPAR_REQUIRE(rank >= 3, "D_p needs p >= 3");
        break;
      case Series::E:
        ISOPAR_REQUIRE(rank >= 6 && rank <= 8, "E_p needs p in {6,7,8}");
        break;
      case Series::F:
        ISOPAR_REQUIRE(rank == 4, "F_p needs p == 4");
        break;
      case Series::G:
        ISOPAR_REQUIRE(rank == 2, "G_p needs p == 2");
        break;
    }
  }
};

namespace detail {

// Gram matrix of the simple roots, long-root normalization <a,a> = 2.
inline std::vector<RatVec> gram_matrix(const CartanType& t) {
  const int p = t.rank;
  std::vector<RatVec> g(p, RatVec(p, Rat(0)));
  auto sym = [&](int i, int j, Rat v) { g[i][j] = v; g[j][i] = v; };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i < p; ++i) g[i][i] = Rat(2);
      for (int i = 0; i + 1 < p; ++i) sym(i, i + 1, Rat(-1));
      break;
    case Series::B:
      for (int i = 0; i < p; ++i) g[i][i] = (i == p - 1) ? Rat(1) : Rat(2);
      for (int i = 0; i + 1 < p; ++i) sym(i, i + 1, Rat(-1));
      break;
    case Series::C:
      for (int i = 0; i < p; ++i) g[i][i] = (i == p - 1) ? Rat(2) : Rat(1);
      for (int i = 0; i + 2 < p; ++i) sym(i, i + 1, Rat(-1, 2));
      sym(p - 2, p - 1, Rat(-1));
      break;
    case Series::D:
      for (int i = 0; i < p; ++i) g[i][i] = Rat(2);
      for (int i = 0; i + 2 < p; ++i) sym(i, i + 1, Rat(-1));
      sym(p - 3, p - 1, Rat(-1));
      break;
    case Series::E: {
      for (int i = 0; i < p; ++i) g[i][i] = Rat(2);
      // 0-based edges of the chain 1-3-4-5-6(-7(-8)) plus the branch 2-4.
      sym(0, 2, Rat(-1));
      sym(1, 3, Rat(-1));
      for (int i = 2; i + 1 < p; ++i) sym(i, i + 1, Rat(-1));
      break;
    }
    case Series::F:
      g[0][0] = g[1][1] = Rat(1);
      g[2][2] = g[3][3] = Rat(2);
      sym(0, 1, Rat(-1, 2));
      sym(1, 2, Rat(-1));
      sym(2, 3, Rat(-1));
      break;
    case Series::G:
      g[0][0] = Rat(2, 3);
      g[1][1] = Rat(2);
      sym(0, 1, Rat(-1));
      break;
  }
  return g;
}

}  // namespace detail

// Ordering of roots: ascending height, and inside one height level the
// coefficient vectors in descending lexicographic order, so that e.g. the
// positive roots of B_2 come out as (1,0), (0,1), (1,1), (1,2).
inline bool graded_lex_less(const IntVec& a, const IntVec& b) {
  long long ha = 0, hb = 0;
  for (long long x : a) ha += x;
  for (long long x : b) hb += x;
  if (ha != hb) return ha < hb;
  return a > b;  // descending lexicographic within a height level
}

class RootSystem {
 public:
  explicit RootSystem(CartanType t) : type_(t), gram_(detail::gram_matrix(t)) {
    t.validate();
    generate();
  }

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // Positive roots in the graded lexicographic order described above.
  const std::vector<IntVec>& positive_roots() const { return positive_; }

  const IntVec& highest_root() const { return highest_; }

  Rat inner(const IntVec& a, const IntVec& b) const {
    Rat s(0);
    for (int i = 0; i < rank(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < rank(); ++j)
        if (b[j] != 0) s += Rat(a[i] * b[j]) * gram_[i][j];
    }
    return s;
  }

  // Cartan integer 2<a,b>/<b,b>; checked to be integral.
  long long cartan_pairing(const IntVec& a, const IntVec& b) const {
    Rat c = Rat(2) * inner(a, b) / inner(b, b);
    ISOPAR_REQUIRE(c.denominator() == 1, "Cartan pairing must be an integer");
    return c.numerator();
  }

  bool is_positive_root(const IntVec& r) const { return root_set_.count(r) != 0; }

  // Membership among all roots (positive or negative).
  bool is_root(const IntVec& r) const {
    if (root_set_.count(r)) return true;
    IntVec neg(r);
    for (auto& x : neg) x = -x;
    return root_set_.count(neg) != 0;
  }

  static long long height(const IntVec& r) {
    long long h = 0;
    for (long long x : r) h += x;
    return h;
  }

 private:
  void generate() {
    const int p = rank();
    // Extend root strings upward: beta + alpha_j is a root iff r - c > 0,
    // where r is the length of the string below beta in direction alpha_j and
    // c is the Cartan integer of beta against alpha_j.
    std::vector<IntVec> frontier;
    for (int i = 0; i < p; ++i) {
      IntVec e(p, 0);
      e[i] = 1;
      root_set_.insert(e);
      frontier.push_back(e);
    }
    // Cache <beta, alpha_j> incrementally to keep generation near-linear.
    std::map<IntVec, RatVec> pair_cache;
    for (auto& e : frontier) {
      RatVec g(p);
      for (int j = 0; j < p; ++j) {
        int i = int(std::find(e.begin(), e.end(), 1) - e.begin());
        g[j] = gram_[i][j];
      }
      pair_cache[e] = g;
    }
    while (!frontier.empty()) {
      std::vector<IntVec> next;
      for (const auto& beta : frontier) {
        const RatVec& g = pair_cache[beta];
        for (int j = 0; j < p; ++j) {
          Rat c2 = Rat(2) * g[j] / gram_[j][j];
          ISOPAR_REQUIRE(c2.denominator() == 1, "non-integral Cartan pairing in generation");
          long long c = c2.numerator();
          long long r = 0;
          IntVec down = beta;
          while (true) {
            down[j] -= 1;
            if (down[j] < 0 || !root_set_.count(down)) break;
            ++r;
          }
          if (r - c > 0) {
            IntVec up = beta;
            up[j] += 1;
            if (root_set_.insert(up).second) {
              RatVec gu(p);
              for (int l = 0; l < p; ++l) gu[l] = g[l] + gram_[j][l];
              pair_cache[up] = gu;
              next.push_back(up);
            }
          }
        }
      }
      frontier = std::move(next);
    }
    positive_.assign(root_set_.begin(), root_set_.end());
    std::sort(positive_.begin(), positive_.end(), graded_lex_less);
    highest_ = positive_.back();
    long long top = height(highest_);
    int at_top = 0;
    for (const auto& r : positive_)
      if (height(r) == top) ++at_top;
    ISOPAR_REQUIRE(at_top == 1, "highest root must be unique");
  }

  CartanType type_;
  std::vector<RatVec> gram_;
  std::vector<IntVec> positive_;
  std::set<IntVec> root_set_;
  IntVec highest_;
};

// Root systems are immutable; share them per type.
inline const RootSystem& cached_root_system(CartanType t) {
  static std::map<CartanType, std::unique_ptr<RootSystem>> cache;
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, std::make_unique<RootSystem>(t)).first;
  return *it->second;
}

// Evaluation of a functional with coefficient vector m (over the simple basis)
// at a torus point x written in the dual basis: plain dot product.
template <typename Coord>
inline auto eval_root(const IntVec& m, const std::vector<Coord>& x) {
  Coord s{};
  for (std::size_t i = 0; i < m.size(); ++i) s += Coord(m[i]) * x[i];
  return s;
}

}  // namespace isopar
