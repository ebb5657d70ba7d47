// Clifford-system bookkeeping for the isoparametric families of
// Ferus-Karcher-Muenzner type: module dimensions, multiplicities, and the
// symmetry algebra so(m+1) + h acting on the module.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isopar/rational.hpp"

namespace isopar {

// Real dimension of the irreducible module of the Clifford algebra attached
// to m; periodic with factor 16 under m -> m+8.
inline long long clifford_delta(long long m) {
  ISOPAR_REQUIRE(m >= 1, "clifford_delta needs m >= 1");
  static const long long base[8] = {2, 4, 8, 8, 16, 16, 16, 16};  // m = 1..8
  long long scale = 1;
  while (m > 8) {
    m -= 8;
    scale *= 16;
  }
  return base[m - 1] * scale;
}

// Isomorphism class of the Clifford algebra attached to m, as a (possibly
// doubled) matrix algebra over R, C, or H acting on the irreducible module.
inline std::string clifford_algebra_name(long long m) {
  long long d = clifford_delta(m);
  auto mat = [](const std::string& field, long long size) {
    return field + "(" + std::to_string(size) + ")";
  };
  switch (((m % 8) + 8) % 8) {
    case 1:
    case 7: return mat("R", d);
    case 2:
    case 6: return mat("C", d / 2);
    case 3:
    case 5: return mat("H", d / 4);
    case 4: return mat("H", d / 4) + "+" + mat("H", d / 4);
    default: return mat("R", d) + "+" + mat("R", d);  // m = 0 mod 8
  }
}

enum class HKind {
  Orthogonal,      // so(k),            m = 1,7 mod 8
  Unitary,         // u(k),             m = 2,6 mod 8
  Symplectic,      // sp(k),            m = 3,5 mod 8
  OrthogonalPair,  // so(k+) + so(k-),  m = 0 mod 8
  SymplecticPair,  // sp(k+) + sp(k-),  m = 4 mod 8
};

struct FkmFamily {
  long long m = 0;
  bool split = false;       // true when h has two factors (m = 0 mod 4)
  long long k = 0;          // number of irreducible summands of the module
  long long kplus = 0, kminus = 0;
  long long delta = 0;      // irreducible module dimension
  long long dimV = 0;       // k * delta
  long long n = 0;          // foliated sphere S^{2n+1}: dimV = 2n+2
  long long m1 = 0, m2 = 0; // principal curvature multiplicities (m, n-m)
  bool m1_le_m2 = false;    // scope condition for the classification results
  HKind kind = HKind::Orthogonal;
  long long p = 0;          // rank of so(m+1)
  long long q = 0;          // rank of h (single factor)
  long long qplus = 0, qminus = 0;
  bool degenerate_split = false;  // k- = 0: one factor of h is so(0)/sp(0)

  long long torus_rank() const { return p + (split ? qplus + qminus : q); }

  std::string h_desc() const {
    auto so = [](long long a) { return "so(" + std::to_string(a) + ")"; };
    auto sp = [](long long a) { return "sp(" + std::to_string(a) + ")"; };
    switch (kind) {
      case HKind::Orthogonal: return so(k);
      case HKind::Unitary: return "u(" + std::to_string(k) + ")";
      case HKind::Symplectic: return sp(k);
      case HKind::OrthogonalPair: return so(kplus) + " + " + so(kminus);
      case HKind::SymplecticPair: return sp(kplus) + " + " + sp(kminus);
    }
    return {};
  }
  std::string symmetry_desc() const { return "so(" + std::to_string(m + 1) + ") + " + h_desc(); }
};

namespace detail {

inline FkmFamily make_family(long long m, long long k, long long kplus, long long kminus,
                             bool split) {
  ISOPAR_REQUIRE(m >= 1, "Clifford family needs m >= 1");
  ISOPAR_REQUIRE(k >= 1, "Clifford family needs k >= 1");
  FkmFamily f;
  f.m = m;
  f.split = split;
  f.k = k;
  f.kplus = kplus;
  f.kminus = kminus;
  f.delta = clifford_delta(m);
  f.dimV = f.k * f.delta;
  f.n = f.dimV / 2 - 1;
  f.m1 = m;
  f.m2 = f.n - m;
  if (f.m2 <= 0)
    throw invariant_error("multiplicity m2 = " + std::to_string(f.m2) +
                          " is not positive: not an isoparametric family");
  f.m1_le_m2 = f.m1 <= f.m2;
  f.p = (m + 1) / 2;
  switch (((m % 8) + 8) % 8) {
    case 1:
    case 7:
      f.kind = HKind::Orthogonal;
      f.q = k / 2;
      break;
    case 2:
    case 6:
      f.kind = HKind::Unitary;
      f.q = k;
      break;
    case 3:
    case 5:
      f.kind = HKind::Symplectic;
      f.q = k;
      break;
    case 0:
      f.kind = HKind::OrthogonalPair;
      f.qplus = kplus / 2;
      f.qminus = kminus / 2;
      break;
    case 4:
      f.kind = HKind::SymplecticPair;
      f.qplus = kplus;
      f.qminus = kminus;
      break;
  }
  f.degenerate_split = split && kminus == 0;
  return f;
}

}  // namespace detail

// Family with a single structure datum k; rejects m = 0 mod 4, where the
// module decomposes into positive and negative summands and (k+, k-) is
// required instead.
inline FkmFamily clifford_family(long long m, long long k) {
  ISOPAR_REQUIRE(m % 4 != 0, "m = 0 mod 4 needs a split (k+, k-), not a plain k");
  return detail::make_family(m, k, 0, 0, /*split=*/false);
}

// Family with a split (k+, k-); the two orderings of the same unordered pair
// give congruent foliations, so the canonical form has k+ >= k-.
inline FkmFamily clifford_family(long long m, long long kplus, long long kminus) {
  ISOPAR_REQUIRE(m % 4 == 0, "a split (k+, k-) only applies when m = 0 mod 4");
  ISOPAR_REQUIRE(kplus >= 0 && kminus >= 0, "split parts must be nonnegative");
  if (kplus < kminus) std::swap(kplus, kminus);
  return detail::make_family(m, kplus + kminus, kplus, kminus, /*split=*/true);
}

// All families on the sphere of a fixed ambient dimension dimV = 2n+2, in
// deterministic order (ascending m, then descending k-).  Splits are listed
// in canonical form; families failing m2 > 0 are skipped.
inline std::vector<FkmFamily> families_with_dimV(long long dimV) {
  std::vector<FkmFamily> out;
  for (long long m = 1; clifford_delta(m) <= dimV; ++m) {
    long long delta = clifford_delta(m);
    if (dimV % delta != 0) continue;
    long long k = dimV / delta;
    if (m % 4 != 0) {
      try {
        out.push_back(clifford_family(m, k));
      } catch (const invariant_error&) {
      }
    } else {
      for (long long kminus = k / 2; kminus >= 0; --kminus) {
        try {
          out.push_back(clifford_family(m, k - kminus, kminus));
        } catch (const invariant_error&) {
        }
      }
    }
  }
  return out;
}

// Multiplicity pairs (m1, m2) with m1 > m2 among families with m <= m_max.
// Only k up to the threshold k*delta <= 4m+2 can satisfy m1 > m2, so the
// sweep is finite.  Returns the sorted distinct pairs and the number of
// family shapes realizing them.
inline std::pair<std::vector<std::pair<long long, long long>>, long long>
exceptional_multiplicity_pairs(long long m_max) {
  std::set<std::pair<long long, long long>> pairs;
  long long shapes = 0;
  for (long long m = 1; m <= m_max; ++m) {
    long long kmax = (4 * m + 2) / clifford_delta(m);
    for (long long k = 1; k <= kmax; ++k) {
      std::vector<FkmFamily> candidates;
      try {
        if (m % 4 != 0) {
          candidates.push_back(clifford_family(m, k));
        } else {
          for (long long kminus = k / 2; kminus >= 0; --kminus)
            candidates.push_back(clifford_family(m, k - kminus, kminus));
        }
      } catch (const invariant_error&) {
        continue;
      }
      for (const auto& f : candidates)
        if (f.m1 > f.m2) {
          pairs.insert({f.m1, f.m2});
          ++shapes;
        }
    }
  }
  return {std::vector<std::pair<long long, long long>>(pairs.begin(), pairs.end()), shapes};
}

}  // namespace isopar
