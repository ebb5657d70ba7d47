// Golden verification suite.  Nine checks cross-validate the classification
// machinery against tabulated counts, literal admissible sets, closed-form
// class counts, diagram symmetry orders, and the primality criterion; the
// last bundles determinism and bound-perturbation properties.  The CLI
// `check --tables` verb and the acceptance harness both run this list.
#pragma once

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isopar/census.hpp"

namespace isopar {

struct CheckResult {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0 means no limit
  std::string detail;
};

namespace detail {

// All Clifford families with m <= m_max, m1 <= m2 and torus rank <= rank_max,
// canonical split parameters only.
inline std::vector<FkmFamily> families_in_scope(long long m_max, long long rank_max) {
  std::vector<FkmFamily> fams;
  for (long long m = 1; m <= m_max; ++m) {
    if (m % 4 != 0) {
      for (long long k = 1; k <= 4096; ++k) {
        FkmFamily f;
        try {
          f = clifford_family(m, k);
        } catch (const invariant_error&) {
          continue;  // representation too small to leave a second multiplicity
        }
        if (f.torus_rank() > rank_max) break;
        if (f.m1_le_m2) fams.push_back(std::move(f));
      }
    } else {
      for (long long kp = 1; kp <= 4096; ++kp) {
        bool saw_valid = false, any_in_rank = false;
        for (long long km = 0; km <= kp; ++km) {
          FkmFamily f;
          try {
            f = clifford_family(m, kp, km);
          } catch (const invariant_error&) {
            continue;
          }
          saw_valid = true;
          if (f.torus_rank() > rank_max) break;  // rank only grows with km
          any_in_rank = true;
          if (f.m1_le_m2) fams.push_back(std::move(f));
        }
        if (saw_valid && !any_in_rank) break;  // every larger kp is over the rank cap
      }
    }
  }
  return fams;
}

inline std::string pair_tag(const SymmetricPairRecord& rec) {
  return rec.label + " p=" + std::to_string(rec.p) + " nu=" + std::to_string(rec.nu);
}

inline std::string family_tag(const FkmFamily& f) {
  return fkm_label(f);
}

}  // namespace detail

inline CheckResult run_single_check(const std::string& name, double limit,
                                    const std::function<std::string()>& body) {
  CheckResult r;
  r.name = name;
  r.time_limit = limit;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.passed = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.passed && limit > 0.0 && r.seconds > limit) {
    r.passed = false;
    r.detail = "time limit of " + std::to_string(limit) + "s exceeded";
  }
  return r;
}

// 1. Orbit counts across the whole symmetric-pair catalog match the
// tabulated class numbers.
inline CheckResult check_pair_class_counts(int max_rank = 8) {
  return run_single_check("pair-class-counts", 10.0, [&] {
    int rows = 0, compared = 0;
    for (const auto& rec : catalog(max_rank)) {
      auto cc = count_classes(rec);
      if (auto want = table_class_count(rec)) {
        ISOPAR_REQUIRE(cc.n == *want, "class count mismatch for " + detail::pair_tag(rec) +
                                          ": got " + std::to_string(cc.n) + ", tabulated " +
                                          std::to_string(*want));
        ++compared;
      }
      ++rows;
    }
    return std::to_string(rows) + " catalog rows, " + std::to_string(compared) + " tabulated";
  });
}

// 2. Closed-form admissible sets agree with the bounded brute-force oracle
// and with the per-family literal sets.
inline CheckResult check_pair_admissible_sets(int max_rank = 8) {
  return run_single_check("pair-admissible-sets", 0.0, [&] {
    int rows = 0;
    for (const auto& rec : catalog(max_rank)) {
      auto closed = admissible_points(rec);
      ISOPAR_REQUIRE(closed == admissible_points_oracle(rec, 2),
                     "closed form disagrees with the search oracle for " + detail::pair_tag(rec));
      ISOPAR_REQUIRE(closed == reference_admissible_points(rec),
                     "closed form disagrees with the literal set for " + detail::pair_tag(rec));
      ++rows;
    }
    return std::to_string(rows) + " admissible sets, three-way agreement";
  });
}

// 3. Clifford-family orbit counts match the closed-form class numbers for
// every family with m <= 18, m1 <= m2 and torus rank <= 9.
inline CheckResult check_fkm_class_counts() {
  return run_single_check("fkm-class-counts", 60.0, [&] {
    int fams = 0;
    for (const auto& f : detail::families_in_scope(18, 9)) {
      auto cc = count_classes_fkm(f);  // internally requires orbit == closed form
      ISOPAR_REQUIRE(cc.n == closed_form_N(f),
                     "class count mismatch for " + detail::family_tag(f));
      ++fams;
    }
    return std::to_string(fams) + " families, orbit count == closed form";
  });
}

// 4. Searched admissible sets agree with the per-case literal sets.
inline CheckResult check_fkm_admissible_sets() {
  return run_single_check("fkm-admissible-sets", 0.0, [&] {
    int fams = 0;
    for (const auto& f : detail::families_in_scope(18, 9)) {
      ISOPAR_REQUIRE(admissible_points_fkm(f) == reference_admissible_points_fkm(f),
                     "searched admissible set disagrees with the literal set for " +
                         detail::family_tag(f));
      ++fams;
    }
    return std::to_string(fams) + " admissible sets match the literal tables";
  });
}

// 5. The symmetry group generated on the torus has the same order as the
// automorphism group of the lowest-weight diagram (families with p, q <= 5,
// small-k shapes included).
inline CheckResult check_fkm_symmetry_vs_diagram() {
  return run_single_check("fkm-symmetry-vs-diagram", 0.0, [&] {
    int fams = 0;
    for (const auto& f : detail::families_in_scope(10, 10)) {
      if (f.p > 5 || f.q > 5) continue;
      auto group = close_group(outpm_generators(f), static_cast<int>(f.torus_rank()));
      auto autos = diagram_automorphism_count(lowest_weight_diagram(f));
      ISOPAR_REQUIRE(static_cast<long long>(group.size()) == autos,
                     "symmetry group order " + std::to_string(group.size()) +
                         " != diagram automorphism count " + std::to_string(autos) + " for " +
                         detail::family_tag(f));
      ++fams;
    }
    return std::to_string(fams) + " families, group order == diagram automorphisms";
  });
}

// 6. CP^n carries only homogeneous irreducible isoparametric foliations
// exactly when n + 1 is prime, for n = 1..200; the primality side is
// recomputed here independently of the divisibility sweep.
inline CheckResult check_prime_projective_spaces() {
  return run_single_check("prime-projective-spaces", 5.0, [&] {
    for (long long n = 1; n <= 200; ++n) {
      bool lhs = all_homogeneous(n);
      long long v = n + 1;
      bool rhs = v >= 2;
      for (long long d = 2; d * d <= v && rhs; ++d)
        if (v % d == 0) rhs = false;
      ISOPAR_REQUIRE(lhs == rhs,
                     "primality criterion failed at n = " + std::to_string(n));
    }
    return "n = 1..200, all_homogeneous(n) == (n+1 prime)";
  });
}

// 7. Per class: Hermitian records have exactly one homogeneous orbit and
// N - 1 inhomogeneous ones; non-Hermitian records have none (records of
// rank >= 2, the ones that define foliations).
inline CheckResult check_homogeneity_ledger(int max_rank = 8) {
  return run_single_check("homogeneity-ledger", 0.0, [&] {
    int rows = 0;
    for (const auto& rec : catalog(max_rank)) {
      if (dims(rec).rank_ss < 2) continue;
      auto cc = count_classes(rec);
      long long homog = 0;
      for (const auto& orbit : cc.orbits)
        if (homogeneity(rec, orbit.front())) ++homog;
      const long long want = rec.hermitian ? 1 : 0;
      ISOPAR_REQUIRE(homog == want, "homogeneous orbit count for " + detail::pair_tag(rec) +
                                        " is " + std::to_string(homog) + ", expected " +
                                        std::to_string(want));
      ++rows;
    }
    return std::to_string(rows) + " records, homogeneous orbits as ledgered";
  });
}

// 8. The multiplicity pairs with m1 > m2 reachable for m <= 10 are exactly
// the six exceptional ones.
inline CheckResult check_exceptional_pairs() {
  return run_single_check("exceptional-multiplicity-pairs", 0.0, [&] {
    const std::vector<std::pair<long long, long long>> want = {{2, 1}, {4, 3}, {5, 2},
                                                              {6, 1}, {8, 7}, {9, 6}};
    auto [pairs, shapes] = exceptional_multiplicity_pairs(10);
    ISOPAR_REQUIRE(pairs == want, "exceptional multiplicity pairs differ from the expected six");
    return std::to_string(pairs.size()) + " pairs from " + std::to_string(shapes) + " shapes";
  });
}

// 9. Property bundle: enlarging the search bound finds no extra admissible
// points on either side; induced symmetries permute the admissible sets;
// the census export is byte-identical across runs and survives a JSON
// round trip.
inline CheckResult check_property_suite() {
  return run_single_check("property-suite", 0.0, [&] {
    for (const auto& rec : catalog(8)) {
      ISOPAR_REQUIRE(admissible_points(rec) == admissible_points_oracle(rec, 3),
                     "bound-3 oracle finds extra points for " + detail::pair_tag(rec));
      auto pts = admissible_points(rec);
      std::set<RatVec> adm(pts.begin(), pts.end());
      auto diagram = build_extended_vogan(rec);
      for (const auto& sigma : diagram_automorphisms(diagram)) {
        auto map = induced_map(rec, sigma);
        for (const auto& t : pts)
          ISOPAR_REQUIRE(adm.count(apply_map(map, t)) == 1,
                         "induced symmetry does not permute the admissible set of " +
                             detail::pair_tag(rec));
      }
    }
    for (const auto& f : detail::families_in_scope(18, 9)) {
      ISOPAR_REQUIRE(admissible_points_fkm(f) == admissible_points_fkm(f, 3),
                     "bound-3 search finds extra points for " + detail::family_tag(f));
      auto pts = admissible_points_fkm(f);
      std::set<RatVec> adm(pts.begin(), pts.end());
      for (const auto& g : close_group(outpm_generators(f), static_cast<int>(f.torus_rank())))
        for (const auto& t : pts)
          ISOPAR_REQUIRE(adm.count(apply_map(g, t)) == 1,
                         "generated symmetry does not permute the admissible set of " +
                             detail::family_tag(f));
    }
    for (long long n : {2LL, 3LL, 15LL, 63LL}) {
      auto records = enumerate_foliations(n);
      auto json1 = export_foliations(records, "json");
      auto json2 = export_foliations(enumerate_foliations(n), "json");
      ISOPAR_REQUIRE(json1 == json2, "census JSON differs across runs at n = " + std::to_string(n));
      auto csv1 = export_foliations(records, "csv");
      auto csv2 = export_foliations(enumerate_foliations(n), "csv");
      ISOPAR_REQUIRE(csv1 == csv2, "census CSV differs across runs at n = " + std::to_string(n));
      ISOPAR_REQUIRE(export_foliations(parse_foliations_json(json1), "json") == json1,
                     "census JSON does not survive a round trip at n = " + std::to_string(n));
    }
    return "bound perturbation, symmetry closure, census determinism";
  });
}

inline std::vector<CheckResult> run_table_checks() {
  return {check_pair_class_counts(),   check_pair_admissible_sets(),
          check_fkm_class_counts(),    check_fkm_admissible_sets(),
          check_fkm_symmetry_vs_diagram(), check_prime_projective_spaces(),
          check_homogeneity_ledger(),  check_exceptional_pairs(),
          check_property_suite()};
}

inline bool all_checks_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

inline std::string check_line(const CheckResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2fs", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + "  " + r.name + "  (" + buf + ")  " + r.detail;
}

}  // namespace isopar
