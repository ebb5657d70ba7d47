#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "isopar/census.hpp"
#include "isopar/checks.hpp"

using namespace isopar;

TEST_CASE("closed-form admissible sets match the lattice search at a wider bound") {
  for (const auto& rec : catalog(6)) {
    auto closed = admissible_points(rec);
    auto brute = admissible_points_oracle(rec, 3);
    CHECK(closed == brute);
  }
}

TEST_CASE("diagram symmetries act on the admissible set") {
  for (const auto& rec : catalog(6)) {
    auto adm = admissible_points(rec);
    std::set<RatVec> adm_set(adm.begin(), adm.end());
    auto dia = build_extended_vogan(rec);
    for (const auto& sigma : diagram_automorphisms(dia)) {
      auto map = induced_map(rec, sigma);
      for (const auto& t : adm) CHECK(adm_set.count(apply_map(map, t)) == 1);
    }
  }
}

TEST_CASE("Clifford lattice search is stable under enlarging the bound") {
  for (long long m = 1; m <= 9; ++m) {
    for (long long k = 1; k <= 4; ++k) {
      FkmFamily f;
      try {
        f = clifford_family(m, k);
      } catch (const invariant_error&) {
        continue;
      }
      if (!f.m1_le_m2 || f.torus_rank() > 6) continue;
      CHECK(admissible_points_fkm(f, 3) == admissible_points_fkm(f, 2));
    }
  }
}

TEST_CASE("spin-sign generators act on the Clifford admissible set") {
  for (const auto& f : detail::families_in_scope(12, 6)) {
    auto adm = admissible_points_fkm(f);
    std::set<RatVec> adm_set(adm.begin(), adm.end());
    for (const auto& g : outpm_generators(f))
      for (const auto& t : adm) CHECK(adm_set.count(apply_map(g, t)) == 1);
  }
}

TEST_CASE("doubling the signature period scales the representation degree by sixteen") {
  for (long long m = 1; m <= 12; ++m) CHECK(clifford_delta(m + 8) == 16 * clifford_delta(m));
  for (long long m = 1; m <= 6; ++m) {
    if (m % 4 == 0) continue;  // signature 0 mod 4 takes a split (k+, k-)
    auto a = clifford_family(m, 6);
    auto b = clifford_family(m + 8, 6);
    CHECK(a.kind == b.kind);
  }
  CHECK(clifford_family(4, 4, 2).kind == clifford_family(12, 4, 2).kind);
}

TEST_CASE("census export bytes are reproducible") {
  for (long long n : {2LL, 5LL, 9LL}) {
    auto a = export_foliations(enumerate_foliations(n), "json");
    auto b = export_foliations(enumerate_foliations(n), "json");
    CHECK(a == b);
    auto c = export_foliations(enumerate_foliations(n), "csv");
    auto d = export_foliations(enumerate_foliations(n), "csv");
    CHECK(c == d);
  }
}

TEST_CASE("candidate generation from the dimension inverts the closed forms") {
  for (const auto& rec : catalog(8)) {
    auto d = dims(rec);
    CHECK(detail::pair_dim_closed_form(rec.label, rec.p, rec.nu) == d.dim_p);
    if (d.rank_ss < 2 || rec.census_excluded) continue;
    // canonical parameters: the mirror image describes the same space
    long long cp = rec.p, cnu = rec.nu;
    if (rec.label == "A III" && 2 * cnu > cp + 1) cnu = cp + 1 - cnu;
    if ((rec.label == "C II" || rec.label == "D I") && 2 * cnu > cp) cnu = cp - cnu;
    auto cands = detail::pair_candidates_with_dim(d.dim_p);
    const bool found = std::any_of(cands.begin(), cands.end(), [&](const auto& c) {
      return c.label == rec.label && c.p == cp && c.nu == cnu;
    });
    CHECK(found);
  }
}

TEST_CASE("class counts never exceed the admissible set size") {
  for (const auto& rec : catalog(8)) {
    auto cc = count_classes(rec);
    auto adm = admissible_points(rec);
    CHECK(cc.n >= 1);
    CHECK(cc.n <= static_cast<long long>(adm.size()));
    CHECK(!cc.group.empty());
  }
  for (const auto& f : detail::families_in_scope(12, 6)) {
    auto cc = count_classes_fkm(f);
    CHECK(cc.n >= 1);
    CHECK(cc.n <= static_cast<long long>(admissible_points_fkm(f).size()));
  }
}

TEST_CASE("check harness reports pass lines and respects its clocks") {
  auto res = check_exceptional_pairs();
  CHECK(res.passed);
  CHECK(res.seconds >= 0.0);
  auto line = check_line(res);
  CHECK(line.rfind("PASS", 0) == 0);
  CHECK(line.find(res.name) != std::string::npos);
}
