#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>

#include "isopar/census.hpp"

using namespace isopar;

namespace {

long long count_if_records(const std::vector<FoliationRecord>& rs,
                           const std::function<bool(const FoliationRecord&)>& pred) {
  return std::count_if(rs.begin(), rs.end(), pred);
}

}  // namespace

TEST_CASE("trial division primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("existence of inhomogeneous foliations by codimension") {
  // codimension one needs odd n >= 3
  CHECK(inhomog_exists(3, 1));
  CHECK(inhomog_exists(5, 1));
  CHECK_FALSE(inhomog_exists(4, 1));
  CHECK_FALSE(inhomog_exists(1, 1));
  // higher codimension: size and divisibility of q + 1 against 2(n + 1)
  CHECK(inhomog_exists(8, 2));     // 3 | 18, 9 <= 18
  CHECK_FALSE(inhomog_exists(3, 2));
  CHECK(inhomog_exists(7, 3));     // 4 | 16, 16 <= 16
  CHECK_FALSE(inhomog_exists(7, 2));
  CHECK(inhomog_exists(63, 7));    // 8 | 128
  CHECK_FALSE(inhomog_exists(63, 8));
}

TEST_CASE("the divisibility witness is an orthogonal Grassmannian of matching shape") {
  auto w = inhomog_witness(7, 3);
  REQUIRE(w.has_value());
  CHECK(w->label == "D I");
  CHECK(w->p == 4);
  CHECK(w->nu == 2);
  CHECK(dims(*w).rank_ss == 4);
  CHECK(dims(*w).n == 7);

  w = inhomog_witness(8, 2);
  REQUIRE(w.has_value());
  CHECK(w->label == "B I");
  CHECK(w->p == 4);
  CHECK(w->nu == 3);
  CHECK(dims(*w).rank_ss == 3);
  CHECK(dims(*w).n == 8);

  CHECK_FALSE(inhomog_witness(7, 2).has_value());
  CHECK_FALSE(inhomog_witness(63, 8).has_value());
}

TEST_CASE("witness construction matches the existence predicate at higher codimension") {
  for (long long n = 1; n <= 80; ++n)
    for (long long q = 2; (q + 1) * (q + 1) <= 2 * (n + 1) + 8; ++q)
      CHECK(inhomog_exists(n, q) == inhomog_witness(n, q).has_value());
}

TEST_CASE("every foliation is homogeneous exactly on prime-successor dimensions") {
  CHECK(all_homogeneous(1));
  CHECK(all_homogeneous(2));
  CHECK_FALSE(all_homogeneous(3));
  CHECK(all_homogeneous(4));
  CHECK_FALSE(all_homogeneous(9));
  CHECK_FALSE(all_homogeneous(15));
  for (long long n = 1; n <= 60; ++n) CHECK(all_homogeneous(n) == is_prime(n + 1));
}

TEST_CASE("homogeneity of admissible classes") {
  auto e3 = catalog_record("E III", 6, 6);
  RatVec plus(6, Rat(0)), minus(6, Rat(0));
  plus[5] = Rat(1);
  minus[5] = Rat(-1);
  CHECK(homogeneity(e3, plus));
  CHECK(homogeneity(e3, minus));
  RatVec other = minus;
  other[0] = Rat(2);
  CHECK_FALSE(homogeneity(e3, other));
  RatVec bad(6, Rat(0));
  bad[0] = Rat(1);
  CHECK_THROWS_AS(homogeneity(e3, bad), invariant_error);
  // non-Hermitian classes are never homogeneous (rank >= 2)
  auto g = catalog_record("G", 2, 2);
  RatVec gm(2, Rat(0));
  gm[1] = Rat(-1);
  CHECK_FALSE(homogeneity(g, gm));
  // rank-one pairs project onto trivially homogeneous foliations
  auto b = catalog_record("B I", 2, 2);
  RatVec bm(2, Rat(0));
  bm[1] = Rat(-1);
  CHECK(homogeneity(b, bm));
}

TEST_CASE("census of the three-dimensional projective space") {
  auto rs = enumerate_foliations(3);
  REQUIRE(rs.size() == 4);
  // two classes from the complex two-plane Grassmannian
  CHECK(rs[0].label == "A III");
  CHECK(rs[0].p == 3);
  CHECK(rs[0].nu == 2);
  CHECK(rs[0].codim == 1);
  CHECK(rs[0].N_within_source == 2);
  CHECK(tristate_str(rs[0].homogeneous) == "yes");
  CHECK(rs[1].label == "A III");
  CHECK(tristate_str(rs[1].homogeneous) == "no");
  // one class from the exceptional pair
  CHECK(rs[2].label == "G");
  CHECK(rs[2].codim == 1);
  CHECK(rs[2].N_within_source == 1);
  CHECK(tristate_str(rs[2].homogeneous) == "no");
  // one Clifford family
  CHECK(rs[3].source == "fkm");
  CHECK(rs[3].m == 1);
  CHECK(rs[3].k == 4);
  CHECK(rs[3].N_within_source == 2);
  CHECK(tristate_str(rs[3].homogeneous) == "unknown");
  // both kinds of codimension-one source exist, so all records are flagged
  for (const auto& r : rs) CHECK(r.overlap_candidate);
}

TEST_CASE("census of the fifteen-dimensional projective space") {
  auto rs = enumerate_foliations(15);
  CHECK(rs.size() == 27);
  // higher codimension block comes first
  CHECK(rs[0].label == "A III");
  CHECK(rs[0].p == 7);
  CHECK(rs[0].nu == 4);
  CHECK(rs[0].codim == 3);
  CHECK(count_if_records(rs, [](const FoliationRecord& r) { return r.codim >= 2; }) == 5);
  CHECK(count_if_records(rs, [](const FoliationRecord& r) {
          return r.source == "pair" && r.codim == 1;
        }) == 12);
  CHECK(count_if_records(rs, [](const FoliationRecord& r) { return r.source == "fkm"; }) == 9);
  CHECK(count_if_records(rs, [](const FoliationRecord& r) { return r.source == "open-gap"; }) == 1);
  // the open slot: inhomogeneous multiplicity-(8,7) families on S^31
  const auto& open = rs.back();
  CHECK(open.source == "open-gap");
  CHECK(open.codim == 1);
  CHECK(tristate_str(open.homogeneous) == "unknown");
  CHECK(open.representative.empty());
  CHECK_FALSE(open.overlap_candidate);
  // codimension-one records of both sources are overlap candidates
  for (const auto& r : rs) {
    if (r.source == "open-gap") continue;
    CHECK(r.overlap_candidate == (r.codim == 1));
  }
  // the Hermitian exceptional source contributes one homogeneous class
  long long e3_yes = count_if_records(rs, [](const FoliationRecord& r) {
    return r.label == "E III" && tristate_str(r.homogeneous) == "yes";
  });
  long long e3_all =
      count_if_records(rs, [](const FoliationRecord& r) { return r.label == "E III"; });
  CHECK(e3_yes == 1);
  CHECK(e3_all == 2);
  // the in-scope (7,8) Clifford family is distinct from the open slot
  CHECK(count_if_records(rs, [](const FoliationRecord& r) {
          return r.source == "fkm" && r.m == 7;
        }) == 1);
}

TEST_CASE("census records agree with the existence predicate per codimension") {
  for (long long n : {5LL, 7LL, 8LL, 15LL}) {
    auto rs = enumerate_foliations(n);
    for (long long q = 2; q <= 8; ++q) {
      const bool any = count_if_records(rs, [&](const FoliationRecord& r) {
                         return r.codim == q;
                       }) > 0;
      CHECK(any == inhomog_exists(n, q));
    }
  }
}

TEST_CASE("census of large projective spaces includes the exceptional rows") {
  auto rs = enumerate_foliations(63);
  const auto e8 = std::find_if(rs.begin(), rs.end(),
                               [](const FoliationRecord& r) { return r.label == "E VIII"; });
  REQUIRE(e8 != rs.end());
  CHECK(e8->codim == 7);
  CHECK(e8->N_within_source == 1);
  CHECK(tristate_str(e8->homogeneous) == "no");
  CHECK_FALSE(all_homogeneous(63));
}

TEST_CASE("degenerate and empty censuses") {
  CHECK(enumerate_foliations(1).empty());
  auto rs = enumerate_foliations(2);
  REQUIRE(rs.size() == 2);
  // Sp(2)/U(2) is the same space as this quadric and must not double-count
  CHECK(rs[0].label == "B I");
  CHECK(rs[0].p == 2);
  CHECK(rs[0].nu == 1);
  CHECK(rs[0].N_within_source == 1);
  CHECK(tristate_str(rs[0].homogeneous) == "yes");
  CHECK(rs[1].source == "fkm");
  CHECK(rs[1].m == 1);
  CHECK(rs[1].k == 3);
  CHECK(rs[0].overlap_candidate);
  CHECK(rs[1].overlap_candidate);
  CHECK(all_homogeneous(2));
}

TEST_CASE("export is deterministic and round-trips through JSON") {
  auto rs = enumerate_foliations(15);
  auto json = export_foliations(rs, "json");
  CHECK(json == export_foliations(enumerate_foliations(15), "json"));
  auto parsed = parse_foliations_json(json);
  CHECK(export_foliations(parsed, "json") == json);
  auto csv = export_foliations(rs, "csv");
  CHECK(csv.rfind("source,label,p,nu,m,k,k_plus,k_minus,n,codim,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long long>(rs.size()) + 1);
  CHECK_THROWS_AS(export_foliations(rs, "xml"), invariant_error);
}

TEST_CASE("representatives are admissible points of their sources") {
  for (const auto& r : enumerate_foliations(7)) {
    if (r.source == "pair") {
      auto rec = catalog_record(r.label, r.p, r.nu);
      auto adm = admissible_points(rec);
      CHECK(std::find(adm.begin(), adm.end(), r.representative) != adm.end());
    } else if (r.source == "fkm") {
      auto f = r.k_plus > 0 ? clifford_family(r.m, r.k_plus, r.k_minus)
                            : clifford_family(r.m, r.k);
      auto adm = admissible_points_fkm(f);
      CHECK(std::find(adm.begin(), adm.end(), r.representative) != adm.end());
    }
  }
}
