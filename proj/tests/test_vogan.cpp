#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "isopar/vogan.hpp"

using namespace isopar;

namespace {

RatVec h(int p, int i, long long c) {
  RatVec v(p, Rat(0));
  v[i - 1] = Rat(c);
  return v;
}

RatVec minus_h_plus2(int p, int nu, int i) {
  RatVec v = h(p, nu, -1);
  v[i - 1] = Rat(2);
  return v;
}

}  // namespace

TEST_CASE("extended diagram carries the affine node and painted set") {
  auto rec = catalog_record("E II", 6, 2);
  auto d = build_extended_vogan(rec);
  CHECK(d.p == 6);
  CHECK(d.node_roots[0] == IntVec{-1, -2, -2, -3, -2, -1});
  CHECK(d.painted == std::set<int>{2});
  // the affine node of E6 bonds to the branch node alpha_2 only
  for (int j = 1; j <= 6; ++j) CHECK(d.pairing[0][j] == (j == 2 ? -1 : 0));

  auto herm = build_extended_vogan(catalog_record("E III", 6, 6));
  CHECK(herm.painted == std::set<int>{0, 6});
}

TEST_CASE("admissible sets match the tabulated families") {
  SECTION("three-point set with a branch symmetry") {
    auto rec = catalog_record("E II", 6, 2);
    std::vector<RatVec> want = {h(6, 2, -1), minus_h_plus2(6, 2, 1), minus_h_plus2(6, 2, 6)};
    std::sort(want.begin(), want.end(), lex_less);
    CHECK(admissible_points(rec) == want);
    CHECK(admissible_points_oracle(rec) == want);
    CHECK(reference_admissible_points(rec) == want);
  }
  SECTION("central pair only") {
    auto rec = catalog_record("C I", 4, 4);
    std::vector<RatVec> want = {h(4, 4, -1), h(4, 4, 1)};
    CHECK(admissible_points(rec) == want);
    CHECK(admissible_points_oracle(rec) == want);
    auto e7 = catalog_record("E VII", 7, 7);
    std::vector<RatVec> want7 = {h(7, 7, -1), h(7, 7, 1)};
    CHECK(admissible_points(e7) == want7);
  }
  SECTION("oracle agreement on an orthogonal Grassmannian") {
    auto rec = catalog_record("B I", 3, 2);
    CHECK(admissible_points(rec) == admissible_points_oracle(rec, 2));
    CHECK(admissible_points(rec) == reference_admissible_points(rec));
  }
  SECTION("oracle needs headroom to certify membership") {
    CHECK_THROWS_AS(admissible_points_oracle(catalog_record("G", 2, 2), 1), invariant_error);
  }
}

TEST_CASE("diagram symmetry groups have the expected size") {
  // hexagonal affine diagram, painted nodes {0, nu}
  CHECK(diagram_automorphisms(build_extended_vogan(catalog_record("A III", 5, 2))).size() == 2);
  CHECK(diagram_automorphisms(build_extended_vogan(catalog_record("A III", 5, 3))).size() == 4);
  // affine star: the painted center plus four interchangeable leaves
  CHECK(diagram_automorphisms(build_extended_vogan(catalog_record("D I", 4, 2))).size() == 24);
  // one branch swap
  CHECK(diagram_automorphisms(build_extended_vogan(catalog_record("E II", 6, 2))).size() == 2);
}

TEST_CASE("the branch swap acts as tabulated") {
  auto rec = catalog_record("E II", 6, 2);
  auto autos = diagram_automorphisms(build_extended_vogan(rec));
  const NodePerm* swap = nullptr;
  for (const auto& s : autos)
    if (s[1] == 6) swap = &s;
  REQUIRE(swap != nullptr);
  CHECK((*swap)[3] == 5);
  CHECK((*swap)[5] == 3);
  CHECK((*swap)[6] == 1);
  CHECK((*swap)[0] == 0);
  CHECK((*swap)[2] == 2);
  CHECK((*swap)[4] == 4);
}

TEST_CASE("induced torus maps send admissible points to admissible points") {
  for (const auto& rec :
       {catalog_record("A III", 5, 3), catalog_record("D I", 4, 2), catalog_record("E V", 7, 2),
        catalog_record("D III", 5, 5), catalog_record("B I", 2, 2)}) {
    auto pts = admissible_points(rec);
    auto diagram = build_extended_vogan(rec);
    for (const auto& sigma : diagram_automorphisms(diagram)) {
      auto m = induced_map(rec, sigma);
      for (const auto& t : pts) {
        auto image = apply_map(m, t);
        CHECK(std::find(pts.begin(), pts.end(), image) != pts.end());
      }
    }
  }
}

TEST_CASE("chain reversal on the affine chain flips the central pair") {
  // For the symplectic chain the reversal exchanges node 0 and node p,
  // hence +-h_p; the two central points form one orbit.
  auto rec = catalog_record("C I", 3, 3);
  auto cc = count_classes(rec);
  CHECK(cc.n == 1);
  REQUIRE(cc.orbits.size() == 1);
  CHECK(cc.orbits[0].size() == 2);
}

TEST_CASE("orbit counts reproduce the tabulated class numbers") {
  struct Row {
    const char* label;
    int p, nu;
    long long want;
  };
  const Row rows[] = {
      {"A III", 5, 2, 4}, {"A III", 5, 3, 2}, {"A III", 3, 2, 2}, {"B I", 4, 2, 1},
      {"B I", 5, 1, 1},   {"C I", 5, 5, 1},   {"C II", 6, 2, 2},  {"C II", 6, 3, 1},
      {"D I", 4, 2, 1},   {"D I", 6, 2, 2},   {"D I", 5, 1, 2},   {"D III", 6, 6, 2},
      {"E II", 6, 2, 2},  {"E III", 6, 6, 2}, {"E V", 7, 2, 1},   {"E VI", 7, 1, 2},
      {"E VII", 7, 7, 1}, {"E VIII", 8, 1, 1}, {"E IX", 8, 8, 1}, {"F I", 4, 4, 1},
      {"G", 2, 2, 1}};
  for (const auto& r : rows) {
    auto rec = catalog_record(r.label, r.p, r.nu);
    auto cc = count_classes(rec);
    CHECK(cc.n == r.want);
    auto want = table_class_count(rec);
    REQUIRE(want.has_value());
    CHECK(*want == r.want);
  }
  CHECK_FALSE(table_class_count(catalog_record("F II", 4, 1)).has_value());
}

TEST_CASE("the affine star identifies all four admissible points") {
  auto rec = catalog_record("D I", 4, 2);
  auto cc = count_classes(rec);
  CHECK(cc.group.size() == 24);
  REQUIRE(cc.orbits.size() == 1);
  CHECK(cc.orbits[0].size() == 4);
}

TEST_CASE("hexagon stabilizers act with the tabulated orbit structure") {
  auto rec = catalog_record("A III", 5, 2);
  auto cc = count_classes(rec);
  REQUIRE(cc.n == 4);
  // orbit sizes: the central pair, two fixed points, one swapped pair
  std::vector<std::size_t> sizes;
  for (const auto& orbit : cc.orbits) sizes.push_back(orbit.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2});
}
