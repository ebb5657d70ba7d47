#include <catch2/catch_amalgamated.hpp>

#include "isopar/root_system.hpp"

using namespace isopar;

TEST_CASE("positive root counts follow the series formulas") {
  CHECK(cached_root_system({Series::A, 3}).positive_roots().size() == 6);
  CHECK(cached_root_system({Series::A, 5}).positive_roots().size() == 15);
  CHECK(cached_root_system({Series::B, 2}).positive_roots().size() == 4);
  CHECK(cached_root_system({Series::B, 4}).positive_roots().size() == 16);
  CHECK(cached_root_system({Series::C, 3}).positive_roots().size() == 9);
  CHECK(cached_root_system({Series::C, 5}).positive_roots().size() == 25);
  CHECK(cached_root_system({Series::D, 4}).positive_roots().size() == 12);
  CHECK(cached_root_system({Series::D, 6}).positive_roots().size() == 30);
  CHECK(cached_root_system({Series::E, 6}).positive_roots().size() == 36);
  CHECK(cached_root_system({Series::E, 7}).positive_roots().size() == 63);
  CHECK(cached_root_system({Series::E, 8}).positive_roots().size() == 120);
  CHECK(cached_root_system({Series::F, 4}).positive_roots().size() == 24);
  CHECK(cached_root_system({Series::G, 2}).positive_roots().size() == 6);
}

TEST_CASE("positive roots are listed in graded lexicographic order") {
  const std::vector<IntVec> b2 = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  CHECK(cached_root_system({Series::B, 2}).positive_roots() == b2);
  const std::vector<IntVec> g2 = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  CHECK(cached_root_system({Series::G, 2}).positive_roots() == g2);
}

TEST_CASE("highest roots match the tabulated coefficient vectors") {
  CHECK(cached_root_system({Series::A, 4}).highest_root() == IntVec{1, 1, 1, 1});
  CHECK(cached_root_system({Series::B, 4}).highest_root() == IntVec{1, 2, 2, 2});
  CHECK(cached_root_system({Series::C, 4}).highest_root() == IntVec{2, 2, 2, 1});
  CHECK(cached_root_system({Series::D, 5}).highest_root() == IntVec{1, 2, 2, 1, 1});
  CHECK(cached_root_system({Series::E, 6}).highest_root() == IntVec{1, 2, 2, 3, 2, 1});
  CHECK(cached_root_system({Series::E, 7}).highest_root() == IntVec{2, 2, 3, 4, 3, 2, 1});
  CHECK(cached_root_system({Series::E, 8}).highest_root() == IntVec{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(cached_root_system({Series::F, 4}).highest_root() == IntVec{2, 4, 3, 2});
  CHECK(cached_root_system({Series::G, 2}).highest_root() == IntVec{3, 2});
}

TEST_CASE("inner products use the long-root-2 normalization") {
  const auto& b3 = cached_root_system({Series::B, 3});
  CHECK(b3.inner({1, 0, 0}, {1, 0, 0}) == Rat(2));  // long simple root
  CHECK(b3.inner({0, 0, 1}, {0, 0, 1}) == Rat(1));  // short simple root
  const auto& g2 = cached_root_system({Series::G, 2});
  CHECK(g2.inner({1, 0}, {1, 0}) == Rat(2, 3));
  CHECK(g2.inner({0, 1}, {0, 1}) == Rat(2));
}

TEST_CASE("Cartan pairings reproduce the bond structure") {
  const auto& g2 = cached_root_system({Series::G, 2});
  const long long g12 = g2.cartan_pairing({1, 0}, {0, 1});
  const long long g21 = g2.cartan_pairing({0, 1}, {1, 0});
  CHECK(g12 * g21 == 3);
  const auto& f4 = cached_root_system({Series::F, 4});
  CHECK(f4.cartan_pairing({0, 1, 0, 0}, {0, 0, 1, 0}) *
            f4.cartan_pairing({0, 0, 1, 0}, {0, 1, 0, 0}) ==
        2);
  const auto& a3 = cached_root_system({Series::A, 3});
  CHECK(a3.cartan_pairing({1, 0, 0}, {0, 1, 0}) == -1);
  CHECK(a3.cartan_pairing({1, 0, 0}, {0, 0, 1}) == 0);
  CHECK(a3.cartan_pairing({1, 1, 1}, {1, 1, 1}) == 2);
}

TEST_CASE("root membership distinguishes roots from non-roots") {
  const auto& b2 = cached_root_system({Series::B, 2});
  CHECK(b2.is_positive_root({1, 2}));
  CHECK_FALSE(b2.is_positive_root({2, 1}));
  CHECK_FALSE(b2.is_positive_root({-1, 0}));
  CHECK(b2.is_root({-1, 0}));
  CHECK(b2.is_root({-1, -2}));
  CHECK_FALSE(b2.is_root({2, 2}));
}

TEST_CASE("type validation rejects out-of-range ranks") {
  CHECK_THROWS_AS(cached_root_system(CartanType::parse("E9")), invariant_error);
  CHECK_THROWS_AS(cached_root_system(CartanType::parse("D2")), invariant_error);
  CHECK_THROWS_AS(cached_root_system(CartanType::parse("F3")), invariant_error);
  CHECK(CartanType::parse("B1").rank == 1);
  CHECK(cached_root_system({Series::B, 1}).positive_roots().size() == 1);
}

TEST_CASE("functional evaluation is the plain dot product") {
  RatVec x = {Rat(1, 2), Rat(-1), Rat(3)};
  CHECK(eval_root({2, 0, 1}, x) == Rat(4));
  CHECK(eval_root({0, 1, 0}, x) == Rat(-1));
  IntVec y = {1, 1, 1};
  CHECK(eval_root({1, 2, 3}, std::vector<long long>{1, 1, 1}) == 6);
  (void)y;
}

TEST_CASE("height of the highest root determines the Coxeter number") {
  CHECK(RootSystem::height(cached_root_system({Series::E, 8}).highest_root()) == 29);
  CHECK(RootSystem::height(cached_root_system({Series::A, 5}).highest_root()) == 5);
  CHECK(RootSystem::height(cached_root_system({Series::G, 2}).highest_root()) == 5);
}
