#include <stdexcept>
#include <algorithm>

#include "doctest.h"
#include "sodlab/weylgal.hpp"

using namespace sodlab;

TEST_CASE("simple roots") {
  CHECK_THROWS_AS(simple_roots(SurfaceModel::blowup_p2(1)), std::invalid_argument);
  CHECK_THROWS_AS(simple_roots(SurfaceModel::quadric()), std::invalid_argument);
  CHECK(simple_roots(SurfaceModel::blowup_p2(2)).size() == 1);
  auto r3 = simple_roots(SurfaceModel::blowup_p2(3));
  REQUIRE(r3.size() == 3);
  CHECK(r3[0].cls == DivisorClass{0, 1, -1, 0});
  CHECK(r3[1].cls == DivisorClass{0, 0, 1, -1});
  CHECK(r3[2].cls == DivisorClass{1, -1, -1, -1});
  CHECK(simple_roots(SurfaceModel::blowup_p2(8)).size() == 8);
}

TEST_CASE("reflection swaps adjacent exceptional classes") {
  auto s = SurfaceModel::blowup_p2(3);
  Root a = make_root(s, {0, 1, -1, 0});
  CHECK(reflect(s, {0, 1, 0, 0}, a) == DivisorClass{0, 0, 1, 0});
  CHECK(reflect(s, {0, 0, 1, 0}, a) == DivisorClass{0, 1, 0, 0});
  CHECK(reflect(s, {1, 0, 0, 0}, a) == DivisorClass{1, 0, 0, 0});
  CHECK(reflect(s, canonical_class(s), a) == canonical_class(s));

  Root b = make_root(s, {1, -1, -1, -1});
  CHECK(reflect(s, {0, 1, 0, 0}, b) == DivisorClass{1, 0, -1, -1});
  CHECK_THROWS_AS(make_root(s, {0, 1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_root(s, {1, -1, 0, 0}), std::invalid_argument);
}

TEST_CASE("reflection matrices are involutive isometries") {
  auto s = SurfaceModel::blowup_p2(4);
  for (const Root& a : simple_roots(s)) {
    LatticeAut g = aut_from_root(s, a);
    CHECK(mat_mul(g.m, g.m) == identity_mat(s.picard_rank()));
    CHECK(std::abs(det(g.m)) == 1);
  }
}

TEST_CASE("reflection orbit of one exceptional class gives all lines") {
  for (int r = 3; r <= 6; ++r) {
    auto s = SurfaceModel::blowup_p2(r);
    std::vector<LatticeAut> gens;
    for (const Root& a : simple_roots(s)) gens.push_back(aut_from_root(s, a));
    DivisorClass l1 = zero_divisor(s);
    l1[1] = 1;
    auto orb = orbit(s, l1, gens);
    auto lines = enumerate_classes(s, -1, -1);
    CHECK(orb == lines);  // both sorted
  }
}

TEST_CASE("root orbit closure matches direct enumeration") {
  for (int r = 3; r <= 7; ++r) {
    auto s = SurfaceModel::blowup_p2(r);
    auto closure = root_orbit(s);
    auto all = enumerate_classes(s, -2, 0);
    CHECK(closure == all);
  }
  // E8 is large; compare the count only
  auto s8 = SurfaceModel::blowup_p2(8);
  CHECK(root_orbit(s8).size() == 240);
}

TEST_CASE("orbit cap errors out instead of running away") {
  auto s = SurfaceModel::blowup_p2(6);
  std::vector<LatticeAut> gens;
  for (const Root& a : simple_roots(s)) gens.push_back(aut_from_root(s, a));
  DivisorClass l1 = zero_divisor(s);
  l1[1] = 1;
  CHECK_THROWS_AS(orbit(s, l1, gens, 5), std::runtime_error);
}

TEST_CASE("invariant combinations") {
  auto s2 = SurfaceModel::blowup_p2(2);
  LatticeAut swap12 = aut_from_l_permutation(s2, {2, 1});
  auto w = invariant_combination(s2, {{0, 1, 0}, {0, 0, 1}}, {1, 1}, {swap12});
  REQUIRE(w.has_value());
  CHECK(w->x == std::vector<ll>{1, 1});
  CHECK(w->combination == DivisorClass{0, 1, 1});
  CHECK(w->weighted_rank_sum == 2);

  // a single swapped class admits no invariant combination
  auto none = invariant_combination(s2, {{0, 1, 0}}, {1}, {swap12});
  CHECK_FALSE(none.has_value());

  // three conic classes on the hexagon surface under the full S3
  auto s3 = SurfaceModel::blowup_p2(3);
  std::vector<DivisorClass> block = {
      {1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}};
  std::vector<LatticeAut> s3gens = {aut_from_l_permutation(s3, {2, 1, 3}),
                                    aut_from_l_permutation(s3, {2, 3, 1})};
  auto w3 = invariant_combination(s3, block, {1, 1, 1}, s3gens);
  REQUIRE(w3.has_value());
  CHECK(w3->x == std::vector<ll>{1, 1, 1});
  CHECK(w3->combination == DivisorClass{3, -1, -1, -1});
}
