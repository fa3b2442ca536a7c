#include <stdexcept>
#include "doctest.h"
#include "sodlab/piclat.hpp"

using namespace sodlab;

TEST_CASE("model shapes") {
  auto p2 = SurfaceModel::blowup_p2(0);
  CHECK(p2.picard_rank() == 1);
  CHECK(p2.degree() == 9);
  auto bl5 = SurfaceModel::blowup_p2(5);
  CHECK(bl5.picard_rank() == 6);
  CHECK(bl5.degree() == 4);
  auto q = SurfaceModel::quadric();
  CHECK(q.picard_rank() == 2);
  CHECK(q.degree() == 8);
  CHECK_THROWS_AS(SurfaceModel::blowup_p2(9), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceModel::blowup_p2(-1), std::invalid_argument);
}

TEST_CASE("intersection pairing") {
  auto s = SurfaceModel::blowup_p2(3);
  DivisorClass h{1, 0, 0, 0}, l1{0, 1, 0, 0}, l2{0, 0, 1, 0};
  CHECK(intersect(s, h, h) == 1);
  CHECK(intersect(s, h, l1) == 0);
  CHECK(intersect(s, l1, l1) == -1);
  CHECK(intersect(s, l1, l2) == 0);
  DivisorClass k = canonical_class(s);
  CHECK(k == DivisorClass{-3, 1, 1, 1});
  CHECK(intersect(s, k, k) == 6);

  auto q = SurfaceModel::quadric();
  CHECK(intersect(q, {1, 0}, {1, 0}) == 0);
  CHECK(intersect(q, {1, 0}, {0, 1}) == 1);
  CHECK(intersect(q, {2, 3}, {5, 7}) == 2 * 7 + 3 * 5);
  CHECK(canonical_class(q) == DivisorClass{-2, -2});
  CHECK(intersect(q, canonical_class(q), canonical_class(q)) == 8);

  DivisorClass wrong_size{1, 0};
  CHECK_THROWS_AS(intersect(s, wrong_size, h), std::invalid_argument);
}

TEST_CASE("riemann-roch values") {
  auto p2 = SurfaceModel::blowup_p2(0);
  CHECK(rr_chi(p2, {0}) == 1);
  CHECK(rr_chi(p2, {1}) == 3);
  CHECK(rr_chi(p2, {2}) == 6);
  CHECK(rr_chi(p2, {-3}) == 1);  // the canonical class itself

  auto bl6 = SurfaceModel::blowup_p2(6);
  DivisorClass mk = scale(-1, canonical_class(bl6));
  CHECK(rr_chi(bl6, mk) == 4);  // anticanonical sections of a cubic

  auto q = SurfaceModel::quadric();
  CHECK(rr_chi(q, {1, 1}) == 4);
  CHECK(rr_chi(q, {1, 0}) == 2);
}

TEST_CASE("exceptional curve counts") {
  const ll lines[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  for (int r = 0; r <= 8; ++r) {
    auto s = SurfaceModel::blowup_p2(r);
    auto found = enumerate_classes(s, -1, -1);
    CHECK_MESSAGE(static_cast<ll>(found.size()) == lines[r], "r = ", r);
    for (const auto& d : found) {
      CHECK(intersect(s, d, d) == -1);
      CHECK(intersect(s, d, canonical_class(s)) == -1);
    }
  }
}

TEST_CASE("root counts") {
  const ll roots[] = {0, 0, 2, 8, 20, 40, 72, 126, 240};
  for (int r = 0; r <= 8; ++r) {
    auto s = SurfaceModel::blowup_p2(r);
    auto found = enumerate_classes(s, -2, 0);
    CHECK_MESSAGE(static_cast<ll>(found.size()) == roots[r], "r = ", r);
  }
}

TEST_CASE("enumeration membership and order") {
  auto s = SurfaceModel::blowup_p2(2);
  auto lines = enumerate_classes(s, -1, -1);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == DivisorClass{0, 0, 1});
  CHECK(lines[1] == DivisorClass{0, 1, 0});
  CHECK(lines[2] == DivisorClass{1, -1, -1});

  auto bl5 = SurfaceModel::blowup_p2(5);
  auto l5 = enumerate_classes(bl5, -1, -1);
  DivisorClass conic{2, -1, -1, -1, -1, -1};
  CHECK(std::find(l5.begin(), l5.end(), conic) != l5.end());

  auto q = SurfaceModel::quadric();
  CHECK(enumerate_classes(q, -1, -1).empty());
  auto rulings = enumerate_classes(q, 0, -2);
  REQUIRE(rulings.size() == 2);
  CHECK(rulings[0] == DivisorClass{0, 1});
  CHECK(rulings[1] == DivisorClass{1, 0});
}
