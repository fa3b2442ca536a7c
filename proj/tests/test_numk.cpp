#include <stdexcept>
#include "doctest.h"
#include "sodlab/numk.hpp"

using namespace sodlab;

TEST_CASE("euler pairing on line bundles matches riemann-roch") {
  auto s = SurfaceModel::blowup_p2(4);
  DivisorClass l1{0, 1, 0, 0, 0}, l2{0, 0, 1, 0, 0};
  CHECK(euler_pairing(s, line_bundle(s, l1), line_bundle(s, l2)) == 0);
  CHECK(euler_pairing(s, trivial_bundle(s), line_bundle(s, l1)) == 1);
  CHECK(euler_pairing(s, line_bundle(s, l1), trivial_bundle(s)) == 0);
}

TEST_CASE("rank-two class with anticanonical determinant is exceptional") {
  auto s = SurfaceModel::blowup_p2(4);
  DivisorClass mk = scale(-1, canonical_class(s));
  KClass f{2, mk, 2};
  CHECK(euler_pairing(s, f, f) == 1);
  CHECK(two_ch2(s, f) == 1);
  CHECK(chern_from_chi_one(s, 2, mk) == f);
}

TEST_CASE("direct sum uses the whitney formula") {
  auto q = SurfaceModel::quadric();
  KClass a = line_bundle(q, {1, 0}), b = line_bundle(q, {0, 1});
  KClass sum = direct_sum(q, a, b);
  CHECK(sum == KClass{2, {1, 1}, 1});

  auto s = SurfaceModel::blowup_p2(3);
  DivisorClass h{1, 0, 0, 0};
  DivisorClass hp = sub(scale(-1, canonical_class(s)), h);  // 2H-L1-L2-L3
  KClass big = direct_sum(s, multiple(s, line_bundle(s, h), 3),
                          multiple(s, line_bundle(s, hp), 3));
  CHECK(big.rank == 6);
  CHECK(big.c2 == 24);
}

TEST_CASE("twist shifts chern data") {
  auto p2 = SurfaceModel::blowup_p2(0);
  KClass oh = line_bundle(p2, {1});
  CHECK(twist(p2, oh, {-1}) == trivial_bundle(p2));
  KClass t{3, {0}, 0};
  CHECK(twist(p2, t, {1}) == KClass{3, {3}, 3});
  // twisting by D then -D is the identity
  auto s = SurfaceModel::blowup_p2(5);
  KClass e{4, {2, -1, -1, 0, 1, 3}, 7};
  DivisorClass d{1, 1, 0, -2, 0, 5};
  CHECK(twist(s, twist(s, e, d), scale(-1, d)) == e);
}

TEST_CASE("multiples") {
  auto p2 = SurfaceModel::blowup_p2(0);
  KClass o2 = line_bundle(p2, {2});
  CHECK(multiple(p2, o2, 3) == KClass{3, {6}, 12});
  auto q = SurfaceModel::quadric();
  CHECK(multiple(q, line_bundle(q, {1, 1}), 4) == KClass{4, {4, 4}, 12});
  CHECK_THROWS_AS(multiple(q, line_bundle(q, {1, 1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(multiple(q, line_bundle(q, {1, 1}), -2), std::invalid_argument);
}

TEST_CASE("dual negates c1 only") {
  auto s = SurfaceModel::blowup_p2(2);
  KClass e{3, {4, -1, 2}, 5};
  CHECK(dual(s, e) == KClass{3, {-4, 1, -2}, 5});
  CHECK(dual(s, dual(s, e)) == e);
}

TEST_CASE("curve sheaf of a (-1)-curve") {
  auto s = SurfaceModel::blowup_p2(1);
  DivisorClass l1{0, 1};
  KClass sky = curve_sheaf(s, l1);
  CHECK(sky == KClass{0, {0, 1}, -1});
  CHECK(two_ch2(s, sky) == 1);
  CHECK(euler_pairing(s, trivial_bundle(s), sky) == 1);
}

TEST_CASE("chi=1 chern derivation rejects non-integral data") {
  auto s = SurfaceModel::blowup_p2(6);
  KClass t6 = chern_from_chi_one(s, 2, {1, 0, 0, 0, 0, 0, 0});
  CHECK(t6 == KClass{2, {1, 0, 0, 0, 0, 0, 0}, 1});

  auto bl8 = SurfaceModel::blowup_p2(8);
  DivisorClass c1{2, -1, -1, -1, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(chern_from_chi_one(bl8, 4, c1), std::domain_error);
  CHECK_THROWS_AS(chern_from_chi_one(bl8, 0, c1), std::domain_error);
}

TEST_CASE("canonical multiples for the index tables") {
  // c2 of omega^{+m} is C(m,2) K.K
  auto bl3 = SurfaceModel::blowup_p2(3);
  KClass om = line_bundle(bl3, canonical_class(bl3));
  CHECK(multiple(bl3, om, 2).c2 == 6);
  auto p2 = SurfaceModel::blowup_p2(0);
  CHECK(multiple(p2, line_bundle(p2, canonical_class(p2)), 2).c2 == 9);
  auto bl4 = SurfaceModel::blowup_p2(4);
  CHECK(multiple(bl4, line_bundle(bl4, canonical_class(bl4)), 2).c2 == 5);
}
