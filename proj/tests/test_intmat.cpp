#include <random>

#include "doctest.h"
#include "sodlab/intmat.hpp"

using namespace sodlab;

TEST_CASE("determinant basics") {
  CHECK(det({}) == 1);
  CHECK(det({{5}}) == 5);
  CHECK(det({{1, 2}, {3, 4}}) == -2);
  CHECK(det({{2, 1}, {-3, -2}}) == -1);
  CHECK(det({{1, 0, 0}, {1, 1, 1}, {1, 2, 4}}) == 2);  // Vandermonde 0,1,2
  CHECK(det({{0, 1}, {1, 0}}) == -1);
  CHECK(det({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
}

TEST_CASE("smith normal form reconstructs and is diagonal") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 5), val(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int m = dim(rng), n = dim(rng);
    Mat a(m, Row(n));
    for (auto& row : a)
      for (ll& x : row) x = val(rng);
    SmithResult r = smith_normal_form(a);
    CHECK(mat_mul(mat_mul(r.u, a), r.v) == r.s);
    CHECK(std::abs(det(r.u)) == 1);
    CHECK(std::abs(det(r.v)) == 1);
    ll prev = 0;
    for (int i = 0; i < std::min(m, n); ++i) {
      for (int j = 0; j < n; ++j)
        if (j != i) CHECK(r.s[i][j] == 0);
      ll d = r.s[i][i];
      CHECK(d >= 0);
      if (prev != 0) CHECK((d == 0 || d % prev == 0));
      if (prev == 0 && i > 0) CHECK(d == 0);
      prev = d;
    }
  }
}

TEST_CASE("integer solve agrees with brute force on small boxes") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dim(1, 3), val(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    int m = dim(rng), n = dim(rng);
    Mat a(m, Row(n));
    for (auto& row : a)
      for (ll& x : row) x = val(rng);
    Row b(m);
    for (ll& x : b) x = val(rng);

    ZSolve got = solve_integer(a, b);

    // brute force over a box that contains a solution iff one exists there
    bool brute = false;
    Row probe(n, -9);
    while (true) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        ll acc = 0;
        for (int j = 0; j < n; ++j) acc += a[i][j] * probe[j];
        ok = acc == b[i];
      }
      if (ok) {
        brute = true;
        break;
      }
      int j = 0;
      while (j < n && probe[j] == 9) probe[j++] = -9;
      if (j == n) break;
      ++probe[j];
    }

    if (got.solvable) {
      Row check = mat_apply(a, got.x0);
      CHECK(check == b);
      for (const Row& k : got.kernel) {
        Row kk = mat_apply(a, k);
        for (ll v : kk) CHECK(v == 0);
      }
    } else {
      CHECK_FALSE(brute);
    }
    if (brute) CHECK(got.solvable);
  }
}

TEST_CASE("kernel basis is primitive") {
  Mat a{{2, -4}};
  auto ker = integer_kernel(a);
  REQUIRE(ker.size() == 1);
  CHECK(2 * ker[0][0] - 4 * ker[0][1] == 0);
  CHECK(std::abs(ker[0][0]) == 2);
  CHECK(std::abs(ker[0][1]) == 1);

  Mat full{{1, 1}, {1, 1}};
  auto k2 = integer_kernel(full);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0][0] + k2[0][1] == 0);
  CHECK(std::abs(k2[0][0]) == 1);
}
