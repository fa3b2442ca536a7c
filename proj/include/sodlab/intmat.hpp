#pragma once
// Exact integer matrix helpers: determinant, Smith normal form, linear systems.
#include <cstdint>
#include <vector>

namespace sodlab {

using ll = long long;
using Row = std::vector<ll>;
using Mat = std::vector<Row>;

Mat identity_mat(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Row mat_apply(const Mat& a, const Row& x);
Mat transpose(const Mat& a);

// Exact determinant (fraction-free Bareiss, 128-bit intermediates).
ll det(Mat a);

// u * a * v = s with u, v unimodular and s diagonal, diagonal entries
// non-negative and each dividing the next.
struct SmithResult {
  Mat u, s, v;
};
SmithResult smith_normal_form(const Mat& a);

// Basis of the integer kernel {x : a x = 0}.
std::vector<Row> integer_kernel(const Mat& a);

// General solution of a x = b over the integers: x = x0 + span(kernel).
struct ZSolve {
  bool solvable = false;
  Row x0;
  std::vector<Row> kernel;
};
ZSolve solve_integer(const Mat& a, const Row& b);

}  // namespace sodlab
