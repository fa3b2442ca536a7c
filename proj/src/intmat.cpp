#include "sodlab/intmat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sodlab {

namespace {
using i128 = __int128;

ll narrow(i128 x) {
  if (x > i128(9223372036854775807LL) || x < -i128(9223372036854775807LL) - 1)
    throw std::overflow_error("integer matrix entry exceeds 64 bits");
  return static_cast<ll>(x);
}
}  // namespace

Mat identity_mat(int n) {
  Mat a(n, Row(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  int m = static_cast<int>(a.size());
  int k = static_cast<int>(a[0].size());
  int n = static_cast<int>(b[0].size());
  if (k != static_cast<int>(b.size()))
    throw std::invalid_argument("mat_mul: shape mismatch");
  Mat c(m, Row(n, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      i128 acc = 0;
      for (int t = 0; t < k; ++t) acc += i128(a[i][t]) * b[t][j];
      c[i][j] = narrow(acc);
    }
  return c;
}

Row mat_apply(const Mat& a, const Row& x) {
  Row y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size())
      throw std::invalid_argument("mat_apply: shape mismatch");
    i128 acc = 0;
    for (size_t j = 0; j < x.size(); ++j) acc += i128(a[i][j]) * x[j];
    y[i] = narrow(acc);
  }
  return y;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Row(a.size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

ll det(Mat a) {
  int n = static_cast<int>(a.size());
  for (const Row& r : a)
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("det: not square");
  if (n == 0) return 1;
  std::vector<std::vector<i128>> m(n, std::vector<i128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
  int sign = 1;
  i128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * narrow(m[n - 1][n - 1]);
}

SmithResult smith_normal_form(const Mat& a) {
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : 0;
  SmithResult r{identity_mat(m), a, identity_mat(n)};
  Mat& s = r.s;
  Mat& u = r.u;
  Mat& v = r.v;

  auto swap_rows = [&](int i, int j) {
    std::swap(s[i], s[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (Row& row : s) std::swap(row[i], row[j]);
    for (Row& row : v) std::swap(row[i], row[j]);
  };
  auto add_row = [&](int dst, int src, ll c) {  // row dst += c * row src
    for (int j = 0; j < n; ++j) s[dst][j] += c * s[src][j];
    for (int j = 0; j < m; ++j) u[dst][j] += c * u[src][j];
  };
  auto add_col = [&](int dst, int src, ll c) {
    for (int i = 0; i < m; ++i) s[i][dst] += c * s[i][src];
    for (int i = 0; i < n; ++i) v[i][dst] += c * v[i][src];
  };
  auto negate_row = [&](int i) {
    for (ll& x : s[i]) x = -x;
    for (ll& x : u[i]) x = -x;
  };

  int lim = std::min(m, n);
  for (int t = 0; t < lim; ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (s[i][j] != 0 &&
            (pi < 0 || std::llabs(s[i][j]) < std::llabs(s[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (s[i][t] == 0) continue;
        add_row(i, t, -(s[i][t] / s[t][t]));
        if (s[i][t] != 0) {  // remainder became the smaller pivot
          swap_rows(t, i);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      for (int j = t + 1; j < n; ++j) {
        if (s[t][j] == 0) continue;
        add_col(j, t, -(s[t][j] / s[t][t]));
        if (s[t][j] != 0) {
          swap_cols(t, j);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      ll p = s[t][t];
      for (int i = t + 1; i < m && clean; ++i)
        for (int j = t + 1; j < n && clean; ++j)
          if (s[i][j] % p != 0) {  // pull the bad row up to fix divisibility
            add_row(t, i, 1);
            clean = false;
          }
    }
    if (s[t][t] < 0) negate_row(t);
  }
  return r;
}

std::vector<Row> integer_kernel(const Mat& a) {
  if (a.empty()) throw std::invalid_argument("integer_kernel: empty system");
  int m = static_cast<int>(a.size());
  int n = static_cast<int>(a[0].size());
  SmithResult snf = smith_normal_form(a);
  std::vector<Row> ker;
  int lim = std::min(m, n);
  for (int j = 0; j < n; ++j) {
    ll d = j < lim ? snf.s[j][j] : 0;
    if (d != 0) continue;
    Row col(n);
    for (int i = 0; i < n; ++i) col[i] = snf.v[i][j];
    ker.push_back(col);
  }
  return ker;
}

ZSolve solve_integer(const Mat& a, const Row& b) {
  if (a.empty()) throw std::invalid_argument("solve_integer: empty system");
  int m = static_cast<int>(a.size());
  int n = static_cast<int>(a[0].size());
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("solve_integer: rhs length mismatch");
  SmithResult snf = smith_normal_form(a);
  Row ub = mat_apply(snf.u, b);
  Row y(n, 0);
  ZSolve out;
  int lim = std::min(m, n);
  for (int i = 0; i < m; ++i) {
    ll d = i < lim ? snf.s[i][i] : 0;
    if (d == 0) {
      if (ub[i] != 0) return out;
    } else {
      if (ub[i] % d != 0) return out;
      y[i] = ub[i] / d;
    }
  }
  out.solvable = true;
  out.x0 = mat_apply(snf.v, y);
  for (int j = 0; j < n; ++j) {
    ll d = j < lim ? snf.s[j][j] : 0;
    if (d != 0) continue;
    Row col(n);
    for (int i = 0; i < n; ++i) col[i] = snf.v[i][j];
    out.kernel.push_back(col);
  }
  return out;
}

}  // namespace sodlab
