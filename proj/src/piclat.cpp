#include "sodlab/piclat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sodlab {

SurfaceModel SurfaceModel::blowup_p2(int r) {
  if (r < 0 || r > 8)
    throw std::invalid_argument("blowup_p2: need 0 <= r <= 8, got " +
                                std::to_string(r));
  return SurfaceModel{SurfaceKind::BlowupP2, r};
}

SurfaceModel SurfaceModel::quadric() {
  return SurfaceModel{SurfaceKind::Quadric, 0};
}

int SurfaceModel::picard_rank() const {
  return kind == SurfaceKind::Quadric ? 2 : blown_up + 1;
}

int SurfaceModel::degree() const {
  return kind == SurfaceKind::Quadric ? 8 : 9 - blown_up;
}

std::string SurfaceModel::name() const {
  if (kind == SurfaceKind::Quadric) return "quadric";
  return "p2:" + std::to_string(blown_up);
}

void check_divisor(const SurfaceModel& s, const DivisorClass& d) {
  if (static_cast<int>(d.size()) != s.picard_rank())
    throw std::invalid_argument("divisor class has " +
                                std::to_string(d.size()) +
                                " coordinates; model " + s.name() + " needs " +
                                std::to_string(s.picard_rank()));
}

ll intersect(const SurfaceModel& s, const DivisorClass& a,
             const DivisorClass& b) {
  check_divisor(s, a);
  check_divisor(s, b);
  if (s.kind == SurfaceKind::Quadric) return a[0] * b[1] + a[1] * b[0];
  ll acc = a[0] * b[0];
  for (int i = 1; i <= s.blown_up; ++i) acc -= a[i] * b[i];
  return acc;
}

DivisorClass canonical_class(const SurfaceModel& s) {
  if (s.kind == SurfaceKind::Quadric) return {-2, -2};
  DivisorClass k(s.picard_rank(), 1);
  k[0] = -3;
  return k;
}

DivisorClass add(const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
  DivisorClass c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

DivisorClass sub(const DivisorClass& a, const DivisorClass& b) {
  return add(a, scale(-1, b));
}

DivisorClass scale(ll c, const DivisorClass& a) {
  DivisorClass b(a.size());
  for (size_t i = 0; i < a.size(); ++i) b[i] = c * a[i];
  return b;
}

DivisorClass zero_divisor(const SurfaceModel& s) {
  return DivisorClass(s.picard_rank(), 0);
}

ll rr_chi(const SurfaceModel& s, const DivisorClass& d) {
  ll num = intersect(s, d, d) - intersect(s, d, canonical_class(s));
  if (num % 2 != 0)
    throw std::logic_error("rr_chi: odd numerator, lattice data corrupted");
  return 1 + num / 2;
}

namespace {

ll isqrt_floor(ll x) {
  if (x < 0) throw std::invalid_argument("isqrt of negative value");
  ll r = static_cast<ll>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Extend a partial coefficient vector c_1..c_r with sum sigma and square sum
// q remaining over cnt coordinates.
void fill_coords(int cnt, ll sigma, ll q, DivisorClass& acc,
                 std::vector<DivisorClass>& out) {
  if (cnt == 0) {
    if (sigma == 0 && q == 0) out.push_back(acc);
    return;
  }
  if (q < 0 || sigma * sigma > static_cast<ll>(cnt) * q) return;
  ll b = isqrt_floor(q);
  for (ll c = -b; c <= b; ++c) {
    acc.push_back(c);
    fill_coords(cnt - 1, sigma - c, q - c * c, acc, out);
    acc.pop_back();
  }
}

std::vector<DivisorClass> enumerate_blowup(int r, ll s, ll k) {
  std::vector<DivisorClass> out;
  if (r == 0) {
    if (k % 3 == 0) {
      ll a = -k / 3;
      if (a * a == s) out.push_back({a});
    }
    return out;
  }
  // Cauchy-Schwarz on the L-coefficients bounds a:
  //   (3a + k)^2 <= r (a^2 - s)  <=>  (9-r) a^2 + 6k a + (k^2 + r s) <= 0.
  ll A = 9 - r;  // positive: the model keeps r <= 8, so each query is finite
  ll disc4 = r * (k * k - A * s);
  if (disc4 < 0) return out;
  ll root = isqrt_floor(disc4);
  ll lo = (-3 * k - root) / A - 2, hi = (-3 * k + root) / A + 2;
  for (ll a = lo; a <= hi; ++a) {
    if (A * a * a + 6 * k * a + (k * k + r * s) > 0) continue;
    DivisorClass acc{a};
    fill_coords(r, -3 * a - k, a * a - s, acc, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> enumerate_quadric(ll s, ll k) {
  std::vector<DivisorClass> out;
  if (s % 2 != 0 || k % 2 != 0) return out;
  ll p = -k / 2, q = s / 2;  // x + y = p, x y = q
  ll disc = p * p - 4 * q;
  if (disc < 0) return out;
  ll d = isqrt_floor(disc);
  if (d * d != disc || (p - d) % 2 != 0) return out;
  out.push_back({(p - d) / 2, (p + d) / 2});
  out.push_back({(p + d) / 2, (p - d) / 2});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<DivisorClass> enumerate_classes(const SurfaceModel& s, ll self_int,
                                            ll k_int) {
  if (s.kind == SurfaceKind::Quadric) return enumerate_quadric(self_int, k_int);
  return enumerate_blowup(s.blown_up, self_int, k_int);
}

std::string divisor_str(const SurfaceModel& s, const DivisorClass& d) {
  check_divisor(s, d);
  std::vector<std::string> symbols;
  if (s.kind == SurfaceKind::Quadric) {
    symbols = {"H1", "H2"};
  } else {
    symbols.push_back("H");
    for (int i = 1; i <= s.blown_up; ++i)
      symbols.push_back("L" + std::to_string(i));
  }
  std::string out;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (d[i] > 0 && !out.empty()) out += "+";
    if (d[i] == -1)
      out += "-";
    else if (d[i] != 1)
      out += std::to_string(d[i]);
    out += symbols[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace sodlab
