#include "sodlab/links.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace sodlab {

namespace {

DivisorClass basis_line(int rank, int i) {
  DivisorClass d(rank, 0);
  d[i] = 1;
  return d;
}

// H - L_i - L_j
DivisorClass line_through(int rank, int i, int j) {
  DivisorClass d(rank, 0);
  d[0] = 1;
  d[i] = -1;
  d[j] = -1;
  return d;
}

// 2H - sum L_i, skipping index `skip` (0 = through all the points).
DivisorClass conic_class(int rank, int skip) {
  DivisorClass d(rank, -1);
  d[0] = 2;
  if (skip > 0) d[skip] = 0;
  return d;
}

// J m J with J = diag(1,-1): flips the off-diagonal entries.
std::array<std::array<ll, 2>, 2> sign_conjugate(
    const std::array<std::array<ll, 2>, 2>& m) {
  return {{{m[0][0], -m[0][1]}, {-m[1][0], m[1][1]}}};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("link expansion: " + what);
}

std::string pair_tag(int ds, int dp) {
  return "(" + std::to_string(ds) + "," + std::to_string(dp) + ")";
}

// Readable two-term combination: "2 u + 3 v", "-u - 2 v", "5 u".
std::string lin2(ll a, const std::string& u, ll b, const std::string& v) {
  auto lead = [](ll c, const std::string& sym) -> std::string {
    if (c == 1) return sym;
    if (c == -1) return "-" + sym;
    return std::to_string(c) + " " + sym;
  };
  if (a == 0 && b == 0) return "0";
  if (a == 0) return lead(b, v);
  if (b == 0) return lead(a, u);
  std::string tail = b < 0 ? " - " : " + ";
  ll mag = b < 0 ? -b : b;
  tail += mag == 1 ? v : std::to_string(mag) + " " + v;
  return lead(a, u) + tail;
}

void push_identity(LinkExpansion& x, const std::string& statement,
                   DivisorClass lhs, DivisorClass rhs) {
  require(lhs == rhs,
          pair_tag(x.deg_surface, x.deg_point) + ": " + statement);
  x.identities.push_back({statement, std::move(lhs), std::move(rhs)});
}

DivisorClass sum_from(const SurfaceModel& s,
                      const std::vector<DivisorClass>& v, int begin) {
  DivisorClass out = zero_divisor(s);
  for (size_t i = begin; i < v.size(); ++i) out = add(out, v[i]);
  return out;
}

// Shared sanity layer: (-1)-curve arithmetic, contraction orthogonality,
// degree bookkeeping, and the coordinate change against the stored matrix.
void finish(LinkExpansion& x, const LinkMatrix& lm, int e_pt_begin,
            int f_pt_begin) {
  const SurfaceModel& s = x.resolution;
  const DivisorClass k = canonical_class(s);
  const std::string tag = pair_tag(x.deg_surface, x.deg_point);

  require(static_cast<int>(x.e.size()) - e_pt_begin == x.deg_point,
          tag + ": wrong number of curves over the blown-up point");
  require(x.e.size() == x.f.size(), tag + ": contraction towers differ");

  auto is_minus_one_curve = [&](const DivisorClass& c) {
    return intersect(s, c, c) == -1 && intersect(s, c, k) == -1;
  };
  for (size_t i = 0; i < x.e.size(); ++i) {
    require(is_minus_one_curve(x.e[i]),
            tag + ": e-curve " + std::to_string(i + 1));
    require(is_minus_one_curve(x.f[i]),
            tag + ": f-curve " + std::to_string(i + 1));
    require(intersect(s, x.g, x.f[i]) == 0,
            tag + ": G meets F_" + std::to_string(i + 1));
    for (size_t j = i + 1; j < x.e.size(); ++j) {
      require(intersect(s, x.e[i], x.e[j]) == 0, tag + ": e-curves meet");
      require(intersect(s, x.f[i], x.f[j]) == 0, tag + ": f-curves meet");
    }
  }
  for (size_t i = e_pt_begin; i < x.e.size(); ++i)
    require(intersect(s, x.sigma_omega, x.e[i]) == 0,
            tag + ": sigma^*omega_S meets a contracted curve");
  for (size_t i = f_pt_begin; i < x.f.size(); ++i)
    require(intersect(s, x.tau_omega, x.f[i]) == 0,
            tag + ": tau^*omega_S' meets a contracted curve");

  require(intersect(s, x.sigma_omega, x.sigma_omega) == x.deg_surface,
          tag + ": (sigma^*omega_S)^2 != deg S");
  require(intersect(s, x.tau_omega, x.tau_omega) == x.deg_surface,
          tag + ": (tau^*omega_S')^2 != deg S'");

  // Mobile class: square and anticanonical degree of the bottom model.
  const ll gg = intersect(s, x.g, x.g);
  const ll gk = intersect(s, x.g, k);
  if (x.deg_surface == 8) {
    require(gg == 2 && gk == -4, tag + ": G is not a quadric hyperplane");
  } else {
    require(gg == 1 && gk == -3, tag + ": G is not homaloidal");
  }

  // Columns of `expansion` express (sigma^*omega_S, E) in the basis
  // (tau^*omega_S', F).
  const auto& n = lm.expansion;
  push_identity(
      x, "sigma^*omega_S = " + lin2(n[0][0], "tau^*omega_S'", n[1][0], "F"),
      x.sigma_omega,
      add(scale(n[0][0], x.tau_omega), scale(n[1][0], x.f_total)));
  push_identity(x, "E = " + lin2(n[0][1], "tau^*omega_S'", n[1][1], "F"),
                x.e_total,
                add(scale(n[0][1], x.tau_omega), scale(n[1][1], x.f_total)));
  push_identity(x, "K_X = sigma^*omega_S + E", k,
                add(x.sigma_omega, x.e_total));
  push_identity(x, "K_X = tau^*omega_S' + F", k, add(x.tau_omega, x.f_total));
}

}  // namespace

std::vector<HomaloidalSystem> homaloidal_systems(int r) {
  if (r < 1 || r > 8)
    throw std::invalid_argument("homaloidal_systems: r must be 1..8");
  std::vector<HomaloidalSystem> out;
  // 9(n-1) <= r(n+1), i.e. n(9-r) <= 9+r.
  const ll n_max = (9 + r) / (9 - r);
  for (ll n = 2; n <= n_max; ++n) {
    const ll want_sum = 3 * n - 3;
    const ll want_sq = n * n - 1;
    std::vector<ll> cur;
    std::function<void(int, ll, ll, ll)> grow = [&](int left, ll max_v, ll sum,
                                                    ll sq) {
      if (left == 0) {
        if (sum == want_sum && sq == want_sq)
          out.push_back({n, cur});
        return;
      }
      ll hi = std::min<ll>(max_v, want_sum - sum - (left - 1));
      for (ll v = hi; v >= 1; --v) {
        if (sq + v * v > want_sq) continue;
        cur.push_back(v);
        grow(left - 1, v, sum + v, sq + v * v);
        cur.pop_back();
      }
    };
    grow(r, n, 0, 0);
  }
  std::sort(out.begin(), out.end(),
            [](const HomaloidalSystem& a, const HomaloidalSystem& b) {
              if (a.n != b.n) return a.n > b.n;
              return a.mults > b.mults;
            });
  return out;
}

const std::vector<LinkMatrix>& all_link_matrices() {
  static const std::vector<LinkMatrix> table = [] {
    auto row = [](int ds, int dp, std::array<std::array<ll, 2>, 2> m) {
      LinkMatrix lm{ds, dp, m, sign_conjugate(m)};
      auto det2 = [](const std::array<std::array<ll, 2>, 2>& a) {
        return a[0][0] * a[1][1] - a[0][1] * a[1][0];
      };
      auto is_involution = [](const std::array<std::array<ll, 2>, 2>& a) {
        return a[0][0] * a[0][0] + a[0][1] * a[1][0] == 1 &&
               a[0][0] * a[0][1] + a[0][1] * a[1][1] == 0 &&
               a[1][0] * a[0][0] + a[1][1] * a[1][0] == 0 &&
               a[1][0] * a[0][1] + a[1][1] * a[1][1] == 1;
      };
      if (det2(lm.m) != -1 || !is_involution(lm.m) ||
          !is_involution(lm.expansion))
        throw std::logic_error("link matrix table is corrupt");
      return lm;
    };
    return std::vector<LinkMatrix>{
        row(9, 3, {{{2, 1}, {-3, -2}}}),
        row(9, 6, {{{5, 4}, {-6, -5}}}),
        row(8, 4, {{{3, 2}, {-4, -3}}}),
        row(6, 2, {{{2, 1}, {-3, -2}}}),
        row(6, 3, {{{3, 2}, {-4, -3}}}),
    };
  }();
  return table;
}

LinkMatrix link_matrix(int deg_surface, int deg_point) {
  for (const LinkMatrix& lm : all_link_matrices())
    if (lm.deg_surface == deg_surface && lm.deg_point == deg_point) return lm;
  throw std::invalid_argument(
      "no link of degree-" + std::to_string(deg_surface) +
      " surfaces through a point of degree " + std::to_string(deg_point));
}

LinkExpansion expand_link(int deg_surface, int deg_point) {
  const LinkMatrix lm = link_matrix(deg_surface, deg_point);
  LinkExpansion x;
  x.deg_surface = deg_surface;
  x.deg_point = deg_point;
  const int key = 10 * deg_surface + deg_point;
  int e_pt_begin = 0, f_pt_begin = 0;

  if (key == 93) {
    x.resolution = SurfaceModel::blowup_p2(3);
    x.sigma_omega = {-3, 0, 0, 0};
    x.g = {2, -1, -1, -1};
    x.tau_omega = scale(-3, x.g);
    for (int i = 1; i <= 3; ++i) x.e.push_back(basis_line(4, i));
    x.f = {line_through(4, 2, 3), line_through(4, 1, 3),
           line_through(4, 1, 2)};
    x.e_total = sum_from(x.resolution, x.e, 0);
    x.f_total = sum_from(x.resolution, x.f, 0);
    push_identity(x, "sigma^*O(-1) = tau^*O(1) + K_X", {-1, 0, 0, 0},
                  add(x.g, canonical_class(x.resolution)));
  } else if (key == 96) {
    x.resolution = SurfaceModel::blowup_p2(6);
    x.sigma_omega = {-3, 0, 0, 0, 0, 0, 0};
    x.g = {5, -2, -2, -2, -2, -2, -2};
    x.tau_omega = scale(-3, x.g);
    for (int i = 1; i <= 6; ++i) {
      x.e.push_back(basis_line(7, i));
      x.f.push_back(conic_class(7, i));
    }
    x.e_total = sum_from(x.resolution, x.e, 0);
    x.f_total = sum_from(x.resolution, x.f, 0);
    push_identity(x, "sigma^*O(-1) = tau^*O(1) + 2 K_X", {-1, 0, 0, 0, 0, 0, 0},
                  add(x.g, scale(2, canonical_class(x.resolution))));
  } else if (key == 84) {
    // The blown-up quadric carried to the plane model: p1, p2 are the
    // images of the two rulings through the first of the four points, so
    // that point's curve is H - L_1 - L_2 and sigma^*O(1) = 2H - L_1 - L_2.
    x.resolution = SurfaceModel::blowup_p2(5);
    const DivisorClass sigma_h = {2, -1, -1, 0, 0, 0};
    x.sigma_omega = scale(-2, sigma_h);
    x.g = {4, -1, -1, -2, -2, -2};
    x.tau_omega = scale(-2, x.g);
    x.e = {line_through(6, 1, 2), basis_line(6, 3), basis_line(6, 4),
           basis_line(6, 5)};
    x.f = {conic_class(6, 0), line_through(6, 4, 5), line_through(6, 3, 5),
           line_through(6, 3, 4)};
    x.e_total = sum_from(x.resolution, x.e, 0);
    x.f_total = sum_from(x.resolution, x.f, 0);
    push_identity(x, "sigma^*O(1) + tau^*O(1) + 2 K_X = 0",
                  add(add(sigma_h, x.g),
                      scale(2, canonical_class(x.resolution))),
                  zero_divisor(x.resolution));
  } else if (key == 62) {
    x.resolution = SurfaceModel::blowup_p2(5);
    x.sigma_omega = {-3, 1, 1, 1, 0, 0};
    x.g = {3, -1, -1, -1, -1, -2};
    for (int i = 1; i <= 5; ++i) x.e.push_back(basis_line(6, i));
    x.f = {line_through(6, 1, 5), line_through(6, 2, 5), line_through(6, 3, 5),
           line_through(6, 4, 5), conic_class(6, 0)};
    x.tau_omega = add(scale(-3, x.g), add(add(x.f[0], x.f[1]), x.f[2]));
    e_pt_begin = f_pt_begin = 3;
    x.e_total = sum_from(x.resolution, x.e, e_pt_begin);
    x.f_total = sum_from(x.resolution, x.f, f_pt_begin);
    push_identity(
        x, "3 G - F_1 - F_2 - F_3 = 6 H - 2 L_1 - 2 L_2 - 2 L_3 - 3 L_4 - 3 L_5",
        sub(scale(3, x.g), add(add(x.f[0], x.f[1]), x.f[2])),
        {6, -2, -2, -2, -3, -3});
    push_identity(x, "F_4 + F_5 = 3 H - L_1 - L_2 - L_3 - 2 L_4 - 2 L_5",
                  x.f_total, {3, -1, -1, -1, -2, -2});
  } else {  // key == 63
    x.resolution = SurfaceModel::blowup_p2(6);
    x.sigma_omega = {-3, 1, 1, 1, 0, 0, 0};
    x.g = {5, -2, -2, -2, -2, -2, -2};
    for (int i = 1; i <= 6; ++i) x.e.push_back(basis_line(7, i));
    x.f = {conic_class(7, 4), conic_class(7, 5), conic_class(7, 6),
           conic_class(7, 1), conic_class(7, 2), conic_class(7, 3)};
    x.tau_omega = add(scale(-3, x.g), add(add(x.f[0], x.f[1]), x.f[2]));
    e_pt_begin = f_pt_begin = 3;
    x.e_total = sum_from(x.resolution, x.e, e_pt_begin);
    x.f_total = sum_from(x.resolution, x.f, f_pt_begin);
    push_identity(x,
                  "3 G - F_1 - F_2 - F_3 = 9 H - 3 L_1 - 3 L_2 - 3 L_3 - 4 "
                  "L_4 - 4 L_5 - 4 L_6",
                  sub(scale(3, x.g), add(add(x.f[0], x.f[1]), x.f[2])),
                  {9, -3, -3, -3, -4, -4, -4});
    push_identity(x,
                  "F_4 + F_5 + F_6 = 6 H - 2 L_1 - 2 L_2 - 2 L_3 - 3 L_4 - 3 "
                  "L_5 - 3 L_6",
                  x.f_total, {6, -2, -2, -2, -3, -3, -3});
    push_identity(x, "F_1 = 2 H - L_1 - L_2 - L_3 - L_5 - L_6", x.f[0],
                  {2, -1, -1, -1, 0, -1, -1});
  }

  finish(x, lm, e_pt_begin, f_pt_begin);
  return x;
}

std::vector<FClassAssignment> classify_f_classes(int deg_surface,
                                                 int deg_point) {
  const LinkExpansion x = expand_link(deg_surface, deg_point);
  const int rank = x.resolution.picard_rank();
  const int r = rank - 1;
  std::vector<FClassAssignment> out;
  for (size_t idx = 0; idx < x.f.size(); ++idx) {
    const DivisorClass& c = x.f[idx];
    std::string name;
    if (c[0] == 0) {
      for (int i = 1; i <= r && name.empty(); ++i)
        if (c == basis_line(rank, i)) name = "L_" + std::to_string(i);
    } else if (c[0] == 1) {
      for (int i = 1; i <= r && name.empty(); ++i)
        for (int j = i + 1; j <= r && name.empty(); ++j)
          if (c == line_through(rank, i, j))
            name = "L_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    } else if (c[0] == 2) {
      if (r == 5 && c == conic_class(rank, 0)) name = "D";
      for (int j = 1; r == 6 && j <= r && name.empty(); ++j)
        if (c == conic_class(rank, j)) name = "D_" + std::to_string(j);
    }
    if (name.empty())
      throw std::logic_error("no consistent assignment for F_" +
                             std::to_string(idx + 1) + " of link " +
                             pair_tag(deg_surface, deg_point));
    out.push_back({static_cast<int>(idx) + 1, c, name});
  }

  if (deg_surface == 6) {
    // Re-solve the defining constraints from the assignment: the first line
    // determines 3G, the second pins the curves over the blown-up point.
    const bool two = deg_point == 2;
    const DivisorClass line1 =
        two ? DivisorClass{6, -2, -2, -2, -3, -3}
            : DivisorClass{9, -3, -3, -3, -4, -4, -4};
    const DivisorClass line2 = two ? DivisorClass{3, -1, -1, -1, -2, -2}
                                   : DivisorClass{6, -2, -2, -2, -3, -3, -3};
    const DivisorClass three_g =
        add(line1, add(add(out[0].cls, out[1].cls), out[2].cls));
    DivisorClass solved;
    for (ll v : three_g) {
      require(v % 3 == 0, "constraint system has no integral mobile class");
      solved.push_back(v / 3);
    }
    require(solved == x.g,
            "constraint system solves to a different mobile class");
    require(sum_from(x.resolution, x.f, 3) == line2,
            "curves over the blown-up point violate their constraint");
  }
  return out;
}

MarkedCollection conic_bundle_four_block() {
  MarkedCollection c;
  c.surface = SurfaceModel::quadric();
  const DivisorClass fiber = {0, 1}, section = {1, 0};
  auto push = [&c](const DivisorClass& d, const std::string& name,
                   const std::string& label) {
    c.classes.push_back(record_of(line_bundle(c.surface, d), name));
    const int i = static_cast<int>(c.classes.size());
    c.block_bounds.push_back({i - 1, i});
    c.descent_meta.push_back(DescentMeta{1, 1, label});
  };
  push(zero_divisor(c.surface), "O", "k");
  push(fiber, "O(F)", "k,alpha");
  push(section, "O(Sigma)", "k,beta");
  push(add(section, fiber), "O(Sigma+F)", "k,alpha(x)beta");
  c.validate();
  return c;
}

}  // namespace sodlab
