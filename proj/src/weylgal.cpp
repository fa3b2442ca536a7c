#include "sodlab/weylgal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sodlab {

Root make_root(const SurfaceModel& s, const DivisorClass& d) {
  check_divisor(s, d);
  if (intersect(s, d, d) != -2)
    throw std::invalid_argument("root must have self-intersection -2");
  if (intersect(s, d, canonical_class(s)) != 0)
    throw std::invalid_argument("root must be orthogonal to the canonical class");
  return Root{d};
}

std::vector<Root> simple_roots(const SurfaceModel& s) {
  if (s.kind != SurfaceKind::BlowupP2)
    throw std::invalid_argument("simple roots are defined on the blow-up models");
  int r = s.blown_up;
  if (r < 2)
    throw std::invalid_argument("no roots below two blown-up points");
  std::vector<Root> roots;
  for (int i = 1; i < r; ++i) {
    DivisorClass d = zero_divisor(s);
    d[i] = 1;
    d[i + 1] = -1;
    roots.push_back(make_root(s, d));
  }
  if (r >= 3) {
    DivisorClass d = zero_divisor(s);
    d[0] = 1;
    d[1] = d[2] = d[3] = -1;
    roots.push_back(make_root(s, d));
  }
  return roots;
}

DivisorClass reflect(const SurfaceModel& s, const DivisorClass& x,
                     const Root& alpha) {
  make_root(s, alpha.cls);  // re-validate
  return add(x, scale(intersect(s, x, alpha.cls), alpha.cls));
}

LatticeAut aut_from_root(const SurfaceModel& s, const Root& alpha) {
  int n = s.picard_rank();
  Mat m(n, Row(n, 0));
  for (int j = 0; j < n; ++j) {
    DivisorClass e = zero_divisor(s);
    e[j] = 1;
    DivisorClass img = reflect(s, e, alpha);
    for (int i = 0; i < n; ++i) m[i][j] = img[i];
  }
  return LatticeAut{m};
}

LatticeAut aut_from_l_permutation(const SurfaceModel& s,
                                  const std::vector<int>& image) {
  if (s.kind != SurfaceKind::BlowupP2)
    throw std::invalid_argument("L-permutations act on the blow-up models");
  int r = s.blown_up;
  if (static_cast<int>(image.size()) != r)
    throw std::invalid_argument("permutation length must match blown-up count");
  std::vector<bool> seen(r + 1, false);
  for (int t : image) {
    if (t < 1 || t > r || seen[t])
      throw std::invalid_argument("not a permutation of 1..r");
    seen[t] = true;
  }
  int n = s.picard_rank();
  Mat m(n, Row(n, 0));
  m[0][0] = 1;
  for (int i = 1; i <= r; ++i) m[image[i - 1]][i] = 1;
  return LatticeAut{m};
}

std::vector<DivisorClass> orbit(const SurfaceModel& s, const DivisorClass& seed,
                                const std::vector<LatticeAut>& gens,
                                size_t cap) {
  check_divisor(s, seed);
  std::set<DivisorClass> seen{seed};
  std::vector<DivisorClass> queue{seed};
  while (!queue.empty()) {
    DivisorClass cur = queue.back();
    queue.pop_back();
    for (const LatticeAut& g : gens) {
      DivisorClass img = mat_apply(g.m, cur);
      if (seen.insert(img).second) {
        if (seen.size() > cap)
          throw std::runtime_error("orbit exceeded cap of " +
                                   std::to_string(cap) + " classes");
        queue.push_back(img);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<DivisorClass> root_orbit(const SurfaceModel& s, size_t cap) {
  std::vector<LatticeAut> gens;
  std::vector<DivisorClass> seeds;
  for (const Root& a : simple_roots(s)) {
    gens.push_back(aut_from_root(s, a));
    seeds.push_back(a.cls);
  }
  std::set<DivisorClass> all;
  for (const DivisorClass& seed : seeds) {
    auto part = orbit(s, seed, gens, cap);
    all.insert(part.begin(), part.end());
    if (all.size() > cap)
      throw std::runtime_error("root orbit exceeded cap");
  }
  return {all.begin(), all.end()};
}

std::optional<InvariantWitness> invariant_combination(
    const SurfaceModel& s, const std::vector<DivisorClass>& classes,
    const std::vector<ll>& ranks, const std::vector<LatticeAut>& gens) {
  if (classes.empty())
    throw std::invalid_argument("invariant_combination: no classes given");
  if (!ranks.empty() && ranks.size() != classes.size())
    throw std::invalid_argument("invariant_combination: one rank per class");
  for (const DivisorClass& c : classes) check_divisor(s, c);

  int n = static_cast<int>(classes.size());
  int rho = s.picard_rank();
  Mat stacked;
  for (const LatticeAut& g : gens) {
    // rows of (g - id) * C where C has the classes as columns
    for (int i = 0; i < rho; ++i) {
      Row row(n, 0);
      for (int j = 0; j < n; ++j) {
        ll img = 0;
        for (int t = 0; t < rho; ++t) img += g.m[i][t] * classes[j][t];
        row[j] = img - classes[j][i];
      }
      stacked.push_back(row);
    }
  }
  Row x;
  if (stacked.empty()) {
    x.assign(n, 0);
    x[0] = 1;  // no generators: anything is invariant
  } else {
    auto ker = integer_kernel(stacked);
    if (ker.empty()) return std::nullopt;
    x = ker.front();
  }
  ll g = 0;
  for (ll v : x) g = std::gcd(g, v);
  if (g > 1)
    for (ll& v : x) v /= g;
  for (ll v : x) {
    if (v == 0) continue;
    if (v < 0)
      for (ll& w : x) w = -w;
    break;
  }
  InvariantWitness wit;
  wit.x = x;
  wit.combination = zero_divisor(s);
  for (int j = 0; j < n; ++j)
    wit.combination = add(wit.combination, scale(x[j], classes[j]));
  for (size_t j = 0; j < ranks.size(); ++j)
    wit.weighted_rank_sum += x[j] * ranks[j];
  return wit;
}

}  // namespace sodlab
