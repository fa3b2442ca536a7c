#include "sodlab/surfdb.hpp"

#include <numeric>
#include <stdexcept>

namespace sodlab {

namespace {

BundleSpec spec(std::string algebra, std::string center, int center_degree,
                int algebra_index, std::optional<int> period, ll c2, ll rank,
                std::string shape, std::vector<DivisorClass> summands,
                bool reduced = false) {
  BundleSpec b;
  b.algebra_label = std::move(algebra);
  b.center_label = std::move(center);
  b.center_degree = center_degree;
  b.algebra_index = algebra_index;
  b.period = period;
  b.c2 = c2;
  b.rank = rank;
  b.shape = std::move(shape);
  b.summands = std::move(summands);
  b.reduced = reduced;
  return b;
}

std::vector<DivisorClass> copies(const std::vector<DivisorClass>& base,
                                 int m) {
  std::vector<DivisorClass> out;
  for (int i = 0; i < m; ++i)
    out.insert(out.end(), base.begin(), base.end());
  return out;
}

std::vector<SurfaceCase> degree9_rows() {
  SurfaceModel p2 = SurfaceModel::blowup_p2(0);
  std::vector<SurfaceCase> rows;

  SurfaceCase nonsplit{SurfaceTable::dp9, "nonsplit", "SB(A)", 3, 1, p2,
                       spec("A", "k", 1, 3, std::nullopt, 3, 3, "O(1)^3",
                            copies({{1}}, 3)),
                       spec("A^-1", "k", 1, 3, std::nullopt, 12, 3, "O(2)^3",
                            copies({{2}}, 3)),
                       "Severi-Brauer surface of a degree 3 division algebra; "
                       "minimal and nonrational"};
  SurfaceCase split{SurfaceTable::dp9, "split", "P^2", 1, 1, p2,
                    spec("k", "k", 1, 1, std::nullopt, 0, 1, "O(1)", {{1}}),
                    spec("k", "k", 1, 1, std::nullopt, 0, 1, "O(2)", {{2}}),
                    "the projective plane"};
  rows.push_back(nonsplit);
  rows.push_back(split);
  return rows;
}

std::vector<SurfaceCase> degree8_rows() {
  SurfaceModel q = SurfaceModel::quadric();
  // Spinor-type and hyperplane-type split shapes shared across the rows.
  std::vector<DivisorClass> spin{{1, 0}, {0, 1}};
  const char* spin1 = "O(1,0) + O(0,1)";
  const char* spin2 = "(O(1,0) + O(0,1))^2";
  std::vector<DivisorClass> hyp{{1, 1}};

  auto row = [&](std::string label, std::string surf, ll ind, int rho,
                 BundleSpec v1, BundleSpec v2, std::string note) {
    return SurfaceCase{SurfaceTable::dp8, std::move(label), std::move(surf),
                       ind,  rho,         q,
                       std::move(v1),     std::move(v2),    std::move(note)};
  };

  std::vector<SurfaceCase> rows;
  rows.push_back(row(
      "8.1", "S in SB(A)", 4, 1,
      spec("C_0", "l", 2, 2, std::nullopt, 4, 4, spin2, copies(spin, 2)),
      spec("A", "k", 1, 4, 2, 12, 4, "O(1,1)^4", copies(hyp, 4)),
      "degree 2 divisor in the Severi-Brauer threefold SB(A); the surface "
      "index equals ind(A)"));
  rows.push_back(row(
      "8.2", "SB(B) x SB(B')", 4, 2,
      spec("B x B'", "k^2", 2, 2, std::nullopt, 4, 4, spin2, copies(spin, 2)),
      spec("B (x) B'", "k", 1, 4, 2, 12, 4, "O(1,1)^4", copies(hyp, 4)),
      "product of nonisomorphic Severi-Brauer curves, B (x) B' of index 4"));
  rows.push_back(row(
      "8.3", "S in SB(A)", 2, 1,
      spec("C_0", "l", 2, 2, std::nullopt, 4, 4, spin2, copies(spin, 2)),
      spec("A", "k", 1, 2, 2, 2, 2, "O(1,1)^2", copies(hyp, 2)),
      "degree 2 divisor in the Severi-Brauer threefold SB(A); the surface "
      "index equals ind(A)"));
  rows.push_back(row(
      "8.4", "S in P^3", 2, 1,
      spec("C_0", "l", 2, 2, std::nullopt, 4, 4, spin2, copies(spin, 2)),
      spec("k", "k", 1, 1, 1, 0, 1, "O(1,1)", hyp),
      "anisotropic quadric surface of Picard rank 1"));
  rows.push_back(row(
      "8.5", "SB(B) x SB(B')", 2, 2,
      spec("B x B'", "k^2", 2, 2, std::nullopt, 4, 4, spin2, copies(spin, 2)),
      spec("B (x) B'", "k", 1, 2, 2, 2, 2, "O(1,1)^2", copies(hyp, 2)),
      "product of nonisomorphic Severi-Brauer curves, B (x) B' of index 2"));
  rows.push_back(row(
      "8.6", "SB(B) x SB(B)", 2, 2,
      spec("B x B", "k^2", 2, 2, std::nullopt, 4, 4, spin2, copies(spin, 2)),
      spec("k", "k", 1, 1, 1, 0, 1, "O(1,1)", hyp),
      "product of a nonsplit Severi-Brauer curve with itself; an anisotropic "
      "quadric in P^3, birational to case 8.7"));
  rows.push_back(row(
      "8.7", "SB(B) x P^1", 2, 2,
      spec("B x k", "k^2", 2, 2, std::nullopt, 4, 4, spin2, copies(spin, 2)),
      spec("B", "k", 1, 2, 2, 2, 2, "O(1,1)^2", copies(hyp, 2)),
      "product of a nonsplit Severi-Brauer curve and a line; birational to "
      "case 8.6"));
  rows.push_back(row(
      "8.8", "S in P^3", 1, 1,
      spec("l", "l", 2, 1, std::nullopt, 1, 2, spin1, spin),
      spec("k", "k", 1, 1, 1, 0, 1, "O(1,1)", hyp),
      "isotropic quadric surface of Picard rank 1"));
  rows.push_back(row(
      "8.9", "P^1 x P^1", 1, 2,
      spec("k^2", "k^2", 2, 1, std::nullopt, 1, 2, spin1, spin),
      spec("k", "k", 1, 1, 1, 0, 1, "O(1,1)", hyp),
      "the split quadric"));
  return rows;
}

std::vector<SurfaceCase> degree6_rows() {
  SurfaceModel s = SurfaceModel::blowup_p2(3);
  // Degenerate-conic block O(H-L_i) and hexagon block O(H), O(-K-H).
  std::vector<DivisorClass> conics{{1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}};
  std::vector<DivisorClass> hexes{{1, 0, 0, 0}, {2, -1, -1, -1}};
  // Reduced form: one conic summand stays single, the other two doubled.
  std::vector<DivisorClass> conics_red{{1, -1, 0, 0}, {1, 0, -1, 0},
                                       {1, 0, -1, 0}, {1, 0, 0, -1},
                                       {1, 0, 0, -1}};
  const char* g1 = "O(H-L1) + O(H-L2) + O(H-L3)";
  const char* g2 = "(O(H-L1) + O(H-L2) + O(H-L3))^2";
  const char* gr = "O(H-L1) + (O(H-L2) + O(H-L3))^2";
  const char* f1 = "O(H) + O(-K-H)";
  const char* f3 = "(O(H) + O(-K-H))^3";

  auto row = [&](std::string label, std::string surf, ll ind, int rho,
                 BundleSpec v1, BundleSpec v2, std::string note) {
    return SurfaceCase{SurfaceTable::dp6, std::move(label), std::move(surf),
                       ind,  rho,         s,
                       std::move(v1),     std::move(v2),    std::move(note)};
  };
  auto vK = [&] { return spec("K", "K", 2, 1, std::nullopt, 2, 2, f1, hexes); };
  auto vk2 = [&] {
    return spec("k^2", "k^2", 2, 1, std::nullopt, 2, 2, f1, hexes);
  };
  auto vB = [&] {
    return spec("B", "K", 2, 3, std::nullopt, 24, 6, f3, copies(hexes, 3));
  };

  std::vector<SurfaceCase> rows;
  rows.push_back(row("6.1", "S in R_{K/k} SB(B)", 6, 1,
                     spec("Q", "L", 3, 2, std::nullopt, 12, 6, g2,
                          copies(conics, 2)),
                     vB(), "minimal, Picard rank 1"));
  rows.push_back(row("6.2", "S in R_{K/k} SB(B)", 3, 1,
                     spec("L", "L", 3, 1, std::nullopt, 3, 3, g1, conics),
                     vB(), "minimal, Picard rank 1"));
  rows.push_back(row("6.3", "S in SB(A) x SB(A^-1)", 3, 2,
                     spec("L", "L", 3, 1, std::nullopt, 3, 3, g1, conics),
                     spec("A x A^-1", "k^2", 2, 3, std::nullopt, 24, 6, f3,
                          copies(hexes, 3)),
                     "blow-up of SB(A) in a point of degree 3; resolves the "
                     "Cremona transformation SB(A) --> SB(A^-1)"));
  rows.push_back(row("6.4", "S in R_{K/k} P^2", 2, 1,
                     spec("Q", "L", 3, 2, std::nullopt, 12, 6, g2,
                          copies(conics, 2)),
                     vK(), "minimal, Picard rank 1"));
  rows.push_back(row("6.5", "S in R_{K/k} P^2", 2, 2,
                     spec("Q'' x Q'", "k x L'", 3, 2, std::nullopt, 12, 6, g2,
                          copies(conics, 2)),
                     vK(), "blow-up of case 8.3 in a point of degree 2"));
  rows.push_back(row("6.6", "S in R_{K/k} P^2", 2, 2,
                     spec("k x Q'", "k x L'", 3, 2, std::nullopt, 8, 5, gr,
                          conics_red, true),
                     vK(),
                     "blow-up of case 8.4 (an anisotropic quadric) in a "
                     "point of degree 2"));
  rows.push_back(row("6.7", "S in R_{K/k} P^2", 2, 3,
                     spec("Q' x Q'' x Q'''", "k^3", 3, 2, std::nullopt, 12, 6,
                          g2, copies(conics, 2)),
                     vK(), "blow-up of case 8.5 in a point of degree 2"));
  rows.push_back(row("6.8", "S in R_{K/k} P^2", 2, 3,
                     spec("k x Q' x Q'", "k^3", 3, 2, std::nullopt, 8, 5, gr,
                          conics_red, true),
                     vK(),
                     "blow-up of case 8.6 or 8.7; resolves the birational "
                     "map between them"));
  rows.push_back(row("6.9", "S in R_{K/k} P^2", 1, 1,
                     spec("L", "L", 3, 1, std::nullopt, 3, 3, g1, conics),
                     vK(), "minimal of Picard rank 1, rational"));
  rows.push_back(row("6.10", "S in R_{K/k} P^2", 1, 2,
                     spec("k x L'", "k x L'", 3, 1, std::nullopt, 3, 3, g1,
                          conics),
                     vK(),
                     "blow-up of a rational quadric of Picard rank 1 in a "
                     "point of degree 2; not a blow-up of P^2"));
  rows.push_back(row("6.11", "S in P^2 x P^2", 1, 2,
                     spec("L", "L", 3, 1, std::nullopt, 3, 3, g1, conics),
                     vk2(),
                     "blow-up of P^2 in a point of degree 3; not a blow-up "
                     "of a quadric"));
  rows.push_back(row("6.12", "S in R_{K/k} P^2", 1, 3,
                     spec("k^3", "k^3", 3, 1, std::nullopt, 3, 3, g1, conics),
                     vK(),
                     "blow-up of P^1 x P^1 in a point of degree 2, or of a "
                     "rational rank 1 quadric in two rational points"));
  rows.push_back(row("6.13", "S in P^2 x P^2", 1, 3,
                     spec("k x L'", "k x L'", 3, 1, std::nullopt, 3, 3, g1,
                          conics),
                     vk2(),
                     "blow-up of P^1 x P^1 in a point of degree 2, or of "
                     "P^2 in a rational point and a point of degree 2"));
  rows.push_back(row("6.14", "S in P^2 x P^2", 1, 4,
                     spec("k^3", "k^3", 3, 1, std::nullopt, 3, 3, g1, conics),
                     vk2(), "totally split"));
  return rows;
}

std::vector<SurfaceCase> degree5_rows() {
  SurfaceModel s = SurfaceModel::blowup_p2(4);
  std::vector<DivisorClass> ext{{1, 0, 0, 0, 0}, {2, -1, -1, -1, -1}};
  std::vector<DivisorClass> quint{{1, 0, 0, 0, 0},
                                  {2, 0, -1, -1, -1},
                                  {2, -1, 0, -1, -1},
                                  {2, -1, -1, 0, -1},
                                  {2, -1, -1, -1, 0}};
  SurfaceCase one{SurfaceTable::dp5,
                  "-",
                  "S in P^5",
                  1,
                  1,
                  s,
                  spec("k", "k", 1, 1, std::nullopt, 2, 2,
                       "extension of O(H) by O(-K-H)", ext),
                  spec("l", "l", 5, 1, std::nullopt, 20, 5,
                       "O(H) + O(L1-K-H) + ... + O(L4-K-H)", quint),
                  "always has a rational point, hence rational; l is a field "
                  "exactly when the Picard rank is 1"};
  return {one};
}

void check_row(const SurfaceCase& c) {
  for (const BundleSpec* b : {&c.v1, &c.v2}) {
    KClass k = b->split_class(c.model);
    if (k.rank != b->rank || k.c2 != b->c2)
      throw std::logic_error("surface case " + table_name(c.table) + " " +
                             c.row + ": split shape gives rank " +
                             std::to_string(k.rank) + ", c2 " +
                             std::to_string(k.c2) + "; table says rank " +
                             std::to_string(b->rank) + ", c2 " +
                             std::to_string(b->c2));
  }
}

std::vector<SurfaceCase> build_all() {
  std::vector<SurfaceCase> rows;
  for (auto block : {degree9_rows(), degree8_rows(), degree6_rows(),
                     degree5_rows()})
    rows.insert(rows.end(), block.begin(), block.end());
  for (const SurfaceCase& c : rows) check_row(c);
  return rows;
}

}  // namespace

std::string table_name(SurfaceTable t) {
  switch (t) {
    case SurfaceTable::dp9: return "dp9";
    case SurfaceTable::dp8: return "dp8";
    case SurfaceTable::dp6: return "dp6";
    case SurfaceTable::dp5: return "dp5";
  }
  throw std::logic_error("table_name: bad enum value");
}

KClass BundleSpec::split_class(const SurfaceModel& s) const {
  KClass acc = line_bundle(s, summands.at(0));
  for (size_t i = 1; i < summands.size(); ++i)
    acc = direct_sum(s, acc, line_bundle(s, summands[i]));
  return acc;
}

const std::vector<SurfaceCase>& all_surface_cases() {
  static const std::vector<SurfaceCase> rows = build_all();
  return rows;
}

const SurfaceCase& surface_case(SurfaceTable table, const std::string& row) {
  for (const SurfaceCase& c : all_surface_cases())
    if (c.table == table && c.row == row) return c;
  throw std::invalid_argument("surface_case: no row \"" + row + "\" in " +
                              table_name(table));
}

ll index_from_c2(const SurfaceCase& c, const std::array<ll, 3>& m) {
  KClass omega = line_bundle(c.model, canonical_class(c.model));
  ll g = 0;
  for (ll v : {multiple(c.model, omega, m[0]).c2,
               multiple(c.model, c.v1.split_class(c.model), m[1]).c2,
               multiple(c.model, c.v2.split_class(c.model), m[2]).c2})
    g = std::gcd(g, v);
  return g;
}

std::optional<std::array<ll, 3>> find_multiplicities(const SurfaceCase& c,
                                                     ll m_max) {
  for (ll m2 = 1; m2 <= m_max; ++m2)
    for (ll m1 = 1; m1 <= m_max; ++m1)
      for (ll m0 = 1; m0 <= m_max; ++m0)
        if (index_from_c2(c, {m0, m1, m2}) == c.index)
          return std::array<ll, 3>{m0, m1, m2};
  return std::nullopt;
}

bool two_block_gcd_matches(const SurfaceCase& c) {
  return std::gcd(c.v1.c2, c.v2.c2) == c.index;
}

}  // namespace sodlab
