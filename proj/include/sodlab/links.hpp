#pragma once
// Link calculus between minimal del Pezzo surfaces: plane homaloidal
// systems, the five 2x2 matrices of degree-preserving links through a
// closed point, and their blow-up resolutions with every divisor identity
// checked exactly.
#include <array>
#include <string>
#include <vector>

#include "sodlab/excol.hpp"
#include "sodlab/piclat.hpp"

namespace sodlab {

// Plane Cremona map of degree n with base points of multiplicities mults;
// the mobile class nH - sum m_i L_i has anticanonical degree 3 and square 1:
//   sum m_i = 3n - 3,   sum m_i^2 = n^2 - 1.
struct HomaloidalSystem {
  ll n = 1;
  std::vector<ll> mults;  // sorted descending

  bool operator==(const HomaloidalSystem&) const = default;
};

// Complete list for exactly r base points (all m_i > 0), multiplicities up
// to reordering; 9(n-1) <= r(n+1) caps the degree.  Sorted by n descending.
std::vector<HomaloidalSystem> homaloidal_systems(int r);

// A link between two surfaces of degree deg_surface through a closed point
// of degree deg_point.  `m` is the printed base-change matrix on the rank-2
// sublattice ((pullback of omega_S), E) -> ((pullback of omega_S'), F) of
// the resolution.  `expansion` is derived from the blow-up model: its
// columns express (pullback of omega_S, E) in the basis
// (pullback of omega_S', F).  The two agree after flipping the sign of both
// second basis vectors: expansion == J m J with J = diag(1,-1).
struct LinkMatrix {
  int deg_surface = 0;
  int deg_point = 0;
  std::array<std::array<ll, 2>, 2> m{};
  std::array<std::array<ll, 2>, 2> expansion{};
};

// The five links between nonisomorphic non-rational surfaces; throws
// std::invalid_argument for any other (deg_surface, deg_point).
LinkMatrix link_matrix(int deg_surface, int deg_point);
const std::vector<LinkMatrix>& all_link_matrices();

// One divisor identity on the resolution, both sides evaluated in the
// (H, L_i) basis; expand_link only returns identities that held exactly.
struct LinkIdentity {
  std::string statement;
  DivisorClass lhs;
  DivisorClass rhs;
};

// Resolution X of a link: sigma contracts onto S, tau onto S'.  e and f
// list the exceptional curves of the full towers X -> S -> (minimal model)
// and X -> S' -> (minimal model); e_total/f_total are the sums entering the
// link matrix, i.e. only the curves over the blown-up closed points.
struct LinkExpansion {
  int deg_surface = 0;
  int deg_point = 0;
  SurfaceModel resolution;
  DivisorClass g;            // tau-side hyperplane pulled back to X
  DivisorClass sigma_omega;  // pullback of omega_S
  DivisorClass tau_omega;    // pullback of omega_S'
  std::vector<DivisorClass> e;
  std::vector<DivisorClass> f;
  DivisorClass e_total;
  DivisorClass f_total;
  std::vector<LinkIdentity> identities;
};

// Builds the blow-up model of a known link and verifies the identities,
// the (-1)-curve arithmetic, the degree bookkeeping and the coordinate
// change against link_matrix; throws std::logic_error if anything fails.
LinkExpansion expand_link(int deg_surface, int deg_point);

// Which exceptional line each f-curve of expand_link is: "L_2" (a blown-up
// point), "L_{1,5}" (the line through two base points), "D" or "D_4" (the
// conic through five base points).
struct FClassAssignment {
  int index = 0;  // 1-based, matches F_i
  DivisorClass cls;
  std::string name;
};

// Names every f-curve and re-solves the defining constraints for the
// degree-6 links; throws std::logic_error if no consistent assignment.
std::vector<FClassAssignment> classify_f_classes(int deg_surface,
                                                 int deg_point);

// Degree-8 conic bundle over a genus-zero curve: four length-one blocks
// labeled k, alpha, beta, alpha(x)beta, realized over the split quadric as
// <O, O(fiber), O(section), O(section+fiber)>.  This shape is the whole
// numerical content of the links that change the fibration structure.
MarkedCollection conic_bundle_four_block();

}  // namespace sodlab
