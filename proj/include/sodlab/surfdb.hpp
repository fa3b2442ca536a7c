#pragma once
// Invariant tables for minimal-model del Pezzo surfaces of degree >= 5: per
// case the surface index, Picard rank, and the endomorphism-algebra data and
// Chern numbers of the generators of the two nontrivial blocks, plus the
// split-model shapes those numbers are recomputed from.  The surface index is
// recovered as a gcd of second Chern classes of block generators.
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sodlab/numk.hpp"

namespace sodlab {

enum class SurfaceTable { dp9, dp8, dp6, dp5 };

std::string table_name(SurfaceTable t);

// One generator column group: printed algebra and Chern data together with
// the list of line-bundle classes the generator splits into.  The degree-5
// rank-2 generator is an extension rather than a direct sum, but its graded
// pieces carry the same K-class, so the summand list still applies.
struct BundleSpec {
  std::string algebra_label;
  std::string center_label;
  int center_degree = 1;      // etale degree of the center over the base field
  int algebra_index = 1;
  std::optional<int> period;  // printed only for the second degree-8 group
  ll c2 = 0;
  ll rank = 0;
  std::string shape;  // split form, e.g. "O(1,0)^2 + O(0,1)^2"
  std::vector<DivisorClass> summands;
  // A split direct summand contributes a single copy while the others stay
  // doubled (mixed multiplicities after passing to the reduced bundle).
  bool reduced = false;

  KClass split_class(const SurfaceModel& s) const;
};

struct SurfaceCase {
  SurfaceTable table = SurfaceTable::dp9;
  std::string row;      // "nonsplit", "8.3", "6.11", "-"
  std::string surface;  // ambient/product description
  ll index = 1;
  int picard_rank = 1;
  SurfaceModel model;  // split model the Chern arithmetic runs on
  BundleSpec v1, v2;
  std::string geometric_note;
};

// All rows (2 + 9 + 14 + 1); every bundle's printed (c2, rank) pair is checked
// against its summand recomputation when the list is first built.
const std::vector<SurfaceCase>& all_surface_cases();

// Lookup; throws std::invalid_argument on an unknown row label.
const SurfaceCase& surface_case(SurfaceTable table, const std::string& row);

// gcd of the second Chern classes of omega^m0, V1^m1, V2^m2, with zero
// entries absorbed: gcd(a, 0) = a.  Requires m_i >= 1.
ll index_from_c2(const SurfaceCase& c, const std::array<ll, 3>& m);

// First multiplicity triple whose gcd equals the stored index, scanning in
// lexicographic (m2, m1, m0) order so the structure-sheaf block multiplier is
// the one that grows first; nullopt when nothing with entries <= m_max works.
std::optional<std::array<ll, 3>> find_multiplicities(const SurfaceCase& c,
                                                     ll m_max);

// Whether gcd(c2(V1), c2(V2)) alone already gives the index.
bool two_block_gcd_matches(const SurfaceCase& c);

}  // namespace sodlab
