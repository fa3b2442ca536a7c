#pragma once
// The table of three-block decompositions of split del Pezzo surfaces and a
// replayer for the mutation sequences that relate three-block data across the
// degree-6 link constructions and the quintic point construction.
#include <optional>
#include <string>
#include <vector>

#include "sodlab/excol.hpp"

namespace sodlab {

struct CatClass {
  ll rank = 1;
  std::optional<DivisorClass> c1;
  std::optional<ll> c2;
  std::string c2_origin;  // "stated" | "derived(chi=1)" | "unstated"
  std::string name;
  std::string note;  // deviations or caveats, empty otherwise

  bool full() const { return c1.has_value() && c2.has_value(); }
};

struct CatBlock {
  std::vector<CatClass> classes;
  ll printed_rank = 1;  // the table's per-object rank column
  DescentMeta meta;
};

struct CatalogEntry {
  int degree = 0;
  std::string variant;  // "", "inv", or a roman numeral "i".."iv"
  SurfaceModel surface;
  std::vector<CatBlock> blocks;  // always three
  bool complete = false;         // every class carries full Chern data
  std::string notes;

  std::string label() const;  // "9", "8(inv)", "3(ii)", ...
  MarkedCollection as_marked() const;
};

// Lookup by degree and variant.  Degree 7, and degree 8 in its blown-up form
// ("dP"), admit no such decomposition and throw std::domain_error; unknown
// degree/variant combinations throw std::invalid_argument.
CatalogEntry three_block(int degree, const std::string& variant = "");

// Every table row that has a decomposition, in decreasing degree.
std::vector<CatalogEntry> all_catalog_entries();

// One stage of a replayed mutation sequence.
struct ReplayStep {
  std::string label;   // stage tag, e.g. "equa4"
  std::string action;  // the operation that produced this stage
  MarkedCollection state;
  SodReport report;
};

// Replay the two degree-6 link calculations on their resolution surfaces:
// "deg3" runs the cubic-surface case on the blow-up of six points, "deg2"
// the index-two degree-4 case on the blow-up of five.  Every stage is
// re-verified (backward and in-block orthogonality, exceptionality) and
// compared against the asserted class lists; the final stage must be a full
// decomposition.  Any mismatch throws std::runtime_error naming the stage.
std::vector<ReplayStep> replay_dp6(const std::string& kase);

// Checks for the quintic point construction on the blow-up of five points.
struct Dp5Report {
  bool pullback_h_identity = false;        // pulled-back hyperplane = -K-E5
  bool pullback_line_identities = false;   // pulled-back L_i-K_S-H = -K-E_i
  bool block_orthogonal = false;           // the five twisted line bundles
  KClass v;                                // their direct sum
  bool v_is_rank5_c2_20 = false;
  bool v_matches_canonical_twist = false;  // = (sum of O(-E_i)) twisted by -K
  SodReport four_block;          // blow-up piece | O | pulled-back F | block
  SodReport four_block_rotated;  // line bundles | blow-up piece | O | F
  bool all_pass() const;
};

Dp5Report replay_dp5();

}  // namespace sodlab
