#pragma once
// Twist solvability for block generators over the separable closure: for a
// block of classes V_i and an unknown line-bundle twist M, solve
//
//   sum_i x_i (c1(V_i) + rank(V_i) M) = r K
//
// exactly over the integers, enumerate primitive coefficient vectors x in a
// box, and run the scripted eliminations that decide the rank-one minimal
// surfaces of degrees 4 down to 1.
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sodlab/catalog.hpp"

namespace sodlab {

// One block generator; only rank and c1 enter the twist equation.
struct BlockGen {
  ll rank = 1;
  DivisorClass c1;
  std::string name;
};

// `gauge_coord` pins the witness representative against the canonical shift
// (M, r) -> (M + tK, r + ts): the pinned coordinate of M is reduced into
// [0, |K_j|), so an exceptional-line coordinate is pinned to 0 and the
// H-coordinate to {0, 1, 2}.
struct TwistProblem {
  SurfaceModel surface;
  std::vector<BlockGen> block;
  int gauge_coord = 1;
};

// Block `block_index` of a catalog entry as a twist problem.  Throws
// std::invalid_argument when some class in the block has no recorded c1.
TwistProblem block_problem(const CatalogEntry& e, int block_index,
                           int gauge_coord = 1);

// Solution set of sum_i x_i c1_i + s M = r K for fixed x, s = sum x_i rank_i,
// linear in the unknowns (M, r): empty, or m0/r0 plus the integer span of
// the lattice generators.
struct TwistSolutions {
  bool solvable = false;
  DivisorClass m0;
  ll r0 = 0;
  std::vector<std::pair<DivisorClass, ll>> lattice;
};

TwistSolutions solve_fixed_coefficients(const TwistProblem& p,
                                        const std::vector<ll>& x);

struct TwistWitness {
  std::vector<ll> x;
  DivisorClass m;
  ll r = 0;
};

// Re-verifies sum x_i (c1_i + rank_i m) = r K exactly; throws
// std::logic_error on mismatch.
TwistWitness make_witness(const TwistProblem& p, std::vector<ll> x,
                          DivisorClass m, ll r);

enum class DescentConclusion {
  NoNontrivialGenerator,
  OmegaInBlock,
  SimultaneousDescentImpossible,
};

std::string conclusion_str(DescentConclusion c);

// Witness lists keep at most this many entries; witness_count records the
// full number found in the box.
inline constexpr int kWitnessCap = 64;

struct DescentReport {
  std::string case_id;
  std::vector<TwistWitness> witnesses;
  ll witness_count = 0;
  std::optional<DescentConclusion> conclusion;
  ll search_bound = 0;
  std::vector<std::string> notes;
};

// Enumerates primitive x (gcd of entries 1, first nonzero entry positive)
// with |x_i| <= bound in lexicographic order and records every solvable
// system as a witness in its gauge representative.  A report with no
// witnesses concludes NoNontrivialGenerator (within the box).
DescentReport search_witnesses(const TwistProblem& p, ll bound);

// The scripted minimal-surface cases: "4", "3(i)", "3(ii)", "2(i)", "2(ii)",
// "2(iii)", "1(i)", "1(ii)", "1(iii)", "1(iv)".  Each script re-proves its
// eliminations exactly -- modular certificates for single-generator blocks,
// symbolic minors over the whole twist family for the two-block cases -- and
// confirms them against the bounded search.  A witness where the
// elimination forbids one throws std::runtime_error.
DescentReport check_case(const std::string& case_id, ll bound);

const std::vector<std::string>& descent_case_ids();

}  // namespace sodlab
