#pragma once
// Root systems of the blow-up lattices, reflections, finite orbits under a
// chosen group of lattice automorphisms, and invariant combinations.
#include <optional>
#include <vector>

#include "sodlab/piclat.hpp"

namespace sodlab {

// A root: square -2, orthogonal to the canonical class (checked).
struct Root {
  DivisorClass cls;
};

Root make_root(const SurfaceModel& s, const DivisorClass& d);  // validates

// L1-L2, ..., L_{r-1}-L_r, plus H-L1-L2-L3 once r >= 3.  Needs r >= 2.
std::vector<Root> simple_roots(const SurfaceModel& s);

// x + (x.alpha) alpha
DivisorClass reflect(const SurfaceModel& s, const DivisorClass& x,
                     const Root& alpha);

// Explicit lattice automorphism acting by matrix on coordinates.
struct LatticeAut {
  Mat m;
};

LatticeAut aut_from_root(const SurfaceModel& s, const Root& alpha);
// Permutation of the L_i (one-based images), fixing H.
LatticeAut aut_from_l_permutation(const SurfaceModel& s,
                                  const std::vector<int>& image);

// Orbit of a class under the group generated by `gens`, sorted; throws when
// the orbit exceeds `cap`.
std::vector<DivisorClass> orbit(const SurfaceModel& s, const DivisorClass& seed,
                                const std::vector<LatticeAut>& gens,
                                size_t cap = 1000000);

// All roots as the reflection-orbit closure of the simple roots.
std::vector<DivisorClass> root_orbit(const SurfaceModel& s,
                                     size_t cap = 1000000);

// Nonzero integer vector x with sum x_i class_i fixed by every generator,
// or nullopt.  `ranks` ride along so callers can weight the witness.
struct InvariantWitness {
  std::vector<ll> x;
  DivisorClass combination;
  ll weighted_rank_sum = 0;
};
std::optional<InvariantWitness> invariant_combination(
    const SurfaceModel& s, const std::vector<DivisorClass>& classes,
    const std::vector<ll>& ranks, const std::vector<LatticeAut>& gens);

}  // namespace sodlab
