#pragma once
// Picard lattices of rational surface models: an iterated blow-up of the
// plane in r <= 8 points (basis H, L1..Lr, intersection diag(1,-1,..,-1))
// or a smooth quadric (basis H1, H2, intersection antidiag(1,1)).
#include <string>
#include <vector>

#include "sodlab/intmat.hpp"

namespace sodlab {

// Coefficient vector in the fixed basis of the surface model.
using DivisorClass = std::vector<ll>;

enum class SurfaceKind { BlowupP2, Quadric };

struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::BlowupP2;
  int blown_up = 0;  // r, only for BlowupP2

  static SurfaceModel blowup_p2(int r);
  static SurfaceModel quadric();

  int picard_rank() const;
  int degree() const;  // K.K: 9 - r, or 8
  std::string name() const;

  bool operator==(const SurfaceModel&) const = default;
};

// Intersection number of two divisor classes.
ll intersect(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b);

DivisorClass canonical_class(const SurfaceModel& s);

DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass sub(const DivisorClass& a, const DivisorClass& b);
DivisorClass scale(ll c, const DivisorClass& a);
DivisorClass zero_divisor(const SurfaceModel& s);

// chi(O(D)) = 1 + (D.D - D.K)/2; the numerator is always even.
ll rr_chi(const SurfaceModel& s, const DivisorClass& d);

// All divisor classes with D.D = self_int and D.K = k_int, sorted
// lexicographically.  Finite for every surface model handled here.
std::vector<DivisorClass> enumerate_classes(const SurfaceModel& s, ll self_int,
                                            ll k_int);

void check_divisor(const SurfaceModel& s, const DivisorClass& d);  // throws

// Human-readable form in the basis symbols: "2H-L1-L2", "H1+H2", "0".
std::string divisor_str(const SurfaceModel& s, const DivisorClass& d);

}  // namespace sodlab
