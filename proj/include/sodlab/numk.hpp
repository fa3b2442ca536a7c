#pragma once
// Numerical K-theory classes (rank, c1, c2) with the Euler pairing
//   chi(E,F) = rE rF + (rE t2F + rF t2E)/2 - c1E.c1F - K.(rE c1F - rF c1E)/2
// where t2 = c1^2 - 2 c2 (twice the second Chern character).
#include <string>

#include "sodlab/piclat.hpp"

namespace sodlab {

struct KClass {
  ll rank = 0;
  DivisorClass c1;
  ll c2 = 0;

  bool operator==(const KClass&) const = default;
};

ll two_ch2(const SurfaceModel& s, const KClass& e);  // c1^2 - 2 c2

// Linear coordinates (rank, c1, t2); every slot is additive, so integer
// combinations of K-classes stay inside them.
struct KVec {
  ll rank = 0;
  DivisorClass c1;
  ll t2 = 0;
};
KVec to_kvec(const SurfaceModel& s, const KClass& e);
// Rejects data whose c2 = (c1^2 - t2)/2 is not an integer.
KClass from_kvec(const SurfaceModel& s, const KVec& v);

ll euler_pairing(const SurfaceModel& s, const KClass& e, const KClass& f);

KClass line_bundle(const SurfaceModel& s, const DivisorClass& d);
KClass trivial_bundle(const SurfaceModel& s);

// Structure sheaf of a curve in |c|, pushed forward: rank 0, c1 = c,
// c2 = (c.c + c.K)/2 (so a (-1)-curve gives c2 = -1).
KClass curve_sheaf(const SurfaceModel& s, const DivisorClass& c);

KClass direct_sum(const SurfaceModel& s, const KClass& a, const KClass& b);
KClass twist(const SurfaceModel& s, const KClass& e, const DivisorClass& d);
KClass multiple(const SurfaceModel& s, const KClass& e, ll m);  // m >= 1
KClass dual(const SurfaceModel& s, const KClass& e);

// Unique c2 making chi(E,E) = 1 for the given rank and c1; throws when no
// integer solution exists.
KClass chern_from_chi_one(const SurfaceModel& s, ll rank,
                          const DivisorClass& c1);

std::string kclass_str(const KClass& e);

}  // namespace sodlab
