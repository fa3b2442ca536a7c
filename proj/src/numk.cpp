#include "sodlab/numk.hpp"

#include <stdexcept>

namespace sodlab {

ll two_ch2(const SurfaceModel& s, const KClass& e) {
  return intersect(s, e.c1, e.c1) - 2 * e.c2;
}

KVec to_kvec(const SurfaceModel& s, const KClass& e) {
  check_divisor(s, e.c1);
  return KVec{e.rank, e.c1, two_ch2(s, e)};
}

KClass from_kvec(const SurfaceModel& s, const KVec& v) {
  check_divisor(s, v.c1);
  ll num = intersect(s, v.c1, v.c1) - v.t2;
  if (num % 2 != 0)
    throw std::domain_error("no integral c2: c1^2 - t2 = " +
                            std::to_string(num) + " is odd");
  return KClass{v.rank, v.c1, num / 2};
}

ll euler_pairing(const SurfaceModel& s, const KClass& e, const KClass& f) {
  KVec a = to_kvec(s, e), b = to_kvec(s, f);
  DivisorClass k = canonical_class(s);
  ll mixed = intersect(s, k, sub(scale(a.rank, b.c1), scale(b.rank, a.c1)));
  ll twice = 2 * a.rank * b.rank + a.rank * b.t2 + b.rank * a.t2 -
             2 * intersect(s, a.c1, b.c1) - mixed;
  if (twice % 2 != 0)
    throw std::logic_error("euler_pairing: odd value, lattice data corrupted");
  return twice / 2;
}

KClass line_bundle(const SurfaceModel& s, const DivisorClass& d) {
  check_divisor(s, d);
  return KClass{1, d, 0};
}

KClass trivial_bundle(const SurfaceModel& s) {
  return line_bundle(s, zero_divisor(s));
}

KClass curve_sheaf(const SurfaceModel& s, const DivisorClass& c) {
  // [O_C] = [O] - [O(-C)], so rank 0, c1 = C, t2 = -C.C, c2 = C.C.
  check_divisor(s, c);
  return KClass{0, c, intersect(s, c, c)};
}

KClass direct_sum(const SurfaceModel& s, const KClass& a, const KClass& b) {
  check_divisor(s, a.c1);
  check_divisor(s, b.c1);
  return KClass{a.rank + b.rank, add(a.c1, b.c1),
                a.c2 + b.c2 + intersect(s, a.c1, b.c1)};
}

KClass twist(const SurfaceModel& s, const KClass& e, const DivisorClass& d) {
  check_divisor(s, e.c1);
  check_divisor(s, d);
  ll r = e.rank;
  ll c2 = e.c2 + (r - 1) * intersect(s, e.c1, d) +
          r * (r - 1) / 2 * intersect(s, d, d);
  return KClass{r, add(e.c1, scale(r, d)), c2};
}

KClass multiple(const SurfaceModel& s, const KClass& e, ll m) {
  check_divisor(s, e.c1);
  if (m <= 0)
    throw std::invalid_argument("multiple: need m >= 1, got " +
                                std::to_string(m));
  return KClass{m * e.rank, scale(m, e.c1),
                m * e.c2 + m * (m - 1) / 2 * intersect(s, e.c1, e.c1)};
}

KClass dual(const SurfaceModel& s, const KClass& e) {
  check_divisor(s, e.c1);
  return KClass{e.rank, scale(-1, e.c1), e.c2};
}

KClass chern_from_chi_one(const SurfaceModel& s, ll rank,
                          const DivisorClass& c1) {
  check_divisor(s, c1);
  if (rank == 0)
    throw std::domain_error("chern_from_chi_one: rank 0 cannot have chi(E,E)=1");
  // chi(E,E) = rank^2 + rank*t2 - c1^2 = 1
  ll num = 1 + intersect(s, c1, c1) - rank * rank;
  if (num % rank != 0)
    throw std::domain_error("chern_from_chi_one: t2 = " + std::to_string(num) +
                            "/" + std::to_string(rank) + " is not an integer");
  return from_kvec(s, KVec{rank, c1, num / rank});
}

std::string kclass_str(const KClass& e) {
  std::string out = "(" + std::to_string(e.rank) + ", [";
  for (size_t i = 0; i < e.c1.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e.c1[i]);
  }
  return out + "], " + std::to_string(e.c2) + ")";
}

}  // namespace sodlab
