#include "sodlab/excol.hpp"

#include <cmath>
#include <stdexcept>

namespace sodlab {

KClass ClassRecord::kclass() const {
  if (!full())
    throw std::domain_error("class record '" + name +
                            "' has incomplete Chern data");
  return KClass{rank, *c1, *c2};
}

ClassRecord record_of(const KClass& e, std::string name) {
  return ClassRecord{e.rank, e.c1, e.c2, std::move(name)};
}

int MarkedCollection::block_of(int class_index) const {
  for (size_t b = 0; b < block_bounds.size(); ++b)
    if (class_index >= block_bounds[b].first &&
        class_index < block_bounds[b].second)
      return static_cast<int>(b);
  throw std::out_of_range("class index outside every block");
}

DescentMeta MarkedCollection::meta_of_block(int block_index) const {
  if (descent_meta.empty()) return DescentMeta{};
  return descent_meta.at(block_index);
}

void MarkedCollection::validate() const {
  int expect = 0;
  for (const auto& [lo, hi] : block_bounds) {
    if (lo != expect || hi <= lo)
      throw std::invalid_argument("block bounds must partition the class list in order");
    expect = hi;
  }
  if (expect != static_cast<int>(classes.size()))
    throw std::invalid_argument("block bounds do not cover every class");
  if (!descent_meta.empty() && descent_meta.size() != block_bounds.size())
    throw std::invalid_argument("need one descent annotation per block");
  for (size_t b = 0; b < block_bounds.size(); ++b) {
    ll size = block_bounds[b].second - block_bounds[b].first;
    if (meta_of_block(static_cast<int>(b)).expected_self_chi() % size != 0)
      throw std::invalid_argument(
          "block " + std::to_string(b) +
          ": declared chi(V,V) does not distribute over its classes");
  }
  for (const ClassRecord& c : classes)
    if (c.c1) check_divisor(surface, *c.c1);
}

ll chi_from_structure_sheaf(const SurfaceModel& s, const KClass& e) {
  return euler_pairing(s, trivial_bundle(s), e);
}

namespace {

std::optional<ll> pair_or_null(const SurfaceModel& s, const ClassRecord& a,
                               const ClassRecord& b) {
  if (!a.full() || !b.full()) return std::nullopt;
  return euler_pairing(s, a.kclass(), b.kclass());
}

}  // namespace

SodReport verify_sod(const MarkedCollection& c) {
  c.validate();
  const SurfaceModel& s = c.surface;
  int n = static_cast<int>(c.classes.size());
  SodReport rep;
  rep.gram.assign(n, std::vector<std::optional<ll>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rep.gram[i][j] = pair_or_null(s, c.classes[i], c.classes[j]);

  for (int i = 0; i < n; ++i) {
    if (!rep.gram[i][i]) {
      rep.is_numerically_exceptional.push_back(std::nullopt);
      continue;
    }
    int b = c.block_of(i);
    ll size = c.block_bounds[b].second - c.block_bounds[b].first;
    ll want = c.meta_of_block(b).expected_self_chi() / size;
    rep.is_numerically_exceptional.push_back(*rep.gram[i][i] == want);
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!rep.gram[i][j]) {
        ++rep.undecided_pairs;
        continue;
      }
      if (j > i && *rep.gram[j][i] != 0) rep.backward_orthogonal = false;
      if (c.block_of(i) == c.block_of(j) && *rep.gram[i][j] != 0)
        rep.block_internal_orthogonal = false;
    }

  rep.length_ok = n == 12 - s.degree();

  bool all_full = true;
  for (const ClassRecord& r : c.classes) all_full &= r.full();
  if (all_full && n == s.picard_rank() + 2) {
    Mat rows;
    for (const ClassRecord& r : c.classes) {
      Row row{r.rank};
      for (ll x : *r.c1) row.push_back(x);
      row.push_back(chi_from_structure_sheaf(s, r.kclass()));
      rows.push_back(row);
    }
    rep.basis_det = det(rows);
  }
  return rep;
}

bool SodReport::all_pass() const {
  for (const auto& e : is_numerically_exceptional)
    if (!e || !*e) return false;
  return backward_orthogonal && block_internal_orthogonal && length_ok &&
         undecided_pairs == 0 && basis_det && std::llabs(*basis_det) == 1;
}

namespace {

KClass combine(const SurfaceModel& s, const KClass& f, ll coeff,
               const KClass& e) {
  // f - coeff * e in the linear coordinates
  KVec vf = to_kvec(s, f), ve = to_kvec(s, e);
  return from_kvec(s, KVec{vf.rank - coeff * ve.rank,
                           sub(vf.c1, scale(coeff, ve.c1)),
                           vf.t2 - coeff * ve.t2});
}

}  // namespace

KClass left_mutate(const SurfaceModel& s, const KClass& e, const KClass& f) {
  return combine(s, f, euler_pairing(s, e, f), e);
}

KClass right_mutate(const SurfaceModel& s, const KClass& e, const KClass& f) {
  return combine(s, e, euler_pairing(s, e, f), f);
}

KClass mutate_block(const SurfaceModel& s, const std::vector<KClass>& block,
                    const KClass& f, MutationSide side) {
  for (size_t i = 0; i < block.size(); ++i) {
    if (euler_pairing(s, block[i], block[i]) != 1)
      throw std::invalid_argument("invalid block: chi(V,V) != 1 at position " +
                                  std::to_string(i));
    for (size_t j = 0; j < block.size(); ++j)
      if (i != j && euler_pairing(s, block[i], block[j]) != 0)
        throw std::invalid_argument(
            "invalid block: classes " + std::to_string(i) + " and " +
            std::to_string(j) + " are not orthogonal");
  }

  KClass closed = f;
  for (const KClass& e : block) {
    ll coeff = side == MutationSide::Left ? euler_pairing(s, e, f)
                                          : euler_pairing(s, f, e);
    closed = combine(s, closed, coeff, e);
  }

  // One-at-a-time mutations agree in any order over an orthogonal block.
  for (bool reversed : {false, true}) {
    KClass step = f;
    for (size_t t = 0; t < block.size(); ++t) {
      const KClass& e = block[reversed ? block.size() - 1 - t : t];
      step = side == MutationSide::Left ? left_mutate(s, e, step)
                                        : right_mutate(s, step, e);
    }
    if (!(step == closed))
      throw std::logic_error("mutate_block: iterated mutation disagrees with closed form");
  }
  return closed;
}

KClass serre_twist(const SurfaceModel& s, const KClass& e) {
  return twist(s, e, canonical_class(s));
}

}  // namespace sodlab
