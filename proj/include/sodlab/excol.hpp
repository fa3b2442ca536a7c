#pragma once
// Ordered collections of K-classes grouped into completely orthogonal
// blocks, numerical mutation operators, and the semiorthogonality checker.
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sodlab/numk.hpp"

namespace sodlab {

// Expected chi(V,V) for a whole block cut out over a bigger base: classes
// coming from an etale algebra of degree e and a division algebra of index i
// contribute e * i^2 in total.  When the block is listed split into n classes
// the total distributes evenly, so each class must have chi(V,V) = e*i^2/n;
// a fully split etale block stores e = n and each class has chi = i^2.
struct DescentMeta {
  ll etale_degree = 1;
  ll brauer_index = 1;
  std::string brauer_label = "k";

  ll expected_self_chi() const { return etale_degree * brauer_index * brauer_index; }
  bool operator==(const DescentMeta&) const = default;
};

// One object of a collection; c1/c2 may be missing for rank-only rows.
struct ClassRecord {
  ll rank = 0;
  std::optional<DivisorClass> c1;
  std::optional<ll> c2;
  std::string name;

  bool full() const { return c1.has_value() && c2.has_value(); }
  KClass kclass() const;  // throws when data incomplete
};

ClassRecord record_of(const KClass& e, std::string name = "");

struct MarkedCollection {
  SurfaceModel surface;
  std::vector<ClassRecord> classes;
  // Half-open index ranges [first, last) partitioning `classes` in order.
  std::vector<std::pair<int, int>> block_bounds;
  std::vector<DescentMeta> descent_meta;  // one per block (or empty)

  int block_of(int class_index) const;
  DescentMeta meta_of_block(int block_index) const;
  void validate() const;  // throws on malformed bounds/meta
};

struct SodReport {
  std::vector<std::optional<bool>> is_numerically_exceptional;
  bool backward_orthogonal = true;
  bool block_internal_orthogonal = true;
  bool length_ok = false;
  int undecided_pairs = 0;  // pairs skipped for missing Chern data
  std::vector<std::vector<std::optional<ll>>> gram;  // chi(V_i, V_j)
  // Determinant of the rows (rank, c1 coords, chi(O, V)) -- integral
  // coordinates on numerical K-theory; +-1 means the classes are a basis.
  std::optional<ll> basis_det;

  bool all_pass() const;
};

SodReport verify_sod(const MarkedCollection& c);

// chi(O, E) helper used for the basis coordinates.
ll chi_from_structure_sheaf(const SurfaceModel& s, const KClass& e);

enum class MutationSide { Left, Right };

// [L_E F] = [F] - chi(E,F) [E]
KClass left_mutate(const SurfaceModel& s, const KClass& e, const KClass& f);
// [R_F E] = [E] - chi(E,F) [F]
KClass right_mutate(const SurfaceModel& s, const KClass& e, const KClass& f);

// Mutate one class through a completely orthogonal block of exceptional
// classes; equals the one-at-a-time mutations in any order (asserted).
KClass mutate_block(const SurfaceModel& s, const std::vector<KClass>& block,
                    const KClass& f, MutationSide side);

KClass serre_twist(const SurfaceModel& s, const KClass& e);  // twist by K

}  // namespace sodlab
