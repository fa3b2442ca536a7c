#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "sodlab/catalog.hpp"

using namespace sodlab;

namespace {

std::vector<int> block_sizes(const CatalogEntry& e) {
  std::vector<int> v;
  for (const CatBlock& b : e.blocks) v.push_back(static_cast<int>(b.classes.size()));
  return v;
}

std::vector<ll> printed_ranks(const CatalogEntry& e) {
  std::vector<ll> v;
  for (const CatBlock& b : e.blocks) v.push_back(b.printed_rank);
  return v;
}

int total_classes(const CatalogEntry& e) {
  int n = 0;
  for (const CatBlock& b : e.blocks) n += static_cast<int>(b.classes.size());
  return n;
}

}  // namespace

TEST_CASE("table row shapes: block sizes and per-object ranks") {
  // (degree, variant) -> three (count, rank) pairs
  struct Row {
    int degree;
    const char* variant;
    std::vector<int> sizes;
    std::vector<ll> ranks;
  };
  const std::vector<Row> rows = {
      {9, "", {1, 1, 1}, {1, 1, 1}},       {8, "inv", {1, 2, 1}, {1, 1, 1}},
      {6, "", {1, 2, 3}, {1, 1, 1}},       {5, "", {1, 1, 5}, {1, 2, 1}},
      {4, "", {2, 2, 4}, {1, 1, 1}},       {3, "i", {3, 3, 3}, {1, 1, 1}},
      {3, "ii", {1, 2, 6}, {2, 1, 1}},     {2, "i", {1, 1, 8}, {2, 2, 1}},
      {2, "ii", {2, 4, 4}, {2, 1, 1}},     {2, "iii", {1, 3, 6}, {3, 1, 1}},
      {1, "i", {1, 1, 9}, {3, 3, 1}},      {1, "ii", {1, 2, 8}, {4, 2, 1}},
      {1, "iii", {2, 3, 6}, {4, 2, 1}},    {1, "iv", {1, 5, 5}, {5, 2, 1}}};
  auto all = all_catalog_entries();
  REQUIRE(all.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].degree);
    CAPTURE(rows[i].variant);
    CatalogEntry e = three_block(rows[i].degree, rows[i].variant);
    CHECK(e.blocks.size() == 3);
    CHECK(block_sizes(e) == rows[i].sizes);
    CHECK(printed_ranks(e) == rows[i].ranks);
    CHECK(total_classes(e) == 12 - rows[i].degree);
    CHECK(all[i].label() == e.label());
    // carried metadata only: the etale degree matches the class count
    for (const CatBlock& b : e.blocks)
      CHECK(b.meta.etale_degree == static_cast<ll>(b.classes.size()));
  }
}

TEST_CASE("degrees without a three-block decomposition") {
  CHECK_THROWS_AS(three_block(7), std::domain_error);
  CHECK_THROWS_AS(three_block(7, "anything"), std::domain_error);
  CHECK_THROWS_AS(three_block(8, "dP"), std::domain_error);
  CHECK_THROWS_WITH(three_block(7), "no 3-block decomposition");
  // ambiguous or unknown rows
  CHECK_THROWS_AS(three_block(8), std::invalid_argument);
  CHECK_THROWS_AS(three_block(3), std::invalid_argument);
  CHECK_THROWS_AS(three_block(3, "iv"), std::invalid_argument);
  CHECK_THROWS_AS(three_block(5, "i"), std::invalid_argument);
  CHECK_THROWS_AS(three_block(10), std::invalid_argument);
  CHECK_THROWS_AS(three_block(0), std::invalid_argument);
}

TEST_CASE("degree 9 and degree 5 rows match their stated classes") {
  CatalogEntry e9 = three_block(9);
  CHECK(e9.surface == SurfaceModel::blowup_p2(0));
  CHECK(e9.blocks[0].classes[0].c1 == DivisorClass{0});
  CHECK(e9.blocks[1].classes[0].c1 == DivisorClass{1});
  CHECK(e9.blocks[2].classes[0].c1 == DivisorClass{2});
  CHECK(e9.complete);

  CatalogEntry e5 = three_block(5);
  CHECK(e5.surface == SurfaceModel::blowup_p2(4));
  const CatClass& f = e5.blocks[1].classes[0];
  CHECK(f.rank == 2);
  CHECK(*f.c1 == DivisorClass{3, -1, -1, -1, -1});  // -K
  CHECK(*f.c2 == 2);
  CHECK(f.c2_origin == "derived(chi=1)");
  // O(H) and the four conic twists O(L_i - K - H)
  std::vector<DivisorClass> g;
  for (const CatClass& c : e5.blocks[2].classes) g.push_back(*c.c1);
  std::vector<DivisorClass> want = {{1, 0, 0, 0, 0},
                                    {2, 0, -1, -1, -1},
                                    {2, -1, 0, -1, -1},
                                    {2, -1, -1, 0, -1},
                                    {2, -1, -1, -1, 0}};
  CHECK(g == want);
}

TEST_CASE("derived second Chern classes") {
  auto c2_of = [](int degree, const char* variant, int block, int idx) {
    return three_block(degree, variant).blocks[block].classes[idx];
  };
  CHECK(*c2_of(3, "ii", 0, 0).c2 == 1);   // rank 2, c1 = H
  CHECK(*c2_of(2, "i", 1, 0).c2 == 1);    // same shape one point up
  CHECK(*c2_of(2, "ii", 0, 0).c2 == 0);   // rank 2, c1 = H+K
  CHECK(*c2_of(2, "ii", 0, 1).c2 == 0);   // rank 2, c1 = -H+L4+..+L7
  CHECK(*c2_of(2, "iii", 0, 0).c2 == 0);  // rank 3, c1 = L4+..+L7
  CHECK(*c2_of(1, "i", 0, 0).c2 == 7);    // rank 3, c1 = -H+2K
  CHECK(*c2_of(1, "iv", 0, 0).c2 == 10);  // rank 5, c1 = -2K+L4+..+L8

  // rank 4 with c1 = 2H-L1-L2-L3 admits no integral c2 with chi(V,V) = 1
  const CatClass& e8p = c2_of(1, "ii", 0, 0);
  CHECK(e8p.rank == 4);
  CHECK(e8p.c1.has_value());
  CHECK_FALSE(e8p.c2.has_value());
  CHECK(e8p.c2_origin == "unstated");
  CHECK_FALSE(e8p.note.empty());
  CHECK_THROWS_AS(
      chern_from_chi_one(SurfaceModel::blowup_p2(8), 4,
                         DivisorClass{2, -1, -1, -1, 0, 0, 0, 0, 0}),
      std::domain_error);
}

TEST_CASE("every complete row verifies as a full decomposition") {
  std::set<std::string> complete, expect = {"9",    "8(inv)", "6",
                                            "5",    "4",      "3(i)",
                                            "3(ii)", "2(ii)",  "2(iii)"};
  for (const CatalogEntry& e : all_catalog_entries()) {
    if (!e.complete) continue;
    complete.insert(e.label());
    SodReport rep = verify_sod(e.as_marked());
    CAPTURE(e.label());
    CHECK(rep.all_pass());
    CHECK(rep.length_ok);
    REQUIRE(rep.basis_det.has_value());
    CHECK(std::abs(*rep.basis_det) == 1);
  }
  CHECK(complete == expect);
}

TEST_CASE("partial rows: decided pairs still verify except where recorded") {
  for (const char* v : {"i", "ii", "iii"}) {
    CatalogEntry e = three_block(v == std::string("i") ? 2 : 1, v);
    CAPTURE(e.label());
    SodReport rep = verify_sod(e.as_marked());
    CHECK_FALSE(e.complete);
    CHECK(rep.undecided_pairs > 0);
    CHECK(rep.backward_orthogonal);
    CHECK(rep.block_internal_orthogonal);
    CHECK(rep.length_ok);
  }
  CatalogEntry e1i = three_block(1, "i");
  SodReport rep1i = verify_sod(e1i.as_marked());
  CHECK(rep1i.backward_orthogonal);
  CHECK(rep1i.block_internal_orthogonal);
  CHECK(rep1i.undecided_pairs > 0);
  // the canonical-sign repair on the nine-line block is recorded
  CHECK(e1i.blocks[2].classes[0].name == "O(K)");
  CHECK_FALSE(e1i.blocks[2].classes[0].note.empty());

  // degree 1 (iv) is inconsistent as stated; we keep it verbatim
  CatalogEntry e1iv = three_block(1, "iv");
  SodReport rep1iv = verify_sod(e1iv.as_marked());
  CHECK_FALSE(rep1iv.backward_orthogonal);
  CHECK(rep1iv.block_internal_orthogonal);
  CHECK_FALSE(e1iv.notes.empty());

  // degree 1 (iii): the printed per-object rank admits no Chern data
  CatalogEntry e1iii = three_block(1, "iii");
  CHECK(e1iii.blocks[0].printed_rank == 4);
  for (const CatClass& c : e1iii.blocks[0].classes) {
    CHECK(c.rank == 3);
    CHECK(*c.c2 == 0);
    CHECK_FALSE(c.note.empty());
  }
}

TEST_CASE("replay of the cubic-case link calculation") {
  auto steps = replay_dp6("deg3");
  REQUIRE(steps.size() == 7);
  const std::vector<std::string> labels = {"equa1", "equa2", "equa3", "equa4",
                                           "equa5", "equa6", "equa7"};
  for (size_t i = 0; i < labels.size(); ++i) CHECK(steps[i].label == labels[i]);

  SurfaceModel s = steps[0].state.surface;
  CHECK(s == SurfaceModel::blowup_p2(6));

  // every stage is at least backward- and block-orthogonal
  for (const ReplayStep& st : steps) {
    CAPTURE(st.label);
    CHECK(st.report.backward_orthogonal);
    CHECK(st.report.block_internal_orthogonal);
    CHECK(st.report.undecided_pairs == 0);
  }

  // the re-expression stage contains O(2K + 2H - L1 - L2 - L3)
  DivisorClass K = canonical_class(s);
  DivisorClass target = add(scale(2, K), DivisorClass{2, -1, -1, -1, 0, 0, 0});
  bool found = false;
  for (const ClassRecord& c : steps[4].state.classes)
    found |= c.rank == 1 && *c.c1 == target && *c.c2 == 0;
  CHECK(found);

  // the torsion stage adjoined three curve classes
  int torsion = 0;
  for (const ClassRecord& c : steps[2].state.classes) torsion += c.rank == 0;
  CHECK(torsion == 3);

  // the rotated stage is a full decomposition of the cubic surface
  CHECK(steps[5].report.all_pass());
  CHECK(steps[5].state.classes.size() == 9);
  std::vector<DivisorClass> final_c1;
  for (const ClassRecord& c : steps[5].state.classes) final_c1.push_back(*c.c1);
  std::vector<DivisorClass> want = {
      {0, 0, 0, 0, 1, 0, 0},  {0, 0, 0, 0, 0, 1, 0},  {0, 0, 0, 0, 0, 0, 1},
      {1, -1, 0, 0, 0, 0, 0}, {1, 0, -1, 0, 0, 0, 0}, {1, 0, 0, -1, 0, 0, 0},
      {3, -1, -1, -1, -1, -1, -1},
      {2, -1, -1, -1, 0, 0, 0},
      {1, 0, 0, 0, 0, 0, 0}};
  CHECK(final_c1 == want);

  // labels travel with the blocks: one extra function-field label appears at
  // the blow-up stage, afterwards the multiset is constant
  auto labels_of = [](const MarkedCollection& m) {
    std::vector<std::string> v;
    for (const DescentMeta& d : m.descent_meta) v.push_back(d.brauer_label);
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(labels_of(steps[0].state) ==
        std::vector<std::string>{"B'", "Q'", "k"});
  CHECK(labels_of(steps[2].state) ==
        std::vector<std::string>{"B'", "Q'", "k", "k(x')/k"});
  CHECK(labels_of(steps[5].state) == labels_of(steps[2].state));
}

TEST_CASE("replay of the index-two link calculation") {
  auto steps = replay_dp6("deg2");
  REQUIRE(steps.size() == 7);
  CHECK(steps[0].label == "equa1t");
  CHECK(steps[6].label == "equa7t");
  SurfaceModel s = steps[0].state.surface;
  CHECK(s == SurfaceModel::blowup_p2(5));

  // final stage: O | O(L4), O(L5) | O(H-L1..3) | O(2H-L1-L2-L3), O(H)
  const MarkedCollection& fin = steps[5].state;
  CHECK(steps[5].report.all_pass());
  REQUIRE(fin.classes.size() == 8);
  std::vector<DivisorClass> final_c1;
  for (const ClassRecord& c : fin.classes) final_c1.push_back(*c.c1);
  std::vector<DivisorClass> want = {
      {0, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 1, 0},  {0, 0, 0, 0, 0, 1},
      {1, -1, 0, 0, 0, 0}, {1, 0, -1, 0, 0, 0}, {1, 0, 0, -1, 0, 0},
      {2, -1, -1, -1, 0, 0}, {1, 0, 0, 0, 0, 0}};
  CHECK(final_c1 == want);
  REQUIRE(fin.block_bounds.size() == 4);
  CHECK(fin.block_bounds[0] == std::pair<int, int>{0, 1});
  CHECK(fin.block_bounds[1] == std::pair<int, int>{1, 3});
  CHECK(fin.block_bounds[2] == std::pair<int, int>{3, 6});
  CHECK(fin.block_bounds[3] == std::pair<int, int>{6, 8});

  // the torsion stage adjoined two curve classes
  int torsion = 0;
  for (const ClassRecord& c : steps[2].state.classes) torsion += c.rank == 0;
  CHECK(torsion == 2);

  CHECK_THROWS_AS(replay_dp6("deg5"), std::invalid_argument);
}

TEST_CASE("quintic point construction checks") {
  Dp5Report r = replay_dp5();
  CHECK(r.pullback_h_identity);
  CHECK(r.pullback_line_identities);
  CHECK(r.block_orthogonal);
  CHECK(r.v.rank == 5);
  CHECK(r.v.c2 == 20);
  CHECK(r.v_is_rank5_c2_20);
  CHECK(r.v_matches_canonical_twist);
  CHECK(r.four_block.all_pass());
  CHECK(r.four_block_rotated.all_pass());
  CHECK(r.all_pass());

  // spot checks from the construction
  SurfaceModel s = SurfaceModel::blowup_p2(5);
  DivisorClass K = canonical_class(s);
  KClass a = line_bundle(s, sub(scale(-1, K), DivisorClass{0, 1, 0, 0, 0, 0}));
  KClass b = line_bundle(s, sub(scale(-1, K), DivisorClass{0, 0, 1, 0, 0, 0}));
  CHECK(euler_pairing(s, a, b) == 0);
  CHECK(euler_pairing(s, b, a) == 0);
  CHECK(euler_pairing(s, a, a) == 1);
  // e*H + K + E5 = 0
  DivisorClass eh = {3, -1, -1, -1, -1, -2};
  CHECK(add(add(eh, K), DivisorClass{0, 0, 0, 0, 0, 1}) == zero_divisor(s));
}
