#include "sodlab/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace sodlab {

namespace {

CatClass line_cl(const SurfaceModel& s, const DivisorClass& d,
                 std::string name = "") {
  check_divisor(s, d);
  if (name.empty()) name = "O(" + divisor_str(s, d) + ")";
  return CatClass{1, d, 0, "stated", std::move(name), ""};
}

// Bundle whose c2 is pinned down by chi(V,V) = 1.
CatClass derived_cl(const SurfaceModel& s, ll rank, const DivisorClass& c1,
                    std::string name, std::string note = "") {
  KClass e = chern_from_chi_one(s, rank, c1);
  return CatClass{rank, c1, e.c2, "derived(chi=1)", std::move(name),
                  std::move(note)};
}

CatClass rank_only(ll rank, std::string name, std::string note = "") {
  return CatClass{rank, std::nullopt, std::nullopt, "unstated",
                  std::move(name), std::move(note)};
}

CatBlock blk(std::vector<CatClass> cs, ll printed_rank,
             std::string label = "k") {
  CatBlock b;
  b.meta = DescentMeta{static_cast<ll>(cs.size()), 1, std::move(label)};
  b.classes = std::move(cs);
  b.printed_rank = printed_rank;
  return b;
}

CatalogEntry finish(CatalogEntry e) {
  e.complete = true;
  for (const CatBlock& b : e.blocks)
    for (const CatClass& c : b.classes) e.complete &= c.full();
  return e;
}

CatalogEntry deg9() {
  auto s = SurfaceModel::blowup_p2(0);
  CatalogEntry e{9, "", s, {}, false, ""};
  e.blocks = {blk({line_cl(s, {0}, "O")}, 1), blk({line_cl(s, {1})}, 1),
              blk({line_cl(s, {2})}, 1)};
  return finish(e);
}

CatalogEntry deg8inv() {
  auto s = SurfaceModel::quadric();
  CatalogEntry e{8, "inv", s, {}, false, ""};
  e.blocks = {blk({line_cl(s, {0, 0}, "O")}, 1),
              blk({line_cl(s, {1, 0}), line_cl(s, {0, 1})}, 1),
              blk({line_cl(s, {1, 1})}, 1)};
  return finish(e);
}

CatalogEntry deg6() {
  auto s = SurfaceModel::blowup_p2(3);
  CatalogEntry e{6, "", s, {}, false, ""};
  e.blocks = {blk({line_cl(s, {0, 0, 0, 0}, "O")}, 1),
              blk({line_cl(s, {1, 0, 0, 0}), line_cl(s, {2, -1, -1, -1})}, 1),
              blk({line_cl(s, {2, -1, -1, 0}), line_cl(s, {2, -1, 0, -1}),
                   line_cl(s, {2, 0, -1, -1})},
                  1)};
  return finish(e);
}

CatalogEntry deg5() {
  auto s = SurfaceModel::blowup_p2(4);
  CatalogEntry e{5, "", s, {}, false, ""};
  e.blocks = {blk({line_cl(s, {0, 0, 0, 0, 0}, "O")}, 1),
              blk({derived_cl(s, 2, {3, -1, -1, -1, -1}, "F")}, 2),
              // O(H) and the twists O(L_i - K - H), i.e. the four conics
              blk({line_cl(s, {1, 0, 0, 0, 0}), line_cl(s, {2, 0, -1, -1, -1}),
                   line_cl(s, {2, -1, 0, -1, -1}),
                   line_cl(s, {2, -1, -1, 0, -1}),
                   line_cl(s, {2, -1, -1, -1, 0})},
                  1)};
  return finish(e);
}

CatalogEntry deg4() {
  auto s = SurfaceModel::blowup_p2(5);
  CatalogEntry e{4, "", s, {}, false, ""};
  e.blocks = {
      blk({line_cl(s, {0, 0, 0, 0, 1, 0}), line_cl(s, {0, 0, 0, 0, 0, 1})}, 1),
      blk({line_cl(s, {1, 0, 0, 0, 0, 0}), line_cl(s, {2, -1, -1, -1, 0, 0})},
          1),
      blk({line_cl(s, {3, -1, -1, -1, -1, -1}, "O(-K)"),
           line_cl(s, {2, -1, -1, 0, 0, 0}), line_cl(s, {2, -1, 0, -1, 0, 0}),
           line_cl(s, {2, 0, -1, -1, 0, 0})},
          1)};
  return finish(e);
}

CatalogEntry deg3i() {
  auto s = SurfaceModel::blowup_p2(6);
  CatalogEntry e{3, "i", s, {}, false, ""};
  e.blocks = {blk({line_cl(s, {0, 0, 0, 0, 1, 0, 0}),
                   line_cl(s, {0, 0, 0, 0, 0, 1, 0}),
                   line_cl(s, {0, 0, 0, 0, 0, 0, 1})},
                  1),
              blk({line_cl(s, {1, -1, 0, 0, 0, 0, 0}),
                   line_cl(s, {1, 0, -1, 0, 0, 0, 0}),
                   line_cl(s, {1, 0, 0, -1, 0, 0, 0})},
                  1),
              blk({line_cl(s, {3, -1, -1, -1, -1, -1, -1}, "O(-K)"),
                   line_cl(s, {1, 0, 0, 0, 0, 0, 0}),
                   line_cl(s, {2, -1, -1, -1, 0, 0, 0})},
                  1)};
  return finish(e);
}

CatalogEntry deg3ii() {
  auto s = SurfaceModel::blowup_p2(6);
  CatalogEntry e{3, "ii", s, {}, false, ""};
  e.blocks = {blk({derived_cl(s, 2, {1, 0, 0, 0, 0, 0, 0}, "T6")}, 2),
              blk({line_cl(s, {1, 0, 0, 0, 0, 0, 0}),
                   line_cl(s, {3, -1, -1, -1, -1, -1, -1}, "O(-K)")},
                  1),
              blk({line_cl(s, {3, 0, -1, -1, -1, -1, -1}),
                   line_cl(s, {3, -1, 0, -1, -1, -1, -1}),
                   line_cl(s, {3, -1, -1, 0, -1, -1, -1}),
                   line_cl(s, {3, -1, -1, -1, 0, -1, -1}),
                   line_cl(s, {3, -1, -1, -1, -1, 0, -1}),
                   line_cl(s, {3, -1, -1, -1, -1, -1, 0})},
                  1)};
  return finish(e);
}

CatalogEntry deg2i() {
  auto s = SurfaceModel::blowup_p2(7);
  CatalogEntry e{2, "i", s, {}, false, ""};
  e.blocks = {
      blk({rank_only(2, "E7",
                     "c1 not printed on this row; the equally named bundle in "
                     "the degree-2 (ii) row carries c1 = H + K")},
          2),
      blk({derived_cl(s, 2, {1, 0, 0, 0, 0, 0, 0, 0}, "T7")}, 2),
      blk({line_cl(s, {3, -1, -1, -1, -1, -1, -1, -1}, "O(-K)"),
           line_cl(s, {1, -1, 0, 0, 0, 0, 0, 0}),
           line_cl(s, {1, 0, -1, 0, 0, 0, 0, 0}),
           line_cl(s, {1, 0, 0, -1, 0, 0, 0, 0}),
           line_cl(s, {1, 0, 0, 0, -1, 0, 0, 0}),
           line_cl(s, {1, 0, 0, 0, 0, -1, 0, 0}),
           line_cl(s, {1, 0, 0, 0, 0, 0, -1, 0}),
           line_cl(s, {1, 0, 0, 0, 0, 0, 0, -1})},
          1)};
  return finish(e);
}

CatalogEntry deg2ii() {
  auto s = SurfaceModel::blowup_p2(7);
  CatalogEntry e{2, "ii", s, {}, false, ""};
  e.blocks = {
      blk({derived_cl(s, 2, {-2, 1, 1, 1, 1, 1, 1, 1}, "E7"),
           derived_cl(s, 2, {-1, 0, 0, 0, 1, 1, 1, 1}, "E7'")},
          2),
      blk({line_cl(s, {0, 0, 0, 0, 1, 0, 0, 0}),
           line_cl(s, {0, 0, 0, 0, 0, 1, 0, 0}),
           line_cl(s, {0, 0, 0, 0, 0, 0, 1, 0}),
           line_cl(s, {0, 0, 0, 0, 0, 0, 0, 1})},
          1),
      blk({line_cl(s, {3, -1, -1, -1, -1, -1, -1, -1}, "O(-K)"),
           line_cl(s, {1, -1, 0, 0, 0, 0, 0, 0}),
           line_cl(s, {1, 0, -1, 0, 0, 0, 0, 0}),
           line_cl(s, {1, 0, 0, -1, 0, 0, 0, 0})},
          1)};
  return finish(e);
}

CatalogEntry deg2iii() {
  auto s = SurfaceModel::blowup_p2(7);
  CatalogEntry e{2, "iii", s, {}, false, ""};
  e.blocks = {
      blk({derived_cl(s, 3, {0, 0, 0, 0, 1, 1, 1, 1}, "E7''")}, 3),
      blk({line_cl(s, {1, -1, 0, 0, 0, 0, 0, 0}),
           line_cl(s, {1, 0, -1, 0, 0, 0, 0, 0}),
           line_cl(s, {1, 0, 0, -1, 0, 0, 0, 0})},
          1),
      blk({line_cl(s, {1, 0, 0, 0, 0, 0, 0, 0}),
           line_cl(s, {2, -1, -1, -1, 0, 0, 0, 0}),
           line_cl(s, {3, -1, -1, -1, 0, -1, -1, -1}),
           line_cl(s, {3, -1, -1, -1, -1, 0, -1, -1}),
           line_cl(s, {3, -1, -1, -1, -1, -1, 0, -1}),
           line_cl(s, {3, -1, -1, -1, -1, -1, -1, 0})},
          1)};
  return finish(e);
}

CatalogEntry deg1i() {
  auto s = SurfaceModel::blowup_p2(8);
  CatalogEntry e{1, "i", s, {}, false, ""};
  e.blocks = {
      blk({derived_cl(s, 3, {-7, 2, 2, 2, 2, 2, 2, 2, 2}, "E8")}, 3),
      blk({rank_only(3, "F8")}, 3),
      blk({line_cl(s, {-3, 1, 1, 1, 1, 1, 1, 1, 1}, "O(K)"),
           line_cl(s, {0, -1, 0, 0, 0, 0, 0, 0, 0}),
           line_cl(s, {0, 0, -1, 0, 0, 0, 0, 0, 0}),
           line_cl(s, {0, 0, 0, -1, 0, 0, 0, 0, 0}),
           line_cl(s, {0, 0, 0, 0, -1, 0, 0, 0, 0}),
           line_cl(s, {0, 0, 0, 0, 0, -1, 0, 0, 0}),
           line_cl(s, {0, 0, 0, 0, 0, 0, -1, 0, 0}),
           line_cl(s, {0, 0, 0, 0, 0, 0, 0, -1, 0}),
           line_cl(s, {0, 0, 0, 0, 0, 0, 0, 0, -1})},
          1)};
  e.blocks[2].classes[0].note =
      "sign fixed so the block stays orthogonal: chi(O(-K), O(-L_i)) = 1, "
      "while chi(O(K), O(-L_i)) = 0 both ways";
  return finish(e);
}

CatalogEntry deg1ii() {
  auto s = SurfaceModel::blowup_p2(8);
  CatalogEntry e{1, "ii", s, {}, false, ""};
  CatClass e8p = rank_only(4, "E8'",
                           "no integral c2 satisfies chi(V,V) = 1 at rank 4 "
                           "with c1 = 2H-L1-L2-L3; c1 kept, c2 left open");
  e8p.c1 = DivisorClass{2, -1, -1, -1, 0, 0, 0, 0, 0};
  e.blocks = {blk({e8p}, 4),
              blk({rank_only(2, "T8"), rank_only(2, "T8'")}, 2),
              blk({line_cl(s, {3, -1, -1, -1, 0, -1, -1, -1, -1}),
                   line_cl(s, {3, -1, -1, -1, -1, 0, -1, -1, -1}),
                   line_cl(s, {3, -1, -1, -1, -1, -1, 0, -1, -1}),
                   line_cl(s, {3, -1, -1, -1, -1, -1, -1, 0, -1}),
                   line_cl(s, {3, -1, -1, -1, -1, -1, -1, -1, 0}),
                   line_cl(s, {1, -1, 0, 0, 0, 0, 0, 0, 0}),
                   line_cl(s, {1, 0, -1, 0, 0, 0, 0, 0, 0}),
                   line_cl(s, {1, 0, 0, -1, 0, 0, 0, 0, 0})},
                  1)};
  return finish(e);
}

CatalogEntry deg1iii() {
  auto s = SurfaceModel::blowup_p2(8);
  CatalogEntry e{1, "iii", s, {}, false, ""};
  std::string rk_note =
      "stored at rank 3: chi(V,V) = 1 admits no integral c2 at the printed "
      "per-object rank 4, and the rank-3 reading matches the degree-2 (iii) "
      "bundle of the same name";
  e.blocks = {
      blk({derived_cl(s, 3, {0, 0, 0, 0, 1, 1, 1, 1, 0}, "E7''", rk_note),
           derived_cl(s, 3, {0, 0, 0, 0, 1, 1, 1, 0, 1}, "E8''", rk_note)},
          4),
      blk({rank_only(2, "T8"), rank_only(2, "T8'"), rank_only(2, "T8''")}, 2),
      blk({line_cl(s, {3, -1, -1, -1, 0, -1, -1, -1, -1}),
           line_cl(s, {3, -1, -1, -1, -1, 0, -1, -1, -1}),
           line_cl(s, {3, -1, -1, -1, -1, -1, 0, -1, -1}),
           line_cl(s, {1, -1, 0, 0, 0, 0, 0, 0, 0}),
           line_cl(s, {1, 0, -1, 0, 0, 0, 0, 0, 0}),
           line_cl(s, {1, 0, 0, -1, 0, 0, 0, 0, 0})},
          1)};
  e.notes =
      "first block ranks deviate from the printed per-object rank (see class "
      "notes)";
  return finish(e);
}

CatalogEntry deg1iv() {
  auto s = SurfaceModel::blowup_p2(8);
  CatalogEntry e{1, "iv", s, {}, false, ""};
  e.blocks = {
      blk({derived_cl(s, 5, {6, -2, -2, -2, -1, -1, -1, -1, -1}, "E8'''")}, 5),
      blk({rank_only(2, "F_{4,8}"), rank_only(2, "F_{5,8}"),
           rank_only(2, "F_{6,8}"), rank_only(2, "F_{7,8}"),
           rank_only(2, "F_{8,8}")},
          2),
      blk({line_cl(s, {1, 0, 0, 0, 0, 0, 0, 0, 0}),
           line_cl(s, {2, -1, -1, -1, 0, 0, 0, 0, 0}),
           line_cl(s, {4, -2, -1, -1, -1, -1, -1, -1, -1}),
           line_cl(s, {4, -1, -2, -1, -1, -1, -1, -1, -1}),
           line_cl(s, {4, -1, -1, -2, -1, -1, -1, -1, -1})},
          1)};
  e.notes =
      "as stated the first and last blocks are not semiorthogonal: "
      "chi(O(H), V) = -3 and chi(O(H-L_i-K), V) = 2 for the rank-5 bundle, "
      "and no sign change repairs both; recorded verbatim";
  return finish(e);
}

}  // namespace

std::string CatalogEntry::label() const {
  std::string out = std::to_string(degree);
  if (!variant.empty()) out += "(" + variant + ")";
  return out;
}

MarkedCollection CatalogEntry::as_marked() const {
  MarkedCollection m;
  m.surface = surface;
  int at = 0;
  for (const CatBlock& b : blocks) {
    for (const CatClass& c : b.classes)
      m.classes.push_back(ClassRecord{c.rank, c.c1, c.c2, c.name});
    m.block_bounds.emplace_back(at, at + static_cast<int>(b.classes.size()));
    at += static_cast<int>(b.classes.size());
    m.descent_meta.push_back(b.meta);
  }
  return m;
}

std::vector<CatalogEntry> all_catalog_entries() {
  return {deg9(),   deg8inv(), deg6(),   deg5(),   deg4(),
          deg3i(),  deg3ii(),  deg2i(),  deg2ii(), deg2iii(),
          deg1i(),  deg1ii(),  deg1iii(), deg1iv()};
}

CatalogEntry three_block(int degree, const std::string& variant) {
  if (degree == 7 || (degree == 8 && variant == "dP"))
    throw std::domain_error("no 3-block decomposition");
  for (CatalogEntry& e : all_catalog_entries())
    if (e.degree == degree && e.variant == variant) return e;

  static const std::map<int, std::string> forms = {
      {8, "inv|dP"}, {3, "i|ii"}, {2, "i|ii|iii"}, {1, "i|ii|iii|iv"}};
  auto it = forms.find(degree);
  if (it != forms.end())
    throw std::invalid_argument("degree " + std::to_string(degree) +
                                " needs a variant: " + it->second);
  throw std::invalid_argument("no table row for degree " +
                              std::to_string(degree) +
                              (variant.empty() ? "" : " (" + variant + ")"));
}

// ---------------------------------------------------------------------------
// Replays

namespace {

KClass negated(const SurfaceModel& s, const KClass& e) {
  KVec v = to_kvec(s, e);
  return from_kvec(s, KVec{-v.rank, scale(-1, v.c1), -v.t2});
}

struct Stage {
  std::string label;
  std::string action;
  std::vector<std::vector<ClassRecord>> blocks;
  std::vector<std::string> block_labels;
};

MarkedCollection to_collection(const SurfaceModel& s, const Stage& st) {
  MarkedCollection m;
  m.surface = s;
  int at = 0;
  for (size_t b = 0; b < st.blocks.size(); ++b) {
    for (const ClassRecord& c : st.blocks[b]) m.classes.push_back(c);
    int n = static_cast<int>(st.blocks[b].size());
    m.block_bounds.emplace_back(at, at + n);
    at += n;
    m.descent_meta.push_back(DescentMeta{n, 1, st.block_labels[b]});
  }
  return m;
}

ClassRecord named_line(const SurfaceModel& s, const DivisorClass& d) {
  return record_of(line_bundle(s, d), "O(" + divisor_str(s, d) + ")");
}

ClassRecord named_sheaf(const SurfaceModel& s, const DivisorClass& c) {
  return record_of(curve_sheaf(s, c), "O_C(" + divisor_str(s, c) + ")");
}

[[noreturn]] void stage_fail(const std::string& label, const std::string& what) {
  throw std::runtime_error("replay stage " + label + ": " + what);
}

void require_classes(const std::string& label, const Stage& st,
                     const std::vector<KClass>& want) {
  size_t i = 0;
  for (const auto& block : st.blocks)
    for (const ClassRecord& c : block) {
      if (i >= want.size()) stage_fail(label, "more classes than asserted");
      if (!(c.kclass() == want[i]))
        stage_fail(label, "class " + std::to_string(i) + " is " +
                              kclass_str(c.kclass()) + ", asserted " +
                              kclass_str(want[i]));
      ++i;
    }
  if (i != want.size()) stage_fail(label, "fewer classes than asserted");
}

ReplayStep run_stage(const SurfaceModel& s, const Stage& st, bool full) {
  MarkedCollection col = to_collection(s, st);
  SodReport rep = verify_sod(col);
  for (const auto& flag : rep.is_numerically_exceptional)
    if (!flag || !*flag) stage_fail(st.label, "a class is not exceptional");
  if (!rep.backward_orthogonal)
    stage_fail(st.label, "backward orthogonality fails");
  if (!rep.block_internal_orthogonal)
    stage_fail(st.label, "a block is not completely orthogonal");
  if (rep.undecided_pairs != 0) stage_fail(st.label, "undecided pairs");
  if (full && !rep.all_pass())
    stage_fail(st.label, "expected a full decomposition");
  return ReplayStep{st.label, st.action, std::move(col), std::move(rep)};
}

std::vector<std::string> label_multiset(const Stage& st) {
  std::vector<std::string> v = st.block_labels;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<ReplayStep> replay_dp6(const std::string& kase) {
  bool cubic;
  if (kase == "deg3")
    cubic = true;
  else if (kase == "deg2")
    cubic = false;
  else
    throw std::invalid_argument("replay_dp6: case must be \"deg3\" or \"deg2\"");

  SurfaceModel s = SurfaceModel::blowup_p2(cubic ? 6 : 5);
  const std::string suf = cubic ? "" : "t";
  DivisorClass K = canonical_class(s);
  DivisorClass H = zero_divisor(s);
  H[0] = 1;
  auto L = [&](int i) {
    DivisorClass d = zero_divisor(s);
    d[i] = 1;
    return d;
  };

  // Link data: the pullback g of the second model's plane class and the
  // (-1)-classes f_i; the last ones are contracted by the second map.
  DivisorClass g;
  std::vector<DivisorClass> f;
  if (cubic) {
    g = {5, -2, -2, -2, -2, -2, -2};
    f = {{2, -1, -1, -1, 0, -1, -1}, {2, -1, -1, -1, -1, 0, -1},
         {2, -1, -1, -1, -1, -1, 0}, {2, 0, -1, -1, -1, -1, -1},
         {2, -1, 0, -1, -1, -1, -1}, {2, -1, -1, 0, -1, -1, -1}};
  } else {
    g = {3, -1, -1, -1, -1, -2};
    f = {{1, -1, 0, 0, 0, -1},
         {1, 0, -1, 0, 0, -1},
         {1, 0, 0, -1, 0, -1},
         {1, 0, 0, 0, -1, -1},
         {2, -1, -1, -1, -1, -1}};
  }
  DivisorClass kp = K;  // pullback of the second model's canonical class
  for (size_t i = 3; i < f.size(); ++i) kp = sub(kp, f[i]);
  DivisorClass mkpg = sub(scale(-1, kp), g);

  std::vector<ReplayStep> steps;
  auto emit = [&](Stage& st, bool full) {
    steps.push_back(run_stage(s, st, full));
  };

  Stage st;
  st.label = "equa1" + suf;
  st.action = "pulled back the second model's three-block collection";
  st.blocks = {{record_of(trivial_bundle(s), "O")},
               {named_line(s, g), named_line(s, mkpg)},
               {named_line(s, add(mkpg, f[0])), named_line(s, add(mkpg, f[1])),
                named_line(s, add(mkpg, f[2]))}};
  st.block_labels = {"k", "B'", "Q'"};
  emit(st, false);

  auto prev_labels = label_multiset(st);
  auto check_labels = [&](const Stage& cur, int added) {
    std::vector<std::string> now = label_multiset(cur);
    std::vector<std::string> want = prev_labels;
    if (added) {
      want.push_back("k(x')/k");
      std::sort(want.begin(), want.end());
    }
    if (now != want)
      stage_fail(cur.label, "block labels are not a permutation of the "
                            "previous stage's");
    prev_labels = now;
  };

  // Rotate the structure sheaf block to the back: the remaining classes
  // twist by the pulled-back canonical class.
  Stage st2;
  st2.label = "equa2" + suf;
  st2.action = "rotated the structure sheaf to the back inside the pulled-"
               "back category; the rest twists by its canonical class";
  st2.blocks = {{named_line(s, add(g, kp)), named_line(s, scale(-1, g))},
                {named_line(s, add(scale(-1, g), f[0])),
                 named_line(s, add(scale(-1, g), f[1])),
                 named_line(s, add(scale(-1, g), f[2]))},
                {record_of(trivial_bundle(s), "O")}};
  st2.block_labels = {"B'", "Q'", "k"};
  {
    // the rotated classes must be the old ones twisted by kp
    std::vector<KClass> want;
    for (const DivisorClass& d :
         {add(g, kp), scale(-1, g), add(scale(-1, g), f[0]),
          add(scale(-1, g), f[1]), add(scale(-1, g), f[2])})
      want.push_back(line_bundle(s, d));
    size_t i = 1;
    for (const KClass& w : want) {
      KClass tw = twist(s, steps[0].state.classes[i].kclass(), kp);
      if (!(tw == w)) stage_fail(st2.label, "twist mismatch");
      ++i;
    }
  }
  emit(st2, false);
  check_labels(st2, 0);

  Stage st3;
  st3.label = "equa3" + suf;
  st3.action = "adjoined the structure sheaves of the curves the second "
               "contraction collapses";
  st3.blocks = st2.blocks;
  st3.blocks.push_back({});
  for (size_t i = 3; i < f.size(); ++i)
    st3.blocks.back().push_back(named_sheaf(s, f[i]));
  st3.block_labels = {"B'", "Q'", "k", "k(x')/k"};
  emit(st3, false);
  check_labels(st3, 1);

  Stage st4;
  st4.label = "equa4" + suf;
  st4.action = "mutated the torsion block left through the structure sheaf "
               "(classes sign-normalized) and swapped the two blocks";
  st4.blocks = {st3.blocks[0], st3.blocks[1], {}, {record_of(trivial_bundle(s), "O")}};
  for (size_t i = 3; i < f.size(); ++i) {
    KClass m = mutate_block(s, {trivial_bundle(s)},
                            curve_sheaf(s, f[i]), MutationSide::Left);
    if (m.rank != -1) stage_fail(st4.label, "mutation rank is not -1");
    m = negated(s, m);
    KClass want = line_bundle(s, scale(-1, f[i]));
    if (!(m == want)) stage_fail(st4.label, "mutation is not O(-F_i)");
    st4.blocks[2].push_back(record_of(m, "O(" + divisor_str(s, scale(-1, f[i])) + ")"));
  }
  st4.block_labels = {"B'", "Q'", "k(x')/k", "k"};
  emit(st4, false);
  check_labels(st4, 0);

  // Pure re-expression: every class is asserted against its canonical-class
  // form on the resolution surface.
  Stage st5 = st4;
  st5.label = "equa5" + suf;
  st5.action = "re-expressed every class through the canonical class of the "
               "resolution surface";
  {
    std::vector<KClass> want;
    if (cubic) {
      want = {line_bundle(s, add(scale(2, K), DivisorClass{2, -1, -1, -1, 0, 0, 0})),
              line_bundle(s, add(scale(2, K), H)),
              line_bundle(s, add(K, L(4))),
              line_bundle(s, add(K, L(5))),
              line_bundle(s, add(K, L(6))),
              line_bundle(s, add(K, sub(H, L(1)))),
              line_bundle(s, add(K, sub(H, L(2)))),
              line_bundle(s, add(K, sub(H, L(3)))),
              trivial_bundle(s)};
    } else {
      want = {line_bundle(s, add(K, L(4))),
              line_bundle(s, add(K, L(5))),
              line_bundle(s, add(K, sub(H, L(1)))),
              line_bundle(s, add(K, sub(H, L(2)))),
              line_bundle(s, add(K, sub(H, L(3)))),
              line_bundle(s, DivisorClass{-1, 0, 0, 0, 1, 1}),
              line_bundle(s, add(K, H)),
              trivial_bundle(s)};
    }
    require_classes(st5.label, st5, want);
  }
  emit(st5, false);
  check_labels(st5, 0);

  Stage st6;
  st6.label = "equa6" + suf;
  std::vector<KClass> want6;
  if (cubic) {
    st6.action = "twisted everything by -K and rotated the first block to "
                 "the end; full decomposition";
    st6.blocks = {{}, {}, {}, {}};
    for (int b = 1; b < 4; ++b)
      for (const ClassRecord& c : st4.blocks[b])
        st6.blocks[b - 1].push_back(record_of(
            twist(s, c.kclass(), scale(-1, K)),
            "O(" + divisor_str(s, sub(*c.c1, K)) + ")"));
    for (const ClassRecord& c : st4.blocks[0])
      st6.blocks[3].push_back(record_of(
          twist(s, c.kclass(), scale(-2, K)),
          "O(" + divisor_str(s, sub(sub(*c.c1, K), K)) + ")"));
    st6.block_labels = {"Q'", "k(x')/k", "k", "B'"};
    for (const DivisorClass& d :
         {L(4), L(5), L(6), sub(H, L(1)), sub(H, L(2)), sub(H, L(3)),
          scale(-1, K), DivisorClass{2, -1, -1, -1, 0, 0, 0}, H})
      want6.push_back(line_bundle(s, d));
  } else {
    st6.action = "rotated the structure sheaf block to the front; the rest "
                 "twists by -K; full decomposition";
    st6.blocks = {{record_of(trivial_bundle(s), "O")}, {}, {}, {}};
    for (int b = 0; b < 3; ++b)
      for (const ClassRecord& c : st4.blocks[b])
        st6.blocks[b + 1].push_back(record_of(
            twist(s, c.kclass(), scale(-1, K)),
            "O(" + divisor_str(s, sub(*c.c1, K)) + ")"));
    st6.block_labels = {"k", "B'", "Q'", "k(x')/k"};
    want6.push_back(trivial_bundle(s));
    for (const DivisorClass& d :
         {L(4), L(5), sub(H, L(1)), sub(H, L(2)), sub(H, L(3)),
          DivisorClass{2, -1, -1, -1, 0, 0}, H})
      want6.push_back(line_bundle(s, d));
  }
  require_classes(st6.label, st6, want6);
  emit(st6, true);
  check_labels(st6, 0);

  Stage st7;
  st7.label = "equa7" + suf;
  st7.blocks = {{record_of(trivial_bundle(s), "O")},
                {named_line(s, sub(H, L(1))), named_line(s, sub(H, L(2))),
                 named_line(s, sub(H, L(3)))},
                {named_line(s, H),
                 named_line(s, [&] {
                   DivisorClass d = scale(2, H);
                   for (int i = 1; i <= 3; ++i) d = sub(d, L(i));
                   return d;
                 }())}};
  st7.block_labels = {"k", "Q", "B"};

  // Which final-stage blocks the reference blocks must equal (as class sets).
  auto class_set = [](const std::vector<ClassRecord>& v) {
    std::vector<KClass> out;
    for (const ClassRecord& c : v) out.push_back(c.kclass());
    std::sort(out.begin(), out.end(), [](const KClass& a, const KClass& b) {
      return std::tie(a.rank, a.c1, a.c2) < std::tie(b.rank, b.c1, b.c2);
    });
    return out;
  };
  if (cubic) {
    st7.action = "reference collection on the resolution; its line-pencil "
                 "block equals the torsion-derived block and its conic block "
                 "equals the rotated pair";
    if (class_set(st7.blocks[2]) != class_set(st6.blocks[3]))
      stage_fail(st7.label, "conic-type blocks do not match");
    if (class_set(st7.blocks[1]) != class_set(st6.blocks[1]))
      stage_fail(st7.label, "line-type blocks do not match");
  } else {
    st7.action = "reference collection on the resolution; all three blocks "
                 "match final-stage blocks classwise";
    if (class_set(st7.blocks[0]) != class_set(st6.blocks[0]))
      stage_fail(st7.label, "structure sheaf blocks do not match");
    if (class_set(st7.blocks[1]) != class_set(st6.blocks[2]))
      stage_fail(st7.label, "line-type blocks do not match");
    if (class_set(st7.blocks[2]) != class_set(st6.blocks[3]))
      stage_fail(st7.label, "conic-type blocks do not match");
  }
  emit(st7, false);

  return steps;
}

bool Dp5Report::all_pass() const {
  return pullback_h_identity && pullback_line_identities && block_orthogonal &&
         v_is_rank5_c2_20 && v_matches_canonical_twist && four_block.all_pass() &&
         four_block_rotated.all_pass();
}

Dp5Report replay_dp5() {
  SurfaceModel s = SurfaceModel::blowup_p2(5);
  DivisorClass K = canonical_class(s);
  DivisorClass minusK = scale(-1, K);
  auto E = [&](int i) {
    DivisorClass d = zero_divisor(s);
    d[i] = 1;
    return d;
  };
  // Exceptional curve of the contraction to the quintic model and the
  // printed pullbacks.
  DivisorClass d = {2, -1, -1, -1, -1, -1};
  DivisorClass eh = {3, -1, -1, -1, -1, -2};
  DivisorClass e_ks = sub(K, d);  // pullback of the quintic's canonical class

  Dp5Report r;
  r.pullback_h_identity = eh == sub(minusK, E(5));

  r.pullback_line_identities = true;
  for (int i = 1; i <= 4; ++i) {
    // pullback of L_i - K_S - H; the line through the i-th and fifth points
    // misses the blown-up point, so its pullback is its strict transform
    DivisorClass li = sub(sub(E(0), E(5)), E(i));
    li[0] = 1;
    DivisorClass lhs = sub(sub(li, e_ks), eh);
    r.pullback_line_identities &= lhs == sub(minusK, E(i));
  }

  std::vector<KClass> block;
  for (int i = 1; i <= 5; ++i)
    block.push_back(line_bundle(s, sub(minusK, E(i))));
  r.block_orthogonal = true;
  for (size_t i = 0; i < block.size(); ++i)
    for (size_t j = 0; j < block.size(); ++j) {
      ll want = i == j ? 1 : 0;
      r.block_orthogonal &= euler_pairing(s, block[i], block[j]) == want;
    }

  r.v = block[0];
  for (size_t i = 1; i < block.size(); ++i) r.v = direct_sum(s, r.v, block[i]);
  r.v_is_rank5_c2_20 = r.v.rank == 5 && r.v.c2 == 20;
  KClass plain = line_bundle(s, scale(-1, E(1)));
  for (int i = 2; i <= 5; ++i)
    plain = direct_sum(s, plain, line_bundle(s, scale(-1, E(i))));
  r.v_matches_canonical_twist = r.v == twist(s, plain, minusK);

  // rank-2 pullback bundle: K-theory class of the stated extension
  KClass ef = direct_sum(s, line_bundle(s, sub(scale(-1, e_ks), eh)),
                         line_bundle(s, eh));

  MarkedCollection four;
  four.surface = s;
  four.classes = {ClassRecord{0, d, 0, "O_D(-1)"},
                  record_of(trivial_bundle(s), "O"), record_of(ef, "F")};
  for (int i = 1; i <= 5; ++i)
    four.classes.push_back(record_of(block[i - 1],
                                     "O(" + divisor_str(s, sub(minusK, E(i))) + ")"));
  four.block_bounds = {{0, 1}, {1, 2}, {2, 3}, {3, 8}};
  four.descent_meta = {DescentMeta{1, 1, "k"}, DescentMeta{1, 1, "k"},
                       DescentMeta{1, 1, "k,alpha"}, DescentMeta{5, 1, "l/k"}};
  r.four_block = verify_sod(four);

  // One full rotation: the last block moves to the front twisted by K,
  // turning the five bundles into plain line bundles O(-E_i).
  MarkedCollection rot;
  rot.surface = s;
  for (int i = 1; i <= 5; ++i) {
    KClass tw = twist(s, block[i - 1], K);
    if (!(tw == line_bundle(s, scale(-1, E(i)))))
      throw std::logic_error("rotated block is not the plain line bundles");
    rot.classes.push_back(record_of(tw, "O(-L" + std::to_string(i) + ")"));
  }
  rot.classes.push_back(ClassRecord{0, d, 0, "O_D(-1)"});
  rot.classes.push_back(record_of(trivial_bundle(s), "O"));
  rot.classes.push_back(record_of(ef, "F"));
  rot.block_bounds = {{0, 5}, {5, 6}, {6, 7}, {7, 8}};
  rot.descent_meta = {DescentMeta{5, 1, "l/k"}, DescentMeta{1, 1, "k"},
                      DescentMeta{1, 1, "k"}, DescentMeta{1, 1, "k,alpha"}};
  r.four_block_rotated = verify_sod(rot);

  return r;
}

}  // namespace sodlab
