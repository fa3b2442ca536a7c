#include "sodlab/jsonout.hpp"

namespace sodlab {

namespace {

template <typename T>
Json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  return Json(*v);
}

Json opt_divisor(const std::optional<DivisorClass>& v) {
  if (!v) return nullptr;
  return Json(*v);
}

}  // namespace

Json json_of(const SurfaceModel& s) {
  Json j;
  j["name"] = s.name();
  j["kind"] = s.kind == SurfaceKind::Quadric ? "quadric" : "blowup_p2";
  j["blown_up"] = s.blown_up;
  j["picard_rank"] = s.picard_rank();
  j["degree"] = s.degree();
  return j;
}

Json json_of(const KClass& e) {
  Json j;
  j["rank"] = e.rank;
  j["c1"] = e.c1;
  j["c2"] = e.c2;
  return j;
}

Json json_of(const DescentMeta& m) {
  Json j;
  j["etale_degree"] = m.etale_degree;
  j["brauer_index"] = m.brauer_index;
  j["brauer_label"] = m.brauer_label;
  j["expected_self_chi"] = m.expected_self_chi();
  return j;
}

Json json_of(const ClassRecord& c) {
  Json j;
  j["rank"] = c.rank;
  j["c1"] = opt_divisor(c.c1);
  j["c2"] = opt(c.c2);
  j["name"] = c.name;
  return j;
}

Json json_of(const MarkedCollection& c) {
  Json j;
  j["surface"] = json_of(c.surface);
  j["classes"] = json_list(c.classes);
  Json bounds = Json::array();
  for (const auto& [first, last] : c.block_bounds)
    bounds.push_back(Json::array({first, last}));
  j["block_bounds"] = bounds;
  j["descent_meta"] = json_list(c.descent_meta);
  return j;
}

Json json_of(const SodReport& r) {
  Json j;
  Json exc = Json::array();
  for (const auto& v : r.is_numerically_exceptional) exc.push_back(opt(v));
  j["is_numerically_exceptional"] = exc;
  j["backward_orthogonal"] = r.backward_orthogonal;
  j["block_internal_orthogonal"] = r.block_internal_orthogonal;
  j["length_ok"] = r.length_ok;
  j["undecided_pairs"] = r.undecided_pairs;
  Json gram = Json::array();
  for (const auto& row : r.gram) {
    Json g = Json::array();
    for (const auto& v : row) g.push_back(opt(v));
    gram.push_back(g);
  }
  j["gram"] = gram;
  j["basis_det"] = opt(r.basis_det);
  j["all_pass"] = r.all_pass();
  return j;
}

Json json_of(const CatClass& c) {
  Json j;
  j["rank"] = c.rank;
  j["c1"] = opt_divisor(c.c1);
  j["c2"] = opt(c.c2);
  j["c2_origin"] = c.c2_origin;
  j["name"] = c.name;
  j["note"] = c.note;
  return j;
}

Json json_of(const CatBlock& b) {
  Json j;
  j["printed_rank"] = b.printed_rank;
  j["meta"] = json_of(b.meta);
  j["classes"] = json_list(b.classes);
  return j;
}

Json json_of(const CatalogEntry& e) {
  Json j;
  j["label"] = e.label();
  j["degree"] = e.degree;
  j["variant"] = e.variant;
  j["surface"] = json_of(e.surface);
  j["complete"] = e.complete;
  j["notes"] = e.notes;
  j["blocks"] = json_list(e.blocks);
  return j;
}

Json json_of(const ReplayStep& s) {
  Json j;
  j["label"] = s.label;
  j["action"] = s.action;
  j["state"] = json_of(s.state);
  j["report"] = json_of(s.report);
  return j;
}

Json json_of(const Dp5Report& r) {
  Json j;
  j["pullback_h_identity"] = r.pullback_h_identity;
  j["pullback_line_identities"] = r.pullback_line_identities;
  j["block_orthogonal"] = r.block_orthogonal;
  j["v"] = json_of(r.v);
  j["v_is_rank5_c2_20"] = r.v_is_rank5_c2_20;
  j["v_matches_canonical_twist"] = r.v_matches_canonical_twist;
  j["four_block"] = json_of(r.four_block);
  j["four_block_rotated"] = json_of(r.four_block_rotated);
  j["all_pass"] = r.all_pass();
  return j;
}

Json json_of(const HomaloidalSystem& h) {
  Json j;
  j["n"] = h.n;
  j["mults"] = h.mults;
  return j;
}

Json json_of(const LinkMatrix& m) {
  Json j;
  j["deg_surface"] = m.deg_surface;
  j["deg_point"] = m.deg_point;
  j["m"] = m.m;
  j["expansion"] = m.expansion;
  return j;
}

Json json_of(const LinkIdentity& i) {
  Json j;
  j["statement"] = i.statement;
  j["lhs"] = i.lhs;
  j["rhs"] = i.rhs;
  return j;
}

Json json_of(const LinkExpansion& x) {
  Json j;
  j["deg_surface"] = x.deg_surface;
  j["deg_point"] = x.deg_point;
  j["resolution"] = json_of(x.resolution);
  j["g"] = x.g;
  j["sigma_omega"] = x.sigma_omega;
  j["tau_omega"] = x.tau_omega;
  j["e"] = x.e;
  j["f"] = x.f;
  j["e_total"] = x.e_total;
  j["f_total"] = x.f_total;
  j["identities"] = json_list(x.identities);
  return j;
}

Json json_of(const FClassAssignment& a) {
  Json j;
  j["index"] = a.index;
  j["cls"] = a.cls;
  j["name"] = a.name;
  return j;
}

Json json_of(const BundleSpec& b) {
  Json j;
  j["algebra_label"] = b.algebra_label;
  j["center_label"] = b.center_label;
  j["center_degree"] = b.center_degree;
  j["algebra_index"] = b.algebra_index;
  j["period"] = opt(b.period);
  j["c2"] = b.c2;
  j["rank"] = b.rank;
  j["shape"] = b.shape;
  j["summands"] = b.summands;
  j["reduced"] = b.reduced;
  return j;
}

Json json_of(const SurfaceCase& c) {
  Json j;
  j["table"] = table_name(c.table);
  j["row"] = c.row;
  j["surface"] = c.surface;
  j["index"] = c.index;
  j["picard_rank"] = c.picard_rank;
  j["model"] = json_of(c.model);
  j["v1"] = json_of(c.v1);
  j["v2"] = json_of(c.v2);
  j["geometric_note"] = c.geometric_note;
  return j;
}

Json json_of(const TwistWitness& w) {
  Json j;
  j["x"] = w.x;
  j["m"] = w.m;
  j["r"] = w.r;
  return j;
}

Json json_of(const DescentReport& r) {
  Json j;
  j["case_id"] = r.case_id;
  j["search_bound"] = r.search_bound;
  j["witness_count"] = r.witness_count;
  j["conclusion"] = r.conclusion ? Json(conclusion_str(*r.conclusion)) : Json(nullptr);
  j["witnesses"] = json_list(r.witnesses);
  j["notes"] = r.notes;
  return j;
}

}  // namespace sodlab
