#include "sodlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sodlab/jsonout.hpp"
#include "sodlab/weylgal.hpp"

namespace sodlab {

namespace {

// --- argument parsing helpers -------------------------------------------

SurfaceModel parse_surface(const std::string& text) {
  if (text == "quadric") return SurfaceModel::quadric();
  if (text == "p2") return SurfaceModel::blowup_p2(0);
  if (text.rfind("p2:", 0) == 0) {
    const std::string tail = text.substr(3);
    size_t used = 0;
    int r = -1;
    try {
      r = std::stoi(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == tail.size() && r >= 0 && r <= 8)
      return SurfaceModel::blowup_p2(r);
  }
  throw std::invalid_argument("unknown surface '" + text +
                              "' (expected quadric, p2, or p2:<r> with r in "
                              "0..8)");
}

std::vector<ll> parse_coords(const std::string& text) {
  std::vector<ll> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    size_t used = 0;
    ll v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty())
      throw std::invalid_argument("bad coordinate '" + tok + "' in '" + text +
                                  "'");
    out.push_back(v);
  }
  if (out.empty())
    throw std::invalid_argument("empty coordinate list '" + text + "'");
  return out;
}

KClass parse_kclass(const SurfaceModel& s, ll rank, const std::string& c1,
                    ll c2) {
  KClass e{rank, parse_coords(c1), c2};
  check_divisor(s, e.c1);
  return e;
}

SurfaceTable parse_table(const std::string& text) {
  if (text == "dp9") return SurfaceTable::dp9;
  if (text == "dp8") return SurfaceTable::dp8;
  if (text == "dp6") return SurfaceTable::dp6;
  if (text == "dp5") return SurfaceTable::dp5;
  throw std::invalid_argument("unknown table '" + text +
                              "' (expected dp9, dp8, dp6, or dp5)");
}

// Accepts both the catalog label ("3(i)") and a flat spelling ("degree3i").
std::string normalize_case_id(const std::string& text) {
  const auto& ids = descent_case_ids();
  if (std::find(ids.begin(), ids.end(), text) != ids.end()) return text;
  if (text.rfind("degree", 0) == 0 && text.size() > 6) {
    std::string rest = text.substr(6);
    if (rest.size() == 1) return rest;
    return rest.substr(0, 1) + "(" + rest.substr(1) + ")";
  }
  return text;
}

// --- output helpers -------------------------------------------------------

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string coords(const DivisorClass& d) { return Json(d).dump(); }

std::string mat2(const std::array<std::array<ll, 2>, 2>& m) {
  return Json(m).dump();
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      os << row[i];
      if (i + 1 < row.size())
        os << std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << "\n";
  };
  emit(rows.front());
  std::vector<std::string> rule;
  for (size_t i = 0; i < rows.front().size(); ++i)
    rule.emplace_back(width[i], '-');
  emit(rule);
  for (size_t i = 1; i < rows.size(); ++i) emit(rows[i]);
  return os.str();
}

// Rejects --output table on commands that only render JSON.
void require_json_output(const std::string& format) {
  if (format != "json")
    throw CLI::ValidationError(
        "--output",
        "table output is available for catalog show, index compute, and "
        "links matrix");
}

// --- table renderers ------------------------------------------------------

std::string catalog_table(const std::vector<CatalogEntry>& entries) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"entry", "block", "name", "rank", "c1", "c2", "c2(chi=1)",
                  "match"});
  for (const CatalogEntry& e : entries) {
    for (size_t b = 0; b < e.blocks.size(); ++b) {
      for (const CatClass& c : e.blocks[b].classes) {
        std::string c1 = c.c1 ? coords(*c.c1) : "-";
        std::string c2 = c.c2 ? std::to_string(*c.c2) : "-";
        std::string redo = "-";
        if (c.c1) {
          try {
            redo = std::to_string(chern_from_chi_one(e.surface, c.rank, *c.c1).c2);
          } catch (const std::exception&) {
            redo = "none";
          }
        }
        std::string match = (c.c2 && redo != "-" && redo != "none")
                                ? (std::to_string(*c.c2) == redo ? "yes" : "no")
                                : "-";
        rows.push_back({e.label(), std::to_string(b + 1), c.name,
                        std::to_string(c.rank), c1, c2, redo, match});
      }
    }
  }
  return render_table(rows);
}

std::string index_table(const std::vector<SurfaceCase>& cases) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"table", "row", "ind", "rho", "V1", "rk1", "c2(V1)",
                  "c2*(V1)", "V2", "rk2", "c2(V2)", "c2*(V2)", "match"});
  for (const SurfaceCase& c : cases) {
    const KClass k1 = c.v1.split_class(c.model);
    const KClass k2 = c.v2.split_class(c.model);
    const bool ok = k1.rank == c.v1.rank && k1.c2 == c.v1.c2 &&
                    k2.rank == c.v2.rank && k2.c2 == c.v2.c2;
    rows.push_back({table_name(c.table), c.row, std::to_string(c.index),
                    std::to_string(c.picard_rank), c.v1.algebra_label,
                    std::to_string(c.v1.rank), std::to_string(c.v1.c2),
                    std::to_string(k1.c2), c.v2.algebra_label,
                    std::to_string(c.v2.rank), std::to_string(c.v2.c2),
                    std::to_string(k2.c2), ok ? "yes" : "no"});
  }
  return render_table(rows);
}

std::string links_table(const std::vector<LinkMatrix>& links) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"surface", "point", "m", "expansion", "J.m.J", "match"});
  for (const LinkMatrix& lm : links) {
    const std::array<std::array<ll, 2>, 2> jmj = {
        {{lm.m[0][0], -lm.m[0][1]}, {-lm.m[1][0], lm.m[1][1]}}};
    rows.push_back({std::to_string(lm.deg_surface),
                    std::to_string(lm.deg_point), mat2(lm.m),
                    mat2(lm.expansion), mat2(jmj),
                    jmj == lm.expansion ? "yes" : "no"});
  }
  return render_table(rows);
}

// --- scenario files for `descent check` -----------------------------------

TwistProblem scenario_problem(const Json& j) {
  TwistProblem p;
  p.surface = parse_surface(j.at("surface").get<std::string>());
  for (const Json& g : j.at("block")) {
    BlockGen gen;
    gen.rank = g.value("rank", ll{1});
    gen.c1 = g.at("c1").get<std::vector<ll>>();
    gen.name = g.value("name", std::string{});
    check_divisor(p.surface, gen.c1);
    p.block.push_back(std::move(gen));
  }
  if (j.contains("gauge_coord"))
    p.gauge_coord = j.at("gauge_coord").get<int>();
  else
    p.gauge_coord = p.surface.picard_rank() >= 2 ? 1 : 0;
  return p;
}

Json load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read scenario file " + path);
  return Json::parse(in);
}

}  // namespace

const std::vector<CliCommand>& cli_commands() {
  static const std::vector<CliCommand> table = {
      {"surface info", "Picard lattice of one surface model",
       {"piclat"}},
      {"classes enumerate",
       "divisor classes with given square and canonical degree",
       {"piclat"}},
      {"chi", "Euler pairing of two K-classes", {"numk", "piclat"}},
      {"mutate", "left or right mutation of a K-class pair",
       {"excol", "numk"}},
      {"catalog show", "stored three-block decompositions",
       {"catalog"}},
      {"catalog verify", "semiorthogonality report for stored decompositions",
       {"catalog", "excol", "intmat"}},
      {"replay dp5", "quintic point construction on the degree-4 blow-up",
       {"catalog", "excol", "numk"}},
      {"replay dp6", "degree-6 link mutation sequences",
       {"catalog", "excol"}},
      {"descent check", "twist equation for one decomposition block",
       {"descent", "intmat"}},
      {"links matrix", "base-change matrices of the degree-preserving links",
       {"links"}},
      {"links expand", "blow-up resolution of one link",
       {"links", "piclat"}},
      {"links homaloidal", "plane homaloidal systems with r base points",
       {"links"}},
      {"index compute", "minimal-surface invariant tables",
       {"surfdb", "numk"}},
      {"index witness", "multiplicities recovering the index as a c2 gcd",
       {"surfdb"}},
      {"roots", "root system of the Picard lattice", {"weylgal"}},
      {"reflect", "reflection of a class in one root", {"weylgal"}},
      {"orbit", "Weyl orbit of a divisor class", {"weylgal"}},
  };
  return table;
}

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "sodlab: exact numerical invariants of derived-category "
      "decompositions of del Pezzo surfaces"};
  app.require_subcommand(1);

  // Shared option state; each leaf subcommand reads what it declared.
  std::string surface_str = "p2:0";
  std::string format = "json";
  std::string e_c1, f_c1, side, replay_case, case_id, scenario_path;
  std::string table_str, row_str, class_str, root_str, seed_str, variant;
  ll e_rank = 1, e_c2 = 0, f_rank = 1, f_c2 = 0;
  ll self_int = -1, k_int = -1, hom_r = 6, m_max = 4, cap = 1000000;
  int degree = 0, deg_surface = 0, deg_point = 0, bound = 12;
  bool fibration = false;

  auto add_surface = [&](CLI::App* cmd) {
    cmd->add_option("--surface", surface_str,
                    "surface model: quadric, p2, or p2:<r>")
        ->required();
  };
  auto add_output = [&](CLI::App* cmd, bool with_table) {
    cmd->add_option("--output", format, "output format")
        ->check(with_table ? CLI::IsMember({"json", "table"})
                           : CLI::IsMember({"json"}));
  };
  auto add_pair = [&](CLI::App* cmd) {
    add_surface(cmd);
    cmd->add_option("--e-rank", e_rank, "rank of E")->required();
    cmd->add_option("--e-c1", e_c1, "c1 of E, comma-separated coordinates")
        ->required();
    cmd->add_option("--e-c2", e_c2, "c2 of E")->required();
    cmd->add_option("--f-rank", f_rank, "rank of F")->required();
    cmd->add_option("--f-c1", f_c1, "c1 of F, comma-separated coordinates")
        ->required();
    cmd->add_option("--f-c2", f_c2, "c2 of F")->required();
  };

  // surface info
  CLI::App* surface = app.add_subcommand("surface", "surface models");
  surface->require_subcommand(1);
  CLI::App* info = surface->add_subcommand(
      "info", "lattice data of one surface model");
  add_surface(info);
  add_output(info, false);
  info->callback([&] {
    require_json_output(format);
    const SurfaceModel s = parse_surface(surface_str);
    Json j = json_of(s);
    j["canonical_class"] = canonical_class(s);
    Json gram = Json::array();
    const int rho = s.picard_rank();
    for (int i = 0; i < rho; ++i) {
      Row row(rho, 0);
      DivisorClass a(rho, 0), b(rho, 0);
      a[i] = 1;
      for (int k = 0; k < rho; ++k) {
        b.assign(rho, 0);
        b[k] = 1;
        row[k] = intersect(s, a, b);
      }
      gram.push_back(row);
    }
    j["intersection_matrix"] = gram;
    print_json(out, j);
  });

  // classes enumerate
  CLI::App* classes = app.add_subcommand("classes", "divisor class lists");
  classes->require_subcommand(1);
  CLI::App* enumerate = classes->add_subcommand(
      "enumerate", "effective-basis classes with fixed square and K-degree");
  add_surface(enumerate);
  enumerate->add_option("--self", self_int, "self-intersection D.D")
      ->required();
  enumerate->add_option("--k", k_int, "canonical degree D.K")->required();
  add_output(enumerate, false);
  enumerate->callback([&] {
    require_json_output(format);
    const SurfaceModel s = parse_surface(surface_str);
    const auto found = enumerate_classes(s, self_int, k_int);
    Json j;
    j["surface"] = s.name();
    j["self"] = self_int;
    j["k"] = k_int;
    j["count"] = found.size();
    j["classes"] = found;
    print_json(out, j);
  });

  // chi
  CLI::App* chi = app.add_subcommand("chi", "Euler pairing chi(E, F)");
  add_pair(chi);
  add_output(chi, false);
  chi->callback([&] {
    require_json_output(format);
    const SurfaceModel s = parse_surface(surface_str);
    const KClass e = parse_kclass(s, e_rank, e_c1, e_c2);
    const KClass f = parse_kclass(s, f_rank, f_c1, f_c2);
    Json j;
    j["surface"] = s.name();
    j["e"] = json_of(e);
    j["f"] = json_of(f);
    j["chi"] = euler_pairing(s, e, f);
    print_json(out, j);
  });

  // mutate
  CLI::App* mutate =
      app.add_subcommand("mutate", "numerical mutation of a pair");
  add_pair(mutate);
  mutate->add_option("--side", side, "left applies L_E to F, right R_F to E")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  add_output(mutate, false);
  mutate->callback([&] {
    require_json_output(format);
    const SurfaceModel s = parse_surface(surface_str);
    const KClass e = parse_kclass(s, e_rank, e_c1, e_c2);
    const KClass f = parse_kclass(s, f_rank, f_c1, f_c2);
    const KClass result =
        side == "left" ? left_mutate(s, e, f) : right_mutate(s, e, f);
    Json j;
    j["surface"] = s.name();
    j["side"] = side;
    j["e"] = json_of(e);
    j["f"] = json_of(f);
    j["result"] = json_of(result);
    print_json(out, j);
  });

  // catalog show / verify
  CLI::App* catalog =
      app.add_subcommand("catalog", "three-block decomposition table");
  catalog->require_subcommand(1);
  CLI::App* show = catalog->add_subcommand("show", "stored decompositions");
  CLI::Option* show_degree =
      show->add_option("--degree", degree, "surface degree");
  show->add_option("--variant", variant,
                   "table variant for degrees with several rows");
  add_output(show, true);
  show->callback([&] {
    std::vector<CatalogEntry> entries;
    if (show_degree->count())
      entries.push_back(three_block(degree, variant));
    else
      entries = all_catalog_entries();
    if (format == "table") {
      out << catalog_table(entries);
      return;
    }
    if (show_degree->count())
      print_json(out, json_of(entries.front()));
    else
      print_json(out, json_list(entries));
  });

  CLI::App* verify = catalog->add_subcommand(
      "verify", "re-run the semiorthogonality checks");
  CLI::Option* verify_degree =
      verify->add_option("--degree", degree, "surface degree");
  verify->add_option("--variant", variant,
                     "table variant for degrees with several rows");
  add_output(verify, false);
  verify->callback([&] {
    require_json_output(format);
    std::vector<CatalogEntry> entries;
    if (verify_degree->count())
      entries.push_back(three_block(degree, variant));
    else
      entries = all_catalog_entries();
    Json reports = Json::array();
    for (const CatalogEntry& e : entries) {
      Json j;
      j["label"] = e.label();
      j["complete"] = e.complete;
      const SodReport r = verify_sod(e.as_marked());
      j["report"] = json_of(r);
      reports.push_back(j);
    }
    if (verify_degree->count())
      print_json(out, reports.front());
    else
      print_json(out, reports);
  });

  // replay dp5 / dp6
  CLI::App* replay =
      app.add_subcommand("replay", "recorded mutation constructions");
  replay->require_subcommand(1);
  CLI::App* dp5 = replay->add_subcommand(
      "dp5", "quintic point construction on the degree-4 blow-up");
  add_output(dp5, false);
  dp5->callback([&] {
    require_json_output(format);
    print_json(out, json_of(replay_dp5()));
  });
  CLI::App* dp6 = replay->add_subcommand(
      "dp6", "degree-6 link sequences on their resolutions");
  dp6->add_option("--case", replay_case, "deg3 or deg2")
      ->required()
      ->check(CLI::IsMember({"deg3", "deg2"}));
  add_output(dp6, false);
  dp6->callback([&] {
    require_json_output(format);
    print_json(out, json_list(replay_dp6(replay_case)));
  });

  // descent check
  CLI::App* descent =
      app.add_subcommand("descent", "twist equation for block generators");
  descent->require_subcommand(1);
  CLI::App* check = descent->add_subcommand(
      "check", "search twists and run the scripted case analysis");
  CLI::Option* check_kase = check->add_option(
      "--case", case_id, "catalog case, e.g. 3(i) or degree3i");
  CLI::Option* check_scenario = check->add_option(
      "--scenario", scenario_path, "JSON file with surface and block fields");
  CLI::Option* check_bound =
      check->add_option("--bound", bound, "coefficient box half-width");
  add_output(check, false);
  check->callback([&] {
    require_json_output(format);
    if (check_kase->count() == check_scenario->count())
      throw CLI::ValidationError(
          "descent check", "pass exactly one of --case and --scenario");
    if (check_kase->count()) {
      print_json(out, json_of(check_case(normalize_case_id(case_id), bound)));
      return;
    }
    const Json spec = load_scenario(scenario_path);
    int b = bound;
    if (!check_bound->count() && spec.contains("bound"))
      b = spec.at("bound").get<int>();
    print_json(out, json_of(search_witnesses(scenario_problem(spec), b)));
  });

  // links matrix / expand / homaloidal
  CLI::App* links = app.add_subcommand("links", "Sarkisov link calculus");
  links->require_subcommand(1);
  CLI::App* matrix = links->add_subcommand(
      "matrix", "base-change matrices on (pullback of omega, exceptional sum)");
  CLI::Option* m_surf =
      matrix->add_option("--deg-surface", deg_surface, "degree of the surface");
  CLI::Option* m_point =
      matrix->add_option("--deg-point", deg_point, "degree of the point");
  matrix->add_flag("--fibration", fibration,
                   "print the conic-bundle four-block collection instead");
  add_output(matrix, true);
  matrix->callback([&] {
    if (fibration) {
      if (m_surf->count() || m_point->count())
        throw CLI::ValidationError(
            "links matrix", "--fibration excludes --deg-surface/--deg-point");
      require_json_output(format);
      print_json(out, json_of(conic_bundle_four_block()));
      return;
    }
    if (m_surf->count() != m_point->count())
      throw CLI::ValidationError(
          "links matrix", "--deg-surface and --deg-point go together");
    std::vector<LinkMatrix> list;
    if (m_surf->count())
      list.push_back(link_matrix(deg_surface, deg_point));
    else
      list = all_link_matrices();
    if (format == "table") {
      out << links_table(list);
      return;
    }
    if (m_surf->count())
      print_json(out, json_of(list.front()));
    else
      print_json(out, json_list(list));
  });

  CLI::App* expand = links->add_subcommand(
      "expand", "blow-up resolution with every divisor identity checked");
  expand->add_option("--deg-surface", deg_surface, "degree of the surface")
      ->required();
  expand->add_option("--deg-point", deg_point, "degree of the point")
      ->required();
  add_output(expand, false);
  expand->callback([&] {
    require_json_output(format);
    Json j = json_of(expand_link(deg_surface, deg_point));
    j["f_classes"] = json_list(classify_f_classes(deg_surface, deg_point));
    print_json(out, j);
  });

  CLI::App* homaloidal = links->add_subcommand(
      "homaloidal", "plane Cremona systems with r base points");
  homaloidal->add_option("--r", hom_r, "number of base points")->required();
  add_output(homaloidal, false);
  homaloidal->callback([&] {
    require_json_output(format);
    const auto systems = homaloidal_systems(static_cast<int>(hom_r));
    Json j;
    j["r"] = hom_r;
    j["count"] = systems.size();
    j["systems"] = json_list(systems);
    print_json(out, j);
  });

  // index compute / witness
  CLI::App* index =
      app.add_subcommand("index", "minimal-surface invariant tables");
  index->require_subcommand(1);
  CLI::App* compute = index->add_subcommand(
      "compute", "stored rows with their split-model recomputation");
  CLI::Option* i_table =
      compute->add_option("--table", table_str, "dp9, dp8, dp6, or dp5");
  CLI::Option* i_row = compute->add_option("--row", row_str, "row label");
  add_output(compute, true);
  compute->callback([&] {
    std::vector<SurfaceCase> list;
    if (i_row->count()) {
      if (!i_table->count())
        throw CLI::ValidationError("index compute", "--row needs --table");
      list.push_back(surface_case(parse_table(table_str), row_str));
    } else if (i_table->count()) {
      const SurfaceTable t = parse_table(table_str);
      for (const SurfaceCase& c : all_surface_cases())
        if (c.table == t) list.push_back(c);
    } else {
      list = all_surface_cases();
    }
    if (format == "table") {
      out << index_table(list);
      return;
    }
    if (i_row->count())
      print_json(out, json_of(list.front()));
    else
      print_json(out, json_list(list));
  });

  CLI::App* witness = index->add_subcommand(
      "witness", "block multiplicities whose c2 gcd equals the index");
  witness->add_option("--table", table_str, "dp9, dp8, dp6, or dp5")
      ->required();
  witness->add_option("--row", row_str, "row label")->required();
  witness->add_option("--m-max", m_max, "largest multiplicity to try");
  add_output(witness, false);
  witness->callback([&] {
    require_json_output(format);
    const SurfaceCase& c = surface_case(parse_table(table_str), row_str);
    const auto m = find_multiplicities(c, m_max);
    Json j;
    j["table"] = table_name(c.table);
    j["row"] = c.row;
    j["index"] = c.index;
    j["m_max"] = m_max;
    j["multiplicities"] = m ? Json(std::vector<ll>(m->begin(), m->end()))
                            : Json(nullptr);
    j["gcd"] = m ? Json(index_from_c2(c, *m)) : Json(nullptr);
    j["two_block_gcd_matches"] = two_block_gcd_matches(c);
    print_json(out, j);
  });

  // roots / reflect / orbit
  CLI::App* roots_cmd = app.add_subcommand(
      "roots", "classes of square -2 orthogonal to the canonical class");
  add_surface(roots_cmd);
  add_output(roots_cmd, false);
  roots_cmd->callback([&] {
    require_json_output(format);
    const SurfaceModel s = parse_surface(surface_str);
    const auto roots = root_orbit(s);
    Json j;
    j["surface"] = s.name();
    j["count"] = roots.size();
    j["roots"] = roots;
    print_json(out, j);
  });

  CLI::App* reflect_cmd =
      app.add_subcommand("reflect", "reflect a class in one root");
  add_surface(reflect_cmd);
  reflect_cmd->add_option("--class", class_str, "class to reflect")
      ->required();
  reflect_cmd->add_option("--root", root_str, "root, square -2 and K-trivial")
      ->required();
  add_output(reflect_cmd, false);
  reflect_cmd->callback([&] {
    require_json_output(format);
    const SurfaceModel s = parse_surface(surface_str);
    const DivisorClass x = parse_coords(class_str);
    check_divisor(s, x);
    const Root alpha = make_root(s, parse_coords(root_str));
    Json j;
    j["surface"] = s.name();
    j["class"] = x;
    j["root"] = alpha.cls;
    j["image"] = reflect(s, x, alpha);
    print_json(out, j);
  });

  CLI::App* orbit_cmd = app.add_subcommand(
      "orbit", "orbit of a class under the simple-root reflections");
  add_surface(orbit_cmd);
  orbit_cmd->add_option("--seed", seed_str, "starting class")->required();
  orbit_cmd->add_option("--cap", cap, "orbit size limit");
  add_output(orbit_cmd, false);
  orbit_cmd->callback([&] {
    require_json_output(format);
    const SurfaceModel s = parse_surface(surface_str);
    const DivisorClass seed = parse_coords(seed_str);
    check_divisor(s, seed);
    std::vector<LatticeAut> gens;
    for (const Root& a : simple_roots(s)) gens.push_back(aut_from_root(s, a));
    const auto points = orbit(s, seed, gens, static_cast<size_t>(cap));
    Json j;
    j["surface"] = s.name();
    j["seed"] = seed;
    j["cap"] = cap;
    j["size"] = points.size();
    j["orbit"] = points;
    print_json(out, j);
  });

  auto deepest = [&]() -> const CLI::App* {
    const CLI::App* leaf = &app;
    while (!leaf->get_subcommands().empty())
      leaf = leaf->get_subcommands().front();
    return leaf;
  };
  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << deepest()->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << deepest()->help();
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), out, err);
}

}  // namespace sodlab
