#include "sodlab/descent.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sodlab {
namespace {

void validate_problem(const TwistProblem& p) {
  const int rho = p.surface.picard_rank();
  if (p.block.empty()) throw std::invalid_argument("twist problem: empty block");
  if (p.gauge_coord < 0 || p.gauge_coord >= rho)
    throw std::invalid_argument("twist problem: gauge coordinate out of range");
  for (const BlockGen& g : p.block) {
    if (g.rank < 1) throw std::invalid_argument("twist problem: rank < 1");
    check_divisor(p.surface, g.c1);
  }
}

std::string coord_name(const SurfaceModel& s, int j) {
  if (s.kind == SurfaceKind::Quadric) return j == 0 ? "H1" : "H2";
  return j == 0 ? "H" : "L" + std::to_string(j);
}

ll floor_mod(ll a, ll m) { return ((a % m) + m) % m; }

// ---------------------------------------------------------------------------
// Gauge representative: reduce a solution point by the homogeneous lattice,
// treating the pinned coordinate first so it absorbs the canonical shift.

Row to_point(const DivisorClass& m, ll r) {
  Row y(m.begin(), m.end());
  y.push_back(r);
  return y;
}

std::pair<DivisorClass, ll> from_point(const Row& y) {
  return {DivisorClass(y.begin(), y.end() - 1), y.back()};
}

Row permute(const Row& y, const std::vector<int>& perm) {
  Row out(y.size());
  for (size_t k = 0; k < perm.size(); ++k) out[k] = y[perm[k]];
  return out;
}

std::pair<DivisorClass, ll> reduce_by_lattice(const TwistProblem& p,
                                              const TwistSolutions& t) {
  const int rho = p.surface.picard_rank();
  std::vector<int> perm;
  perm.push_back(p.gauge_coord);
  for (int j = 0; j < rho; ++j)
    if (j != p.gauge_coord) perm.push_back(j);
  perm.push_back(rho);  // the r slot last

  std::vector<Row> rows;
  for (const auto& [dm, dr] : t.lattice) rows.push_back(permute(to_point(dm, dr), perm));
  Row y = permute(to_point(t.m0, t.r0), perm);

  // Integer row echelon, then reduce the point entry at each pivot column
  // into [0, pivot).
  size_t top = 0;
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
  for (size_t col = 0; col < y.size() && top < rows.size(); ++col) {
    for (;;) {
      size_t piv = rows.size();
      for (size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 &&
            (piv == rows.size() ||
             std::abs(rows[i][col]) < std::abs(rows[piv][col])))
          piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[top], rows[piv]);
      bool clean = true;
      for (size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        ll q = rows[i][col] / rows[top][col];
        for (size_t k = col; k < y.size(); ++k) rows[i][k] -= q * rows[top][k];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (top < rows.size() && rows[top][col] != 0) {
      if (rows[top][col] < 0)
        for (ll& v : rows[top]) v = -v;
      pivots.emplace_back(top, col);
      ++top;
    }
  }
  for (const auto& [ri, col] : pivots) {
    ll piv = rows[ri][col];
    ll rem = floor_mod(y[col], piv);
    ll q = (y[col] - rem) / piv;
    for (size_t k = 0; k < y.size(); ++k) y[k] -= q * rows[ri][k];
  }

  Row back(y.size());
  for (size_t k = 0; k < perm.size(); ++k) back[perm[k]] = y[k];
  return from_point(back);
}

// ---------------------------------------------------------------------------
// Fast exact feasibility filter.  For s != 0 and a basis coordinate where K
// has a unit coefficient, the residue of r mod s is pinned by that row and
// the other rows decide solvability; solutions themselves always come from
// the Smith solver.  Returns false when in doubt.

bool clearly_infeasible(const DivisorClass& k, ll s, const DivisorClass& c) {
  if (s == 0) {
    // c = r K exactly, or no solution.
    int j0 = 0;
    while (k[j0] == 0) ++j0;  // K is never the zero class
    if (c[j0] % k[j0] != 0) return true;
    ll r = c[j0] / k[j0];
    for (size_t j = 0; j < k.size(); ++j)
      if (c[j] != r * k[j]) return true;
    return false;
  }
  ll m = std::abs(s);
  if (m == 1) return false;
  int unit = -1;
  for (size_t j = 0; j < k.size(); ++j)
    if (std::abs(k[j]) == 1) { unit = static_cast<int>(j); break; }
  if (unit < 0) return false;  // fall through to the full solve
  ll r0 = floor_mod(k[unit] == 1 ? c[unit] : -c[unit], m);
  for (size_t j = 0; j < k.size(); ++j)
    if (floor_mod(r0 * k[j] - c[j], m) != 0) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Affine integer forms c0 + sum_i c_i t_i over the family parameters, enough
// symbolic algebra for the scripted minors (one symbolic row per matrix).

struct Aff {
  std::vector<ll> c;  // c[0] constant term, c[i] coefficient of t_i
};

Aff aff_const(int nparams, ll v) {
  Aff f;
  f.c.assign(nparams + 1, 0);
  f.c[0] = v;
  return f;
}

Aff aff_param(int nparams, int i, ll coeff) {
  Aff f;
  f.c.assign(nparams + 1, 0);
  f.c[1 + i] = coeff;
  return f;
}

bool aff_is_const(const Aff& f) {
  return std::all_of(f.c.begin() + 1, f.c.end(), [](ll v) { return v == 0; });
}

Aff aff_add(const Aff& a, const Aff& b) {
  Aff f = a;
  for (size_t i = 0; i < f.c.size(); ++i) f.c[i] += b.c[i];
  return f;
}

Aff aff_scale(ll s, const Aff& a) {
  Aff f = a;
  for (ll& v : f.c) v *= s;
  return f;
}

Aff aff_mul(const Aff& a, const Aff& b) {
  if (aff_is_const(a)) return aff_scale(a.c[0], b);
  if (aff_is_const(b)) return aff_scale(b.c[0], a);
  throw std::logic_error("affine product would be nonlinear");
}

ll aff_eval(const Aff& f, const std::vector<ll>& t) {
  ll v = f.c[0];
  for (size_t i = 1; i < f.c.size(); ++i) v += f.c[i] * t[i - 1];
  return v;
}

std::string aff_str(const Aff& f) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 1; i < f.c.size(); ++i) {
    if (f.c[i] == 0) continue;
    ll v = std::abs(f.c[i]);
    if (first) {
      if (f.c[i] < 0) os << "-";
    } else {
      os << (f.c[i] < 0 ? " - " : " + ");
    }
    if (v != 1) os << v << "*";
    os << "t" << i;
    first = false;
  }
  if (f.c[0] != 0 || first) {
    if (first)
      os << f.c[0];
    else
      os << (f.c[0] < 0 ? " - " : " + ") << std::abs(f.c[0]);
  }
  return os.str();
}

Aff det_affine(const std::vector<std::vector<Aff>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  const int np = static_cast<int>(m[0][0].c.size()) - 1;
  Aff out = aff_const(np, 0);
  for (size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Aff>> minor;
    for (size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      minor.emplace_back(m[k].begin() + 1, m[k].end());
    }
    Aff term = aff_mul(m[i][0], det_affine(minor));
    out = aff_add(out, aff_scale((i % 2 == 0) ? 1 : -1, term));
  }
  return out;
}

// Smallest modulus m >= 2 dividing every parameter coefficient but not the
// constant term, so the form is nonzero for every integer parameter value;
// 0 encodes a nonzero constant form.
std::optional<ll> never_zero_modulus(const Aff& f) {
  ll g = 0;
  for (size_t i = 1; i < f.c.size(); ++i) g = std::gcd(g, f.c[i]);
  if (g == 0) return f.c[0] != 0 ? std::optional<ll>(0) : std::nullopt;
  for (ll m = 2; m <= g; ++m)
    if (g % m == 0 && f.c[0] % m != 0) return m;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Scripted lemmas.

// For a block of line bundles on pairwise distinct exceptional curves:
// verifies the support structure that makes the unit-sum characterization
// exact, and returns the supporting coordinates.  The argument: a spare
// exceptional row forces r == 0 mod s, each support row then forces
// x_i == 0 mod s, so |s| >= 2 contradicts primitivity; s == 0 forces x = 0
// through the H row; for s = +-1 the gauge pins r = 0 and
// M = -s * sum x_i c1_i.
std::vector<int> line_block_supports(const TwistProblem& p) {
  const DivisorClass k = canonical_class(p.surface);
  std::vector<int> supports;
  for (const BlockGen& g : p.block) {
    if (g.rank != 1) throw std::logic_error("line block: rank != 1");
    int at = -1;
    for (size_t j = 0; j < g.c1.size(); ++j) {
      if (g.c1[j] == 0) continue;
      if (g.c1[j] != 1 || at >= 0)
        throw std::logic_error("line block: not a single exceptional curve");
      at = static_cast<int>(j);
    }
    if (at < 1 || k[at] != 1)
      throw std::logic_error("line block: support not an exceptional line");
    if (std::find(supports.begin(), supports.end(), at) != supports.end())
      throw std::logic_error("line block: repeated support");
    supports.push_back(at);
  }
  if (std::find(supports.begin(), supports.end(), p.gauge_coord) !=
          supports.end() ||
      k[p.gauge_coord] != 1)
    throw std::logic_error("line block: gauge row not spare");
  return supports;
}

std::string unit_sum_note(const TwistProblem& p,
                          const std::vector<int>& supports) {
  std::ostringstream os;
  os << "block of line bundles on ";
  for (size_t i = 0; i < supports.size(); ++i)
    os << (i ? ", " : "") << coord_name(p.surface, supports[i]);
  os << ": the spare " << coord_name(p.surface, p.gauge_coord)
     << " row forces r == 0 (mod s) and each support row x_i == 0 (mod s), "
        "so primitivity leaves sum x_i = +-1; in the gauge r = 0 and "
        "M = -(sum x_i) * (x_1 c1_1 + ... + x_n c1_n)";
  return os.str();
}

// Residue table for a single generator of rank n: for each r mod n the first
// coordinate where n fails to divide r*K_j - c_j.  Present only when every
// residue is blocked, i.e. the system n*M = r*K - c1 has no solution at all.
struct ResidueObstruction {
  ll modulus = 0;
  std::vector<std::pair<ll, int>> violations;  // residue -> coordinate
};

std::optional<ResidueObstruction> single_generator_obstruction(
    const TwistProblem& p) {
  const BlockGen& g = p.block.front();
  const DivisorClass k = canonical_class(p.surface);
  ResidueObstruction out;
  out.modulus = g.rank;
  for (ll r = 0; r < g.rank; ++r) {
    int bad = -1;
    for (size_t j = 0; j < k.size(); ++j)
      if (floor_mod(r * k[j] - g.c1[j], g.rank) != 0) {
        bad = static_cast<int>(j);
        break;
      }
    if (bad < 0) return std::nullopt;
    out.violations.emplace_back(r, bad);
  }
  return out;
}

std::string residue_note(const TwistProblem& p, const ResidueObstruction& o) {
  std::ostringstream os;
  os << "single generator of rank " << o.modulus << ": mod " << o.modulus;
  for (const auto& [r, j] : o.violations)
    os << ", r = " << r << " fails at the " << coord_name(p.surface, j)
       << " row";
  os << "; no twist solves the system for any r";
  return os.str();
}

[[noreturn]] void contradiction(const std::string& what) {
  throw std::runtime_error("descent script contradiction: " + what);
}

// ---------------------------------------------------------------------------
// Case scripts.

ll sum_of(const std::vector<ll>& x) {
  return std::accumulate(x.begin(), x.end(), 0LL);
}

// Verify every witness of a line block matches the unit-sum family shape.
void check_line_block_witnesses(const TwistProblem& p,
                                const DescentReport& rep,
                                const std::vector<int>& supports) {
  for (const TwistWitness& w : rep.witnesses) {
    ll s = sum_of(w.x);
    if (s != 1 && s != -1)
      contradiction(rep.case_id + ": witness with sum " + std::to_string(s));
    if (w.r != 0) contradiction(rep.case_id + ": witness with r != 0");
    DivisorClass want = zero_divisor(p.surface);
    for (size_t i = 0; i < supports.size(); ++i) want[supports[i]] = -s * w.x[i];
    if (w.m != want) contradiction(rep.case_id + ": witness off the family");
  }
  if (rep.witness_count == 0)
    contradiction(rep.case_id + ": expected leading-block witnesses");
}

// The twist family of a unit-sum branch: M = -s * sum x_i c1_i with
// x = (t_1, .., t_{n-1}, s - sum t_i), as affine forms in the t_i.
std::vector<Aff> family_twist(const TwistProblem& p,
                              const std::vector<int>& supports, ll branch) {
  const int rho = p.surface.picard_rank();
  const int np = static_cast<int>(supports.size()) - 1;
  std::vector<Aff> m(rho, aff_const(np, 0));
  Aff last = aff_const(np, branch);  // x_n = branch - sum t_i
  for (int i = 0; i < np; ++i) {
    m[supports[i]] = aff_param(np, i, -branch);
    last = aff_add(last, aff_param(np, i, -1));
  }
  m[supports.back()] = aff_scale(-branch, last);
  return m;
}

// Columns (c1_k + rank_k M | -K) restricted to `rows`, as affine forms.
std::vector<std::vector<Aff>> system_minor(const TwistProblem& other,
                                           const std::vector<Aff>& m,
                                           const std::vector<int>& rows) {
  const int np = static_cast<int>(m[0].c.size()) - 1;
  const DivisorClass k = canonical_class(other.surface);
  std::vector<std::vector<Aff>> out;
  for (int j : rows) {
    std::vector<Aff> row;
    for (const BlockGen& g : other.block)
      row.push_back(aff_add(aff_const(np, g.c1[j]), aff_scale(g.rank, m[j])));
    row.push_back(aff_const(np, -k[j]));
    out.push_back(row);
  }
  return out;
}

// Instantiated cross-check: the full integer system for the other block over
// a concrete twist has only the trivial combination.
void check_point_kernel(const TwistProblem& other, const DivisorClass& m) {
  const int rho = other.surface.picard_rank();
  const DivisorClass k = canonical_class(other.surface);
  Mat a(rho, Row(other.block.size() + 1, 0));
  for (int j = 0; j < rho; ++j) {
    for (size_t i = 0; i < other.block.size(); ++i)
      a[j][i] = other.block[i].c1[j] + other.block[i].rank * m[j];
    a[j][other.block.size()] = -k[j];
  }
  if (!integer_kernel(a).empty())
    contradiction("nontrivial combination over a family twist");
}

// Common body for the two-block eliminations (degrees 4 and 2(ii)) and the
// leading part of 3(i): leading line block searched and characterized, the
// other block killed by a symbolic minor over both unit-sum branches.
DescentReport run_family_case(const std::string& id, ll bound,
                              const CatalogEntry& entry, int lead_block,
                              int other_block,
                              const std::vector<int>& minor_rows) {
  TwistProblem lead = block_problem(entry, lead_block);
  DescentReport rep = search_witnesses(lead, bound);
  rep.case_id = id;
  std::vector<int> supports = line_block_supports(lead);
  check_line_block_witnesses(lead, rep, supports);
  rep.notes.push_back(unit_sum_note(lead, supports));

  TwistProblem other = block_problem(entry, other_block);
  for (ll branch : {1LL, -1LL}) {
    std::vector<Aff> m = family_twist(lead, supports, branch);
    // Tie the symbolic family to the found witnesses.
    for (const TwistWitness& w : rep.witnesses) {
      if (sum_of(w.x) != branch) continue;
      std::vector<ll> t(w.x.begin(), w.x.end() - 1);
      for (size_t j = 0; j < m.size(); ++j)
        if (aff_eval(m[j], t) != w.m[j])
          contradiction(id + ": symbolic family misses a witness");
    }
    Aff minor = det_affine(system_minor(other, m, minor_rows));
    std::optional<ll> mod = never_zero_modulus(minor);
    if (!mod) contradiction(id + ": family minor can vanish");
    std::ostringstream os;
    os << "sum " << (branch > 0 ? "+1" : "-1") << " family: minor at rows (";
    for (size_t i = 0; i < minor_rows.size(); ++i)
      os << (i ? "," : "") << coord_name(lead.surface, minor_rows[i]);
    os << ") of the complementary block system is " << aff_str(minor)
       << (*mod == 0 ? ", a nonzero constant"
                     : ", nonzero mod " + std::to_string(*mod))
       << "; only the trivial combination solves it on the whole family";
    rep.notes.push_back(os.str());

    // Instantiated kernels: small parameter grid plus the found witnesses.
    const int np = static_cast<int>(supports.size()) - 1;
    std::vector<ll> t(np, -3);
    for (;;) {
      DivisorClass mv(lead.surface.picard_rank(), 0);
      for (size_t j = 0; j < m.size(); ++j) mv[j] = aff_eval(m[j], t);
      check_point_kernel(other, mv);
      int k = 0;
      while (k < np && t[k] == 3) t[k++] = -3;
      if (k == np) break;
      ++t[k];
    }
    for (const TwistWitness& w : rep.witnesses)
      if (sum_of(w.x) == branch) check_point_kernel(other, w.m);
  }
  return rep;
}

DescentReport run_single_case(const std::string& id, ll bound,
                              const CatalogEntry& entry, int block_index,
                              const std::string& extra_note) {
  TwistProblem p = block_problem(entry, block_index);
  if (p.block.size() != 1)
    throw std::logic_error(id + ": expected a single generator");
  std::optional<ResidueObstruction> obs = single_generator_obstruction(p);
  if (!obs) contradiction(id + ": residue table has a feasible residue");
  DescentReport rep = search_witnesses(p, bound);
  rep.case_id = id;
  if (rep.witness_count != 0)
    contradiction(id + ": witness against the residue table");
  rep.conclusion = DescentConclusion::NoNontrivialGenerator;
  rep.notes.push_back(residue_note(p, *obs));
  if (!extra_note.empty()) rep.notes.push_back(extra_note);
  return rep;
}

DescentReport case_degree4(ll bound) {
  DescentReport rep =
      run_family_case("4", bound, three_block(4), 0, 1, {1, 0, 4});
  rep.conclusion = DescentConclusion::SimultaneousDescentImpossible;
  rep.notes.push_back(
      "both blocks would need a nontrivial combination over one twist; the "
      "minors rule the second block out on every family the first block "
      "allows");
  return rep;
}

DescentReport case_degree3i(ll bound) {
  CatalogEntry entry = three_block(3, "i");
  DescentReport rep = run_family_case("3(i)", bound, entry, 0, 1, {1, 2, 3, 4});
  // The third block carries a power of the canonical class.
  const DivisorClass k = canonical_class(entry.surface);
  std::string found;
  ll power = 0;
  for (const CatClass& c : entry.blocks[2].classes) {
    if (!c.c1) continue;
    ll m = 0;
    bool ok = false;
    for (size_t j = 0; j < k.size() && !ok; ++j)
      if (k[j] != 0 && (*c.c1)[j] % k[j] == 0) {
        m = (*c.c1)[j] / k[j];
        ok = true;
      }
    if (!ok || m == 0) continue;
    bool match = true;
    for (size_t j = 0; j < k.size(); ++j) match &= (*c.c1)[j] == m * k[j];
    if (match) {
      found = c.name.empty() ? divisor_str(entry.surface, *c.c1) : c.name;
      power = m;
      break;
    }
  }
  if (found.empty()) contradiction("3(i): no canonical power in block 3");
  std::ostringstream os;
  os << "third block contains " << found << ", the K^" << power
     << " class: a block holding a canonical power cannot descend to a "
        "division-algebra category over a field";
  rep.notes.push_back(os.str());
  rep.conclusion = DescentConclusion::OmegaInBlock;
  return rep;
}

DescentReport case_degree2ii(ll bound) {
  DescentReport rep =
      run_family_case("2(ii)", bound, three_block(2, "ii"), 1, 0, {1, 0, 4});
  rep.conclusion = DescentConclusion::SimultaneousDescentImpossible;
  rep.notes.push_back(
      "the line block fixes the twist family, and the rank-2 pair admits "
      "only the trivial combination on all of it");
  return rep;
}

DescentReport case_degree1iii(ll bound) {
  CatalogEntry entry = three_block(1, "iii");
  TwistProblem p = block_problem(entry, 0);
  if (p.block.size() != 2 || p.block[0].rank != 3 || p.block[1].rank != 3)
    throw std::logic_error("1(iii): unexpected block shape");
  // Mod 3 with s = 3(a+b): the clean L1 row gives r == 0, then the rows
  // where exactly one c1 is supported give a == 0 and b == 0.
  const DivisorClass& c1 = p.block[0].c1;
  const DivisorClass& c2 = p.block[1].c1;
  const DivisorClass k = canonical_class(p.surface);
  int row_a = -1, row_b = -1;
  for (size_t j = 1; j < k.size(); ++j) {
    if (c1[j] == 1 && c2[j] == 0 && row_a < 0) row_a = static_cast<int>(j);
    if (c1[j] == 0 && c2[j] == 1 && row_b < 0) row_b = static_cast<int>(j);
  }
  if (row_a < 0 || row_b < 0 || c1[1] != 0 || c2[1] != 0 || k[1] != 1)
    throw std::logic_error("1(iii): rows for the mod-3 script not found");
  DescentReport rep = search_witnesses(p, bound);
  rep.case_id = "1(iii)";
  if (rep.witness_count != 0)
    contradiction("1(iii): witness against the mod-3 elimination");
  rep.conclusion = DescentConclusion::NoNontrivialGenerator;
  std::ostringstream os;
  os << "two rank-3 generators, s = 3(a+b): the L1 row reads r == 0 (mod 3), "
        "the "
     << coord_name(p.surface, row_a) << " row a + 3(a+b)m = r so a == 0, the "
     << coord_name(p.surface, row_b)
     << " row b == 0 (mod 3); coprimality of (a, b) fails";
  rep.notes.push_back(os.str());
  return rep;
}

}  // namespace

TwistProblem block_problem(const CatalogEntry& e, int block_index,
                           int gauge_coord) {
  if (block_index < 0 || block_index >= static_cast<int>(e.blocks.size()))
    throw std::invalid_argument("block_problem: no such block");
  TwistProblem p;
  p.surface = e.surface;
  if (gauge_coord < 0) gauge_coord = e.surface.picard_rank() >= 2 ? 1 : 0;
  p.gauge_coord = gauge_coord;
  for (const CatClass& c : e.blocks[block_index].classes) {
    if (!c.c1)
      throw std::invalid_argument("block_problem: class without c1: " +
                                  c.name);
    p.block.push_back(BlockGen{c.rank, *c.c1, c.name});
  }
  validate_problem(p);
  return p;
}

TwistSolutions solve_fixed_coefficients(const TwistProblem& p,
                                        const std::vector<ll>& x) {
  validate_problem(p);
  if (x.size() != p.block.size())
    throw std::invalid_argument("solve_fixed_coefficients: x size mismatch");
  const int rho = p.surface.picard_rank();
  const DivisorClass k = canonical_class(p.surface);
  ll s = 0;
  DivisorClass c = zero_divisor(p.surface);
  for (size_t i = 0; i < x.size(); ++i) {
    s += x[i] * p.block[i].rank;
    c = add(c, scale(x[i], p.block[i].c1));
  }
  TwistSolutions out;
  if (clearly_infeasible(k, s, c)) return out;
  Mat a(rho, Row(rho + 1, 0));
  Row b(rho);
  for (int j = 0; j < rho; ++j) {
    a[j][j] = s;
    a[j][rho] = -k[j];
    b[j] = -c[j];
  }
  ZSolve z = solve_integer(a, b);
  if (!z.solvable) return out;
  out.solvable = true;
  out.m0 = DivisorClass(z.x0.begin(), z.x0.begin() + rho);
  out.r0 = z.x0[rho];
  for (const Row& g : z.kernel)
    out.lattice.emplace_back(DivisorClass(g.begin(), g.begin() + rho),
                             g[rho]);
  return out;
}

TwistWitness make_witness(const TwistProblem& p, std::vector<ll> x,
                          DivisorClass m, ll r) {
  DivisorClass lhs = zero_divisor(p.surface);
  for (size_t i = 0; i < x.size(); ++i)
    lhs = add(lhs, scale(x[i], add(p.block[i].c1, scale(p.block[i].rank, m))));
  // The x_i multiply rank-weighted twists, so compare against r K directly.
  if (lhs != scale(r, canonical_class(p.surface)))
    throw std::logic_error("witness fails the twist equation");
  return TwistWitness{std::move(x), std::move(m), r};
}

std::string conclusion_str(DescentConclusion c) {
  switch (c) {
    case DescentConclusion::NoNontrivialGenerator:
      return "NoNontrivialGenerator";
    case DescentConclusion::OmegaInBlock:
      return "OmegaInBlock";
    case DescentConclusion::SimultaneousDescentImpossible:
      return "SimultaneousDescentImpossible";
  }
  throw std::logic_error("unknown conclusion");
}

DescentReport search_witnesses(const TwistProblem& p, ll bound) {
  validate_problem(p);
  if (bound < 1) throw std::invalid_argument("search_witnesses: bound < 1");
  const int n = static_cast<int>(p.block.size());
  DescentReport rep;
  rep.case_id = "search";
  rep.search_bound = bound;
  std::vector<ll> x(n, -bound);
  for (;;) {
    ll g = 0;
    int first = 0;
    for (ll v : x) {
      if (g == 0 && v != 0) first = v > 0 ? 1 : -1;
      g = std::gcd(g, v);
    }
    if (g == 1 && first > 0) {
      TwistSolutions sols = solve_fixed_coefficients(p, x);
      if (sols.solvable) {
        auto [m, r] = reduce_by_lattice(p, sols);
        if (rep.witness_count < kWitnessCap)
          rep.witnesses.push_back(make_witness(p, x, m, r));
        ++rep.witness_count;
      }
    }
    int k = n - 1;
    while (k >= 0 && x[k] == bound) x[k--] = -bound;
    if (k < 0) break;
    ++x[k];
  }
  if (rep.witness_count > kWitnessCap)
    rep.notes.push_back("witness list truncated at " +
                        std::to_string(kWitnessCap) + " of " +
                        std::to_string(rep.witness_count));
  if (rep.witness_count == 0) {
    rep.conclusion = DescentConclusion::NoNontrivialGenerator;
    rep.notes.push_back("no solvable primitive combination with |x_i| <= " +
                        std::to_string(bound));
  }
  return rep;
}

const std::vector<std::string>& descent_case_ids() {
  static const std::vector<std::string> ids = {
      "4",      "3(i)", "3(ii)", "2(i)",  "2(ii)",
      "2(iii)", "1(i)", "1(ii)", "1(iii)", "1(iv)"};
  return ids;
}

DescentReport check_case(const std::string& case_id, ll bound) {
  if (bound < 1) throw std::invalid_argument("check_case: bound < 1");
  if (case_id == "4") return case_degree4(bound);
  if (case_id == "3(i)") return case_degree3i(bound);
  if (case_id == "3(ii)")
    return run_single_case("3(ii)", bound, three_block(3, "ii"), 0, "");
  if (case_id == "2(i)")
    return run_single_case(
        "2(i)", bound, three_block(2, "i"), 1,
        "the first block prints no c1; scripted from the second block's "
        "single rank-2 generator with c1 = H, in parallel with the "
        "degree-3 (ii) elimination");
  if (case_id == "2(ii)") return case_degree2ii(bound);
  if (case_id == "2(iii)")
    return run_single_case("2(iii)", bound, three_block(2, "iii"), 0, "");
  if (case_id == "1(i)")
    return run_single_case("1(i)", bound, three_block(1, "i"), 0, "");
  if (case_id == "1(ii)")
    return run_single_case("1(ii)", bound, three_block(1, "ii"), 0, "");
  if (case_id == "1(iii)") return case_degree1iii(bound);
  if (case_id == "1(iv)")
    return run_single_case("1(iv)", bound, three_block(1, "iv"), 0, "");
  throw std::invalid_argument("check_case: unknown case " + case_id);
}

}  // namespace sodlab
