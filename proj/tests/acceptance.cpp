// End-to-end acceptance run. Prints one PASS/FAIL line per criterion, with
// indented detail lines, and exits nonzero when any criterion fails.

#include "a3b/builders.hpp"
#include "a3b/catalog.hpp"
#include "a3b/classifier.hpp"
#include "a3b/geometry.hpp"
#include "a3b/search.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace a3b;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void note(const std::string& s) { details.push_back(s); }
  void require(bool ok, const std::string& s) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + s);
  }
};

int failures = 0;

void report(int n, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << "\n";
  for (const auto& d : o.details) std::cout << "    " << d << "\n";
  std::cout.flush();
  failures += !o.pass;
}

template <class F>
void run(int n, const std::string& title, F&& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  report(n, title, o);
}

std::string sci(const Real& x) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << static_cast<double>(x);
  return os.str();
}

std::map<std::string, int> census_counts(const std::vector<CombinatorialTiling>& ts) {
  std::map<std::string, int> out;
  for (const auto& t : ts) ++out[census_to_solution(t.census()).str()];
  return out;
}

std::map<std::string, int> census_counts(const std::vector<CensusRow>& rows) {
  std::map<std::string, int> out;
  for (const auto& r : rows) out[census_to_solution(parse_census(r.census)).str()] += r.tilings;
  return out;
}

// Tilings realized by criterion 3, reused by the closure check.
std::vector<std::pair<QuadClass, CombinatorialTiling>> realized_pool;

void criterion_classification(Outcome& o) {
  auto t0 = Clock::now();
  ClassifyOptions opts;
  opts.f_max = 64;
  std::set<std::string> got, want;
  for (const auto& r : classify_all(opts))
    if (!r.dismissal) got.insert(r.id());
  for (const auto& e : expected_quads(64)) want.insert(format_angles(e.angles) + "@" + std::to_string(e.f));
  o.note("kept " + std::to_string(got.size()) + ", expected " + std::to_string(want.size()) + ", " +
         std::to_string(seconds_since(t0)) + " s");
  for (const auto& id : got)
    if (!want.count(id)) o.require(false, "extra " + id);
  for (const auto& id : want)
    if (!got.count(id)) o.require(false, "missing " + id);
  o.require(got == want, "kept set equals the catalog up to f = 64");
}

void criterion_counts(Outcome& o) {
  auto t0 = Clock::now();
  for (const auto& c : count_tilings({6, 8, 12, 16, 18, 20})) {
    auto want = table_counts(c.f);
    bool ok = want && c.quads == want->first && c.tilings == want->second;
    o.require(ok, "f=" + std::to_string(c.f) + " Q=" + std::to_string(c.quads) + " T=" + std::to_string(c.tilings) +
                      (want ? " (table " + std::to_string(want->first) + "," + std::to_string(want->second) + ")" : ""));
  }
  o.note(std::to_string(seconds_since(t0)) + " s");
}

void criterion_thirty_six(Outcome& o) {
  std::vector<ExpectedQuad> quads;
  for (const auto& e : expected_quads(36))
    if (e.f == 36) quads.push_back(e);
  o.require(quads.size() == 5, std::to_string(quads.size()) + " quads at f = 36");
  for (const auto& e : quads) {
    QuadClass q = make_quad(e.angles);
    auto ts = constructive_tilings(q);
    bool valid = true;
    Real worst = 0;
    for (const auto& t : ts) {
      valid = valid && validate(t, q).empty();
      auto p = realize(t, q);
      worst = std::max(worst, p.closure);
      realized_pool.push_back({q, t});
    }
    o.require(valid, e.label + ": " + std::to_string(ts.size()) + " tilings validate, closure " + sci(worst));
    o.require(census_counts(ts) == census_counts(e.rows), e.label + ": censuses match the rows");
  }
  for (const auto& name : exceptional_names()) {
    auto ex = build_exceptional(name);
    if (ex.quad.f != 36) continue;
    o.require(validate(ex.tiling, ex.quad).empty(), "fixture " + name + " validates");
    realized_pool.push_back({ex.quad, ex.tiling});
  }
}

void criterion_edges(Outcome& o) {
  auto rep = verify_edge_lengths();
  o.require(rep.max_closed_dev <= closed_form_tolerance(), "closed forms, max deviation " + sci(rep.max_closed_dev));
  o.require(rep.max_reference_dev <= reference_tolerance(),
            "reference decimals, max deviation " + sci(rep.max_reference_dev));
  o.require(rep.max_limit_dev <= Real("1e-3"),
            "limits at f=" + std::to_string(rep.limit_f) + ", max deviation " + sci(rep.max_limit_dev));
  o.require(rep.pass, std::to_string(rep.checks.size()) + " edge checks");
}

void criterion_balance(Outcome& o) {
  struct Want {
    const char* quad;
    const char* census;
  };
  for (const Want& w : {Want{"(6,3,4,3)/6", "6αβδ,2γ^3"}, Want{"(1,4,2,2)/4", "8α^2βγ,8βδ^2,2γ^4"},
                        Want{"(15,6,10,7)/18", "14α^2β,10βγ^3,8αδ^3,6β^2γδ^2"},
                        Want{"(5,4,7,3)/9", "6α^3δ,18βγ^2,4α^2β^2,10αβδ^3"}}) {
    QuadClass q = make_quad(parse_angles(w.quad));
    auto refined = refine_vertex_types(q, enumerate_vertex_types(q));
    auto sols = solve_balance(q, refined.kept);
    auto want = census_to_solution(parse_census(w.census));
    std::string removed;
    for (const auto& t : refined.removed) removed += (removed.empty() ? "" : ",") + t.str();
    std::string listing;
    for (const auto& s : sols) listing += " {" + s.str() + "}";
    o.require(sols.size() == 1 && sols[0] == want, std::string(w.quad) + ": " + std::to_string(sols.size()) +
                                                       " solution(s) after dropping [" + removed + "]:" + listing);
    if (sols.size() != 1) {
      SearchOptions so;
      so.cap = 36;
      so.avc = refined.kept;
      auto r = search_all_tilings(q, so);
      std::string found;
      for (const auto& t : r.tilings) found += " {" + census_to_solution(t.census()).str() + "}";
      o.note(std::string("     exhaustive search over the same types: ") + std::to_string(r.tilings.size()) +
             " tiling(s) in " + std::to_string(r.stats.nodes) + " nodes" + (r.complete ? "" : " (incomplete)") +
             ":" + found);
    }
  }
}

void criterion_negatives(Outcome& o) {
  {
    QuadClass q = make_quad(parse_angles("(13,12,18,9)/24"));
    SearchOptions so;
    so.cap = 24;
    auto r = search_all_tilings(q, so);
    o.require(r.complete && r.tilings.empty(), "(13,12,18,9)/24: " + std::to_string(r.tilings.size()) +
                                                   " tilings, " + std::to_string(r.stats.nodes) + " nodes");
  }
  for (const auto& sweep : {halving_line_sweep(84, 84), sixth_line_sweep(false, 200), sixth_line_sweep(true, 200)}) {
    int with = 0;
    for (const auto& q : sweep.points) {
      auto f = angle_sum_f(q);
      if (!f || !solve_balance(*f, enumerate_vertex_types(q), {1}).empty()) ++with;
    }
    o.require(!sweep.points.empty() && with == 0,
              sweep.name + ": " + std::to_string(sweep.points.size()) + " points, " + std::to_string(with) +
                  " with a counting solution");
  }
  int dismissed = 0, rejected = 0;
  for (const auto& c : concave_table_candidates()) {
    auto r = assess(parse_angles(c.angles), {});
    if (c.survives) {
      o.require(!r.dismissal, c.angles + "@" + std::to_string(c.f) + " kept");
      continue;
    }
    ++rejected;
    dismissed += r.dismissal.has_value();
  }
  o.require(rejected == 26 && dismissed == rejected, std::to_string(dismissed) + " of " + std::to_string(rejected) +
                                                         " concave candidates without αβδ or αγδ dismissed");
}

void criterion_properties(Outcome& o) {
  auto sweep = sweep_sine_products(84);
  o.require(sweep.pass(), "sine products d<=84: " + std::to_string(sweep.equal_tuples) + " equal, " +
                              std::to_string(sweep.unequal_tuples) + " unequal, " +
                              std::to_string(sweep.mismatches.size()) + " mismatches");
  std::mt19937_64 rng(7);
  std::vector<QuadClass> pool;
  for (const auto& e : expected_quads(40)) {
    QuadClass q = make_quad(e.angles);
    if (has_earth_map_vertices(q.angles, q.f) && flip_width(q, FlipKind::second)) pool.push_back(q);
  }
  int cases = 0, bad = 0;
  for (; cases < 1000; ++cases) {
    const QuadClass& q = pool[rng() % pool.size()];
    const int n = q.f / 2;
    int p = static_cast<int>(rng() % n);
    auto t = apply_flip_schedule(q, {{FlipKind::second, p}});
    auto back = apply_flip(t, q, {FlipKind::second, p});
    bool ok = validate(t, q).empty() && static_cast<int>(t.vertices().size()) == q.f + 2 &&
              back.glue == build_earth_map(q).glue && canonical_key(t) == canonical_key(t.mirrored());
    bad += !ok;
  }
  o.require(bad == 0, std::to_string(cases) + " generated flips: " + std::to_string(bad) + " violations");
}

void criterion_closure(Outcome& o) {
  for (const auto& e : expected_quads(20)) {
    QuadClass q = make_quad(e.angles);
    for (const auto& t : constructive_tilings(q)) realized_pool.push_back({q, t});
  }
  Real worst = 0;
  for (const auto& [q, t] : realized_pool) worst = std::max(worst, realize(t, q).closure);
  o.require(worst <= closure_tolerance(),
            std::to_string(realized_pool.size()) + " realized tilings, worst closure " + sci(worst));
}

}  // namespace

int main() {
  run(1, "classification up to f = 64", criterion_classification);
  run(2, "tiling counts for f in {6,8,12,16,18,20}", criterion_counts);
  run(3, "tilings of the f = 36 quads", criterion_thirty_six);
  run(4, "edge lengths", criterion_edges);
  run(5, "unique counting solution after local refinement", criterion_balance);
  run(6, "negative cases", criterion_negatives);
  run(7, "property checks", criterion_properties);
  run(8, "realization closure", criterion_closure);
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " of 8 criteria failing\n";
  return failures ? 1 : 0;
}
