// a3b: classification runs, tiling construction and search, verification,
// count reproduction and coordinate export.

#include "a3b/builders.hpp"
#include "a3b/catalog.hpp"
#include "a3b/classifier.hpp"
#include "a3b/geometry.hpp"
#include "a3b/search.hpp"
#include "a3b/tiling.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace a3b;

namespace {

struct RunConfig {
  int f_max = 0;  // 0: the command's default
  int den_max = 84;
  int precision = kWorkingDigits;
  std::string tolerance = "1e-6";
  int search_cap = kDefaultSearchCap;
  std::string out_dir;
  bool audit = false;
  std::string format = "tsv";

  int f_max_or(int fallback) const { return f_max > 0 ? f_max : fallback; }
  Real closure_tol() const { return Real(tolerance); }
};

std::string default_out_dir() {
  if (const char* env = std::getenv("A3B_OUT"); env && *env) return env;
  return "a3b-out";
}

// "(1,4,2,2)/4@16" -> "1-4-2-2_4_f16"
std::string slug(const std::string& id) {
  std::string out;
  for (char c : id) {
    if (c == '(' || c == ')') continue;
    if (c == ',') out += '-';
    else if (c == '/') out += '_';
    else if (c == '@') out += "_f";
    else out += c;
  }
  return out;
}

std::string sci(const Real& x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

fs::path out_path(const RunConfig& cfg, const std::string& name) {
  fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + p.string());
  os << text;
}

void write_json(const fs::path& p, const ordered_json& j) { write_text(p, j.dump(2) + "\n"); }

ordered_json config_json(const RunConfig& cfg) {
  return {{"f_max", cfg.f_max},         {"den_max", cfg.den_max},    {"precision", cfg.precision},
          {"tolerance", cfg.tolerance}, {"search_cap", cfg.search_cap}, {"audit", cfg.audit},
          {"format", cfg.format}};
}

int finish(const RunConfig& cfg, const std::string& command, ordered_json summary, bool pass) {
  summary["command"] = command;
  summary["config"] = config_json(cfg);
  summary["pass"] = pass;
  auto p = out_path(cfg, command + "-summary.json");
  write_json(p, summary);
  std::cerr << "summary: " << p.string() << "\n";
  return pass ? 0 : 1;
}

// Rows of strings emitted as TSV (header first) or as a JSON array of objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string tsv() const {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << r[i];
      os << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
  }
  ordered_json json() const {
    auto arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json o;
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
      arr.push_back(o);
    }
    return arr;
  }
  void save(const RunConfig& cfg, const std::string& stem) const {
    if (cfg.format == "json") write_json(out_path(cfg, stem + ".json"), json());
    else write_text(out_path(cfg, stem + ".tsv"), tsv());
  }
};

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  try {
    return nlohmann::json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": not JSON: " + e.what());
  }
}

struct LoadedTiling {
  QuadClass quad;
  CombinatorialTiling tiling;
};

LoadedTiling load_tiling(const std::string& path) {
  auto j = read_json_file(path);
  if (!j.is_object() || !j.contains("quad")) throw std::invalid_argument(path + ": $.quad: missing");
  LoadedTiling out;
  try {
    out.quad = quad_from_json(j["quad"]);
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": $.quad: " + e.what());
  }
  try {
    out.tiling = tiling_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return out;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const RunConfig& cfg) {
  ClassifyOptions opts;
  opts.f_max = cfg.f_max_or(64);
  opts.audit = cfg.audit;
  opts.search_cap = cfg.search_cap;
  auto rows = classify_all(opts);

  Table kept{{"f", "quad", "class", "a", "b", "tileability"}, {}};
  std::set<std::pair<int, std::string>> got;
  std::map<std::string, int> reasons;
  for (const auto& r : rows) {
    if (r.dismissal) {
      ++reasons[*r.dismissal];
      continue;
    }
    QuadClass q = make_quad(r.angles);
    kept.rows.push_back({std::to_string(r.f), format_angles(r.angles), to_string(q.convexity), real_str(q.a, 12),
                         real_str(q.b, 12), to_string(r.tileability)});
    got.insert({r.f, format_angles(r.angles)});
  }
  std::set<std::pair<int, std::string>> want;
  for (const auto& e : expected_quads(opts.f_max)) want.insert({e.f, format_angles(e.angles)});

  auto extras = ordered_json::array(), missing = ordered_json::array();
  for (const auto& g : got)
    if (!want.count(g)) extras.push_back(g.second + "@" + std::to_string(g.first));
  for (const auto& w : want)
    if (!got.count(w)) missing.push_back(w.second + "@" + std::to_string(w.first));

  std::cout << kept.tsv();
  kept.save(cfg, "classify");
  ordered_json summary{{"f_max", opts.f_max}, {"kept", kept.rows.size()}, {"expected", want.size()},
                       {"extras", extras},    {"missing", missing}};
  if (cfg.audit) {
    write_text(out_path(cfg, "audit.tsv"), audit_tsv(rows));
    Table tally{{"reason", "count"}, {}};
    for (const auto& [reason, n] : reasons) tally.rows.push_back({reason, std::to_string(n)});
    tally.save(cfg, "dismissals");
    std::cout << "\n" << tally.tsv();
    ordered_json dj;
    for (const auto& [reason, n] : reasons) dj[reason] = n;
    summary["dismissals"] = dj;
  }
  const bool pass = extras.empty() && missing.empty();
  if (!pass) std::cerr << "classification differs from the catalog: " << extras.size() << " extra, "
                       << missing.size() << " missing\n";
  return finish(cfg, "classify", summary, pass);
}

// ---------------------------------------------------------------- tile

Flip parse_flip(const std::string& text) {
  auto at = text.find('@');
  if (at == std::string::npos) throw CLI::ValidationError("--flip", "expected first@N or second@N");
  std::string kind = text.substr(0, at);
  Flip f;
  if (kind == "first") f.kind = FlipKind::first;
  else if (kind == "second") f.kind = FlipKind::second;
  else throw CLI::ValidationError("--flip", "unknown flip kind '" + kind + "'");
  try {
    f.position = std::stoi(text.substr(at + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--flip", "bad timezone in '" + text + "'");
  }
  return f;
}

struct TileArgs {
  std::string quad;
  std::vector<std::string> flips;
  int special = -1;
  std::string fixture;
  bool all = false;
};

int cmd_tile(const RunConfig& cfg, const TileArgs& a) {
  std::vector<std::pair<std::string, CombinatorialTiling>> made;
  QuadClass q;
  if (!a.fixture.empty()) {
    auto ex = build_exceptional(a.fixture);
    q = ex.quad;
    made.emplace_back(a.fixture, ex.tiling);
  } else {
    if (a.quad.empty()) throw CLI::ValidationError("tile", "a quad id or --fixture is required");
    q = parse_quad_id(a.quad);
    if (a.all) {
      auto ts = constructive_tilings(q);
      for (std::size_t i = 0; i < ts.size(); ++i) made.emplace_back("constructive-" + std::to_string(i), ts[i]);
    } else if (a.special >= 0) {
      made.emplace_back("special-" + std::to_string(a.special), build_threefold_special(q, a.special));
    } else {
      std::vector<Flip> schedule;
      std::string name = "earth";
      for (const auto& s : a.flips) {
        schedule.push_back(parse_flip(s));
        name += "-" + s.substr(0, s.find('@')) + s.substr(s.find('@') + 1);
      }
      made.emplace_back(name, apply_flip_schedule(q, schedule));
    }
  }
  bool pass = true;
  auto files = ordered_json::array();
  Table t{{"name", "census", "valid", "file"}, {}};
  for (const auto& [name, tiling] : made) {
    auto problems = validate(tiling, q);
    pass = pass && problems.empty();
    auto p = out_path(cfg, "tile-" + slug(q.id()) + "-" + name + ".json");
    write_json(p, tiling_to_json(tiling, q));
    t.rows.push_back({name, census_str(tiling.census()), problems.empty() ? "yes" : "no", p.string()});
    for (const auto& pr : problems) std::cerr << name << ": " << pr << "\n";
    files.push_back(p.string());
  }
  std::cout << t.tsv();
  return finish(cfg, "tile", {{"quad", q.id()}, {"tilings", made.size()}, {"files", files}}, pass);
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::string quad;
  long long limit = 0;
  long long node_budget = 0;
};

int cmd_search(const RunConfig& cfg, const SearchArgs& a) {
  QuadClass q = parse_quad_id(a.quad);
  SearchOptions so;
  so.cap = cfg.search_cap;
  if (a.limit > 0) so.limit = static_cast<std::size_t>(a.limit);
  if (a.node_budget > 0) so.node_budget = static_cast<std::uint64_t>(a.node_budget);
  auto r = search_all_tilings(q, so);
  Table t{{"index", "census", "file"}, {}};
  auto files = ordered_json::array();
  const std::string dir = "search-" + slug(q.id());
  for (std::size_t i = 0; i < r.tilings.size(); ++i) {
    auto p = out_path(cfg, dir + "/tiling-" + std::to_string(i) + ".json");
    write_json(p, tiling_to_json(r.tilings[i], q));
    t.rows.push_back({std::to_string(i), census_str(r.tilings[i].census()), p.string()});
    files.push_back(p.string());
  }
  std::cout << t.tsv();
  std::cout << r.tilings.size() << " tilings, " << r.stats.nodes << " nodes, "
            << (r.complete ? "complete" : "incomplete") << "\n";
  t.save(cfg, dir + "/tilings");
  ordered_json summary{{"quad", q.id()},        {"tilings", r.tilings.size()}, {"complete", r.complete},
                       {"nodes", r.stats.nodes}, {"files", files}};
  return finish(cfg, "search", summary, r.complete);
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::vector<std::string> files;
  bool edges = false;
  bool sine = false;
};

int cmd_verify(const RunConfig& cfg, const VerifyArgs& a) {
  if (a.files.empty() && !a.edges && !a.sine) {
    throw CLI::ValidationError("verify", "give tiling files, --edges or --sine");
  }
  bool pass = true;
  ordered_json summary;
  auto results = ordered_json::array();
  for (const auto& path : a.files) {
    ordered_json r{{"file", path}};
    try {
      auto lt = load_tiling(path);
      auto problems = validate(lt.tiling, lt.quad);
      r["quad"] = lt.quad.id();
      r["census"] = census_str(lt.tiling.census());
      r["problems"] = problems;
      bool ok = problems.empty();
      if (ok) {
        auto sp = realize(lt.tiling, lt.quad, cfg.closure_tol());
        r["closure"] = sci(sp.closure);
      }
      r["pass"] = ok;
      std::cout << (ok ? "PASS " : "FAIL ") << path << " " << lt.quad.id() << "\n";
      for (const auto& p : problems) std::cout << "  " << p << "\n";
      pass = pass && ok;
    } catch (const RealizationError& e) {
      r["pass"] = false;
      r["error"] = e.what();
      std::cout << "FAIL " << path << " " << e.what() << "\n";
      pass = false;
    } catch (const std::invalid_argument& e) {
      r["pass"] = false;
      r["error"] = e.what();
      std::cout << "FAIL " << e.what() << "\n";
      pass = false;
    }
    results.push_back(r);
  }
  summary["tilings"] = results;
  if (a.edges) {
    auto rep = verify_edge_lengths();
    Table t{{"quad", "edge", "computed", "closed_form", "reference", "ok"}, {}};
    for (const auto& c : rep.checks) {
      t.rows.push_back({c.quad, std::string(1, c.edge), real_str(c.computed, 12),
                        c.closed_form ? real_str(*c.closed_form, 12) : "-", c.reference.value_or("-"),
                        c.ok ? "yes" : "no"});
    }
    std::cout << t.tsv();
    t.save(cfg, "edges");
    std::cout << (rep.pass ? "PASS" : "FAIL") << " edge lengths: closed forms " << sci(rep.max_closed_dev)
              << ", reference decimals " << sci(rep.max_reference_dev) << ", limits at f=" << rep.limit_f
              << " " << sci(rep.max_limit_dev) << "\n";
    summary["edges"] = {{"checks", rep.checks.size()},
                        {"max_closed_dev", sci(rep.max_closed_dev)},
                        {"max_reference_dev", sci(rep.max_reference_dev)},
                        {"max_limit_dev", sci(rep.max_limit_dev)},
                        {"pass", rep.pass}};
    pass = pass && rep.pass;
  }
  if (a.sine) {
    auto rep = sweep_sine_products(cfg.den_max, cfg.precision);
    std::cout << (rep.pass() ? "PASS" : "FAIL") << " sine products up to denominator " << cfg.den_max << ": "
              << rep.equal_tuples << " equal, " << rep.unequal_tuples << " unequal sampled, "
              << rep.mismatches.size() << " mismatches\n";
    for (const auto& m : rep.mismatches) std::cout << "  " << m << "\n";
    summary["sine"] = {{"den_max", cfg.den_max},
                       {"digits", cfg.precision},
                       {"equal", rep.equal_tuples},
                       {"unequal", rep.unequal_tuples},
                       {"mismatches", rep.mismatches}};
    pass = pass && rep.pass();
  }
  return finish(cfg, "verify", summary, pass);
}

// ---------------------------------------------------------------- realize

struct RealizeArgs {
  std::string file;
  int samples = 8;
};

int cmd_realize(const RunConfig& cfg, const RealizeArgs& a) {
  auto lt = load_tiling(a.file);
  auto problems = validate(lt.tiling, lt.quad);
  if (!problems.empty()) {
    for (const auto& p : problems) std::cerr << p << "\n";
    return finish(cfg, "realize", {{"file", a.file}, {"problems", problems}}, false);
  }
  auto sp = realize(lt.tiling, lt.quad, cfg.closure_tol());
  Real area = 0;
  for (int i = 0; i < lt.tiling.f(); ++i) area += tile_area(sp, i);
  const Real four_pi = 4 * boost::math::constants::pi<Real>();
  auto p = out_path(cfg, fs::path(a.file).stem().string() + "-coords.json");
  export_coordinates(sp, lt.tiling, lt.quad, p.string(), a.samples);
  std::cout << lt.quad.id() << "\tclosure " << sci(sp.closure) << "\tarea/4pi " << real_str(area / four_pi, 12)
            << "\t" << p.string() << "\n";
  ordered_json summary{{"file", a.file},
                       {"quad", lt.quad.id()},
                       {"closure", sci(sp.closure)},
                       {"area_over_4pi", real_str(area / four_pi, 12)},
                       {"coordinates", p.string()}};
  return finish(cfg, "realize", summary, true);
}

// ---------------------------------------------------------------- report

int cmd_report(const RunConfig& cfg) {
  const int f_top = std::min(cfg.f_max_or(20), cfg.search_cap);
  if (f_top < cfg.f_max_or(20)) std::cerr << "report: f limited to the search cap " << cfg.search_cap << "\n";
  std::vector<int> fs;
  for (int f = 6; f <= f_top; f += 2) fs.push_back(f);
  auto counts = count_tilings(fs, cfg.search_cap);
  Table t{{"f", "Q", "T", "Q_expected", "T_expected", "match"}, {}};
  bool pass = true;
  auto per_quad = ordered_json::object();
  for (const auto& c : counts) {
    auto want = table_counts(c.f);
    bool ok = want && want->first == c.quads && want->second == c.tilings;
    pass = pass && ok;
    t.rows.push_back({std::to_string(c.f), std::to_string(c.quads), std::to_string(c.tilings),
                      want ? std::to_string(want->first) : "-", want ? std::to_string(want->second) : "-",
                      ok ? "yes" : "no"});
    ordered_json pq;
    for (const auto& [id, n] : c.per_quad) pq[id] = n;
    per_quad[std::to_string(c.f)] = pq;
  }
  std::cout << t.tsv();
  t.save(cfg, "report");
  return finish(cfg, "report", {{"rows", t.json()}, {"per_quad", per_quad}}, pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"a3b: rational a^3b quadrilateral tilings of the sphere"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  cfg.out_dir = default_out_dir();

  auto even_f = CLI::Validator(
      [](std::string& s) -> std::string {
        int f = std::stoi(s);
        if (f < 6 || f % 2 != 0) return "f must be even and at least 6";
        return "";
      },
      "EVEN>=6");
  app.add_option("--f-max", cfg.f_max, "largest f")->check(even_f);
  app.add_option("--den-max", cfg.den_max, "denominator bound for the sine product sweep")->check(CLI::PositiveNumber);
  app.add_option("--precision", cfg.precision, "digits for numeric oracle checks")->check(CLI::Range(20, 200));
  app.add_option("--tolerance", cfg.tolerance, "closure tolerance")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            double v = 0;
            try {
              v = std::stod(s);
            } catch (const std::exception&) {
              return "not a number";
            }
            if (!(v > 1e-40 && v < 1)) return "tolerance must lie in (1e-40, 1)";
            return "";
          },
          "TOL"));
  app.add_option("--search-cap", cfg.search_cap, "largest f for exhaustive search")->check(CLI::Range(6, 200));
  app.add_flag("--audit", cfg.audit, "write the dismissal tables");
  app.add_option("--out", cfg.out_dir, "output directory (default $A3B_OUT or ./a3b-out)");
  app.add_option("--format", cfg.format, "table file format")->check(CLI::IsMember({"tsv", "json"}));

  auto* classify = app.add_subcommand("classify", "enumerate the tileable quads with f <= f-max");

  TileArgs tile_args;
  auto* tile = app.add_subcommand("tile", "build constructive tilings");
  tile->add_option("quad", tile_args.quad, "quad id, e.g. (3,20,4,13)/18@18 or family2@16");
  tile->add_option("--flip", tile_args.flips, "flip in the schedule: first@N or second@N");
  tile->add_option("--special", tile_args.special, "threefold special modification, rotation 0..2")
      ->check(CLI::Range(0, 2));
  tile->add_option("--fixture", tile_args.fixture, "exceptional fixture")->check(CLI::IsMember(exceptional_names()));
  tile->add_flag("--all", tile_args.all, "every constructive tiling of the quad");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "exhaustive tiling search");
  search->add_option("quad", search_args.quad, "quad id")->required();
  search->add_option("--limit", search_args.limit, "stop after this many tilings");
  search->add_option("--node-budget", search_args.node_budget, "stop after this many nodes");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "validate and realize tiling files; edge and sine checks");
  verify->add_option("files", verify_args.files, "tiling JSON files");
  verify->add_flag("--edges", verify_args.edges, "edge lengths against closed forms and reference decimals");
  verify->add_flag("--sine", verify_args.sine, "sine product decision against the numeric oracle");

  RealizeArgs realize_args;
  auto* realize_cmd = app.add_subcommand("realize", "place a tiling on the sphere and export coordinates");
  realize_cmd->add_option("file", realize_args.file, "tiling JSON file")->required();
  realize_cmd->add_option("--samples", realize_args.samples, "interior points per arc")->check(CLI::Range(0, 1000));

  auto* report = app.add_subcommand("report", "quad and tiling counts per f against the closed table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*classify) return cmd_classify(cfg);
    if (*tile) return cmd_tile(cfg, tile_args);
    if (*search) return cmd_search(cfg, search_args);
    if (*verify) return cmd_verify(cfg, verify_args);
    if (*realize_cmd) return cmd_realize(cfg, realize_args);
    if (*report) return cmd_report(cfg);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
