// mcone: batch driver for the momentum-cone library.
//
// Exit codes: 0 success, 2 input error, 3 golden mismatch, 4 invariant
// violation.

#include "mcone/contact_examples.hpp"
#include "mcone/localglobal.hpp"
#include "mcone/serialize.hpp"
#include "mcone/simplex.hpp"
#include "mcone/spherical.hpp"
#include "mcone/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace mcone;

constexpr int kExitInput = 2;
constexpr int kExitGolden = 3;
constexpr int kExitInvariant = 4;

struct Options {
  std::string input;
  std::string out;
  std::string format = "json";
  int resolution = 512;
  std::uint64_t seed = 0;

  // analyze
  std::string family;
  int n = 1;
  int k = 0;
  int orientation = 1;
  double a = 0.0;
  double b = kPi / 2;
  bool restrict = false;
  int shell_layers = 1;

  // tables
  int table = 0;
  std::string data_dir;

  // section-test
  int samples = 1000;

  // geodesic
  int from = -1;
  int to = -1;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Json& require_field(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw InputError("/" + key, "/" + key + ": missing field");
  return j[key];
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError(o.out, "cannot open output file " + o.out);
  f << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

ContactExample example_from_flags(const Options& o) {
  auto base = [&]() -> ContactExample {
    if (o.family == "mn") return ContactExample::mn(o.n);
    if (o.family == "interval") return ContactExample::interval(o.a, o.b, o.k);
    if (o.family == "hopf") return ContactExample::hopf(o.n, o.orientation);
    if (o.family == "complement") return ContactExample::complement(o.k);
    if (o.family == "cut") return ContactExample::cut(o.k);
    throw InputError("--family", "unknown family '" + o.family + "' (mn, interval, hopf, complement, cut)");
  };
  const ContactExample ex = base();
  return o.restrict ? ContactExample::restrict_to_circle(ex) : ex;
}

int run_analyze(Options o) {
  if (o.input.empty() && o.family.empty()) throw InputError("--family", "either --family or --input is required");
  ContactExample ex = ContactExample::mn(1);
  if (!o.input.empty()) {
    ExampleSpec spec = example_from_json(parse_json(read_input(o.input)));
    ex = spec.example;
    o.resolution = spec.resolution;
  } else {
    ex = example_from_flags(o);
  }
  if (o.resolution < 16) throw InputError("--resolution", "--resolution must be at least 16");
  const AnalysisReport r = analyze(ex, o.resolution, SampleOptions{o.shell_layers});
  if (o.format == "csv") {
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ";") + k + "=" + pi_fraction(v);
    std::vector<TableRow> rows{{r.family, params, r.c1 ? "✓" : "×", r.c2 ? "✓" : "×", r.c3 ? "✓" : "×", "", "", ""}};
    for (const auto& l : r.levels) {
      std::string mu;
      for (Eigen::Index i = 0; i < l.mu.size(); ++i) mu += (i ? " " : "") + pi_fraction(l.mu(i));
      rows.push_back({r.family, params, "", "", "", mu, std::to_string(l.count), r.sampled_image});
    }
    emit(o, to_csv(rows));
  } else {
    emit_json(o, to_json(r));
  }
  return 0;
}

int run_tables(const Options& o) {
  const std::string csv = to_csv(reproduce_table(o.table));
  const std::string golden = load_golden(o.table, o.data_dir);
  // Golden files carry comment lines; compare the data only.
  const std::string expected = to_csv(parse_csv(golden));
  emit(o, csv);
  const std::string diff = unified_diff(expected, csv, "golden/table" + std::to_string(o.table) + ".csv", "reproduced");
  if (!diff.empty()) {
    std::cerr << diff;
    return kExitGolden;
  }
  std::cerr << "table " << o.table << ": matches golden\n";
  return 0;
}

int run_reduce(const Options& o) {
  const Json in = parse_json(read_input(o.input));
  const SimplexMap m = simplex_map_from_json(in);
  const Vec s = vec_from_json(require_field(in, "s"), "/s");
  if (s.size() != m.source_dim()) throw InputError("/s", "/s: expected one coefficient per column");
  const Vec r = caratheodory_reduce(s, m);
  Json out;
  out["s"] = to_json(r);
  out["image"] = to_json(m.apply(r));
  Json support = Json::array();
  for (Eigen::Index j = 0; j < r.size(); ++j)
    if (r(j) > 0.0) support.push_back(j);
  out["support"] = support;
  emit_json(o, out);
  return 0;
}

int run_section_test(const Options& o) {
  const Json in = parse_json(read_input(o.input));
  const SimplexMap m = simplex_map_from_json(in);
  std::vector<Vec> betas;
  if (const auto it = in.find("beta"); it != in.end()) {
    if (!it->is_array()) throw InputError("/beta", "/beta: expected an array of points");
    for (std::size_t i = 0; i < it->size(); ++i) betas.push_back(vec_from_json((*it)[i], "/beta/" + std::to_string(i)));
  } else {
    std::mt19937_64 rng(o.seed);
    std::exponential_distribution<double> e(1.0);
    for (int i = 0; i < o.samples; ++i) {
      // Uniform point of the open simplex: normalized exponentials with one slack.
      Vec s(m.source_dim());
      double total = e(rng);
      for (Eigen::Index j = 0; j < s.size(); ++j) total += (s(j) = e(rng));
      betas.push_back(m.apply(s / total));
    }
  }
  double worst = 0.0;
  bool strict = true;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (betas[i].size() != m.target_dim())
      throw InputError("/beta/" + std::to_string(i), "/beta: point dimension does not match the columns");
    const Vec s = section(betas[i], m);
    worst = std::max(worst, (m.apply(s) - betas[i]).norm());
    strict = strict && in_open_simplex(s);
  }
  const double tol = 1e-9 * m.scale();
  Json out;
  out["tested"] = betas.size();
  out["max_residual"] = worst;
  out["in_open_simplex"] = strict;
  out["ok"] = strict && worst <= tol;
  emit_json(o, out);
  if (!(strict && worst <= tol)) {
    std::cerr << "section-test: L(section(beta)) = beta violated (residual " << worst << ")\n";
    return kExitInvariant;
  }
  return 0;
}

int run_geodesic(const Options& o) {
  const Json in = parse_json(read_input(o.input));
  Json out;
  if (const auto it = in.find("path"); it != in.end()) {
    if (!it->is_array() || it->empty()) throw InputError("/path", "/path: expected a nonempty array of points");
    std::vector<Vec> path;
    for (std::size_t i = 0; i < it->size(); ++i) path.push_back(vec_from_json((*it)[i], "/path/" + std::to_string(i)));
    const SpherePath g = radialize(path);
    out["straight"] = is_weakly_monotone_straight(path);
    out["geodesic"] = is_weakly_monotone_geodesic(g);
    out["length"] = path_length(g);
    Json pts = Json::array();
    for (const auto& p : g.points) pts.push_back(to_json(p));
    out["radialized"] = pts;
  } else {
    const DiscretizedSpace x = discretized_from_json(in);
    int from = o.from, to = o.to;
    if (from < 0 && in.contains("from")) from = in["from"].get<int>();
    if (to < 0 && in.contains("to")) to = in["to"].get<int>();
    if (from < 0 || to < 0 || from >= x.size() || to >= x.size())
      throw InputError("--from/--to", "geodesic on a space needs valid --from and --to vertex indices");
    const GraphPath p = d_psi_shortest_path(x, from, to);
    out["length"] = p.length;
    out["vertices"] = p.vertices;
    out["monotone_geodesic"] = monotone_geodesic_check(x, p.vertices);
  }
  emit_json(o, out);
  return 0;
}

int run_classify(const Options& o) {
  const DiscretizedSpace x = discretized_from_json(parse_json(read_input(o.input)));
  emit_json(o, to_json(classify_circle_map(x)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Momentum-cone analysis: example tables, simplex sections, spherical geodesics."};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "Write output to this file instead of stdout");
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--seed", o.seed, "Seed for randomized checks");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one example family");
  add_common(analyze_cmd);
  analyze_cmd->add_option("--input", o.input, "Family specification JSON file ('-' for stdin)");
  analyze_cmd->add_option("--family", o.family, "mn, interval, hopf, complement or cut");
  analyze_cmd->add_option("--n", o.n, "n for mn and hopf");
  analyze_cmd->add_option("--k", o.k, "k for interval (b = b' + 2 pi k), complement and cut");
  analyze_cmd->add_option("--a", o.a, "Interval start angle");
  analyze_cmd->add_option("--b", o.b, "Interval end angle b'");
  analyze_cmd->add_option("--orientation", o.orientation, "+1 or -1 for hopf");
  analyze_cmd->add_flag("--restrict", o.restrict, "Restrict the action to the first circle");
  analyze_cmd->add_option("--shell-layers", o.shell_layers, "Radial layers for complement and cut");
  analyze_cmd->add_option("--resolution", o.resolution, "Sampling resolution (>= 16)");

  auto* tables_cmd = app.add_subcommand("tables", "Reproduce an example table and diff it against the golden CSV");
  add_common(tables_cmd);
  tables_cmd->add_option("--reproduce", o.table, "Table number")->required()->check(CLI::Range(1, 4));
  tables_cmd->add_option("--data-dir", o.data_dir, "Directory holding golden/tableN.csv");

  auto* reduce_cmd = app.add_subcommand("reduce", "Caratheodory reduction of {columns, s}");
  add_common(reduce_cmd);
  reduce_cmd->add_option("--input", o.input, "JSON file ('-' for stdin)")->required();

  auto* section_cmd = app.add_subcommand("section-test", "Check L(section(beta)) = beta for {columns[, beta]}");
  add_common(section_cmd);
  section_cmd->add_option("--input", o.input, "JSON file ('-' for stdin)")->required();
  section_cmd->add_option("--samples", o.samples, "Random image points when beta is absent")->check(CLI::PositiveNumber);

  auto* geodesic_cmd = app.add_subcommand("geodesic", "Radialize a path, or find a d_psi shortest path in a space");
  add_common(geodesic_cmd);
  geodesic_cmd->add_option("--input", o.input, "JSON file ('-' for stdin)")->required();
  geodesic_cmd->add_option("--from", o.from, "Start vertex");
  geodesic_cmd->add_option("--to", o.to, "End vertex");

  auto* classify_cmd = app.add_subcommand("classify-circle", "Classify a circle-valued map on a graph");
  add_common(classify_cmd);
  classify_cmd->add_option("--input", o.input, "DiscretizedSpace JSON file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze_cmd) return run_analyze(o);
    if (*tables_cmd) return run_tables(o);
    if (*reduce_cmd) return run_reduce(o);
    if (*section_cmd) return run_section_test(o);
    if (*geodesic_cmd) return run_geodesic(o);
    if (*classify_cmd) return run_classify(o);
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitInput;
}
