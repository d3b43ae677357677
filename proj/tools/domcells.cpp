#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "domcells/domcells.hpp"

namespace {

using namespace domcells;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

// Edge list when the first line is a bare vertex count, otherwise graph6.
Graph load_graph(const std::string& path, const std::string& format = "auto") {
  const std::string text = read_file(path);
  if (format == "graph6") return parse_graph6(text);
  if (format == "edges") return parse_edge_list(text);
  const auto first = text.substr(0, text.find_first_of("\r\n"));
  const bool count_line =
      !first.empty() && std::all_of(first.begin(), first.end(), [](unsigned char c) { return std::isdigit(c); });
  return count_line ? parse_edge_list(text) : parse_graph6(text);
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

// One "x y z" triple per line, 0-based.
VertexSet load_dset(const std::string& path, const TripleProduct& p) {
  VertexSet d(p.order());
  for (const auto& line : content_lines(read_file(path))) {
    std::istringstream in(line);
    Coord3 c;
    std::string extra;
    if (!(in >> c.x >> c.y >> c.z) || (in >> extra))
      throw Error(ErrorKind::ParseError, "dset line \"" + line + "\" is not an x y z triple");
    const Vertex v = p.to_flat(c);
    if (d.contains(v)) throw Error(ErrorKind::InvalidArgument, "dset repeats " + to_string(c));
    d.insert(v);
  }
  return d;
}

// One cell per line: "u: v v ...", u the dominator of the cell.
std::pair<std::vector<Vertex>, std::vector<VertexSet>> load_partition(const std::string& path, const Graph& x) {
  std::vector<Vertex> dominators;
  std::vector<VertexSet> cells;
  for (const auto& line : content_lines(read_file(path))) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "partition line \"" + line + "\" lacks ':'");
    std::istringstream head(line.substr(0, colon));
    Vertex u = 0;
    if (!(head >> u)) throw Error(ErrorKind::ParseError, "partition line \"" + line + "\" has no dominator");
    x.check_vertex(u);
    std::istringstream body(line.substr(colon + 1));
    VertexSet cell(x.order());
    for (Vertex v = 0; body >> v;) cell.insert(v);
    if (!body.eof()) throw Error(ErrorKind::ParseError, "partition line \"" + line + "\" has a non-numeric member");
    dominators.push_back(u);
    cells.push_back(std::move(cell));
  }
  return {dominators, cells};
}

SolverBudget budget_from(double seconds) {
  return seconds > 0 ? SolverBudget::seconds(seconds) : SolverBudget::unlimited();
}

void print_failure(const InstanceReport& inst) {
  for (const auto& c : inst.checks) {
    if (c.finding_only) continue;
    if (const auto* e = c.first_failure()) {
      Json j{{"failure", {{"instance", inst.label}, {"check", c.check}}}};
      j["failure"]["entry"] = entry_to_json(*e);
      std::cout << j.dump() << "\n";
      return;
    }
  }
}

void print_summary(const RunReport& r) {
  const Json j = run_report_to_json(r);
  std::cout << j["summary"].dump() << "\n";
}

int exit_for(const RunReport& r) {
  if (r.defects() == 0) return kExitPass;
  for (const auto& inst : r.instances)
    if (inst.defects() > 0) {
      print_failure(inst);
      break;
    }
  return kExitCheckFailed;
}

struct Options {
  // gamma
  std::string input, format = "auto";
  double budget = 0;
  // product
  std::string x, y, z, out;
  // color
  std::size_t path_n = 0;
  std::string dset, partition, json, svg;
  bool solve = false, autopart = false;
  // verify
  std::string coloring, checks;
  bool all = false;
  // example
  int id = 0;
  // fuzz
  FuzzConfig fuzz;
  std::vector<std::size_t> n_values;
  std::vector<double> p_values;
  std::size_t threads = 0;
};

int run_gamma(const Options& o) {
  const Graph g = load_graph(o.input, o.format);
  const auto r = gamma_exact(g, budget_from(o.budget));
  std::cout << "gamma " << r.gamma << "\n"
            << "proven " << (r.proven_optimal ? "true" : "false") << "\n"
            << "lower_bound " << r.lower_bound << "\n"
            << "witness";
  r.witness.for_each([](Vertex v) { std::cout << ' ' << v; });
  std::cout << "\n";
  return kExitPass;
}

int run_product(const Options& o) {
  const TripleProduct p(load_graph(o.x), load_graph(o.y), load_graph(o.z));
  write_file(o.out, emit_edge_list(p.flat()));
  write_file(o.out + ".json", product_sidecar(p).dump(2) + "\n");
  std::cout << "order " << p.order() << "\nedges " << p.flat().edge_count() << "\n";
  return kExitPass;
}

int run_color(const Options& o) {
  const Graph z = o.path_n > 0 ? path_graph(o.path_n) : load_graph(o.z);
  const TripleProduct p(load_graph(o.x), load_graph(o.y), z);
  const auto budget = budget_from(o.budget);
  bool minimum = true;
  VertexSet d(p.order());
  if (o.solve) {
    const auto r = gamma_exact(p.flat(), budget);
    if (!r.proven_optimal) throw Error(ErrorKind::Unproven, "solver budget exhausted before gamma(product) was proven");
    d = r.witness;
  } else {
    d = load_dset(o.dset, p);
    if (!is_dominating(p.flat(), d)) throw Error(ErrorKind::NotDominating, "dset does not dominate the product");
    const auto r = gamma_exact(p.flat(), budget);
    minimum = r.proven_optimal && r.gamma == d.size();
  }
  DominatingPartition partition;
  if (o.autopart) {
    const auto rx = gamma_exact(p.factor_x(), budget);
    if (!rx.proven_optimal) throw Error(ErrorKind::Unproven, "solver budget exhausted before gamma(X) was proven");
    partition = build_partition(p.factor_x(), rx.witness, budget);
  } else {
    const auto [dominators, cells] = load_partition(o.partition, p.factor_x());
    partition = validate_partition(p.factor_x(), dominators, cells, budget);
  }
  const CellColoring c = color_cells(partition, p, d);
  Json j = coloring_to_json(c);
  j["dset_minimum"] = minimum;
  if (!o.json.empty()) write_file(o.json, j.dump(2) + "\n");
  if (!o.svg.empty()) write_file(o.svg, render_svg(c));
  std::cout << counts_to_json(count_colors(c).total).dump() << "\n";
  if (!minimum) std::cerr << "warning: dset is not a minimum dominating set; the coloring is non-conforming\n";
  return kExitPass;
}

int run_verify(const Options& o) {
  const auto budget = budget_from(o.budget);
  const Json j = Json::parse(read_file(o.coloring), nullptr, true);
  const CellColoring c = coloring_from_json(j, budget);
  const auto solve = [&](const Graph& g, const char* what) {
    const auto r = gamma_exact(g, budget);
    if (!r.proven_optimal) throw Error(ErrorKind::Unproven, std::string("solver budget exhausted for ") + what);
    return Gamma::from(r);
  };
  const Gamma gx = solve(c.product().factor_x(), "gamma(X)");
  const Gamma gy = solve(c.product().factor_y(), "gamma(Y)");
  const Gamma gz = solve(c.product().factor_z(), "gamma(Z)");
  const Gamma gp = solve(c.product().flat(), "gamma(product)");
  if (gp.value != c.dset().size())
    std::cerr << "warning: |D| = " << c.dset().size() << " but gamma(product) = " << gp.value << "\n";

  InstanceReport inst;
  inst.label = o.coloring;
  inst.x = c.product().factor_x();
  inst.y = c.product().factor_y();
  inst.n = c.nz();
  inst.gamma_x = gx;
  inst.gamma_y = gy;
  inst.gamma_z = gz;
  inst.gamma_product = gp;
  inst.product_lower_bound = gp.value;
  inst.ledger = count_colors(c);
  if (o.all || o.checks.empty()) {
    inst.checks = run_all_checks(c, gx, gy, gz, gp);
  } else {
    const ColorLedger& L = *inst.ledger;
    std::istringstream names(o.checks);
    for (std::string name; std::getline(names, name, ',');) {
      if (name == "lemma1") inst.checks.push_back(check_lemma1(L, gy));
      else if (name == "lemma2") inst.checks.push_back(check_lemma2(L, gz));
      else if (name == "lemma3") inst.checks.push_back(check_lemma3(L, gx));
      else if (name == "p2") inst.checks.push_back(check_p2_complement(c));
      else if (name == "obs") inst.checks.push_back(check_observations(c));
      else if (name == "fiber-maroon") inst.checks.push_back(check_fiber_maroon(L));
      else if (name == "main-lemma") inst.checks.push_back(check_main_lemma(L, gp, c.nz()));
      else if (name == "theorem") inst.checks.push_back(check_theorem_bound(gp, gx, gy, c.nz()));
      else if (name == "combined") inst.checks.push_back(check_combined_inequality(L, gx, gy, c.nz()));
      else throw CLI::ValidationError("--checks", "unknown check " + name);
    }
  }
  RunReport report;
  report.config = Json{{"coloring", o.coloring}};
  report.instances.push_back(std::move(inst));
  for (const auto& r : report.instances.front().checks)
    std::cout << r.check << ' ' << (r.passed() ? "pass" : (r.finding_only ? "finding" : "FAIL")) << ' '
              << r.entries.size() << "\n";
  if (!o.json.empty()) write_file(o.json, run_report_to_json(report, true).dump(2) + "\n");
  return exit_for(report);
}

int run_example(const Options& o) {
  ReproduceOptions opts;
  if (o.budget > 0) opts.budget = SolverBudget::seconds(o.budget);
  const auto r = reproduce_example(o.id, opts);
  if (!o.json.empty()) write_file(o.json, run_report_to_json(r.report, true).dump(2) + "\n");
  if (!o.svg.empty()) write_file(o.svg, render_svg(*r.coloring));
  print_summary(r.report);
  return exit_for(r.report);
}

int run_fuzz(Options o) {
  if (!o.n_values.empty()) o.fuzz.n_values = o.n_values;
  if (!o.p_values.empty()) o.fuzz.p_values = o.p_values;
  o.fuzz.threads = o.threads;
  const auto r = fuzz(o.fuzz);
  if (!o.json.empty()) write_file(o.json, run_report_to_json(r).dump(2) + "\n");
  print_summary(r);
  return exit_for(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cell colorings and domination bounds for Cartesian products"};
  app.require_subcommand(1);
  Options o;

  auto* gamma = app.add_subcommand("gamma", "exact domination number of a graph");
  gamma->add_option("--input", o.input, "graph file")->required()->check(CLI::ExistingFile);
  gamma->add_option("--format", o.format, "graph6, edges or auto")
      ->check(CLI::IsMember({"graph6", "edges", "auto"}));
  gamma->add_option("--budget", o.budget, "time budget in seconds (0: none)");

  auto* product = app.add_subcommand("product", "write X □ Y □ Z as an edge list plus OUT.json");
  product->add_option("--x", o.x)->required()->check(CLI::ExistingFile);
  product->add_option("--y", o.y)->required()->check(CLI::ExistingFile);
  product->add_option("--z", o.z)->required()->check(CLI::ExistingFile);
  product->add_option("--out", o.out)->required();

  auto* color = app.add_subcommand("color", "color the cells of X □ Y □ Z");
  color->add_option("--x", o.x)->required()->check(CLI::ExistingFile);
  color->add_option("--y", o.y)->required()->check(CLI::ExistingFile);
  auto* zopt = color->add_option("--z", o.z)->check(CLI::ExistingFile);
  auto* path = color->add_option("--path", o.path_n, "use Z = P_N")->check(CLI::PositiveNumber);
  zopt->excludes(path);
  auto* dset = color->add_option("--dset", o.dset, "file of x y z triples")->check(CLI::ExistingFile);
  auto* solve = color->add_flag("--solve", o.solve, "use a solver-found minimum dominating set");
  dset->excludes(solve);
  auto* part = color->add_option("--partition", o.partition, "file of 'u: v v ...' lines")->check(CLI::ExistingFile);
  auto* autop = color->add_flag("--auto", o.autopart, "solver-found dominators, default partition rule");
  part->excludes(autop);
  color->add_option("--json", o.json);
  color->add_option("--svg", o.svg);
  color->add_option("--budget", o.budget, "time budget in seconds per solve (0: none)");

  auto* verify = app.add_subcommand("verify", "run checkers on a coloring JSON");
  verify->add_option("--coloring", o.coloring)->required()->check(CLI::ExistingFile);
  auto* checks = verify->add_option("--checks", o.checks, "comma-separated check names");
  auto* all = verify->add_flag("--all", o.all, "every applicable check (default)");
  checks->excludes(all);
  verify->add_option("--json", o.json, "write the full report");
  verify->add_option("--budget", o.budget, "time budget in seconds per solve (0: none)");

  auto* example = app.add_subcommand("example", "reproduce worked example 1 or 2");
  example->add_option("--id", o.id)->required()->check(CLI::IsMember({1, 2}));
  example->add_option("--json", o.json);
  example->add_option("--svg", o.svg);
  example->add_option("--budget", o.budget, "time budget in seconds per solve (default 900)");

  auto* fz = app.add_subcommand("fuzz", "seeded randomized checker campaign");
  fz->add_option("--instances", o.fuzz.instances);
  fz->add_option("--seed", o.fuzz.seed);
  fz->add_option("--max-x", o.fuzz.max_x);
  fz->add_option("--max-y", o.fuzz.max_y);
  fz->add_option("--n-values", o.n_values)->delimiter(',');
  fz->add_option("--p", o.p_values, "edge probabilities")->delimiter(',');
  fz->add_option("--node-budget", o.fuzz.node_budget, "branch-and-bound nodes per solve");
  fz->add_option("--product-cap", o.fuzz.product_cap);
  fz->add_option("--threads", o.threads, "worker count (default: DOMCELLS_THREADS or all cores)");
  fz->add_option("--json", o.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*gamma) return run_gamma(o);
    if (*product) return run_product(o);
    if (*color) {
      if (o.z.empty() && o.path_n == 0) throw CLI::ValidationError("color", "one of --z or --path is required");
      if (o.dset.empty() && !o.solve) throw CLI::ValidationError("color", "one of --dset or --solve is required");
      if (o.partition.empty() && !o.autopart)
        throw CLI::ValidationError("color", "one of --partition or --auto is required");
      return run_color(o);
    }
    if (*verify) return run_verify(o);
    if (*example) return run_example(o);
    if (*fz) return run_fuzz(o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::ReproductionFailure) {
      std::cout << Json{{"failure", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}.dump() << "\n";
      return kExitCheckFailed;
    }
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: parse-error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
