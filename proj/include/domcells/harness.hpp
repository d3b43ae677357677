#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "domcells/bounds.hpp"
#include "domcells/cells.hpp"
#include "domcells/domination.hpp"
#include "domcells/graph.hpp"
#include "domcells/product.hpp"
#include "domcells/serialize.hpp"
#include "domcells/worked_examples.hpp"

namespace domcells {

enum class InstanceStatus { Checked, SkippedUnproven };

struct InstanceReport {
  std::size_t index = 0;
  std::string label;
  Graph x;
  Graph y;
  std::size_t n = 1;  // |V(Z)|, Z = P_n
  double p = 0.0;
  Gamma gamma_x;
  Gamma gamma_y;
  Gamma gamma_z;
  Gamma gamma_product;
  std::size_t product_lower_bound = 0;
  InstanceStatus status = InstanceStatus::Checked;
  std::optional<ColorLedger> ledger;
  std::vector<CheckReport> checks;

  std::size_t defects() const {
    std::size_t n_fail = 0;
    for (const auto& c : checks)
      if (!c.finding_only) n_fail += c.failures();
    return n_fail;
  }
  std::size_t findings() const {
    std::size_t n_find = 0;
    for (const auto& c : checks)
      if (c.finding_only) n_find += c.failures();
    return n_find;
  }
  // gamma_product / (c_n gamma(P_n) gamma(X) gamma(Y)); empty unless checked.
  std::optional<Rational> slack() const {
    if (status != InstanceStatus::Checked) return std::nullopt;
    const Rational denom = cn_coefficient(n) * Rational(Integer(gamma_path(n) * gamma_x.value * gamma_y.value));
    return Rational(Integer(gamma_product.value)) / denom;
  }
};

struct RunReport {
  std::vector<InstanceReport> instances;
  Json config = Json::object();

  std::size_t defects() const {
    std::size_t n = 0;
    for (const auto& i : instances) n += i.defects();
    return n;
  }
  std::size_t findings() const {
    std::size_t n = 0;
    for (const auto& i : instances) n += i.findings();
    return n;
  }
  std::size_t checked() const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), [](const auto& i) {
      return i.status == InstanceStatus::Checked;
    }));
  }
  std::optional<Rational> min_slack() const {
    std::optional<Rational> best;
    for (const auto& i : instances)
      if (auto s = i.slack(); s && (!best || *s < *best)) best = s;
    return best;
  }
};

inline Json gamma_to_json(const Gamma& g) { return Json{{"value", g.value}, {"proven", g.proven}}; }

inline Json instance_to_json(const InstanceReport& r, bool full_entries) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(full_entries ? report_to_json(c) : report_summary_json(c));
  Json j{{"index", r.index},
         {"label", r.label},
         {"x", {{"order", r.x.order()}, {"graph6", emit_graph6(r.x)}}},
         {"y", {{"order", r.y.order()}, {"graph6", emit_graph6(r.y)}}},
         {"n", r.n},
         {"p", r.p},
         {"gamma",
          {{"x", gamma_to_json(r.gamma_x)},
           {"y", gamma_to_json(r.gamma_y)},
           {"z", gamma_to_json(r.gamma_z)},
           {"product", gamma_to_json(r.gamma_product)},
           {"product_lower_bound", r.product_lower_bound}}},
         {"status", r.status == InstanceStatus::Checked ? "checked" : "skipped-unproven"}};
  if (r.ledger) j["ledger"] = ledger_to_json(*r.ledger);
  if (auto s = r.slack()) j["slack"] = to_string(*s);
  j["checks"] = std::move(checks);
  return j;
}

inline Json run_report_to_json(const RunReport& report, bool full_entries = false) {
  Json instances = Json::array();
  for (const auto& i : report.instances) instances.push_back(instance_to_json(i, full_entries));
  Json summary{{"instances", report.instances.size()},
               {"checked", report.checked()},
               {"skipped_unproven", report.instances.size() - report.checked()},
               {"check_failures", report.defects()},
               {"findings", report.findings()}};
  if (auto s = report.min_slack()) summary["min_slack"] = to_string(*s);
  return Json{{"schema", kSchemaVersion},
              {"config", report.config},
              {"summary", std::move(summary)},
              {"instances", std::move(instances)}};
}

// Every checker that applies to a coloring of X □ Y □ Z with proven gammas.
inline std::vector<CheckReport> run_all_checks(const CellColoring& c, const Gamma& gx, const Gamma& gy,
                                               const Gamma& gz, const Gamma& gp) {
  const ColorLedger L = count_colors(c);
  std::vector<CheckReport> out;
  out.push_back(check_lemma1(L, gy));
  out.push_back(check_lemma2(L, gz));
  out.push_back(check_lemma3(L, gx));
  const bool path = c.product().canonical_path();
  const std::size_t n = c.nz();
  if (path && n == 2) out.push_back(check_p2_complement(c));
  if (path && n >= 2) out.push_back(check_observations(c));
  if (path) {
    out.push_back(check_fiber_maroon(L));
    out.push_back(check_main_lemma(L, gp, n));
    out.push_back(check_theorem_bound(gp, gx, gy, n));
  }
  out.push_back(check_combined_inequality(L, gx, gy, n));
  return out;
}

// ---------------------------------------------------------------------------

struct ReproduceOptions {
  bool prove_product_gamma = true;
  SolverBudget budget = SolverBudget::seconds(15 * 60);
};

struct ReproductionResult {
  RunReport report;
  PaperExample example;
  std::optional<CellColoring> coloring;
  bool default_partition_matches = false;
};

// Rebuilds a worked example, colors it with the reference D and partition,
// compares against the golden coloring and the reference facts, and runs
// every checker. Throws ReproductionFailure on the first mismatch.
inline ReproductionResult reproduce_example(int id, const ReproduceOptions& options = {}) {
  ReproductionResult out;
  out.example = paper_example(id);
  const PaperExample& ex = out.example;
  const TripleProduct p(ex.x, ex.y, ex.z);
  const VertexSet dset = ex.dset_flat(p);

  const auto partition = validate_partition(ex.x, ex.dominators, ex.partition);
  const auto by_rule = build_partition(ex.x, ex.dominators);
  out.default_partition_matches = by_rule.cells == partition.cells;
  CellColoring coloring = color_cells(partition, p, dset);

  for (std::size_t id_cell = 0; id_cell < coloring.cell_count(); ++id_cell) {
    const char want = ex.golden_colors.at(id_cell);
    const char got = color_letter(coloring.colors()[id_cell]);
    if (want != got)
      throw Error(ErrorKind::ReproductionFailure,
                  "cell " + to_string(coloring.cell_index(id_cell)) + " colored " + got + ", golden " + want);
  }
  for (const auto& named : ex.named_colors)
    if (coloring.color(named.cell) != named.color)
      throw Error(ErrorKind::ReproductionFailure, "cell " + to_string(named.cell) + " is " +
                                                      std::string(color_name(coloring.color(named.cell))) +
                                                      ", reference " + std::string(color_name(named.color)));
  const ColorLedger L = count_colors(coloring);
  if (ex.red_cells && L.total.cell(CellColor::Red) != *ex.red_cells)
    throw Error(ErrorKind::ReproductionFailure, "red cell count differs from the reference count");
  if (ex.max_maroon_fiber) {
    std::size_t best = 0;
    std::pair<std::size_t, Vertex> where{0, 0};
    for (Vertex y = 0; y < L.ny; ++y)
      for (std::size_t i = 0; i < L.k; ++i)
        if (L.iy(i, y).cell(CellColor::Maroon) > best) {
          best = L.iy(i, y).cell(CellColor::Maroon);
          where = {i, y};
        }
    if (where != *ex.max_maroon_fiber)
      throw Error(ErrorKind::ReproductionFailure, "maximal-maroon Z-fiber is (i=" + std::to_string(where.first) +
                                                      ", y=" + std::to_string(where.second) +
                                                      "), reference differs");
  }

  InstanceReport inst;
  inst.index = 0;
  inst.label = "example-" + std::to_string(id);
  inst.x = ex.x;
  inst.y = ex.y;
  inst.n = ex.z.order();
  const auto solve = [&](const Graph& g, std::size_t reference, const char* what) {
    const auto r = gamma_exact(g, options.budget);
    if (r.proven_optimal && r.gamma != reference)
      throw Error(ErrorKind::ReproductionFailure, std::string(what) + " computed as " + std::to_string(r.gamma) +
                                                      ", reference " + std::to_string(reference));
    return r;
  };
  inst.gamma_x = Gamma::from(solve(ex.x, ex.gamma_x, "gamma(X)"));
  inst.gamma_y = Gamma::from(solve(ex.y, ex.gamma_y, "gamma(Y)"));
  inst.gamma_z = Gamma::from(solve(ex.z, ex.gamma_z, "gamma(Z)"));
  if (options.prove_product_gamma) {
    const auto r = solve(p.flat(), ex.gamma_product, "gamma(product)");
    inst.gamma_product = Gamma::from(r);
    inst.product_lower_bound = r.lower_bound;
  } else {
    inst.gamma_product = Gamma{ex.gamma_product, false};
  }
  inst.ledger = L;
  if (inst.gamma_product.proven && inst.gamma_x.proven && inst.gamma_y.proven && inst.gamma_z.proven) {
    inst.checks = run_all_checks(coloring, inst.gamma_x, inst.gamma_y, inst.gamma_z, inst.gamma_product);
  } else {
    inst.status = InstanceStatus::SkippedUnproven;
  }
  out.report.config = Json{{"example", id}};
  out.report.instances.push_back(std::move(inst));
  out.coloring = std::move(coloring);
  return out;
}

// ---------------------------------------------------------------------------

struct FuzzConfig {
  std::size_t instances = 100;
  std::size_t max_x = 8;
  std::size_t max_y = 6;
  std::vector<std::size_t> n_values = {1, 2, 3, 4};
  std::vector<double> p_values = {0.2, 0.4, 0.6};
  std::uint64_t seed = 1;
  std::uint64_t node_budget = 5'000'000;  // per solver call
  std::size_t product_cap = 160;
  std::size_t threads = 0;  // 0: DOMCELLS_THREADS or hardware concurrency

  Json to_json() const {
    return Json{{"instances", instances}, {"seed", seed},       {"max_x", max_x},
                {"max_y", max_y},         {"n_values", n_values}, {"p_values", p_values},
                {"node_budget", node_budget}, {"product_cap", product_cap}};
  }

  void validate() const {
    if (max_x == 0 || max_y == 0) throw Error(ErrorKind::InvalidArgument, "factor size caps must be positive");
    if (n_values.empty() || p_values.empty())
      throw Error(ErrorKind::InvalidArgument, "n and p value lists must be nonempty");
    for (auto n : n_values)
      if (n == 0) throw Error(ErrorKind::InvalidArgument, "path lengths must be positive");
    for (auto p : p_values)
      if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidArgument, "edge probabilities must lie in [0,1]");
    const auto smallest_n = *std::min_element(n_values.begin(), n_values.end());
    if (smallest_n > product_cap) throw Error(ErrorKind::InvalidArgument, "product cap below smallest path length");
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::size_t worker_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DOMCELLS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace detail

// One fuzz instance; a pure function of (cfg, index).
inline InstanceReport fuzz_instance(const FuzzConfig& cfg, std::size_t index) {
  std::mt19937_64 rng(detail::splitmix64(cfg.seed ^ detail::splitmix64(index)));
  std::size_t nx = 1 + rng() % cfg.max_x;
  std::size_t ny = 1 + rng() % cfg.max_y;
  const std::size_t n = cfg.n_values[rng() % cfg.n_values.size()];
  const double p = cfg.p_values[rng() % cfg.p_values.size()];
  while (nx * ny * n > cfg.product_cap) {
    if (ny >= nx && ny > 1)
      --ny;
    else
      --nx;
  }
  const std::uint64_t seed_x = rng();
  const std::uint64_t seed_y = rng();

  InstanceReport inst;
  inst.index = index;
  inst.label = "fuzz-" + std::to_string(index);
  inst.x = random_gnp(nx, p, seed_x);
  inst.y = random_gnp(ny, p, seed_y);
  inst.n = n;
  inst.p = p;
  const Graph z = path_graph(n);
  const auto budget = SolverBudget::nodes(cfg.node_budget);

  const auto rx = gamma_exact(inst.x, budget);
  const auto ry = gamma_exact(inst.y, budget);
  const auto rz = gamma_exact(z, budget);
  const TripleProduct prod(inst.x, inst.y, z);
  const auto rp = gamma_exact(prod.flat(), budget);
  inst.gamma_x = Gamma::from(rx);
  inst.gamma_y = Gamma::from(ry);
  inst.gamma_z = Gamma::from(rz);
  inst.gamma_product = Gamma::from(rp);
  inst.product_lower_bound = rp.lower_bound;
  if (!(rx.proven_optimal && ry.proven_optimal && rz.proven_optimal && rp.proven_optimal)) {
    inst.status = InstanceStatus::SkippedUnproven;
    return inst;
  }
  const auto partition = build_partition(inst.x, rx.witness, budget);
  const CellColoring coloring = color_cells(partition, prod, rp.witness);
  inst.ledger = count_colors(coloring);
  inst.checks = run_all_checks(coloring, inst.gamma_x, inst.gamma_y, inst.gamma_z, inst.gamma_product);
  return inst;
}

// Runs a seeded campaign on a worker pool. The report is sorted by instance
// index and depends only on cfg.
inline RunReport fuzz(const FuzzConfig& cfg) {
  cfg.validate();
  RunReport report;
  report.config = cfg.to_json();
  report.instances.resize(cfg.instances);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto work = [&] {
    for (std::size_t i = next++; i < cfg.instances; i = next++) {
      try {
        report.instances[i] = fuzz_instance(cfg, i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(detail::worker_count(cfg.threads), std::max<std::size_t>(1, cfg.instances));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return report;
}

}  // namespace domcells
