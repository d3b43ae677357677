#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "domcells/bounds.hpp"
#include "domcells/cells.hpp"
#include "domcells/error.hpp"
#include "domcells/graph.hpp"
#include "domcells/product.hpp"

namespace domcells {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"order", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    const auto order = j.at("order").get<std::size_t>();
    if (order == 0) throw Error(ErrorKind::InvalidArgument, "graph order must be positive");
    return Graph(order, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("graph JSON: ") + ex.what());
  }
}

// Coordinate sidecar written next to a product edge list.
inline Json product_sidecar(const TripleProduct& p) {
  return Json{{"schema", kSchemaVersion},
              {"orders", {{"x", p.factor_x().order()}, {"y", p.factor_y().order()}, {"z", p.factor_z().order()}}},
              {"canonical_path", p.canonical_path()},
              {"layout", "flat = z*|Y|*|X| + y*|X| + x"},
              {"factors",
               {{"x", graph_to_json(p.factor_x())},
                {"y", graph_to_json(p.factor_y())},
                {"z", graph_to_json(p.factor_z())}}}};
}

inline Json coloring_to_json(const CellColoring& c) {
  Json partition = Json::array();
  for (const auto& cell : c.partition().cells) partition.push_back(cell.members());
  Json colors = Json::array();
  for (Vertex z = 0; z < c.nz(); ++z) {
    Json layer = Json::array();
    for (Vertex y = 0; y < c.ny(); ++y) {
      Json row = Json::array();
      for (std::size_t i = 0; i < c.k(); ++i) row.push_back(color_name(c.color(i, y, z)));
      layer.push_back(std::move(row));
    }
    colors.push_back(std::move(layer));
  }
  return Json{{"schema", kSchemaVersion},
              {"factors",
               {{"x", graph_to_json(c.product().factor_x())},
                {"y", graph_to_json(c.product().factor_y())},
                {"z", graph_to_json(c.product().factor_z())}}},
              {"canonical_path", c.product().canonical_path()},
              {"dset", c.dset().members()},
              {"dominators", c.partition().dominators},
              {"partition", std::move(partition)},
              {"layout", "colors[z][y][i]"},
              {"colors", std::move(colors)}};
}

// Rebuilds a coloring from its JSON form, re-deriving every color; a stored
// color that disagrees with the recomputed one is a reproduction failure.
inline CellColoring coloring_from_json(const Json& j, const SolverBudget& budget = {}) {
  try {
    if (j.at("schema").get<int>() != kSchemaVersion)
      throw Error(ErrorKind::ParseError, "unsupported coloring schema");
    const auto& f = j.at("factors");
    TripleProduct p(graph_from_json(f.at("x")), graph_from_json(f.at("y")), graph_from_json(f.at("z")));
    const auto dominators = j.at("dominators").get<std::vector<Vertex>>();
    std::vector<VertexSet> cells;
    for (const auto& cell : j.at("partition"))
      cells.emplace_back(p.factor_x().order(), std::span<const Vertex>(cell.get<std::vector<Vertex>>()));
    VertexSet dset(p.order());
    for (Vertex v : j.at("dset").get<std::vector<Vertex>>()) {
      if (v >= p.order()) throw Error(ErrorKind::RangeError, "dset vertex " + std::to_string(v) + " out of range");
      dset.insert(v);
    }
    auto partition = validate_partition(p.factor_x(), dominators, cells, budget);
    CellColoring c = color_cells(partition, p, dset);
    if (j.contains("colors")) {
      const auto& colors = j.at("colors");
      for (Vertex z = 0; z < c.nz(); ++z)
        for (Vertex y = 0; y < c.ny(); ++y)
          for (std::size_t i = 0; i < c.k(); ++i) {
            const auto stored = colors.at(z).at(y).at(i).get<std::string>();
            if (stored != color_name(c.color(i, y, z)))
              throw Error(ErrorKind::ReproductionFailure,
                          "cell " + to_string(CellIndex{i, y, z}) + " stored as " + stored +
                              " but recomputes as " + std::string(color_name(c.color(i, y, z))));
          }
    }
    return c;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("coloring JSON: ") + ex.what());
  }
}

inline Json counts_to_json(const ColorCounts& c) {
  Json cells = Json::object();
  for (auto color : kAllColors) cells[std::string(color_name(color))] = c.cell(color);
  Json dverts = Json::object();
  for (auto color : {CellColor::Blue, CellColor::Green, CellColor::Yellow, CellColor::Orange})
    dverts[std::string(color_name(color))] = c.dvert(color);
  return Json{{"cells", std::move(cells)}, {"dverts", std::move(dverts)}};
}

inline Json ledger_to_json(const ColorLedger& L) {
  return Json{{"k", L.k}, {"ny", L.ny}, {"nz", L.nz}, {"dset_size", L.dset_size},
              {"total", counts_to_json(L.total)}};
}

inline Json entry_to_json(const CheckEntry& e) {
  Json j{{"name", e.name},
         {"pass", e.passed},
         {"relation", relation_symbol(e.relation)},
         {"lhs", to_string(e.lhs)},
         {"rhs", to_string(e.rhs)}};
  if (!e.locator.empty()) j["locator"] = e.locator;
  return j;
}

inline Json report_to_json(const CheckReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(entry_to_json(e));
  return Json{{"check", r.check}, {"pass", r.passed()}, {"finding_only", r.finding_only},
              {"entries", std::move(entries)}};
}

// Compact form: the entry count and only the failing entries.
inline Json report_summary_json(const CheckReport& r) {
  Json failures = Json::array();
  for (const auto& e : r.entries)
    if (!e.passed) failures.push_back(entry_to_json(e));
  return Json{{"check", r.check}, {"pass", r.passed()}, {"finding_only", r.finding_only},
              {"entries_checked", r.entries.size()}, {"failures", std::move(failures)}};
}

}  // namespace domcells
