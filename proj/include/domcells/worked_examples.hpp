#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domcells/cells.hpp"
#include "domcells/domination.hpp"
#include "domcells/error.hpp"
#include "domcells/graph.hpp"
#include "domcells/product.hpp"

namespace domcells {

struct NamedCellColor {
  CellIndex cell;
  CellColor color;
};

// One of the two reference worked examples. Vertex labels x_1.. map to
// ids 0.. in declaration order, likewise for Y and Z.
struct PaperExample {
  int id = 0;
  Graph x;
  Graph y;
  Graph z;
  std::vector<Vertex> dominators;   // u_1..u_k of X
  std::vector<VertexSet> partition;  // reference pi_1..pi_k
  std::vector<Coord3> dset;          // reference minimum dominating set of the product
  std::size_t gamma_x = 0;
  std::size_t gamma_y = 0;
  std::size_t gamma_z = 0;
  std::size_t gamma_product = 0;
  std::vector<NamedCellColor> named_colors;
  std::optional<std::size_t> red_cells;
  // Z-fiber (i, y) holding the most maroon cells.
  std::optional<std::pair<std::size_t, Vertex>> max_maroon_fiber;
  // Full coloring, one letter per cell (BGYORPMW), z outermost then y then i.
  std::string golden_colors;

  VertexSet dset_flat(const TripleProduct& p) const {
    VertexSet s(p.order());
    for (const auto& c : dset) s.insert(p.to_flat(c));
    return s;
  }
};

inline char color_letter(CellColor c) { return "BGYORPMW"[static_cast<std::size_t>(c)]; }

inline std::optional<CellColor> color_from_letter(char letter) {
  const std::string_view letters = "BGYORPMW";
  const auto at = letters.find(letter);
  if (at == std::string_view::npos) return std::nullopt;
  return static_cast<CellColor>(at);
}

namespace detail {

inline std::vector<Coord3> one_based(std::initializer_list<std::array<Vertex, 3>> triples) {
  std::vector<Coord3> out;
  for (const auto& t : triples) out.push_back({t[0] - 1, t[1] - 1, t[2] - 1});
  return out;
}

inline std::vector<VertexSet> cells_of(std::size_t order,
                                       std::initializer_list<std::initializer_list<Vertex>> cells) {
  std::vector<VertexSet> out;
  for (auto c : cells) out.emplace_back(order, c);
  return out;
}

inline PaperExample example_one() {
  PaperExample e;
  e.id = 1;
  e.x = Graph(8, {{0, 1}, {1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {4, 7}, {5, 6}, {6, 7}}, "X");
  e.y = Graph(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}, "Y");
  e.z = path_graph(2);
  e.dominators = {1, 4, 6};
  e.partition = cells_of(8, {{0, 1, 2}, {3, 4}, {5, 6, 7}});
  e.dset = one_based({{1, 4, 1}, {2, 2, 1}, {4, 4, 1}, {5, 2, 1}, {7, 1, 1}, {7, 3, 1}, {8, 4, 1},
                      {1, 2, 2}, {3, 1, 2}, {3, 3, 2}, {5, 2, 2}, {6, 4, 2}, {8, 2, 2}});
  e.gamma_x = 3;
  e.gamma_y = 2;
  e.gamma_z = 1;
  e.gamma_product = 13;
  e.named_colors = {
      {{0, 3, 0}, CellColor::Blue},   {{2, 0, 0}, CellColor::Green}, {{0, 1, 0}, CellColor::Yellow},
      {{0, 1, 1}, CellColor::Orange}, {{0, 0, 0}, CellColor::White}, {{1, 0, 0}, CellColor::Pink},
      {{1, 3, 1}, CellColor::Maroon},
  };
  e.red_cells = 0;
  e.golden_colors = "WPGYYWWPGBBOGPWOYBGPWWMY";
  return e;
}

inline PaperExample example_two() {
  PaperExample e;
  e.id = 2;
  e.x = Graph(9, {{0, 1}, {1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {4, 7}, {5, 6}, {6, 7}, {7, 8}}, "X");
  e.y = Graph(5, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {3, 4}}, "Y");
  e.z = path_graph(3);
  e.dominators = {1, 4, 7};
  e.partition = cells_of(9, {{0, 1, 2, 5}, {3, 4}, {6, 7, 8}});
  e.dset = one_based({{1, 4, 1}, {2, 2, 1}, {3, 4, 1}, {4, 4, 1}, {6, 5, 1}, {8, 1, 1}, {8, 2, 1},
                      {8, 3, 1}, {9, 5, 1}, {1, 4, 2}, {4, 2, 2}, {4, 5, 2}, {6, 1, 2}, {6, 3, 2},
                      {7, 4, 2}, {9, 2, 2}, {1, 2, 3}, {2, 5, 3}, {3, 1, 3}, {3, 3, 3}, {5, 4, 3},
                      {7, 2, 3}, {8, 2, 3}, {8, 5, 3}, {9, 4, 3}});
  e.gamma_x = 3;
  e.gamma_y = 2;
  e.gamma_z = 1;
  e.gamma_product = 25;
  e.max_maroon_fiber = std::pair<std::size_t, Vertex>{1, 1};
  e.golden_colors = "WPGBMOWPGOBWGWBOPWWBYOPWOWYWBWOPPGMYOPPWBOBWG";
  return e;
}

}  // namespace detail

// Loads a worked example and validates it: the reference D dominates the
// product with |D| = gamma_product, and the reference partition is valid.
inline PaperExample paper_example(int id) {
  if (id != 1 && id != 2) throw Error(ErrorKind::InvalidArgument, "example id must be 1 or 2");
  PaperExample e = id == 1 ? detail::example_one() : detail::example_two();
  const TripleProduct p(e.x, e.y, e.z);
  const VertexSet d = e.dset_flat(p);
  if (d.size() != e.gamma_product)
    throw Error(ErrorKind::ReproductionFailure, "reference D has duplicate vertices");
  if (!is_dominating(p.flat(), d))
    throw Error(ErrorKind::NotDominating, "reference D does not dominate the product");
  validate_partition(e.x, e.dominators, e.partition);
  return e;
}

}  // namespace domcells
