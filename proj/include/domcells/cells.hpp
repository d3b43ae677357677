#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domcells/domination.hpp"
#include "domcells/error.hpp"
#include "domcells/graph.hpp"
#include "domcells/product.hpp"
#include "domcells/vertex_set.hpp"

namespace domcells {

// A minimum dominating set u_0..u_{k-1} of X with cells pi_i, where
// u_i in pi_i, pi_i subset of N[u_i], and the cells partition V(X).
struct DominatingPartition {
  Graph base;
  std::vector<Vertex> dominators;
  std::vector<VertexSet> cells;
  std::vector<std::size_t> cell_of;  // vertex of X -> cell index

  std::size_t size() const noexcept { return dominators.size(); }
};

namespace detail {

inline void require_minimum(const Graph& x, std::size_t k, const SolverBudget& budget) {
  const auto gamma = gamma_exact(x, budget);
  if (!gamma.proven_optimal)
    throw Error(ErrorKind::Unproven, "could not prove gamma(X) within the solver budget");
  if (gamma.gamma != k)
    throw Error(ErrorKind::NotMinimum, "dominating set has " + std::to_string(k) +
                                           " vertices but gamma(X) = " + std::to_string(gamma.gamma));
}

inline VertexSet dominator_set(const Graph& x, std::span<const Vertex> dominators) {
  VertexSet s(x.order());
  for (Vertex u : dominators) {
    x.check_vertex(u);
    if (s.contains(u))
      throw Error(ErrorKind::InvalidArgument, "dominator " + std::to_string(u) + " listed twice");
    s.insert(u);
  }
  if (!is_dominating(x, s))
    throw Error(ErrorKind::NotDominating,
                "vertex " + std::to_string(*first_undominated(x, s)) + " of X is not dominated");
  return s;
}

}  // namespace detail

// Default rule: u_i joins pi_i; every other vertex joins the cell of the
// first dominator (in the given order) whose closed neighborhood holds it.
inline DominatingPartition build_partition(const Graph& x, std::span<const Vertex> dominators,
                                           const SolverBudget& budget = {}) {
  const VertexSet dset = detail::dominator_set(x, dominators);
  detail::require_minimum(x, dominators.size(), budget);

  DominatingPartition p;
  p.base = x;
  p.dominators.assign(dominators.begin(), dominators.end());
  p.cells.assign(dominators.size(), VertexSet(x.order()));
  p.cell_of.assign(x.order(), 0);
  for (Vertex v = 0; v < x.order(); ++v) {
    std::size_t home = dominators.size();
    for (std::size_t i = 0; i < dominators.size(); ++i) {
      if (dominators[i] == v) {
        home = i;
        break;
      }
    }
    if (home == dominators.size()) {
      for (std::size_t i = 0; i < dominators.size(); ++i) {
        if (x.adjacent(dominators[i], v)) {
          home = i;
          break;
        }
      }
    }
    p.cells[home].insert(v);
    p.cell_of[v] = home;
  }
  return p;
}

inline DominatingPartition build_partition(const Graph& x, const VertexSet& dominators,
                                           const SolverBudget& budget = {}) {
  const auto ordered = dominators.members();
  return build_partition(x, std::span<const Vertex>(ordered), budget);
}

// Accepts an explicit partition after checking every invariant.
inline DominatingPartition validate_partition(const Graph& x, std::span<const Vertex> dominators,
                                              std::span<const VertexSet> cells,
                                              const SolverBudget& budget = {}) {
  if (cells.size() != dominators.size())
    throw Error(ErrorKind::InvalidPartition,
                std::to_string(cells.size()) + " cells for " + std::to_string(dominators.size()) +
                    " dominators");
  detail::dominator_set(x, dominators);
  std::vector<std::size_t> owner(x.order(), cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].universe() != x.order())
      throw Error(ErrorKind::InvalidPartition, "cell " + std::to_string(i) + " has the wrong universe");
    if (!cells[i].contains(dominators[i]))
      throw Error(ErrorKind::InvalidPartition, "cell " + std::to_string(i) + " does not contain its dominator " +
                                                   std::to_string(dominators[i]));
    const VertexSet hood = closed_neighborhood(x, dominators[i]);
    for (Vertex v : cells[i].members()) {
      if (!hood.contains(v))
        throw Error(ErrorKind::InvalidPartition, "cell " + std::to_string(i) + " holds vertex " +
                                                     std::to_string(v) + " outside N[" +
                                                     std::to_string(dominators[i]) + "]");
      if (owner[v] != cells.size())
        throw Error(ErrorKind::InvalidPartition, "vertex " + std::to_string(v) + " lies in cells " +
                                                     std::to_string(owner[v]) + " and " + std::to_string(i));
      owner[v] = i;
    }
  }
  for (Vertex v = 0; v < x.order(); ++v)
    if (owner[v] == cells.size())
      throw Error(ErrorKind::InvalidPartition, "vertex " + std::to_string(v) + " lies in no cell");
  detail::require_minimum(x, dominators.size(), budget);

  DominatingPartition p;
  p.base = x;
  p.dominators.assign(dominators.begin(), dominators.end());
  p.cells.assign(cells.begin(), cells.end());
  p.cell_of = std::move(owner);
  return p;
}

// ---------------------------------------------------------------------------

struct DominationFlags {
  // Indexed by flat product id.
  std::vector<std::uint8_t> x_dom;
  std::vector<std::uint8_t> y_dom;
  std::vector<std::uint8_t> z_dom;
};

// X-domination uses the closed X-neighborhood, so a vertex of D is
// X-dominated by itself. Y- and Z-domination use open neighborhoods.
inline DominationFlags domination_flags(const TripleProduct& p, const VertexSet& dset) {
  if (dset.universe() != p.order())
    throw Error(ErrorKind::InvalidArgument, "dominating set universe differs from product order");
  if (const auto miss = first_undominated(p.flat(), dset))
    throw Error(ErrorKind::NotDominating,
                "product vertex " + to_string(p.to_coord(*miss)) + " is not dominated");
  const auto n = p.order();
  DominationFlags f{std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0),
                    std::vector<std::uint8_t>(n, 0)};
  for (Vertex v = 0; v < n; ++v) {
    const Coord3 c = p.to_coord(v);
    bool xd = dset.contains(v);
    for (Vertex a : p.factor_x().neighbors(c.x)) xd = xd || dset.contains(p.to_flat({a, c.y, c.z}));
    bool yd = false;
    for (Vertex b : p.factor_y().neighbors(c.y)) yd = yd || dset.contains(p.to_flat({c.x, b, c.z}));
    bool zd = false;
    for (Vertex z : p.factor_z().neighbors(c.z)) zd = zd || dset.contains(p.to_flat({c.x, c.y, z}));
    f.x_dom[v] = xd;
    f.y_dom[v] = yd;
    f.z_dom[v] = zd;
  }
  return f;
}

// ---------------------------------------------------------------------------

enum class CellColor : std::uint8_t { Blue, Green, Yellow, Orange, Red, Pink, Maroon, White };

inline constexpr std::array<CellColor, 8> kAllColors = {
    CellColor::Blue, CellColor::Green, CellColor::Yellow, CellColor::Orange,
    CellColor::Red,  CellColor::Pink,  CellColor::Maroon, CellColor::White};

inline constexpr std::string_view color_name(CellColor c) {
  constexpr std::array<std::string_view, 8> names = {"blue", "green",  "yellow", "orange",
                                                     "red",  "pink",   "maroon", "white"};
  return names[static_cast<std::size_t>(c)];
}

inline std::optional<CellColor> parse_color(std::string_view name) {
  for (auto c : kAllColors)
    if (color_name(c) == name) return c;
  return std::nullopt;
}

// Colors of cells that meet D.
inline constexpr bool holds_dominator(CellColor c) {
  return c == CellColor::Blue || c == CellColor::Green || c == CellColor::Yellow ||
         c == CellColor::Orange;
}

inline constexpr CellColor classify(bool has_d, bool any_y, bool any_z) {
  if (has_d) {
    if (!any_y && !any_z) return CellColor::Blue;
    if (!any_z) return CellColor::Green;
    if (!any_y) return CellColor::Yellow;
    return CellColor::Orange;
  }
  if (!any_y && !any_z) return CellColor::Red;
  if (!any_z) return CellColor::Pink;
  if (!any_y) return CellColor::Maroon;
  return CellColor::White;
}

struct CellIndex {
  std::size_t i = 0;
  Vertex y = 0;
  Vertex z = 0;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

inline std::string to_string(const CellIndex& c) {
  return "(i=" + std::to_string(c.i) + ",y=" + std::to_string(c.y) + ",z=" + std::to_string(c.z) + ")";
}

class CellColoring {
 public:
  CellColoring(DominatingPartition partition, TripleProduct product, VertexSet dset,
               DominationFlags flags, std::vector<CellColor> colors)
      : partition_(std::move(partition)),
        product_(std::move(product)),
        dset_(std::move(dset)),
        flags_(std::move(flags)),
        colors_(std::move(colors)) {}

  const DominatingPartition& partition() const noexcept { return partition_; }
  const TripleProduct& product() const noexcept { return product_; }
  const VertexSet& dset() const noexcept { return dset_; }
  const DominationFlags& flags() const noexcept { return flags_; }

  std::size_t k() const noexcept { return partition_.size(); }
  std::size_t ny() const noexcept { return product_.factor_y().order(); }
  std::size_t nz() const noexcept { return product_.factor_z().order(); }
  std::size_t cell_count() const noexcept { return colors_.size(); }

  std::size_t cell_id(const CellIndex& c) const {
    if (c.i >= k() || c.y >= ny() || c.z >= nz())
      throw Error(ErrorKind::InvalidArgument, "cell " + to_string(c) + " out of range");
    return (c.z * ny() + c.y) * k() + c.i;
  }

  CellIndex cell_index(std::size_t id) const {
    return {id % k(), static_cast<Vertex>((id / k()) % ny()), static_cast<Vertex>(id / (k() * ny()))};
  }

  CellColor color(const CellIndex& c) const { return colors_[cell_id(c)]; }
  CellColor color(std::size_t i, Vertex y, Vertex z) const { return color({i, y, z}); }
  std::span<const CellColor> colors() const noexcept { return colors_; }

  // Cell holding a product vertex.
  CellIndex cell_of(Vertex flat) const {
    const Coord3 c = product_.to_coord(flat);
    return {partition_.cell_of[c.x], c.y, c.z};
  }

 private:
  DominatingPartition partition_;
  TripleProduct product_;
  VertexSet dset_;
  DominationFlags flags_;
  std::vector<CellColor> colors_;
};

// Flat ids of pi_i^{y,z} = {(a, y, z) : a in pi_i}.
inline VertexSet cell_members(const DominatingPartition& partition, const TripleProduct& p,
                              const CellIndex& c) {
  if (c.i >= partition.size() || c.y >= p.factor_y().order() || c.z >= p.factor_z().order())
    throw Error(ErrorKind::InvalidArgument, "cell " + to_string(c) + " out of range");
  VertexSet out(p.order());
  partition.cells[c.i].for_each([&](Vertex a) { out.insert(p.to_flat({a, c.y, c.z})); });
  return out;
}

inline VertexSet cell_members(const CellColoring& coloring, const CellIndex& c) {
  return cell_members(coloring.partition(), coloring.product(), c);
}

inline CellColoring color_cells(const DominatingPartition& partition, const TripleProduct& p,
                                const VertexSet& dset) {
  if (!(partition.base == p.factor_x()))
    throw Error(ErrorKind::InvalidArgument, "partition is not over the product's X factor");
  DominationFlags flags = domination_flags(p, dset);
  const std::size_t k = partition.size();
  const std::size_t ny = p.factor_y().order();
  const std::size_t nz = p.factor_z().order();
  std::vector<CellColor> colors(k * ny * nz);
  for (Vertex z = 0; z < nz; ++z)
    for (Vertex y = 0; y < ny; ++y)
      for (std::size_t i = 0; i < k; ++i) {
        bool has_d = false;
        bool any_y = false;
        bool any_z = false;
        partition.cells[i].for_each([&](Vertex a) {
          const Vertex v = p.to_flat({a, y, z});
          has_d = has_d || dset.contains(v);
          any_y = any_y || flags.y_dom[v];
          any_z = any_z || flags.z_dom[v];
        });
        colors[(z * ny + y) * k + i] = classify(has_d, any_y, any_z);
      }
  return CellColoring(partition, p, dset, std::move(flags), std::move(colors));
}

// ---------------------------------------------------------------------------

// Primed counts (cells of each color) and unprimed counts (D-vertices
// inheriting the color of their cell, only the four D-holding colors).
struct ColorCounts {
  std::array<std::size_t, 8> cells{};
  std::array<std::size_t, 4> dverts{};

  std::size_t cell(CellColor c) const { return cells[static_cast<std::size_t>(c)]; }
  std::size_t dvert(CellColor c) const {
    return holds_dominator(c) ? dverts[static_cast<std::size_t>(c)] : 0;
  }
  std::size_t cells_of(std::initializer_list<CellColor> cs) const {
    std::size_t n = 0;
    for (auto c : cs) n += cell(c);
    return n;
  }
  std::size_t total_cells() const {
    std::size_t n = 0;
    for (auto c : cells) n += c;
    return n;
  }
  std::size_t total_dverts() const { return dverts[0] + dverts[1] + dverts[2] + dverts[3]; }
};

struct ColorLedger {
  std::size_t k = 0;
  std::size_t ny = 0;
  std::size_t nz = 0;
  std::size_t dset_size = 0;
  bool canonical_path = false;  // Z ids follow the path order
  ColorCounts total;
  std::vector<ColorCounts> y_fibers;  // Y_{i,z}, index z*k + i
  std::vector<ColorCounts> x_fibers;  // X_{y,z}, index z*ny + y
  std::vector<ColorCounts> z_fibers;  // Z_{i,y}, index y*k + i

  const ColorCounts& iz(std::size_t i, std::size_t z) const { return y_fibers.at(z * k + i); }
  const ColorCounts& yz(std::size_t y, std::size_t z) const { return x_fibers.at(z * ny + y); }
  const ColorCounts& iy(std::size_t i, std::size_t y) const { return z_fibers.at(y * k + i); }
};

inline ColorLedger count_colors(const CellColoring& c) {
  ColorLedger L;
  L.k = c.k();
  L.ny = c.ny();
  L.nz = c.nz();
  L.dset_size = c.dset().size();
  L.canonical_path = c.product().canonical_path();
  L.y_fibers.assign(L.k * L.nz, {});
  L.x_fibers.assign(L.ny * L.nz, {});
  L.z_fibers.assign(L.k * L.ny, {});
  for (std::size_t id = 0; id < c.cell_count(); ++id) {
    const CellIndex at = c.cell_index(id);
    const auto color = static_cast<std::size_t>(c.colors()[id]);
    for (ColorCounts* counts : {&L.total, &L.y_fibers[at.z * L.k + at.i],
                                &L.x_fibers[at.z * L.ny + at.y], &L.z_fibers[at.y * L.k + at.i]})
      ++counts->cells[color];
  }
  c.dset().for_each([&](Vertex v) {
    const CellIndex at = c.cell_of(v);
    const auto color = static_cast<std::size_t>(c.color(at));
    for (ColorCounts* counts : {&L.total, &L.y_fibers[at.z * L.k + at.i],
                                &L.x_fibers[at.z * L.ny + at.y], &L.z_fibers[at.y * L.k + at.i]})
      ++counts->dverts[color];
  });
  return L;
}

}  // namespace domcells
