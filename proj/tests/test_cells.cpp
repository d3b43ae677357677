#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "domcells/cells.hpp"
#include "domcells/worked_examples.hpp"

using namespace domcells;

namespace {

std::vector<CellColor> golden(int id) {
  std::ifstream in(std::string(DOMCELLS_GOLDEN_DIR) + "/example" + std::to_string(id) + "_colors.json");
  const auto j = nlohmann::json::parse(in);
  std::vector<CellColor> out;
  for (const auto& layer : j.at("colors"))
    for (const auto& row : layer)
      for (const auto& name : row) out.push_back(*parse_color(name.get<std::string>()));
  return out;
}

CellColoring example_coloring(int id) {
  const auto ex = paper_example(id);
  const TripleProduct p(ex.x, ex.y, ex.z);
  return color_cells(validate_partition(ex.x, ex.dominators, ex.partition), p, ex.dset_flat(p));
}

}  // namespace

TEST(BuildPartition, ExampleTwoDefaultRule) {
  const auto ex = paper_example(2);
  const auto p = build_partition(ex.x, std::vector<Vertex>{1, 4, 7});
  ASSERT_EQ(p.cells.size(), 3u);
  EXPECT_EQ(p.cells[0].members(), (std::vector<Vertex>{0, 1, 2, 5}));
  EXPECT_EQ(p.cells[1].members(), (std::vector<Vertex>{3, 4}));
  EXPECT_EQ(p.cells[2].members(), (std::vector<Vertex>{6, 7, 8}));
}

TEST(BuildPartition, SingleVertex) {
  const auto p = build_partition(empty_graph(1), std::vector<Vertex>{0});
  ASSERT_EQ(p.cells.size(), 1u);
  EXPECT_EQ(p.cells[0].members(), (std::vector<Vertex>{0}));
}

TEST(BuildPartition, CellsLieInClosedNeighborhoods) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph x = random_gnp(3 + seed % 8, 0.35, seed);
    const auto r = gamma_exact(x);
    const auto p = build_partition(x, r.witness);
    VertexSet seen(x.order());
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_TRUE(p.cells[i].contains(p.dominators[i]));
      EXPECT_TRUE(p.cells[i].is_subset_of(closed_neighborhood(x, p.dominators[i])));
      EXPECT_FALSE(seen.intersects(p.cells[i]));
      seen |= p.cells[i];
    }
    EXPECT_EQ(seen.size(), x.order());
  }
}

TEST(BuildPartition, RejectsNonMinimumAndNonDominating) {
  const auto ex = paper_example(1);
  try {
    build_partition(ex.x, std::vector<Vertex>{1, 4, 6, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMinimum);
  }
  try {
    build_partition(ex.x, std::vector<Vertex>{1, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDominating);
  }
  EXPECT_THROW(build_partition(ex.x, std::vector<Vertex>{1, 1, 4}), Error);
}

TEST(ValidatePartition, ExampleOneAccepted) {
  const auto ex = paper_example(1);
  const auto p = validate_partition(ex.x, ex.dominators, ex.partition);
  EXPECT_EQ(p.cells[2].members(), (std::vector<Vertex>{5, 6, 7}));
  EXPECT_EQ(p.cell_of[5], 2u);
}

TEST(ValidatePartition, Rejections) {
  const auto ex = paper_example(1);
  const auto expect_invalid = [&](std::vector<VertexSet> cells) {
    try {
      validate_partition(ex.x, ex.dominators, cells);
      ADD_FAILURE() << "accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidPartition) << e.what();
    }
  };
  // x1 moved into pi_2: x1 is not adjacent to x5.
  expect_invalid({VertexSet(8, {1, 2}), VertexSet(8, {0, 3, 4}), VertexSet(8, {5, 6, 7})});
  // x3 missing from every cell.
  expect_invalid({VertexSet(8, {0, 1}), VertexSet(8, {3, 4}), VertexSet(8, {5, 6, 7})});
  // x2 in two cells.
  expect_invalid({VertexSet(8, {0, 1, 2}), VertexSet(8, {3, 4}), VertexSet(8, {1, 5, 6, 7})});
  // dominator outside its own cell.
  expect_invalid({VertexSet(8, {0, 2}), VertexSet(8, {1, 3, 4}), VertexSet(8, {5, 6, 7})});
  expect_invalid({VertexSet(8, {0, 1, 2}), VertexSet(8, {3, 4, 5, 6, 7})});
}

TEST(CellMembers, ExampleOne) {
  const auto c = example_coloring(1);
  const auto members = cell_members(c, {0, 3, 0});
  std::vector<Vertex> expected;
  for (Vertex x : {0u, 1u, 2u}) expected.push_back(c.product().to_flat({x, 3, 0}));
  EXPECT_EQ(members.members(), expected);

  std::size_t total = 0;
  for (std::size_t id = 0; id < c.cell_count(); ++id) {
    const auto at = c.cell_index(id);
    const auto size = cell_members(c, at).size();
    total += size;
    EXPECT_EQ(size, c.partition().cells[at.i].size());
  }
  EXPECT_EQ(total, c.product().order());
}

TEST(DominationFlags, ExampleOne) {
  const auto c = example_coloring(1);
  const auto& p = c.product();
  // (x8, y1, z1) is Y-dominated by (x8, y4, z1).
  EXPECT_TRUE(c.dset().contains(p.to_flat({7, 3, 0})));
  EXPECT_TRUE(c.flags().y_dom[p.to_flat({7, 0, 0})]);
  c.dset().for_each([&](Vertex v) { EXPECT_TRUE(c.flags().x_dom[v]); });
}

TEST(DominationFlags, TrivialZ) {
  const Graph x = path_graph(3);
  const TripleProduct p(x, path_graph(2), empty_graph(1));
  const auto d = gamma_exact(p.flat()).witness;
  const auto f = domination_flags(p, d);
  for (auto z : f.z_dom) EXPECT_EQ(z, 0);
  EXPECT_THROW(domination_flags(p, VertexSet(p.order())), Error);
}

TEST(Classify, Definitions) {
  EXPECT_EQ(classify(true, false, false), CellColor::Blue);
  EXPECT_EQ(classify(true, true, false), CellColor::Green);
  EXPECT_EQ(classify(true, false, true), CellColor::Yellow);
  EXPECT_EQ(classify(true, true, true), CellColor::Orange);
  EXPECT_EQ(classify(false, false, false), CellColor::Red);
  EXPECT_EQ(classify(false, true, false), CellColor::Pink);
  EXPECT_EQ(classify(false, false, true), CellColor::Maroon);
  EXPECT_EQ(classify(false, true, true), CellColor::White);
  for (auto c : kAllColors) EXPECT_EQ(parse_color(color_name(c)), c);
  EXPECT_FALSE(parse_color("teal"));
}

// Every dominating set of C4 □ P2 □ P2 (X = C4 with dominators x0, x1).
// Flags are recomputed here from coordinates; every one of the eight
// combinations occurs and always maps to its own color.
TEST(Classify, TruthTableOnMiniInstances) {
  const Graph x = cycle_graph(4);
  const Graph y = path_graph(2);
  const Graph z = path_graph(2);
  const TripleProduct p(x, y, z);
  const auto partition = build_partition(x, std::vector<Vertex>{0, 1});
  std::map<std::array<bool, 3>, std::set<CellColor>> seen;
  for (std::uint32_t mask = 0; mask < (1U << 16); ++mask) {
    VertexSet d(16);
    for (Vertex v = 0; v < 16; ++v)
      if (mask >> v & 1U) d.insert(v);
    if (!is_dominating(p.flat(), d)) continue;
    const auto c = color_cells(partition, p, d);
    for (std::size_t id = 0; id < c.cell_count(); ++id) {
      const auto at = c.cell_index(id);
      bool has_d = false, any_y = false, any_z = false;
      for (Vertex a : partition.cells[at.i].members()) {
        has_d = has_d || d.contains(p.to_flat({a, at.y, at.z}));
        any_y = any_y || d.contains(p.to_flat({a, 1 - at.y, at.z}));
        any_z = any_z || d.contains(p.to_flat({a, at.y, 1 - at.z}));
      }
      seen[{has_d, any_y, any_z}].insert(c.colors()[id]);
    }
  }
  const std::map<std::array<bool, 3>, CellColor> expected = {
      {{true, false, false}, CellColor::Blue},    {{true, true, false}, CellColor::Green},
      {{true, false, true}, CellColor::Yellow},   {{true, true, true}, CellColor::Orange},
      {{false, false, false}, CellColor::Red},    {{false, true, false}, CellColor::Pink},
      {{false, false, true}, CellColor::Maroon},  {{false, true, true}, CellColor::White}};
  ASSERT_EQ(seen.size(), 8u);
  std::set<CellColor> distinct;
  for (const auto& [key, colors] : seen) {
    ASSERT_EQ(colors.size(), 1u);
    EXPECT_EQ(*colors.begin(), expected.at(key));
    distinct.insert(*colors.begin());
  }
  EXPECT_EQ(distinct.size(), 8u);
}

TEST(Coloring, ExampleOneNamedCells) {
  const auto c = example_coloring(1);
  EXPECT_EQ(c.color(0, 3, 0), CellColor::Blue);
  EXPECT_EQ(c.color(2, 0, 0), CellColor::Green);
  EXPECT_EQ(c.color(0, 1, 0), CellColor::Yellow);
  EXPECT_EQ(c.color(0, 1, 1), CellColor::Orange);
  EXPECT_EQ(c.color(0, 0, 0), CellColor::White);
  EXPECT_EQ(c.color(1, 0, 0), CellColor::Pink);
  EXPECT_EQ(c.color(1, 3, 1), CellColor::Maroon);
  EXPECT_EQ(count_colors(c).total.cell(CellColor::Red), 0u);
}

TEST(Coloring, MatchesGoldenFiles) {
  for (int id : {1, 2}) {
    const auto c = example_coloring(id);
    const auto g = golden(id);
    ASSERT_EQ(g.size(), c.cell_count());
    for (std::size_t cell = 0; cell < g.size(); ++cell)
      EXPECT_EQ(c.colors()[cell], g[cell]) << id << " " << to_string(c.cell_index(cell));
  }
}

TEST(Coloring, RejectsForeignPartitionAndNonDominatingSet) {
  const auto ex = paper_example(1);
  const TripleProduct p(ex.x, ex.y, ex.z);
  auto d = ex.dset_flat(p);
  d.erase(d.members().front());
  const auto partition = validate_partition(ex.x, ex.dominators, ex.partition);
  try {
    color_cells(partition, p, d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDominating);
  }
  const TripleProduct other(ex.y, ex.y, ex.z);
  EXPECT_THROW(color_cells(partition, other, VertexSet::full(other.order())), Error);
}

TEST(Ledger, Identities) {
  for (int id : {1, 2}) {
    const auto c = example_coloring(id);
    const auto L = count_colors(c);
    EXPECT_EQ(L.total.total_dverts(), c.dset().size());
    EXPECT_EQ(L.total.total_cells(), 3 * c.ny() * c.nz());
    ColorCounts sum;
    for (const auto& f : L.z_fibers)
      for (std::size_t k = 0; k < 8; ++k) sum.cells[k] += f.cells[k];
    EXPECT_EQ(sum.cells, L.total.cells);
  }
  EXPECT_EQ(count_colors(example_coloring(1)).total.total_cells(), 24u);
}

TEST(Ledger, RandomInstances) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph x = random_gnp(2 + seed % 5, 0.4, seed);
    const Graph y = random_gnp(1 + seed % 4, 0.5, seed + 50);
    const TripleProduct p(x, y, path_graph(1 + seed % 3));
    const auto d = gamma_exact(p.flat()).witness;
    const auto c = color_cells(build_partition(x, gamma_exact(x).witness), p, d);
    const auto L = count_colors(c);
    EXPECT_EQ(L.total.total_dverts(), d.size());
    EXPECT_EQ(L.total.total_cells(), c.k() * y.order() * p.factor_z().order());
    for (std::size_t id = 0; id < c.cell_count(); ++id)
      EXPECT_EQ(holds_dominator(c.colors()[id]), cell_members(c, c.cell_index(id)).intersects(d));
  }
}
