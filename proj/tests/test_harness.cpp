#include <gtest/gtest.h>
#include <sys/wait.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "domcells/domcells.hpp"

using namespace domcells;
namespace fs = std::filesystem;
namespace pt = boost::property_tree;

namespace {

struct Blocks {
  std::size_t layers = 0;
  std::size_t rects = 0;
  std::size_t dashed = 0;
  std::size_t dots = 0;
};

Blocks parse_svg(const std::string& svg) {
  std::istringstream in(svg);
  pt::ptree tree;
  pt::read_xml(in, tree);
  Blocks b;
  for (const auto& [tag, g] : tree.get_child("svg")) {
    if (tag != "g") continue;
    ++b.layers;
    for (const auto& [child, node] : g) {
      if (child == "rect") {
        ++b.rects;
        if (node.get_optional<std::string>("<xmlattr>.stroke-dasharray")) ++b.dashed;
      }
      if (child == "circle") ++b.dots;
    }
  }
  return b;
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("domcells-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(DOMCELLS_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::stringstream ss;
  ss << std::ifstream(p).rdbuf();
  return ss.str();
}

}  // namespace

TEST(PaperExample, Invariants) {
  const auto one = paper_example(1);
  const TripleProduct p1(one.x, one.y, one.z);
  EXPECT_EQ(p1.order(), 64u);
  EXPECT_EQ(one.dset.size(), 13u);
  EXPECT_TRUE(is_dominating(p1.flat(), one.dset_flat(p1)));
  const auto two = paper_example(2);
  const TripleProduct p2(two.x, two.y, two.z);
  EXPECT_EQ(p2.order(), 135u);
  EXPECT_EQ(two.dset.size(), 25u);
  EXPECT_THROW(paper_example(3), Error);
}

TEST(Reproduce, ExampleOne) {
  const auto r = reproduce_example(1);
  ASSERT_EQ(r.report.instances.size(), 1u);
  const auto& inst = r.report.instances.front();
  EXPECT_EQ(inst.status, InstanceStatus::Checked);
  EXPECT_EQ(inst.gamma_product.value, 13u);
  EXPECT_TRUE(inst.gamma_product.proven);
  EXPECT_EQ(r.report.defects(), 0u);
  EXPECT_EQ(r.coloring->color(0, 3, 0), CellColor::Blue);
  EXPECT_EQ(r.coloring->color(1, 3, 1), CellColor::Maroon);
  EXPECT_EQ(inst.ledger->total.cell(CellColor::Red), 0u);
}

TEST(Reproduce, ExampleTwo) {
  const auto r = reproduce_example(2);
  const auto& inst = r.report.instances.front();
  EXPECT_TRUE(r.default_partition_matches);
  EXPECT_EQ(inst.gamma_product.value, 25u);
  EXPECT_TRUE(inst.gamma_product.proven);
  EXPECT_EQ(r.report.defects(), 0u);
  EXPECT_EQ(r.report.findings(), 0u);
  // Z_{2,y2}: maroon, blue or green, maroon.
  EXPECT_EQ(r.coloring->color(1, 1, 0), CellColor::Maroon);
  EXPECT_TRUE(holds_dominator(r.coloring->color(1, 1, 1)));
  EXPECT_EQ(r.coloring->color(1, 1, 2), CellColor::Maroon);
}

TEST(Reproduce, UnprovenProductIsMarked) {
  ReproduceOptions opts;
  opts.budget = SolverBudget::nodes(3);
  const auto r = reproduce_example(2, opts);
  EXPECT_EQ(r.report.instances.front().status, InstanceStatus::SkippedUnproven);
  EXPECT_TRUE(r.report.instances.front().checks.empty());
}

TEST(Svg, ExampleLayouts) {
  const auto one = parse_svg(render_svg(*reproduce_example(1, {false}).coloring));
  EXPECT_EQ(one.layers, 2u);
  EXPECT_EQ(one.rects, 2u * 3u * 4u);
  EXPECT_EQ(one.dots, 13u);
  const auto r2 = reproduce_example(2, {false});
  const auto two = parse_svg(render_svg(*r2.coloring));
  EXPECT_EQ(two.layers, 3u);
  EXPECT_EQ(two.rects, 3u * 3u * 5u);
  EXPECT_EQ(two.dots, 25u);
  EXPECT_EQ(two.dashed, r2.report.instances.front().ledger->total.cell(CellColor::White));
}

TEST(Json, ColoringRoundTrip) {
  const auto c = *reproduce_example(1, {false}).coloring;
  const Json j = coloring_to_json(c);
  const auto back = coloring_from_json(Json::parse(j.dump()));
  EXPECT_TRUE(std::equal(back.colors().begin(), back.colors().end(), c.colors().begin()));

  Json tampered = j;
  tampered["colors"][0][3][0] = "red";
  try {
    coloring_from_json(tampered);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReproductionFailure);
    EXPECT_NE(std::string(e.what()).find("(i=0,y=3,z=0)"), std::string::npos);
  }
  EXPECT_THROW(coloring_from_json(Json::parse("{\"schema\": 1}")), Error);
}

TEST(Json, GoldenFilesMatchSerializedColors) {
  for (int id : {1, 2}) {
    std::ifstream in(std::string(DOMCELLS_GOLDEN_DIR) + "/example" + std::to_string(id) + "_colors.json");
    const auto golden = Json::parse(in);
    const auto c = *reproduce_example(id, {false}).coloring;
    EXPECT_EQ(coloring_to_json(c)["colors"], golden["colors"]);
  }
}

TEST(Fuzz, SmallCampaignIsDeterministic) {
  FuzzConfig cfg;
  cfg.instances = 12;
  cfg.max_x = 5;
  cfg.max_y = 4;
  cfg.seed = 99;
  cfg.threads = 1;
  const auto a = run_report_to_json(fuzz(cfg)).dump();
  cfg.threads = 3;
  const auto b = run_report_to_json(fuzz(cfg)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("elapsed"), std::string::npos);
  const auto j = Json::parse(a);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["summary"]["check_failures"], 0);
  cfg.seed = 100;
  EXPECT_NE(run_report_to_json(fuzz(cfg)).dump(), a);
}

TEST(Fuzz, EdgelessFactors) {
  FuzzConfig cfg;
  cfg.instances = 10;
  cfg.max_x = 5;
  cfg.max_y = 4;
  cfg.p_values = {0.0};
  const auto r = fuzz(cfg);
  for (const auto& inst : r.instances) {
    ASSERT_EQ(inst.status, InstanceStatus::Checked);
    EXPECT_EQ(inst.gamma_x.value, inst.x.order());
    EXPECT_EQ(inst.defects(), 0u);
  }
}

TEST(Fuzz, ExhaustedBudgetSkipsInstance) {
  FuzzConfig cfg;
  cfg.instances = 6;
  cfg.node_budget = 1;
  cfg.n_values = {3};
  cfg.p_values = {0.4};
  const auto r = fuzz(cfg);
  std::size_t skipped = 0;
  for (const auto& inst : r.instances) {
    if (inst.status == InstanceStatus::SkippedUnproven) {
      ++skipped;
      EXPECT_TRUE(inst.checks.empty());
      EXPECT_FALSE(inst.slack().has_value());
    }
  }
  EXPECT_GT(skipped, 0u);
  EXPECT_NE(run_report_to_json(r).dump().find("skipped-unproven"), std::string::npos);
}

TEST(Fuzz, ConfigValidation) {
  FuzzConfig cfg;
  cfg.n_values = {};
  EXPECT_THROW(fuzz(cfg), Error);
  cfg = FuzzConfig{};
  cfg.p_values = {1.5};
  EXPECT_THROW(fuzz(cfg), Error);
  cfg = FuzzConfig{};
  cfg.max_x = 0;
  EXPECT_THROW(fuzz(cfg), Error);
}

TEST(Cli, ExitCodes) {
  const auto dir = scratch_dir();
  write(dir / "k2.g6", "A_\n");
  write(dir / "p3.txt", "3\n0 1\n1 2\n");
  write(dir / "bad.txt", "3\n0 0\n");
  EXPECT_EQ(run_cli("gamma --input " + (dir / "k2.g6").string() + " --format graph6"), 0);
  EXPECT_EQ(run_cli("gamma --input " + (dir / "p3.txt").string()), 0);
  EXPECT_EQ(run_cli("gamma --input " + (dir / "bad.txt").string()), 2);
  EXPECT_EQ(run_cli("gamma"), 2);
  EXPECT_EQ(run_cli("nonsense"), 2);
  EXPECT_EQ(run_cli("example --id 3"), 2);

  const auto prod = dir / "prod.txt";
  EXPECT_EQ(run_cli("product --x " + (dir / "p3.txt").string() + " --y " + (dir / "k2.g6").string() + " --z " +
                    (dir / "k2.g6").string() + " --out " + prod.string()),
            0);
  EXPECT_EQ(parse_edge_list(slurp(prod)).order(), 12u);
  EXPECT_TRUE(fs::exists(dir / "prod.txt.json"));

  const auto coloring = dir / "coloring.json";
  write(dir / "dset.txt", "0 0 0  # x y z\n2 0 1\n");
  write(dir / "part.txt", "1: 0 1 2\n");
  EXPECT_EQ(run_cli("color --x " + (dir / "p3.txt").string() + " --y " + (dir / "k2.g6").string() +
                    " --path 2 --solve --auto --json " + coloring.string() + " --svg " + (dir / "c.svg").string()),
            0);
  EXPECT_EQ(run_cli("verify --coloring " + coloring.string() + " --all"), 0);
  EXPECT_EQ(run_cli("verify --coloring " + coloring.string() + " --checks lemma1,p2,obs"), 0);
  EXPECT_EQ(run_cli("verify --coloring " + coloring.string() + " --checks bogus"), 2);
  EXPECT_EQ(run_cli("color --x " + (dir / "p3.txt").string() + " --y " + (dir / "k2.g6").string() +
                    " --path 2 --dset " + (dir / "dset.txt").string() + " --partition " +
                    (dir / "part.txt").string()),
            2);  // the two listed vertices do not dominate

  std::ifstream in(coloring);
  Json j = Json::parse(in);
  j["colors"][0][0][0] = j["colors"][0][0][0] == "red" ? "blue" : "red";
  write(dir / "tampered.json", j.dump());
  EXPECT_EQ(run_cli("verify --coloring " + (dir / "tampered.json").string()), 1);

  EXPECT_EQ(run_cli("example --id 1 --json " + (dir / "ex1.json").string()), 0);
  EXPECT_EQ(run_cli("fuzz --instances 4 --seed 5 --max-x 4 --max-y 3 --n-values 1,2 --p 0.3,0.5 --json " +
                    (dir / "a.json").string()),
            0);
  EXPECT_EQ(run_cli("fuzz --instances 4 --seed 5 --max-x 4 --max-y 3 --n-values 1,2 --p 0.3,0.5 --threads 2 --json " +
                    (dir / "b.json").string()),
            0);
  EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
  fs::remove_all(dir);
}
