#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "symfitch/errors.hpp"
#include "symfitch/io.hpp"
#include "symfitch/random.hpp"

using namespace symfitch;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SYMFITCH_DATA_DIR) + "/" + name; }

std::string temp(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "symfitch_cli_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("recognize the hourglass") {
  const auto r = run({"recognize", data("hourglass.json")});
  CHECK(r.code == cli::kNotFitch);
  const auto j = json::parse(r.out);
  CHECK(j["decision"] == "not-fitch");
  CHECK(j["reason"]["kind"] == "incompatible-subsplits");
  CHECK(j["reason"]["pair"] == json::array({"a b | c d", "a c | b d"}));
  CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("explain then recognize round-trips through files") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto tree_path = temp("tree" + std::to_string(seed) + ".json");
    const auto map_path = temp("map" + std::to_string(seed) + ".json");
    const auto witness_path = temp("witness" + std::to_string(seed) + ".json");
    const auto t = random_labeled_tree(3 + seed % 8, ColorSet(numbered_names(3)), 0.3, seed);
    write_file(tree_path, write_tree(t));
    REQUIRE(run({"explain", tree_path, "-o", map_path}).code == 0);
    const auto r = run({"recognize", map_path, "--witness", witness_path});
    REQUIRE(r.code == cli::kFitch);
    const auto j = json::parse(r.out);
    CHECK(j["decision"] == "fitch");
    CHECK(j.contains("witness"));
    const auto witness = read_tree(read_file(witness_path));
    CHECK(explain(witness, t.colors()) == read_map(read_file(map_path)));
  }
}

TEST_CASE("witness export formats") {
  const auto nwk = temp("w.nwk");
  const auto dot = temp("w.dot");
  CHECK(run({"recognize", data("caterpillar_map.json"), "--witness", nwk, "--newick"}).code == 0);
  CHECK(read_file(nwk).find("[&colors={m}]") != std::string::npos);
  CHECK(run({"recognize", data("caterpillar_map.json"), "--witness", dot, "--dot"}).code == 0);
  CHECK(read_file(dot).rfind("graph T {", 0) == 0);
  CHECK(run({"recognize", data("caterpillar_map.json"), "--newick", "--dot"}).code == cli::kInvalidInput);
}

TEST_CASE("invalid input") {
  const auto bad = run({"recognize", data("malformed.json")});
  CHECK(bad.code == cli::kInvalidInput);
  CHECK(json::parse(bad.out)["error"] == "invalid-input");
  CHECK(run({"recognize", data("does_not_exist.json")}).code == cli::kInvalidInput);
  const auto usage = run({"recognize"});
  CHECK(usage.code == cli::kInvalidInput);
  CHECK(json::parse(usage.out)["issues"][0]["code"] == "usage");
  CHECK(run({"frobnicate"}).code == cli::kInvalidInput);
  CHECK(run({}).code == cli::kInvalidInput);
  CHECK(run({"explain", data("hourglass.json")}).code == cli::kInvalidInput);
  CHECK(run({"recognize", data("hourglass.json"), "--time-budget", "-1"}).code == cli::kInvalidInput);
  CHECK(run({"recognize", data("hourglass.json"), "--jobs", "0"}).code == cli::kInvalidInput);
  CHECK(run({"recognize", data("hourglass.json"), "--max-leaves", "65"}).code == cli::kInvalidInput);
}

TEST_CASE("resource limit exit code") {
  const auto path = temp("big.json");
  write_file(path, write_map(explain(random_labeled_tree(12, ColorSet(numbered_names(5)), 0.3, 2))));
  const auto r = run({"recognize", path, "--max-leaves", "4"});
  CHECK(r.code == cli::kResourceLimit);
  CHECK(json::parse(r.out)["decision"] == "undecided-resource-limit");
  CHECK(run({"recognize", path, "--jobs", "3"}).code == cli::kFitch);
}

TEST_CASE("explain files") {
  const auto r = run({"explain", data("star_one_edge_tree.json")});
  REQUIRE(r.code == 0);
  const auto map = read_map(r.out);
  CHECK(map.entry(0, 1) == std::vector<std::size_t>{0});
  CHECK(map.entry(0, 2) == std::vector<std::size_t>{0});
  CHECK(map.entry(1, 2).empty());
  const auto c = run({"explain", data("caterpillar_tree.json")});
  CHECK(read_map(c.out) == read_map(read_file(data("caterpillar_map.json"))));
}

TEST_CASE("mono") {
  SUBCASE("complete bipartite") {
    const auto rep = temp("rep.json");
    const auto r = run({"mono", data("caterpillar_map.json"), "--representative", rep});
    CHECK(r.code == cli::kFitch);
    const auto j = json::parse(r.out);
    CHECK(j["family"]["inner_vertex_count"] == 2);
    const auto tree = read_tree(read_file(rep));
    CHECK(diameter(tree.topology()) <= 3);
    CHECK(explain(tree, ColorSet({"m"})) == read_map(read_file(data("caterpillar_map.json"))));
  }
  SUBCASE("two colors") {
    const auto r = run({"mono", data("two_color_restricted.json")});
    CHECK(r.code == cli::kNotFitch);
    const auto j = json::parse(r.out);
    CHECK(j["reason"]["kind"] == "two-colors");
    CHECK(j["reason"]["pairs"] == json::array({json::array({"a", "b"}), json::array({"c", "d"})}));
  }
  SUBCASE("empty map") {
    const auto r = run({"mono", data("empty_map.json")});
    CHECK(r.code == cli::kFitch);
    CHECK(json::parse(r.out)["family"]["inner_vertex_count"] == 1);
  }
  SUBCASE("multi-color pair") { CHECK(run({"mono", data("hourglass.json")}).code == cli::kInvalidInput); }
}

TEST_CASE("reduce") {
  const auto r = run({"reduce", data("hourglass.quartets")});
  REQUIRE(r.code == 0);
  CHECK(read_map(r.out) == read_map(read_file(data("hourglass.json"))));
  const auto e = run({"reduce", data("single_quartet.quartets"), "--leaves", "e"});
  REQUIRE(e.code == 0);
  CHECK(read_map(e.out).leaf_count() == 5);
}

TEST_CASE("gen") {
  const auto a = run({"gen", "tree", "-n", "8", "-k", "3", "--seed", "17"});
  const auto b = run({"gen", "tree", "-n", "8", "-k", "3", "--seed", "17"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"gen", "tree", "-n", "8"}).code == cli::kInvalidInput);

  const auto zero = run({"gen", "tree", "-n", "6", "-p", "0", "--seed", "1"});
  CHECK(explain(read_tree(zero.out)).used_colors().empty());

  const auto q = run({"gen", "quartets", "-n", "4", "-k", "3", "--seed", "5"});
  REQUIRE(q.code == 0);
  CHECK(std::count(q.out.begin(), q.out.end(), '\n') == 3);
  CHECK(run({"gen", "quartets", "-n", "4", "-k", "4", "--seed", "5"}).code == cli::kInvalidInput);

  const auto m = run({"gen", "map", "-n", "5", "-k", "2", "--seed", "3"});
  REQUIRE(m.code == 0);
  CHECK(read_map(m.out).leaf_count() == 5);

  const auto nwk = run({"gen", "tree", "-n", "5", "--seed", "3", "--newick"});
  CHECK(nwk.out.back() == '\n');
  CHECK(nwk.out.find(';') != std::string::npos);
}
