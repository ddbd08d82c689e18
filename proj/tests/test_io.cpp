#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "doctest.h"
#include "fixtures.hpp"
#include "simphom/errors.hpp"
#include "simphom/homophily.hpp"
#include "simphom/io.hpp"

using namespace simphom;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("simphom-io-" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
  std::string prefix(const std::string& name) const { return (path / name).string(); }
};

void write_dataset(const TempDir& dir, const std::string& name, const std::string& nverts,
                   const std::string& simplices, const std::string& times, const std::string& labels) {
  dir.write(name + "-nverts.txt", nverts);
  dir.write(name + "-simplices.txt", simplices);
  if (!times.empty()) dir.write(name + "-times.txt", times);
  dir.write(name + "-node-labels.txt", labels);
}

}  // namespace

TEST_CASE("one timestamped triangle") {
  TempDir dir;
  write_dataset(dir, "tri", "3\n", "1\n2\n3\n", "7\n", "1 a\n2 a\n3 b\n");
  const DatasetBundle b = load_simplex_dataset(SimplexDatasetPaths::from_prefix(dir.prefix("tri")));
  CHECK(b.name == "tri");
  REQUIRE(b.stream.size() == 1);
  CHECK(b.stream[0].simplex == Simplex{0, 1, 2});
  CHECK(b.stream[0].time == 7.0);
  CHECK(b.timed);
  CHECK(b.labeling.class_names() == std::vector<std::string>{"a", "b"});
  CHECK(b.labeling.label(2) == 1);
}

TEST_CASE("count mismatches are parse errors with line numbers") {
  TempDir dir;
  SUBCASE("too few vertex ids") {
    write_dataset(dir, "d", "2\n3\n", "1\n2\n3\n", "", "1 0\n2 0\n3 1\n");
    try {
      load_simplex_dataset(SimplexDatasetPaths::from_prefix(dir.prefix("d")));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.file().ends_with("d-nverts.txt"));
    }
  }
  SUBCASE("leftover vertex ids") {
    write_dataset(dir, "d", "2\n", "1\n2\n3\n", "", "1 0\n2 0\n3 1\n");
    try {
      load_simplex_dataset(SimplexDatasetPaths::from_prefix(dir.prefix("d")));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.file().ends_with("d-simplices.txt"));
    }
  }
  SUBCASE("timestamp count") {
    write_dataset(dir, "d", "2\n", "1\n2\n", "1\n2\n", "1 0\n2 1\n");
    CHECK_THROWS_AS(load_simplex_dataset(SimplexDatasetPaths::from_prefix(dir.prefix("d"))), ParseError);
  }
  SUBCASE("garbage") {
    write_dataset(dir, "d", "2\nx\n", "1\n2\n", "", "1 0\n2 1\n");
    try {
      load_simplex_dataset(SimplexDatasetPaths::from_prefix(dir.prefix("d")));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_simplex_dataset(SimplexDatasetPaths::from_prefix(dir.prefix("nope"))), ParseError);
  }
}

TEST_CASE("unlabeled nodes are listed") {
  TempDir dir;
  write_dataset(dir, "d", "2\n2\n", "1\n5\n9\n1\n", "", "1 0\n2 1\n");
  try {
    load_simplex_dataset(SimplexDatasetPaths::from_prefix(dir.prefix("d")));
    FAIL("expected MissingLabel");
  } catch (const MissingLabel& e) {
    const std::string what = e.what();
    CHECK(what.find("5, 9") != std::string::npos);
  }
}

TEST_CASE("ids are remapped densely and isolated labeled nodes are kept") {
  TempDir dir;
  write_dataset(dir, "d", "2\n", "30\n10\n", "", "30 1\n10 2\n20 1\n");
  const DatasetBundle b = load_simplex_dataset(SimplexDatasetPaths::from_prefix(dir.prefix("d")));
  CHECK(b.external_ids == std::vector<std::int64_t>{10, 20, 30});
  CHECK(b.stream[0].simplex == Simplex{0, 2});
  CHECK(b.num_nodes() == 3);
  CHECK_FALSE(b.timed);
  // Numeric labels sort numerically.
  CHECK(b.labeling.class_name(b.labeling.label(0)) == "2");
  CHECK(b.labeling.label(1) == 0);
}

TEST_CASE("unsorted timestamps are stably sorted at load") {
  TempDir dir;
  write_dataset(dir, "d", "2\n2\n2\n", "1\n2\n2\n3\n1\n3\n", "5\n1\n1\n", "1 0\n2 0\n3 1\n");
  const DatasetBundle b = load_simplex_dataset(SimplexDatasetPaths::from_prefix(dir.prefix("d")));
  CHECK(b.stream[0].simplex == Simplex{1, 2});
  CHECK(b.stream[1].simplex == Simplex{0, 2});
  CHECK(b.stream[2].time == 5.0);
}

TEST_CASE("write then read gives the same bundle") {
  TempDir dir;
  const DatasetBundle a = load_simplex_dataset(SimplexDatasetPaths::from_prefix(SIMPHOM_DATA_DIR "/fig1c/fig1c"));
  write_simplex_dataset(a, dir.prefix("fig1c"));
  const DatasetBundle b = load_simplex_dataset(SimplexDatasetPaths::from_prefix(dir.prefix("fig1c")));
  CHECK(a == b);

  DatasetBundle untimed = a;
  untimed.timed = false;
  for (std::size_t i = 0; i < untimed.stream.size(); ++i) untimed.stream[i].time = static_cast<double>(i);
  write_simplex_dataset(untimed, dir.prefix("u"));
  CHECK(load_simplex_dataset(SimplexDatasetPaths::from_prefix(dir.prefix("u")), "fig1c") == untimed);
}

TEST_CASE("shipped fixture reproduces the example scores") {
  const DatasetBundle b = load_simplex_dataset(SimplexDatasetPaths::from_prefix(SIMPHOM_DATA_DIR "/fig1c/fig1c"));
  const SimplicialComplex x = b.complex();
  CHECK(x == fixtures::homophily_example());
  CHECK(b.labeling.labels().size() == 8);
  const ScoreReport s = simplicial_score(x, b.labeling, 2);
  CHECK(s.score == Rational(1));
  const DatasetStats st = dataset_stats(b);
  CHECK(st.nodes == 8);
  CHECK(st.classes == 2);
  CHECK(st.edges == 13);
  CHECK(st.triangles == 3);
  CHECK(st.time_steps == 16);
  CHECK(st.records == 16);
}

TEST_CASE("edge list with labels") {
  TempDir dir;
  const auto labels = dir.write("labels.txt", "a\nb\na\n");
  SUBCASE("three lines, three edges") {
    const auto edges = dir.write("e.txt", "# comment\n1 2\n2 3\n\n1 3\n");
    const DatasetBundle b = load_edge_list_with_labels(edges, labels);
    CHECK(b.name == "e");
    CHECK(b.complex().count(1) == 3);
    CHECK(b.complex().count(2) == 0);
  }
  SUBCASE("duplicates collapse with multiplicity") {
    const auto edges = dir.write("e.txt", "1 2\n2 1\n1 2\n2 3\n");
    const DatasetBundle b = load_edge_list_with_labels(edges, labels);
    CHECK(b.complex().count(1) == 2);
    const NodeId e[2] = {0, 1};
    CHECK(b.hypergraph().multiplicity(e) == 3);
  }
  SUBCASE("timed edges") {
    const auto edges = dir.write("e.txt", "1 2 10\n2 3 5\n");
    const DatasetBundle b = load_edge_list_with_labels(edges, labels);
    CHECK(b.timed);
    CHECK(b.stream[0].simplex == Simplex{1, 2});
  }
  SUBCASE("labels for unknown nodes are rejected") {
    const auto edges = dir.write("e.txt", "1 2\n2 4\n");
    CHECK_THROWS_AS(load_edge_list_with_labels(edges, labels), MissingLabel);
  }
  SUBCASE("malformed lines") {
    CHECK_THROWS_AS(load_edge_list_with_labels(dir.write("e.txt", "1 2\n3\n"), labels), ParseError);
    CHECK_THROWS_AS(load_edge_list_with_labels(dir.write("e.txt", "1 1\n"), labels), ParseError);
  }
}
