#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "hsg/enumeration.hpp"
#include "hsg/io.hpp"

using namespace hsg;
using namespace hsg::fixtures;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / "hsg_io_test";
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("structure_from_json parses the fixture encodings") {
  CHECK(structure_from_json("{\"order\":2,\"table\":[[[0],[0]],[[1],[1]]]}") ==
        h2l());
  CHECK(structure_from_json(
            "{\"order\":2,\"table\":[[[0,1],[0,1]],[[0,1],[0,1]]]}") == h2f());
  // whitespace is insignificant on input
  CHECK(structure_from_json(
            " { \"order\" : 2 ,\n \"table\" : [ [ [0], [0] ], [ [1], [1] ] ] }") ==
        h2l());
}

TEST_CASE("validation errors name the offending cell") {
  try {
    structure_from_json("{\"order\":2,\"table\":[[[],[0]],[[1],[1]]]}");
    FAIL("expected validation_error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("empty cell (0,0)") !=
          std::string::npos);
  }
  try {
    structure_from_json("{\"order\":2,\"table\":[[[0],[2]],[[1],[1]]]}");
    FAIL("expected validation_error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
    CHECK(std::string(e.what()).find("out-of-range") != std::string::npos);
  }
  // not strictly ascending: descending and duplicated entries
  CHECK_THROWS_AS(
      structure_from_json("{\"order\":2,\"table\":[[[1,0],[0]],[[1],[1]]]}"),
      validation_error);
  CHECK_THROWS_AS(
      structure_from_json("{\"order\":2,\"table\":[[[0,0],[0]],[[1],[1]]]}"),
      validation_error);
  // ragged tables
  CHECK_THROWS_AS(
      structure_from_json("{\"order\":2,\"table\":[[[0],[0]]]}"),
      validation_error);
  CHECK_THROWS_AS(
      structure_from_json("{\"order\":2,\"table\":[[[0]],[[1],[1]]]}"),
      validation_error);
  // shape and type errors
  CHECK_THROWS_AS(structure_from_json("{\"order\":2}"), validation_error);
  CHECK_THROWS_AS(structure_from_json("{\"table\":[]}"), validation_error);
  CHECK_THROWS_AS(
      structure_from_json("{\"order\":0,\"table\":[]}"), validation_error);
  CHECK_THROWS_AS(
      structure_from_json(
          "{\"order\":2,\"table\":[[[0],[\"x\"]],[[1],[1]]]}"),
      validation_error);
  int too_big = order_cap + 1;
  CHECK_THROWS_AS(
      structure_from_json("{\"order\":" + std::to_string(too_big) +
                          ",\"table\":[]}"),
      validation_error);
  // malformed JSON carries a byte offset
  try {
    structure_from_json("{\"order\":2,");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.column > 0);
  }
}

TEST_CASE("the canonical encoding is byte-stable") {
  CHECK(structure_to_json(h2l()) ==
        "{\"order\":2,\"table\":[[[0],[0]],[[1],[1]]]}");
  CHECK(structure_to_json(h2f()) ==
        "{\"order\":2,\"table\":[[[0,1],[0,1]],[[0,1],[0,1]]]}");
  CHECK(structure_to_json(h2c()) ==
        "{\"order\":2,\"table\":[[[0],[0]],[[0],[0]]]}");
}

TEST_CASE("save and load round-trip") {
  TempDir tmp;
  int i = 0;
  for (const Hypergroupoid& h : {h2l(), h2f(), h2c(), h2m()}) {
    auto p = tmp.path / ("fixture" + std::to_string(i++) + ".json");
    save_structure(h, p);
    CHECK(load_structure(p) == h);
    std::string bytes = read_file(p);
    CHECK(bytes == structure_to_json(h) + "\n");
    // a second save produces identical bytes
    save_structure(h, p);
    CHECK(read_file(p) == bytes);
  }

  // every order-2 hypersemigroup round-trips
  EnumerationSpec spec;
  spec.order = 2;
  spec.filter = EnumerationFilter::associative_only;
  auto p = tmp.path / "roundtrip.json";
  enumerate(spec, [&](const Hypergroupoid& h) {
    save_structure(h, p);
    CHECK(load_structure(p) == h);
    return true;
  });
}

TEST_CASE("load reports missing files") {
  CHECK_THROWS_AS(load_structure("/nonexistent/path/struct.json"),
                  validation_error);
}

TEST_CASE("save reports unwritable paths") {
  CHECK_THROWS_AS(save_structure(h2l(), "/nonexistent/dir/struct.json"),
                  validation_error);
}
