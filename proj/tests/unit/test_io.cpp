#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gen.hpp"
#include "koszul/cache.hpp"
#include "koszul/errors.hpp"
#include "koszul/io.hpp"

using namespace koszul;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& tag) {
  auto p = fs::temp_directory_path() / ("koszul_test_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("symmetric function serialization") {
  SymFunc f = Q(2) * SymFunc::schur({3}) + SymFunc::schur({2, 1});
  CHECK(serialize_symfunc(f, Basis::S) ==
        R"({"basis":"s","degree":3,"terms":[{"partition":[3],"coeff":"2"},{"partition":[2,1],"coeff":"1"}]})");
  CHECK(parse_symfunc(serialize_symfunc(f, Basis::S)) == f);
  CHECK(parse_basis("h") == Basis::H);
  CHECK_THROWS_AS(parse_basis("q"), InvalidArgument);
  CHECK(serialize_symfunc(SymFunc::p({1, 1}, Q(1, 2)), Basis::P).find("\"1/2\"") != std::string::npos);
}

TEST_CASE("property: serialization round trips in every basis") {
  testgen::Gen g(71);
  for (int t = 0; t < testgen::kCases; ++t) {
    SymFunc f = g.symfunc(g.uniform(1, 6));
    for (Basis b : {Basis::S, Basis::H, Basis::E, Basis::P}) CHECK(parse_symfunc(serialize_symfunc(f, b)) == f);
  }
}

TEST_CASE("matroid input parsing") {
  auto in = parse_matroid(R"({"braid":{"n":4}})");
  CHECK(in.type == MatroidInput::Type::Braid);
  CHECK(build_matroid(in).size() == 6);
  auto u = parse_matroid_spec("uniform:2,5");
  CHECK(build_matroid(u).rank() == 2);
  auto c = parse_matroid(R"({"circuits":{"n":3,"circuits":[[1,2,3]]}})");
  CHECK(build_matroid(c).rank() == 2);
  CHECK_THROWS_AS(build_oriented(c), InvalidArgument);
  auto gr = parse_matroid(R"({"graph":{"vertices":3,"edges":[[1,2],[2,3],[1,3]]}})");
  CHECK(build_presentation(gr, Kind::OS).hilbert(3) == std::vector<long long>{1, 3, 2, 0});
  CHECK(parse_matroid(matroid_to_json(gr)).edges == gr.edges);
}

TEST_CASE("parse errors carry a location") {
  try {
    parse_matroid(R"({"circuits":{"n":3,"circuits":[[0,2]]}})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location() == "$.circuits.circuits[0][0]");
  }
  CHECK_THROWS_AS(parse_matroid("{"), ParseError);
  CHECK_THROWS_AS(parse_matroid(R"({"braid":{"n":4},"uniform":{"r":1,"n":2}})"), ParseError);
  CHECK_THROWS_AS(parse_matroid_spec("braid:x"), ParseError);
  CHECK_THROWS_AS(parse_symfunc(R"({"basis":"s","degree":3,"terms":[{"partition":[2],"coeff":"1"}]})"), ParseError);
}

TEST_CASE("table output") {
  std::string j = table_json(1, 3, 4, 0, 1);
  CHECK(j.find("\"cells\"") != std::string::npos);
  CHECK(table_latex(2, 3, 4, 0, 1).find("\\begin{tabular}") != std::string::npos);
  CHECK(table_cell(1, 4, 1) == Q(1) * SymFunc::schur({4}) + SymFunc::schur({3, 1}) + SymFunc::schur({2, 2}));
}

TEST_CASE("result cache") {
  auto dir = scratch_dir("cache");
  Cache cache(dir);
  auto key = Cache::key("{\"braid\":{\"n\":4}}", "hilbert", 8);
  CHECK(key != Cache::key("{\"braid\":{\"n\":4}}", "hilbert", 7));
  CHECK_FALSE(cache.get(key));
  cache.put(key, "1,6,11,6");
  REQUIRE(cache.get(key));
  CHECK(*cache.get(key) == "1,6,11,6");
  {
    std::ofstream corrupt(cache.path_for(key), std::ios::app);
    corrupt << "garbage";
  }
  CHECK_FALSE(cache.get(key));
  CHECK_FALSE(fs::exists(cache.path_for(key)));
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  fs::remove_all(dir);
}

TEST_CASE("run configuration") {
  auto dir = scratch_dir("config");
  auto path = dir / "cfg.json";
  {
    std::ofstream out(path);
    out << R"({"degree":6,"n_range":[3,5],"i_range":[0,2],"format":"json","jobs":2})";
  }
  auto cfg = load_config(path.string());
  CHECK(cfg.degree == 6);
  CHECK(cfg.n_lo == 3);
  CHECK(cfg.n_hi == 5);
  CHECK(cfg.format == "json");
  {
    std::ofstream out(path);
    out << R"({"degre":6})";
  }
  CHECK_THROWS_AS(load_config(path.string()), ParseError);
  ::setenv("KOSZUL_CACHE_DIR", dir.c_str(), 1);
  apply_env(cfg);
  CHECK(cfg.cache_dir == dir.string());
  ::unsetenv("KOSZUL_CACHE_DIR");
  fs::remove_all(dir);
}
