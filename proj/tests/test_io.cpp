#include <doctest.h>

#include "commands.hpp"
#include "stringhom/io.hpp"
#include "stringhom/stringops.hpp"

#include <json.hpp>

#include <filesystem>
#include <sstream>

using namespace stringhom;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = STRINGHOM_DATA_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "stringhom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("stringhom-test-" + name);
  fs::remove_all(p);
  return p;
}

const char* minimal_s2 = R"({"name": "S2", "dimension": 2,
  "basis": [{"label": "1", "degree": 0}, {"label": "x", "degree": 2}],
  "product": [{"i": 0, "j": 0, "terms": [{"coeff": "2/2", "k": 0}]},
              {"i": 0, "j": 1, "terms": [{"coeff": "1", "k": 1}]},
              {"i": 1, "j": 0, "terms": [{"coeff": "1/1", "k": 1}]}],
  "pairing": [{"i": 0, "j": 1, "value": "2/4"}, {"i": 1, "j": 0, "value": "1/2"}]})";

}  // namespace

TEST_CASE("shipped s2.json is the sphere datum") {
  auto spec = load_algebra(data_dir + "/s2.json");
  CHECK(validate_frobenius(spec).ok());
  CHECK(same_structure(unit_first(spec), builtin_space("s2").spec));
}

TEST_CASE("fractions are canonicalized") {
  auto spec = parse_algebra(minimal_s2);
  CHECK(spec.pair(0, 1) == Rational(1, 2));
  CHECK(to_fraction_string(spec.pair(0, 1)) == "1/2");
  CHECK(spec.c(0, 0, 0) == 1);
  CHECK(validate_frobenius(spec).ok());
}

TEST_CASE("serialization round trips") {
  for (auto name : {"s2", "cp2", "s3xs3"}) {
    auto spec = builtin_space(name).spec;
    std::string text = serialize_algebra(spec);
    auto back = parse_algebra(text);
    CHECK(same_structure(back, spec));
    CHECK(serialize_algebra(back) == text);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_algebra("{\n  \"name\": \"x\",\n  oops\n}", "bad.json");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("bad.json:3:") == 0);
  }
  CHECK_THROWS_WITH_AS(parse_algebra(R"({"name": "x", "dimension": 2, "basis": [], "product": []})"),
                       doctest::Contains("missing field 'pairing'"), ParseError);
  CHECK_THROWS_WITH_AS(parse_algebra(R"({"name": "x", "dimension": 2, "basis": [{"label": "1", "degree": 0}],
      "product": [{"i": 0, "j": 3, "terms": []}], "pairing": []})"),
                       doctest::Contains("product[0]"), ParseError);
  CHECK_THROWS_WITH_AS(parse_algebra(R"({"name": "x", "dimension": 0, "basis": [{"label": "1", "degree": 0}],
      "product": [], "pairing": [{"i": 0, "j": 0, "value": "1/0"}]})"),
                       doctest::Contains("pairing[0]"), ParseError);
}

TEST_CASE("bad pairing file is rejected naming the elements") {
  auto spec = load_algebra(data_dir + "/bad_pairing.json");
  auto rep = validate_frobenius(spec);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.to_string().find("<a,ab>") != std::string::npos);
}

TEST_CASE("result cache stores and returns entries") {
  ResultCache c(scratch_dir("cache"));
  CacheKey k{"00ff", ComplexId::CYCLIC, 5, 7, 0};
  CHECK_FALSE(c.get(k));
  CachedRank r{2, 9, {{{0, Rational(1, 3)}, {4, Rational(-2)}}}};
  c.put(k, r);
  auto got = c.get(k);
  REQUIRE(got);
  CHECK(*got == r);
  auto keys = c.keys();
  REQUIRE(keys.size() == 1);
  CHECK(keys[0].file_name() == k.file_name());
  CHECK(content_hash("abc") == content_hash("abc"));
  CHECK(content_hash("abc") != content_hash("abd"));
}

TEST_CASE("cli: check") {
  CHECK(invoke({"check", data_dir + "/s3xs3.json"}).code == 0);
  Run bad = invoke({"check", data_dir + "/bad_pairing.json"});
  CHECK(bad.code == cli::VALIDATION);
  CHECK(bad.err.find("<a,ab>") != std::string::npos);
  CHECK(invoke({"check", "/nonexistent.json"}).code == cli::VALIDATION);
}

TEST_CASE("cli: string bracket reproduces sl2") {
  Run r = invoke({"string-bracket", "--space", "builtin:s3xs3", "--degree", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3 classes, nonabelian") != std::string::npos);
  CHECK(r.out.find("sl2 basis") != std::string::npos);
  Run j = invoke({"string-bracket", "--space", "builtin:s3xs3", "--string-degree", "4", "--format", "json"});
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["classes"].size() == 3);
  CHECK(doc["nonabelian"] == true);
  CHECK(doc.contains("sl2"));
}

TEST_CASE("cli: json output is deterministic and round trips") {
  std::vector<std::string> args = {"hh", "--space", "builtin:s2", "--max-degree", "8", "--format", "json"};
  Run a = invoke(args), b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["rows"].size() == 9);
  for (const auto& row : doc["rows"]) {
    int n = row["degree"];
    CHECK(row["rank"] == (n <= 2 ? 1 : 0));
  }
  CHECK(nlohmann::json::parse(doc.dump()) == doc);
}

TEST_CASE("cli: truncation needs --force") {
  std::vector<std::string> args = {"hh", "--space", "builtin:s3xs3", "--min-degree", "-3", "--max-degree", "0",
                                   "--weight-cap", "2"};
  Run r = invoke(args);
  CHECK(r.code == cli::TRUNCATED);
  CHECK(r.err.find("needs --weight-cap") != std::string::npos);
  args.push_back("--force");
  Run f = invoke(args);
  CHECK(f.code == 0);
  CHECK(f.out.find("false") != std::string::npos);
}

TEST_CASE("cli: usage errors") {
  CHECK(invoke({}).code != 0);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"hh", "--space", "builtin:s2", "--bogus"}).code == 1);
  CHECK(invoke({"hh"}).code == 1);
  CHECK(invoke({"hh", "--space", "builtin:torus"}).code == 1);
}

TEST_CASE("cli: cache hits equal recomputation") {
  fs::path dir = scratch_dir("cli-cache");
  std::vector<std::string> args = {"hc", "--space", "builtin:cp2", "--max-degree", "6", "--format", "json",
                                   "--cache-dir", dir.string()};
  Run a = invoke(args);
  CHECK(a.code == 0);
  CHECK_FALSE(fs::is_empty(dir));
  args.push_back("--verify-cache");
  Run b = invoke(args);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli: remaining commands run") {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"hh", "--space", "builtin:s3", "--coefficients", "vdual", "--min-degree", "-4", "--max-degree", "0"},
           {"hc-minus", "--space", "builtin:s2", "--max-degree", "4"},
           {"loop-homology", "--space", "builtin:cp2"},
           {"loop-product", "--space", "builtin:s2", "--left", "2", "--right", "1"},
           {"loop-bracket", "--space", "builtin:s3", "--left", "3", "--right", "2"},
           {"string-homology", "--space", "builtin:s3"},
           {"oracle", "--space", "builtin:s2", "--min-degree", "-3", "--max-degree", "2"},
           {"check", "--space", data_dir + "/s2.json"}}) {
    CAPTURE(cmd[0]);
    Run r = invoke(cmd);
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
  }
}
