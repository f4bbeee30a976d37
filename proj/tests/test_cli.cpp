#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "k3cover/cli.hpp"

using k3cover::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args, const k3cover::VerifyOptions& opts = {}) {
  std::ostringstream out, err;
  const int code = run(args, out, err, opts);
  return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = call(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("k3cover_test_" + name);
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("lattice-info reports the discriminant group") {
  const Json j = call_json({"lattice-info", "L_9_2"});
  CHECK(j["det"] == 128);
  CHECK(j["discriminant_group"]["elementary_divisors"] == Json(std::vector<int>(7, 2)));
  CHECK(j["rank"] == 9);
  CHECK(j["even"] == true);
  CHECK(j["two_elementary"]["a"] == 7);
}

TEST_CASE("classify emits a general type report") {
  const Json j = call_json({"classify", "--genera", "2,0,0,0,0,0"});
  CHECK(j["admissible"] == true);
  CHECK(j["case"] == "GeneralType");
  CHECK(j["Xmin"]["c1sq"] == 1);
  CHECK(j["Xmin"]["c2"] == 35);
  const Json bad = call_json({"classify", "--genera", "0,0,0,0,0,0,0,0,0,0,0,0"});
  CHECK(bad["admissible"] == false);
  CHECK(bad["reason"] == "genus-zero-count");
}

TEST_CASE("exit codes") {
  CHECK(call({"lattice-info", "NO_SUCH"}).code == 3);
  CHECK(call({"classify", "--genera", "2,x"}).code == 3);
  CHECK(call({"classify", "--genera", "2", "--nope"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"lattice-info"}).code == 2);
  CHECK(call({"lattice-info", "L_6_1", "--format", "yaml"}).code == 2);
  CHECK(call({"lattice-info", "--file", temp_path("missing.json").string()}).code == 3);
  CHECK(call({"existence", "--n", "5", "--h", "0"}).code == 3);
  CHECK(call({"derive-candidates", "--n", "40"}).code == 3);
  const Result usage = call({"--nope"});
  CHECK(usage.code == 2);
  CHECK(usage.err.find("Usage") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output is deterministic in every format") {
  for (const char* fmt : {"text", "json", "csv"}) {
    const std::vector<std::string> args{"lattice-info", "M_2e3", "--format", fmt};
    const Result a = call(args), b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("lattice-build glues and round-trips through a file") {
  const Json j = call_json({"lattice-build", "--id", "A1:8", "--glue", "1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2"});
  CHECK(j["index"] == 2);
  CHECK(j["det"] == 64);
  const auto path = temp_path("m8.json");
  std::ofstream(path) << j.dump();
  const Json back = call_json({"lattice-info", "--file", path.string()});
  CHECK(back["det"] == 64);
  CHECK(back["length"] == 6);
  std::filesystem::remove(path);
  CHECK(call({"lattice-build", "--id", "A1:2", "--glue", "1/2,1/2"}).code == 3);
  CHECK(call({"lattice-build", "--id", "A1:2", "--glue", "1/2"}).code == 3);
}

TEST_CASE("candidate lists") {
  const Json ns = call_json({"ns-candidates", "--n", "13"});
  CHECK(ns["entries"].size() == 2);
  CHECK(ns["entries"][0]["id"] == "L_13_2");
  const Json d = call_json({"derive-candidates", "--n", "9"});
  CHECK(d["matches_closed_list"] == true);
  CHECK(call_json({"ns-candidates", "--n", "17"})["entries"].empty());
}

TEST_CASE("even-sets") {
  const Json k = call_json({"even-sets", "--code", "K"});
  CHECK(k["valid"] == true);
  CHECK(k["dimension"] == 5);
  CHECK(k["weight_distribution"]["8"] == 30);
  const Json opts = call_json({"even-sets", "--m", "12"});
  CHECK(opts["options"].size() == 2);
  const Json alt = call_json({"even-sets", "--alternative", "L_12_1"});
  CHECK_FALSE(alt["even_sets"].empty());
  const auto path = temp_path("bad_code.json");
  std::ofstream(path) << R"({"m": 8, "generators": [[1,1,1,1,0,0,0,0]]})";
  const Json bad = call_json({"even-sets", "--file", path.string()});
  CHECK(bad["valid"] == false);
  std::ofstream(path) << "{not json";
  CHECK(call({"even-sets", "--file", path.string()}).code == 3);
  std::filesystem::remove(path);
  CHECK(call({"even-sets"}).code == 2);
  CHECK(call({"even-sets", "--code", "K", "--m", "3"}).code == 2);
}

TEST_CASE("existence") {
  CHECK(call_json({"existence", "--n", "17", "--h", "1"})["exists"] == false);
  const Json j = call_json({"existence", "--n", "16", "--h", "-3"});
  CHECK(j["exists"] == true);
  CHECK(j["d"] == 3);
}

TEST_CASE("--out writes the report instead of standard output") {
  const auto path = temp_path("out.txt");
  const Result r = call({"classify", "--genera", "1,1,0,0,0,0,0,0,0,0", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str().find("GenusOne") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("verify-paper passes with three warnings and fails on a tampered lattice") {
  const Result ok = call({"verify-paper", "--format", "json"});
  CHECK(ok.code == 0);
  const Json j = Json::parse(ok.out);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["warnings"].size() == 3);

  k3cover::VerifyOptions tamper;
  tamper.lattice_hook = [](const k3cover::Lattice& l, const k3cover::LnId& id) {
    if (id.n != 9 || id.r != 2) return l;
    k3cover::IntMatrix g = l.gram();
    g(0, 0) -= 2;
    return k3cover::from_gram(g);
  };
  const Result bad = call({"verify-paper", "--format", "csv"}, tamper);
  CHECK(bad.code == 1);
  CHECK(bad.out.find(",FAIL,") != std::string::npos);
  CHECK(count_lines(bad.out) == j["checks"].size() + 1);
}
