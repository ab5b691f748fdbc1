#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace lbranch;
using lbranch::tools::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Run run_nocache(std::vector<std::string> args)
{
  args.insert(args.begin(), "--no-cache");
  return run(std::move(args));
}

Json strip_manifest_timing(Json j)
{
  j["manifest"].erase("wall_time_ms");
  j["manifest"].erase("cache");
  return j;
}

struct TempDir {
  std::filesystem::path path;
  TempDir()
  {
    path = std::filesystem::temp_directory_path() /
           ("lbranch-test-" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

} // namespace

TEST_CASE("char", "[cli]")
{
  auto r = run_nocache({"char", "B2", "--weight", "0,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dimension 4") != std::string::npos);
  // title, header, 4 rows, summary
  CHECK(count_lines(r.out) == 7);

  r = run_nocache({"char", "A1", "--weight", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dimension 1") != std::string::npos);
  CHECK(count_lines(r.out) == 4);

  r = run_nocache({"char", "B2", "--weight", "1,1", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("dimension") == "16");
  CHECK(j.at("character").at("entries").size() == 12);
  CHECK(j.at("manifest").at("command") == "char");
  CHECK(j.at("manifest").at("version") == version);
  CHECK(j.at("manifest").at("parameters").at("weight") == Json::parse("[1,1]"));
}

TEST_CASE("tensor", "[cli]")
{
  auto r = run_nocache({"tensor", "B2", "0,1", "1,0", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("decomposition").at("coeffs") ==
        Json::parse(R"([{"weight":[1,1],"mult":"1"},{"weight":[0,1],"mult":"1"}])"));

  r = run_nocache({"tensor", "B2", "1,0", "0,0", "--format", "json"});
  CHECK(Json::parse(r.out).at("decomposition").at("coeffs") == Json::parse(R"([{"weight":[1,0],"mult":"1"}])"));

  r = run_nocache({"tensor", "A1", "1", "1", "--format", "json"});
  CHECK(Json::parse(r.out).at("decomposition").at("coeffs") ==
        Json::parse(R"([{"weight":[2],"mult":"1"},{"weight":[0],"mult":"1"}])"));

  r = run_nocache({"tensor", "A1", "1", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dimension 4") != std::string::npos);
}

TEST_CASE("branch", "[cli]")
{
  auto r = run_nocache({"branch", "B2", "--ell", "2", "--weight", "1,0", "--method", "all", "--format", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("m") == Json::parse(R"([{"mu":[1,0],"mult":"1"},{"mu":[0,0],"mult":"1"}])"));
  CHECK(j.at("routes_agree") == true);

  r = run_nocache({"branch", "A2", "--ell", "1", "--weight", "2,1", "--format", "json"});
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j.at("m") == Json::parse(R"([{"mu":[2,1],"mult":"1"}])"));
  CHECK(j.at("n") == Json::array());

  r = run_nocache({"branch", "B2", "--ell", "2", "--weight", "0,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("l_2 = 2 does not divide 1") != std::string::npos);

  r = run_nocache({"branch", "B2", "--weight", "1,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("routes agree yes") != std::string::npos);
}

TEST_CASE("verify", "[cli]")
{
  auto r = run_nocache({"verify", "B2", "--ell", "2", "--bound", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);

  r = run_nocache({"verify", "D4", "--ell", "1", "--bound", "3", "--format", "json", "--jobs", "4"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("ok") == true);
  CHECK(j.at("checks").at("branching").at("lambdas") == 256);

  r = run_nocache({"verify", "F4", "--ell", "2", "--bound", "1", "--jobs", "4"});
  CHECK(r.code == 0);
}

TEST_CASE("datum", "[cli]")
{
  auto r = run_nocache({"datum", "B2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("symmetrizers 2 1") != std::string::npos);
  CHECK(r.out.find("l 1 2") != std::string::npos);
  CHECK(r.out.find("positive roots 4") != std::string::npos);

  r = run_nocache({"datum", "G2", "--format", "json"});
  const Json j = Json::parse(r.out);
  CHECK(j.at("l") == Json::parse("[3,1]"));
  CHECK(j.at("root_scaling").size() == 6);
  CHECK(j.at("dual").at("matrix") == Json::parse("[[2,-1],[-3,2]]"));
}

TEST_CASE("usage errors exit with 2", "[cli]")
{
  CHECK(run_nocache({}).code == 2);
  CHECK(run_nocache({"frobnicate"}).code == 2);
  CHECK(run_nocache({"char", "B2"}).code == 2);
  CHECK(run_nocache({"char", "B9x", "--weight", "1"}).code == 2);
  CHECK(run_nocache({"char", "B2", "--weight", "1,x"}).code == 2);
  CHECK(run_nocache({"char", "B2", "--weight", "1,0,0"}).code == 2);
  CHECK(run_nocache({"char", "B2", "--weight", "1,0", "--format", "xml"}).code == 2);
  CHECK(run_nocache({"branch", "B2", "--ell", "3", "--weight", "1,0"}).code == 2);
  CHECK(run_nocache({"datum", "/nonexistent/cartan.json"}).code == 2);
  CHECK(run_nocache({"--help"}).code == 0);
}

TEST_CASE("Cartan data from a JSON file", "[cli]")
{
  TempDir dir;
  const auto file = dir.path / "g2.json";
  std::ofstream(file) << R"({"matrix":[[2,-1],[-3,2]]})";
  auto r = run_nocache({"char", file.string(), "--weight", "1,0", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("dimension") == "14");
}

TEST_CASE("json output is deterministic", "[cli]")
{
  const std::vector<std::string> args{"branch", "C3", "--weight", "2,2,1", "--format", "json"};
  const auto a = run_nocache(args), b = run_nocache(args);
  CHECK(strip_manifest_timing(Json::parse(a.out)).dump() == strip_manifest_timing(Json::parse(b.out)).dump());
}

TEST_CASE("cache is transparent and self-healing", "[cli]")
{
  TempDir dir;
  const std::vector<std::string> args{"--cache-dir", dir.path.string(), "char", "F4", "--weight", "1,0,0,1",
                                      "--format", "json"};
  const auto cold = run(args);
  REQUIRE(cold.code == 0);
  const Json cold_j = Json::parse(cold.out);
  CHECK(cold_j.at("manifest").at("cache").at("misses") == 1);
  CHECK(cold_j.at("manifest").at("cache").at("hits") == 0);

  const auto warm = run(args);
  const Json warm_j = Json::parse(warm.out);
  CHECK(warm_j.at("manifest").at("cache").at("hits") == 1);
  CHECK(strip_manifest_timing(warm_j) == strip_manifest_timing(cold_j));

  // Corrupt every cached entry: change one multiplicity, keeping valid JSON.
  for (const auto& e : std::filesystem::directory_iterator(dir.path)) {
    std::ifstream in(e.path());
    Json doc = Json::parse(in);
    in.close();
    auto& entries = doc["character"]["entries"];
    entries.back()["mult"] = "7";
    std::ofstream(e.path()) << doc.dump();
  }
  const auto healed = run(args);
  const Json healed_j = Json::parse(healed.out);
  CHECK(healed_j.at("manifest").at("cache").at("hits") == 0);
  CHECK(strip_manifest_timing(healed_j) == strip_manifest_timing(cold_j));

  for (const auto& e : std::filesystem::directory_iterator(dir.path))
    std::ofstream(e.path()) << "{ not json";
  const auto garbage = run(args);
  CHECK(garbage.code == 0);
  CHECK(strip_manifest_timing(Json::parse(garbage.out)) == strip_manifest_timing(cold_j));

  const auto again = run(args);
  CHECK(Json::parse(again.out).at("manifest").at("cache").at("hits") == 1);

  for (const auto& e : std::filesystem::directory_iterator(dir.path))
    CHECK(e.path().extension() == ".json");
}

TEST_CASE("cache directory from the environment", "[cli]")
{
  TempDir dir;
  setenv("LBRANCH_CACHE_DIR", dir.path.c_str(), 1);
  CHECK(tools::default_cache_dir() == dir.path);
  const auto r = run({"char", "B3", "--weight", "1,1,1"});
  CHECK(r.code == 0);
  unsetenv("LBRANCH_CACHE_DIR");
  CHECK(std::distance(std::filesystem::directory_iterator(dir.path), std::filesystem::directory_iterator()) > 0);
}
