#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tfg/cli.hpp"

using tfg::io::Json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int exit;
  std::string out;
};

Result run(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> args;
  for (std::string a; is >> a;) args.push_back(a);
  std::ostringstream os;
  const int code = tfg::cli::run(args, os);
  return {code, os.str()};
}

Json run_json(const std::string& line) { return Json::parse(run(line).out); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Inputs are addressed relative to the golden inputs directory.
struct InInputs {
  fs::path saved = fs::current_path();
  InInputs() { fs::current_path(fs::path(TFG_GOLDEN_DIR) / "inputs"); }
  ~InInputs() { fs::current_path(saved); }
};

}  // namespace

TEST_CASE("golden files") {
  const Json expected = Json::parse(slurp(fs::path(TFG_GOLDEN_DIR) / "expected.json"));
  std::ifstream cases(fs::path(TFG_GOLDEN_DIR) / "cases.txt");
  InInputs here;
  std::size_t count = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty()) continue;
    const auto bar = line.find('|');
    const std::string name = line.substr(0, bar);
    CAPTURE(name);
    REQUIRE(expected.contains(name));
    Result r = run(line.substr(bar + 1));
    CHECK(r.exit == expected[name]["exit"].get<int>());
    CHECK(r.out == expected[name]["stdout"].get<std::string>());
    ++count;
  }
  CHECK(count == expected.size());
}

TEST_CASE("documented examples") {
  InInputs here;
  CHECK(run_json("homology thompson --n 5 --m 3") == Json::parse(R"({"exists": true})"));
  CHECK(run_json("metrics complexity --graph golden_mean.json --max-n 3") == Json::parse(R"({"p": [3, 5, 8]})"));

  Json id = run_json("table compose --graph omega2.json --in flip.json --in flip.json");
  REQUIRE(id["pairs"].size() == 1);
  CHECK(id["pairs"][0]["v"]["edges"].empty());
  CHECK(id["pairs"][0]["w"]["edges"].empty());

  Json t10 = run_json("sigma transport --in shrink.json --path p10.json");
  REQUIRE(t10["pairs"].size() == 1);
  CHECK(t10["pairs"][0]["v"]["edges"] == Json::parse(R"(["0"])"));
  CHECK(t10["pairs"][0]["w"]["edges"] == Json::parse(R"(["0", "1", "0"])"));

  CHECK(run_json("homology group --graph omega3.json") == Json::parse(R"({"rank": 0, "torsion": [2]})"));
  CHECK(run_json("homology group --graph golden_mean.json")["torsion"].empty());
  CHECK(run_json("metrics ball --kind orbital --graph omega2.json --point zero.json --radius 2")["size"] == 4);
  CHECK(run_json("zfull compose --subshift full2.json --in swap.json --in swap.json") ==
        Json::parse(R"({"pieces": [{"k": 0, "offset": 0, "window": ""}]})"));
  CHECK(run_json("zfull factor-check --source full2.json --target golden_mean_shift.json --in ones.json")
            ["images_admissible"] == false);
}

TEST_CASE("exit codes") {
  InInputs here;
  Result usage = run("table frobnicate");
  CHECK(usage.exit == 1);
  CHECK(Json::parse(usage.out)["error"] == "UsageError");
  Result io = run("graph validate --in missing.json");
  CHECK(io.exit == 1);
  CHECK(Json::parse(io.out)["error"] == "IoError");
  Result invalid = run("zfull validate --subshift full2.json --in not_bijective.json");
  CHECK(invalid.exit == 2);
  CHECK(Json::parse(invalid.out)["error"] == "NotBijective");
  CHECK(Json::parse(invalid.out).contains("detail"));
  Result parse = run("graph validate --in ../cases.txt");
  CHECK(parse.exit == 1);
}

TEST_CASE("output file") {
  InInputs here;
  const fs::path out = fs::temp_directory_path() / "tfgkit_cli_test_out.json";
  fs::remove(out);
  Result r = run("homology thompson --n 7 --m 4 --out " + out.string());
  CHECK(r.exit == 0);
  CHECK(r.out.empty());
  CHECK(Json::parse(slurp(out)) == Json::parse(R"({"exists": true})"));
  fs::remove(out);
}

TEST_CASE("batch") {
  InInputs here;
  Json three = run_json("batch --in thompson3.json");
  REQUIRE(three["results"].size() == 3);
  CHECK(three["results"][0]["output"]["exists"] == true);
  CHECK(three["results"][1]["output"]["exists"] == false);
  CHECK(three["results"][2]["output"]["exists"] == true);

  Json mixed = run_json("batch --in malformed.json");
  REQUIRE(mixed["results"].size() == 3);
  CHECK(mixed["results"][0]["exit"] == 0);
  CHECK(mixed["results"][1]["error"] == "MalformedRequest");
  CHECK(mixed["results"][2]["exit"] == 0);

  CHECK(run_json("batch --in empty_manifest.json")["results"].empty());

  Json nested = tfg::cli::run_batch(Json::parse(R"({"requests": [{"argv": ["batch", "--in", "thompson3.json"]}]})"), true);
  CHECK(nested["results"][0]["error"] == "MalformedRequest");
}

TEST_CASE("parallel and serial batches agree byte for byte") {
  InInputs here;
  // Every golden case except the batches themselves, twice over.
  std::ifstream cases(fs::path(TFG_GOLDEN_DIR) / "cases.txt");
  Json requests = Json::array();
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line.find("|batch") != std::string::npos) continue;
    std::istringstream is(line.substr(line.find('|') + 1));
    Json argv = Json::array();
    for (std::string a; is >> a;) argv.push_back(a);
    requests.push_back({{"argv", argv}});
  }
  Json doubled = requests;
  for (const auto& r : requests) doubled.push_back(r);
  Json manifest = {{"requests", doubled}};
  const std::string par = tfg::cli::run_batch(manifest, false).dump(2);
  const std::string ser = tfg::cli::run_batch(manifest, true).dump(2);
  CHECK(par == ser);
  CHECK(par == tfg::cli::run_batch(manifest, false).dump(2));
}
