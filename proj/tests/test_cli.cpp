#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "especial/cli.hpp"
#include "especial/json_io.hpp"

using namespace especial;

namespace {

const std::string kData = ESPECIAL_TEST_DATA;
const std::string kCli = ESPECIAL_CLI_PATH;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs a shell pipeline against the built binary; returns exit status and stdout.
std::pair<int, std::string> shell(const std::string& command) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// "tag id" lines for every element carrying an id, in document order.
std::string svg_structure(const std::string& svg) {
  static const std::regex element(R"re(<(\w+) id="([^"]+)")re");
  std::string out;
  for (std::sregex_iterator it(svg.begin(), svg.end(), element), end; it != end; ++it) {
    out += (*it)[1].str() + " " + (*it)[2].str() + "\n";
  }
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "especial-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("disc on the grid fixture") {
  const Outcome o = run_cli({"disc", kData + "/grid2.json"});
  CHECK(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["interior"].size() == 4);
  CHECK(j["boundary"].empty());
  CHECK(run_cli({"disc", kData + "/grid2.json"}).out == o.out);
  CHECK(run_cli({"disc", kData + "/grid2.json", "--threads", "3"}).out == o.out);
}

TEST_CASE("straighten queries") {
  Outcome o = run_cli({"straighten", kData + "/grid2.json", "--point", "-13/17,10/17"});
  CHECK(o.code == 0);
  CHECK(Json::parse(o.out) == Json::parse(R"({"result":"MappedTo","plus":0,"minus":0})"));
  o = run_cli({"straighten", kData + "/grid2.json", "--point", "0,0"});
  CHECK(Json::parse(o.out)["result"] == "NotInDomain");
  o = run_cli({"straighten", kData + "/touching.json", "--point", "0,1"});
  CHECK(Json::parse(o.out) == Json::parse(R"({"result":"OnBoundary","point":"1"})"));
  o = run_cli({"straighten", kData + "/grid2.json", "--point", "1,1"});
  CHECK(o.code == 1);
  CHECK(Json::parse(o.out)["error"] == "OutsideDisc");
  o = run_cli({"straighten", kData + "/grid2.json", "--point", "half"});
  CHECK(o.code == 2);
}

TEST_CASE("validate reports") {
  Outcome o = run_cli({"validate", kData + "/grid2.json"});
  CHECK(o.code == 0);
  Json j = Json::parse(o.out);
  CHECK(j["valid"] == true);
  CHECK(j["nesting"]["defect"] == 8);

  o = run_cli({"validate", kData + "/bad.json"});
  CHECK(o.code == 1);
  j = Json::parse(o.out);
  CHECK(j["valid"] == false);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["kind"] == "WithinFamilyLinked");

  o = run_cli({"validate", kData + "/malformed.json"});
  CHECK(o.code == 2);
  j = Json::parse(o.out);
  CHECK(j["error"] == "MalformedJson");
  CHECK(j["position"] == 54);

  o = run_cli({"validate", kData + "/wrong_type.json"});
  CHECK(o.code == 2);
  CHECK(Json::parse(o.out)["path"] == "/plus/1/0");

  CHECK(run_cli({"validate", kData + "/missing.json"}).code == 2);
}

TEST_CASE("classify table") {
  const Outcome o = run_cli({"classify", kData + "/touching.json"});
  CHECK(o.code == 0);
  CHECK(Json::parse(o.out) == Json::parse(R"({"pairs":[{"plus":0,"minus":0,"class":"IntersectingAt","point":"1"}]})"));
}

TEST_CASE("equivariance exit codes") {
  Outcome o = run_cli({"equivariance", kData + "/symmetric.json", "--map", kData + "/half_turn.json"});
  CHECK(o.code == 0);
  CHECK(Json::parse(o.out)["passed"] == true);
  o = run_cli({"equivariance", kData + "/grid2.json", "--map", kData + "/half_turn.json"});
  CHECK(o.code == 1);
  CHECK(Json::parse(o.out)["not_invariant"]["element"] == 0);
  o = run_cli({"equivariance", kData + "/grid2.json", "--map", kData + "/reversing.json"});
  CHECK(o.code == 1);
  CHECK(Json::parse(o.out)["error"] == "InvalidMap");
}

TEST_CASE("gen output and usage errors") {
  Outcome o = run_cli({"gen", "--kind", "grid", "--n", "2"});
  CHECK(o.code == 0);
  CHECK(Json::parse(o.out) == Json::parse(R"({"plus":[["0","3"],["4","7"]],"minus":[["2","5"],["1","6"]]})"));
  CHECK(run_cli({"gen", "--kind", "spiral"}).code == 2);
  CHECK(run_cli({"gen", "--kind", "grid", "--n", "0"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);

  const auto map_path = scratch("sym-map.json");
  o = run_cli({"gen", "--kind", "symmetric", "--map-out", map_path.string()});
  CHECK(o.code == 0);
  CHECK(Json::parse(read_file(map_path.string())) == Json::parse(R"({"m":[["0","-1"],["1","0"]]})"));
}

TEST_CASE("gen piped into validate always succeeds") {
  for (const std::string kind : {"grid", "star", "tripod", "nested", "symmetric", "figure", "random"}) {
    for (int n : {3, 5}) {
      const auto [code, out] = shell("'" + kCli + "' gen --kind " + kind + " --n " + std::to_string(n) +
                                     " --seed 7 | '" + kCli + "' validate - > /dev/null; echo $?");
      CHECK(code == 0);
      CHECK(out == "0\n");
    }
  }
}

TEST_CASE("render writes both figures with stable structure") {
  for (const std::string name : {"grid2", "tripod"}) {
    const auto prefix = scratch(name).string();
    const Outcome o = run_cli({"render", kData + "/" + name + ".json", "--out", prefix});
    REQUIRE(o.code == 0);
    const std::string input = read_file(prefix + "-input.svg");
    const std::string straight = read_file(prefix + "-straightened.svg");
    CHECK(input.rfind("<?xml", 0) == 0);
    CHECK(svg_structure(input) == read_file(kData + "/" + name + "-input.structure"));
    CHECK(svg_structure(straight) == read_file(kData + "/" + name + "-straightened.structure"));
    CHECK_FALSE(std::filesystem::exists(prefix + "-input.svg.tmp"));
  }
}

TEST_CASE("render coordinates are 12-digit decimals") {
  const auto prefix = scratch("grid2-digits").string();
  REQUIRE(run_cli({"render", kData + "/grid2.json", "--out", prefix, "--no-labels"}).code == 0);
  const std::string svg = read_file(prefix + "-straightened.svg");
  // Crossing (-13/17, 10/17) at radius 360 around (400, 400).
  CHECK(svg.find("cx=\"124.705882353\" cy=\"188.235294118\"") != std::string::npos);
}
