#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "multitree/json_io.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + MULTITREE_CLI_PATH +
                    " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
    out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

const std::string kStarJson =
    R"({"n": 4, "edges": [[0, 1, 2], [0, 2, 1], [0, 3, 1]]})";
const std::string kPathJson =
    R"({"n": 4, "edges": [[0, 1, 1], [1, 2, 1], [2, 3, 1]]})";

}  // namespace

TEST_CASE("energy subcommand: eigen, coulson, closed") {
  auto star = temp_file("mt_star.json", kStarJson);
  auto r = run_cli("energy --in " + star.string() + " --method eigen");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["energy"].get<double>() ==
        doctest::Approx(2.0 * std::sqrt(6.0)).epsilon(1e-10));
  CHECK(j["eigenvalues"].size() == 4);

  auto rc = run_cli("energy --in " + star.string() + " --method coulson");
  CHECK(rc.exit_code == 0);
  CHECK(std::abs(Json::parse(rc.out)["energy"].get<double>() -
                 2.0 * std::sqrt(6.0)) <= 1e-4);

  auto rcl = run_cli("energy --method closed:balanced-star --n 5 --m 7");
  CHECK(rcl.exit_code == 0);
  CHECK(Json::parse(rcl.out)["energy"].get<double>() ==
        doctest::Approx(2.0 * std::sqrt(13.0)));
}

TEST_CASE("coeffs subcommand emits decimal strings") {
  auto p4 = temp_file("mt_p4w.json",
                      R"({"n": 4, "edges": [[0,1,2],[1,2,1],[2,3,2]]})");
  auto r = run_cli("coeffs --in " + p4.string());
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["b"] == Json::array({"1", "9", "16"}));

  // the independent matching-enumeration route is exposed too
  auto oracle = run_cli("coeffs --in " + p4.string() + " --method oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(Json::parse(oracle.out) == j);
}

TEST_CASE("compare subcommand") {
  auto star = temp_file("mt_star_unit.json",
                        R"({"n": 4, "edges": [[0,1,1],[0,2,1],[0,3,1]]})");
  auto path = temp_file("mt_path_unit.json", kPathJson);
  auto r = run_cli("compare " + star.string() + " " + path.string());
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["relation"] == "strictly-less");
  CHECK(j["witness"] == 2);
  CHECK(j["b1"] == Json::array({"1", "3", "0"}));
  CHECK(j["b2"] == Json::array({"1", "3", "1"}));
}

TEST_CASE("enumerate subcommand lists graphs line by line") {
  auto r = run_cli("enumerate --class T --n 4 --m 4");
  CHECK(r.exit_code == 0);
  int lines = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    Json g = Json::parse(line);
    CHECK(g["n"] == 4);
    ++lines;
  }
  CHECK(lines == 3);

  auto rc = run_cli("enumerate --class T --n 4 --m 4 --count-only");
  Json j = Json::parse(rc.out);
  CHECK(j["count"] == 3);
}

TEST_CASE("search subcommand with CSV export") {
  auto csv = std::filesystem::temp_directory_path() / "mt_class.csv";
  std::filesystem::remove(csv);
  auto r = run_cli("search --class T --n 5 --m 7 --direction min --csv " +
                   csv.string());
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["unique"] == true);
  CHECK(j["argset"].size() == 1);
  CHECK(std::abs(j["value"].get<double>() - 2.0 * std::sqrt(13.0)) <= 1e-9);

  std::ifstream in(csv);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "canonical_code,n,m,energy,b0,b1,b2");
  int rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == j["class_size"].get<int>());
}

TEST_CASE("verify subcommand exit codes") {
  auto pass = run_cli("verify --theorem thm2.3 --n 5 --m 7");
  CHECK(pass.exit_code == 0);
  Json j = Json::parse(pass.out);
  CHECK(j["pass"] == true);
  CHECK(j["observed"]["unique"] == true);

  CHECK(run_cli("verify --theorem nosuch --n 5 --m 7").exit_code == 2);
  CHECK(run_cli("verify --theorem thm2.3 --n 5 --m 2").exit_code == 2);
}

TEST_CASE("conjecture subcommand writes the evidence file") {
  auto out = std::filesystem::temp_directory_path() / "mt_evidence.json";
  std::filesystem::remove(out);
  auto r = run_cli("conjecture --n 5 --m 7 --out " + out.string());
  Json j = Json::parse(r.out);
  CHECK(j["energy_cross_ok"] == true);
  // exit code mirrors the consistency flags
  bool consistent = j["supports_conjecture"].get<bool>() &&
                    j["energy_cross_ok"].get<bool>();
  CHECK(r.exit_code == (consistent ? 0 : 1));
  REQUIRE(std::filesystem::exists(out));
  std::ifstream in(out);
  Json from_file;
  in >> from_file;
  CHECK(from_file == j);

  auto csv = std::filesystem::temp_directory_path() / "mt_conj.csv";
  std::filesystem::remove(csv);
  run_cli("conjecture --n 5 --m 7 --csv " + csv.string());
  std::ifstream csv_in(csv);
  REQUIRE(csv_in.good());
  std::string header;
  std::getline(csv_in, header);
  CHECK(header == "canonical_code,n,m,energy,b0,b1,b2");
}

TEST_CASE("budget refusal and usage errors") {
  CHECK(run_cli("search --class T --n 6 --m 9 --direction min --budget 10")
            .exit_code == 3);
  CHECK(run_cli("energy --no-such-flag").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("enumerate --class X --n 4 --m 4").exit_code == 2);
}

TEST_CASE("MULTITREE_BUDGET env variable caps the enumeration") {
  auto r = run_cli("search --class T --n 6 --m 9 --direction min",
                   "MULTITREE_BUDGET=10");
  CHECK(r.exit_code == 3);
  // an explicit flag overrides the environment
  auto ok = run_cli("search --class T --n 6 --m 9 --direction min --budget 1000",
                    "MULTITREE_BUDGET=10");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("graph JSON round-trips through the library types") {
  Json g = Json::parse(kStarJson);
  auto f = multitree::forest_from_json(g);
  CHECK(multitree::forest_to_json(f)["n"] == 4);
  CHECK(multitree::forest_from_json(multitree::forest_to_json(f)) == f);
  CHECK_THROWS_AS(multitree::forest_from_json(Json::parse(R"({"n": 2})")),
                  multitree::ParameterError);
}

TEST_CASE("incomparable graphs report both witnesses") {
  auto heavy = temp_file("mt_heavy_star.json",
                         R"({"n": 4, "edges": [[0,1,2],[0,2,1]]})");
  auto path = temp_file("mt_path4.json", kPathJson);
  auto r = run_cli("compare " + heavy.string() + " " + path.string());
  Json j = Json::parse(r.out);
  CHECK(j["relation"] == "incomparable");
  CHECK(j["witness_greater"] == 1);
  CHECK(j["witness_less"] == 2);
}

TEST_CASE("stdin input and byte-identical reruns") {
  auto star = temp_file("mt_star2.json", kStarJson);
  auto r = run_cli("coeffs --in - < " + star.string());
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out)["b"] == Json::array({"1", "6", "0"}));

  auto a = run_cli("search --class F --n 5 --m 6 --direction max");
  auto b = run_cli("search --class F --n 5 --m 6 --direction max");
  CHECK(a.out == b.out);
}
