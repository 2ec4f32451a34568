#include <catch2/catch_amalgamated.hpp>

#include "cache.hpp"
#include "cli.hpp"

#include <verlinde/json_io.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace verlinde;
using verlinde::cli::ExitCode;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("verlinde-lab-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("blocks census") {
  const auto r = run({"--p", "3", "--N", "5", "--n", "2", "blocks"});
  REQUIRE(r.code == ExitCode::ok);
  const auto j = r.json();
  CHECK(j["schema"] == "verlinde-lab/blocks/v1");
  CHECK(j["params"]["ell"] == 5);
  CHECK(j["result"]["blocks"] == 6);
  CHECK(j["result"]["sizes"] == Json{{"1", 2}, {"2", 4}});
}

TEST_CASE("tl-check") {
  const auto r = run({"--p", "3", "--N", "4", "tl-check"});
  REQUIRE(r.code == ExitCode::ok);
  const auto j = r.json();
  CHECK(j["result"]["identity"] == "beta2-E");
  CHECK(j["result"]["holds"] == true);
  CHECK(j["result"]["control_holds"] == false);
  CHECK(run({"--p", "3", "--N", "4", "--zeta-sqrt", "1", "tl-check"}).json()["result"]["holds"] == true);
  CHECK(run({"--p", "3", "--N", "5", "tl-check"}).code == ExitCode::invalid_parameters);
}

TEST_CASE("expand") {
  const auto r = run({"--p", "3", "--N", "5", "--n", "2", "expand", "44"});
  REQUIRE(r.code == ExitCode::ok);
  CHECK(r.json()["result"]["digits"] == Json::array({2, 2, 4}));
}

TEST_CASE("options may follow the subcommand") {
  const auto r = run({"--p", "3", "--N", "5", "expand", "44", "--format", "table"});
  REQUIRE(r.code == ExitCode::ok);
  CHECK(r.out.find("digits: 2 2 4") != std::string::npos);
}

TEST_CASE("fuse and fuse-simples") {
  const auto f = run({"--p", "3", "--N", "5", "fuse", "4", "4"}).json();
  CHECK(f["result"]["summands"].dump() == R"([{"multiplicity":1,"weight":4},{"multiplicity":1,"weight":6},{"multiplicity":1,"weight":8}])");
  const auto s = run({"--p", "3", "--N", "5", "--n", "2", "fuse-simples", "1", "4"}).json();
  CHECK(s["result"]["product"].dump() == R"([{"multiplicity":2,"simple":3},{"multiplicity":1,"simple":5}])");
}

TEST_CASE("invalid parameters exit with 2") {
  CHECK(run({"--p", "4", "--N", "5", "blocks"}).code == ExitCode::invalid_parameters);
  CHECK(run({"--p", "3", "--N", "15", "blocks"}).code == ExitCode::invalid_parameters);
  CHECK(run({"--p", "3", "--N", "5", "--n", "0", "blocks"}).code == ExitCode::invalid_parameters);
  CHECK(run({"--p", "3", "--N", "5", "--n", "2", "fuse-simples", "10", "0"}).code == ExitCode::invalid_parameters);
  CHECK(run({"--p", "3", "--N", "5", "expand", "-1"}).code == ExitCode::invalid_parameters);
  CHECK(run({"--p", "3", "--N", "5", "--n", "1", "stable-gr"}).code == ExitCode::invalid_parameters);
  CHECK(run({"--p", "3", "--N", "5", "fpdim", "--format", "csv"}).code == ExitCode::invalid_parameters);
  CHECK(run({"--p", "3", "--N", "5", "nonsense"}).code == ExitCode::invalid_parameters);
  CHECK(run({"--N", "5", "blocks"}).code == ExitCode::invalid_parameters);
  const auto r = run({"--p", "4", "--N", "5", "blocks"});
  CHECK(r.err.find("p must be prime") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("selftest passes") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--p", "3", "--N", "5", "--n", "2", "selftest"},
           {"--p", "3", "--N", "4", "--n", "2", "selftest"},
           {"--p", "2", "--N", "3", "--n", "3", "selftest"}}) {
    const auto r = run(args);
    INFO(r.out << r.err);
    REQUIRE(r.code == ExitCode::ok);
    CHECK(r.json()["passed"] == true);
  }
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--p", "3", "--N", "5", "--n", "2", "qdim"};
  CHECK(run(args).out == run(args).out);
  const auto fp = run({"--p", "3", "--N", "5", "--n", "2", "fpdim"}).json();
  CHECK(fp["result"]["category"] == 173.501583503);
}

TEST_CASE("csv export") {
  const auto r = run({"--p", "2", "--N", "3", "--n", "2", "cartan", "--format", "csv"});
  REQUIRE(r.code == ExitCode::ok);
  CHECK(r.out == ",2,3,4\n2,1,0,0\n3,0,2,0\n4,0,0,2\n");
}

TEST_CASE("cache hits are byte-identical") {
  const auto dir = fresh_dir("hit");
  const std::vector<std::string> args{"--p", "3", "--N", "5", "--n", "2", "--cache-dir", dir.string(), "cartan"};
  const auto first = run(args);
  REQUIRE(first.code == ExitCode::ok);
  REQUIRE(std::distance(std::filesystem::directory_iterator(dir), {}) == 1);
  const auto second = run(args);
  CHECK(second.out == first.out);
  CHECK(second.err.empty());
  CHECK(run({"--p", "3", "--N", "5", "--n", "2", "cartan"}).out == first.out);

  // A valid entry with a different payload is served as is, so the second
  // run really came from disk.
  const auto path = std::filesystem::directory_iterator(dir)->path();
  Json stored;
  std::ifstream(path) >> stored;
  stored["payload"]["result"] = "planted";
  stored["checksum"] = cli::checksum(stored["payload"].dump());
  std::ofstream(path) << stored.dump();
  CHECK(run(args).json()["result"] == "planted");
  std::filesystem::remove_all(dir);
}

TEST_CASE("corrupt cache entries are recomputed with a warning") {
  const auto dir = fresh_dir("corrupt");
  const std::vector<std::string> args{"--p", "3", "--N", "5", "--n", "2", "--cache-dir", dir.string(), "blocks"};
  const auto first = run(args);
  const auto path = std::filesystem::directory_iterator(dir)->path();

  std::ofstream(path) << "{ not json";
  const auto garbled = run(args);
  CHECK(garbled.code == ExitCode::ok);
  CHECK(garbled.out == first.out);
  CHECK(garbled.err.find("warning: ignoring corrupt cache entry") != std::string::npos);
  CHECK(run(args).err.empty());  // rewritten

  Json stored;
  std::ifstream(path) >> stored;
  stored["payload"]["result"]["blocks"] = 7;  // checksum no longer matches
  std::ofstream(path) << stored.dump();
  const auto tampered = run(args);
  CHECK(tampered.out == first.out);
  CHECK(tampered.err.find("checksum mismatch") != std::string::npos);
  std::filesystem::remove_all(dir);
}
