// Exit-status contract of the CLI, exercised through the built binary when
// ctest exports its path (skipped otherwise).

#include "tvt/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>

using namespace tvt;

namespace {

int run(const std::string& args) {
  const char* bin = std::getenv("TVT_CLI_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string("\"") + bin + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("cli exit codes: 0 success, 3 budget, 4 input error") {
  if (std::getenv("TVT_CLI_BIN") == nullptr) {
    MESSAGE("TVT_CLI_BIN not set; skipping CLI contract checks");
    return;
  }
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "tvt_cli_contract";
  fs::remove_all(dir);
  fs::create_directories(dir);

  CHECK(run("constants --r-max 4 --d-max 1 --out " + (dir / "c").string()) == 0);
  CHECK(run("generate --kind nested_pairs -N 3 -r 2 -d 1 --seed 5 --out " +
            (dir / "g").string()) == 0);
  const std::string config_file = (dir / "g" / "config.json").string();
  CHECK(run("check --kind from_file --input " + config_file +
            " --trials 10 --seed 5 --out " + (dir / "k").string()) == 0);
  CHECK(run("tolerance --kind from_file --input " + config_file + " --out " +
            (dir / "t").string()) == 0);

  // Certificates in reports re-verify against the reloaded configuration.
  CHECK(run("capacity --kind from_file --input " + config_file + " --out " +
            (dir / "cap").string()) == 0);
  const auto config = config_from_json(Json::parse(read_text_file(config_file)));
  const auto report =
      Json::parse(read_text_file((dir / "cap" / "report.json").string()));
  auto certificate =
      certificate_from_json(report.at("results").at("certificate"));
  CHECK_NOTHROW(certificate.validate(config));
  CHECK(report.at("results").at("f").get<int>() == 3);  // all nested pairs split

  // Budget exhaustion is a distinct status.
  CHECK(run("capacity --kind perfect_split -N 1 -r 3 -d 2 --seed 1 "
            "--budget-families 1 --out " + (dir / "b").string()) == 3);

  // Input errors: missing file, bad parameters, missing seed.
  CHECK(run("capacity --kind from_file --input " + (dir / "missing.json").string()) == 4);
  CHECK(run("generate --kind perfect_split -N 2 -r 3 -d 1 --seed 1") == 4);
  CHECK(run("search --kind nested_pairs -N 3 -r 2 -d 1 --target 0") == 4);
}
