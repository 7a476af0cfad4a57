#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "markov/cli.hpp"

using markov::run_cli;

namespace {

const std::string kWeather = std::string(MARKOV_DATA_DIR) + "/weather.json";
const std::string kStone =
    std::string(MARKOV_DATA_DIR) + "/weather-stone.json";

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = (std::filesystem::temp_directory_path() /
             ("markov_cli_test_" + std::to_string(counter_++) + ".json"))
                .string();
    std::ofstream file(path_);
    file << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

}  // namespace

TEST_CASE("validate summarizes the model") {
  const CliResult r = run({"validate", "--model", kStone});
  CHECK(r.code == 0);
  CHECK(r.out.find("hmm model") != std::string::npos);
  CHECK(r.out.find("3 states") != std::string::npos);
}

TEST_CASE("evolve prints the distribution after the requested steps") {
  const CliResult r = run({"evolve", "--model", kWeather, "--init", "1,0,0",
                           "--steps", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rainy 0.115000000") != std::string::npos);
  CHECK(r.out.find("sunny 0.680000000") != std::string::npos);
  CHECK(r.out.find("foggy 0.205000000") != std::string::npos);
}

TEST_CASE("chain-prob prints the path probability") {
  const CliResult r = run({"chain-prob", "--model", kWeather, "--init",
                           "1,0,0", "--seq", "sunny,foggy,rainy"});
  CHECK(r.code == 0);
  CHECK(r.out == "4.500000000e-2\n");
}

TEST_CASE("chain-prob with --given conditions on the current state") {
  const CliResult r = run({"chain-prob", "--model", kWeather, "--given",
                           "foggy", "--seq", "sunny"});
  CHECK(r.code == 0);
  CHECK(r.out == "2.000000000e-1\n");
}

TEST_CASE("joint and likelihood queries") {
  const CliResult joint =
      run({"joint", "--model", kStone, "--obs", "dry,wet,wet", "--seq",
           "foggy,rainy,rainy"});
  CHECK(joint.code == 0);
  CHECK(joint.out == "2.688000000e-2\n");

  const CliResult likelihood =
      run({"likelihood", "--model", kStone, "--obs", "dry,wet,wet"});
  CHECK(likelihood.code == 0);
  CHECK(likelihood.out == "8.247500000e-2\n");
}

TEST_CASE("viterbi prints path and value") {
  const CliResult r =
      run({"viterbi", "--model", kStone, "--obs", "dry,wet,wet"});
  CHECK(r.code == 0);
  CHECK(r.out.find("path: foggy,rainy,rainy\n") != std::string::npos);
  CHECK(r.out.find("value: 2.688000000e-2\n") != std::string::npos);
}

TEST_CASE("viterbi trellis dump and log-space flags") {
  const CliResult dumped = run({"viterbi", "--model", kStone, "--obs",
                                "dry,wet,wet", "--dump-trellis"});
  CHECK(dumped.code == 0);
  CHECK(dumped.out.find("1 | 0.300000000 0.066666667 0.233333333 | - - -") !=
        std::string::npos);
  CHECK(dumped.out.find("| sunny foggy foggy") != std::string::npos);

  const CliResult logged = run({"viterbi", "--model", kStone, "--obs",
                                "dry,wet,wet", "--log-space"});
  CHECK(logged.code == 0);
  CHECK(logged.out.find("path: foggy,rainy,rainy\n") != std::string::npos);
  CHECK(logged.out.find("log-value: -3.616372763") != std::string::npos);
}

TEST_CASE("posterior prints one line per day") {
  const CliResult r =
      run({"posterior", "--model", kStone, "--obs", "dry,wet,wet"});
  CHECK(r.code == 0);
  CHECK(r.out.find("t=1 sunny 0.196605032") != std::string::npos);
  CHECK(r.out.find("t=2 sunny 0.060018187") != std::string::npos);
  CHECK(r.out.find("t=3 sunny 0.066080630") != std::string::npos);
}

TEST_CASE("map-brute agrees with viterbi on the worked example") {
  const CliResult r =
      run({"map-brute", "--model", kStone, "--obs", "dry,wet,wet"});
  CHECK(r.code == 0);
  CHECK(r.out.find("path: foggy,rainy,rainy\n") != std::string::npos);
  CHECK(r.out.find("value: 2.688000000e-2\n") != std::string::npos);
}

TEST_CASE("fhmm-likelihood runs on a factorial model file") {
  const TempFile model(R"({
    "kind": "fhmm",
    "observations": ["dry", "wet"],
    "components": [
      {
        "states": ["sunny", "rainy"],
        "initial": [1.0, 0.0],
        "transition": [[0.8, 0.2], [0.4, 0.6]],
        "emission": [[0.9, 0.1], [0.2, 0.8]]
      },
      {
        "states": ["calm", "storm"],
        "initial": [0.5, 0.5],
        "transition": [[0.9, 0.1], [0.3, 0.7]],
        "emission": [[0.6, 0.4], [0.1, 0.9]]
      }
    ]
  })");
  const CliResult r =
      run({"fhmm-likelihood", "--model", model.path(), "--obs", "dry,wet"});
  CHECK(r.code == 0);
  CHECK(r.out.find("e-") != std::string::npos);  // a scientific number
}

TEST_CASE("export-dot emits the unrolled graph") {
  const CliResult r =
      run({"export-dot", "--model", kStone, "--horizon", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") == 0);
  CHECK(r.out.find("q_2 -> q_3;") != std::string::npos);
  CHECK(r.out.find("q_3 -> x_3;") != std::string::npos);
}

TEST_CASE("malformed model files exit 2 with a path-bearing message") {
  const TempFile bad(R"({
    "kind": "markov",
    "states": ["a", "b"],
    "initial": [1.0, 0.0],
    "transition": [[0.5, 0.5], [0.5, 0.49]]
  })");
  const CliResult r = run({"validate", "--model", bad.path()});
  CHECK(r.code == 2);
  CHECK(r.err.find("$.transition[1]") != std::string::npos);
}

TEST_CASE("domain errors exit 1") {
  // Disabled second observation makes any wet reading impossible.
  const TempFile never_wet(R"({
    "kind": "hmm",
    "states": ["a", "b"],
    "initial": [0.5, 0.5],
    "transition": [[0.5, 0.5], [0.5, 0.5]],
    "observations": ["dry", "wet"],
    "emission": [[1.0, 0.0], [1.0, 0.0]]
  })");
  const CliResult r =
      run({"posterior", "--model", never_wet.path(), "--obs", "wet"});
  CHECK(r.code == 1);
  CHECK(r.err.find("zero") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  SUBCASE("unknown subcommand") {
    CHECK(run({"decode", "--model", kStone}).code == 2);
  }
  SUBCASE("missing required option") {
    CHECK(run({"viterbi", "--model", kStone}).code == 2);
  }
  SUBCASE("missing model file") {
    const CliResult r =
        run({"validate", "--model", "/nonexistent/model.json"});
    CHECK(r.code == 2);
    CHECK(r.err.find("cannot open") != std::string::npos);
  }
  SUBCASE("unknown label in a sequence") {
    const CliResult r = run({"chain-prob", "--model", kWeather, "--seq",
                             "sunny,snowy"});
    CHECK(r.code == 2);
    CHECK(r.err.find("snowy") != std::string::npos);
  }
  SUBCASE("invalid --init") {
    const CliResult r = run({"evolve", "--model", kWeather, "--init",
                             "0.5,0.6,0.1", "--steps", "1"});
    CHECK(r.code == 2);
  }
  SUBCASE("wrong model kind for the command") {
    const CliResult r =
        run({"viterbi", "--model", kWeather, "--obs", "dry"});
    CHECK(r.code == 2);
  }
}

TEST_CASE("help is not an error") {
  CHECK(run({"--help"}).code == 0);
}
