#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "ellsep/paving_io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_capture.out";
  const std::string cmd = std::string(ELLSEP_CLI_PATH) + " " + args + " > " +
                          out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

const char* kSonarConfig = R"({
  "sonars": {"a": [-2, 1], "b": [-2, -1], "c": [3, 2]},
  "measurements": [
    {"emitter": "a", "receiver": "b", "interval": [4, 6]},
    {"emitter": "a", "receiver": "c", "interval": [7, 9]}
  ],
  "frame": [[-7, 7], [-7, 7]],
  "eps": 0.1
})";

}  // namespace

TEST_CASE("pave-ellipse writes a paving and reports the bracket") {
  const RunResult r = run_cli(
      "pave-ellipse --q -1,0,0,1,0,1 --frame -2,2,-2,2 --eps 0.2 "
      "--json cli_disk.json --svg cli_disk.svg");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("area bracket") != std::string::npos);

  const ellsep::Paving p = ellsep::import_json("cli_disk.json");
  CHECK(p.eps == 0.2);
  CHECK(p.frame[0].lo() == -2.0);
  CHECK(!p.inside.empty());
  CHECK(read_file("cli_disk.svg").find("<svg") != std::string::npos);
  std::remove("cli_disk.json");
  std::remove("cli_disk.svg");
}

TEST_CASE("pave-ellipse rejects a non-ellipse with exit 2") {
  const RunResult r = run_cli("pave-ellipse --q 0,0,0,1,0,-1 --frame -2,2,-2,2 --eps 0.2");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("not an ellipse") != std::string::npos);
}

TEST_CASE("malformed flags exit with code 1") {
  CHECK(run_cli("pave-ellipse --q 1,2 --frame -2,2,-2,2 --eps 0.2").exit_code == 1);
  CHECK(run_cli("pave-ellipse --q -1,0,0,1,0,1 --frame -2,2,-2,2 --eps 0").exit_code == 1);
  CHECK(run_cli("pave-ellipse --q -1,0,0,1,0,1 --eps 0.2").exit_code == 1);
  CHECK(run_cli("bogus-subcommand").exit_code == 1);
  CHECK(run_cli("localize").exit_code == 1);
}

TEST_CASE("unwritable output paths exit with code 3") {
  const RunResult r = run_cli(
      "pave-ellipse --q -1,0,0,1,0,1 --frame -2,2,-2,2 --eps 0.5 "
      "--json /nonexistent-dir/out.json");
  CHECK(r.exit_code == 3);
}

TEST_CASE("identical invocations produce byte-identical json") {
  const std::string args =
      "pave-ellipse --q -5,1,1,3,1,2 --frame -7,7,-7,7 --eps 0.3 --json ";
  CHECK(run_cli(args + "cli_rep1.json").exit_code == 0);
  CHECK(run_cli(args + "cli_rep2.json").exit_code == 0);
  CHECK(read_file("cli_rep1.json") == read_file("cli_rep2.json"));
  std::remove("cli_rep1.json");
  std::remove("cli_rep2.json");
}

TEST_CASE("flags override config file values") {
  write_file("cli_cfg.json",
             R"({"q": [-1,0,0,1,0,1], "frame": [[-2,2],[-2,2]], "eps": 0.5})");
  const RunResult r =
      run_cli("pave-ellipse --config cli_cfg.json --eps 0.25 --json cli_cfg_out.json");
  CHECK(r.exit_code == 0);
  const ellsep::Paving p = ellsep::import_json("cli_cfg_out.json");
  CHECK(p.eps == 0.25);
  std::remove("cli_cfg.json");
  std::remove("cli_cfg_out.json");
}

TEST_CASE("localize paves each measurement and the combined set") {
  write_file("cli_loc.json", kSonarConfig);
  const RunResult r =
      run_cli("localize --config cli_loc.json --eps 0.25 --json cli_loc_out.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("measurement 1 (a-b)") != std::string::npos);
  CHECK(r.output.find("measurement 2 (a-c)") != std::string::npos);
  CHECK(r.output.find("combined") != std::string::npos);

  const ellsep::Paving combined = ellsep::import_json("cli_loc_out.json");
  const ellsep::Paving m1 = ellsep::import_json("cli_loc_out.m1.json");
  const ellsep::Paving m2 = ellsep::import_json("cli_loc_out.m2.json");
  CHECK(!combined.inside.empty());
  CHECK(!m1.inside.empty());
  CHECK(!m2.inside.empty());
  // every box stays within the frame
  for (const auto* paving : {&combined, &m1, &m2}) {
    for (const auto* boxes :
         {&paving->inside, &paving->outside, &paving->undetermined}) {
      for (const ellsep::Box& b : *boxes) {
        CHECK(b[0].subset_of(paving->frame[0]));
        CHECK(b[1].subset_of(paving->frame[1]));
      }
    }
  }
  std::remove("cli_loc.json");
  std::remove("cli_loc_out.json");
  std::remove("cli_loc_out.m1.json");
  std::remove("cli_loc_out.m2.json");
}

TEST_CASE("degenerate measurements exit with code 2") {
  write_file("cli_degen.json", R"({
    "sonars": {"a": [-2, 1], "b": [-2, -1]},
    "measurements": [{"emitter": "a", "receiver": "b", "interval": [1, 1.5]}],
    "frame": [[-7, 7], [-7, 7]],
    "eps": 0.5
  })");
  const RunResult r = run_cli("localize --config cli_degen.json");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("degenerate") != std::string::npos);
  std::remove("cli_degen.json");
}

TEST_CASE("unknown sonar names exit with code 1") {
  write_file("cli_unknown.json", R"({
    "sonars": {"a": [-2, 1]},
    "measurements": [{"emitter": "a", "receiver": "zz", "interval": [4, 6]}],
    "frame": [[-7, 7], [-7, 7]],
    "eps": 0.5
  })");
  const RunResult r = run_cli("localize --config cli_unknown.json");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("unknown sonar") != std::string::npos);
  std::remove("cli_unknown.json");
}

TEST_CASE("the baseline separator flag is accepted") {
  const RunResult r = run_cli(
      "pave-ellipse --q -1,0,0,1,0,1 --frame -2,2,-2,2 --eps 0.25 --baseline fwdbwd");
  CHECK(r.exit_code == 0);
  CHECK(run_cli("pave-ellipse --q -1,0,0,1,0,1 --frame -2,2,-2,2 --eps 0.25 "
                "--baseline bogus")
            .exit_code == 1);
}
