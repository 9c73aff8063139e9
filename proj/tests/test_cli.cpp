#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "demyanov/cli.hpp"
#include "demyanov/family_io.hpp"
#include "test_support.hpp"

using namespace demyanov;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(DEMYANOV_TEST_TMPDIR) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("builtin and convert") {
  const fs::path dir = scratch("convert");
  const Run builtin = run({"builtin", "--out", (dir / "f.json").string()});
  CHECK(builtin.code == 0);
  CHECK(slurp(dir / "f.json") == serialize_family(builtin_counterexample()));

  const Run convert = run({"convert", "--in", (dir / "f.json").string(), "--out",
                           (dir / "g.json").string()});
  CHECK(convert.code == 0);
  CHECK(parse_family(slurp(dir / "g.json")) == demyanov_convert(builtin_counterexample()));

  CHECK(run({"convert", "--builtin"}).out == serialize_family(demyanov_convert(builtin_counterexample())));
}

TEST_CASE("iterate") {
  const Run r = run({"iterate", "--builtin", "--cap", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("N=1 L=4\n", 0) == 0);

  const fs::path dir = scratch("dump");
  CHECK(run({"iterate", "--builtin", "--dump-dir", (dir / "traj").string()}).code == 0);
  CHECK(fs::exists(dir / "traj" / "omega_00000.json"));
  CHECK(fs::exists(dir / "traj" / "omega_00005.json"));
  CHECK_FALSE(fs::exists(dir / "traj" / "omega_00006.json"));
  CHECK(slurp(dir / "traj" / "omega_00005.json") == slurp(dir / "traj" / "omega_00001.json"));
  CHECK(slurp(dir / "traj" / "omega_00005.json") != slurp(dir / "traj" / "omega_00003.json"));

  CHECK(run({"iterate", "--builtin", "--cap", "2"}).code == cli::kExitSoftware);
}

TEST_CASE("verify-claim") {
  const Run r = run({"verify-claim"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("claim verified") != std::string::npos);
}

TEST_CASE("render and search") {
  const fs::path dir = scratch("render");
  CHECK(run({"render", "--builtin", "--out", (dir / "fig.svg").string()}).code == 0);
  CHECK(slurp(dir / "fig.svg").find("<svg") != std::string::npos);
  const Run step = run({"render", "--builtin", "--step", "1", "--columns", "6"});
  CHECK(step.code == 0);
  CHECK(step.out.find("width=\"1200\" height=\"400\"") != std::string::npos);

  const std::vector<std::string> search{"search",          "--instances", "20",  "--num-polytopes",
                                        "3",               "--max-vertices", "3", "--coord-bound",
                                        "2",               "--seed",      "9",   "--cap",
                                        "500"};
  const Run a = run(search);
  const Run b = run(search);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("instances=20 ", 0) == 0);
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch("errors");
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"iterate", "--bogus"}).code == cli::kExitUsage);
  CHECK(run({"iterate"}).code == cli::kExitUsage);
  CHECK(run({"iterate", "--builtin", "--in", "x.json"}).code == cli::kExitUsage);
  CHECK(run({"iterate", "--builtin", "--cap", "0"}).code == cli::kExitUsage);
  CHECK(run({"search", "--num-polytopes", "3", "--max-vertices", "1", "--coord-bound", "0"}).code ==
        cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);

  CHECK(run({"convert", "--in", (dir / "missing.json").string()}).code == cli::kExitNoInput);

  write(dir / "bad.json", "{\"version\":\"1\",\"polytopes\":[[[\"x\",\"0\"]]]}");
  CHECK(run({"convert", "--in", (dir / "bad.json").string()}).code == cli::kExitDataError);
  write(dir / "empty.json", "{\"version\":\"1\",\"polytopes\":[]}");
  CHECK(run({"convert", "--in", (dir / "empty.json").string()}).code == cli::kExitDataError);
  write(dir / "trunc.json", "{\"version\":");
  const Run trunc = run({"convert", "--in", (dir / "trunc.json").string()});
  CHECK(trunc.code == cli::kExitDataError);
  CHECK(trunc.err.find("line 1") != std::string::npos);
}
