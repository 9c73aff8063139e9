#include "demyanov/cli.hpp"

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "demyanov/dynamics.hpp"
#include "demyanov/family_io.hpp"
#include "demyanov/svg.hpp"

namespace demyanov::cli {

namespace {

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw FileError("cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError("cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw FileError("cannot write " + path);
}

// Writes to --out when given, otherwise to the result stream.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

std::string hex_digest(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

struct InputFlags {
  std::string in;
  bool builtin = false;

  void attach(CLI::App* cmd) {
    auto* in_opt = cmd->add_option("--in", in, "Family document to read");
    auto* builtin_opt =
        cmd->add_flag("--builtin", builtin, "Use the built-in four-polygon counterexample");
    in_opt->excludes(builtin_opt);
  }

  Collection load() const {
    if (builtin) return builtin_counterexample();
    if (in.empty()) throw UsageError("one of --in or --builtin is required");
    return parse_family(read_file(in));
  }
};

void dump_trajectory(const std::string& dir, const std::vector<Collection>& trajectory) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw FileError("cannot create " + dir + ": " + ec.message());
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "omega_%05zu.json", k);
    write_file((std::filesystem::path(dir) / name).string(), serialize_family(trajectory[k]));
  }
}

int run_iterate(const Collection& omega0, std::size_t cap, const std::string& dump_dir,
                std::ostream& out) {
  CycleResult result;
  try {
    result = iterate_until_cycle(omega0, cap);
  } catch (const CapExceeded& e) {
    if (!dump_dir.empty()) dump_trajectory(dump_dir, e.partial_trajectory());
    throw;
  }

  out << "N=" << result.preperiod << " L=" << result.cycle_length << "\n";
  for (std::size_t k = 0; k < result.trajectory.size(); ++k) {
    out << "k=" << k << " members=" << result.trajectory[k].size()
        << " digest=" << hex_digest(result.digests[k]) << "\n";
  }
  if (!dump_dir.empty()) dump_trajectory(dump_dir, result.trajectory);
  return kExitOk;
}

int run_verify(std::ostream& out) {
  const ClaimVerdict verdict = evaluate_counterexample_claim();
  for (const ClaimCheck& c : verdict.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.relation << "\n";
  }
  out << "N=" << verdict.preperiod << " L=" << verdict.cycle_length << "\n";
  out << (verdict.passed() ? "claim verified" : "claim violated") << "\n";
  return verdict.passed() ? kExitOk : kExitSoftware;
}

int run_search(const FamilyParams& params, std::size_t instances, std::size_t cap,
               std::uint64_t seed, unsigned threads, std::ostream& out) {
  const SearchReport report = search_cycles(params, instances, cap, seed, threads);
  out << "instances=" << report.instances_run << " cap_exceeded=" << report.cap_exceeded << "\n";
  for (const auto& [length, count] : report.histogram) {
    out << "L=" << length << " count=" << count << "\n";
  }
  if (report.max_L_witness) {
    const SearchWitness& w = *report.max_L_witness;
    out << "max_L=" << w.cycle_length << " seed=" << w.seed << "\n";
    out << serialize_family(w.family);
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Demyanov converter on planar polytope families", "demyanov"};
  app.require_subcommand(1);

  std::string out_path;
  std::size_t cap = kDefaultCap;
  std::string dump_dir;
  std::size_t steps = 0;
  RenderSpec render_spec;
  FamilyParams params;
  std::size_t instances = 100;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  auto* builtin_cmd = app.add_subcommand("builtin", "Write the built-in counterexample family");
  builtin_cmd->add_option("--out", out_path, "Output document (default: stdout)");

  InputFlags convert_in;
  auto* convert_cmd = app.add_subcommand("convert", "Apply the Demyanov converter once");
  convert_in.attach(convert_cmd);
  convert_cmd->add_option("--out", out_path, "Output document (default: stdout)");

  InputFlags iterate_in;
  auto* iterate_cmd = app.add_subcommand("iterate", "Iterate the converter until a cycle");
  iterate_in.attach(iterate_cmd);
  iterate_cmd->add_option("--cap", cap, "Maximum number of converter applications")
      ->check(CLI::PositiveNumber);
  iterate_cmd->add_option("--dump-dir", dump_dir, "Write one document per trajectory element");

  auto* verify_cmd =
      app.add_subcommand("verify-claim", "Check the cycle-of-length-4 counterexample");

  InputFlags render_in;
  auto* render_cmd = app.add_subcommand("render", "Render a family as SVG");
  render_in.attach(render_cmd);
  render_cmd->add_option("--out", out_path, "Output SVG (default: stdout)");
  render_cmd->add_option("--step", steps, "Apply the converter this many times first");
  render_cmd->add_option("--columns", render_spec.columns, "Panels per row")
      ->check(CLI::PositiveNumber);
  render_cmd->add_option("--panel-size", render_spec.panel_size, "Panel edge in SVG units")
      ->check(CLI::PositiveNumber);

  auto* search_cmd = app.add_subcommand("search", "Random search for long cycles");
  search_cmd->add_option("--instances", instances, "Number of random families")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--num-polytopes", params.num_polytopes, "Polytopes per family")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-vertices", params.max_vertices, "Points drawn per polytope")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--coord-bound", params.coord_bound, "Coordinates in [-b, b]")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--seed", seed, "Base seed");
  search_cmd->add_option("--cap", cap, "Iteration cap per instance")->check(CLI::PositiveNumber);
  search_cmd->add_option("--threads", threads, "Worker threads (0: hardware count)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (*builtin_cmd) {
      emit(out_path, serialize_family(builtin_counterexample()), out);
      return kExitOk;
    }
    if (*convert_cmd) {
      emit(out_path, serialize_family(demyanov_convert(convert_in.load())), out);
      return kExitOk;
    }
    if (*iterate_cmd) return run_iterate(iterate_in.load(), cap, dump_dir, out);
    if (*verify_cmd) return run_verify(out);
    if (*render_cmd) {
      Collection omega = render_in.load();
      for (std::size_t k = 0; k < steps; ++k) omega = demyanov_convert(omega);
      emit(out_path, render_svg(omega, render_spec), out);
      return kExitOk;
    }
    if (*search_cmd) return run_search(params, instances, cap, seed, threads, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GenerationFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const EmptyInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitSoftware;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitSoftware;
  }
  return kExitUsage;
}

}  // namespace demyanov::cli
