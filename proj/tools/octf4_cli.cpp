// Command-line front end over the C interface.
//
// Exit codes: 0 success, 1 malformed input (including points off the
// variety), 2 residual or verification failure.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "octf4/octf4.h"

namespace {

using Json = nlohmann::json;

enum Exit { kOk = 0, kBadInput = 1, kFailure = 2 };

struct Failure {
  int code;
  std::string message;
};

using ConfigPtr = std::unique_ptr<octf4_config, decltype(&octf4_config_destroy)>;
using TracePtr = std::unique_ptr<octf4_trace, decltype(&octf4_trace_destroy)>;

int exit_for(octf4_status s) {
  return s == OCTF4_RESIDUAL_FAILURE ? kFailure : kBadInput;
}

void check(octf4_status s, const std::string& what) {
  if (s != OCTF4_OK) throw Failure{exit_for(s), what + ": " + octf4_last_error()};
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out(s ? s : "");
  octf4_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kBadInput, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kBadInput, "cannot write " + path};
  out << text;
}

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
};

ConfigPtr load_config(const Options& opt) {
  octf4_config* raw = nullptr;
  if (!opt.config_path.empty())
    check(octf4_config_from_json(read_file(opt.config_path).c_str(), &raw), "config");
  else
    check(octf4_config_create(&raw), "config");
  ConfigPtr cfg(raw, &octf4_config_destroy);

  // Precedence: --seed, then the config file, then OCTF4_SEED.
  if (opt.seed) {
    check(octf4_config_set_seed(cfg.get(), *opt.seed), "seed");
  } else if (opt.config_path.empty() || !Json::parse(read_file(opt.config_path)).contains("seed")) {
    if (const char* env = std::getenv("OCTF4_SEED")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0') throw Failure{kBadInput, "OCTF4_SEED is not an integer"};
      check(octf4_config_set_seed(cfg.get(), v), "seed");
    }
  }
  return cfg;
}

std::uint64_t seed_of(const octf4_config* cfg) {
  std::uint64_t s = 0;
  check(octf4_config_get_seed(cfg, &s), "seed");
  return s;
}

int cmd_reduce(const Options& opt, const std::string& in, const std::string& out, bool real,
               std::optional<double> tol) {
  ConfigPtr cfg = load_config(opt);
  if (tol) check(octf4_config_set_accept(cfg.get(), *tol), "--tol");
  const std::string text = read_file(in);

  octf4_trace* raw = nullptr;
  octf4_status s;
  if (real) {
    octf4_real_herm* x = nullptr;
    check(octf4_real_herm_from_json(text.c_str(), &x), in);
    s = octf4_reduce_real(x, cfg.get(), &raw);
    octf4_real_herm_destroy(x);
  } else {
    octf4_herm* a = nullptr;
    check(octf4_herm_from_json(text.c_str(), &a), in);
    s = octf4_reduce(a, cfg.get(), &raw);
    octf4_herm_destroy(a);
  }
  TracePtr trace(raw, &octf4_trace_destroy);
  const std::string error = s == OCTF4_OK ? "" : octf4_last_error();
  if (trace) {
    char* j = nullptr;
    check(octf4_trace_to_json(trace.get(), &j), "trace");
    write_output(out, Json::parse(take(j)));
  }
  if (s != OCTF4_OK) throw Failure{exit_for(s), "reduce: " + error};
  double residual = 0.0;
  int length = 0;
  check(octf4_trace_residual(trace.get(), &residual), "trace");
  check(octf4_trace_word_length(trace.get(), &length), "trace");
  if (!out.empty() && out != "-")
    std::cerr << "reduced: " << length << " letters, residual " << residual << "\n";
  return kOk;
}

int cmd_sample(const Options& opt, int n, const std::string& dir, bool real) {
  ConfigPtr cfg = load_config(opt);
  const std::uint64_t seed = seed_of(cfg.get());
  char* raw = nullptr;
  check(octf4_sample(seed, n, real ? 1 : 0, &raw), "sample");
  const Json samples = Json::parse(take(raw));

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Failure{kBadInput, "cannot create " + dir + ": " + ec.message()};
  for (std::size_t k = 0; k < samples.size(); ++k) {
    std::ostringstream name;
    name << "sample_" << std::setw(5) << std::setfill('0') << k << ".json";
    write_output((std::filesystem::path(dir) / name.str()).string(), samples[k]);
  }
  write_output((std::filesystem::path(dir) / "manifest.json").string(),
               {{"seed", seed}, {"count", samples.size()}, {"model", real ? "real" : "complex"}});
  return kOk;
}

int cmd_classify(const Options& opt, const std::string& in) {
  ConfigPtr cfg = load_config(opt);
  octf4_herm* a = nullptr;
  check(octf4_herm_from_json(read_file(in).c_str(), &a), in);
  char* raw = nullptr;
  const octf4_status s = octf4_classify(a, cfg.get(), &raw);
  octf4_herm_destroy(a);
  check(s, "classify");
  write_output("-", Json::parse(take(raw)));
  return kOk;
}

int cmd_verify(const Options& opt, const std::string& suite, std::optional<int> n) {
  ConfigPtr cfg = load_config(opt);
  int samples = 0;
  check(octf4_config_get_samples(cfg.get(), &samples), "config");
  int passed = 0;
  char* raw = nullptr;
  check(octf4_verify_suite(suite.c_str(), n.value_or(samples), seed_of(cfg.get()), cfg.get(),
                           &passed, &raw),
        "verify");
  write_output("-", Json::parse(take(raw)));
  return passed ? kOk : kFailure;
}

int cmd_verify_trace(const Options& opt, const std::string& in) {
  ConfigPtr cfg = load_config(opt);
  octf4_trace* raw = nullptr;
  check(octf4_trace_from_json(read_file(in).c_str(), &raw), in);
  TracePtr trace(raw, &octf4_trace_destroy);
  int ok = 0;
  char* report = nullptr;
  check(octf4_trace_verify(trace.get(), cfg.get(), &ok, &report), "verify-trace");
  write_output("-", Json::parse(take(report)));
  return ok ? kOk : kFailure;
}

int cmd_dims() {
  char* raw = nullptr;
  check(octf4_dims_json(&raw), "dims");
  write_output("-", Json::parse(take(raw)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octonionic Jordan algebra and F4 orbit tools"};
  app.require_subcommand(1);
  Options opt;
  std::uint64_t seed = 0;
  app.add_option("--config", opt.config_path, "JSON file overriding the default configuration")
      ->check(CLI::ExistingFile);
  app.set_version_flag("--version", std::string(octf4_version()));

  std::string in, out, suite;
  bool real = false;
  double tol = 0.0;
  int n = 0;

  auto* reduce = app.add_subcommand("reduce", "Reduce a cone element to the canonical form");
  reduce->add_option("--in", in, "Input matrix JSON")->required();
  reduce->add_option("--out", out, "Trace output (default stdout)");
  reduce->add_flag("--real", real, "Input is in the real model");
  auto* tol_opt = reduce->add_option("--tol", tol, "Acceptance tolerance")->check(CLI::PositiveNumber);

  auto* sample = app.add_subcommand("sample", "Write seeded orbit samples");
  sample->add_option("-n", n, "Number of samples")->required()->check(CLI::NonNegativeNumber);
  auto* sample_seed = sample->add_option("--seed", seed, "Seed");
  sample->add_option("--out", out, "Output directory")->required();
  sample->add_flag("--real", real, "Sample the real orbit");

  auto* classify = app.add_subcommand("classify", "Branch label of a cone element");
  classify->add_option("--in", in, "Input matrix JSON")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"identities", "automorphism", "oracle", "orbit", "real", "tangent",
                             "rootdata"}));
  auto* verify_n = verify->add_option("-n", n, "Number of samples")->check(CLI::PositiveNumber);
  auto* verify_seed = verify->add_option("--seed", seed, "Seed");

  auto* verify_trace = app.add_subcommand("verify-trace", "Re-verify a trace from its JSON");
  verify_trace->add_option("--in", in, "Trace JSON")->required();

  app.add_subcommand("dims", "Representation dimensions and the p4 report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (sample_seed->count() || verify_seed->count()) opt.seed = seed;
    if (*reduce)
      return cmd_reduce(opt, in, out, real,
                        tol_opt->count() ? std::optional<double>(tol) : std::nullopt);
    if (*sample) return cmd_sample(opt, n, out, real);
    if (*classify) return cmd_classify(opt, in);
    if (*verify)
      return cmd_verify(opt, suite, verify_n->count() ? std::optional<int>(n) : std::nullopt);
    if (*verify_trace) return cmd_verify_trace(opt, in);
    return cmd_dims();
  } catch (const Failure& f) {
    std::cerr << "octf4: " << f.message << "\n";
    return f.code;
  } catch (const Json::exception& e) {
    std::cerr << "octf4: " << e.what() << "\n";
    return kBadInput;
  }
}
