// hyperwreath: chain tables, verification suites and an element calculator.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperwreath/hyperwreath.hpp"

namespace hw = hyperwreath;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct RunConfig {
  int n = 4;
  int i_max = 12;
  std::optional<int> wt_bound;
  int radius = 2;
  std::string c_range = "-3..3";
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  std::string suite;
  std::string expr;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ConfigError("--c-range must look like a..b, got '" + text + "'");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used_lo), hi = std::stoi(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument("trailing");
    if (lo > hi) throw ConfigError("--c-range is empty: " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ConfigError("--c-range must look like a..b, got '" + text + "'");
  }
}

/// Writes to --out if given, else stdout.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw ConfigError("cannot open " + cfg.out + " for writing");
  f << text;
}

int cmd_chain(const RunConfig& cfg) {
  if (cfg.n < 2) throw ConfigError("--n must be >= 2");
  if (cfg.i_max < 0) throw ConfigError("--imax must be >= 0");
  const int bound = cfg.wt_bound.value_or(2 * (cfg.i_max + 2));
  hw::ChainReport report = hw::verify_growth(cfg.n, cfg.i_max);
  try {
    hw::attach_closure_discards(report, bound);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--wt-bound too small: ") + e.what());
  }
  std::ostringstream os;
  if (cfg.format == "json")
    os << hw::to_json(report).dump(2) << '\n';
  else if (cfg.format == "csv")
    hw::write_csv(os, report);
  else
    hw::write_text(os, report);
  emit(cfg, os.str());
  return report.all_match() ? kOk : kFailure;
}

int cmd_verify(const RunConfig& cfg) {
  const auto& names = hw::suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw ConfigError("unknown suite '" + cfg.suite + "'");
  if (cfg.i_max < 0) throw ConfigError("--imax must be >= 0");
  if (cfg.radius < 1) throw ConfigError("--radius must be >= 1");
  hw::VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.i_max = cfg.i_max;
  vc.radius = cfg.radius;
  if (cfg.wt_bound) vc.wt_bound = *cfg.wt_bound;
  std::tie(vc.c_lo, vc.c_hi) = parse_range(cfg.c_range);
  const std::vector<hw::PropertyResult> results = hw::run_suite(cfg.suite, vc);

  bool ok = true;
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : results)
      j.push_back({{"suite", r.suite}, {"property", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    os << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "suite,property,passed\n";
    for (const auto& r : results) os << r.suite << ",\"" << r.name << "\"," << (r.passed ? "true" : "false") << '\n';
  } else {
    for (const auto& r : results) {
      os << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
      if (!r.passed) os << "  -- " << r.detail;
      os << '\n';
    }
  }
  for (const auto& r : results) ok = ok && r.passed;
  emit(cfg, os.str());
  return ok ? kOk : kFailure;
}

int cmd_calc(const RunConfig& cfg) {
  if (cfg.n < 2) throw ConfigError("--n must be >= 2");
  try {
    emit(cfg, hw::render(hw::evaluate_expression(cfg.expr, cfg.n)) + '\n');
  } catch (const hw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n'
              << "  " << cfg.expr << '\n'
              << "  " << std::string(std::min(e.position(), cfg.expr.size()), ' ') << "^\n";
    return kUsage;
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the iterated wreath product W_n of copies of Z"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto* chain = app.add_subcommand("chain", "Normalizer chain growth table");
  chain->add_option("--n", cfg.n, "Number of layers (>= 2)");
  chain->add_option("--imax", cfg.i_max, "Last chain index");
  chain->add_option("--wt-bound", cfg.wt_bound, "Closure weight bound (default 2*(imax+2))");
  chain->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  chain->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--suite", cfg.suite, "group|formulas|phi|centers|chain|regular|all")->required();
  verify->add_option("--seed", cfg.seed, "Random seed");
  verify->add_option("--imax", cfg.i_max, "Last growth row for the chain suite");
  verify->add_option("--wt-bound", cfg.wt_bound, "Closure weight bound for normalizer steps");
  verify->add_option("--radius", cfg.radius, "Orbit grid radius for the regular suite");
  verify->add_option("--c-range", cfg.c_range, "Parameter range a..b for the regular suite");
  verify->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  verify->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* calc = app.add_subcommand("calc", "Evaluate an element expression");
  calc->add_option("expr", cfg.expr, "Expression, e.g. \"comm([x1]D2, [1]D1)\"")->required();
  calc->add_option("--n", cfg.n, "Number of layers");
  calc->add_option("--out", cfg.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (chain->parsed()) return cmd_chain(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_calc(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
