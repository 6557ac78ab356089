// abelcheck: runs the named verification checks and the standalone tools.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "abelcheck/checks.hpp"

namespace {

using namespace abelcheck;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    write_atomically(path, text);
}

int run_verify(const RunConfig& cfg, const std::string& suite) {
  const auto ids = suite_ids(suite);
  const auto reports = run_checks(ids, cfg);
  emit(render_report(reports, cfg.format), cfg.report_path);
  if (!cfg.report_path.empty() && cfg.format == "json") std::cout << render_report(reports, "text");
  return exit_status(reports) == 0 ? kExitOk : kExitCheckFailure;
}

int run_scan(const RunConfig& cfg, int d, std::uint64_t q) {
  if (d != 9 && d != 11) throw ConfigError("--d must be 9 or 11");
  if (!is_prime(q) || (q - 1) % static_cast<std::uint64_t>(d) != 0)
    throw ConfigError("--prime must be a prime q with " + std::to_string(d) + " | q-1");
  const auto c = scan_strata(d, q, cfg.workers);
  std::cout << census_csv({c});
  std::cout << "# points " << c.total() << " of " << projective_count(q, c.n) << ", minimal rank " << c.min_rank
            << " at " << c.min_points.size() << " point(s)\n";
  return kExitOk;
}

int run_hilbert(const RunConfig& cfg, long lambda, long mu, unsigned max_deg) {
  if (lambda == 0 && mu == 0) throw ConfigError("--lambda and --mu cannot both be 0");
  if (max_deg < 1) throw ConfigError("--max-deg must be >= 1");
  const auto h = graded_hilbert(as_ideal(j_family(Rational(lambda), Rational(mu))), max_deg, cfg.rank_options());
  const auto want = abelian_surface_profile(max_deg);
  std::cout << "t,HF,9t^2,method\n";
  for (unsigned t = 0; t <= max_deg; ++t)
    std::cout << t << ',' << h.values[t] << ',' << want[t] << ',' << h.method[t] << '\n';
  return h.values == want ? kExitOk : kExitCheckFailure;
}

int run_chars() {
  const auto& t = character_table();
  const auto& g = PSL211::instance();
  std::cout << "order " << g.order() << ", class sizes";
  for (auto s : g.class_sizes()) std::cout << ' ' << s;
  std::cout << '\n';
  for (const std::string name : {"chi2", "chi3"})
    for (int k : {2, 3}) {
      const auto& row = t.rows[checks::row_index(t, name)];
      const auto m = decompose(sym_power_character(row, k, g), t, g.class_sizes());
      std::cout << "Sym^" << k << '(' << name << ") = " << describe_decomposition(m, t) << '\n';
    }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification checks for Heisenberg-invariant abelian surfaces"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value config file")->check(CLI::ExistingFile);
  std::optional<unsigned> workers;
  app.add_option("--workers", workers, "threads for finite-field scans")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run a suite of checks");
  std::string suite;
  std::optional<std::string> report_path, format;
  verify->add_option("--suite", suite, "all, d11, d9, chars, hilbert or scan")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--report", report_path, "write the report to PATH");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* scan = app.add_subcommand("scan", "rank strata of the odd block over F_q");
  int d = 0;
  std::uint64_t prime = 0;
  scan->add_option("--d", d, "level, 9 or 11")->required();
  scan->add_option("--prime", prime, "prime q with d | q-1")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of J(lambda:mu)");
  long lambda = 0, mu = 0;
  unsigned max_deg = 5;
  hilbert->add_option("--lambda", lambda)->required();
  hilbert->add_option("--mu", mu)->required();
  hilbert->add_option("--max-deg", max_deg)->required();

  auto* chars = app.add_subcommand("chars", "symmetric powers of the 5-dimensional characters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (workers) cfg.workers = *workers;
    if (report_path) cfg.report_path = *report_path;
    if (format) cfg.format = *format;
    cfg.validate();
    if (*verify) return run_verify(cfg, suite);
    if (*scan) return run_scan(cfg, d, prime);
    if (*hilbert) return run_hilbert(cfg, lambda, mu, max_deg);
    if (*chars) return run_chars();
  } catch (const ConfigError& e) {
    std::cerr << "abelcheck: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "abelcheck: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  return kExitUsage;
}
