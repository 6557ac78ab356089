#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "abelcheck/checks.hpp"

using namespace abelcheck;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(fs::path(ABELCHECK_GOLDEN_DIR) / name); }

void expect_matches_golden(const SkewMatrix<QPoly>& m, const std::string& name) {
  std::istringstream in(golden(name));
  std::string line;
  std::size_t i = 0;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::size_t j = 0;
    while (std::getline(cells, cell, '|')) {
      EXPECT_EQ(m.at(i, j), parse_poly(trim_copy(cell), m.zero().nvars())) << name << " (" << i << "," << j << ")";
      ++j;
    }
    EXPECT_EQ(j, m.size());
    ++i;
  }
  EXPECT_EQ(i, m.size());
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ABELCHECK_CLI) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

CheckReport report(std::string id, Status s) {
  CheckReport r;
  r.check_id = std::move(id);
  r.status = s;
  r.details = {{"claim", "c"}};
  return r;
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("abelcheck_test_" + name); }

}  // namespace

TEST(Golden, ConstructedMatrices) {
  expect_matches_golden(s_matrix_d11(), "s_matrix_d11.txt");
  expect_matches_golden(s_matrix_d9(), "s_matrix_d9.txt");
  const auto k = klein_from_hyperplanes();
  expect_matches_golden(k.m, "klein_matrix.txt");
  expect_matches_golden(pfaffian_adjugate(k.m), "klein_adjugate.txt");
}

TEST(Golden, KernelVectorAndCensus) {
  std::istringstream in(golden("theta9.txt"));
  std::string line;
  std::vector<QPoly> want;
  while (std::getline(in, line)) want.push_back(parse_poly(line, 5));
  EXPECT_EQ(theta9_closed_form(), want);
  EXPECT_EQ(census_csv({scan_strata(9, 19)}), golden("census_d9_q19.csv"));
}

TEST(Golden, SuiteReportIsDeterministic) {
  const RunConfig cfg;
  const auto a = report_json(run_suite("d9", cfg), false).dump(2);
  const auto b = report_json(run_suite("d9", cfg), false).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a + "\n", golden("report_d9.json"));
}

TEST(Checks, RegistryIsWellFormed) {
  std::set<std::string> ids;
  for (const auto& d : all_checks()) {
    EXPECT_TRUE(ids.insert(d.id).second) << d.id;
    EXPECT_NE(std::find(suite_names().begin(), suite_names().end(), d.suite), suite_names().end());
  }
  for (const auto& s : suite_names()) EXPECT_FALSE(suite_ids(s).empty()) << s;
  EXPECT_EQ(suite_ids("all").size(), all_checks().size());
  EXPECT_THROW(suite_ids("d10"), ConfigError);
}

TEST(Checks, ConfigParsing) {
  std::istringstream in(
      "# comment\nprimes = 3, 7\nscan_primes=9:37\nt_max=3\nlambda_mu_samples=1:1,2:-1\n\nworkers=2\nformat=json\n");
  const RunConfig c = parse_config(in);
  EXPECT_EQ(c.primes, (std::vector<std::uint64_t>{3, 7}));
  EXPECT_EQ(c.scan_primes, (std::map<int, std::uint64_t>{{9, 37}}));
  EXPECT_EQ(c.t_max, 3u);
  EXPECT_EQ(c.lambda_mu_samples, (std::vector<std::pair<long, long>>{{1, 1}, {2, -1}}));
  EXPECT_EQ(c.workers, 2u);
  EXPECT_EQ(c.format, "json");
  EXPECT_NO_THROW(c.validate());
}

TEST(Checks, ConfigErrors) {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return parse_config(in);
  };
  EXPECT_THROW(parse("colour=red\n"), ConfigError);
  EXPECT_THROW(parse("t_max\n"), ConfigError);
  EXPECT_THROW(parse("t_max=-3\n"), ConfigError);
  EXPECT_THROW(parse("scan_primes=9-19\n"), ConfigError);
  EXPECT_THROW(parse("scan_primes=9:23\n").validate(), ConfigError);
  EXPECT_THROW(parse("scan_primes=7:29\n").validate(), ConfigError);
  EXPECT_THROW(parse("t_max=1\n").validate(), ConfigError);
  EXPECT_THROW(parse("primes=2,3\n").validate(), ConfigError);
  EXPECT_THROW(parse("primes=9\n").validate(), ConfigError);
  EXPECT_THROW(parse("lambda_mu_samples=0:0,1:1\n").validate(), ConfigError);
  EXPECT_THROW(parse("format=xml\n").validate(), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/abelcheck.conf"), ConfigError);
  EXPECT_THROW(run_suite("d9", parse("t_max=1\n")), ConfigError);
}

TEST(Checks, RenderEmpty) {
  EXPECT_EQ(render_report({}, "json"), "[]\n");
  EXPECT_EQ(render_report({}, "text"), "0 passed, 0 failed, 0 warnings\n");
  EXPECT_EQ(exit_status({}), 0);
}

TEST(Checks, RenderOrdering) {
  const std::vector<CheckReport> rs{report("b.pass", Status::pass), report("c.fail", Status::fail),
                                    report("a.warn", Status::warn)};
  const std::string text = render_report(rs, "text");
  EXPECT_EQ(text.rfind("c.fail", 0), 0u);
  EXPECT_NE(text.find("1 passed, 1 failed, 1 warnings\n"), std::string::npos);
  const auto j = json::parse(render_report(rs, "json"));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["check_id"], "a.warn");
  EXPECT_EQ(j[2]["check_id"], "c.fail");
  for (const auto& o : j) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : o.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"check_id", "status", "details", "elapsed_ms"}));
  }
  EXPECT_EQ(exit_status(rs), 1);
  EXPECT_EQ(exit_status({report("x", Status::warn)}), 0);
  EXPECT_THROW(render_report(rs, "yaml"), ConfigError);
}

TEST(Checks, AtomicWrite) {
  const fs::path p = temp_path("atomic.json");
  write_atomically(p.string(), "first\n");
  write_atomically(p.string(), "second\n");
  EXPECT_EQ(slurp(p), "second\n");
  fs::path tmp = p;
  tmp += ".tmp";
  EXPECT_FALSE(fs::exists(tmp));
  fs::remove(p);
  EXPECT_THROW(write_atomically("/nonexistent/dir/r.json", "x"), ConfigError);
}

TEST(Checks, ConfiguredPrimesAreScanned) {
  RunConfig cfg;
  cfg.primes = {3};
  const auto rs = run_checks({"klein.jacobian"}, cfg);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].status, Status::pass);
  EXPECT_EQ(rs[0].details["scans"].size(), 1u);
}

TEST(Checks, CharacterChecksReportEveryLabeling) {
  const auto rs = run_checks({"chars.sym2", "chars.sym2.invariant", "chars.sym3.invariant"}, RunConfig{});
  ASSERT_EQ(rs.size(), 3u);
  EXPECT_EQ(rs[0].details["labelings"].size(), 4u);
  EXPECT_EQ(rs[0].details["labelings"][0]["chi3"], "chi2+chi5");
  EXPECT_EQ(rs[1].status, Status::pass);
  EXPECT_EQ(rs[2].status, Status::pass);
}

TEST(Checks, WarnOnlyScanNeverFails) {
  RunConfig cfg;
  cfg.scan_primes[11] = 23;
  const auto rs = run_checks({"scan.d11.q23"}, cfg);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_NE(rs[0].status, Status::fail);
  EXPECT_TRUE(rs[0].details["heuristic_windows"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("verify --suite d9"), 0);
  EXPECT_EQ(run_cli("verify --suite chars"), 1);
  EXPECT_EQ(run_cli("verify --suite nope"), 2);
  EXPECT_EQ(run_cli("verify"), 2);
  EXPECT_EQ(run_cli(""), 2);
  EXPECT_EQ(run_cli("scan --d 9 --prime 19"), 0);
  EXPECT_EQ(run_cli("scan --d 9 --prime 23"), 2);
  EXPECT_EQ(run_cli("scan --d 7 --prime 29"), 2);
  EXPECT_EQ(run_cli("hilbert --lambda 1 --mu 2 --max-deg 3"), 0);
  EXPECT_EQ(run_cli("hilbert --lambda 0 --mu 0 --max-deg 3"), 2);
  EXPECT_EQ(run_cli("chars"), 0);
  EXPECT_EQ(run_cli("--help"), 0);
}

TEST(Cli, ConfigFileAndReport) {
  const fs::path conf = temp_path("cli.conf"), out = temp_path("cli_report.json");
  {
    std::ofstream c(conf);
    c << "t_max=3\nlambda_mu_samples=1:1,1:2\n";
  }
  EXPECT_EQ(run_cli("--config " + conf.string() + " verify --suite hilbert --format json --report " + out.string()),
            0);
  const auto j = json::parse(slurp(out));
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["check_id"], "d9.hilbert.cubic_gap");
  EXPECT_EQ(j[1]["check_id"], "d9.hilbert.faces");
  EXPECT_EQ(j[2]["details"]["t_max"], 3);
  {
    std::ofstream c(conf);
    c << "scan_primes=9:23\n";
  }
  EXPECT_EQ(run_cli("--config " + conf.string() + " verify --suite d9"), 2);
  EXPECT_EQ(run_cli("--config /nonexistent/x.conf verify --suite d9"), 2);
  fs::remove(conf);
  fs::remove(out);
}
