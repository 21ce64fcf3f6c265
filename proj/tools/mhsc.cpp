// mhsc: verification sweeps for multiple-harmonic-sum supercongruences and
// the identities around them.
//
//   mhsc verify --statements si1,si2 --p-max 97 --format json --out report.json
//   mhsc selftest
//   mhsc catalan --terms 1000000

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mhsc/identities.hpp"
#include "mhsc/sweep.hpp"

namespace {

constexpr int kExitConfigError = 2;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int write_report(const mhsc::SweepSummary& summary, mhsc::ReportFormat format, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    mhsc::emit_report(summary, format, std::cout);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return kExitConfigError;
    }
    mhsc::emit_report(summary, format, file);
  }
  std::cerr << "pass=" << summary.passed << " fail=" << summary.failed << " skip=" << summary.skipped << "\n";
  return mhsc::exit_code(summary);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of multiple harmonic sum supercongruences and related identities"};
  app.require_subcommand(1);

  mhsc::SweepConfig config;
  config.statements = {"si1", "si2", "ci1", "ci2", "a1",  "a2",      "aux",   "he",
                       "ta",  "pdf1", "pdf2", "heq", "taq", "catalan", "qlimit"};
  std::string statements = "all";
  std::string x_list;
  std::string format = "json";
  std::string out_path;

  auto* verify = app.add_subcommand("verify", "Run a verification sweep and emit a report");
  verify->add_option("--statements", statements,
                     "Comma-separated subset of si1,si2,ci1,ci2,a1,a2,aux,he,ta,pdf1,pdf2,heq,taq,catalan,qlimit "
                     "(default: all)");
  verify->add_option("--p-min", config.p_min, "Smallest prime")->capture_default_str();
  verify->add_option("--p-max", config.p_max, "Largest prime")->capture_default_str();
  verify->add_option("--r-min", config.r_min, "Smallest r")->capture_default_str();
  verify->add_option("--r-max", config.r_max, "Largest r")->capture_default_str();
  verify->add_option("--x", x_list, "Comma-separated rationals a/b (default: 0,1,1/2,1/3,2/3,1/4,3/4,1/6,5,-7/5)");
  verify->add_option("--n-max", config.n_max, "Largest n for he/ta")->capture_default_str();
  verify->add_option("--heq-n-max", config.heq_n_max, "Largest n for heq")->capture_default_str();
  verify->add_option("--taq-n-max", config.taq_n_max, "Largest n for taq")->capture_default_str();
  verify->add_option("--q-r-max", config.q_r_max, "Largest r for heq/taq/qlimit")->capture_default_str();
  verify->add_option("--qlimit-n-max", config.qlimit_n_max, "Largest n for qlimit")->capture_default_str();
  verify->add_option("--sequences", config.sequences, "Random sequences per (p, x) for a1/a2")
      ->capture_default_str();
  verify->add_option("--pdf-instances", config.pdf_instances, "Random instances for pdf1/pdf2")
      ->capture_default_str();
  verify->add_option("--terms", config.catalan_terms, "Terms of the Catalan series")->capture_default_str();
  verify->add_option("--seed", config.seed, "Seed for randomized sequences")->capture_default_str();
  verify->add_option("--format", format, "json, csv or text")->capture_default_str();
  verify->add_option("--out", out_path, "Output file (default: stdout)");
  verify->add_flag("--inject-rhs-error", config.perturb_rhs,
                   "Add one to every congruence right-hand side (exercises the failure path)");

  auto* selftest = app.add_subcommand("selftest", "Perturb every si1 right-hand side by one and expect failures");
  selftest->add_option("--p-min", config.p_min, "Smallest prime")->capture_default_str();
  selftest->add_option("--p-max", config.p_max, "Largest prime")->capture_default_str();

  unsigned long terms = 1'000'000;
  auto* catalan = app.add_subcommand("catalan", "Partial sum of the Catalan-constant series against 4G/pi");
  catalan->add_option("--terms", terms, "Number of terms")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (*verify) {
      if (statements != "all") {
        const auto names = split_csv(statements);
        config.statements = std::set<std::string>(names.begin(), names.end());
      }
      if (!x_list.empty()) config.x_values = split_csv(x_list);
      config.format = mhsc::parse_format(format);
      const auto summary = mhsc::run_suite(config);
      return write_report(summary, config.format, out_path);
    }
    if (*selftest) {
      config.statements = {"si1"};
      config.perturb_rhs = true;
      const auto summary = mhsc::run_suite(config);
      const std::size_t checked = summary.passed + summary.failed;
      std::cout << "perturbed si1 grid points: " << checked << ", detected: " << summary.failed << "\n";
      if (checked == 0 || summary.passed != 0) {
        std::cout << "selftest FAILED: comparator missed a perturbed right-hand side\n";
        return 1;
      }
      std::cout << "selftest passed\n";
      return 0;
    }
    if (*catalan) {
      const auto res = mhsc::catalan_series(terms);
      std::printf("terms    %lu\npartial  %.15f\ntarget   %.15f\n|diff|   %.3e\n", terms, res.partial_sum,
                  res.target, std::fabs(res.partial_sum - res.target));
      return 0;
    }
  } catch (const mhsc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return 0;
}
