#pragma once

// Verification sweeps over parameter grids and their JSON / CSV / text
// reports.

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "mhsc/congruence.hpp"
#include "mhsc/exact.hpp"

namespace mhsc {

enum class ReportFormat { kJson, kCsv, kText };

ReportFormat parse_format(const std::string& name);

struct SweepConfig {
  // Subset of: si1 si2 ci1 ci2 a1 a2 aux he ta pdf1 pdf2 heq taq catalan qlimit
  std::set<std::string> statements;
  unsigned long p_min = 5;
  unsigned long p_max = 97;
  unsigned r_min = 0;
  unsigned r_max = 5;
  std::vector<std::string> x_values = {"0", "1", "1/2", "1/3", "2/3", "1/4", "3/4", "1/6", "5", "-7/5"};
  // Exact identity grid: 1 <= n <= n_max, r_min <= r <= r_max.
  unsigned n_max = 30;
  // q-analog grids.
  unsigned heq_n_max = 10;
  unsigned taq_n_max = 8;
  unsigned q_r_max = 3;
  unsigned qlimit_n_max = 6;
  // Random sequences per (p, x) for a1/a2, plus the constant sequence a_k = 1.
  unsigned sequences = 100;
  // Random instances for pdf1/pdf2.
  unsigned pdf_instances = 200;
  unsigned long catalan_terms = 1'000'000;
  std::uint64_t seed = 20240601;
  ReportFormat format = ReportFormat::kJson;
  bool perturb_rhs = false;

  static const std::set<std::string>& known_statements();
  // Throws ConfigError.
  void validate() const;
  std::vector<Rational> parsed_x() const;
};

enum class RecordStatus { kPass, kFail, kSkip };

struct SweepRecord {
  std::string statement;
  std::optional<long> p;
  std::optional<long> r;
  std::optional<Rational> x;
  std::optional<long> n;
  std::optional<std::string> modulus;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
  RecordStatus status = RecordStatus::kSkip;
  std::optional<std::string> reason;
};

SweepRecord to_record(const CongruenceReport& report);

struct SweepSummary {
  std::vector<SweepRecord> records;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

// Checks each grid point once; domain errors become skip records. Records
// are sorted by (statement, p, r, x, n), generation order breaking ties.
SweepSummary run_suite(const SweepConfig& config);

void emit_report(const SweepSummary& summary, ReportFormat format, std::ostream& out);

// Exit status: 0 when nothing failed, 1 otherwise.
int exit_code(const SweepSummary& summary);

// Reproducible p-integral test sequence: values num/den with |num| <= 20 and
// 1 <= den <= 20, p not dividing den.
std::vector<Rational> random_p_integral_sequence(std::uint64_t seed, unsigned long p, unsigned length);

}  // namespace mhsc
