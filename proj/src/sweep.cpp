#include "mhsc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <tuple>

#include "json.hpp"
#include "mhsc/identities.hpp"
#include "mhsc/qseries.hpp"

namespace mhsc {

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "text") return ReportFormat::kText;
  throw ConfigError("unknown format '" + name + "' (expected json, csv or text)");
}

const std::set<std::string>& SweepConfig::known_statements() {
  static const std::set<std::string> names = {"si1", "si2", "ci1", "ci2",  "a1",  "a2",      "aux",   "he",
                                              "ta",  "pdf1", "pdf2", "heq", "taq", "catalan", "qlimit"};
  return names;
}

void SweepConfig::validate() const {
  for (const auto& s : statements) {
    if (!known_statements().contains(s)) throw ConfigError("unknown statement '" + s + "'");
  }
  if (p_min < 2) throw ConfigError("p-min must be >= 2");
  if (p_min > p_max) throw ConfigError("empty prime range");
  if (r_min > r_max) throw ConfigError("empty r range");
  if (catalan_terms == 0) throw ConfigError("catalan needs at least one term");
  parsed_x();
}

std::vector<Rational> SweepConfig::parsed_x() const {
  std::vector<Rational> out;
  out.reserve(x_values.size());
  for (const auto& s : x_values) out.push_back(parse_rational(s));
  if (out.empty()) throw ConfigError("x list is empty");
  return out;
}

SweepRecord to_record(const CongruenceReport& report) {
  SweepRecord rec;
  rec.statement = std::string(statement_name(report.statement));
  rec.p = static_cast<long>(report.p);
  if (report.r) rec.r = *report.r;
  rec.x = report.x;
  if (report.index) rec.n = *report.index;
  if (report.skipped()) {
    rec.status = RecordStatus::kSkip;
    rec.reason = report.skip_reason;
    return rec;
  }
  rec.modulus = report.lhs->modulus_string();
  rec.lhs = to_string(*report.lhs);
  rec.rhs = to_string(*report.rhs);
  rec.status = report.pass ? RecordStatus::kPass : RecordStatus::kFail;
  if (!report.sequence_id.empty()) rec.reason = "sequence=" + report.sequence_id;
  return rec;
}

std::vector<Rational> random_p_integral_sequence(std::uint64_t seed, unsigned long p, unsigned length) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> num_dist(-20, 20);
  std::uniform_int_distribution<long> den_dist(1, 20);
  std::vector<Rational> out;
  out.reserve(length);
  for (unsigned k = 0; k < length; ++k) {
    long den = den_dist(rng);
    while (den % static_cast<long>(p) == 0) den = den_dist(rng);
    out.push_back(make_rational(num_dist(rng), den));
  }
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  // splitmix64 over the combined key
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SweepRecord skip_record(std::string statement, std::optional<long> p, std::optional<long> r,
                        std::optional<Rational> x, std::optional<long> n, std::string reason) {
  SweepRecord rec;
  rec.statement = std::move(statement);
  rec.p = p;
  rec.r = r;
  rec.x = std::move(x);
  rec.n = n;
  rec.status = RecordStatus::kSkip;
  rec.reason = std::move(reason);
  return rec;
}

SweepRecord identity_record(std::string statement, std::optional<long> r, std::optional<Rational> x, long n,
                            const IdentitySides& sides) {
  SweepRecord rec;
  rec.statement = std::move(statement);
  rec.r = r;
  rec.x = std::move(x);
  rec.n = n;
  rec.lhs = to_string(sides.lhs);
  rec.rhs = to_string(sides.rhs);
  rec.status = sides.holds() ? RecordStatus::kPass : RecordStatus::kFail;
  return rec;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

class SuiteRunner {
 public:
  explicit SuiteRunner(const SweepConfig& config)
      : config_(config),
        primes_(primes_between(config.p_min, config.p_max)),
        xs_(config.parsed_x()) {
    opts_.perturb_rhs = config.perturb_rhs;
  }

  std::vector<SweepRecord> run() {
    const auto& want = config_.statements;
    if (want.contains("si1")) congruence_grid("si1", false);
    if (want.contains("si2")) congruence_grid("si2", true);
    if (want.contains("ci1")) specialization_grid("ci1", false);
    if (want.contains("ci2")) specialization_grid("ci2", true);
    if (want.contains("a1")) transform_grid("a1", false);
    if (want.contains("a2")) transform_grid("a2", true);
    if (want.contains("aux")) aux();
    if (want.contains("he")) exact_identity("he", false);
    if (want.contains("ta")) exact_identity("ta", true);
    if (want.contains("pdf1")) pdf("pdf1", false);
    if (want.contains("pdf2")) pdf("pdf2", true);
    if (want.contains("heq")) q_identity("heq", false);
    if (want.contains("taq")) q_identity("taq", true);
    if (want.contains("qlimit")) q_limit();
    if (want.contains("catalan")) catalan();
    return std::move(records_);
  }

 private:
  template <typename Check>
  void guarded(const std::string& name, std::optional<long> p, std::optional<long> r, std::optional<Rational> x,
               std::optional<long> n, Check&& check) {
    try {
      check();
    } catch (const MathError& e) {
      records_.push_back(skip_record(name, p, r, std::move(x), n, e.what()));
    }
  }

  void congruence_grid(const std::string& name, bool second) {
    for (unsigned long p : primes_) {
      for (unsigned r = config_.r_min; r <= config_.r_max; ++r) {
        for (const auto& x : xs_) {
          guarded(name, static_cast<long>(p), r, x, {}, [&] {
            records_.push_back(to_record(second ? check_si2(p, x, r, opts_) : check_si1(p, x, r, opts_)));
          });
        }
      }
    }
  }

  void specialization_grid(const std::string& name, bool second) {
    const Rational half = make_rational(1, 2);
    for (unsigned long p : primes_) {
      for (unsigned r = config_.r_min; r <= config_.r_max; ++r) {
        guarded(name, static_cast<long>(p), r, half, {}, [&] {
          const auto ci = second ? check_ci2(p, r, opts_) : check_ci1(p, r, opts_);
          const auto si = second ? check_si2(p, half, r, opts_) : check_si1(p, half, r, opts_);
          SweepRecord rec = to_record(ci);
          if (!(*ci.rhs == *si.rhs)) {
            rec.status = RecordStatus::kFail;
            rec.reason = "rhs differs from " + std::string(second ? "si2" : "si1") + " at x=1/2 (" +
                         to_string(*si.rhs) + ")";
          }
          records_.push_back(std::move(rec));
        });
      }
    }
  }

  void transform_grid(const std::string& name, bool second) {
    for (unsigned long p : primes_) {
      for (std::size_t xi = 0; xi < xs_.size(); ++xi) {
        const Rational& x = xs_[xi];
        for (unsigned i = 0; i <= config_.sequences; ++i) {
          std::vector<Rational> values;
          std::string id;
          if (i == 0) {
            values.assign(p, Rational(1));
            id = "ones";
          } else {
            const std::uint64_t s = mix(config_.seed, xi, i);
            values = random_p_integral_sequence(s, p, static_cast<unsigned>(p));
            id = "random#" + std::to_string(i) + " seed=" + std::to_string(config_.seed);
          }
          const Sequence a = [&values](unsigned k) { return values[k]; };
          guarded(name, static_cast<long>(p), {}, x, i, [&] {
            auto rep = second ? check_a2(p, x, a, id, opts_) : check_a1(p, x, a, id, opts_);
            rep.index = i;
            records_.push_back(to_record(rep));
          });
        }
      }
    }
  }

  void aux() {
    for (unsigned long p : primes_) {
      guarded("aux", static_cast<long>(p), {}, {}, {}, [&] {
        for (const auto& rep : check_aux_suite(p, config_.r_max, xs_)) {
          if (rep.r && *rep.r < config_.r_min) continue;
          records_.push_back(to_record(rep));
        }
      });
    }
  }

  void exact_identity(const std::string& name, bool second) {
    for (unsigned n = 1; n <= config_.n_max; ++n) {
      for (unsigned r = config_.r_min; r <= config_.r_max; ++r) {
        guarded(name, {}, r, {}, n, [&] {
          records_.push_back(identity_record(name, r, {}, n, second ? ta_sides(n, r) : he_sides(n, r)));
        });
      }
    }
  }

  void pdf(const std::string& name, bool second) {
    for (unsigned i = 0; i < config_.pdf_instances; ++i) {
      std::mt19937_64 rng(mix(config_.seed, second ? 2 : 1, i));
      std::uniform_int_distribution<unsigned> n_dist(1, 8);
      std::uniform_int_distribution<long> part(1, 20);
      std::uniform_int_distribution<int> sign(0, 1);
      const unsigned n = n_dist(rng);
      std::vector<Rational> values(n);
      for (auto& v : values) v = make_rational(sign(rng) ? part(rng) : -part(rng), part(rng));
      const Sequence a = [&values](unsigned k) { return values[k]; };
      // Redraw x until it avoids every pole.
      for (;;) {
        const Rational x = make_rational(part(rng), part(rng));
        try {
          auto sides = second ? pdf2_sides(n, x, a) : pdf1_sides(n, x, a);
          SweepRecord rec = identity_record(name, {}, x, n, sides);
          rec.reason = "instance=" + std::to_string(i) + " seed=" + std::to_string(config_.seed);
          records_.push_back(std::move(rec));
          break;
        } catch (const PoleAtX&) {
        }
      }
    }
  }

  void q_identity(const std::string& name, bool second) {
    const unsigned n_max = second ? config_.taq_n_max : config_.heq_n_max;
    for (unsigned n = 1; n <= n_max; ++n) {
      for (unsigned r = 0; r <= config_.q_r_max; ++r) {
        guarded(name, {}, r, {}, n, [&] {
          SweepRecord rec;
          rec.statement = name;
          rec.r = r;
          rec.n = n;
          rec.status = (second ? verify_taq(n, r) : verify_heq(n, r)) ? RecordStatus::kPass : RecordStatus::kFail;
          records_.push_back(std::move(rec));
        });
      }
    }
  }

  void q_limit() {
    for (unsigned t = 1; t <= 2; ++t) {
      for (unsigned n = 0; n <= config_.qlimit_n_max; ++n) {
        for (unsigned r = 0; r <= config_.q_r_max; ++r) {
          guarded("qlimit", {}, r, {}, n, [&] {
            SweepRecord rec;
            rec.statement = "qlimit";
            rec.r = r;
            rec.n = n;
            const Rational limit = q_limit_value(n, t, r);
            const Rational expected = mhs_exact(n, ExponentVector::uniform(t, r));
            rec.lhs = to_string(limit);
            rec.rhs = to_string(expected);
            rec.status = limit == expected ? RecordStatus::kPass : RecordStatus::kFail;
            rec.reason = "t=" + std::to_string(t);
            records_.push_back(std::move(rec));
          });
        }
      }
    }
  }

  void catalan() {
    constexpr double kTolerance = 1e-5;
    const auto res = catalan_series(config_.catalan_terms);
    const double diff = std::fabs(res.partial_sum - res.target);
    SweepRecord rec;
    rec.statement = "catalan";
    rec.n = static_cast<long>(config_.catalan_terms);
    rec.lhs = format_double(res.partial_sum);
    rec.rhs = format_double(res.target);
    rec.status = diff < kTolerance ? RecordStatus::kPass : RecordStatus::kFail;
    rec.reason = "|diff|=" + format_double(diff) + " tolerance=1e-05";
    records_.push_back(std::move(rec));
  }

  const SweepConfig& config_;
  std::vector<unsigned long> primes_;
  std::vector<Rational> xs_;
  CheckOptions opts_;
  std::vector<SweepRecord> records_;
};

// nullopt sorts first.
template <typename T>
int compare_opt(const std::optional<T>& a, const std::optional<T>& b) {
  if (!a || !b) return static_cast<int>(a.has_value()) - static_cast<int>(b.has_value());
  if (*a < *b) return -1;
  if (*b < *a) return 1;
  return 0;
}

bool record_less(const SweepRecord& a, const SweepRecord& b) {
  if (a.statement != b.statement) return a.statement < b.statement;
  if (int c = compare_opt(a.p, b.p)) return c < 0;
  if (int c = compare_opt(a.r, b.r)) return c < 0;
  if (int c = compare_opt(a.x, b.x)) return c < 0;
  return compare_opt(a.n, b.n) < 0;
}

std::string_view status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::kPass: return "pass";
    case RecordStatus::kFail: return "fail";
    case RecordStatus::kSkip: return "skip";
  }
  return "?";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SweepSummary run_suite(const SweepConfig& config) {
  config.validate();
  SweepSummary summary;
  summary.records = SuiteRunner(config).run();
  std::stable_sort(summary.records.begin(), summary.records.end(), record_less);
  for (const auto& rec : summary.records) {
    switch (rec.status) {
      case RecordStatus::kPass: ++summary.passed; break;
      case RecordStatus::kFail: ++summary.failed; break;
      case RecordStatus::kSkip: ++summary.skipped; break;
    }
  }
  return summary;
}

int exit_code(const SweepSummary& summary) { return summary.failed == 0 ? 0 : 1; }

void emit_report(const SweepSummary& summary, ReportFormat format, std::ostream& out) {
  using nlohmann::ordered_json;
  switch (format) {
    case ReportFormat::kJson: {
      ordered_json arr = ordered_json::array();
      auto opt_int = [](const std::optional<long>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
      auto opt_str = [](const std::optional<std::string>& v) {
        return v ? ordered_json(*v) : ordered_json(nullptr);
      };
      for (const auto& rec : summary.records) {
        ordered_json o;
        o["statement"] = rec.statement;
        o["p"] = opt_int(rec.p);
        o["r"] = opt_int(rec.r);
        o["x"] = rec.x ? ordered_json(to_string(*rec.x)) : ordered_json(nullptr);
        o["n"] = opt_int(rec.n);
        o["modulus"] = opt_str(rec.modulus);
        o["lhs"] = opt_str(rec.lhs);
        o["rhs"] = opt_str(rec.rhs);
        o["status"] = std::string(status_name(rec.status));
        o["reason"] = opt_str(rec.reason);
        arr.push_back(std::move(o));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case ReportFormat::kCsv: {
      out << "statement,p,r,x,n,modulus,lhs,rhs,status,reason\n";
      auto num = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); };
      auto str = [](const std::optional<std::string>& v) { return v ? csv_field(*v) : std::string(); };
      for (const auto& rec : summary.records) {
        out << csv_field(rec.statement) << ',' << num(rec.p) << ',' << num(rec.r) << ','
            << (rec.x ? csv_field(to_string(*rec.x)) : std::string()) << ',' << num(rec.n) << ','
            << str(rec.modulus) << ',' << str(rec.lhs) << ',' << str(rec.rhs) << ',' << status_name(rec.status)
            << ',' << str(rec.reason) << '\n';
      }
      break;
    }
    case ReportFormat::kText: {
      struct Counts {
        std::size_t pass = 0, fail = 0, skip = 0;
      };
      std::map<std::string, Counts> by_statement;
      for (const auto& rec : summary.records) {
        auto& c = by_statement[rec.statement];
        if (rec.status == RecordStatus::kPass) ++c.pass;
        else if (rec.status == RecordStatus::kFail) ++c.fail;
        else ++c.skip;
      }
      char line[128];
      std::snprintf(line, sizeof line, "%-10s %8s %8s %8s\n", "statement", "pass", "fail", "skip");
      out << line;
      for (const auto& [name, c] : by_statement) {
        std::snprintf(line, sizeof line, "%-10s %8zu %8zu %8zu\n", name.c_str(), c.pass, c.fail, c.skip);
        out << line;
      }
      std::snprintf(line, sizeof line, "%-10s %8zu %8zu %8zu\n", "total", summary.passed, summary.failed,
                    summary.skipped);
      out << line;
      for (const auto& rec : summary.records) {
        if (rec.status != RecordStatus::kFail) continue;
        out << "FAIL " << rec.statement;
        if (rec.p) out << " p=" << *rec.p;
        if (rec.r) out << " r=" << *rec.r;
        if (rec.x) out << " x=" << to_string(*rec.x);
        if (rec.n) out << " n=" << *rec.n;
        if (rec.lhs) out << " lhs=" << *rec.lhs;
        if (rec.rhs) out << " rhs=" << *rec.rhs;
        if (rec.modulus) out << " mod " << *rec.modulus;
        if (rec.reason) out << " (" << *rec.reason << ")";
        out << '\n';
      }
      break;
    }
  }
}

}  // namespace mhsc
