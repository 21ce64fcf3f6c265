#pragma once

// Checkers for the supercongruences, their x = 1/2 specializations, the
// binomial-transform congruences and the auxiliary congruences behind them.
// Each check computes the two sides along independent code paths and
// compares them in the stated residue ring.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhsc/exact.hpp"
#include "mhsc/sums.hpp"

namespace mhsc {

enum class Statement {
  kSI1,    // mod p^2 supercongruence with S_k({1}^r)
  kSI2,    // mod p^3 supercongruence with S_k({2}^r)
  kCI1,    // kSI1 at x = 1/2
  kCI2,    // kSI2 at x = 1/2
  kA1,     // sum (x)_k/(1)_k a_k == T_{<-x>} mod p
  kA2,     // two-Pochhammer analog with A_j, mod p^2
  kAuxA,   // S_{p-1}({1}^r) == 0 mod p
  kAuxB,   // S_{p-1}({1}^r, 2) == B_{p-r-2} mod p
  kAuxC1,  // S_{p-1}({2}^r) == 2p B_{p-2r-1} / (2r+1) mod p^2
  kAuxC2,  // S_{p-1}({2}^r, 3) == -2r B_{p-2r-3} mod p
  kAuxD1,  // C(2p-1, p-1) == 1 mod p^3
  kAuxD2,  // C(2p-1, p+j) == (-1)^j (1 - 2p H_j) mod p^2
  kAuxD3,  // (x)_p (1-x)_p / (1)_p^2 == s(1-s)(1 + 2p H_{<-x>}) mod p^2
  kAuxE,   // H^(t)_{<-x>} == (-1)^t (B_{p-t}(x) - B_{p-t}) / t mod p
};

std::string_view statement_name(Statement s);

enum class LhsMode {
  kAuto,     // exact rationals for p <= kExactLhsMaxPrime, modular above
  kExact,    // sum exactly, reduce once
  kModular,  // accumulate term by term modulo p^k
};

inline constexpr unsigned long kExactLhsMaxPrime = 50;

struct CheckOptions {
  LhsMode lhs_mode = LhsMode::kAuto;
  // Adds one to the right-hand side. Only used to prove the comparator can
  // fail.
  bool perturb_rhs = false;
};

struct CongruenceReport {
  Statement statement = Statement::kSI1;
  unsigned long p = 0;
  std::optional<unsigned> r;
  std::optional<Rational> x;
  // Secondary index: t for kAuxE, j for kAuxD2, sequence number for kA1/kA2.
  std::optional<unsigned> index;
  std::string sequence_id;
  std::optional<Residue> lhs;
  std::optional<Residue> rhs;
  bool pass = false;
  std::string skip_reason;

  bool skipped() const { return !skip_reason.empty(); }
};

// {0, 1, 1/2, 1/3, 2/3, 1/4, 3/4, 1/6, 5, -7/5}
std::vector<Rational> default_x_set();

// sum_{k=1}^{p-1} (x)_k/(1)_k S_k({1}^r)/k
//   == -H^(r+1)_{<-x>} - (-1)^r s p B_{p-r-2}(x)   (mod p^2), p > r+3.
CongruenceReport check_si1(unsigned long p, const Rational& x, unsigned r, const CheckOptions& opts = {});

// sum_{k=1}^{p-1} (x)_k(1-x)_k/(1)_k^2 S_k({2}^r)/k
//   == -2H^(2r+1) - 2(2r+1) s p H^(2r+2)
//      + 2s(1 + 3sr + 2sr^2)/(2r+3) p^2 B_{p-2r-3}(x)          (mod p^3), p > 2r+3.
CongruenceReport check_si2(unsigned long p, const Rational& x, unsigned r, const CheckOptions& opts = {});

CongruenceReport check_ci1(unsigned long p, unsigned r, const CheckOptions& opts = {});
CongruenceReport check_ci2(unsigned long p, unsigned r, const CheckOptions& opts = {});

CongruenceReport check_a1(unsigned long p, const Rational& x, const Sequence& a,
                          std::string sequence_id = {}, const CheckOptions& opts = {});
CongruenceReport check_a2(unsigned long p, const Rational& x, const Sequence& a,
                          std::string sequence_id = {}, const CheckOptions& opts = {});

// Statements kAuxA..kAuxE for one prime. Out-of-range parameters come back
// as skipped reports.
std::vector<CongruenceReport> check_aux_suite(unsigned long p, unsigned r_max,
                                              const std::vector<Rational>& x_set = default_x_set());

}  // namespace mhsc
