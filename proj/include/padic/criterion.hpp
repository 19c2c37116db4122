#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/certified.hpp"
#include "padic/matrix.hpp"
#include "padic/resolvent.hpp"

namespace padic {

// Sampled series parameters mu = p^v for lo <= v <= hi.
struct MuRange {
  std::int64_t lo = 1;
  std::int64_t hi = 6;
};

enum class RecordStatus { pass, fail, undecided };

// One comparison ||(R(mu, A) - I)^k|| <= |mu|^k, decided on exponents.
struct CriterionRecord {
  std::uint64_t k = 0;
  std::int64_t mu_valuation = 0;
  // log_p ||(R - I)^k||; an upper bound when lhs_is_bound is set.
  NormExponent lhs_exponent = NormExponent::neg_inf();
  bool lhs_is_bound = false;
  // log_p |mu|^k = -k v(mu)
  NormExponent rhs_exponent = 0;
  RecordStatus status = RecordStatus::undecided;
  std::uint64_t truncation_order = 0;
  ExtInt certified_exponent = ExtInt::pos_inf();

  bool pass() const { return status == RecordStatus::pass; }
};

struct Witness {
  std::uint64_t k = 0;
  std::int64_t mu_valuation = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CriterionReport {
  std::string matrix_id;
  std::int64_t prime = 0;
  std::size_t dim = 0;
  // Canonical order: k ascending, then v(mu) ascending.
  std::vector<CriterionRecord> records;
  // True iff every record passed; undecided records make it false without
  // producing a witness.
  bool verdict = true;
  std::vector<Witness> witnesses;
  std::size_t undecided = 0;
};

struct CriterionOptions {
  std::string matrix_id = "matrix";
  // Independent v(mu) values are evaluated on this many threads. The report
  // does not depend on it.
  unsigned threads = 1;
  SeriesOptions series;
};

// [v_min, v_min + 5] with v_min = admissible_radius(A).
MuRange default_mu_range(const PadicMatrix& a);
// 2 K max(v) + 8: leaves every comparison decided with slack.
std::int64_t default_target(std::uint64_t max_k, const MuRange& range);

// Decides a single record from a certified value of (R - I)^k.
CriterionRecord decide_record(std::uint64_t k, std::int64_t mu_valuation, const SeriesResult& value);

// Checks ||(R(mu, A) - I)^k|| <= |mu|^k for k = 1..K and every sampled mu.
// Throws DomainError when the range leaves the admissible ball and
// InvalidInput for K == 0 or an empty range.
CriterionReport resolvent_contraction_check(const PadicMatrix& a, const MuRange& range,
                                            std::uint64_t max_k, std::int64_t target,
                                            const CriterionOptions& opts = {});

// ---------------------------------------------------------------------------
// forward direction: power contraction implies the resolvent bound
// ---------------------------------------------------------------------------

// The bound chain for one (k = m + 1, mu), checked term by term for m <= j <= N_t:
//   ||sum_j C(j,m) (mu A)^(j+1)|| <= sup_j ||C(j,m) (mu A)^(j+1)||        (sum_bounded_by_sup)
//   ||C(j,m) (mu A)^(j+1)|| <= |C(j,m)| |mu|^(j+1) ||A^(j+1)||             (term_bounded_by_product)
//   |C(j,m)| <= 1                                                         (binomial_unit_bound)
//   |mu|^(j+1) ||A^(j+1)|| <= |mu|^(m+1)                                  (power_bound)
// plus a tail certificate at least (m+1) v(mu) (tail_bound).
struct ChainRecord {
  std::uint64_t k = 0;
  std::int64_t mu_valuation = 0;
  std::uint64_t truncation_order = 0;
  std::uint64_t terms_checked = 0;
  bool sum_bounded_by_sup = true;
  bool term_bounded_by_product = true;
  bool binomial_unit_bound = true;
  bool power_bound = true;
  bool tail_bound = true;

  bool holds() const {
    return sum_bounded_by_sup && term_bounded_by_product && binomial_unit_bound && power_bound &&
           tail_bound;
  }
};

struct ForwardReport {
  PowerContractionReport powers;
  CriterionReport criterion;
  std::vector<ChainRecord> chain;
  bool passed = false;
};

// Throws InvalidInput unless power_contraction_check(A, M) holds.
ForwardReport forward_direction_suite(const PadicMatrix& a, std::uint64_t max_power,
                                      std::uint64_t max_k, const MuRange& range,
                                      std::int64_t target, const CriterionOptions& opts = {});

// ---------------------------------------------------------------------------
// converse direction: the resolvent bound implies power contraction
// ---------------------------------------------------------------------------

struct ConverseRecord {
  std::uint64_t k = 0;
  std::int64_t mu_valuation = 0;
  // (a) ||S_k(mu)|| <= 1
  NormExponent s_norm = NormExponent::neg_inf();
  bool s_bounded = false;
  // (b) A^(k+1) = (I - mu A)^(k+1) S_k(mu) to certified precision.
  Residual factorization;
  // (c) ||A^(k+1)|| <= ||(I - mu A)^(k+1)|| ||S_k|| <= max{1, ||mu A||, ..., ||mu^(k+1) A^(k+1)||}
  NormExponent power_norm = NormExponent::neg_inf();
  NormExponent factor_norm = NormExponent::neg_inf();
  NormExponent max_bound = 0;
  bool chain_holds = false;
};

// (d) The mu -> 0 step, realised on the increasing sequence v = v_lo, v_lo + 1, ...
struct ConverseLimit {
  std::uint64_t k = 0;
  // (v, log_p max{1, ||mu A||, ..., ||mu^(k+1) A^(k+1)||}) along the sweep.
  std::vector<std::pair<std::int64_t, NormExponent>> sweep;
  bool monotone = false;
  std::optional<std::int64_t> collapse_valuation;
  // log_p ||A^(k+1)||
  NormExponent conclusion = NormExponent::neg_inf();
  bool holds = false;
};

struct ConverseReport {
  CriterionReport criterion;
  std::vector<ConverseRecord> records;
  std::vector<ConverseLimit> limits;
  // A factorization residual exceeded its certificate: an implementation
  // fault, reported apart from the inequality checks.
  bool engine_fault = false;
  // Every inequality (a), (c), (d) held.
  bool inequalities_hold = false;
  bool passed = false;
};

// k runs over 0..K-1 so that (R - I)^(k+1) stays inside the checked grid.
// Throws InvalidInput unless the resolvent bound holds on the grid.
ConverseReport converse_direction_suite(const PadicMatrix& a, std::uint64_t max_k,
                                        const MuRange& range, std::int64_t target,
                                        const CriterionOptions& opts = {});

// ---------------------------------------------------------------------------
// violations
// ---------------------------------------------------------------------------

struct ViolationWitness {
  std::uint64_t k = 0;
  std::int64_t mu_valuation = 0;
  NormExponent lhs_exponent = NormExponent::neg_inf();
  NormExponent rhs_exponent = 0;
};

struct WitnessSearch {
  // Defaults to default_mu_range(A) / default_target(K, range).
  std::optional<MuRange> range;
  std::uint64_t max_k = 12;
  std::optional<std::int64_t> target;
  CriterionOptions criterion;
};

// For ||A|| = p^s > 1 returns k = 1 at v(mu) = s + 1, where the leading term
// mu A dominates: ||R - I|| = |mu| ||A|| > |mu|. Otherwise scans the grid and
// returns the first failing record, if any.
std::optional<ViolationWitness> violation_witness(const PadicMatrix& a,
                                                  const WitnessSearch& search = {});

} // namespace padic
