#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/criterion.hpp"
#include "padic/matrix_io.hpp"
#include "padic/oracle.hpp"
#include "padic/resolvent.hpp"

namespace padic {

// Working precision that leaves `target` reachable for series of depth up to
// `depth` at the given norm exponent: target + 16 + 2 (depth + 1) max(s, 0).
int plan_precision(NormExponent norm_exponent, std::uint64_t depth, std::int64_t target);

PadicMatrix to_padic(const MatrixFile& file, const ContextPtr& ctx);
oracle::RationalMatrix to_oracle(const MatrixFile& file);

// Tally for one family of checks.
struct SuiteResult {
  std::string name;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t precision_errors = 0;
  // First few failure descriptions.
  std::vector<std::string> failures;

  bool ok() const { return passed == total && precision_errors == 0; }
  void record(bool passed_check, const std::string& what);
};

// v(x + y) >= min, with equality when v(x) != v(y), and v(xy) = v(x) + v(y), on
// random rational pairs checked against exact rational valuations.
SuiteResult scalar_axiom_suite(std::int64_t p, std::size_t pairs, std::uint64_t seed);

// Legendre's floor sum against (m - s_p(m)) / (p - 1) and Kummer's carry
// count against the factorization of C(j, m), for 0 <= m <= j <= j_max.
SuiteResult combinatorics_suite(std::int64_t p, std::uint64_t j_max);

struct OracleSuiteConfig {
  std::vector<std::int64_t> primes{2, 3, 5, 7};
  std::size_t instances = 20;
  std::size_t max_dim = 3;
  std::int64_t target = 30;
  std::uint64_t max_derivative = 3;
  std::uint64_t seed = 1;
  // 0 plans the precision per instance.
  int precision = 0;
  SeriesOptions series;
};

// Neumann resolvent and derivatives against the exact rational oracle.
SuiteResult engine_oracle_suite(const OracleSuiteConfig& config);

struct CorpusConfig {
  std::vector<std::int64_t> primes{2, 3, 5, 7};
  std::size_t contractive = 20;
  std::size_t non_contractive = 20;
  std::size_t max_dim = 4;
  std::uint64_t max_k = 12;
  std::uint64_t max_power = 24;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

// One matrix of a corpus with both verdicts.
struct CorpusEntry {
  MatrixFile matrix;
  bool contractive_by_construction = true;
  NormExponent norm_exponent = 0;
  MuRange range;
  PowerContractionReport powers;
  CriterionReport criterion;
  std::optional<ViolationWitness> witness;
};

// Deterministic corpora: the i-th matrix uses prime primes[i % size] and
// dimension 1 + (i % max_dim), with entries drawn from a sampler seeded by seed.
std::vector<MatrixFile> contractive_corpus(const CorpusConfig& config);
std::vector<MatrixFile> non_contractive_corpus(const CorpusConfig& config);

// Runs power_contraction_check, resolvent_contraction_check on the default
// range and, for non-contractions, violation_witness.
CorpusEntry evaluate_corpus_entry(const MatrixFile& file, bool contractive, const CorpusConfig& config);

// Power verdict equals criterion verdict on both corpora; witnesses sit at k = 1
// with ||R - I|| = p^(s - v).
SuiteResult biconditional_suite(const CorpusConfig& config);

} // namespace padic
