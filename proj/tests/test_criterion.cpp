#include <doctest.h>

#include "padic/criterion.hpp"
#include "padic/errors.hpp"
#include "padic/random.hpp"
#include "padic/suites.hpp"
#include "test_support.hpp"

using namespace padic;
using namespace testing_support;

TEST_CASE("defaults") {
  const auto ctx = make_context(5, 20);
  const auto range = default_mu_range(matrix({{q(1, 25)}}, ctx));
  CHECK(range.lo == 3);
  CHECK(range.hi == 8);
  CHECK(default_target(12, MuRange{1, 6}) == 2 * 12 * 6 + 8);
}

TEST_CASE("unipotent matrix satisfies the criterion tightly") {
  const auto ctx = make_context(5, 120);
  const auto report = resolvent_contraction_check(matrix(kUnipotent, ctx), {1, 3}, 6, default_target(6, {1, 3}));
  CHECK(report.verdict);
  CHECK(report.witnesses.empty());
  CHECK(report.records.size() == 18);
  for (const auto& r : report.records) {
    CHECK(r.pass());
    CHECK(r.lhs_exponent <= r.rhs_exponent);
    if (r.k == 1) {
      CHECK(r.lhs_exponent == r.rhs_exponent);
    }
  }
  // Canonical order: k, then v.
  CHECK(report.records[0].k == 1);
  CHECK(report.records[1].mu_valuation == 2);
  CHECK(report.records[3].k == 2);

  // Oracle: (R - I)^k at v = 1, k = 2.
  const auto r = oracle::exact_resolvent(rational(kUnipotent), q(5), 5);
  const auto diff = r - oracle::RationalMatrix::identity(2);
  Valuation lowest = Valuation::pos_inf();
  const auto sq = diff * diff;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      lowest = min(lowest, oracle::rational_valuation(sq(i, j), 5));
    }
  }
  CHECK(report.records[3].lhs_exponent == -lowest);
}

TEST_CASE("non-contraction produces a witness") {
  const auto ctx = make_context(5, 60);
  const auto report = resolvent_contraction_check(matrix({{q(1, 5)}}, ctx), {2, 2}, 1, 20);
  REQUIRE(report.records.size() == 1);
  CHECK(report.records[0].lhs_exponent == -1);
  CHECK(report.records[0].rhs_exponent == -2);
  CHECK_FALSE(report.records[0].pass());
  CHECK_FALSE(report.verdict);
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0] == Witness{1, 2});
}

TEST_CASE("zero matrix passes with -inf left sides") {
  const auto ctx = make_context(7, 40);
  const auto report = resolvent_contraction_check(PadicMatrix::zero(ctx, 2), {1, 2}, 3, 20);
  CHECK(report.verdict);
  for (const auto& r : report.records) {
    CHECK(r.lhs_exponent == NormExponent::neg_inf());
  }
}

TEST_CASE("criterion input validation") {
  const auto ctx = make_context(5, 60);
  CHECK_THROWS_AS(resolvent_contraction_check(matrix({{q(1, 5)}}, ctx), {1, 2}, 2, 20), DomainError);
  CHECK_THROWS_AS(resolvent_contraction_check(matrix({{q(1)}}, ctx), {1, 2}, 0, 20), InvalidInput);
  CHECK_THROWS_AS(resolvent_contraction_check(matrix({{q(1)}}, ctx), {3, 2}, 2, 20), InvalidInput);
}

TEST_CASE("decide_record") {
  const auto ctx = make_context(5, 10);
  SeriesResult fuzzy{PadicMatrix::zero(ctx, 1), 4, 3, false};
  const auto undecided = decide_record(2, 2, fuzzy);
  CHECK(undecided.status == RecordStatus::undecided);
  CHECK(undecided.lhs_exponent == -3);
  CHECK(undecided.lhs_is_bound);

  SeriesResult small{matrix({{q(25)}}, ctx), 4, 3, false};
  CHECK(decide_record(1, 3, small).status == RecordStatus::fail);
  CHECK(decide_record(2, 2, small).status == RecordStatus::fail);
  CHECK(decide_record(1, 2, small).status == RecordStatus::pass);

  SeriesResult large{matrix({{q(5)}}, ctx), 4, 6, true};
  const auto fail = decide_record(1, 2, large);
  CHECK(fail.status == RecordStatus::fail);
  CHECK(fail.lhs_exponent == -1);
  CHECK_FALSE(fail.lhs_is_bound);
  CHECK(fail.rhs_exponent == -2);
}

TEST_CASE("low precision still decides every record soundly") {
  const auto ctx = make_context(5, 6);
  const auto report = resolvent_contraction_check(matrix(kUnipotent, ctx), {1, 3}, 6, 44);
  CHECK(report.undecided == 0);
  CHECK(report.verdict);
}

TEST_CASE("report is independent of the thread count") {
  const auto ctx = make_context(3, 200);
  const auto a = matrix({{q(1), q(2), q(0)}, {q(3), q(1), q(1)}, {q(0), q(9), q(4)}}, ctx);
  CriterionOptions serial;
  CriterionOptions parallel;
  parallel.threads = 4;
  const auto r1 = resolvent_contraction_check(a, {1, 6}, 8, default_target(8, {1, 6}), serial);
  const auto r2 = resolvent_contraction_check(a, {1, 6}, 8, default_target(8, {1, 6}), parallel);
  REQUIRE(r1.records.size() == r2.records.size());
  for (std::size_t i = 0; i < r1.records.size(); ++i) {
    CHECK(r1.records[i].k == r2.records[i].k);
    CHECK(r1.records[i].mu_valuation == r2.records[i].mu_valuation);
    CHECK(r1.records[i].lhs_exponent == r2.records[i].lhs_exponent);
    CHECK(r1.records[i].truncation_order == r2.records[i].truncation_order);
  }
}

TEST_CASE("forward direction examples") {
  const auto ctx = make_context(5, 200);
  const auto diag = forward_direction_suite(matrix({{q(1), q(0)}, {q(0), q(5)}}, ctx), 10, 6, {1, 2},
                                            default_target(6, {1, 2}));
  CHECK(diag.passed);
  CHECK_FALSE(diag.chain.empty());
  for (const auto& c : diag.chain) {
    CHECK(c.holds());
    CHECK(c.binomial_unit_bound);
  }

  const auto id = forward_direction_suite(PadicMatrix::identity(ctx, 2), 10, 6, {1, 2}, default_target(6, {1, 2}));
  CHECK(id.passed);
  for (const auto& r : id.criterion.records) {
    CHECK(r.lhs_exponent == -static_cast<std::int64_t>(r.k) * r.mu_valuation);
  }

  const auto zero = forward_direction_suite(PadicMatrix::zero(ctx, 2), 10, 6, {1, 2}, 40);
  CHECK(zero.passed);
  CHECK_THROWS_AS(forward_direction_suite(matrix({{q(1, 5)}}, ctx), 10, 6, {2, 3}, 40), InvalidInput);
}

TEST_CASE("converse direction examples") {
  const auto ctx = make_context(5, 200);
  const auto uni = converse_direction_suite(matrix(kUnipotent, ctx), 5, {1, 3}, default_target(5, {1, 3}));
  CHECK(uni.passed);
  CHECK(uni.inequalities_hold);
  CHECK_FALSE(uni.engine_fault);
  const auto powers = power_contraction_check(matrix(kUnipotent, ctx), 6);
  for (const auto& limit : uni.limits) {
    CHECK(limit.holds);
    CHECK(limit.monotone);
    CHECK(limit.conclusion <= 0);
    CHECK(limit.conclusion == powers.exponents[limit.k]);
  }
  for (const auto& r : uni.records) {
    CHECK(r.s_bounded);
    CHECK(r.factorization.holds);
    CHECK(r.chain_holds);
  }

  // S_0 = -1/4 for the scalar 1 at mu = 5, and (1 - 5)(-1/4) = 1.
  const auto scalar_one = converse_direction_suite(matrix({{q(1)}}, ctx), 1, {1, 1}, 20);
  REQUIRE(!scalar_one.records.empty());
  CHECK(scalar_one.records[0].k == 0);
  CHECK(scalar_one.records[0].s_norm == 0);
  CHECK(scalar_one.records[0].factorization.holds);
  CHECK(scalar_one.passed);

  const auto zero = converse_direction_suite(PadicMatrix::zero(ctx, 2), 4, {1, 2}, 30);
  CHECK(zero.passed);
  for (const auto& r : zero.records) {
    CHECK(r.s_norm == NormExponent::neg_inf());
  }
}

TEST_CASE("violation_witness examples") {
  const auto ctx = make_context(5, 120);
  const auto w = violation_witness(matrix({{q(1, 5)}}, ctx));
  REQUIRE(w.has_value());
  CHECK(w->k == 1);
  CHECK(w->mu_valuation == 2);
  CHECK(w->lhs_exponent == -1);
  CHECK(w->rhs_exponent == -2);

  CHECK_FALSE(violation_witness(matrix(kUnipotent, ctx)).has_value());

  const auto nil = violation_witness(matrix({{q(0), q(1, 25)}, {q(0), q(0)}}, ctx));
  REQUIRE(nil.has_value());
  CHECK(nil->k == 1);
  CHECK(nil->mu_valuation == 3);
  CHECK(nil->lhs_exponent == -1);
}

TEST_CASE("property: dominant term and biconditional on a small corpus") {
  CorpusConfig config;
  config.contractive = 8;
  config.non_contractive = 8;
  config.max_k = 5;
  config.seed = 77;
  for (const auto& file : non_contractive_corpus(config)) {
    const auto e = evaluate_corpus_entry(file, false, config);
    CHECK_FALSE(e.powers.verdict);
    CHECK_FALSE(e.criterion.verdict);
    for (const auto& r : e.criterion.records) {
      if (r.k == 1) {
        CHECK(r.lhs_exponent == e.norm_exponent - r.mu_valuation);
        CHECK_FALSE(r.pass());
      }
    }
  }
  for (const auto& file : contractive_corpus(config)) {
    const auto e = evaluate_corpus_entry(file, true, config);
    CHECK(e.powers.verdict);
    CHECK(e.criterion.verdict);
  }
}
