#include <doctest.h>

#include "padic/crosscheck.hpp"
#include "padic/errors.hpp"
#include "padic/random.hpp"
#include "padic/resolvent.hpp"
#include "padic/suites.hpp"
#include "test_support.hpp"

using namespace padic;
using namespace testing_support;

namespace {

PadicScalar mu5(const ContextPtr& ctx, std::int64_t v = 1) { return PadicScalar::prime_power(v, ctx); }

} // namespace

TEST_CASE("admissible_radius examples") {
  const auto ctx = make_context(5, 30);
  CHECK(admissible_radius(matrix(kUnipotent, ctx)) == 1);
  CHECK(admissible_radius(matrix({{q(1, 5)}}, ctx)) == 2);
  CHECK(admissible_radius(PadicMatrix::zero(ctx, 2)) == 1);
  CHECK(admissible_radius(matrix({{q(5)}}, ctx)) == 1);
  CHECK_THROWS_AS(neumann_resolvent(matrix({{q(1, 5)}}, ctx), mu5(ctx), 10), DomainError);
  CHECK_NOTHROW(neumann_resolvent(PadicMatrix::zero(ctx, 1), mu5(ctx, -3), 10));
}

TEST_CASE("neumann_resolvent examples") {
  const auto ctx = make_context(5, 40);
  const auto zero = neumann_resolvent(PadicMatrix::zero(ctx, 2), mu5(ctx), 10);
  CHECK(zero.tail_bound_exponent == ExtInt::pos_inf());
  CHECK(zero.converged);
  CHECK(distance(zero.value, oracle::RationalMatrix::identity(2)) == NormExponent::neg_inf());

  const auto one = neumann_resolvent(matrix({{q(1)}}, ctx), mu5(ctx), 10);
  CHECK(one.converged);
  CHECK(one.tail_bound_exponent >= 10);
  CHECK(one.value(0, 0).valuation() == 0);
  CHECK(distance(one.value, rational({{q(-1, 4)}})) <= -10);

  const auto uni = neumann_resolvent(matrix(kUnipotent, ctx), mu5(ctx), 20);
  CHECK(distance(uni.value, rational({{q(-1, 4), q(5, 16)}, {q(0), q(-1, 4)}})) <= -20);
}

TEST_CASE("truncation order is the smallest sufficient one") {
  const auto ctx = make_context(5, 60);
  // s = 0, v = 1: (N + 1) >= 10.
  CHECK(neumann_resolvent(matrix({{q(1)}}, ctx), mu5(ctx), 10).truncation_order == 9);
  // s = 0, v = 2: 2 (N + 1) >= 10.
  CHECK(neumann_resolvent(matrix({{q(1)}}, ctx), mu5(ctx, 2), 10).truncation_order == 4);
}

TEST_CASE("precision shortfall is an error naming the achievable exponent") {
  const auto ctx = make_context(5, 8);
  try {
    neumann_resolvent(matrix({{q(1)}}, ctx), mu5(ctx), 30);
    FAIL("expected a precision error");
  } catch (const PrecisionError& e) {
    CHECK(e.achievable() < 30);
    CHECK(e.achievable().is_finite());
  }
  SeriesOptions lenient;
  lenient.enforce_target = false;
  const auto r = neumann_resolvent(matrix({{q(1)}}, ctx), mu5(ctx), 30, lenient);
  CHECK_FALSE(r.converged);
}

TEST_CASE("resolvent_derivative examples") {
  const auto ctx = make_context(5, 60);
  const auto zero = resolvent_derivative(PadicMatrix::zero(ctx, 2), mu5(ctx), 1, 10);
  CHECK(zero.value.is_zero());
  CHECK(zero.tail_bound_exponent == ExtInt::pos_inf());

  const auto d1 = resolvent_derivative(matrix({{q(1)}}, ctx), mu5(ctx), 1, 15);
  CHECK(d1.value(0, 0).valuation() == 0);
  CHECK(distance(d1.value, rational({{q(1, 16)}})) <= -15);

  const auto a = rational(kUnipotent);
  const auto exact = oracle::exact_resolvent_derivative(a, q(5), 1, 5);
  const auto r = oracle::exact_resolvent(a, q(5), 5);
  CHECK(exact == r * a * r);
  const auto engine = resolvent_derivative(matrix(kUnipotent, ctx), mu5(ctx), 1, 20);
  CHECK(crosscheck(engine, exact, 5).passes);
  CHECK_THROWS_AS(resolvent_derivative(matrix({{q(1)}}, ctx), mu5(ctx), 0, 10), InvalidInput);
}

TEST_CASE("rminusi_power_series examples") {
  const auto ctx = make_context(5, 60);
  const auto m0 = rminusi_power_series(matrix({{q(1)}}, ctx), mu5(ctx), 0, 15);
  CHECK(m0.value(0, 0).valuation() == 1);
  CHECK(distance(m0.value, rational({{q(-5, 4)}})) <= -15);
  const auto m1 = rminusi_power_series(matrix({{q(1)}}, ctx), mu5(ctx), 1, 15);
  CHECK(m1.value(0, 0).valuation() == 2);
  CHECK(distance(m1.value, rational({{q(25, 16)}})) <= -15);
  CHECK(rminusi_power_series(PadicMatrix::zero(ctx, 3), mu5(ctx), 2, 15).value.is_zero());

  const auto range = rminusi_power_series_range(matrix({{q(1)}}, ctx), mu5(ctx), 3, 15);
  REQUIRE(range.size() == 4);
  CHECK(distance(range[1].value, rational({{q(25, 16)}})) <= -15);
}

TEST_CASE("s_operator examples") {
  const auto ctx = make_context(5, 60);
  const auto s0 = s_operator(matrix({{q(1)}}, ctx), mu5(ctx), 0, 15);
  CHECK(s0.value(0, 0).valuation() == 0);
  CHECK(mat_norm(s0.value) <= 0);
  CHECK(distance(s0.value, rational({{q(-1, 4)}})) <= -15);
  CHECK(s_operator(PadicMatrix::zero(ctx, 2), mu5(ctx), 3, 15).value.is_zero());

  const auto a = rational(kUnipotent);
  const auto ar = a * oracle::exact_resolvent(a, q(5), 5);
  const auto s1 = s_operator(matrix(kUnipotent, ctx), mu5(ctx), 1, 20);
  CHECK(crosscheck(s1, ar * ar, 5).passes);

  const auto forms = s_operator_forms(matrix(kUnipotent, ctx), PadicScalar::zero(ctx), 2, 20);
  CHECK_FALSE(forms.divided.has_value());
  CHECK(crosscheck(forms.division_free, a * a * a, 5).passes);
}

TEST_CASE("crosscheck examples") {
  const auto ctx = make_context(5, 40);
  const auto zero = neumann_resolvent(PadicMatrix::zero(ctx, 2), mu5(ctx), 10);
  const auto exact = crosscheck(zero, oracle::RationalMatrix::identity(2), 5);
  CHECK(exact.discrepancy_exponent == NormExponent::neg_inf());
  CHECK(exact.passes);

  const auto one = neumann_resolvent(matrix({{q(1)}}, ctx), mu5(ctx), 10);
  const auto check = crosscheck(one, rational({{q(-1, 4)}}), 5);
  CHECK(check.passes);
  CHECK(check.discrepancy_exponent <= -10);

  SeriesOptions faulty;
  faulty.inject_truncation_fault = true;
  const auto broken = neumann_resolvent(matrix({{q(1)}}, ctx), mu5(ctx), 10, faulty);
  CHECK_FALSE(crosscheck(broken, rational({{q(-1, 4)}}), 5).passes);

  CHECK_THROWS_AS(crosscheck(one, oracle::RationalMatrix::identity(2), 5), InvalidInput);
  CHECK_THROWS_AS(crosscheck(one, rational({{q(-1, 4)}}), 3), InvalidInput);
}

TEST_CASE("property: residual certificate and tail soundness") {
  MatrixSampler sampler(31);
  for (int i = 0; i < 40; ++i) {
    const std::int64_t p = std::array<std::int64_t, 4>{2, 3, 5, 7}[i % 4];
    const auto file = i % 2 ? sampler.contractive(p, 1 + i % 3) : sampler.non_contractive(p, 1 + i % 3);
    const NormExponent s = rational_norm_exponent(file);
    const auto ctx = make_context(p, plan_precision(s, 4, 60));
    const auto a = PadicMatrix::from_rationals(ctx, file.entries);
    const std::int64_t v = admissible_radius(a) + i % 2;
    const auto mu = PadicScalar::prime_power(v, ctx);

    const auto r = neumann_resolvent(a, mu, 25);
    const auto shifted = PadicMatrix::identity(ctx, a.dim()) - mu * a;
    const auto residual = shifted * r.value - PadicMatrix::identity(ctx, a.dim());
    CHECK(mat_norm(residual) <= -r.tail_bound_exponent);

    // A deeper evaluation never moves digits the shallow one certified.
    const auto deeper = neumann_resolvent(a, mu, 45);
    CHECK(deeper.truncation_order >= r.truncation_order);
    CHECK(mat_norm(deeper.value - r.value) <= -r.tail_bound_exponent);

    // Oracle agreement for the derivative family.
    const oracle::RationalMatrix exact_a(file.entries);
    const mpq_class exact_mu = pow_q(p, v);
    for (std::uint64_t m = 1; m <= 3; ++m) {
      const auto d = resolvent_derivative(a, mu, m, 25);
      CHECK(crosscheck(d, oracle::exact_resolvent_derivative(exact_a, exact_mu, m, p), p).passes);
    }
  }
}
