#include <doctest.h>

#include "padic/certified.hpp"
#include "padic/errors.hpp"
#include "padic/matrix.hpp"
#include "padic/random.hpp"
#include "test_support.hpp"

using namespace padic;
using namespace testing_support;

TEST_CASE("mat_norm examples") {
  const auto ctx = make_context(5, 20);
  CHECK(mat_norm(matrix({{q(1), q(5)}, {q(25), q(1, 5)}}, ctx)) == 1);
  CHECK(mat_norm(PadicMatrix::identity(ctx, 3)) == 0);
  CHECK(mat_norm(PadicMatrix::zero(ctx, 2)) == NormExponent::neg_inf());
}

TEST_CASE("matrix construction errors") {
  const auto ctx = make_context(5, 20);
  CHECK_THROWS_AS(PadicMatrix(ctx, 0), InvalidInput);
  CHECK_THROWS_AS(matrix({{q(1), q(2)}, {q(3)}}, ctx), InvalidInput);
  CHECK_THROWS_AS(PadicMatrix::identity(ctx, 2) * PadicMatrix::identity(ctx, 3), InvalidInput);
  CHECK_THROWS_AS(PadicMatrix::identity(ctx, 2) + PadicMatrix::identity(make_context(5, 21), 2), InvalidInput);
}

TEST_CASE("powers and scaling") {
  const auto ctx = make_context(5, 20);
  const auto a = matrix(kUnipotent, ctx);
  const auto cube = mat_pow(a, 3);
  CHECK(cube(0, 0).representative() == 1);
  CHECK(cube(0, 1).representative() == 3);
  CHECK(cube(1, 0).is_zero());
  CHECK(cube(1, 1).representative() == 1);
  CHECK(mat_norm(cube) == 0);

  const auto id = mat_pow(a, 0);
  CHECK(distance(id, oracle::RationalMatrix::identity(2)) == NormExponent::neg_inf());

  const auto scaled = scalar_mul(scalar(q(5), ctx), PadicMatrix::identity(ctx, 2));
  CHECK(mat_norm(scaled) == -1);
}

TEST_CASE("mat_pow agrees with the oracle") {
  const auto ctx = make_context(3, 60);
  MatrixSampler sampler(4);
  for (int i = 0; i < 20; ++i) {
    const auto file = sampler.non_contractive(3, 1 + i % 3);
    const auto a = PadicMatrix::from_rationals(ctx, file.entries);
    const auto exact = oracle::power(oracle::RationalMatrix(file.entries), 5);
    const auto engine = mat_pow(a, 5);
    CHECK(distance(engine, exact) <= -precision_exponent(engine));
  }
}

TEST_CASE("power_contraction_check examples") {
  const auto ctx = make_context(5, 40);
  const auto unipotent = power_contraction_check(matrix(kUnipotent, ctx), 24);
  CHECK(unipotent.verdict);
  REQUIRE(unipotent.exponents.size() == 24);
  for (const auto& e : unipotent.exponents) {
    CHECK(e == 0);
  }

  const auto fifth = power_contraction_check(matrix({{q(1, 5)}}, ctx), 3);
  CHECK_FALSE(fifth.verdict);
  CHECK(fifth.exponents == std::vector<NormExponent>{1, 2, 3});

  const auto zero = power_contraction_check(PadicMatrix::zero(ctx, 3), 7);
  CHECK(zero.verdict);
  CHECK_THROWS_AS(power_contraction_check(PadicMatrix::zero(ctx, 3), 0), InvalidInput);
}

TEST_CASE("property: submultiplicativity, ultrametric sums, norm attainment") {
  for (const std::int64_t p : {2, 3, 5, 7}) {
    const auto ctx = make_context(p, 50);
    MatrixSampler sampler(11 * static_cast<std::uint64_t>(p));
    for (int i = 0; i < 40; ++i) {
      const std::size_t n = 1 + i % 4;
      const auto a = PadicMatrix::from_rationals(ctx, sampler.non_contractive(p, n).entries);
      const auto b = PadicMatrix::from_rationals(ctx, sampler.non_contractive(p, n).entries);
      CHECK(mat_norm(a * b) <= mat_norm(a) + mat_norm(b));
      CHECK(mat_norm(a + b) <= max(mat_norm(a), mat_norm(b)));

      NormExponent best = NormExponent::neg_inf();
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<PadicScalar> basis(n, PadicScalar::zero(ctx));
        basis[j] = scalar(q(1), ctx);
        const auto image = mat_vec(a, basis);
        CHECK(vec_norm(image) <= mat_norm(a));
        best = max(best, vec_norm(image));
      }
      CHECK(best == mat_norm(a));
    }
  }
}

TEST_CASE("property: integral matrices are power bounded") {
  for (const std::int64_t p : {2, 3, 5, 7}) {
    const auto ctx = make_context(p, 30);
    MatrixSampler sampler(17 + static_cast<std::uint64_t>(p));
    for (int i = 0; i < 15; ++i) {
      const auto a = PadicMatrix::from_rationals(ctx, sampler.contractive(p, 1 + i % 4).entries);
      const auto report = power_contraction_check(a, 24);
      CHECK(report.verdict);
      for (const auto& e : report.exponents) {
        CHECK(e <= 0);
      }
    }
  }
}

TEST_CASE("certified products propagate error bounds") {
  const auto ctx = make_context(5, 30);
  const auto a = matrix(kUnipotent, ctx);
  CertifiedMatrix x{a, 10};
  CertifiedMatrix y{a, 12};
  CHECK((x * y).error_exponent == 10);
  CHECK((x + y).error_exponent == 10);
  CHECK((scalar(q(5), ctx) * x).error_exponent == 11);
  const auto r = compare(x, y);
  CHECK(r.exponent == NormExponent::neg_inf());
  CHECK(r.holds);
  CertifiedMatrix off{a + PadicMatrix::identity(ctx, 2), 12};
  CHECK_FALSE(compare(x, off).holds);
}
