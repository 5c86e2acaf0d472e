#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "jpencil/recurrence.hpp"
#include "oracles.hpp"

using namespace jpencil;
using jpencil::testing::Gen;

namespace {

QuadExt rt2(long long num, long long den = 1) {
  return QuadExt(Rational(0), Rational(num, den), 2);
}

}  // namespace

TEST_CASE("theta1 polynomials reproduce the explicit p_2 and p_3") {
  const auto sys = generate(theta1_pencil<QuadExt>(4), 3);

  CHECK(sys.p(0) == Polynomial<QuadExt>::constant(QuadExt(1)));
  CHECK(sys.p(1) == Polynomial<QuadExt>({QuadExt::sqrt_of(2), QuadExt::sqrt_of(2)}));
  // p_2 = 2x^2 + 4x = 2x(x + 2)
  CHECK(sys.p(2) == Polynomial<QuadExt>({QuadExt(0), QuadExt(4), QuadExt(2)}));
  // p_3 = 2 sqrt(2) x^3 + 6 sqrt(2) x^2 + 3 sqrt(2) x = sqrt(2) x (2x^2 + 6x + 3)
  CHECK(sys.p(3) == Polynomial<QuadExt>({QuadExt(0), rt2(3), rt2(6), rt2(2)}));
}

TEST_CASE("evaluation at the printed roots") {
  const auto sys = generate(theta1_pencil<QuadExt>(4), 3);

  CHECK(sys.p(2).eval(QuadExt(-2)) == QuadExt(0));
  CHECK(sys.p(0).eval(QuadExt(Rational(17, 3))) == QuadExt(1));

  // p_3 vanishes at (-3 + sqrt(3))/2, a root of 2x^2 + 6x + 3 (float check:
  // the point lives in Q(sqrt(3)) while the coefficients live in Q(sqrt(2))).
  const auto p3 = to_float_polynomial(sys.p(3));
  const double root = (-3.0 + std::sqrt(3.0)) / 2.0;
  CHECK(std::abs(p3.eval(root)) < 1e-12);
}

TEST_CASE("five-term residual vanishes identically") {
  const auto theta = generate(theta1_pencil<QuadExt>(10), 10);
  for (long n = 0; n + 2 <= 10; ++n) {
    CHECK(five_term_residual(theta, n).is_zero());
  }

  const auto oprl = generate(
      from_oprl(std::vector<Rational>(10, Rational(1, 2)), std::vector<Rational>(10, Rational(0))),
      8);
  for (long n = 0; n + 2 <= 8; ++n) {
    CHECK(five_term_residual(oprl, n).is_zero());
  }

  CHECK_THROWS_AS(five_term_residual(theta, 9), ConfigError);
  CHECK_THROWS_AS(five_term_residual(theta, -1), ConfigError);
}

TEST_CASE("oprl pencils reproduce the three-term recurrence oracle") {
  const std::vector<Rational> a(7, Rational(1, 2));
  const std::vector<Rational> b(7, Rational(0));
  const auto sys = generate(from_oprl(a, b), 5);
  const auto oracle = jpencil::testing::three_term_polynomials(a, b, 5);
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(sys.p(n) == oracle[n]);
  }
}

TEST_CASE("oprl consistency on random data" * doctest::description("property")) {
  Gen gen(202);
  for (int trial = 0; trial < 10; ++trial) {
    const long n_max = 20;
    auto [a, b] = gen.oprl_data(static_cast<std::size_t>(n_max) + 2);
    const auto sys = generate(from_oprl(a, b), n_max);
    const auto oracle = jpencil::testing::three_term_polynomials(a, b, n_max);
    for (std::size_t n = 0; n <= static_cast<std::size_t>(n_max); ++n) {
      CHECK(sys.p(n) == oracle[n]);
    }
  }
}

TEST_CASE("degree and positive leading coefficient" * doctest::description("property")) {
  Gen gen(203);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pencil = gen.rational_pencil(20);
    const auto sys = generate(pencil, 18);
    for (long n = 0; n <= 18; ++n) {
      const auto& p = sys.p(static_cast<std::size_t>(n));
      CHECK(p.degree() == n);
      CHECK(p.leading().sign() == 1);
    }
  }
}

TEST_CASE("float and exact theta1 coefficients agree to relative 1e-10") {
  const long n_max = 30;
  const auto exact = generate(theta1_pencil<QuadExt>(n_max), n_max);
  const auto approx = generate(theta1_pencil<double>(n_max), n_max);
  for (long n = 0; n <= n_max; ++n) {
    const auto& pe = exact.p(static_cast<std::size_t>(n));
    const auto& pa = approx.p(static_cast<std::size_t>(n));
    REQUIRE(pe.degree() == pa.degree());
    for (long k = 0; k <= n; ++k) {
      const double want = to_double(pe.coeff(static_cast<std::size_t>(k)));
      const double got = pa.coeff(static_cast<std::size_t>(k));
      CHECK(approx_equal(got, want, {.abs = 0.0, .rel = 1e-10}));
    }
  }
}

TEST_CASE("float-mode leading coefficients positive after tolerant trimming") {
  const long n_max = 30;
  const auto sys = generate(theta1_pencil<double>(n_max), n_max);
  for (long n = 0; n <= n_max; ++n) {
    const auto& p = sys.p(static_cast<std::size_t>(n));
    double max_coeff = 0.0;
    for (long k = 0; k <= p.degree(); ++k) {
      max_coeff = std::max(max_coeff, std::abs(p.coeff(static_cast<std::size_t>(k))));
    }
    long top = p.degree();
    while (top > 0 && std::abs(p.coeff(static_cast<std::size_t>(top))) <= 1e-12 * max_coeff) {
      --top;
    }
    CHECK(top == n);
    CHECK(p.coeff(static_cast<std::size_t>(top)) > 0.0);
  }
}

TEST_CASE("generate validates its preconditions") {
  CHECK_THROWS_AS(generate(theta1_pencil<QuadExt>(3), 0), ConfigError);
  // N = 6 needs sequence entries up to index 4.
  CHECK_THROWS_AS(generate(theta1_pencil<QuadExt>(3), 6), SequenceExhausted);
  CHECK_NOTHROW(generate(theta1_pencil<QuadExt>(4), 6));

  // An invalid pencil smuggled past validation trips the degree guard.
  auto broken = theta1_pencil<QuadExt>(6);
  broken.a[1] = QuadExt(0);  // kills the leading term of p_3
  CHECK_THROWS_AS(generate(broken, 6), InternalError);
}

TEST_CASE("polynomial arithmetic basics") {
  using P = Polynomial<Rational>;
  const P x = P::identity();
  const P p = x * x - P::constant(Rational(1));  // x^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(3)) == Rational(8));
  CHECK((p - p).is_zero());
  CHECK(p.shifted(2).degree() == 4);
  CHECK(P::zero().degree() == -1);
  CHECK((P::constant(Rational(0))).is_zero());

  // Horner evaluation over the complex extension.
  using C = ComplexOf<Rational>;
  const C at_i = p.eval(C::i());
  CHECK(at_i == C(Rational(-2)));
}
