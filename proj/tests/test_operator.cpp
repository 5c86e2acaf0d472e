#include <doctest.h>

#include "generators.hpp"
#include "jpencil/operator.hpp"
#include "oracles.hpp"

using namespace jpencil;
using jpencil::testing::Gen;

namespace {

QuadExt rt2(long long num, long long den = 1) {
  return QuadExt(Rational(0), Rational(num, den), 2);
}

FiniteVector<QuadExt> qvec(std::vector<QuadExt> v) { return FiniteVector<QuadExt>(std::move(v)); }

}  // namespace

TEST_CASE("tridiagonal columns u_n = J3 e_n") {
  const auto theta = theta1_pencil<QuadExt>(6);
  CHECK(j3_column(theta, 0) == qvec({QuadExt(2), rt2(1)}));
  CHECK(j3_column(theta, 2) == qvec({QuadExt(0), rt2(1), QuadExt(2), rt2(1)}));

  const auto oprl = from_oprl(std::vector<Rational>(5, Rational(1, 2)),
                              std::vector<Rational>(5, Rational(0)));
  CHECK(j3_column(oprl, 1) ==
        FiniteVector<Rational>({Rational(1, 2), Rational(0), Rational(1, 2)}));
}

TEST_CASE("five-diagonal columns w_n = J5 e_n") {
  const auto theta = theta1_pencil<QuadExt>(6);
  CHECK(j5_column(theta, 0) == FiniteVector<QuadExt>::basis(2));
  CHECK(j5_column(theta, 3) ==
        qvec({QuadExt(0), QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(0), QuadExt(1)}));

  const auto oprl = from_oprl(std::vector<Rational>(5, Rational(1, 2)),
                              std::vector<Rational>(5, Rational(1)));
  // w_0 = alpha_0 e_0 + beta_0 e_1 + gamma_0 e_2.
  CHECK(j5_column(oprl, 0) ==
        FiniteVector<Rational>({oprl.alpha_seq[0], oprl.beta_seq[0], oprl.gamma_seq[0]}));
}

TEST_CASE("theta1 operator columns: A e_0 and A e_1") {
  const auto op = build_operator(theta1_pencil<QuadExt>(6), 4);
  // A e_0 = (e_1 - beta e_0)/alpha = -e_0 + (1/sqrt(2)) e_1.
  CHECK(op.column(0) == qvec({QuadExt(-1), rt2(1, 2)}));
  // Hand substitution A e_1 = (w_0 - b_0 A e_0)/a_0 = sqrt(2) e_0 - e_1 + (1/sqrt(2)) e_2.
  CHECK(op.column(1) == qvec({rt2(1), QuadExt(-1), rt2(1, 2)}));
}

TEST_CASE("oprl operator equals the truncated Jacobi matrix") {
  Gen gen(301);
  auto [a, b] = gen.oprl_data(14);
  const auto pencil = from_oprl(a, b);
  const long n_max = 10;
  const auto op = build_operator(pencil, n_max);
  for (long k = 0; k + 1 <= n_max; ++k) {
    CHECK(op.column(static_cast<std::size_t>(k)) == j3_column(pencil, k));
  }
}

TEST_CASE("hessenberg profile: column k supported in rows 0..k+1" *
          doctest::description("property")) {
  Gen gen(302);
  for (int trial = 0; trial < 8; ++trial) {
    const auto pencil = gen.rational_pencil(14);
    const auto op = build_operator(pencil, 12);
    for (long k = 0; k <= 12; ++k) {
      CHECK(op.column(static_cast<std::size_t>(k)).max_support() <= k + 1);
    }
  }
}

TEST_CASE("basis-change route matches the recursion route" *
          doctest::description("property")) {
  Gen gen(303);
  for (int trial = 0; trial < 6; ++trial) {
    const auto pencil = gen.rational_pencil(14);
    const auto op = build_operator(pencil, 10);
    for (long k = 0; k <= 10; ++k) {
      CHECK(op.column(static_cast<std::size_t>(k)) == operator_column_via_basis(pencil, k));
    }
  }
  // Also exact over the quadratic field.
  const auto theta = theta1_pencil<QuadExt>(12);
  const auto op = build_operator(theta, 12);
  for (long k = 0; k <= 12; ++k) {
    CHECK(op.column(static_cast<std::size_t>(k)) == operator_column_via_basis(theta, k));
  }
}

TEST_CASE("apply_poly: zero polynomial, p_1, and truncation overflow") {
  const auto theta = theta1_pencil<QuadExt>(8);
  const auto op = build_operator(theta, 8);
  const auto sys = generate(theta, 8);

  const auto v = qvec({QuadExt(3), rt2(1), QuadExt(0), QuadExt(5)});
  CHECK(apply_poly(Polynomial<QuadExt>::zero(), op, v).is_zero());

  // p_1(A) e_0 = e_1.
  CHECK(apply_poly(sys.p(1), op, FiniteVector<QuadExt>::basis(0)) ==
        FiniteVector<QuadExt>::basis(1));

  // Applying a degree-2 polynomial to a vector supported at index 8 needs
  // column 9.
  CHECK_THROWS_AS(apply_poly(sys.p(2), op, FiniteVector<QuadExt>::basis(8)),
                  TruncationOverflow);
  CHECK_NOTHROW(apply_poly(sys.p(1), op, FiniteVector<QuadExt>::basis(7)));
}

TEST_CASE("functional calculus is additive and multiplicative" *
          doctest::description("property")) {
  Gen gen(304);
  const auto theta = theta1_pencil<QuadExt>(24);
  const auto op = build_operator(theta, 24);

  auto random_poly = [&](long max_deg) {
    const long deg = gen.int_in(0, max_deg);
    std::vector<QuadExt> c;
    for (long k = 0; k <= deg; ++k) c.push_back(gen.quadext(2, 4));
    return Polynomial<QuadExt>(std::move(c));
  };
  auto random_vec = [&] {
    std::vector<QuadExt> c;
    const long support = gen.int_in(0, 5);
    for (long k = 0; k <= support; ++k) c.push_back(gen.quadext(2, 4));
    return FiniteVector<QuadExt>(std::move(c));
  };

  for (int trial = 0; trial < 12; ++trial) {
    const auto f = random_poly(5);
    const auto g = random_poly(5);
    const auto v = random_vec();
    CHECK(apply_poly(f + g, op, v) == apply_poly(f, op, v) + apply_poly(g, op, v));
    CHECK(apply_poly(f * g, op, v) == apply_poly(f, op, apply_poly(g, op, v)));
  }
}

TEST_CASE("monomial functional calculus equals the recurrence route, exact modes") {
  // The verifiers evaluate p_n(A)e_0 through the operator-argument
  // recurrence; the literal sum of powers must give the same vectors.
  const auto theta = theta1_pencil<QuadExt>(16);
  const auto op = build_operator(theta, 16);
  const auto sys = generate(theta, 16);
  const auto y = polynomial_vectors_e0(theta, op, 16);
  for (long n = 0; n <= 16; ++n) {
    CHECK(apply_poly(sys.p(static_cast<std::size_t>(n)), op,
                     FiniteVector<QuadExt>::basis(0)) == y[static_cast<std::size_t>(n)]);
  }

  Gen gen(309);
  const auto pencil = gen.rational_pencil(14);
  const auto rop = build_operator(pencil, 12);
  const auto rsys = generate(pencil, 12);
  const auto ry = polynomial_vectors_e0(pencil, rop, 12);
  for (long n = 0; n <= 12; ++n) {
    CHECK(apply_poly(rsys.p(static_cast<std::size_t>(n)), rop,
                     FiniteVector<Rational>::basis(0)) == ry[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("basis identity e_n = p_n(A) e_0, exact modes") {
  const auto theta_report = verify_basis_identity(theta1_pencil<QuadExt>(20), 20);
  CHECK(theta_report.passed);
  CHECK(theta_report.exact_mode);
  CHECK(theta_report.max_deviation == 0.0);

  Gen gen(305);
  auto [a, b] = gen.oprl_data(18);
  const auto oprl_report = verify_basis_identity(from_oprl(a, b), 15);
  CHECK(oprl_report.passed);
}

TEST_CASE("gram matrix is exactly the identity, exact modes") {
  const auto report = verify_orthonormality(theta1_pencil<QuadExt>(12), 10);
  CHECK(report.passed);
  CHECK(report.checks_run == 11 * 11);

  const auto g = gram_matrix(theta1_pencil<QuadExt>(12), 10);
  CHECK(g[0][0] == QuadExt(1));
  CHECK(g[0][1] == QuadExt(0));
  CHECK(g[7][3] == QuadExt(0));

  Gen gen(306);
  const auto pencil = gen.rational_pencil(14);
  CHECK(verify_orthonormality(pencil, 12).passed);
}

TEST_CASE("vector recurrence residuals vanish") {
  CHECK(verify_vector_recurrence(theta1_pencil<QuadExt>(12), 12).passed);

  Gen gen(307);
  const auto pencil = gen.rational_pencil(14);
  const auto report = verify_vector_recurrence(pencil, 12);
  CHECK(report.passed);
  CHECK(report.max_deviation == 0.0);
}

TEST_CASE("float-mode operator identities stay within the documented tolerance") {
  const auto theta = theta1_pencil<double>(32);

  const auto basis = verify_basis_identity(theta, 30);
  CHECK(basis.passed);
  CHECK_FALSE(basis.exact_mode);
  CHECK(basis.tolerance > 0.0);
  CHECK(basis.tolerance_rule.find("kappa") != std::string::npos);

  const auto recur = verify_vector_recurrence(theta, 30);
  CHECK(recur.passed);
  CHECK(recur.max_deviation <= 1e-10);  // residual norms for n <= 30

  const auto gram = verify_orthonormality(theta1_pencil<double>(42), 40);
  CHECK(gram.passed);
  CHECK(gram.max_deviation <= 1e-9);
}

TEST_CASE("operator build requires enough pencil data") {
  CHECK_THROWS_AS(build_operator(theta1_pencil<QuadExt>(3), 5), SequenceExhausted);
  CHECK_THROWS_AS(build_operator(theta1_pencil<QuadExt>(3), -1), ConfigError);
}
