#include <doctest.h>

#include "generators.hpp"
#include "jpencil/pencil.hpp"
#include "jpencil/pencil_config.hpp"
#include "oracles.hpp"

using namespace jpencil;
using jpencil::testing::Gen;

TEST_CASE("theta1 pencil entries and validation") {
  const auto p = theta1_pencil<QuadExt>(12);
  CHECK(p.a_at(5) == QuadExt::sqrt_of(2));
  CHECK(p.b_at(3) == QuadExt(2));
  CHECK(p.gamma_at(9) == QuadExt(1));
  CHECK(p.alpha_at(7) == QuadExt(0));
  CHECK(p.beta_at(0) == QuadExt(0));
  CHECK(p.alpha == QuadExt::sqrt_of(2));
  CHECK(p.beta == QuadExt::sqrt_of(2));
  CHECK(p.max_index() == 12);
  CHECK(validate_pencil(p).ok());
  CHECK(validate_pencil(p, 2).ok());

  // Field-consistency: entries live in Q(sqrt(2)), not Q(sqrt(3)).
  const auto mismatch = validate_pencil(p, 3);
  CHECK_FALSE(mismatch.ok());
}

TEST_CASE("validation reports the violating entry") {
  auto p = theta1_pencil<QuadExt>(6);
  p.gamma_seq[3] = QuadExt(0);
  const auto report = validate_pencil(p);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].field == "gamma_seq");
  CHECK(report.violations[0].index == 3);

  auto q = theta1_pencil<double>(6);
  q.alpha = -1.0;
  const auto report2 = validate_pencil(q);
  REQUIRE(report2.violations.size() == 1);
  CHECK(report2.violations[0].field == "alpha");

  // Strict positivity in float mode: 0.0 is a violation, tiny positive is not.
  auto r = theta1_pencil<double>(6);
  r.a[2] = 0.0;
  CHECK_FALSE(validate_pencil(r).ok());
  r.a[2] = 1e-300;
  CHECK(validate_pencil(r).ok());
}

TEST_CASE("negative indices read as zero, exhausted indices throw") {
  const auto p = theta1_pencil<QuadExt>(4);
  CHECK(p.a_at(-1) == QuadExt(0));
  CHECK(p.gamma_at(-2) == QuadExt(0));
  CHECK_THROWS_AS(p.a_at(5), SequenceExhausted);
}

TEST_CASE("oprl embedding: constant coefficient example") {
  // a_k = 1/2, b_k = 0: alpha_0 = 1/4, alpha_n = 1/2 (n >= 1), beta_n = 0,
  // gamma_n = 1/4, alpha = 2, beta = 0.
  const std::vector<Rational> a(8, Rational(1, 2));
  const std::vector<Rational> b(8, Rational(0));
  const auto p = from_oprl(a, b);

  CHECK(p.alpha_seq[0] == Rational(1, 4));
  for (std::size_t n = 1; n < p.alpha_seq.size(); ++n) {
    CHECK(p.alpha_seq[n] == Rational(1, 2));
  }
  for (const auto& x : p.beta_seq) CHECK(x == Rational(0));
  for (const auto& x : p.gamma_seq) CHECK(x == Rational(1, 4));
  CHECK(p.alpha == Rational(2));
  CHECK(p.beta == Rational(0));
  CHECK(validate_pencil(p).ok());
}

TEST_CASE("oprl embedding: two-term data") {
  const auto p = from_oprl<Rational>({Rational(1), Rational(1)}, {Rational(0), Rational(0)});
  CHECK(p.gamma_seq.at(0) == Rational(1));
  CHECK(p.alpha_seq.at(1) == Rational(2));
  CHECK_THROWS_AS(from_oprl<Rational>({}, {}), ConfigError);
}

TEST_CASE("oprl bands equal the squared tridiagonal matrix" *
          doctest::description("property")) {
  using jpencil::testing::dense_multiply;
  using jpencil::testing::dense_tridiagonal;

  Gen gen(101);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t len = static_cast<std::size_t>(gen.int_in(3, 20));
    auto [a, b] = gen.oprl_data(len);
    const auto p = from_oprl(a, b);
    CHECK(validate_pencil(p).ok());

    // (J3^2)_{0,2} = a_0 a_1 > 0.
    CHECK(p.gamma_seq[0].sign() == 1);

    const auto j3 = dense_tridiagonal(a, b, len);
    const auto sq = dense_multiply(j3, j3);
    // Interior entries only: the last two rows of the truncated product are
    // corrupted by the cut.
    for (std::size_t n = 0; n + 2 < len; ++n) {
      CHECK(p.alpha_seq.at(n) == sq[n][n]);
      CHECK(p.beta_seq.at(n) == sq[n][n + 1]);
      CHECK(p.gamma_seq.at(n) == sq[n][n + 2]);
    }
  }
}

TEST_CASE("coefficient sources produce the requested prefix") {
  const auto constant = CoefficientSource<Rational>::constant(Rational(5));
  CHECK(constant.at(0) == Rational(5));
  CHECK(constant.at(999) == Rational(5));

  const auto list =
      CoefficientSource<Rational>::explicit_list({Rational(1), Rational(2)});
  CHECK(list.at(1) == Rational(2));
  CHECK_THROWS_AS(list.at(2), SequenceExhausted);

  const auto periodic = CoefficientSource<Rational>::eventually_periodic(
      {Rational(9)}, {Rational(1), Rational(2)});
  CHECK(periodic.at(0) == Rational(9));
  CHECK(periodic.at(1) == Rational(1));
  CHECK(periodic.at(2) == Rational(2));
  CHECK(periodic.at(3) == Rational(1));
  CHECK(periodic.take(5).size() == 5);
}

TEST_CASE("pencil config: builtin theta1") {
  const auto cfg = parse_pencil_config(
      R"({"builtin": "theta1", "scalar_mode": "quadext", "radicand": 2})");
  CHECK(cfg.builtin == "theta1");
  const auto p = build_pencil<QuadExt>(cfg, 10);
  CHECK(p.a_at(10) == QuadExt::sqrt_of(2));

  // theta1 needs sqrt(2) in the field.
  CHECK_THROWS_AS(build_pencil<Rational>(cfg, 4), ConfigError);
  auto bad = cfg;
  bad.radicand = 3;
  CHECK_THROWS_AS(build_pencil<QuadExt>(bad, 4), ConfigError);
}

TEST_CASE("pencil config: builtin oprl_square reaches the requested index") {
  const auto cfg = parse_pencil_config(R"({
    "builtin": "oprl_square", "scalar_mode": "rational",
    "a": {"kind": "constant", "value": "1/2"},
    "b": {"kind": "constant", "value": "0"}
  })");
  const auto p = build_pencil<Rational>(cfg, 9);
  CHECK(p.max_index() >= 9);
  CHECK(p.gamma_at(9) == Rational(1, 4));
}

TEST_CASE("pencil config: full band specification") {
  const auto cfg = parse_pencil_config(R"({
    "scalar_mode": "rational",
    "alpha": "2", "beta": "-1",
    "a": {"kind": "eventually-periodic", "values": ["1"], "period": ["2", "3"]},
    "b": {"kind": "constant", "value": "0"},
    "alpha_seq": {"kind": "constant", "value": "1"},
    "beta_seq": {"kind": "constant", "value": "0"},
    "gamma_seq": {"kind": "constant", "value": "1"}
  })");
  const auto p = build_pencil<Rational>(cfg, 5);
  CHECK(p.a == std::vector<Rational>{Rational(1), Rational(2), Rational(3), Rational(2),
                                     Rational(3), Rational(2)});
  CHECK(p.alpha == Rational(2));
}

TEST_CASE("pencil config: malformed input throws ConfigError") {
  CHECK_THROWS_AS(parse_pencil_config("not json"), ConfigError);
  CHECK_THROWS_AS(parse_pencil_config(R"({"scalar_mode": "decimal"})"), ConfigError);
  CHECK_THROWS_AS(parse_pencil_config(R"({"scalar_mode": "quadext"})"), ConfigError);
  CHECK_THROWS_AS(parse_pencil_config(R"({"builtin": "oprl_square"})"), ConfigError);
  CHECK_THROWS_AS(
      parse_pencil_config(R"({"scalar_mode": "rational", "alpha": "1"})"),
      ConfigError);
  const auto cfg = parse_pencil_config(R"({"builtin": "nope"})");
  CHECK_THROWS_AS(build_pencil<double>(cfg, 3), ConfigError);
}
