#include <doctest.h>

#include "lpa/snf.hpp"

#include <random>

using namespace lpa;

namespace {

LaurentMatrix M(std::string_view text) { return parse_laurent_matrix(text); }

LaurentMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_int_distribution<int> exponent(-3, 3), coef(-2, 2), terms(0, 2);
  LaurentMatrix m(size(rng), size(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      int n = terms(rng);
      for (int k = 0; k < n; ++k) m(r, c) += LaurentPoly::monomial(Scalar(coef(rng)), exponent(rng));
    }
  return m;
}

void check_snf(const LaurentMatrix& a) {
  CAPTURE(to_string(a));
  SNFResult s = snf(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(determinant(s.U).is_unit());
  CHECK(determinant(s.V).is_unit());
  CHECK(divisibility_chain(s.D));
  for (const LaurentPoly& d : s.diagonal()) {
    if (d.is_zero()) continue;
    CHECK(d.low_exponent() == 0);
    CHECK(d.leading_coefficient().is_one());
  }
}

}  // namespace

TEST_CASE("snf examples") {
  SNFResult unit = snf(M("x, 0; 0, 0"));
  CHECK(unit.D == M("1, 0; 0, 0"));
  check_snf(M("x, 0; 0, 0"));

  SNFResult t = snf(M("3 + x + x^-1"));
  CHECK(t.D(0, 0) == M("1 + 3x + x^2")(0, 0));
  CHECK_FALSE(t.D(0, 0).is_unit());

  SNFResult z = snf(LaurentMatrix(2, 3));
  CHECK(z.D.is_zero());
  CHECK(z.U == LaurentMatrix::identity(2));
  CHECK(z.V == LaurentMatrix::identity(3));

  SNFResult two = snf(M("1 + x, 0; 0, 1 - x"));
  CHECK(two.diagonal()[0].is_one());
  CHECK(two.diagonal()[1] == M("1 - x^2")(0, 0) * LaurentPoly(-1));
  check_snf(M("1 + x, 0; 0, 1 - x"));
  check_snf(M("2, 4, 4; -6, 6, 12; 10, -4, -16"));
}

TEST_CASE("snf invariants on random matrices") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 150; ++k) check_snf(random_matrix(rng));
}

TEST_CASE("divisibility chain") {
  CHECK(divisibility_chain(M("1, 0; 0, 1 + x")));
  CHECK_FALSE(divisibility_chain(M("1 + x, 0; 0, 1 - x")));
  CHECK_FALSE(divisibility_chain(M("0, 0; 0, 1")));
  CHECK_FALSE(divisibility_chain(M("1, 1; 0, 1")));
}

TEST_CASE("laurent_solve") {
  std::vector<LaurentPoly> b{M("1 + x")(0, 0), LaurentPoly::x(-2)};
  CHECK(*laurent_solve(LaurentMatrix::identity(2), b) == b);
  CHECK_FALSE(laurent_solve(M("3 + x + x^-1"), {LaurentPoly(1)}));
  CHECK(*laurent_solve(M("1 + x"), {M("x + x^2")(0, 0)}) == std::vector<LaurentPoly>{LaurentPoly::x()});
  CHECK_FALSE(laurent_solve(M("1, 0; 0, 0"), {LaurentPoly(0), LaurentPoly(1)}));

  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    LaurentMatrix a = random_matrix(rng);
    std::vector<LaurentPoly> z(a.cols());
    for (auto& entry : z) entry = LaurentPoly::monomial(Scalar(static_cast<long>(rng() % 3) + 1), static_cast<int>(rng() % 5) - 2);
    std::vector<LaurentPoly> rhs(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) rhs[r] += a(r, c) * z[c];
    auto sol = laurent_solve(a, rhs);
    REQUIRE(sol);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      LaurentPoly got;
      for (std::size_t c = 0; c < a.cols(); ++c) got += a(r, c) * (*sol)[c];
      CHECK(got == rhs[r]);
    }
  }
}

TEST_CASE("projection generators in matrices over K[x,x^-1]") {
  CHECK_FALSE(has_projection_generator_laurent(M("1, 1 + x; 0, 0")));
  CHECK(has_projection_generator_laurent(M("1, 0; 0, 0")));
  CHECK(has_projection_generator_laurent(M("1, x; 0, 0")));
  CHECK_THROWS_AS(has_projection_generator_laurent(M("1, 0; 0, 2")), std::invalid_argument);
  // The obstruction is 1 + (1+x)(1+x)*.
  LaurentMatrix e = M("1, 1 + x; 0, 0");
  LaurentMatrix eestar = e * conjugate_transpose(e, Involution::Identity);
  CHECK(eestar(0, 0) == M("3 + x + x^-1")(0, 0));
  CHECK_FALSE(eestar(0, 0).is_unit());
}
