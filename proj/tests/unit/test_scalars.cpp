#include <doctest.h>

#include "lpa/laurent.hpp"
#include "lpa/scalar.hpp"

#include <random>

using namespace lpa;

namespace {

Scalar random_scalar(std::mt19937_64& rng, bool gaussian) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  Scalar re = Scalar::rational(num(rng), den(rng));
  if (!gaussian) return re;
  return re + Scalar::rational(num(rng), den(rng)) * Scalar::i();
}

LaurentPoly random_laurent(std::mt19937_64& rng, bool gaussian, int max_width) {
  std::uniform_int_distribution<int> low(-3, 3), width(0, max_width), terms(1, 4);
  int lo = low(rng), w = width(rng);
  LaurentPoly p;
  int n = terms(rng);
  for (int k = 0; k < n; ++k) p += LaurentPoly::monomial(random_scalar(rng, gaussian), lo + std::uniform_int_distribution<int>(0, w)(rng));
  return p;
}

const FieldSpec kFields[] = {FieldSpec::rationals(), FieldSpec::gaussian_conj(), FieldSpec::gaussian_id()};

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::rationals().positive_definite());
  CHECK(FieldSpec::gaussian_conj().positive_definite());
  CHECK_FALSE(FieldSpec::gaussian_id().positive_definite());
  CHECK_THROWS_AS(FieldSpec({BaseField::Rationals, Involution::Conjugation}).validate(), std::invalid_argument);
  for (const FieldSpec& f : kFields) CHECK(FieldSpec::from_name(f.name()) == f);
  CHECK_THROWS_AS(FieldSpec::from_name("r"), std::invalid_argument);
}

TEST_CASE("scalar arithmetic") {
  CHECK(Scalar::i().conj(Involution::Conjugation) == -Scalar::i());
  CHECK(Scalar::i().conj(Involution::Identity) == Scalar::i());
  CHECK(Scalar::rational(2, 3).inverse() == Scalar::rational(3, 2));
  CHECK(Scalar::rational(4, 6) == Scalar::rational(2, 3));
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK((Scalar(1) + Scalar::i()).inverse() == Scalar::rational(1, 2) - Scalar::rational(1, 2) * Scalar::i());
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("scalar literals round trip") {
  for (const char* text : {"3", "-1/2", "i", "-2i", "i/2", "(1+2i)/3", "(1-i)/2", "0"}) {
    CAPTURE(text);
    CHECK(parse_scalar(text).to_string() == text);
  }
  CHECK(parse_scalar("(1+2i)") == Scalar(1) + Scalar(2) * Scalar::i());
  CHECK(parse_scalar("4/6") == Scalar::rational(2, 3));
  CHECK_THROWS(parse_scalar("1/0"));
  CHECK_THROWS(parse_scalar("abc"));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    Scalar s = random_scalar(rng, true);
    CHECK(parse_scalar(s.to_string()) == s);
  }
}

TEST_CASE("involution properties on samples") {
  std::mt19937_64 rng(3);
  for (const FieldSpec& f : kFields) {
    const bool gaussian = f.base == BaseField::GaussianRationals;
    for (int k = 0; k < 300; ++k) {
      Scalar a = random_scalar(rng, gaussian), b = random_scalar(rng, gaussian);
      CHECK((a + b).conj(f.involution) == a.conj(f.involution) + b.conj(f.involution));
      CHECK((a * b).conj(f.involution) == b.conj(f.involution) * a.conj(f.involution));
      CHECK(a.conj(f.involution).conj(f.involution) == a);
      LaurentPoly p = random_laurent(rng, gaussian, 4), q = random_laurent(rng, gaussian, 4);
      CHECK((p + q).conj(f.involution) == p.conj(f.involution) + q.conj(f.involution));
      CHECK((p * q).conj(f.involution) == q.conj(f.involution) * p.conj(f.involution));
      CHECK(p.conj(f.involution).conj(f.involution) == p);
    }
  }
}

TEST_CASE("laurent arithmetic") {
  const LaurentPoly x = LaurentPoly::x();
  const LaurentPoly one_plus_x = LaurentPoly(1) + x;
  CHECK(one_plus_x.conj(Involution::Identity) == LaurentPoly(1) + LaurentPoly::x(-1));
  CHECK(one_plus_x * one_plus_x.conj(Involution::Identity) == LaurentPoly(2) + x + LaurentPoly::x(-1));
  CHECK(LaurentPoly(1) + one_plus_x * one_plus_x.conj(Involution::Identity) == parse_laurent("3 + x + x^-1"));
  CHECK((x * LaurentPoly::x(-1)).is_one());
  CHECK(LaurentPoly::monomial(Scalar::i(), 2).conj(Involution::Conjugation) == LaurentPoly::monomial(-Scalar::i(), -2));
  CHECK(parse_laurent("3 + x + x^-1").to_string() == "x^-1 + 3 + x");
  CHECK(parse_laurent("(1/2)x^-2 - i x") == LaurentPoly::monomial(Scalar::rational(1, 2), -2) - LaurentPoly::monomial(Scalar::i(), 1));
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    LaurentPoly p = random_laurent(rng, true, 5);
    CAPTURE(p.to_string());
    CHECK(parse_laurent(p.to_string()) == p);
  }
  CHECK(parse_laurent("0").is_zero());
  CHECK(parse_laurent("2x^3") == LaurentPoly::monomial(Scalar(2), 3));
}

TEST_CASE("is_unit") {
  CHECK_FALSE(parse_laurent("3 + x + x^-1").is_unit());
  CHECK(parse_laurent("5x^-3").is_unit());
  CHECK_FALSE(LaurentPoly().is_unit());
  CHECK(parse_laurent("5x^-3").unit_inverse() == LaurentPoly::monomial(Scalar::rational(1, 5), 3));
  CHECK_THROWS_AS(parse_laurent("1 + x").unit_inverse(), std::domain_error);

  // is_unit agrees with the existence of an exact inverse.
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    LaurentPoly p = random_laurent(rng, k % 2 == 0, 6);
    if (p.is_zero()) continue;
    CAPTURE(p.to_string());
    CHECK(p.is_unit() == exact_divide(LaurentPoly(1), p).has_value());
  }
}

TEST_CASE("division with remainder") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 500; ++k) {
    LaurentPoly a = random_laurent(rng, true, 6), b = random_laurent(rng, true, 4);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(r.width() < b.width());
  }
  CHECK(*exact_divide(parse_laurent("x + x^2"), parse_laurent("1 + x")) == LaurentPoly::x());
  CHECK_FALSE(exact_divide(LaurentPoly(1), parse_laurent("3 + x + x^-1")));
  CHECK_THROWS_AS(divmod(LaurentPoly(1), LaurentPoly()), std::domain_error);
}

TEST_CASE("normalize") {
  auto [u, n] = parse_laurent("2x^-1 + 6 + 2x").normalize();
  CHECK(u.is_unit());
  CHECK(n == parse_laurent("1 + 3x + x^2"));
  CHECK(u * n == parse_laurent("2x^-1 + 6 + 2x"));
  auto [u0, n0] = LaurentPoly().normalize();
  CHECK(u0.is_one());
  CHECK(n0.is_zero());
}

TEST_CASE("positive definiteness witnesses") {
  CHECK_FALSE(positive_definite_witness(FieldSpec::rationals()));
  CHECK_FALSE(positive_definite_witness(FieldSpec::gaussian_conj()));
  auto w = positive_definite_witness(FieldSpec::gaussian_id());
  REQUIRE(w);
  CHECK(*w == std::vector<Scalar>{Scalar(1), Scalar::i()});
  Scalar sum;
  for (const Scalar& s : *w) sum += s * s.conj(Involution::Identity);
  CHECK(sum.is_zero());

  std::mt19937_64 rng(13);
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::gaussian_conj()}) {
    const bool gaussian = f.base == BaseField::GaussianRationals;
    for (int k = 0; k < 1000; ++k) {
      std::size_t n = 1 + rng() % 4;
      Scalar total;
      bool all_zero = true;
      for (std::size_t j = 0; j < n; ++j) {
        Scalar s = rng() % 3 == 0 ? Scalar(0) : random_scalar(rng, gaussian);
        all_zero = all_zero && s.is_zero();
        total += s * s.conj(f.involution);
      }
      CHECK(total.is_zero() == all_zero);
    }
  }
}

TEST_CASE("belongs_to") {
  CHECK(belongs_to(Scalar(3), FieldSpec::rationals()));
  CHECK_FALSE(belongs_to(Scalar::i(), FieldSpec::rationals()));
  CHECK(belongs_to(Scalar::i(), FieldSpec::gaussian_id()));
}
