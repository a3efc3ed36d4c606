#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpa {

enum class BaseField { Rationals, GaussianRationals };
enum class Involution { Identity, Conjugation };

/// Choice of coefficient field together with its involution.
struct FieldSpec {
  BaseField base = BaseField::GaussianRationals;
  Involution involution = Involution::Conjugation;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  static FieldSpec rationals() { return {BaseField::Rationals, Involution::Identity}; }
  static FieldSpec gaussian_conj() { return {BaseField::GaussianRationals, Involution::Conjugation}; }
  static FieldSpec gaussian_id() { return {BaseField::GaussianRationals, Involution::Identity}; }

  /// Throws std::invalid_argument for (Rationals, Conjugation).
  void validate() const;
  bool positive_definite() const;

  /// CLI names: q, qi-conj, qi-id.
  static FieldSpec from_name(std::string_view name);
  std::string name() const;
};

/// Exact element of Q or Q(i).  Real and imaginary parts are kept as
/// canonicalized GMP rationals, so structural equality is value equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : re_(n) {}  // NOLINT: integers convert implicitly
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar i() { return Scalar(0, 1); }
  static Scalar rational(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;
  Scalar conj(Involution inv) const;

  /// Literal form accepted by parse_scalar: `3`, `-1/2`, `i`, `-2i`, `(1+2i)/3`.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Parses `a`, `a/b`, `i`, `bi`, `(a+bi)/c` and `(a+bi)`.
Scalar parse_scalar(std::string_view text);

/// Returns a nonzero tuple with sum x x* = 0 when the involution is not
/// positive definite, nothing otherwise.
std::optional<std::vector<Scalar>> positive_definite_witness(const FieldSpec& spec);

/// True if the scalar is admissible for the field (no imaginary part over Q).
bool belongs_to(const Scalar& s, const FieldSpec& spec);

}  // namespace lpa
