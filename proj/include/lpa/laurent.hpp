#pragma once

#include "lpa/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace lpa {

/// Exact element of K[x, x^-1], stored sparsely with no zero coefficients.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Scalar>;

  LaurentPoly() = default;
  LaurentPoly(Scalar c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Scalar(c)) {}  // NOLINT

  static LaurentPoly monomial(Scalar c, Exponent e);
  static LaurentPoly x(Exponent e = 1) { return monomial(Scalar(1), e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  /// Single nonzero term k x^n; exactly the units of K[x, x^-1].
  bool is_unit() const { return terms_.size() == 1; }

  Exponent low_exponent() const;   // requires nonzero
  Exponent high_exponent() const;  // requires nonzero
  /// high - low; the Euclidean size used for division with remainder.
  Exponent width() const { return high_exponent() - low_exponent(); }
  Scalar coefficient(Exponent e) const;
  Scalar leading_coefficient() const { return terms_.rbegin()->second; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Scalar& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Sum k_m x^m  ->  sum k_m* x^-m.
  LaurentPoly conj(Involution inv) const;

  /// Inverse of a unit; throws std::domain_error otherwise.
  LaurentPoly unit_inverse() const;

  /// Writes p = u * n with u a unit and n having lowest exponent 0 and
  /// leading coefficient 1.  Returns {u, n}; zero maps to {1, 0}.
  std::pair<LaurentPoly, LaurentPoly> normalize() const;

  std::string to_string() const;

 private:
  void add_term(Exponent e, const Scalar& c);
  Terms terms_;
};

struct LaurentDivision {
  LaurentPoly quotient;
  LaurentPoly remainder;  // zero, or width(remainder) < width(divisor)
};

/// Euclidean division in K[x, x^-1]; throws std::domain_error if b == 0.
LaurentDivision divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b when it exists.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Parses `3 + x + x^-1`, `(1/2)x^-2 - i x`, `2x^3`, `0`.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace lpa
