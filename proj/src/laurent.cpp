#include "lpa/laurent.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace lpa {

LaurentPoly::LaurentPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(Scalar c, Exponent e) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
  return p;
}

LaurentPoly::Exponent LaurentPoly::low_exponent() const {
  if (is_zero()) throw std::domain_error("exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::high_exponent() const {
  if (is_zero()) throw std::domain_error("exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

Scalar LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

void LaurentPoly::add_term(Exponent e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPoly LaurentPoly::conj(Involution inv) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c.conj(inv));
  return r;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("not a unit in K[x,x^-1]: " + to_string());
  const auto& [e, c] = *terms_.begin();
  return monomial(c.inverse(), -e);
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::normalize() const {
  if (is_zero()) return {LaurentPoly(1), LaurentPoly()};
  LaurentPoly unit = monomial(leading_coefficient(), low_exponent());
  LaurentPoly normal = *this * unit.unit_inverse();
  return {unit, normal};
}

namespace {

std::string power_of_x(LaurentPoly::Exponent e) {
  if (e == 1) return "x";
  return "x^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Scalar coef = c;
    bool negative = c.to_string().front() == '-';
    if (negative) coef = -coef;
    if (!first) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    first = false;
    if (e == 0) {
      out += coef.to_string();
      continue;
    }
    if (!coef.is_one()) {
      std::string cs = coef.to_string();
      if (cs.find('/') != std::string::npos && cs.front() != '(') cs = "(" + cs + ")";
      out += cs;
    }
    out += power_of_x(e);
  }
  return out;
}

LaurentDivision divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (a.is_zero()) return {};
  using Exp = LaurentPoly::Exponent;
  const Exp lb = b.low_exponent();
  const Exp db = b.width();
  const Scalar lead_inv = b.leading_coefficient().inverse();
  // Work with A = x^-la a and B = x^-lb b as ordinary polynomials; the
  // remainder x^la R has width at most deg R < deg B.
  const Exp la = a.low_exponent();
  LaurentPoly rem = a * LaurentPoly::x(-la);
  LaurentPoly shifted_b = b * LaurentPoly::x(-lb);
  LaurentPoly quot;
  while (!rem.is_zero() && rem.high_exponent() >= db) {
    Exp shift = rem.high_exponent() - db;
    Scalar c = rem.leading_coefficient() * lead_inv;
    LaurentPoly term = LaurentPoly::monomial(c, shift);
    quot += term;
    rem -= term * shifted_b;
  }
  return {quot * LaurentPoly::x(la - lb), rem * LaurentPoly::x(la)};
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly total;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      LaurentPoly t = term();
      total += sign < 0 ? -t : t;
      first = false;
    }
    if (first) fail("empty polynomial");
    return total;
  }

 private:
  LaurentPoly term() {
    skip_ws();
    Scalar coef(1);
    bool have_coef = false;
    if (pos_ < s_.size() && (s_[pos_] == '(' || std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == 'i')) {
      coef = scalar_literal();
      have_coef = true;
    }
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      LaurentPoly::Exponent e = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        e = exponent();
      }
      return LaurentPoly::monomial(coef, e);
    }
    if (!have_coef) fail("expected coefficient or x");
    return LaurentPoly(coef);
  }

  // Longest prefix that forms a scalar literal: balanced parentheses, then
  // an optional /denominator; or digits with optional i and /denominator.
  Scalar scalar_literal() {
    std::size_t start = pos_;
    if (s_[pos_] == '(') {
      int depth = 0;
      do {
        if (s_[pos_] == '(') ++depth;
        if (s_[pos_] == ')') --depth;
        ++pos_;
      } while (pos_ < s_.size() && depth > 0);
      if (depth != 0) fail("unbalanced parentheses");
    } else {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == 'i') ++pos_;
    }
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string_view lit = s_.substr(start, pos_ - start);
    // Inner parentheses may hold a plain rational such as (1/2).
    if (lit.front() == '(' && lit.back() == ')') {
      std::string_view inner = lit.substr(1, lit.size() - 2);
      if (inner.find('/') != std::string_view::npos) return parse_scalar(inner);
    }
    return parse_scalar(lit);
  }

  LaurentPoly::Exponent exponent() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    auto e = std::stoll(std::string(s_.substr(start, pos_ - start)));
    return neg ? -e : e;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad Laurent literal '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " +
                                what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return LaurentParser(text).parse(); }

}  // namespace lpa
