#include "lpa/scalar.hpp"

#include <cctype>

namespace lpa {

void FieldSpec::validate() const {
  if (base == BaseField::Rationals && involution == Involution::Conjugation)
    throw std::invalid_argument("conjugation involution requires the Gaussian rationals");
}

bool FieldSpec::positive_definite() const {
  return !(base == BaseField::GaussianRationals && involution == Involution::Identity);
}

FieldSpec FieldSpec::from_name(std::string_view name) {
  if (name == "q") return rationals();
  if (name == "qi-conj") return gaussian_conj();
  if (name == "qi-id") return gaussian_id();
  throw std::invalid_argument("unknown field '" + std::string(name) + "' (expected q, qi-conj or qi-id)");
}

std::string FieldSpec::name() const {
  if (base == BaseField::Rationals) return "q";
  return involution == Involution::Conjugation ? "qi-conj" : "qi-id";
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_real()) return Scalar(1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar Scalar::conj(Involution inv) const {
  if (inv == Involution::Identity || is_real()) return *this;
  return Scalar(re_, -im_);
}

namespace {

// Common-denominator form: (a + b i) / c with c > 0.
struct Integral {
  mpz_class a, b, c;
};

Integral integral_form(const mpq_class& re, const mpq_class& im) {
  mpz_class c;
  mpz_lcm(c.get_mpz_t(), re.get_den_mpz_t(), im.get_den_mpz_t());
  return {re.get_num() * (c / re.get_den()), im.get_num() * (c / im.get_den()), c};
}

std::string imag_part(const mpz_class& b) {
  if (b == 1) return "i";
  if (b == -1) return "-i";
  return b.get_str() + "i";
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0 && im_.get_den() == 1) return imag_part(im_.get_num());
  auto [a, b, c] = integral_form(re_, im_);
  if (a == 0) return imag_part(b) + "/" + c.get_str();
  std::string out = "(" + a.get_str() + (b > 0 ? "+" : "-") + imag_part(abs(b)) + ")";
  if (c != 1) out += "/" + c.get_str();
  return out;
}

namespace {

class ScalarLexer {
 public:
  explicit ScalarLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad scalar literal '" + std::string(s_) + "': " + what);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// term := [digits] ['i'] ; sum := ['-'] term (('+'|'-') term)*
Scalar parse_gaussian_sum(ScalarLexer& lx) {
  Scalar total;
  bool first = true;
  while (true) {
    int sign = 1;
    if (lx.accept('-')) {
      sign = -1;
    } else if (!first && !lx.accept('+')) {
      break;
    }
    Scalar term;
    bool has_digits = lx.peek_digit();
    mpz_class n = has_digits ? lx.integer() : mpz_class(1);
    if (lx.accept('i')) {
      term = Scalar(0, mpq_class(n));
    } else if (has_digits) {
      term = Scalar(mpq_class(n));
    } else {
      lx.fail("expected number or i");
    }
    total += sign < 0 ? -term : term;
    first = false;
  }
  return total;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  ScalarLexer lx(text);
  Scalar value;
  if (lx.accept('(')) {
    value = parse_gaussian_sum(lx);
    lx.expect(')');
  } else {
    value = parse_gaussian_sum(lx);
  }
  if (lx.accept('/')) {
    mpz_class d = lx.integer();
    if (d == 0) lx.fail("zero denominator");
    value /= Scalar(mpq_class(d));
  }
  if (!lx.at_end()) lx.fail("trailing characters");
  return value;
}

std::optional<std::vector<Scalar>> positive_definite_witness(const FieldSpec& spec) {
  spec.validate();
  if (spec.positive_definite()) return std::nullopt;
  // 1*1 + i*i = 0 when i* = i.
  return std::vector<Scalar>{Scalar(1), Scalar::i()};
}

bool belongs_to(const Scalar& s, const FieldSpec& spec) {
  return spec.base == BaseField::GaussianRationals || s.is_real();
}

}  // namespace lpa
