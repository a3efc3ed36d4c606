#include "lpa/expression.hpp"

#include <cctype>
#include <optional>

namespace lpa {

namespace {

class ElementParser {
 public:
  ElementParser(GraphRef g, FieldSpec f, std::string_view text) : g_(std::move(g)), f_(f), s_(text) {}

  Element parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    Element x = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return x;
  }

 private:
  Element expr() {
    skip_ws();
    bool negate = accept('-');
    Element acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  // A bare vertex or (ghost) edge remembers its endpoints so that writing
  // a path whose consecutive letters do not meet is reported, not zeroed.
  struct Factor {
    Element value;
    std::optional<std::pair<VertexId, VertexId>> ends;
  };

  Element term() {
    Factor acc = factor();
    while (true) {
      skip_ws();
      bool dotted = accept('.');
      if (!dotted && !starts_primary()) break;
      std::size_t col = pos_;
      Factor next = factor();
      if (acc.ends && next.ends && acc.ends->second != next.ends->first)
        fail_at(col, "path letters do not meet: range '" + g_->vertex_name(acc.ends->second) + "' vs source '" +
                         g_->vertex_name(next.ends->first) + "'");
      acc.value = acc.value * next.value;
      acc.ends = next.ends;
    }
    return acc.value;
  }

  Factor factor() {
    std::optional<std::pair<VertexId, VertexId>> ends;
    Element x = primary(&ends);
    while (true) {
      if (accept('*')) {
        x = x.star();
        if (ends) std::swap(ends->first, ends->second);
      } else if (accept('/')) {
        skip_ws();
        std::size_t col = pos_;
        mpz_class d = integer();
        if (d == 0) fail_at(col, "division by zero");
        x *= Scalar(mpq_class(mpz_class(1), d));
        ends.reset();
      } else {
        break;
      }
    }
    return {std::move(x), ends};
  }

  Element primary(std::optional<std::pair<VertexId, VertexId>>* ends) {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Element x = expr();
      if (!accept(')')) fail("expected ')'");
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class n = integer();
      Scalar s(mpq_class{n});
      if (pos_ < s_.size() && s_[pos_] == 'i' && !ident_char_at(pos_ + 1)) {
        ++pos_;
        s = Scalar(0, mpq_class{n});
      }
      return scalar_element(s);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t col = pos_;
      std::string name = identifier();
      if (name == "i") return scalar_element(Scalar::i());
      if (auto v = g_->find_vertex(name)) {
        *ends = std::pair{*v, *v};
        return Element::vertex(g_, f_, *v);
      }
      if (auto e = g_->find_edge(name)) {
        *ends = std::pair{g_->source(*e), g_->range(*e)};
        return Element::edge(g_, f_, *e);
      }
      fail_at(col, "unknown symbol '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Element scalar_element(const Scalar& s) {
    if (!belongs_to(s, f_)) fail("imaginary scalar over the field " + f_.name());
    return Element::scalar(g_, f_, s);
  }

  bool starts_primary() {
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  bool ident_char_at(std::size_t k) const {
    return k < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[k])) || s_[k] == '_');
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (ident_char_at(pos_)) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& what) const { throw ExpressionError(col + 1, what); }

  GraphRef g_;
  FieldSpec f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(GraphRef g, FieldSpec f, std::string_view text) {
  return ElementParser(std::move(g), f, text).parse();
}

}  // namespace lpa
