#include "hilbtan/parse.hpp"

#include <cctype>

namespace hilbtan {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const RingPtr& ring) : src_(src), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) {
      if (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' || src_[pos_] == '(')
        throw ParseError("implicit multiplication is not allowed; expected operator", pos_);
      throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = factor();
        if (d.is_zero() || d.leading().mono.degree() != 0 || d.size() != 1)
          throw ParseError("division is only allowed by a nonzero constant", at);
        const auto& F = ring_->field();
        try {
          acc = F.is_field() ? acc.scale(F.inv(d.leading().coeff))
                             : divide_integer(acc, d.leading().coeff.rational().get_num());
        } catch (const std::domain_error& e) {
          throw ParseError(e.what(), at);
        }
      } else {
        return acc;
      }
    }
  }

  Polynomial divide_integer(const Polynomial& p, const mpz_class& d) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) out.push_back({t.mono, p.field().exact_div(t.coeff, d)});
    return Polynomial::from_sorted_terms(ring_, std::move(out));
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (accept('-')) throw ParseError("negative exponent", at);
      skip_ws();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError("expected integer exponent", pos_);
      mpz_class e = integer();
      if (e > 0xFFFF) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<unsigned>(e.get_ui()));
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '^') throw ParseError("chained exponents are ambiguous", pos_);
    }
    return base;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class v = integer();
      if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        throw ParseError("implicit multiplication is not allowed", pos_);
      return Polynomial::constant(ring_, ring_->field().from_mpz(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view src_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, const RingPtr& ring) { return Parser(src, ring).parse(); }

}  // namespace hilbtan
