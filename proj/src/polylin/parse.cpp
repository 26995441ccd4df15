#include <cctype>

#include "polylin/poly.hpp"

namespace pl {

namespace {

using P = Poly<FieldElem>;

class PolyParser {
 public:
  PolyParser(const std::string& s, const Ring* R) : s_(s), R_(R) {}
  P run() {
    P v = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  const std::string& s_;
  const Ring* R_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw ef::ParseError(why + " at position " + std::to_string(i_) + " in '" + s_ + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  P konst(const FieldElem& c) { return P::constant(R_, c); }
  P expr() {
    P v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  P term() {
    P v = factor();
    for (;;) {
      if (eat('*')) v = v * factor();
      else if (eat('/')) {
        P d = factor();
        if (d.size() != 1 || d.lead_mono().deg != 0) fail("division by a non-constant");
        v = v.scaled(ef::inv(d.lead_coeff()));
      } else return v;
    }
  }
  P factor() {
    if (eat('-')) return -factor();
    P b = atom();
    if (eat('^')) {
      skip();
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("exponent expected");
      long e = std::stol(s_.substr(st, i_ - st));
      P r = konst(FieldElem(1));
      for (long k = 0; k < e; ++k) r = r * b;
      return r;
    }
    return b;
  }
  P atom() {
    skip();
    if (eat('(')) {
      P v = expr();
      if (!eat(')')) fail("')' expected");
      return v;
    }
    if (i_ >= s_.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return konst(FieldElem(ef::parse_rat(s_.substr(st, i_ - st))));
    }
    if (std::isalpha(static_cast<unsigned char>(s_[i_]))) {
      size_t st = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string id = s_.substr(st, i_ - st);
      int v = R_->index_of(id);
      if (v >= 0) return P::var(R_, v, FieldElem(1));
      if (id == "z") return konst(FieldElem(Cyc7::zeta(1)));
      if (id == "r2") return konst(FieldElem::sqrt2());
      i_ = st;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected token");
  }
};

}  // namespace

Poly<FieldElem> parse_poly_field(const std::string& s, const Ring* R) { return PolyParser(s, R).run(); }

Poly<Rat> parse_poly(const std::string& s, const Ring* R) {
  return map_coeffs<Rat>(parse_poly_field(s, R), [&](const FieldElem& c) {
    Rat r;
    if (!as_rat(c, r)) throw ef::ParseError("non-rational coefficient in '" + s + "'");
    return r;
  });
}

Poly<Cyc7> parse_poly_cyc(const std::string& s, const Ring* R) {
  return map_coeffs<Cyc7>(parse_poly_field(s, R), [&](const FieldElem& c) {
    if (!c.in_cyc7()) throw ef::ParseError("coefficient outside Q(z) in '" + s + "'");
    return c.a();
  });
}

}  // namespace pl
