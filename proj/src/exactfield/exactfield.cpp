#include "exactfield/exactfield.hpp"

#include <cctype>
#include <sstream>

namespace ef {

std::string to_string(const Rat& x) { return x.get_str(); }

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw DivByZero();
  return r;
}

// ---- Cyc7 --------------------------------------------------------------

Cyc7 Cyc7::zeta(long k) {
  std::array<Rat, 7> r{};
  r[((k % 7) + 7) % 7] = 1;
  return from_redundant(r);
}

bool Cyc7::is_zero() const {
  for (auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyc7::is_rational() const {
  for (int i = 1; i < 6; ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Cyc7 Cyc7::from_redundant(const std::array<Rat, 7>& r) {
  Cyc7 x;
  for (int i = 0; i < 6; ++i) x.c_[i] = r[i] - r[6];
  return x;
}

std::array<Rat, 7> Cyc7::traceless() const {
  // shift by the mean so the seven coefficients sum to zero
  std::array<Rat, 7> r{};
  Rat s = 0;
  for (int i = 0; i < 6; ++i) s += c_[i];
  Rat m = s / 7;
  for (int i = 0; i < 6; ++i) r[i] = c_[i] - m;
  r[6] = -m;
  return r;
}

Cyc7& Cyc7::operator+=(const Cyc7& o) {
  for (int i = 0; i < 6; ++i) c_[i] += o.c_[i];
  return *this;
}
Cyc7& Cyc7::operator-=(const Cyc7& o) {
  for (int i = 0; i < 6; ++i) c_[i] -= o.c_[i];
  return *this;
}
Cyc7& Cyc7::operator*=(const Rat& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

Cyc7& Cyc7::operator*=(const Cyc7& o) {
  std::array<Rat, 7> r{};
  for (int i = 0; i < 6; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (int j = 0; j < 6; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      r[(i + j) % 7] += c_[i] * o.c_[j];
    }
  }
  *this = from_redundant(r);
  return *this;
}

Cyc7 Cyc7::operator-() const {
  Cyc7 x = *this;
  for (auto& c : x.c_) c = -c;
  return x;
}

Cyc7 galois_theta(const Cyc7& x, int power) {
  int e = 1;
  for (int k = 0; k < ((power % 6) + 6) % 6; ++k) e = e * 3 % 7;
  std::array<Rat, 7> r{};
  for (int i = 0; i < 6; ++i) r[i * e % 7] += x[i];
  return Cyc7::from_redundant(r);
}

Cyc7 conj(const Cyc7& x) { return galois_theta(x, 3); }

Rat norm(const Cyc7& x) {
  Cyc7 p = x;
  for (int k = 1; k < 6; ++k) p *= galois_theta(x, k);
  return p[0];
}

Cyc7 inv(const Cyc7& x) {
  if (x.is_zero()) throw DivByZero();
  Cyc7 p(1);
  for (int k = 1; k < 6; ++k) p *= galois_theta(x, k);
  Rat n = (p * x)[0];
  p *= Rat(1) / n;
  return p;
}

Cyc7 operator/(const Cyc7& a, const Cyc7& b) { return a * inv(b); }

Cyc7 gauss_sum() {
  Cyc7 g;
  for (int k = 0; k < 7; ++k) g += Cyc7::zeta(k * k);
  return g;
}

namespace {

std::string coeff_times(const Rat& c, const std::string& sym, bool first) {
  std::string out;
  Rat a = abs(c);
  if (!first) out += sgn(c) < 0 ? " - " : " + ";
  else if (sgn(c) < 0) out += "-";
  if (sym.empty()) return out + a.get_str();
  if (a != 1) out += a.get_str() + "*";
  return out + sym;
}

}  // namespace

std::string to_string(const Cyc7& x) {
  std::string out;
  bool first = true;
  for (int i = 0; i < 6; ++i) {
    if (sgn(x[i]) == 0) continue;
    std::string sym = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    out += coeff_times(x[i], sym, first);
    first = false;
  }
  return first ? "0" : out;
}

// ---- FieldElem ---------------------------------------------------------

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  Cyc7 na = a_ * o.a_;
  if (!b_.is_zero() && !o.b_.is_zero()) {
    Cyc7 t = b_ * o.b_;
    na += t;
    na += t;
  }
  Cyc7 nb;
  if (!o.b_.is_zero()) nb += a_ * o.b_;
  if (!b_.is_zero()) nb += b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

FieldElem inv(const FieldElem& x) {
  if (x.is_zero()) throw DivByZero();
  if (x.b().is_zero()) return FieldElem(inv(x.a()));
  Cyc7 d = x.a() * x.a() - x.b() * x.b() * Cyc7(2);
  Cyc7 di = inv(d);
  return FieldElem(x.a() * di, -(x.b() * di));
}

FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * inv(y); }

FieldElem galois_theta(const FieldElem& x, int power) {
  return FieldElem(galois_theta(x.a(), power), galois_theta(x.b(), power));
}
FieldElem conj(const FieldElem& x) { return galois_theta(x, 3); }

std::string to_string(const FieldElem& x) {
  if (x.b().is_zero()) return to_string(x.a());
  std::string bs = "(" + to_string(x.b()) + ")*r2";
  if (x.a().is_zero()) return bs;
  return to_string(x.a()) + " + " + bs;
}

namespace {

// expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := ['-'] atom ['^' int] ; atom := number | 'z' | 'r2' | '(' expr ')'
class FieldParser {
 public:
  explicit FieldParser(const std::string& s) : s_(s) {}
  FieldElem run() {
    FieldElem v = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at position " + std::to_string(i_) + " in '" + s_ + "'");
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
  FieldElem expr() {
    FieldElem v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  FieldElem term() {
    FieldElem v = factor();
    for (;;) {
      if (eat('*')) v *= factor();
      else if (eat('/')) v = v / factor();
      else return v;
    }
  }
  FieldElem factor() {
    if (eat('-')) return -factor();
    FieldElem b = atom();
    if (eat('^')) {
      skip();
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("exponent expected");
      long e = std::stol(s_.substr(st, i_ - st));
      FieldElem r(1);
      for (long k = 0; k < e; ++k) r *= b;
      return r;
    }
    return b;
  }
  FieldElem atom() {
    skip();
    if (eat('(')) {
      FieldElem v = expr();
      if (!eat(')')) fail("')' expected");
      return v;
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      // a slash directly followed by digits belongs to the number
      if (i_ + 1 < s_.size() && s_[i_] == '/' && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
        ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      }
      return FieldElem(parse_rat(s_.substr(st, i_ - st)));
    }
    if (s_.compare(i_, 2, "r2") == 0) {
      i_ += 2;
      return FieldElem::sqrt2();
    }
    if (i_ < s_.size() && s_[i_] == 'z') {
      ++i_;
      return FieldElem(Cyc7::zeta(1));
    }
    fail("unexpected token");
  }
};

}  // namespace

FieldElem parse_field(const std::string& s) { return FieldParser(s).run(); }

// ---- Fp ----------------------------------------------------------------

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Fp::Fp(long val, uint32_t mod) : p(mod) {
  long r = val % long(mod);
  if (r < 0) r += mod;
  v = uint32_t(r);
}

Fp inv(const Fp& x) {
  if (x.v == 0) throw DivByZero();
  // extended Euclid
  int64_t a = x.v, b = x.p, u = 1, w = 0;
  while (b) {
    int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * w;
    std::swap(u, w);
  }
  return Fp(long(u), x.p);
}

Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }

Fp to_fp(const Rat& x, uint32_t p) {
  mpz_class n = x.get_num() % p, d = x.get_den() % p;
  if (d == 0) throw DivByZero();
  return Fp(n.get_si(), p) / Fp(d.get_si(), p);
}

std::string to_string(const Fp& x) { return std::to_string(x.v); }

}  // namespace ef
