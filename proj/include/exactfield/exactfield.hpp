// Exact coefficient domains: Q, Q(z7), Q(z7)(r2), F_p and dual numbers.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ef {

using Rat = mpq_class;

struct DivByZero : std::domain_error {
  DivByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- Rat helpers -------------------------------------------------------

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline Rat zero_of(const Rat&) { return Rat(0); }
inline Rat one_of(const Rat&) { return Rat(1); }
inline Rat from_int(const Rat&, long v) { return Rat(v); }
inline Rat inv(const Rat& x) {
  if (is_zero(x)) throw DivByZero();
  return Rat(1) / x;
}
std::string to_string(const Rat& x);
Rat parse_rat(const std::string& s);

// ---- Cyc7 --------------------------------------------------------------
// c0 + c1 z + ... + c5 z^5 with 1 + z + ... + z^6 = 0.
class Cyc7 {
 public:
  Cyc7() = default;
  Cyc7(long v) { c_[0] = v; }
  Cyc7(const Rat& v) { c_[0] = v; }
  explicit Cyc7(const std::array<Rat, 6>& c) : c_(c) {}

  static Cyc7 zeta(long k);  // z^k for any integer k
  const Rat& operator[](int i) const { return c_[i]; }
  const std::array<Rat, 6>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;

  Cyc7& operator+=(const Cyc7& o);
  Cyc7& operator-=(const Cyc7& o);
  Cyc7& operator*=(const Cyc7& o);
  Cyc7& operator*=(const Rat& r);

  friend Cyc7 operator+(Cyc7 a, const Cyc7& b) { return a += b; }
  friend Cyc7 operator-(Cyc7 a, const Cyc7& b) { return a -= b; }
  friend Cyc7 operator*(Cyc7 a, const Cyc7& b) { return a *= b; }
  friend Cyc7 operator/(const Cyc7& a, const Cyc7& b);
  Cyc7 operator-() const;
  friend bool operator==(const Cyc7& a, const Cyc7& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyc7& a, const Cyc7& b) { return !(a == b); }
  friend bool operator<(const Cyc7& a, const Cyc7& b) { return a.c_ < b.c_; }

  // Coefficients in the redundant basis 1, z, ..., z^6 with zero sum.
  std::array<Rat, 7> traceless() const;
  static Cyc7 from_redundant(const std::array<Rat, 7>& r);

 private:
  std::array<Rat, 6> c_{};
};

Cyc7 galois_theta(const Cyc7& x, int power);  // z -> z^(3^power)
Cyc7 conj(const Cyc7& x);                      // theta^3
Cyc7 inv(const Cyc7& x);
Rat norm(const Cyc7& x);  // product of all six conjugates
Cyc7 gauss_sum();         // sum z^(k^2) = 1 + 2(z + z^2 + z^4), squares to -7
inline bool is_zero(const Cyc7& x) { return x.is_zero(); }
inline Cyc7 zero_of(const Cyc7&) { return Cyc7(); }
inline Cyc7 one_of(const Cyc7&) { return Cyc7(1); }
inline Cyc7 from_int(const Cyc7&, long v) { return Cyc7(v); }
std::string to_string(const Cyc7& x);

// ---- FieldElem: a + b r2 ----------------------------------------------
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long v) : a_(v) {}
  FieldElem(const Rat& v) : a_(v) {}
  FieldElem(const Cyc7& a) : a_(a) {}
  FieldElem(const Cyc7& a, const Cyc7& b) : a_(a), b_(b) {}
  static FieldElem sqrt2() { return FieldElem(Cyc7(), Cyc7(1)); }

  const Cyc7& a() const { return a_; }
  const Cyc7& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool in_cyc7() const { return b_.is_zero(); }

  FieldElem& operator+=(const FieldElem& o) { a_ += o.a_; b_ += o.b_; return *this; }
  FieldElem& operator-=(const FieldElem& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  FieldElem& operator*=(const FieldElem& o);
  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y);
  FieldElem operator-() const { return FieldElem(-a_, -b_); }
  friend bool operator==(const FieldElem& x, const FieldElem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }
  friend bool operator<(const FieldElem& x, const FieldElem& y) {
    return x.a_ < y.a_ || (x.a_ == y.a_ && x.b_ < y.b_);
  }

 private:
  Cyc7 a_, b_;
};

FieldElem inv(const FieldElem& x);
FieldElem galois_theta(const FieldElem& x, int power);  // fixes r2
FieldElem conj(const FieldElem& x);
inline bool is_zero(const FieldElem& x) { return x.is_zero(); }
inline FieldElem zero_of(const FieldElem&) { return FieldElem(); }
inline FieldElem one_of(const FieldElem&) { return FieldElem(1); }
inline FieldElem from_int(const FieldElem&, long v) { return FieldElem(v); }
std::string to_string(const FieldElem& x);
FieldElem parse_field(const std::string& s);

// ---- Fp ----------------------------------------------------------------
// Each value carries its modulus; mixing moduli throws.
struct Fp {
  uint32_t v = 0;
  uint32_t p = 31;

  Fp() = default;
  Fp(long val, uint32_t mod);

  Fp& operator+=(const Fp& o) { check(o); v += o.v; if (v >= p) v -= p; return *this; }
  Fp& operator-=(const Fp& o) { check(o); v = v >= o.v ? v - o.v : v + p - o.v; return *this; }
  Fp& operator*=(const Fp& o) { check(o); v = uint32_t(uint64_t(v) * o.v % p); return *this; }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(const Fp& a, const Fp& b);
  Fp operator-() const { Fp r = *this; r.v = v ? p - v : 0; return r; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v && a.p == b.p; }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend bool operator<(const Fp& a, const Fp& b) { return a.v < b.v; }

 private:
  void check(const Fp& o) const {
    if (o.p != p) throw std::invalid_argument("Fp modulus mismatch");
  }
};

Fp inv(const Fp& x);
Fp to_fp(const Rat& x, uint32_t p);  // throws if p divides the denominator
inline bool is_zero(const Fp& x) { return x.v == 0; }
inline Fp zero_of(const Fp& x) { return Fp(0, x.p); }
inline Fp one_of(const Fp& x) { return Fp(1, x.p); }
inline Fp from_int(const Fp& x, long v) { return Fp(v, x.p); }
std::string to_string(const Fp& x);
bool is_prime(uint32_t p);

// ---- DualNum -----------------------------------------------------------
template <class T>
struct DualNum {
  T a{}, b{};
  DualNum() = default;
  DualNum(T a_, T b_) : a(std::move(a_)), b(std::move(b_)) {}
  DualNum& operator+=(const DualNum& o) { a += o.a; b += o.b; return *this; }
  DualNum& operator-=(const DualNum& o) { a -= o.a; b -= o.b; return *this; }
  DualNum& operator*=(const DualNum& o) {
    T nb = a * o.b + b * o.a;
    a = a * o.a;
    b = std::move(nb);
    return *this;
  }
  friend DualNum operator+(DualNum x, const DualNum& y) { return x += y; }
  friend DualNum operator-(DualNum x, const DualNum& y) { return x -= y; }
  friend DualNum operator*(DualNum x, const DualNum& y) { return x *= y; }
  friend bool operator==(const DualNum& x, const DualNum& y) { return x.a == y.a && x.b == y.b; }
};

template <class T>
DualNum<T> dual_mul(const DualNum<T>& x, const DualNum<T>& y) { return x * y; }

template <class T>
DualNum<T> pow(DualNum<T> x, unsigned k, const T& one) {
  DualNum<T> r(one, one - one);
  while (k) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

}  // namespace ef
