// Sparse multivariate polynomials over any exactfield domain.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "exactfield/exactfield.hpp"
#include "polylin/ring.hpp"

namespace pl {

using ef::Cyc7;
using ef::FieldElem;
using ef::Fp;
using ef::Rat;

template <class K>
class Poly {
 public:
  struct Term {
    Mono m;
    K c;
  };

  Poly() = default;
  explicit Poly(const Ring* R) : R_(R) {}

  static Poly constant(const Ring* R, const K& c) { return monomial(R, Mono{}, c); }
  static Poly var(const Ring* R, int i, const K& one) { return monomial(R, R->var(i), one); }
  static Poly monomial(const Ring* R, const Mono& m, const K& c) {
    Poly p(R);
    if (!ef::is_zero(c)) p.t_.push_back({m, c});
    return p;
  }
  // Sorts and merges an arbitrary term list.
  static Poly from_terms(const Ring* R, std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [R](const Term& a, const Term& b) { return R->greater(a.m, b.m); });
    Poly p(R);
    for (auto& t : ts) {
      if (!p.t_.empty() && p.t_.back().m == t.m) p.t_.back().c += t.c;
      else p.t_.push_back(std::move(t));
    }
    p.prune();
    return p;
  }

  const Ring* ring() const { return R_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const Term& lead() const { return t_.front(); }
  const Mono& lead_mono() const { return t_.front().m; }
  const K& lead_coeff() const { return t_.front().c; }

  int degree() const {
    int d = -1;
    for (auto& t : t_) d = std::max(d, int(t.m.deg));
    return d;
  }
  bool is_homogeneous() const {
    for (auto& t : t_)
      if (t.m.deg != t_.front().m.deg) return false;
    return true;
  }
  K coeff(const Mono& m) const {
    for (auto& t : t_)
      if (t.m == m) return t.c;
    return t_.empty() ? K{} : ef::zero_of(t_.front().c);
  }

  Poly& operator+=(const Poly& o) { return axpy_self(nullptr, nullptr, o, false); }
  Poly& operator-=(const Poly& o) { return axpy_self(nullptr, nullptr, o, true); }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const K& c) const {
    Poly r(R_);
    if (ef::is_zero(c)) return r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({t.m, t.c * c});
    return r;
  }
  Poly mul_term(const Mono& m, const K& c) const {
    Poly r(R_);
    if (ef::is_zero(c)) return r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({mono_mul(t.m, m), t.c * c});
    return r;
  }
  // this += c * m * g, in one merge pass
  Poly& add_multiple(const K& c, const Mono& m, const Poly& g) { return axpy_self(&c, &m, g, false); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    const Ring* R = a.R_ ? a.R_ : b.R_;
    if (a.is_zero() || b.is_zero()) return Poly(R);
    if (a.size() == 1) return b.mul_term(a.t_[0].m, a.t_[0].c);
    if (b.size() == 1) return a.mul_term(b.t_[0].m, b.t_[0].c);
    std::unordered_map<Mono, K, MonoHash> acc;
    acc.reserve(a.size() * b.size());
    for (auto& x : a.t_)
      for (auto& y : b.t_) {
        Mono m = mono_mul(x.m, y.m);
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(m, x.c * y.c);
        else it->second += x.c * y.c;
      }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!ef::is_zero(c)) ts.push_back({m, c});
    return from_terms(R, std::move(ts));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(ef::inv(lead_coeff()));
  }
  Poly homogeneous_part(int d) const {
    Poly r(R_);
    for (auto& t : t_)
      if (t.m.deg == d) r.t_.push_back(t);
    return r;
  }
  void set_ring(const Ring* R) { R_ = R; }
  // Removes and returns the lead term.
  Term pop_lead() {
    Term t = std::move(t_.front());
    t_.erase(t_.begin());
    return t;
  }
  // Terms already strictly descending with nonzero coefficients.
  static Poly from_sorted(const Ring* R, std::vector<Term> ts) {
    Poly p(R);
    p.t_ = std::move(ts);
    return p;
  }

 private:
  const Ring* R_ = nullptr;
  std::vector<Term> t_;

  void prune() {
    t_.erase(std::remove_if(t_.begin(), t_.end(), [](const Term& t) { return ef::is_zero(t.c); }), t_.end());
  }

  Poly& axpy_self(const K* c, const Mono* m, const Poly& g, bool negate) {
    if (g.is_zero()) return *this;
    if (!R_) R_ = g.R_;
    std::vector<Term> out;
    out.reserve(t_.size() + g.t_.size());
    size_t i = 0, j = 0;
    auto gterm = [&](size_t k) {
      Term t = g.t_[k];
      if (m) t.m = mono_mul(t.m, *m);
      if (c) t.c *= *c;
      if (negate) t.c = -t.c;
      return t;
    };
    while (i < t_.size() || j < g.t_.size()) {
      if (j == g.t_.size()) {
        out.push_back(std::move(t_[i++]));
        continue;
      }
      Term gt = gterm(j);
      if (i == t_.size()) {
        out.push_back(std::move(gt));
        ++j;
        continue;
      }
      int s = R_->cmp(t_[i].m, gt.m);
      if (s > 0) out.push_back(std::move(t_[i++]));
      else if (s < 0) {
        out.push_back(std::move(gt));
        ++j;
      } else {
        t_[i].c += gt.c;
        if (!ef::is_zero(t_[i].c)) out.push_back(std::move(t_[i]));
        ++i;
        ++j;
      }
    }
    t_ = std::move(out);
    return *this;
  }
};

// ---- coefficient helpers ----------------------------------------------

inline bool as_rat(const Rat& c, Rat& out) { out = c; return true; }
inline bool as_rat(const Cyc7& c, Rat& out) {
  if (!c.is_rational()) return false;
  out = c[0];
  return true;
}
inline bool as_rat(const FieldElem& c, Rat& out) { return c.in_cyc7() && as_rat(c.a(), out); }
inline bool as_rat(const Fp&, Rat&) { return false; }

template <class K>
std::string to_string(const Poly<K>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : f.terms()) {
    std::string mono = t.m.deg ? f.ring()->mono_string(t.m) : "";
    Rat r;
    std::string piece;
    bool neg = false;
    if (as_rat(t.c, r)) {
      neg = sgn(r) < 0;
      Rat a = abs(r);
      if (mono.empty()) piece = a.get_str();
      else if (a == 1) piece = mono;
      else piece = a.get_str() + "*" + mono;
    } else {
      std::string cs = ef::to_string(t.c);
      bool simple = cs.find_first_of("+- ") == std::string::npos;
      if (!simple) cs = "(" + cs + ")";
      piece = mono.empty() ? cs : cs + "*" + mono;
    }
    if (first) s += neg ? "-" + piece : piece;
    else s += (neg ? " - " : " + ") + piece;
    first = false;
  }
  return s;
}

template <class K>
Poly<K> derivative(const Poly<K>& f, int var) {
  std::vector<typename Poly<K>::Term> ts;
  for (auto& t : f.terms()) {
    int e = t.m[var];
    if (!e) continue;
    Mono m = t.m;
    m.set(var, e - 1);
    ts.push_back({m, t.c * ef::from_int(t.c, e)});
  }
  return Poly<K>::from_terms(f.ring(), std::move(ts));
}

// f(images[0], ..., images[n-1]); images live in `target`.
template <class K>
Poly<K> substitute(const Poly<K>& f, const std::vector<Poly<K>>& images, const Ring* target) {
  int n = f.ring()->nvars();
  if (int(images.size()) != n) throw std::invalid_argument("substitute: registry mismatch");
  Poly<K> out(target);
  if (f.is_zero()) return out;
  std::vector<std::vector<Poly<K>>> pw(n);
  K one = ef::one_of(f.lead_coeff());
  auto power = [&](int i, int e) -> const Poly<K>& {
    auto& v = pw[i];
    if (v.empty()) v.push_back(Poly<K>::constant(target, one));
    while (int(v.size()) <= e) v.push_back(v.back() * images[i]);
    return v[e];
  };
  for (auto& t : f.terms()) {
    Poly<K> term = Poly<K>::constant(target, t.c);
    for (int i = 0; i < n; ++i)
      if (t.m[i]) term = term * power(i, t.m[i]);
    out += term;
  }
  return out;
}

template <class K2, class K1, class F>
Poly<K2> map_coeffs(const Poly<K1>& f, F fn, const Ring* target = nullptr) {
  std::vector<typename Poly<K2>::Term> ts;
  for (auto& t : f.terms()) {
    K2 c = fn(t.c);
    if (!ef::is_zero(c)) ts.push_back({t.m, c});
  }
  return Poly<K2>::from_terms(target ? target : f.ring(), std::move(ts));
}

inline Poly<Fp> to_fp(const Poly<Rat>& f, uint32_t p) {
  return map_coeffs<Fp>(f, [p](const Rat& c) { return ef::to_fp(c, p); });
}
inline Poly<Cyc7> to_cyc(const Poly<Rat>& f) {
  return map_coeffs<Cyc7>(f, [](const Rat& c) { return Cyc7(c); });
}

// Reinterpret the same exponent vectors in another ring of equal arity.
template <class K>
Poly<K> rename_ring(const Poly<K>& f, const Ring* target) {
  Poly<K> g = f;
  if (target->nvars() < f.ring()->nvars()) throw std::invalid_argument("rename_ring: arity");
  return Poly<K>::from_terms(target, std::vector<typename Poly<K>::Term>(f.terms().begin(), f.terms().end()));
}

// ---- parsing ------------------------------------------------------------

// Grammar: sums of products of numbers, z, r2, variables, parentheses, '^'.
Poly<FieldElem> parse_poly_field(const std::string& s, const Ring* R);
Poly<Rat> parse_poly(const std::string& s, const Ring* R);
Poly<Cyc7> parse_poly_cyc(const std::string& s, const Ring* R);

}  // namespace pl
