// Variable registries, monomials and term orders.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pl {

constexpr int kMaxVars = 12;

struct Mono {
  std::array<uint8_t, kMaxVars> e{};
  uint16_t deg = 0;

  uint8_t operator[](int i) const { return e[i]; }
  void set(int i, int v) {
    deg = uint16_t(deg - e[i] + v);
    e[i] = uint8_t(v);
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.deg == b.deg && a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint8_t(a.e[i] + b.e[i]);
  r.deg = uint16_t(a.deg + b.deg);
  return r;
}
inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}
inline Mono mono_div(const Mono& b, const Mono& a) {  // b / a, requires a | b
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint8_t(b.e[i] - a.e[i]);
  r.deg = uint16_t(b.deg - a.deg);
  return r;
}
inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = uint16_t(d);
  return r;
}
inline bool mono_coprime(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

struct MonoHash {
  size_t operator()(const Mono& m) const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < kMaxVars; ++i) h = (h ^ m.e[i]) * 1099511628211ull;
    return size_t(h);
  }
};

// Ordered variables split into registries (for bidegrees) and order blocks.
// Within a block the order is grevlex; blocks compare left to right.
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<int> blocks, std::vector<int> registries);

  int nvars() const { return int(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 if absent
  int nregistries() const { return int(reg_sizes_.size()); }
  int registry_of(int var) const { return reg_of_[var]; }

  // >0 if a > b, <0 if a < b.
  int cmp(const Mono& a, const Mono& b) const;
  bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }
  std::vector<int> multidegree(const Mono& m) const;

  Mono var(int i, int power = 1) const {
    Mono m;
    m.set(i, power);
    return m;
  }
  std::string mono_string(const Mono& m) const;
  // All monomials of total degree d, descending in the term order.
  std::vector<Mono> monomials(int d) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> blocks_;
  std::vector<int> reg_sizes_;
  std::vector<int> reg_of_;
};

// Interned rings; pointers stay valid for the program lifetime.
const Ring* make_ring(const std::vector<std::string>& names, const std::vector<int>& blocks = {},
                      const std::vector<int>& registries = {});
const Ring* ring_X();   // x0..x6
const Ring* ring_U();   // u0..u3
const Ring* ring_Y();   // y0..y2, also read as v1..v3
const Ring* ring_T();   // t0..t3
const Ring* ring_TU();  // t0..t3 | u0..u3, bigraded, grevlex overall
const Ring* ring_vars(const std::string& prefix, int n);

}  // namespace pl
