// Linear spans of polynomials, coordinates in monomial bases.
#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "polylin/linalg.hpp"
#include "polylin/poly.hpp"

namespace pl {

// Columns indexed by the union of monomials, descending in the term order.
template <class K>
struct CoordSystem {
  std::vector<Mono> monos;
  std::unordered_map<Mono, size_t, MonoHash> index;

  CoordSystem() = default;
  explicit CoordSystem(std::vector<Mono> ms) : monos(std::move(ms)) {
    for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  }
  static CoordSystem of(const std::vector<Poly<K>>& ps) {
    std::vector<Mono> ms;
    std::unordered_map<Mono, size_t, MonoHash> seen;
    const Ring* R = nullptr;
    for (auto& p : ps) {
      if (!R) R = p.ring();
      for (auto& t : p.terms())
        if (seen.emplace(t.m, 0).second) ms.push_back(t.m);
    }
    if (R) std::sort(ms.begin(), ms.end(), [R](const Mono& a, const Mono& b) { return R->greater(a, b); });
    return CoordSystem(std::move(ms));
  }
};

template <class K>
Mat<K> coeff_matrix(const std::vector<Poly<K>>& ps, const CoordSystem<K>& cs, const K& zero) {
  Mat<K> M(ps.size(), cs.monos.size(), zero);
  for (size_t i = 0; i < ps.size(); ++i)
    for (auto& t : ps[i].terms()) {
      auto it = cs.index.find(t.m);
      if (it == cs.index.end()) throw std::invalid_argument("coeff_matrix: monomial outside coordinate system");
      M(i, it->second) = t.c;
    }
  return M;
}

template <class K>
K zero_like(const std::vector<Poly<K>>& ps, const K& fallback = K{}) {
  for (auto& p : ps)
    if (!p.is_zero()) return ef::zero_of(p.lead_coeff());
  return fallback;
}

template <class K>
size_t span_dim(const std::vector<Poly<K>>& ps, const K& zero = K{}) {
  auto cs = CoordSystem<K>::of(ps);
  if (cs.monos.empty()) return 0;
  return rank(coeff_matrix(ps, cs, zero_like(ps, zero)));
}

// Reduced echelon basis of the span (deterministic).
template <class K>
std::vector<Poly<K>> span_basis(const std::vector<Poly<K>>& ps, const K& zero = K{}) {
  std::vector<Poly<K>> out;
  if (ps.empty()) return out;
  auto cs = CoordSystem<K>::of(ps);
  if (cs.monos.empty()) return out;
  K z = zero_like(ps, zero);
  auto E = rref(coeff_matrix(ps, cs, z));
  const Ring* R = ps.front().ring();
  for (size_t i = 0; i < E.rank(); ++i) {
    std::vector<typename Poly<K>::Term> ts;
    for (size_t j = 0; j < cs.monos.size(); ++j)
      if (!ef::is_zero(E.R(i, j))) ts.push_back({cs.monos[j], E.R(i, j)});
    out.push_back(Poly<K>::from_terms(R, std::move(ts)));
  }
  return out;
}

template <class K>
bool same_span(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b, const K& zero = K{}) {
  std::vector<Poly<K>> all = a;
  all.insert(all.end(), b.begin(), b.end());
  size_t r = span_dim(all, zero);
  return r == span_dim(a, zero) && r == span_dim(b, zero);
}

template <class K>
bool in_span(const Poly<K>& f, const std::vector<Poly<K>>& basis, const K& zero = K{}) {
  std::vector<Poly<K>> all = basis;
  all.push_back(f);
  return span_dim(all, zero) == span_dim(basis, zero);
}

// Coordinates of f in an echelon basis produced by span_basis; false if f is outside.
template <class K>
bool echelon_coords(const Poly<K>& f, const std::vector<Poly<K>>& basis, std::vector<K>& out, const K& zero) {
  out.assign(basis.size(), zero);
  Poly<K> r = f;
  for (size_t i = 0; i < basis.size(); ++i) {
    const Mono& pm = basis[i].lead_mono();
    K c = r.coeff(pm);
    if (r.is_zero()) c = zero;
    if (ef::is_zero(c)) continue;
    out[i] = c;
    r.add_multiple(-c, Mono{}, basis[i]);
  }
  return r.is_zero();
}

}  // namespace pl
