// Buchberger bases, Hilbert data, graded syzygies and Betti tables.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polylin/formmatrix.hpp"
#include "polylin/linalg.hpp"
#include "polylin/poly.hpp"
#include "polylin/span.hpp"

namespace gb {

using pl::FormMatrix;
using pl::Mat;
using pl::Mono;
using pl::Poly;
using pl::Ring;

// ---- Buchberger ---------------------------------------------------------

struct GBOptions {
  int degree_cap = -1;      // homogeneous input: drop pairs above this degree
  long pair_budget = -1;    // stop after this many reductions
};

template <class K>
struct GroebnerBasis {
  const Ring* R = nullptr;
  std::vector<Poly<K>> g;  // reduced, monic, ascending by lead monomial
  bool complete = true;    // false if a cap or budget cut pairs
  int truncated_above = -1;
  long reductions = 0;
  long zero_reductions = 0;

  std::vector<Mono> leads() const {
    std::vector<Mono> m;
    for (auto& p : g) m.push_back(p.lead_mono());
    return m;
  }
};

namespace detail {

inline uint32_t divmask(const Mono& m) {
  uint32_t b = 0;
  for (int i = 0; i < pl::kMaxVars; ++i)
    if (m.e[i]) b |= 1u << i;
  return b;
}

template <class K>
struct Reducer {
  std::vector<const Poly<K>*> polys;
  std::vector<uint32_t> masks;
  void add(const Poly<K>* p) {
    polys.push_back(p);
    masks.push_back(divmask(p->lead_mono()));
  }
  const Poly<K>* find(const Mono& m) const {
    uint32_t mm = divmask(m);
    for (size_t i = 0; i < polys.size(); ++i)
      if ((masks[i] & ~mm) == 0 && pl::mono_divides(polys[i]->lead_mono(), m)) return polys[i];
    return nullptr;
  }
};

// Full reduction: every term of the result is irreducible.
template <class K>
Poly<K> reduce_full(Poly<K> p, const Reducer<K>& red) {
  std::vector<typename Poly<K>::Term> done;
  const Ring* R = p.ring();
  while (!p.is_zero()) {
    const auto& lt = p.lead();
    const Poly<K>* g = red.find(lt.m);
    if (g) {
      K c = -(lt.c / g->lead_coeff());
      Mono q = pl::mono_div(lt.m, g->lead_mono());
      p.add_multiple(c, q, *g);
    } else {
      done.push_back(p.pop_lead());
    }
  }
  return Poly<K>::from_sorted(R, std::move(done));
}

}  // namespace detail

template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& G) {
  detail::Reducer<K> red;
  for (auto& g : G) red.add(&g);
  return detail::reduce_full(f, red);
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& G) {
  return normal_form(f, G.g);
}

template <class K>
GroebnerBasis<K> buchberger(std::vector<Poly<K>> gens, const GBOptions& opt = {}) {
  GroebnerBasis<K> out;
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Poly<K>& p) { return p.is_zero(); }), gens.end());
  if (gens.empty()) return out;
  const Ring* R = gens.front().ring();
  out.R = R;

  struct Pair {
    size_t i, j;
    Mono lcm;
    int sugar;
  };
  std::vector<Poly<K>> store;
  std::vector<int> sugar;
  std::vector<char> active;
  std::vector<Pair> B;

  auto pair_less = [R](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = R->cmp(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  auto update = [&](size_t h) {
    const Mono& lh = store[h].lead_mono();
    std::vector<Pair> C, D;
    for (size_t g = 0; g < h; ++g)
      if (active[g]) {
        Mono l = pl::mono_lcm(lh, store[g].lead_mono());
        C.push_back({g, h, l, std::max(sugar[g] + l.deg - store[g].lead_mono().deg, sugar[h] + l.deg - lh.deg)});
      }
    for (size_t a = 0; a < C.size(); ++a) {
      bool coprime = pl::mono_coprime(lh, store[C[a].i].lead_mono());
      bool dominated = false;
      if (!coprime) {
        for (size_t b = a + 1; b < C.size() && !dominated; ++b)
          if (pl::mono_divides(C[b].lcm, C[a].lcm)) dominated = true;
        for (auto& d : D)
          if (!dominated && pl::mono_divides(d.lcm, C[a].lcm)) dominated = true;
      }
      if (coprime || !dominated) D.push_back(C[a]);
    }
    std::vector<Pair> E;
    for (auto& d : D)
      if (!pl::mono_coprime(lh, store[d.i].lead_mono())) E.push_back(d);
    std::vector<Pair> nb;
    for (auto& p : B) {
      bool kill = pl::mono_divides(lh, p.lcm) &&
                  pl::mono_lcm(store[p.i].lead_mono(), lh) != p.lcm &&
                  pl::mono_lcm(store[p.j].lead_mono(), lh) != p.lcm;
      if (!kill) nb.push_back(p);
    }
    nb.insert(nb.end(), E.begin(), E.end());
    B = std::move(nb);
    for (size_t g = 0; g < h; ++g)
      if (active[g] && pl::mono_divides(lh, store[g].lead_mono())) active[g] = 0;
  };

  auto reducer = [&]() {
    detail::Reducer<K> red;
    for (size_t k = 0; k < store.size(); ++k)
      if (active[k]) red.add(&store[k]);
    return red;
  };

  // seed with the inputs one at a time so each is reduced against the previous
  std::stable_sort(gens.begin(), gens.end(), [R](const Poly<K>& a, const Poly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return R->cmp(a.lead_mono(), b.lead_mono()) < 0;
  });
  for (auto& f : gens) {
    Poly<K> h = detail::reduce_full(f, reducer());
    if (h.is_zero()) continue;
    store.push_back(h.monic());
    sugar.push_back(f.degree());
    active.push_back(1);
    update(store.size() - 1);
  }

  while (!B.empty()) {
    auto it = std::min_element(B.begin(), B.end(), pair_less);
    Pair p = *it;
    B.erase(it);
    if (opt.degree_cap >= 0 && p.lcm.deg > opt.degree_cap) {
      out.complete = false;
      out.truncated_above = opt.degree_cap;
      continue;
    }
    if (opt.pair_budget >= 0 && out.reductions >= opt.pair_budget) {
      out.complete = false;
      continue;
    }
    const Poly<K>& f = store[p.i];
    const Poly<K>& g = store[p.j];
    Poly<K> s = f.mul_term(pl::mono_div(p.lcm, f.lead_mono()), ef::one_of(f.lead_coeff()));
    s.add_multiple(-ef::one_of(f.lead_coeff()), pl::mono_div(p.lcm, g.lead_mono()), g);
    ++out.reductions;
    Poly<K> h = detail::reduce_full(std::move(s), reducer());
    if (h.is_zero()) {
      ++out.zero_reductions;
      continue;
    }
    store.push_back(h.monic());
    sugar.push_back(p.sugar);
    active.push_back(1);
    update(store.size() - 1);
  }

  // interreduce
  std::vector<Poly<K>> G;
  for (size_t k = 0; k < store.size(); ++k)
    if (active[k]) G.push_back(store[k]);
  std::vector<Poly<K>> minimal;
  for (size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (size_t b = 0; b < G.size() && !redundant; ++b)
      if (a != b && pl::mono_divides(G[b].lead_mono(), G[a].lead_mono()) &&
          (G[b].lead_mono() != G[a].lead_mono() || b < a))
        redundant = true;
    if (!redundant) minimal.push_back(G[a]);
  }
  for (size_t a = 0; a < minimal.size(); ++a) {
    detail::Reducer<K> red;
    for (size_t b = 0; b < minimal.size(); ++b)
      if (b != a) red.add(&minimal[b]);
    Poly<K> lead = Poly<K>::monomial(R, minimal[a].lead_mono(), minimal[a].lead_coeff());
    Poly<K> tail = minimal[a] - lead;
    out.g.push_back((lead + detail::reduce_full(tail, red)).monic());
  }
  std::sort(out.g.begin(), out.g.end(),
            [R](const Poly<K>& a, const Poly<K>& b) { return R->cmp(a.lead_mono(), b.lead_mono()) < 0; });
  return out;
}

// ---- Hilbert data -------------------------------------------------------

using Series = std::vector<long long>;  // coefficients of a polynomial in s

// Numerator N(s) with HS(S/M) = N(s) / (1-s)^n, by pivot recursion.
Series hilbert_numerator(const std::vector<Mono>& gens, int nvars);

struct HilbertData {
  int nvars = 0;
  Series numerator;       // over (1-s)^nvars
  Series reduced;         // numerator after cancelling (1-s) factors
  int krull_dim = 0;      // of S/I
  long long degree = 0;   // multiplicity
  std::vector<long long> values;  // HF(0..)
  int proj_dim() const { return krull_dim - 1; }
};

HilbertData hilbert_from_leads(const std::vector<Mono>& leads, int nvars, int upto);
long long hilbert_function_value(const Series& num, int nvars, int d);

template <class K>
HilbertData hilbert(const GroebnerBasis<K>& G, int nvars, int upto) {
  return hilbert_from_leads(G.leads(), nvars, upto);
}

// ---- Betti tables -------------------------------------------------------

struct BettiTable {
  std::map<std::pair<int, int>, long> beta;  // (i, j) -> beta_{i,j}
  bool complete = true;
  std::string note;

  long at(int i, int j) const {
    auto it = beta.find({i, j});
    return it == beta.end() ? 0 : it->second;
  }
  void add(int i, int j, long v) {
    if (v) beta[{i, j}] += v;
  }
  int length() const;
  int max_row() const;
  // Rows r = j - i; '-' for zero entries.
  std::string macaulay() const;
  // Compact "(1; 7 8; 3 8 3)" form, one group per row.
  std::string shorthand() const;
  // sum_i (-1)^i beta_{i,j} s^j
  Series alternating_sum() const;
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.beta == b.beta; }
};

// Module elements of a graded free module are vectors of forms.
template <class K>
using Vec = std::vector<Poly<K>>;

template <class K>
struct SyzygyResult {
  std::vector<Vec<K>> gens;
  std::vector<int> degrees;
  bool complete = true;
};

namespace detail {

template <class K>
struct SemiEchelon {
  std::vector<std::vector<K>> rows;
  std::vector<size_t> piv;
  K zero;

  explicit SemiEchelon(const K& z) : zero(z) {}
  // Reduce v in place; returns true if it became zero.
  bool reduce(std::vector<K>& v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      const K& c = v[piv[r]];
      if (ef::is_zero(c)) continue;
      K f = c;
      const auto& row = rows[r];
      for (size_t j = 0; j < v.size(); ++j)
        if (!ef::is_zero(row[j])) v[j] -= f * row[j];
    }
    for (auto& x : v)
      if (!ef::is_zero(x)) return false;
    return true;
  }
  bool insert(std::vector<K> v) {
    if (reduce(v)) return false;
    size_t p = 0;
    while (ef::is_zero(v[p])) ++p;
    K iv = ef::inv(v[p]);
    for (auto& x : v)
      if (!ef::is_zero(x)) x *= iv;
    rows.push_back(std::move(v));
    piv.push_back(p);
    return true;
  }
};

}  // namespace detail

// Minimal generators of ker( (+)_i S(-col_deg[i]) -> (+)_j S(-tgt_deg[j]) ) in degrees <= max_deg.
template <class K>
SyzygyResult<K> minimal_syzygies(const std::vector<Vec<K>>& cols, const std::vector<int>& col_deg,
                                 const std::vector<int>& tgt_deg, int max_deg, const Ring* R, const K& zero) {
  SyzygyResult<K> res;
  if (cols.empty()) return res;
  int dmin = *std::min_element(col_deg.begin(), col_deg.end()) + 1;
  // kernel basis of the previous degree, in that degree's unknown coordinates
  std::vector<std::vector<K>> prev_kernel;
  std::vector<std::pair<size_t, Mono>> prev_unknowns;
  for (int d = dmin; d <= max_deg; ++d) {
    std::vector<std::pair<size_t, Mono>> unk;
    std::map<std::pair<size_t, std::vector<uint8_t>>, size_t> unk_index;
    for (size_t i = 0; i < cols.size(); ++i)
      for (auto& m : R->monomials(d - col_deg[i])) {
        unk_index[{i, std::vector<uint8_t>(m.e.begin(), m.e.end())}] = unk.size();
        unk.push_back({i, m});
      }
    std::map<std::pair<size_t, std::vector<uint8_t>>, size_t> row_index;
    size_t nrows = 0;
    for (size_t j = 0; j < tgt_deg.size(); ++j)
      for (auto& m : R->monomials(d - tgt_deg[j]))
        row_index[{j, std::vector<uint8_t>(m.e.begin(), m.e.end())}] = nrows++;
    Mat<K> M(nrows, unk.size(), zero);
    for (size_t c = 0; c < unk.size(); ++c) {
      auto [i, mu] = unk[c];
      for (size_t j = 0; j < tgt_deg.size(); ++j)
        for (auto& t : cols[i][j].terms()) {
          Mono m = pl::mono_mul(t.m, mu);
          auto key = std::make_pair(j, std::vector<uint8_t>(m.e.begin(), m.e.end()));
          M(row_index.at(key), c) += t.c;
        }
    }
    auto kernel = pl::null_space(M, zero);
    // span of x_k * (previous kernel)
    detail::SemiEchelon<K> E(zero);
    for (auto& v : prev_kernel)
      for (int k = 0; k < R->nvars(); ++k) {
        std::vector<K> w(unk.size(), zero);
        for (size_t c = 0; c < prev_unknowns.size(); ++c) {
          if (ef::is_zero(v[c])) continue;
          auto [i, mu] = prev_unknowns[c];
          Mono m = pl::mono_mul(mu, R->var(k));
          w[unk_index.at({i, std::vector<uint8_t>(m.e.begin(), m.e.end())})] = v[c];
        }
        E.insert(std::move(w));
      }
    for (auto& v : kernel) {
      if (!E.insert(v)) continue;
      Vec<K> g(cols.size(), Poly<K>(R));
      for (size_t c = 0; c < unk.size(); ++c)
        if (!ef::is_zero(v[c])) g[unk[c].first] += Poly<K>::monomial(R, unk[c].second, v[c]);
      res.gens.push_back(std::move(g));
      res.degrees.push_back(d);
    }
    prev_kernel = std::move(kernel);
    prev_unknowns = std::move(unk);
  }
  res.complete = false;  // caller decides via Hilbert-series consistency
  return res;
}

// Minimal homogeneous generators of the ideal spanned by `gens`, up to max_deg.
template <class K>
std::vector<Poly<K>> minimal_generators(const std::vector<Poly<K>>& gens, const K& zero) {
  std::map<int, std::vector<Poly<K>>> by_deg;
  for (auto& g : gens)
    if (!g.is_zero()) by_deg[g.degree()].push_back(g);
  std::vector<Poly<K>> out;
  std::vector<Poly<K>> ideal_prev;  // basis of I_{d-1}
  int prev_d = -10;
  for (auto& [d, gs] : by_deg) {
    std::vector<Poly<K>> cur;
    if (!ideal_prev.empty() && prev_d == d - 1) {
      const Ring* R = gs.front().ring();
      for (auto& f : ideal_prev)
        for (int k = 0; k < R->nvars(); ++k) cur.push_back(f.mul_term(R->var(k), ef::one_of(zero)));
    } else if (!ideal_prev.empty()) {
      const Ring* R = gs.front().ring();
      for (auto& f : ideal_prev)
        for (auto& m : R->monomials(d - prev_d)) cur.push_back(f.mul_term(m, ef::one_of(zero)));
    }
    auto basis = pl::span_basis(cur, zero);
    size_t r = basis.size();
    for (auto& g : gs) {
      auto trial = basis;
      trial.push_back(g);
      if (pl::span_dim(trial, zero) > r) {
        out.push_back(g);
        basis = pl::span_basis(trial, zero);
        r = basis.size();
      }
    }
    ideal_prev = basis;
    prev_d = d;
  }
  return out;
}

struct Resolution {
  BettiTable betti;
  std::vector<std::vector<int>> degrees;  // degrees[i] = generator degrees of F_i
};

template <class K>
struct ResolutionData {
  BettiTable betti;
  std::vector<std::vector<Vec<K>>> maps;  // maps[i]: columns of F_{i+1} -> F_i
  std::vector<std::vector<int>> degrees;
};

// Iterated minimal syzygies of a homogeneous ideal, degrees <= max_deg.
template <class K>
ResolutionData<K> free_resolution(const std::vector<Poly<K>>& ideal_gens, int max_deg, const K& zero) {
  ResolutionData<K> out;
  auto gens = minimal_generators(ideal_gens, zero);
  if (gens.empty()) {
    out.betti.add(0, 0, 1);
    return out;
  }
  const Ring* R = gens.front().ring();
  out.betti.add(0, 0, 1);
  out.degrees.push_back({0});
  std::vector<Vec<K>> cols;
  std::vector<int> degs;
  for (auto& g : gens) {
    cols.push_back({g});
    degs.push_back(g.degree());
    out.betti.add(1, g.degree(), 1);
  }
  out.degrees.push_back(degs);
  out.maps.push_back(cols);
  std::vector<int> tgt = {0};
  for (int i = 2; i <= R->nvars() + 1; ++i) {
    auto syz = minimal_syzygies(cols, degs, tgt, max_deg, R, zero);
    if (syz.gens.empty()) break;
    for (int d : syz.degrees) out.betti.add(i, d, 1);
    tgt = degs;
    cols = syz.gens;
    degs = syz.degrees;
    out.degrees.push_back(degs);
    out.maps.push_back(cols);
  }
  return out;
}

// Koszul homology of A = S/I from a Groebner basis: beta_{i,i+r} for r <= max_r.
template <class K>
BettiTable koszul_betti(const GroebnerBasis<K>& G, int nvars, int max_r, const K& zero);

// 3x2 linear syzygy matrix of a codimension-2 ideal with resolution shape (1; 3 2).
struct NotHilbertBurch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
FormMatrix<ef::Rat> hilbert_burch(const std::vector<Poly<ef::Rat>>& quadrics);
// 2x2 minors of a 3x2 matrix, minor i deletes row i, signed (-1)^i.
template <class K>
std::vector<Poly<K>> maximal_minors_3x2(const FormMatrix<K>& M) {
  std::vector<Poly<K>> out;
  for (size_t i = 0; i < 3; ++i) {
    size_t a = i == 0 ? 1 : 0, b = i == 2 ? 1 : 2;
    Poly<K> m = M(a, 0) * M(b, 1) - M(a, 1) * M(b, 0);
    out.push_back(i % 2 ? -m : m);
  }
  return out;
}

// Ideal intersection by elimination of an auxiliary variable (block order).
std::vector<Poly<ef::Rat>> intersect(const std::vector<Poly<ef::Rat>>& I, const std::vector<Poly<ef::Rat>>& J);

std::string betti_json(const BettiTable& b);

}  // namespace gb
