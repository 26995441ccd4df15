#include "json.hpp"
#include <unordered_map>

#include "groebner/groebner.hpp"

namespace gb {

using ef::Fp;
using ef::Rat;

namespace {

std::vector<unsigned> subsets(int n, int k) {
  std::vector<unsigned> out;
  for (unsigned s = 0; s < (1u << n); ++s)
    if (__builtin_popcount(s) == k) out.push_back(s);
  return out;
}

}  // namespace

template <class K>
BettiTable koszul_betti(const GroebnerBasis<K>& G, int n, int max_r, const K& zero) {
  const Ring* R = G.R;
  K one = ef::one_of(zero);
  auto leads = G.leads();
  auto standard = [&](const Mono& m) {
    for (auto& l : leads)
      if (pl::mono_divides(l, m)) return false;
    return true;
  };
  // standard monomials by degree
  std::vector<std::vector<Mono>> basis(max_r + 2);
  std::vector<std::unordered_map<Mono, size_t, pl::MonoHash>> index(max_r + 2);
  for (int r = 0; r <= max_r + 1; ++r)
    for (auto& m : R->monomials(r))
      if (standard(m)) {
        index[r].emplace(m, basis[r].size());
        basis[r].push_back(m);
      }
  // x_k * b in coordinates of A_{r+1}
  std::vector<std::vector<std::vector<std::pair<size_t, K>>>> mult(max_r + 1);
  for (int r = 0; r <= max_r; ++r) {
    mult[r].resize(n * basis[r].size());
    for (size_t b = 0; b < basis[r].size(); ++b)
      for (int k = 0; k < n; ++k) {
        Mono m = pl::mono_mul(basis[r][b], R->var(k));
        auto& out = mult[r][b * n + k];
        auto it = index[r + 1].find(m);
        if (it != index[r + 1].end()) {
          out.push_back({it->second, one});
          continue;
        }
        Poly<K> nf = normal_form(Poly<K>::monomial(R, m, one), G);
        for (auto& t : nf.terms()) out.push_back({index[r + 1].at(t.m), t.c});
      }
  }
  // rank of d_i on Lambda^i (x) A_r
  std::map<std::pair<int, int>, size_t> rk;
  auto rank_of = [&](int i, int r) -> size_t {
    if (i <= 0 || i > n || r < 0 || r > max_r) return 0;
    auto key = std::make_pair(i, r);
    auto it = rk.find(key);
    if (it != rk.end()) return it->second;
    auto src = subsets(n, i), dst = subsets(n, i - 1);
    std::unordered_map<unsigned, size_t> dpos;
    for (size_t q = 0; q < dst.size(); ++q) dpos[dst[q]] = q;
    size_t na = basis[r].size(), nb = basis[r + 1].size();
    pl::Mat<K> M(dst.size() * nb, src.size() * na, zero);
    for (size_t s = 0; s < src.size(); ++s)
      for (size_t b = 0; b < na; ++b) {
        size_t col = s * na + b;
        int pos = 0;
        for (int k = 0; k < n; ++k) {
          if (!(src[s] >> k & 1)) continue;
          size_t row0 = dpos.at(src[s] & ~(1u << k)) * nb;
          for (auto& [c, v] : mult[r][b * n + k]) {
            if (pos % 2) M(row0 + c, col) -= v;
            else M(row0 + c, col) += v;
          }
          ++pos;
        }
      }
    size_t v = (M.rows && M.cols) ? pl::rank(M) : 0;
    rk[key] = v;
    return v;
  };
  BettiTable T;
  for (int r = 0; r <= max_r; ++r)
    for (int i = 0; i <= n; ++i) {
      long long dim = 0;
      {
        long long c = 1;
        for (int q = 0; q < i; ++q) c = c * (n - q) / (q + 1);
        dim = c * (long long)basis[r].size();
      }
      long long b = dim - (long long)rank_of(i, r) - (long long)rank_of(i + 1, r - 1);
      T.add(i, i + r, long(b));
    }
  return T;
}

template BettiTable koszul_betti<Rat>(const GroebnerBasis<Rat>&, int, int, const Rat&);
template BettiTable koszul_betti<Fp>(const GroebnerBasis<Fp>&, int, int, const Fp&);

FormMatrix<Rat> hilbert_burch(const std::vector<Poly<Rat>>& quadrics) {
  if (quadrics.size() != 3) throw NotHilbertBurch("expected three generators");
  for (auto& q : quadrics)
    if (q.is_zero() || !q.is_homogeneous() || q.degree() != 2)
      throw NotHilbertBurch("generators must be quadratic forms");
  auto res = free_resolution(quadrics, 5, Rat(0));
  BettiTable want;
  want.add(0, 0, 1);
  want.add(1, 2, 3);
  want.add(2, 3, 2);
  if (!(res.betti == want)) throw NotHilbertBurch("resolution shape is " + res.betti.shorthand());
  const Ring* R = quadrics.front().ring();
  std::vector<Vec<Rat>> cols;
  for (auto& q : quadrics) cols.push_back({q});
  auto syz = minimal_syzygies(cols, {2, 2, 2}, {0}, 3, R, Rat(0));
  if (syz.gens.size() != 2) throw NotHilbertBurch("expected two linear syzygies");
  FormMatrix<Rat> M(3, 2, R);
  for (size_t c = 0; c < 2; ++c)
    for (size_t i = 0; i < 3; ++i) M(i, c) = syz.gens[c][i];
  return M;
}

std::vector<Poly<Rat>> intersect(const std::vector<Poly<Rat>>& I, const std::vector<Poly<Rat>>& J) {
  if (I.empty() || J.empty()) return {};
  const Ring* R = I.front().ring();
  int n = R->nvars();
  std::vector<std::string> names = {"elim_t"};
  for (auto& s : R->names()) names.push_back(s);
  const Ring* E = pl::make_ring(names, {1, n});
  auto lift = [&](const Poly<Rat>& f) {
    std::vector<Poly<Rat>::Term> ts;
    for (auto& t : f.terms()) {
      Mono m;
      for (int k = 0; k < n; ++k) m.set(k + 1, t.m[k]);
      ts.push_back({m, t.c});
    }
    return Poly<Rat>::from_terms(E, std::move(ts));
  };
  Poly<Rat> t = Poly<Rat>::var(E, 0, Rat(1));
  Poly<Rat> one_minus_t = Poly<Rat>::constant(E, Rat(1)) - t;
  std::vector<Poly<Rat>> gens;
  for (auto& f : I) gens.push_back(t * lift(f));
  for (auto& g : J) gens.push_back(one_minus_t * lift(g));
  auto G = buchberger(gens);
  std::vector<Poly<Rat>> out;
  for (auto& g : G.g) {
    if (g.lead_mono()[0]) continue;
    std::vector<Poly<Rat>::Term> ts;
    for (auto& term : g.terms()) {
      Mono m;
      for (int k = 0; k < n; ++k) m.set(k, term.m[k + 1]);
      ts.push_back({m, term.c});
    }
    out.push_back(Poly<Rat>::from_terms(R, std::move(ts)));
  }
  return out;
}

std::string betti_json(const BettiTable& b) {
  nlohmann::json j;
  j["shorthand"] = b.shorthand();
  nlohmann::json entries = nlohmann::json::array();
  for (auto& [k, v] : b.beta)
    if (v) entries.push_back({{"i", k.first}, {"j", k.second}, {"beta", v}});
  j["entries"] = entries;
  j["complete"] = b.complete;
  return j.dump();
}

}  // namespace gb
