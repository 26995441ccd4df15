#include "heisrep/heisrep.hpp"
#include "kleinmoduli/kleinmoduli.hpp"

namespace km {

namespace {

using FPoly = pl::Poly<ef::Fp>;

int weight(const pl::Mono& m) {
  int w = 0;
  for (int j = 0; j < 7; ++j) w += j * m[j];
  return w % 7;
}

QPoly weight_part(const QPoly& f, int w) {
  std::vector<QPoly::Term> ts;
  for (auto& t : f.terms())
    if (weight(t.m) == w) ts.push_back(t);
  return QPoly::from_terms(f.ring(), std::move(ts));
}

QPoly permute_x(const QPoly& f, int mul, int add) {
  std::vector<QPoly> img;
  for (int j = 0; j < 7; ++j) img.push_back(QPoly::var(pl::ring_X(), ((mul * j + add) % 7 + 7) % 7, Rat(1)));
  return pl::substitute(f, img, pl::ring_X());
}

bool all_in_span(const std::vector<QPoly>& fs, const std::vector<QPoly>& basis) {
  auto all = basis;
  all.insert(all.end(), fs.begin(), fs.end());
  return pl::span_dim(all, Rat(0)) == pl::span_dim(basis, Rat(0));
}

// Drop the last variable from a Groebner basis whose leads avoid it.
bool cut_last(std::vector<FPoly>& G, int n, const pl::Ring* target, uint32_t p) {
  for (auto& g : G)
    if (g.lead_mono()[n - 1]) return false;
  std::vector<FPoly> img;
  for (int j = 0; j < n - 1; ++j) img.push_back(FPoly::var(target, j, ef::Fp(1, p)));
  img.push_back(FPoly(target));
  for (auto& g : G) g = pl::substitute(g, img, target);
  return true;
}

std::vector<long long> trimmed(std::vector<long long> s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

}  // namespace

std::vector<QPoly> d_vector() {
  std::vector<QPoly> out;
  for (const char* s : {"x0*x3*x4", "x0*x1*x6", "x0*x2*x5", "x2^2*x3 + x5^2*x4", "x1^2*x5 + x6^2*x2",
                        "x4^2*x6 + x3^2*x1", "x1*x2*x4 + x3*x5*x6 - x0^3"})
    out.push_back(pl::parse_poly(s, pl::ring_X()));
  return out;
}

QPoly sigma_shift(const QPoly& f, int k) { return permute_x(f, 1, k); }
QPoly iota_image(const QPoly& f) { return permute_x(f, -1, 0); }

SurfaceIdeal surface_ideal(const Point& t) {
  SurfaceIdeal S;
  S.t = t;
  QMat P = psi(t);
  auto D = d_vector();
  for (int r = 0; r < 3; ++r) {
    QPoly g(pl::ring_X());
    for (int c = 0; c < 7; ++c)
      if (!ef::is_zero(P(r, c))) g += D[c].scaled(P(r, c));
    S.g[r] = g;
    for (int k = 0; k < 7; ++k) S.cubics.push_back(sigma_shift(g, k));
  }
  S.span_dim = pl::span_dim(S.cubics, Rat(0));
  S.degenerate = S.span_dim != 21;
  return S;
}

SurfaceReport surface_checks(const SurfaceIdeal& S, bool with_character) {
  SurfaceReport r;
  r.tau_invariant_g = true;
  for (auto& g : S.g)
    for (auto& t : g.terms())
      if (weight(t.m) != 0) r.tau_invariant_g = false;
  auto basis = pl::span_basis(S.cubics, Rat(0));
  std::vector<QPoly> shifted, parts, flipped;
  for (auto& c : S.cubics) {
    shifted.push_back(sigma_shift(c, 1));
    flipped.push_back(iota_image(c));
    for (int w = 0; w < 7; ++w) {
      QPoly q = weight_part(c, w);
      if (!q.is_zero()) parts.push_back(q);
    }
  }
  r.sigma_stable = all_in_span(shifted, basis);
  r.tau_stable = all_in_span(parts, basis);
  r.iota_stable = all_in_span(flipped, basis);

  const pl::Ring* X = pl::ring_X();
  for (int d = 0; d <= 4; ++d) {
    long long total = (long long)X->monomials(d).size();
    std::vector<QPoly> Id;
    if (d >= 3)
      for (auto& m : X->monomials(d - 3))
        for (auto& b : basis) Id.push_back(b.mul_term(m, Rat(1)));
    r.hilbert.push_back(total - (long long)pl::span_dim(Id, Rat(0)));
  }
  if (with_character) {
    std::vector<pl::Poly<ef::Cyc7>> cb;
    for (auto& b : basis) cb.push_back(pl::to_cyc(b));
    r.character = hr::decompose(hr::g7_table(), hr::g7_subspace_character(cb)).str();
  }
  return r;
}

gb::BettiTable expected_surface_betti() {
  gb::BettiTable T;
  T.add(0, 0, 1);
  T.add(1, 3, 21);
  T.add(2, 4, 49);
  T.add(3, 5, 42);
  T.add(4, 6, 14);
  T.add(5, 7, 2);
  T.add(4, 7, 1);
  return T;
}

SurfaceBetti surface_betti(const SurfaceIdeal& S, uint32_t p, uint64_t seed, int budget_degree) {
  SurfaceBetti out;
  const pl::Ring* X = pl::ring_X();
  std::vector<FPoly> gens;
  try {
    for (auto& c : S.cubics) gens.push_back(pl::to_fp(c, p));
  } catch (const std::exception&) {
    out.note = "a coefficient denominator vanishes mod " + std::to_string(p);
    return out;
  }
  // generic coordinates: x_i -> sum_j a_ij x_j with a invertible mod p
  std::mt19937_64 rng(seed);
  pl::Mat<ef::Fp> A(7, 7, ef::Fp(0, p));
  do {
    for (auto& a : A.a) a = ef::Fp(uint32_t(rng() % p), p);
  } while (pl::rank(A) < 7);
  std::vector<FPoly> img;
  for (int i = 0; i < 7; ++i) {
    FPoly l(X);
    for (int j = 0; j < 7; ++j) l += FPoly::var(X, j, A(i, j));
    img.push_back(l);
  }
  for (auto& g : gens) g = pl::substitute(g, img, X);

  gb::GBOptions opt;
  opt.degree_cap = budget_degree;
  auto G = gb::buchberger(gens, opt);
  if (!G.complete) {
    out.within_budget = false;
    out.note = "Groebner basis incomplete at degree cap " + std::to_string(budget_degree);
    return out;
  }
  // Bayer-Stillman: in grevlex the last variable is regular iff no lead involves it
  std::vector<FPoly> H = G.g;
  const pl::Ring* R6 = pl::ring_vars("x", 6);
  const pl::Ring* R5 = pl::ring_vars("x", 5);
  if (!cut_last(H, 7, R6, p) || !cut_last(H, 6, R5, p)) {
    out.note = "a linear form failed the regularity test; coordinates not generic";
    return out;
  }
  gb::GroebnerBasis<ef::Fp> G5;
  G5.R = R5;
  for (auto& h : H)
    if (!h.is_zero()) G5.g.push_back(h);
  out.table = gb::koszul_betti(G5, 5, 3, ef::Fp(0, p));
  auto hd = gb::hilbert(G5, 5, 6);
  out.series_consistent = trimmed(out.table.alternating_sum()) == trimmed(hd.numerator);
  out.certified = out.series_consistent;
  if (!out.series_consistent) out.note = "rows beyond 3 carry syzygies; table truncated";
  return out;
}

}  // namespace km
