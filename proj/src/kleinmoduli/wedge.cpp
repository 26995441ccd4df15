#include <algorithm>

#include "kleinmoduli/kleinmoduli.hpp"

namespace km {

namespace {

int m7(int v) { return ((v % 7) + 7) % 7; }

int perm_sign(std::vector<int> s) {
  int sg = 1;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) sg = -sg;
  return sg;
}

QPoly xvar(int k, const Rat& c) { return QPoly::var(pl::ring_X(), k, c); }

const std::array<std::array<FormMatrix<Rat>, 4>, 4>& compositions() {
  static const auto C = [] {
    std::array<std::array<FormMatrix<Rat>, 4>, 4> c;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) c[i][j] = compose_u(i, j);
    return c;
  }();
  return C;
}

}  // namespace

Wedge wedge(int a, int b, int c) {
  std::array<int, 3> t = {m7(a), m7(b), m7(c)};
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return {};
  int s = perm_sign({t[0], t[1], t[2]});
  std::sort(t.begin(), t.end());
  return {{t, s}};
}

Wedge operator+(Wedge a, const Wedge& b) {
  for (auto& [k, v] : b)
    if ((a[k] += v) == 0) a.erase(k);
  return a;
}

Wedge operator-(Wedge a, const Wedge& b) {
  for (auto& [k, v] : b)
    if ((a[k] -= v) == 0) a.erase(k);
  return a;
}

Wedge shift(const Wedge& w, int k) {
  Wedge out;
  for (auto& [t, v] : w) {
    Wedge s = wedge(t[0] + k, t[1] + k, t[2] + k);
    for (auto& [u, c] : s) out[u] += c * v;
  }
  return out;
}

std::vector<WedgeRep> wedge_reps() {
  std::vector<WedgeRep> us(4);
  for (int k = 0; k < 7; ++k) {
    us[0].entries[k] = wedge(1 + k, 4 + k, 2 + k) - wedge(6 + k, 3 + k, 5 + k);
    us[1].entries[k] = wedge(k, 1 + k, 6 + k);
    us[2].entries[k] = wedge(k, 2 + k, 5 + k);
    us[3].entries[k] = wedge(k, 4 + k, 3 + k);
  }
  for (int i = 0; i < 4; ++i) us[i].label = i;
  return us;
}

WedgeRep complement_line() {
  WedgeRep w;
  w.label = -1;
  for (int k = 0; k < 7; ++k) w.entries[k] = wedge(1 + k, 4 + k, 2 + k) + wedge(6 + k, 3 + k, 5 + k);
  return w;
}

bool sigma_equivariant(const WedgeRep& u) {
  for (int k = 0; k < 7; ++k)
    if (shift(u.entries[k], 1) != u.entries[(k + 1) % 7]) return false;
  return true;
}

QPoly wedge_pair(const Wedge& a, const Wedge& b) {
  QPoly out(pl::ring_X());
  for (auto& [ta, ca] : a)
    for (auto& [tb, cb] : b) {
      std::vector<int> seq = {ta[0], ta[1], ta[2], tb[0], tb[1], tb[2]};
      std::vector<int> srt = seq;
      std::sort(srt.begin(), srt.end());
      if (std::adjacent_find(srt.begin(), srt.end()) != srt.end()) continue;
      int k = 0;
      while (std::binary_search(srt.begin(), srt.end(), k)) ++k;
      seq.push_back(k);
      out += xvar(k, Rat(ca * cb * perm_sign(seq)));
    }
  return out;
}

FormMatrix<Rat> compose_u(int i, int j) {
  auto us = wedge_reps();
  FormMatrix<Rat> M(7, 7, pl::ring_X());
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) M(a, b) = wedge_pair(us[i].entries[a], us[j].entries[b]);
  return M;
}

FormMatrix<Rat> b_matrix(int k) {
  // nonzero entries (row, col, variable, sign); the matrices are skew
  static const std::vector<std::array<int, 4>> printed[3] = {
      {{0, 1, 4, 1}, {0, 6, 3, -1}, {1, 2, 5, 1}, {2, 3, 6, 1}, {3, 4, 0, 1}, {4, 5, 1, 1}, {5, 6, 2, 1}},
      {{0, 2, 1, 1}, {0, 5, 6, -1}, {1, 3, 2, 1}, {1, 6, 0, -1}, {2, 4, 3, 1}, {3, 5, 4, 1}, {4, 6, 5, 1}},
      {{0, 3, 5, -1}, {0, 4, 2, 1}, {1, 4, 6, -1}, {1, 5, 3, 1}, {2, 5, 0, -1}, {2, 6, 4, 1}, {3, 6, 1, -1}},
  };
  if (k < 1 || k > 3) throw std::invalid_argument("B_k for k = 1, 2, 3");
  FormMatrix<Rat> M(7, 7, pl::ring_X());
  for (auto [r, c, v, s] : printed[k - 1]) {
    M(r, c) = xvar(v, Rat(s));
    M(c, r) = xvar(v, Rat(-s));
  }
  return M;
}

CompositionReport composition_table() {
  CompositionReport rep;
  const auto& C = compositions();
  std::array<FormMatrix<Rat>, 3> B = {b_matrix(1), b_matrix(2), b_matrix(3)};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto& M = C[i][j];
      std::string l = M.is_zero() ? "0" : "?";
      for (int k = 0; k < 3; ++k) {
        if (M == B[k]) l = "B" + std::to_string(k + 1);
        if (M == B[k].scaled(Rat(-1))) l = "-B" + std::to_string(k + 1);
      }
      rep.label[i][j] = l;
    }
  rep.commutative = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!(C[i][j] == C[j][i])) rep.commutative = false;
  std::map<std::pair<int, int>, std::string> want = {{{0, 1}, "B1"}, {{1, 0}, "B1"}, {{2, 2}, "-B1"},
                                                     {{0, 2}, "B2"}, {{2, 0}, "B2"}, {{3, 3}, "-B2"},
                                                     {{0, 3}, "B3"}, {{3, 0}, "B3"}, {{1, 1}, "-B3"}};
  rep.matches_printed = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto it = want.find({i, j});
      if (rep.label[i][j] != (it == want.end() ? "0" : it->second)) rep.matches_printed = false;
    }
  auto neg = [](const FormMatrix<Rat>& M) { return M.scaled(Rat(-1)); };
  rep.sign_relations = C[0][1] == neg(C[2][2]) && C[0][2] == neg(C[3][3]) && C[0][3] == neg(C[1][1]);
  return rep;
}

// ---- alpha ----------------------------------------------------------------

QPoly AlphaMatrix::entry(int i, int j) const {
  QPoly p(pl::ring_U());
  for (int k = 0; k < 4; ++k)
    if (!ef::is_zero(a[i][j][k])) p += QPoly::var(pl::ring_U(), k, a[i][j][k]);
  return p;
}

FormMatrix<Rat> AlphaMatrix::forms() const {
  FormMatrix<Rat> M(3, 2, pl::ring_U());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) M(i, j) = entry(i, j);
  return M;
}

bool AlphaMatrix::is_zero() const { return forms().is_zero(); }

AlphaMatrix alpha_from_forms(const FormMatrix<Rat>& M) {
  if (M.rows != 3 || M.cols != 2) throw std::invalid_argument("alpha must be 3x2");
  AlphaMatrix al;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j)
      for (auto& t : M(i, j).terms()) {
        if (t.m.deg != 1) throw std::invalid_argument("alpha entries must be linear forms in u");
        int k = 0;
        while (!t.m[k]) ++k;
        al.a[i][j][k] = t.c;
      }
  return al;
}

FormMatrix<Rat> alpha_compose(const AlphaMatrix& al) {
  const auto& C = compositions();
  FormMatrix<Rat> out(21, 21, pl::ring_X());
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) {
      // a_{r1} a_{s2} - a_{r2} a_{s1}, products read as compositions
      FormMatrix<Rat> blk(7, 7, pl::ring_X());
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          Rat c = al.a[r][0][k] * al.a[s][1][l] - al.a[r][1][k] * al.a[s][0][l];
          if (!ef::is_zero(c)) blk = blk + C[k][l].scaled(c);
        }
      for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) out(7 * r + a, 7 * s + b) = blk(a, b);
    }
  return out;
}

std::vector<QPoly> minors(const AlphaMatrix& al) { return gb::maximal_minors_3x2(al.forms()); }

const std::vector<pl::DiffOp>& deltas() {
  static const std::vector<pl::DiffOp> D = {
      {pl::parse_poly("u0*u1 - 1/2*u2^2", pl::ring_U())},
      {pl::parse_poly("u0*u2 - 1/2*u3^2", pl::ring_U())},
      {pl::parse_poly("u0*u3 - 1/2*u1^2", pl::ring_U())},
  };
  return D;
}

bool delta_criterion(const AlphaMatrix& al) {
  for (auto& q : minors(al))
    for (auto& D : deltas())
      if (!pl::apply_diffop(D, q).is_zero()) return false;
  return true;
}

std::vector<Rat> probe_point() {
  std::vector<Rat> p;
  for (int i = 1; i <= 7; ++i) p.push_back(Rat(i));
  return p;
}

std::array<FormMatrix<Rat>, 4> rank_blocks(const std::array<Rat, 4>& l) {
  auto B1 = b_matrix(1), B2 = b_matrix(2), B3 = b_matrix(3);
  return {B1.scaled(l[1]) + B2.scaled(l[2]) + B3.scaled(l[3]), B1.scaled(l[0]) - B3.scaled(l[1]),
          B2.scaled(l[0]) - B1.scaled(l[2]), B3.scaled(l[0]) - B2.scaled(l[3])};
}

IndependenceReport minors_and_independence(const AlphaMatrix& al) {
  IndependenceReport r;
  r.minors = minors(al);
  r.rank = pl::span_dim(r.minors, Rat(0));
  r.independent = r.rank == 3;
  auto blocks = rank_blocks(al.a[0][0]);
  for (int b = 0; b < 4; ++b) {
    r.block_zero[b] = blocks[b].is_zero();
    r.block_rank[b] = pl::rank(pl::evaluate(blocks[b], probe_point(), Rat(0)));
  }
  return r;
}

Rat random_rat(std::mt19937_64& rng, bool nonzero) {
  for (;;) {
    long num = long(rng() % 27) - 13;
    long den = long(rng() % 13) + 1;
    if (nonzero && num == 0) continue;
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
}

AlphaMatrix random_alpha(std::mt19937_64& rng) {
  AlphaMatrix al;
  for (auto& row : al.a)
    for (auto& e : row)
      for (auto& c : e) c = random_rat(rng);
  return al;
}

Point random_point(std::mt19937_64& rng) {
  Point t;
  t[0] = random_rat(rng);
  for (int i = 1; i < 4; ++i) t[i] = random_rat(rng, true);
  return t;
}

AlphaMatrix conjugate(const AlphaMatrix& al, const QMat& P, const QMat& Q) {
  AlphaMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k) {
        Rat s = 0;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 2; ++b) s += P(i, a) * al.a[a][b][k] * Q(b, j);
        out.a[i][j][k] = s;
      }
  return out;
}

std::vector<AlphaMatrix> equivalence_samples(std::mt19937_64& rng) {
  auto invertible = [&](size_t n) {
    QMat M(n, n, Rat(0));
    do {
      for (auto& x : M.a) x = random_rat(rng);
    } while (pl::rank(M) < n);
    return M;
  };
  std::vector<AlphaMatrix> out;
  for (int i = 0; i < 100; ++i) out.push_back(random_alpha(rng));
  std::vector<AlphaMatrix> good;
  for (int i = 0; i < 50; ++i) {
    AlphaMatrix base = alpha_min(random_point(rng));
    QMat P = invertible(3);
    good.push_back(conjugate(base, P, invertible(2)));
  }
  out.insert(out.end(), good.begin(), good.end());
  for (auto al : good) {
    size_t slot = rng() % 24;
    al.a[slot / 8][(slot / 4) % 2][slot % 4] += random_rat(rng, true);
    out.push_back(al);
  }
  return out;
}

EquivalenceReport check_equivalence(const std::vector<AlphaMatrix>& alphas) {
  EquivalenceReport r;
  r.samples = alphas.size();
  for (size_t i = 0; i < alphas.size(); ++i) {
    bool zero = alpha_compose(alphas[i]).is_zero();
    bool ann = delta_criterion(alphas[i]);
    r.composing_to_zero += zero;
    r.annihilated += ann;
    if (zero != ann) r.disagreements.push_back(i);
  }
  return r;
}

}  // namespace km
