#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "heisrep/heisrep.hpp"
#include "polylin/span.hpp"

namespace hr {

namespace {

FieldElem zpow(long k) { return FieldElem(Cyc7::zeta(k)); }

// Orbits of conjugation by the generators; returns class index per element.
template <class E, class Key, class Mul, class Inv>
std::vector<int> conj_orbits(const std::vector<E>& els, const std::vector<E>& gens, Key key, Mul mulf, Inv invf,
                             int& nclasses) {
  std::unordered_map<uint64_t, int> index;
  for (size_t i = 0; i < els.size(); ++i) index[key(els[i])] = int(i);
  std::vector<int> cls(els.size(), -1);
  nclasses = 0;
  for (size_t i = 0; i < els.size(); ++i) {
    if (cls[i] >= 0) continue;
    std::vector<int> todo = {int(i)};
    cls[i] = nclasses;
    while (!todo.empty()) {
      int e = todo.back();
      todo.pop_back();
      for (auto& g : gens) {
        int f = index.at(key(mulf(mulf(g, els[e]), invf(g))));
        if (cls[f] < 0) {
          cls[f] = nclasses;
          todo.push_back(f);
        }
      }
    }
    ++nclasses;
  }
  return cls;
}

G7Data build_g7() {
  const Law& L = law();
  G7Data G;
  std::vector<HElem> hs;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 7; ++a)
      for (int m = 0; m < 7; ++m)
        for (int n = 0; n < 7; ++n) {
          hs.push_back({a, m, n, b});
          G.elements.push_back(matrix_of(L, hs.back()));
        }
  int nc = 0;
  auto raw = conj_orbits(
      G.elements, {m_sigma(), m_tau(), m_iota()}, [](const MonoMat& g) { return g.key(); },
      [](const MonoMat& a, const MonoMat& b) { return a * b; }, [](const MonoMat& a) { return a.inverse(); }, nc);

  // sort key: kind, then label
  struct Info {
    int kind = 0, p = 0, m = 0, n = 0, rep = -1;
    long size = 0;
  };
  std::vector<Info> info(nc);
  for (size_t e = 0; e < hs.size(); ++e) {
    Info& I = info[raw[e]];
    ++I.size;
    const HElem& h = hs[e];
    if (h.iota) {
      I.kind = 2;
      if (h.m == 0 && h.n == 0) {
        I.p = h.phase;
        I.rep = int(e);
      }
    } else if (h.m == 0 && h.n == 0) {
      I.kind = 0;
      I.p = h.phase;
      I.rep = int(e);
    } else {
      I.kind = 1;
      bool canonical = std::make_pair(h.m, h.n) < std::make_pair(mod7(-h.m), mod7(-h.n));
      if (h.phase == 0 && canonical) {
        I.m = h.m;
        I.n = h.n;
        I.rep = int(e);
      }
    }
  }
  std::vector<int> order(nc);
  for (int c = 0; c < nc; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    auto kx = std::make_tuple(info[x].kind, info[x].p, info[x].m, info[x].n);
    auto ky = std::make_tuple(info[y].kind, info[y].p, info[y].m, info[y].n);
    return kx < ky;
  });
  std::vector<int> pos(nc);
  for (int i = 0; i < nc; ++i) pos[order[i]] = i;
  G.class_of.resize(hs.size());
  for (size_t e = 0; e < hs.size(); ++e) G.class_of[e] = pos[raw[e]];

  G.cd.group = "G7";
  G.cd.order = long(hs.size());
  for (int i = 0; i < nc; ++i) {
    const Info& I = info[order[i]];
    std::string label;
    if (I.kind == 0) label = "{z^" + std::to_string(I.p) + "}";
    else if (I.kind == 1) label = "C(" + std::to_string(I.m) + "," + std::to_string(I.n) + ")";
    else label = "C_iota(z^" + std::to_string(I.p) + ")";
    G.cd.classes.push_back({label, I.size});
    G.reps.push_back(G.elements.at(I.rep));
    G.rep_elems.push_back(hs.at(I.rep));
    G.mn.push_back(I.kind == 1 ? std::make_pair(I.m, I.n) : std::make_pair(0, 0));
    G.phase.push_back(I.p);
  }
  std::unordered_map<uint64_t, int> index;
  for (size_t e = 0; e < G.elements.size(); ++e) index[G.elements[e].key()] = int(e);
  for (int i = 0; i < nc; ++i) {
    std::vector<int> pw;
    MonoMat p = MonoMat::identity();
    for (int k = 0; k <= kMaxPower; ++k) {
      pw.push_back(G.class_of[index.at(p.key())]);
      p = p * G.reps[i];
    }
    G.cd.power.push_back(pw);
  }
  return G;
}

M2 sl2_from_rows(int a, int b, int c, int d) { return {mod7(a), mod7(b), mod7(c), mod7(d)}; }

SL2Data build_sl2() {
  SL2Data S;
  std::vector<M2> gens = {bar(n_mu()), bar(n_nu()), bar(n_delta())};
  std::unordered_map<uint64_t, int> index;
  S.elements.push_back(M2{});
  index[M2{}.key()] = 0;
  for (size_t i = 0; i < S.elements.size(); ++i)
    for (auto& g : gens) {
      M2 h = S.elements[i] * g;
      if (index.emplace(h.key(), int(S.elements.size())).second) S.elements.push_back(h);
    }
  auto inv = [](const M2& g) { return M2{g.d, mod7(-g.b), mod7(-g.c), g.a}; };
  int nc = 0;
  auto raw = conj_orbits(
      S.elements, gens, [](const M2& g) { return uint64_t(g.key()); },
      [](const M2& a, const M2& b) { return a * b; }, inv, nc);

  // printed column order
  M2 mu = gens[0], nu = gens[1], de = gens[2];
  std::vector<std::pair<std::string, M2>> cols = {
      {"id", M2{}},
      {"iota", M2{}.neg()},
      {"mu", mu},
      {"iota mu", mu.neg()},
      {"nu", nu},
      {"nu^3", nu * nu * nu},
      {"iota nu^3", (nu * nu * nu).neg()},
      {"iota nu", nu.neg()},
      {"delta", de},
      {"(2 2|5 2)", sl2_from_rows(2, 2, 5, 2)},
      {"(5 2|5 5)", sl2_from_rows(5, 2, 5, 5)}};
  std::vector<int> pos(nc, -1);
  for (size_t c = 0; c < cols.size(); ++c) {
    int e = index.at(cols[c].second.key());
    if (pos[raw[e]] >= 0) throw std::logic_error("two printed columns in one class");
    pos[raw[e]] = int(c);
    S.rep.push_back(e);
  }
  if (nc != int(cols.size())) throw std::logic_error("unexpected SL2 class count");
  S.class_of.resize(S.elements.size());
  std::vector<long> sizes(nc, 0);
  for (size_t e = 0; e < S.elements.size(); ++e) {
    S.class_of[e] = pos[raw[e]];
    ++sizes[S.class_of[e]];
  }
  S.cd.group = "SL2(F7)";
  S.cd.order = long(S.elements.size());
  for (int c = 0; c < nc; ++c) {
    S.cd.classes.push_back({cols[c].first, sizes[c]});
    std::vector<int> pw;
    M2 p;
    for (int k = 0; k <= kMaxPower; ++k) {
      pw.push_back(S.class_of[index.at(p.key())]);
      p = p * S.elements[S.rep[c]];
    }
    S.cd.power.push_back(pw);
  }
  return S;
}

CharTable build_g7_table(int iota_sign) {
  const G7Data& G = g7();
  CharTable T;
  T.cd = &G.cd;
  size_t nc = G.cd.size();
  auto kind = [&](size_t c) {
    const HElem& h = G.rep_elems[c];
    return h.iota ? 2 : (h.m == 0 && h.n == 0 ? 0 : 1);
  };
  Character one(nc, FieldElem(1)), sgn(nc);
  for (size_t c = 0; c < nc; ++c) sgn[c] = kind(c) == 2 ? FieldElem(-1) : FieldElem(1);
  T.names = {"I", "S"};
  T.rows = {one, sgn};
  for (int sharp = 0; sharp < 2; ++sharp)
    for (int i = 0; i < 6; ++i) {
      long e = 1;
      for (int q = 0; q < i; ++q) e *= 3;
      Character r(nc);
      for (size_t c = 0; c < nc; ++c) {
        long a = G.phase[c] * e;
        if (kind(c) == 0) r[c] = FieldElem(7) * zpow(a);
        else if (kind(c) == 1) r[c] = FieldElem(0);
        else r[c] = (sharp ? -iota_sign : iota_sign) * zpow(a);
      }
      T.names.push_back("V" + std::to_string(i) + (sharp ? "#" : ""));
      T.rows.push_back(r);
    }
  for (int s = 0; s < 7; ++s)
    for (int t = 0; t < 7; ++t) {
      if (s == 0 && t == 0) continue;
      if (std::make_pair(mod7(-s), mod7(-t)) < std::make_pair(s, t)) continue;
      Character r(nc);
      for (size_t c = 0; c < nc; ++c) {
        if (kind(c) == 0) r[c] = FieldElem(2);
        else if (kind(c) == 2) r[c] = FieldElem(0);
        else {
          long v = s * G.mn[c].first + t * G.mn[c].second;
          r[c] = zpow(v) + zpow(-v);
        }
      }
      T.names.push_back("Z(" + std::to_string(s) + "," + std::to_string(t) + ")");
      T.rows.push_back(r);
    }
  return T;
}

CharTable build_sl2_table() {
  CharTable T;
  T.cd = &sl2().cd;
  FieldElem g(ef::gauss_sum());
  FieldElem half(Rat(1, 2));
  FieldElem ap = half * (FieldElem(1) + g), am = half * (FieldElem(1) - g), r2 = FieldElem::sqrt2();
  using F = FieldElem;
  T.names = {"I", "M1", "M2", "L", "U", "U'", "T1", "T2", "T", "W", "W'"};
  T.rows = {
      {F(1), F(1), F(1), F(1), F(1), F(1), F(1), F(1), F(1), F(1), F(1)},
      {F(8), F(-8), F(-1), F(1), F(1), F(1), F(-1), F(-1), F(0), F(0), F(0)},
      {F(8), F(8), F(-1), F(-1), F(1), F(1), F(1), F(1), F(0), F(0), F(0)},
      {F(7), F(7), F(1), F(1), F(0), F(0), F(0), F(0), F(-1), F(-1), F(-1)},
      {F(4), F(-4), F(1), F(-1), am, ap, -ap, -am, F(0), F(0), F(0)},
      {F(4), F(-4), F(1), F(-1), ap, am, -am, -ap, F(0), F(0), F(0)},
      {F(6), F(-6), F(0), F(0), F(-1), F(-1), F(1), F(1), F(0), r2, -r2},
      {F(6), F(-6), F(0), F(0), F(-1), F(-1), F(1), F(1), F(0), -r2, r2},
      {F(6), F(6), F(0), F(0), F(-1), F(-1), F(-1), F(-1), F(2), F(0), F(0)},
      {F(3), F(3), F(0), F(0), -ap, -am, -am, -ap, F(-1), F(1), F(1)},
      {F(3), F(3), F(0), F(0), -am, -ap, -ap, -am, F(-1), F(1), F(1)},
  };
  return T;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

M2 M2::operator*(const M2& o) const {
  return {mod7(a * o.a + b * o.c), mod7(a * o.b + b * o.d), mod7(c * o.a + d * o.c), mod7(c * o.b + d * o.d)};
}

int SL2Data::class_of_matrix(const M2& g) const {
  for (size_t e = 0; e < elements.size(); ++e)
    if (elements[e] == g) return class_of[e];
  throw std::invalid_argument("not in SL2(F7)");
}

const G7Data& g7() {
  static const G7Data G = build_g7();
  return G;
}

const SL2Data& sl2() {
  static const SL2Data S = build_sl2();
  return S;
}

const CharTable& g7_table() {
  static const CharTable T = build_g7_table(-1);
  return T;
}

CharTable g7_printed_table() { return build_g7_table(1); }

const CharTable& sl2_table() {
  static const CharTable T = build_sl2_table();
  return T;
}

int CharTable::index(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return int(i);
  return -1;
}

const Character& CharTable::operator[](const std::string& name) const {
  int i = index(name);
  if (i < 0) throw std::invalid_argument("no irreducible named " + name);
  return rows[i];
}

FieldElem inner(const ClassData& cd, const Character& a, const Character& b) {
  FieldElem s;
  for (size_t c = 0; c < cd.size(); ++c) s += FieldElem(cd.classes[c].size) * a[c] * ef::conj(b[c]);
  return s * FieldElem(Rat(1, cd.order));
}

OrthogonalityReport orthogonality(const CharTable& T) {
  OrthogonalityReport r;
  const ClassData& cd = *T.cd;
  r.rows = T.rows.size() == cd.size();
  for (size_t i = 0; i < T.rows.size() && r.rows; ++i)
    for (size_t j = 0; j < T.rows.size() && r.rows; ++j)
      if (inner(cd, T.rows[i], T.rows[j]) != FieldElem(i == j ? 1 : 0)) r.rows = false;
  r.columns = r.rows;
  for (size_t c = 0; c < cd.size() && r.columns; ++c)
    for (size_t d = 0; d < cd.size() && r.columns; ++d) {
      FieldElem s;
      for (auto& row : T.rows) s += row[c] * ef::conj(row[d]);
      FieldElem want = c == d ? FieldElem(Rat(cd.order) / Rat(cd.classes[c].size)) : FieldElem(0);
      if (s != want) r.columns = false;
    }
  r.sum_dim_squares = 0;
  for (auto& row : T.rows) r.sum_dim_squares += row[0].a()[0] * row[0].a()[0];
  return r;
}

Character product(const Character& a, const Character& b) {
  Character r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

Character sum(const Character& a, const Character& b) {
  Character r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Character scaled(const Character& a, long k) {
  Character r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * FieldElem(k);
  return r;
}

Character galois(const Character& a, int i) {
  Character r(a.size());
  for (size_t c = 0; c < a.size(); ++c) r[c] = ef::galois_theta(a[c], i);
  return r;
}

namespace {

Character newton(const ClassData& cd, const Character& chi, int k, bool alternating) {
  if (k > kMaxPower) throw std::invalid_argument("power too large");
  Character r(chi.size());
  for (size_t c = 0; c < chi.size(); ++c) {
    std::vector<FieldElem> h(k + 1);
    h[0] = FieldElem(1);
    for (int d = 1; d <= k; ++d) {
      FieldElem s;
      for (int j = 1; j <= d; ++j) {
        FieldElem t = chi[cd.power[c][j]] * h[d - j];
        if (alternating && j % 2 == 0) s -= t;
        else s += t;
      }
      h[d] = s * FieldElem(Rat(1, d));
    }
    r[c] = h[k];
  }
  return r;
}

}  // namespace

Character sym_power_char(const ClassData& cd, const Character& chi, int k) { return newton(cd, chi, k, false); }
Character ext_power_char(const ClassData& cd, const Character& chi, int k) { return newton(cd, chi, k, true); }

std::vector<CMat> schroedinger_images(int twist_i) {
  return {twist(m_sigma().dense(), twist_i), twist(m_tau().dense(), twist_i), twist(m_iota().dense(), twist_i)};
}

Character char_of_rep(const std::vector<CMat>& gens) {
  if (gens.size() != 3) throw std::invalid_argument("expected images of sigma, tau, iota");
  const CMat &s = gens[0], &t = gens[1], &i = gens[2];
  size_t n = s.rows;
  CMat one = pl::identity(n, Cyc7());
  CMat si = mat_inverse(s), ti = mat_inverse(t);
  CMat c = mat_mul(mat_mul(s, t), mat_mul(si, ti));
  std::vector<std::pair<std::string, bool>> rel = {
      {"sigma^7 = 1", mat_power(s, 7) == one},
      {"tau^7 = 1", mat_power(t, 7) == one},
      {"iota^2 = 1", mat_mul(i, i) == one},
      {"[sigma,tau] central", mat_mul(c, s) == mat_mul(s, c) && mat_mul(c, t) == mat_mul(t, c)},
      {"iota sigma iota = sigma^-1", mat_mul(mat_mul(i, s), i) == si},
      {"iota tau iota = tau^-1", mat_mul(mat_mul(i, t), i) == ti}};
  for (auto& [name, ok] : rel)
    if (!ok) throw LawError("relation violated: " + name);

  const G7Data& G = g7();
  std::unordered_map<uint64_t, int> index;
  for (size_t e = 0; e < G.elements.size(); ++e) index[G.elements[e].key()] = int(e);
  std::vector<MonoMat> gm = {m_sigma(), m_tau(), m_iota()};
  std::vector<CMat> img(G.elements.size());
  std::vector<char> done(G.elements.size(), 0);
  int id = index.at(MonoMat::identity().key());
  img[id] = one;
  done[id] = 1;
  std::vector<int> todo = {id};
  for (size_t q = 0; q < todo.size(); ++q) {
    int e = todo[q];
    for (int k = 0; k < 3; ++k) {
      int f = index.at((G.elements[e] * gm[k]).key());
      if (done[f]) continue;
      img[f] = mat_mul(img[e], gens[k]);
      done[f] = 1;
      todo.push_back(f);
    }
  }
  Character chi(G.cd.size());
  std::vector<char> seen(G.cd.size(), 0);
  for (size_t e = 0; e < G.elements.size(); ++e) {
    int cl = G.class_of[e];
    FieldElem tr(trace(img[e]));
    if (!seen[cl]) {
      chi[cl] = tr;
      seen[cl] = 1;
    } else if (chi[cl] != tr) {
      throw LawError("trace not constant on class " + G.cd.classes[cl].label);
    }
  }
  return chi;
}

// ---- decompositions -------------------------------------------------------

bool Decomposition::genuine() const {
  for (auto& m : mult)
    if (m.get_den() != 1 || sgn(m) < 0) return false;
  return true;
}

std::string Decomposition::str() const {
  std::vector<std::pair<std::string, Rat>> terms;
  std::vector<size_t> zrows;
  for (size_t r = 0; r < mult.size(); ++r)
    if (table->names[r].rfind("Z(", 0) == 0) zrows.push_back(r);
  bool aggregate = zrows.size() == 24;
  for (size_t k = 1; aggregate && k < zrows.size(); ++k)
    if (mult[zrows[k]] != mult[zrows[0]]) aggregate = false;
  for (size_t r = 0; r < mult.size(); ++r) {
    if (sgn(mult[r]) == 0) continue;
    bool isz = table->names[r].rfind("Z(", 0) == 0;
    if (isz && aggregate) {
      if (r == zrows[0]) terms.push_back({"Z", mult[r]});
      continue;
    }
    terms.push_back({table->names[r], mult[r]});
  }
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (size_t k = 0; k < terms.size(); ++k) {
    Rat m = terms[k].second;
    if (k) os << (sgn(m) < 0 ? " - " : " + ");
    else if (sgn(m) < 0) os << "-";
    Rat a = abs(m);
    if (a != 1) os << ef::to_string(a);
    os << terms[k].first;
  }
  return os.str();
}

Decomposition decompose_virtual(const CharTable& T, const Character& chi) {
  Decomposition d;
  d.table = &T;
  for (size_t r = 0; r < T.rows.size(); ++r) {
    FieldElem v = inner(*T.cd, chi, T.rows[r]);
    if (!v.in_cyc7() || !v.a().is_rational()) throw NotACharacter("irrational multiplicity of " + T.names[r]);
    const Rat& q = v.a()[0];
    if (q.get_den() != 1) throw NotACharacter("non-integral multiplicity of " + T.names[r]);
    d.mult.push_back(q);
  }
  if (character_of(d) != chi) throw NotACharacter("not a class function of the table");
  return d;
}

Decomposition decompose(const CharTable& T, const Character& chi) {
  Decomposition d = decompose_virtual(T, chi);
  for (size_t r = 0; r < d.mult.size(); ++r)
    if (sgn(d.mult[r]) < 0) throw NotACharacter("negative multiplicity of " + T.names[r]);
  return d;
}

Character character_of(const Decomposition& d) {
  const CharTable& T = *d.table;
  Character r(T.cd->size(), FieldElem(0));
  for (size_t k = 0; k < d.mult.size(); ++k) {
    if (sgn(d.mult[k]) == 0) continue;
    FieldElem m(d.mult[k]);
    for (size_t c = 0; c < r.size(); ++c) r[c] += m * T.rows[k][c];
  }
  return r;
}

Decomposition parse_decomposition(const CharTable& T, const std::string& s) {
  Decomposition d;
  d.table = &T;
  d.mult.assign(T.rows.size(), Rat(0));
  if (trim(s) == "0") return d;
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    term = trim(term);
    size_t k = 0;
    while (k < term.size() && isdigit(static_cast<unsigned char>(term[k]))) ++k;
    long m = k ? std::stol(term.substr(0, k)) : 1;
    std::string name = trim(term.substr(k));
    if (name == "Z" && T.index("Z") < 0) {
      bool any = false;
      for (size_t r = 0; r < T.names.size(); ++r)
        if (T.names[r].rfind("Z(", 0) == 0) {
          d.mult[r] += m;
          any = true;
        }
      if (!any) throw std::invalid_argument("no Z rows in table");
      continue;
    }
    int r = T.index(name);
    if (r < 0) throw std::invalid_argument("unknown irreducible '" + name + "'");
    d.mult[r] += m;
  }
  return d;
}

// ---- subspaces ------------------------------------------------------------

std::vector<pl::Poly<Cyc7>> x_action(const CMat& g, const pl::Ring* X) {
  CMat gi = mat_inverse(g);
  std::vector<pl::Poly<Cyc7>> out;
  for (int j = 0; j < 7; ++j) {
    pl::Poly<Cyc7> p(X);
    for (int k = 0; k < 7; ++k)
      if (!gi(j, k).is_zero()) p += pl::Poly<Cyc7>::var(X, k, gi(j, k));
    out.push_back(p);
  }
  return out;
}

std::vector<Cyc7> subspace_character(const std::vector<pl::Poly<Cyc7>>& basis,
                                     const std::vector<std::vector<pl::Poly<Cyc7>>>& elements,
                                     const std::vector<std::string>& names) {
  auto E = pl::span_basis(basis, Cyc7());
  std::vector<Cyc7> out;
  if (E.empty()) return std::vector<Cyc7>(elements.size());
  const pl::Ring* R = E.front().ring();
  for (size_t k = 0; k < elements.size(); ++k) {
    Cyc7 tr;
    std::vector<Cyc7> co;
    for (size_t i = 0; i < E.size(); ++i) {
      auto img = pl::substitute(E[i], elements[k], R);
      if (!pl::echelon_coords(img, E, co, Cyc7()))
        throw NotInvariant("span not stable under " + (k < names.size() ? names[k] : std::to_string(k)));
      tr += co[i];
    }
    out.push_back(tr);
  }
  return out;
}

Character g7_subspace_character(const std::vector<pl::Poly<Cyc7>>& basis) {
  const G7Data& G = g7();
  const pl::Ring* X = basis.empty() ? pl::ring_X() : basis.front().ring();
  std::vector<std::vector<pl::Poly<Cyc7>>> subs;
  std::vector<std::string> names;
  for (size_t c = 0; c < G.reps.size(); ++c) {
    subs.push_back(x_action(G.reps[c].dense(), X));
    names.push_back(G.cd.classes[c].label);
  }
  auto tr = subspace_character(basis, subs, names);
  Character chi;
  for (auto& t : tr) chi.push_back(FieldElem(t));
  return chi;
}

}  // namespace hr
