#include <functional>
#include <unordered_map>

#include "heisrep/heisrep.hpp"

namespace hr {

CMat n_mu() { return m_mu().dense(); }
CMat n_nu() { return m_nu().dense(); }
CMat n_delta() { return delta_matrix(); }

namespace {

struct Model {
  CMat sigma, tau, iota, mu, nu, delta;
};

Model e_model() {
  return {m_sigma().dense(), m_tau().dense(), m_iota().dense(), n_mu(), n_nu(), n_delta()};
}

Model dual_model() {
  Model m = e_model();
  for (CMat* x : {&m.sigma, &m.tau, &m.iota, &m.mu, &m.nu, &m.delta}) *x = transpose(*x);
  return m;
}

struct Relation {
  std::string name;
  CMat Model::*x;
  CMat Model::*g;
  std::function<CMat(const Model&)> rhs;
};

std::vector<Relation> relations() {
  auto inv = [](const CMat& a) { return mat_inverse(a); };
  return {
      {"mu sigma mu^-1 = sigma^2", &Model::mu, &Model::sigma, [](const Model& m) { return mat_power(m.sigma, 2); }},
      {"mu tau mu^-1 = tau^4", &Model::mu, &Model::tau, [](const Model& m) { return mat_power(m.tau, 4); }},
      {"iota sigma iota = sigma^-1", &Model::iota, &Model::sigma, [inv](const Model& m) { return inv(m.sigma); }},
      {"iota tau iota = tau^-1", &Model::iota, &Model::tau, [inv](const Model& m) { return inv(m.tau); }},
      {"nu sigma nu^-1 = z^8 sigma tau^2", &Model::nu, &Model::sigma,
       [](const Model& m) {
         CMat r = mat_mul(m.sigma, mat_power(m.tau, 2));
         for (auto& v : r.a) v *= Cyc7::zeta(8);
         return r;
       }},
      {"nu tau nu^-1 = tau", &Model::nu, &Model::tau, [](const Model& m) { return m.tau; }},
      {"delta sigma delta^-1 = tau", &Model::delta, &Model::sigma, [](const Model& m) { return m.tau; }},
      {"delta tau delta^-1 = sigma^-1", &Model::delta, &Model::tau, [inv](const Model& m) { return inv(m.sigma); }},
  };
}

bool holds(const Relation& r, const Model& m) {
  const CMat& x = m.*(r.x);
  return mat_mul(mat_mul(x, m.*(r.g)), mat_inverse(x)) == r.rhs(m);
}

// H7 elements keyed by matrix, for decoding conjugates.
const std::unordered_map<uint64_t, HElem>& h_index() {
  static const std::unordered_map<uint64_t, HElem> idx = [] {
    std::unordered_map<uint64_t, HElem> m;
    for (int a = 0; a < 7; ++a)
      for (int p = 0; p < 7; ++p)
        for (int q = 0; q < 7; ++q) {
          HElem h{a, p, q, 0};
          m[matrix_of(law(), h).key()] = h;
        }
    return m;
  }();
  return idx;
}

HElem decode(const CMat& M) {
  auto g = as_monomial(M);
  if (!g) throw std::invalid_argument("matrix does not normalize H7");
  auto it = h_index().find(g->key());
  if (it == h_index().end()) throw std::invalid_argument("matrix does not normalize H7");
  return it->second;
}

}  // namespace

NormalizerReport verify_normalizer_relations() {
  NormalizerReport rep;
  Model e = e_model(), d = dual_model();
  for (auto& r : relations()) rep.relations.push_back({r.name, holds(r, e), holds(r, d)});
  bool all_lit = true, all_dual = true;
  for (auto& r : rep.relations) {
    all_lit = all_lit && r.literal;
    all_dual = all_dual && r.dual;
  }
  if (all_lit) rep.reading = "e-basis matrices";
  else if (all_dual) rep.reading = "transposed matrices (x^-1 g x in the e-basis)";
  rep.delta_squared_is_iota = mat_mul(e.delta, e.delta) == e.iota;
  std::vector<std::pair<std::string, CMat>> gens = {{"sigma", e.sigma}, {"tau", e.tau}, {"iota", e.iota},
                                                    {"mu", e.mu},       {"nu", e.nu},   {"delta", e.delta}};
  for (auto& [name, M] : gens) rep.det_one.push_back({name, determinant(M) == Cyc7(1)});
  return rep;
}

bool NormalizerReport::ok() const {
  if (reading.empty() || !delta_squared_is_iota) return false;
  for (auto& [n, ok] : det_one)
    if (!ok) return false;
  return true;
}

M2 bar(const CMat& x) {
  CMat xi = mat_inverse(x);
  HElem s = decode(mat_mul(mat_mul(xi, m_sigma().dense()), x));
  HElem t = decode(mat_mul(mat_mul(xi, m_tau().dense()), x));
  return {s.m, t.m, s.n, t.n};
}

CMat restrict_to(const CMat& g, const CMat& B) {
  size_t n = B.rows, k = B.cols;
  CMat gB = mat_mul(g, B);
  CMat aug(n, 2 * k, Cyc7());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      aug(i, j) = B(i, j);
      aug(i, k + j) = gB(i, j);
    }
  auto E = pl::rref(aug);
  if (E.rank() != k || E.pivots.back() != k - 1) throw NotInvariant("subspace not invariant");
  CMat R(k, k, Cyc7());
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) R(i, j) = E.R(i, k + j);
  if (!(mat_mul(B, R) == gB)) throw NotInvariant("subspace not invariant");
  return R;
}

namespace {

CMat columns(const std::vector<std::vector<std::pair<int, int>>>& cols) {
  CMat B(7, cols.size(), Cyc7());
  for (size_t c = 0; c < cols.size(); ++c)
    for (auto [i, v] : cols[c]) B(i, c) = Cyc7(v);
  return B;
}

}  // namespace

CMat v_plus_basis() { return columns({{{1, 1}, {6, -1}}, {{4, 1}, {3, -1}}, {{2, 1}, {5, -1}}}); }
CMat v_minus_basis() { return columns({{{0, 2}}, {{1, 1}, {6, 1}}, {{4, 1}, {3, 1}}, {{2, 1}, {5, 1}}}); }

namespace {

ComplementReport build_complement() {
  ComplementReport rep;
  const SL2Data& S = sl2();
  std::vector<CMat> gens = {n_mu(), n_nu(), n_delta()};
  std::vector<M2> gbar;
  for (auto& g : gens) gbar.push_back(bar(g));
  std::unordered_map<int, int> index;
  std::vector<M2> els = {M2{}};
  std::vector<CMat> lift = {pl::identity(7, Cyc7())};
  index[M2{}.key()] = 0;
  rep.lift_consistent = true;
  // bar reverses products, so the lift of M * bar(g) is g * lift(M)
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t k = 0; k < gens.size(); ++k) {
      M2 h = els[i] * gbar[k];
      CMat L = mat_mul(gens[k], lift[i]);
      auto [it, fresh] = index.emplace(h.key(), int(els.size()));
      if (fresh) {
        els.push_back(h);
        lift.push_back(std::move(L));
      } else if (!(lift[it->second] == L)) {
        rep.lift_consistent = false;
      }
    }
  rep.order = els.size();
  size_t nc = S.cd.size();
  std::vector<FieldElem> tr(nc);
  std::vector<char> seen(nc, 0);
  for (size_t e = 0; e < els.size(); ++e) {
    int c = S.class_of_matrix(els[e]);
    FieldElem t(trace(lift[e]));
    if (!seen[c]) {
      tr[c] = t;
      seen[c] = 1;
    } else if (tr[c] != t) {
      rep.lift_consistent = false;
    }
  }
  rep.v = tr;
  // V+ and V- are the iota = +1 and -1 eigenspaces; iota is central in the complement
  rep.v_plus.resize(nc);
  rep.v_minus.resize(nc);
  FieldElem half(Rat(1, 2));
  for (size_t c = 0; c < nc; ++c) {
    int ic = S.class_of_matrix(S.elements[S.rep[c]].neg());
    rep.v_plus[c] = half * (tr[c] + tr[ic]);
    rep.v_minus[c] = half * (tr[c] - tr[ic]);
  }
  return rep;
}

}  // namespace

const ComplementReport& complement() {
  static const ComplementReport r = build_complement();
  return r;
}

}  // namespace hr
