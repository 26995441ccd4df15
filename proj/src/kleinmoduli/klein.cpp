#include "heisrep/heisrep.hpp"
#include "kleinmoduli/kleinmoduli.hpp"

namespace km {

namespace {

using CPoly = pl::Poly<ef::Cyc7>;

// (e1 - e6, e2 - e5, e4 - e3): the order in which f_klein is cyclic
hr::CMat wprime_vectors() {
  hr::CMat B(7, 3, ef::Cyc7());
  int pos[3][2] = {{1, 6}, {2, 5}, {4, 3}};
  for (int c = 0; c < 3; ++c) {
    B(pos[c][0], c) = ef::Cyc7(1);
    B(pos[c][1], c) = ef::Cyc7(-1);
  }
  return B;
}

bool fixes(const hr::CMat& g, const CPoly& f) {
  hr::CMat R = hr::restrict_to(g, wprime_vectors());
  const pl::Ring* Y = pl::ring_Y();
  std::vector<CPoly> img;
  for (int i = 0; i < 3; ++i) {
    CPoly v(Y);
    for (int k = 0; k < 3; ++k) v += CPoly::var(Y, k, R(k, i));
    img.push_back(v);
  }
  return pl::substitute(f, img, Y) == f;
}

}  // namespace

QPoly f_klein() { return pl::parse_poly("y0^3*y1 + y1^3*y2 + y2^3*y0", pl::ring_Y()); }

KleinReport klein_invariance() {
  KleinReport r;
  CPoly f = pl::to_cyc(f_klein());
  r.mu = fixes(hr::n_mu(), f);
  r.nu = fixes(hr::n_nu(), f);
  r.delta = fixes(hr::n_delta(), f);
  auto chi = hr::sym_power_char(hr::sl2().cd, hr::complement().v_plus, 4);
  const auto& T = hr::sl2_table();
  auto d = hr::decompose(T, chi);
  Rat m = d.mult[T.index("I")];
  r.invariant_multiplicity = m.get_num().get_si();
  r.basis_note = "W' basis (e1-e6, e2-e5, e4-e3) read as (y0, y1, y2); S^4 W' = " + d.str();
  return r;
}

PfaffianReport pfaffian_apolarity() {
  PfaffianReport r;
  const pl::Ring* Y = pl::ring_Y();
  r.pfaffians = pl::principal_pfaffians(eta_klein(), Rat(1));
  QPoly f = f_klein();
  r.annihilate = true;
  for (auto& p : r.pfaffians)
    if (!pl::apply_diffop(pl::DiffOp{p}, f).is_zero()) r.annihilate = false;
  // catalecticant S^3 -> S^1: a cubic operator goes to its image, a linear form
  auto cubics = Y->monomials(3);
  QMat C(3, cubics.size(), Rat(0));
  for (size_t j = 0; j < cubics.size(); ++j) {
    QPoly img = pl::apply_diffop(pl::DiffOp{QPoly::monomial(Y, cubics[j], Rat(1))}, f);
    for (auto& t : img.terms()) {
      int k = 0;
      while (!t.m[k]) ++k;
      C(k, j) = t.c;
    }
  }
  auto ker = pl::null_space(C, Rat(0));
  r.catalecticant_kernel = ker.size();
  std::vector<QPoly> kp;
  for (auto& v : ker) {
    QPoly q(Y);
    for (size_t j = 0; j < cubics.size(); ++j)
      if (!ef::is_zero(v[j])) q += QPoly::monomial(Y, cubics[j], v[j]);
    kp.push_back(q);
  }
  r.span_kernel = pl::same_span(kp, r.pfaffians, Rat(0));
  auto H = gb::hilbert(gb::buchberger(r.pfaffians), 3, 5);
  r.quotient_hf.assign(H.values.begin(), H.values.begin() + 6);
  auto& h = r.quotient_hf;
  int top = 5;
  while (top > 0 && h[top] == 0) --top;
  r.gorenstein_symmetric = h[top] == 1;
  for (int i = 0; i <= top; ++i)
    if (h[i] != h[top - i]) r.gorenstein_symmetric = false;
  return r;
}

std::array<QMat, 3> net_matrices() {
  std::array<QMat, 3> M = {QMat(4, 4, Rat(0)), QMat(4, 4, Rat(0)), QMat(4, 4, Rat(0))};
  // polarizations of the three operators, 1/2 off the diagonal
  for (int i = 0; i < 3; ++i) {
    const QPoly& s = deltas()[i].symbol;
    for (auto& t : s.terms()) {
      std::vector<int> idx;
      for (int k = 0; k < 4; ++k)
        for (int e = 0; e < t.m[k]; ++e) idx.push_back(k);
      if (idx[0] == idx[1]) M[i](idx[0], idx[0]) = t.c;
      else M[i](idx[0], idx[1]) = M[i](idx[1], idx[0]) = t.c / 2;
    }
  }
  return M;
}

NetReport net_discriminant() {
  NetReport r;
  const pl::Ring* Y = pl::ring_Y();
  auto M = net_matrices();
  FormMatrix<Rat> N(4, 4, Y);
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (!ef::is_zero(M[i](a, b))) N(a, b) += QPoly::var(Y, i, M[i](a, b));
  r.det = pl::det(N, Rat(1));
  QPoly f = f_klein();
  r.factor = r.det.is_zero() ? Rat(0) : r.det.coeff(f.lead_mono()) / f.lead_coeff();
  r.proportional = !ef::is_zero(r.factor) && r.det == f.scaled(r.factor);
  return r;
}

EpsilonReport epsilon_identity() {
  using D = ef::DualNum<QPoly>;
  const pl::Ring* Y = pl::ring_Y();
  QPoly zero(Y), one = QPoly::constant(Y, Rat(1));
  std::array<QPoly, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = QPoly::var(Y, i, Rat(1));
  auto summand = [&](int i) {
    D x(v[i], v[(i + 1) % 3]);
    return ef::pow(x, 4, one) - D(v[i] * v[i] * v[i] * v[i], zero);
  };
  D total(zero, zero);
  for (int i = 0; i < 3; ++i) total += summand(i);
  EpsilonReport r;
  QPoly four_f = f_klein().scaled(Rat(4));
  r.constant_part_zero = total.a.is_zero();
  r.identity = r.constant_part_zero && total.b == four_f;
  D s = summand(0);
  r.single_summand = s.a.is_zero() && s.b == (v[0] * v[0] * v[0] * v[1]).scaled(Rat(4));
  return r;
}

}  // namespace km
