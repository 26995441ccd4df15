#include "kleinmoduli/kleinmoduli.hpp"

namespace km {

namespace {

std::vector<QPoly> parse_all(const std::vector<std::string>& src, const pl::Ring* R) {
  std::vector<QPoly> out;
  for (auto& s : src) out.push_back(pl::parse_poly(s, R));
  return out;
}

}  // namespace

std::vector<QPoly> f_basis() {
  return parse_all({"u0^2", "u2*u3", "u3*u1", "u1*u2", "u0*u3 + u1^2", "u0*u1 + u2^2", "u0*u2 + u3^2"},
                   pl::ring_U());
}

// f5 and f6 trade places: with the printed order the minors of alpha(t)
// are not Psi(t) times the basis.
std::vector<QPoly> l_basis() {
  auto f = f_basis();
  return {f[3], f[1], f[2], f[4], f[6], f[5], f[0]};
}

std::vector<QPoly> wprime_basis() {
  return parse_all({"u0*u2 - u3^2", "u0*u1 - u2^2", "u0*u3 - u1^2"}, pl::ring_U());
}

std::vector<QPoly> j_generators() {
  return parse_all({"u1*u2", "u2*u3", "u3*u1", "u1^2 + u0*u3", "u3^2 + u0*u2", "u2^2 + u0*u1", "u0^2"},
                   pl::ring_U());
}

JReport j_ideal() {
  JReport r;
  auto ker = pl::kernel_of_operators(deltas(), 2, pl::ring_U());
  r.kernel_dim = ker.size();
  auto J = j_generators();
  r.equals_printed = pl::same_span(ker, J, Rat(0));
  auto f = f_basis(), v = wprime_basis();
  auto fv = f;
  fv.insert(fv.end(), v.begin(), v.end());
  r.splits = pl::span_dim(f, Rat(0)) == 7 && pl::span_dim(v, Rat(0)) == 3 && pl::span_dim(fv, Rat(0)) == 10 &&
             pl::same_span(f, ker, Rat(0));
  r.betti = gb::free_resolution(J, 8, Rat(0)).betti;
  auto H = gb::hilbert(gb::buchberger(J), 4, 4);
  r.hilbert.assign(H.values.begin(), H.values.begin() + 5);
  return r;
}

// ---- Grassmannian -----------------------------------------------------------

QMat psi(const Point& t) {
  const Rat &t0 = t[0], &t1 = t[1], &t2 = t[2], &t3 = t[3];
  QMat P(3, 7, Rat(0));
  std::array<Rat, 7> r0 = {-t0 * t3, t0 * t1 + t2 * t2, -t3 * t3, 0, t1 * t3, -t2 * t3, 0};
  std::array<Rat, 7> r1 = {t1 * t1 + t0 * t3, -t2 * t2, -t0 * t2, -t1 * t2, 0, t2 * t3, 0};
  std::array<Rat, 7> r2 = {t0 * t1 * t1 + t1 * t2 * t2 + t0 * t0 * t3,
                           t2 * t3 * t3,
                           t1 * t1 * t3 + t0 * t3 * t3,
                           0,
                           0,
                           t0 * t2 * t3,
                           t1 * t2 * t3};
  for (int c = 0; c < 7; ++c) {
    P(0, c) = r0[c];
    P(1, c) = r1[c];
    P(2, c) = r2[c];
  }
  return P;
}

size_t rank(const QMat& M) { return pl::rank(M); }

FormMatrix<Rat> eta_klein() {
  static const std::vector<std::vector<std::string>> rows = {
      {"0", "0", "0", "0", "0", "-y1", "y0"},  {"0", "0", "0", "0", "-y2", "0", "y1"},
      {"0", "0", "0", "-y0", "0", "0", "y2"},  {"0", "0", "y0", "0", "y1", "-y2", "0"},
      {"0", "y2", "0", "-y1", "0", "y0", "0"}, {"y1", "0", "0", "y2", "-y0", "0", "0"},
      {"-y0", "-y1", "-y2", "0", "0", "0", "0"},
  };
  return pl::form_matrix_from_strings<Rat>(rows, pl::ring_Y());
}

Membership grass_membership(const QMat& E) {
  if (E.rows != 3 || E.cols != 7) throw std::invalid_argument("expected a 3x7 matrix");
  if (pl::rank(E) < 3) throw DegenerateParameter("the three rows are dependent");
  auto eta = eta_klein();
  Membership m;
  m.member = true;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    QPoly form(pl::ring_Y());
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        Rat c = E(a, i) * E(b, j);
        if (!ef::is_zero(c) && !eta(i, j).is_zero()) form += eta(i, j).scaled(c);
      }
    for (int k = 0; k < 3; ++k) {
      Rat v = form.coeff(pl::ring_Y()->var(k));
      if (form.is_zero()) v = 0;
      if (!ef::is_zero(v)) m.member = false;
      m.values.push_back(v);
    }
  }
  return m;
}

QMat equational_point() {
  QMat E(3, 7, Rat(0));
  for (int i = 0; i < 3; ++i) E(i, i) = 1;
  return E;
}

// ---- curves -----------------------------------------------------------------

FormMatrix<Rat> alpha_t_matrix() {
  static const std::vector<std::vector<std::string>> rows = {
      {"t0*u1 + t2*u2", "-t2*u0", "-t1*u1"},
      {"t2*u2", "-t0*u2 - t3*u3", "t3*u0"},
      {"u1", "u2", "u3"},
      {"t1", "t2", "t3"},
  };
  return pl::form_matrix_from_strings<Rat>(rows, pl::ring_TU());
}

AlphaMatrix alpha_min(const Point& t) {
  int p = -1;
  for (int c = 0; c < 3; ++c)
    if (!ef::is_zero(t[c + 1])) {
      p = c;
      break;
    }
  if (p < 0) throw DegenerateParameter("t = (1:0:0:0) has no minimal presentation");
  std::vector<QPoly> images;
  for (int i = 0; i < 4; ++i) images.push_back(QPoly::constant(pl::ring_U(), t[i]));
  for (int k = 0; k < 4; ++k) images.push_back(QPoly::var(pl::ring_U(), k, Rat(1)));
  auto A = alpha_t_matrix();
  FormMatrix<Rat> M(3, 2, pl::ring_U());
  int out = 0;
  for (int j = 0; j < 3; ++j) {
    if (j == p) continue;
    // column operation clearing the constant bottom row
    for (int i = 0; i < 3; ++i) {
      QPoly cj = pl::substitute(A(i, j), images, pl::ring_U());
      QPoly cp = pl::substitute(A(i, p), images, pl::ring_U());
      M(i, out) = cj.scaled(t[p + 1]) - cp.scaled(t[j + 1]);
    }
    ++out;
  }
  return alpha_from_forms(M);
}

std::vector<QPoly> psi_quadrics(const Point& t) {
  QMat P = psi(t);
  auto L = l_basis();
  std::vector<QPoly> out;
  for (int r = 0; r < 3; ++r) {
    QPoly q(pl::ring_U());
    for (int c = 0; c < 7; ++c)
      if (!ef::is_zero(P(r, c))) q += L[c].scaled(P(r, c));
    out.push_back(q);
  }
  return out;
}

CurveReport curve_checks(const Point& t) {
  CurveReport r;
  AlphaMatrix al = alpha_min(t);
  auto m = minors(al);
  auto q = psi_quadrics(t);
  r.minors_match_psi = pl::same_span(m, q, Rat(0)) && pl::span_dim(q, Rat(0)) == 3;
  r.delta_ok = delta_criterion(al);
  r.in_j = true;
  auto J = j_generators();
  for (auto& f : q)
    if (!pl::in_span(f, J, Rat(0))) r.in_j = false;
  r.betti = gb::free_resolution(q, 6, Rat(0)).betti;
  r.cm_shape = r.betti.shorthand() == "(1; 3 2)";
  r.degree = gb::hilbert(gb::buchberger(q), 4, 4).degree;
  try {
    auto M = gb::hilbert_burch(q);
    r.hilbert_burch_round_trip = pl::same_span(gb::maximal_minors_3x2(M), q, Rat(0));
  } catch (const gb::NotHilbertBurch&) {
    r.hilbert_burch_round_trip = false;
  }
  return r;
}

}  // namespace km
