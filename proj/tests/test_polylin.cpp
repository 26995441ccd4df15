#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polylin/formmatrix.hpp"

using namespace pl;
using ef::Cyc7;
using ef::Rat;

namespace {

Poly<Rat> P(const std::string& s, const Ring* R = ring_U()) { return parse_poly(s, R); }

DiffOp op(const std::string& s) { return {parse_poly(s, ring_U())}; }

std::vector<DiffOp> deltas() {
  return {op("u0*u1 - 1/2*u2^2"), op("u0*u2 - 1/2*u3^2"), op("u0*u3 - 1/2*u1^2")};
}

}  // namespace

TEST_CASE("substitution by sigma and tau") {
  const Ring* X = ring_X();
  std::vector<Poly<Rat>> sigma;
  for (int j = 0; j < 7; ++j) sigma.push_back(Poly<Rat>::var(X, (j + 6) % 7, Rat(1)));
  CHECK(substitute(P("x0*x1*x2", X), sigma, X) == P("x6*x0*x1", X));
  std::vector<Poly<Rat>> id;
  for (int j = 0; j < 7; ++j) id.push_back(Poly<Rat>::var(X, j, Rat(1)));
  Poly<Rat> f = P("x0^3 - 2*x1*x5*x6 + 7/3*x2^2*x4", X);
  CHECK(substitute(f, id, X) == f);

  std::vector<Poly<Cyc7>> tau;
  for (int j = 0; j < 7; ++j) tau.push_back(Poly<Cyc7>::var(X, j, Cyc7::zeta(-j)));
  for (int j = 0; j < 7; ++j) {
    auto xj = Poly<Cyc7>::var(X, j, Cyc7(1));
    CHECK(substitute(xj, tau, X) == xj.scaled(Cyc7::zeta(-j)));
  }
  // composition law on a random cubic
  auto g = to_cyc(f);
  std::vector<Poly<Cyc7>> st;
  for (int j = 0; j < 7; ++j) st.push_back(substitute(tau[j], std::vector<Poly<Cyc7>>{
      to_cyc(sigma[0]), to_cyc(sigma[1]), to_cyc(sigma[2]), to_cyc(sigma[3]),
      to_cyc(sigma[4]), to_cyc(sigma[5]), to_cyc(sigma[6])}, X));
  std::vector<Poly<Cyc7>> sigc;
  for (auto& s : sigma) sigc.push_back(to_cyc(s));
  CHECK(substitute(g, st, X) == substitute(substitute(g, tau, X), sigc, X));
  CHECK_THROWS(substitute(f, std::vector<Poly<Rat>>{id[0]}, X));
}

TEST_CASE("second order operators") {
  auto D = deltas();
  CHECK(apply_diffop(D[0], P("u0*u1")) == Poly<Rat>::constant(ring_U(), Rat(1)));
  CHECK(apply_diffop(D[2], P("u1^2 + u0*u3")).is_zero());
  CHECK(apply_diffop(D[0], P("u2^2")) == Poly<Rat>::constant(ring_U(), Rat(-1)));
}

TEST_CASE("kernels of the operators") {
  auto D = deltas();
  auto k2 = kernel_of_operators(D, 2, ring_U());
  CHECK(k2.size() == 7);
  std::vector<Poly<Rat>> listed = {P("u1*u2"), P("u2*u3"), P("u3*u1"), P("u1^2+u0*u3"),
                                   P("u3^2+u0*u2"), P("u2^2+u0*u1"), P("u0^2")};
  CHECK(same_span(k2, listed));
  CHECK(kernel_of_operators(D, 1, ring_U()).size() == 4);
  CHECK(kernel_of_operators({}, 2, ring_U()).size() == 10);
}

TEST_CASE("pfaffians and determinants") {
  const Ring* X = ring_X();
  FormMatrix<Rat> two(2, 2, X);
  two(0, 1) = P("x3", X);
  two(1, 0) = -two(0, 1);
  CHECK(pfaffian(two, Rat(1)) == P("x3", X));

  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> c(-3, 3);
  for (size_t n : {2u, 4u, 6u}) {
    FormMatrix<Rat> M(n, n, X);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        Poly<Rat> l(X);
        for (int k = 0; k < 7; ++k) l += Poly<Rat>::var(X, k, Rat(c(rng)));
        M(i, j) = l;
        M(j, i) = -l;
      }
    auto pf = pfaffian(M, Rat(1));
    CHECK(pf * pf == det(M, Rat(1)));
  }
  FormMatrix<Rat> bad(2, 2, X);
  bad(0, 1) = P("x1", X);
  CHECK_THROWS(pfaffian(bad, Rat(1)));
}

TEST_CASE("scalar linear algebra") {
  CHECK(rank(identity(7, Rat(0))) == 7);
  // Delta_i acting on quadrics: 3x10
  auto D = deltas();
  auto monos = ring_U()->monomials(2);
  Mat<Rat> M(3, monos.size(), Rat(0));
  for (size_t j = 0; j < monos.size(); ++j)
    for (size_t i = 0; i < 3; ++i) {
      auto v = apply_diffop(D[i], Poly<Rat>::monomial(ring_U(), monos[j], Rat(1)));
      M(i, j) = v.is_zero() ? Rat(0) : v.lead_coeff();
    }
  CHECK(null_space(M, Rat(0)).size() == 7);
  ef::Fp z(0, 31);
  Mat<ef::Fp> F(2, 2, z);
  F(0, 0) = ef::Fp(1, 31);
  F(0, 1) = ef::Fp(2, 31);
  F(1, 0) = ef::Fp(2, 31);
  F(1, 1) = ef::Fp(4, 31);
  CHECK(rank(F) == 1);
}

TEST_CASE("text round trip") {
  const Ring* X = ring_X();
  for (auto s : {"x0^3 - 2*x1*x5*x6 + 7/3*x2^2*x4", "x1*x2*x4 + x3*x5*x6 - x0^3", "-1/2*x6"}) {
    auto f = P(s, X);
    CHECK(P(to_string(f), X) == f);
  }
  auto g = parse_poly_field("(1 + 2*z + 2*z^2 + 2*z^4)*x0 + r2*x1^2", X);
  CHECK(parse_poly_field(to_string(g), X) == g);
  CHECK_THROWS(P("x0 + w", X));
}
