#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kleinmoduli/kleinmoduli.hpp"

using namespace km;

namespace {

QPoly X(const std::string& s) { return pl::parse_poly(s, pl::ring_X()); }
QPoly U(const std::string& s) { return pl::parse_poly(s, pl::ring_U()); }
Point ones() { return {Rat(1), Rat(1), Rat(1), Rat(1)}; }

}  // namespace

TEST_CASE("wedge signs") {
  CHECK(wedge(0, 1, 2) == Wedge{{{0, 1, 2}, 1}});
  CHECK(wedge(1, 0, 2) == Wedge{{{0, 1, 2}, -1}});
  CHECK(wedge(1, 1, 2).empty());
  CHECK(wedge(7, 8, 9) == wedge(0, 1, 2));
  CHECK(shift(wedge(5, 6, 0), 1) == wedge(6, 0, 1));
  CHECK((wedge(0, 1, 2) - wedge(0, 1, 2)).empty());
}

TEST_CASE("representatives are sigma-equivariant") {
  for (auto& u : wedge_reps()) CHECK(sigma_equivariant(u));
  CHECK(sigma_equivariant(complement_line()));
}

TEST_CASE("pairing calibrated on B1") {
  auto us = wedge_reps();
  CHECK(wedge_pair(us[0].entries[0], us[1].entries[1]) == X("x4"));
  CHECK(compose_u(0, 1)(0, 1) == X("x4"));
  for (int k = 1; k <= 3; ++k) CHECK(b_matrix(k).is_skew());
  CHECK_THROWS(b_matrix(4));
}

TEST_CASE("composition table") {
  auto r = composition_table();
  CHECK(r.commutative);
  CHECK(r.matches_printed);
  CHECK(r.sign_relations);
  CHECK(r.label[1][1] == "-B3");
  CHECK(r.label[1][2] == "0");
  CHECK(r.label[0][0] == "0");
}

TEST_CASE("Delta operators and J") {
  auto r = j_ideal();
  CHECK(r.kernel_dim == 7);
  CHECK(r.equals_printed);
  CHECK(r.splits);
  CHECK(r.betti.shorthand() == "(1; 7 8; 3 8 3)");
  CHECK(r.hilbert == std::vector<long long>{1, 4, 3, 0, 0});
  // the f-basis lies in J, the W' basis does not
  for (auto& f : f_basis()) CHECK(pl::in_span(f, j_generators(), Rat(0)));
  for (auto& v : wprime_basis()) CHECK(!pl::in_span(v, j_generators(), Rat(0)));
}

TEST_CASE("alpha composition against the Delta criterion") {
  AlphaMatrix al = alpha_min(ones());
  CHECK(alpha_compose(al).is_zero());
  CHECK(delta_criterion(al));
  std::mt19937_64 rng(7);
  AlphaMatrix r = random_alpha(rng);
  CHECK(!alpha_compose(r).is_zero());
  CHECK(!delta_criterion(r));
  CHECK(alpha_from_forms(al.forms()).forms() == al.forms());
}

TEST_CASE("equivalence on the seeded sample set") {
  std::mt19937_64 rng(42);
  auto s = equivalence_samples(rng);
  REQUIRE(s.size() == 200);
  auto r = check_equivalence(s);
  CHECK(r.ok());
  CHECK(r.composing_to_zero == 50);
  CHECK(r.annihilated == 50);
}

TEST_CASE("conjugation preserves the criterion") {
  QMat P(3, 3, Rat(0)), Q(2, 2, Rat(0));
  P(0, 1) = P(1, 0) = P(2, 2) = 1;
  Q(0, 0) = 2;
  Q(1, 0) = Q(1, 1) = 1;
  CHECK(delta_criterion(conjugate(alpha_min(ones()), P, Q)));
}

TEST_CASE("minors independent and blocks of rank 6") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    auto r = minors_and_independence(random_alpha(rng));
    CHECK(r.independent);
    for (int b = 0; b < 4; ++b)
      if (!r.block_zero[b]) CHECK(r.block_rank[b] == 6);
  }
  auto blocks = rank_blocks({Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(blocks[0].is_zero());
  CHECK(blocks[1] == b_matrix(1));
}

TEST_CASE("random rationals stay in range") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    Rat q = random_rat(rng);
    CHECK(abs(q.get_num()) <= 13);
    CHECK(q.get_den() <= 13);
    CHECK(!ef::is_zero(random_rat(rng, true)));
  }
}

TEST_CASE("Psi at the unit point") {
  QMat P = psi(ones());
  std::vector<Rat> row0;
  for (int c = 0; c < 7; ++c) row0.push_back(P(0, c));
  CHECK(row0 == std::vector<Rat>{-1, 2, -1, 0, 1, -1, 0});
  CHECK(rank(P) == 3);
  CHECK(rank(psi({Rat(1), Rat(0), Rat(0), Rat(0)})) < 3);
}

TEST_CASE("Grassmannian membership") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) CHECK(grass_membership(psi(random_point(rng))).member);
  CHECK(grass_membership(equational_point()).member);
  QMat E(3, 7, Rat(0));
  for (auto& x : E.a) x = random_rat(rng);
  auto m = grass_membership(E);
  CHECK(!m.member);
  CHECK(m.values.size() == 9);
  CHECK_THROWS_AS(grass_membership(psi({Rat(1), Rat(0), Rat(0), Rat(0)})), DegenerateParameter);
  CHECK(eta_klein().is_skew());
}

TEST_CASE("L basis order") {
  auto L = l_basis(), f = f_basis();
  CHECK(L[0] == U("u1*u2"));
  CHECK(L[4] == f[6]);
  CHECK(L[5] == f[5]);
  // the printed order does not reproduce the minors
  std::vector<QPoly> printed = {f[3], f[1], f[2], f[4], f[5], f[6], f[0]};
  QMat P = psi(ones());
  std::vector<QPoly> q;
  for (int r = 0; r < 3; ++r) {
    QPoly s(pl::ring_U());
    for (int c = 0; c < 7; ++c) s += printed[c].scaled(P(r, c));
    q.push_back(s);
  }
  CHECK(!pl::same_span(q, minors(alpha_min(ones())), Rat(0)));
}

TEST_CASE("curves from alpha(t)") {
  CHECK(alpha_t_matrix().rows == 4);
  CHECK_THROWS_AS(alpha_min({Rat(1), Rat(0), Rat(0), Rat(0)}), DegenerateParameter);
  // a parameter with t1 = 0 still has a minimal form
  CHECK_NOTHROW(alpha_min({Rat(0), Rat(0), Rat(1), Rat(2)}));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3; ++i) {
    auto r = curve_checks(random_point(rng));
    CHECK(r.minors_match_psi);
    CHECK(r.delta_ok);
    CHECK(r.in_j);
    CHECK(r.cm_shape);
    CHECK(r.degree == 3);
    CHECK(r.hilbert_burch_round_trip);
  }
}

TEST_CASE("D and the symmetries") {
  auto D = d_vector();
  CHECK(D[1] == X("x0*x1*x6"));
  CHECK(D[3] == X("x2^2*x3 + x5^2*x4"));
  CHECK(sigma_shift(X("x6"), 1) == X("x0"));
  CHECK(iota_image(X("x1*x2")) == X("x6*x5"));
}

TEST_CASE("surface at the unit point") {
  auto S = surface_ideal(ones());
  CHECK(!S.degenerate);
  CHECK(S.cubics.size() == 21);
  auto r = surface_checks(S, true);
  CHECK(r.tau_invariant_g);
  CHECK(r.sigma_stable);
  CHECK(r.tau_stable);
  CHECK(r.iota_stable);
  CHECK(r.hilbert == std::vector<long long>{1, 7, 28, 63, 112});
  CHECK(r.character == "3V4");
}

TEST_CASE("surface Betti table over F31") {
  std::mt19937_64 rng(42);
  auto S = surface_ideal(random_point(rng));
  auto b = surface_betti(S, 31, 42, 8);
  CHECK(b.certified);
  CHECK(b.series_consistent);
  CHECK(b.table == expected_surface_betti());
  CHECK(surface_betti(S, 31, 42, 3).within_budget == false);
}

TEST_CASE("Klein quartic") {
  auto k = klein_invariance();
  CHECK(k.mu);
  CHECK(k.nu);
  CHECK(k.delta);
  CHECK(k.invariant_multiplicity == 1);

  auto p = pfaffian_apolarity();
  CHECK(p.pfaffians.size() == 7);
  CHECK(p.annihilate);
  CHECK(p.catalecticant_kernel == 7);
  CHECK(p.span_kernel);
  CHECK(p.quotient_hf == std::vector<long long>{1, 3, 6, 3, 1, 0});
  CHECK(p.gorenstein_symmetric);

  auto n = net_discriminant();
  CHECK(n.proportional);
  CHECK(n.factor == Rat(-1) / Rat(16));
  auto M = net_matrices();
  CHECK(M[2](0, 3) == Rat(1) / Rat(2));
  CHECK(M[2](1, 1) == Rat(-1) / Rat(2));

  auto e = epsilon_identity();
  CHECK(e.identity);
  CHECK(e.constant_part_zero);
  CHECK(e.single_summand);
}
