#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groebner/groebner.hpp"

using namespace gb;
using ef::Fp;
using ef::Rat;
using pl::parse_poly;

namespace {

Poly<Rat> P(const std::string& s, const Ring* R = pl::ring_U()) { return parse_poly(s, R); }

std::vector<Poly<Rat>> J() {
  return {P("u1*u2"), P("u2*u3"), P("u3*u1"), P("u1^2+u0*u3"), P("u3^2+u0*u2"), P("u2^2+u0*u1"), P("u0^2")};
}
std::vector<Poly<Rat>> Ce() { return {P("u1*u2"), P("u2*u3"), P("u3*u1")}; }

// (w, cubic) meet (x, y, z) in the variables u0..u3 = x, y, z, w
std::vector<Poly<Rat>> cubic_point() {
  return intersect({P("u3"), P("u0^3 + u1^3 + u2^3 - u0*u1*u2")}, {P("u0"), P("u1"), P("u2")});
}

BettiTable table(std::initializer_list<std::tuple<int, int, long>> es) {
  BettiTable t;
  for (auto [i, j, b] : es) t.add(i, j, b);
  return t;
}

Series numerator_of(const std::vector<Poly<Rat>>& I) {
  auto G = buchberger(I);
  return hilbert_numerator(G.leads(), G.R->nvars());
}

}  // namespace

TEST_CASE("buchberger on fixtures") {
  auto G = buchberger(Ce());
  CHECK(G.g.size() == 3);
  CHECK(pl::same_span(G.g, Ce()));
  CHECK(G.complete);

  auto GJ = buchberger(J());
  CHECK(!normal_form(P("u0"), GJ).is_zero());
  CHECK(!normal_form(P("u0*u3"), GJ).is_zero());
  CHECK(normal_form(P("u0^2"), GJ).is_zero());
  // S/J vanishes from degree 3 on
  for (auto& m : pl::ring_U()->monomials(3))
    CHECK(normal_form(Poly<Rat>::monomial(pl::ring_U(), m, Rat(1)), GJ).is_zero());
  CHECK(normal_form(P("u0^4"), GJ).is_zero());
  // membership certificate: explicit combination reduces to zero
  Poly<Rat> cert = P("u0 - 3*u2") * P("u1^2+u0*u3") + P("5/2*u3") * P("u1*u2");
  CHECK(normal_form(cert, GJ).is_zero());

  // degree cap
  GBOptions opt;
  opt.degree_cap = 2;
  auto capped = buchberger(J(), opt);
  CHECK(!capped.complete);
}

TEST_CASE("buchberger over F31 agrees with Q") {
  std::vector<Poly<Fp>> jf;
  for (auto& f : J()) jf.push_back(pl::to_fp(f, 31));
  auto Gf = buchberger(jf);
  auto Gq = buchberger(J());
  CHECK(Gf.leads() == Gq.leads());
}

TEST_CASE("hilbert data") {
  auto HJ = hilbert(buchberger(J()), 4, 6);
  CHECK(HJ.values == std::vector<long long>{1, 4, 3, 0, 0, 0, 0});
  CHECK(HJ.krull_dim == 0);
  CHECK(HJ.degree == 8);

  auto HC = hilbert(buchberger(Ce()), 4, 8);
  for (int d = 1; d <= 8; ++d) CHECK(HC.values[d] == 3 * d + 1);
  CHECK(HC.proj_dim() == 1);
  CHECK(HC.degree == 3);

  // a bare monomial ideal through the pivot recursion
  auto Hm = hilbert_from_leads({P("u0*u1").lead_mono(), P("u1*u2").lead_mono(), P("u2*u3").lead_mono()}, 4, 5);
  CHECK(Hm.krull_dim == 2);
}

TEST_CASE("graded syzygies") {
  std::vector<Vec<Rat>> cols;
  for (auto& f : Ce()) cols.push_back({f});
  auto s = minimal_syzygies(cols, {2, 2, 2}, {0}, 5, pl::ring_U(), Rat(0));
  CHECK(s.degrees == std::vector<int>{3, 3});

  cols.clear();
  for (auto& f : J()) cols.push_back({f});
  auto sj = minimal_syzygies(cols, std::vector<int>(7, 2), {0}, 5, pl::ring_U(), Rat(0));
  CHECK(std::count(sj.degrees.begin(), sj.degrees.end(), 3) == 8);
  CHECK(std::count(sj.degrees.begin(), sj.degrees.end(), 4) == 3);

  auto single = minimal_syzygies(std::vector<Vec<Rat>>{{P("u0^2+u1*u3")}}, {2}, {0}, 6, pl::ring_U(), Rat(0));
  CHECK(single.gens.empty());
}

TEST_CASE("free resolutions and Betti tables") {
  auto RJ = free_resolution(J(), 8, Rat(0));
  CHECK(RJ.betti == table({{0, 0, 1}, {1, 2, 7}, {2, 3, 8}, {2, 4, 3}, {3, 5, 8}, {4, 6, 3}}));
  CHECK(RJ.betti.shorthand() == "(1; 7 8; 3 8 3)");
  CHECK(RJ.betti.alternating_sum() == numerator_of(J()));

  auto RC = free_resolution(Ce(), 6, Rat(0));
  CHECK(RC.betti.shorthand() == "(1; 3 2)");

  auto fix = cubic_point();
  auto RF = free_resolution(fix, 8, Rat(0));
  CHECK(RF.betti == table({{0, 0, 1}, {1, 2, 3}, {2, 3, 3}, {3, 4, 1}, {1, 3, 1}, {2, 4, 1}}));
  CHECK(RF.betti.shorthand() == "(1; 3 3 1; 1 1)");
  CHECK(RF.betti.alternating_sum() == numerator_of(fix));
}

TEST_CASE("koszul homology matches the syzygy route") {
  auto KJ = koszul_betti(buchberger(J()), 4, 3, Rat(0));
  CHECK(KJ == free_resolution(J(), 8, Rat(0)).betti);
  std::vector<Poly<Fp>> jf;
  for (auto& f : J()) jf.push_back(pl::to_fp(f, 31));
  CHECK(koszul_betti(buchberger(jf), 4, 3, Fp(0, 31)) == KJ);
  auto fix = cubic_point();
  CHECK(koszul_betti(buchberger(fix), 4, 3, Rat(0)) == free_resolution(fix, 8, Rat(0)).betti);
}

TEST_CASE("hilbert-burch") {
  auto M = hilbert_burch(Ce());
  CHECK(M.rows == 3);
  CHECK(M.cols == 2);
  for (auto& e : M.e) CHECK((e.is_zero() || e.degree() == 1));
  CHECK(pl::same_span(maximal_minors_3x2(M), Ce()));
  // common linear factor
  CHECK_THROWS_AS(hilbert_burch({P("u0*u1"), P("u0*u2"), P("u0*u3")}), NotHilbertBurch);
  CHECK_THROWS_AS(hilbert_burch({P("u0*u1"), P("u1*u2")}), NotHilbertBurch);
}

TEST_CASE("intersection by elimination") {
  auto I = Ce();
  CHECK(pl::same_span(buchberger(intersect(I, I)).g, buchberger(I).g));
  CHECK(pl::same_span(buchberger(intersect(I, {Poly<Rat>::constant(pl::ring_U(), Rat(1))})).g, buchberger(I).g));
  auto fix = buchberger(cubic_point());
  auto expect = buchberger(std::vector<Poly<Rat>>{P("u3*u0"), P("u3*u1"), P("u3*u2"),
                                                   P("u0^3 + u1^3 + u2^3 - u0*u1*u2")});
  CHECK(pl::same_span(fix.g, expect.g));
}

TEST_CASE("rendering") {
  auto t = table({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}});
  CHECK(t.macaulay() == "0: 1 - -\n1: - 3 2\n");
  CHECK(betti_json(t).find("\"beta\":3") != std::string::npos);
}
