#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heisrep/heisrep.hpp"

using namespace hr;

namespace {

void require_all(const std::vector<FormulaCheck>& v, const std::vector<std::string>& known_bad = {}) {
  for (auto& c : v) {
    bool expect_bad = std::find(known_bad.begin(), known_bad.end(), c.id) != known_bad.end();
    INFO(c.id << ": expected " << c.expected << ", computed " << c.computed << " " << c.note);
    CHECK(c.ok != expect_bad);
  }
}

}  // namespace

TEST_CASE("exactly one reading of the law matches the matrices") {
  HeisReport r = build_heisenberg();
  int holding = 0;
  for (auto& c : r.candidates) holding += c.holds;
  CHECK(holding == 1);
  CHECK(r.law.tau_first);
  CHECK(r.law.transposed_b);
  CHECK(r.h_pairs == 343u * 343u);
  CHECK(r.g_law_holds);
  CHECK(r.h_order == 343);
  CHECK(r.g_order == 686);
  CHECK(r.commutator_central);
  CHECK(r.commutator_order == 7);
  CHECK(r.sigma_tau_zeta_tau_sigma);
}

TEST_CASE("monomial matrices") {
  MonoMat s = m_sigma(), t = m_tau();
  CHECK(power(s, 7) == MonoMat::identity());
  CHECK(power(s, -1) == s.inverse());
  CHECK(power(m_mu(), 3) == MonoMat::identity());
  CHECK((s * s.inverse()) == MonoMat::identity());
  CHECK(as_monomial(t.dense()).value() == t);
  CHECK(!as_monomial(delta_matrix()));
  CHECK(mat_mul(delta_matrix(), delta_matrix()) == m_iota().dense());
}

TEST_CASE("normalizer relations hold in one consistent model") {
  NormalizerReport r = verify_normalizer_relations();
  CHECK(r.relations.size() == 8);
  CHECK(r.ok());
  CHECK(!r.reading.empty());
  for (auto& [name, ok] : r.det_one) {
    INFO(name);
    CHECK(ok);
  }
}

TEST_CASE("images in SL2(F7)") {
  CHECK(bar(n_mu()) == M2{2, 0, 0, 4});
  CHECK(bar(n_nu()) == M2{1, 0, 2, 1});
  CHECK(bar(n_delta()) == M2{0, 6, 1, 0});
  // anti-homomorphism
  M2 a = bar(mat_mul(n_mu(), n_nu()));
  CHECK(a == bar(n_nu()) * bar(n_mu()));
}

TEST_CASE("class data") {
  CHECK(g7().cd.size() == 38);
  CHECK(g7().cd.order == 686);
  CHECK(sl2().cd.size() == 11);
  CHECK(sl2().cd.order == 336);
  long total = 0;
  for (auto& c : g7().cd.classes) total += c.size;
  CHECK(total == 686);
}

TEST_CASE("character tables are orthogonal") {
  for (const CharTable* T : {&g7_table(), &sl2_table()}) {
    OrthogonalityReport r = orthogonality(*T);
    CHECK(r.rows);
    CHECK(r.columns);
    CHECK(r.sum_dim_squares == Rat(T->cd->order));
  }
  CharTable P = g7_printed_table();
  CHECK(orthogonality(P).rows);
}

TEST_CASE("Schroedinger representations have the tabulated characters") {
  for (int i = 0; i < 6; ++i) {
    INFO("i=" << i);
    Character chi = char_of_rep(schroedinger_images(i));
    Decomposition d = decompose(g7_table(), chi);
    CHECK(d.str() == "V" + std::to_string(i));
  }
}

TEST_CASE("decompositions parse and print") {
  const CharTable& T = g7_table();
  Decomposition d = parse_decomposition(T, "3V2 + 4V2#");
  CHECK(d.genuine());
  CHECK(character_of(d)[0] == FieldElem(49));
  Decomposition z = parse_decomposition(T, "I + Z");
  CHECK(character_of(z)[0] == FieldElem(49));
  CHECK(parse_decomposition(T, "0").str() == "0");
  CHECK_THROWS(parse_decomposition(T, "3Q"));
  Character half = scaled(T["I"], 1);
  for (auto& v : half) v = v * FieldElem(Rat(1, 2));
  CHECK_THROWS_AS(decompose(T, half), NotACharacter);
}

TEST_CASE("tensor, exterior and symmetric rows") {
  // S^11..S^14 as printed disagree with the computation
  require_all(check_useful_formulae(), {"S^11 V_i", "S^12 V_i", "S^13 V_i", "S^14 V_i"});
}

TEST_CASE("Omega^3 and O_A rows") {
  require_all(check_omega3_rows());
  require_all(check_oa_rows());
  CHECK(h0_oa_decomposition(1).str() == "V3");
  CHECK_THROWS(h0_oa_decomposition(0));
}

TEST_CASE("SL2 tensor products") {
  auto v = check_sl2_products();
  CHECK(v.size() == 55);
  require_all(v);
}

TEST_CASE("N-module rows at three levels") {
  auto rows = check_normalizer_rows();
  // the printed Omega^3(6) multiplicity space passes on dimension and on G7 but not on traces
  require_all(rows, {"H0(Omega^3(6))"});
  for (auto& r : rows)
    if (r.id == "H0(Omega^3(6))")
      CHECK(r.note == "implied multiplicity space: I + 3M1 + 2M2 + 3L + U + 3U' + 2T1 + 2T2 + 2T + 2W'");
}

TEST_CASE("restriction matrices and the complement") {
  require_all(check_concrete_decompositions());
  CHECK(complement().order == 336);
}

TEST_CASE("restrict_to rejects non-invariant spans") {
  CMat B(7, 1, Cyc7());
  B(0, 0) = Cyc7(1);
  CHECK_THROWS_AS(restrict_to(m_sigma().dense(), B), NotInvariant);
}
