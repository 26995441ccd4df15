// Wedge representatives, the Delta criterion, the ideal J, the Klein quartic
// and the explicit parametrization of (1,7)-polarized abelian surfaces.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "groebner/groebner.hpp"
#include "polylin/formmatrix.hpp"

namespace km {

using ef::Rat;
using pl::FormMatrix;
using QPoly = pl::Poly<Rat>;
using QMat = pl::Mat<Rat>;
using Point = std::array<Rat, 4>;  // t0..t3

struct DegenerateParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- wedges -------------------------------------------------------------
// A 3-vector: sorted index triple -> coefficient.
using Wedge = std::map<std::array<int, 3>, int>;
Wedge wedge(int a, int b, int c);  // e_a ^ e_b ^ e_c, sign from sorting
Wedge operator+(Wedge a, const Wedge& b);
Wedge operator-(Wedge a, const Wedge& b);
Wedge shift(const Wedge& w, int k);  // indices + k

struct WedgeRep {
  int label = 0;
  std::array<Wedge, 7> entries;  // entry k for shift k
};
std::vector<WedgeRep> wedge_reps();  // u0..u3
WedgeRep complement_line();          // orbit of e1^e4^e2 + e6^e3^e5
bool sigma_equivariant(const WedgeRep& u);

// Lambda^3 x Lambda^3 -> Lambda^6 = linear forms: e_{i1..i6} -> sgn(i1..i6,k) x_k.
QPoly wedge_pair(const Wedge& a, const Wedge& b);
FormMatrix<Rat> compose_u(int i, int j);  // (a,b) entry: u_i[a] ^ u_j[b]
FormMatrix<Rat> b_matrix(int k);          // printed B_1, B_2, B_3

struct CompositionReport {
  std::array<std::array<std::string, 4>, 4> label;  // "B1", "-B3", "0", "?"
  bool commutative = false;
  bool matches_printed = false;  // exactly the printed six are nonzero, with the printed values
  bool sign_relations = false;   // u0u1 = -u2u2, u0u2 = -u3u3, u0u3 = -u1u1
};
CompositionReport composition_table();

// ---- alpha matrices -------------------------------------------------------
struct AlphaMatrix {
  std::array<std::array<std::array<Rat, 4>, 2>, 3> a{};  // a[i][j][k]: coefficient of u_k
  QPoly entry(int i, int j) const;
  FormMatrix<Rat> forms() const;  // 3x2 over U
  bool is_zero() const;
};

AlphaMatrix alpha_from_forms(const FormMatrix<Rat>& M);  // entries must be linear in U
FormMatrix<Rat> alpha_compose(const AlphaMatrix& al);   // 21x21, blocks (r,s)
std::vector<QPoly> minors(const AlphaMatrix& al);
const std::vector<pl::DiffOp>& deltas();
bool delta_criterion(const AlphaMatrix& al);

struct IndependenceReport {
  std::vector<QPoly> minors;
  size_t rank = 0;
  bool independent = false;
  // blocks l1B1+l2B2+l3B3 | l0B1-l1B3 | l0B2-l2B1 | l0B3-l3B2 at x = (1..7), l from a_11
  std::array<size_t, 4> block_rank{};
  std::array<bool, 4> block_zero{};
};
IndependenceReport minors_and_independence(const AlphaMatrix& al);
std::array<FormMatrix<Rat>, 4> rank_blocks(const std::array<Rat, 4>& l);
std::vector<Rat> probe_point();  // (1,2,...,7)

// Rationals with |numerator|, denominator <= 13.
Rat random_rat(std::mt19937_64& rng, bool nonzero = false);
AlphaMatrix random_alpha(std::mt19937_64& rng);
Point random_point(std::mt19937_64& rng);  // t1 t2 t3 != 0

// 100 random, 50 GL3 x GL2 conjugates of alpha_min(t), 50 of those perturbed.
std::vector<AlphaMatrix> equivalence_samples(std::mt19937_64& rng);
AlphaMatrix conjugate(const AlphaMatrix& al, const QMat& P, const QMat& Q);  // P al Q

struct EquivalenceReport {
  size_t samples = 0, composing_to_zero = 0, annihilated = 0;
  std::vector<size_t> disagreements;  // alpha_compose = 0 xor delta_criterion
  bool ok() const { return disagreements.empty(); }
};
EquivalenceReport check_equivalence(const std::vector<AlphaMatrix>& alphas);

// ---- J and the Grassmannian model --------------------------------------
std::vector<QPoly> f_basis();       // f0..f6 as printed
std::vector<QPoly> l_basis();       // the ordered basis of L paired with the columns of Psi
std::vector<QPoly> wprime_basis();  // v1, v2, v3 in S^2 U'
std::vector<QPoly> j_generators();  // as listed: u1u2, u2u3, u3u1, u1^2+u0u3, u3^2+u0u2, u2^2+u0u1, u0^2

struct JReport {
  size_t kernel_dim = 0;
  bool equals_printed = false;
  bool splits = false;  // S^2 U' = span(f) + span(v), 7 + 3
  gb::BettiTable betti;
  std::vector<long long> hilbert;  // HF of S/J, degrees 0..4
};
JReport j_ideal();

QMat psi(const Point& t);
size_t rank(const QMat& M);
FormMatrix<Rat> eta_klein();  // 7x7 over Y

struct Membership {
  bool member = false;
  std::vector<Rat> values;  // 9 coefficients, pairs (0,1),(0,2),(1,2) times y0,y1,y2
};
Membership grass_membership(const QMat& E);  // throws DegenerateParameter on rank < 3
QMat equational_point();                    // first three basis vectors of L

FormMatrix<Rat> alpha_t_matrix();         // printed 4x3 over T x U
AlphaMatrix alpha_min(const Point& t);     // throws DegenerateParameter at (1:0:0:0)
std::vector<QPoly> psi_quadrics(const Point& t);  // Psi(t) times the L basis

struct CurveReport {
  bool minors_match_psi = false;
  bool delta_ok = false;
  bool in_j = false;
  gb::BettiTable betti;
  bool cm_shape = false;  // (1; 3 2)
  long long degree = 0;
  bool hilbert_burch_round_trip = false;
};
CurveReport curve_checks(const Point& t);

// ---- surfaces -----------------------------------------------------------
std::vector<QPoly> d_vector();  // printed D, fourth entry x2^2x3 + x5^2x4
QPoly sigma_shift(const QPoly& f, int k);  // x_j -> x_{j+k}
QPoly iota_image(const QPoly& f);          // x_j -> x_{-j}

struct SurfaceIdeal {
  Point t;
  std::array<QPoly, 3> g;
  std::vector<QPoly> cubics;  // sigma-orbit, 21 entries
  size_t span_dim = 0;
  bool degenerate = false;  // span_dim != 21
};
SurfaceIdeal surface_ideal(const Point& t);

struct SurfaceReport {
  bool tau_invariant_g = false;
  bool sigma_stable = false, tau_stable = false, iota_stable = false;
  std::vector<long long> hilbert;  // HF(0..4) by linear algebra
  std::string character;           // decomposition of the cubic span under G7
};
SurfaceReport surface_checks(const SurfaceIdeal& S, bool with_character);

struct SurfaceBetti {
  gb::BettiTable table;
  bool certified = false;     // regular sequence certified, full table computed
  bool within_budget = true;
  bool series_consistent = false;  // alternating sum = Hilbert numerator
  std::string note;
};
// Over F_p: generic coordinates, two linear forms certified regular, Koszul homology.
SurfaceBetti surface_betti(const SurfaceIdeal& S, uint32_t p, uint64_t seed, int budget_degree);
gb::BettiTable expected_surface_betti();

// ---- the Klein quartic ----------------------------------------------------
QPoly f_klein();  // y0^3 y1 + y1^3 y2 + y2^3 y0, y_i read as v_{i+1}

struct KleinReport {
  bool mu = false, nu = false, delta = false;
  long invariant_multiplicity = -1;  // of I in S^4 W'
  std::string basis_note;
};
KleinReport klein_invariance();

struct PfaffianReport {
  std::vector<QPoly> pfaffians;
  bool annihilate = false;
  size_t catalecticant_kernel = 0;
  bool span_kernel = false;
  std::vector<long long> quotient_hf;  // of k[y]/I_pfaff, degrees 0..5
  bool gorenstein_symmetric = false;
};
PfaffianReport pfaffian_apolarity();

std::array<QMat, 3> net_matrices();
struct NetReport {
  QPoly det;
  Rat factor;  // det = factor * f_klein
  bool proportional = false;
};
NetReport net_discriminant();

struct EpsilonReport {
  bool identity = false;
  bool constant_part_zero = false;
  bool single_summand = false;
};
EpsilonReport epsilon_identity();

}  // namespace km
