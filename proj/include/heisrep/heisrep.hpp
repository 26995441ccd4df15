// The Heisenberg group H7, G7 = H7 x| Z2, its normalizer generators and the
// character theory of G7 and SL2(F7).
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polylin/linalg.hpp"
#include "polylin/poly.hpp"

namespace hr {

using ef::Cyc7;
using ef::FieldElem;
using ef::Rat;
using CMat = pl::Mat<Cyc7>;

struct LawError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotACharacter : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInvariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int mod7(long v) { return int(((v % 7) + 7) % 7); }

// ---- monomial 7x7 matrices: g e_j = sg[j] z^ex[j] e_to[j] -----------------
struct MonoMat {
  std::array<int8_t, 7> to{}, ex{}, sg{};

  static MonoMat identity();
  static MonoMat scalar(int a);  // z^a
  MonoMat operator*(const MonoMat& b) const;
  MonoMat inverse() const;
  bool operator==(const MonoMat& o) const { return to == o.to && ex == o.ex && sg == o.sg; }
  uint64_t key() const;
  Cyc7 trace() const;
  CMat dense() const;
};

MonoMat m_sigma();  // e_j -> e_{j-1}
MonoMat m_tau();    // e_j -> z^j e_j
MonoMat m_iota();   // e_j -> -e_{-j}
MonoMat m_mu();     // e_j -> e_{4j}
MonoMat m_nu();     // e_j -> z^{j^2} e_j
MonoMat power(MonoMat g, int k);
std::optional<MonoMat> as_monomial(const CMat& M);

// (g/7) sum_k z^{kj} e_k, g the Gauss sum, i.e. i/sqrt7 times the Fourier matrix
CMat delta_matrix();

CMat mat_mul(const CMat& A, const CMat& B);
CMat mat_inverse(const CMat& A);
CMat mat_power(const CMat& A, int k);
CMat transpose(const CMat& A);
CMat twist(const CMat& A, int i);  // theta^i entrywise
Cyc7 trace(const CMat& A);
Cyc7 determinant(CMat A);
bool operator==(const CMat& A, const CMat& B);

// ---- the abstract law ---------------------------------------------------
// Phi(m,n) = z^{4mn} X with X = tau^n sigma^m or sigma^m tau^n; the cocycle
// is z^{3(mn'-m'n)} or its transpose.
struct Law {
  bool tau_first = true;
  bool transposed_b = true;
  std::string describe() const;
};

struct HElem {
  int phase = 0, m = 0, n = 0, iota = 0;
  bool operator==(const HElem& o) const {
    return phase == o.phase && m == o.m && n == o.n && iota == o.iota;
  }
};

int cocycle(const Law& L, int m, int n, int m2, int n2);
HElem mul(const Law& L, const HElem& a, const HElem& b);
MonoMat matrix_of(const Law& L, const HElem& h);
std::string to_string(const HElem& h);

struct LawCandidate {
  Law law;
  bool holds = false;
  std::string first_failure;
};

struct HeisReport {
  std::vector<LawCandidate> candidates;
  Law law;
  size_t h_pairs = 0, g_pairs = 0;
  bool g_law_holds = false;
  size_t h_order = 0, g_order = 0;
  bool commutator_central = false;
  int commutator_order = 0;
  bool sigma_tau_zeta_tau_sigma = false;  // sigma tau = z tau sigma
};

HeisReport build_heisenberg();  // throws LawError if no candidate agrees
const Law& law();               // the reading selected by build_heisenberg
size_t generated_order(const std::vector<MonoMat>& gens);

// ---- normalizer -------------------------------------------------------
struct RelationCheck {
  std::string name;
  bool literal = false;  // x g x^-1 = rhs with the e-basis matrices
  bool dual = false;     // same words for the transposed matrices
};

struct NormalizerReport {
  std::vector<RelationCheck> relations;
  bool delta_squared_is_iota = false;
  std::vector<std::pair<std::string, bool>> det_one;
  std::string reading;  // the model in which all relations hold, or empty
  bool ok() const;
};

NormalizerReport verify_normalizer_relations();

// Generators of the complement as e-basis matrices.
CMat n_mu();
CMat n_nu();
CMat n_delta();

// Action on H7/center: column k holds the coordinates of x^-1 Phi(e_k) x.
// This is the map behind the printed images of mu, nu, delta.
struct M2 {
  int a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]] mod 7
  M2 operator*(const M2& o) const;
  bool operator==(const M2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  int key() const { return ((a * 7 + b) * 7 + c) * 7 + d; }
  M2 neg() const { return {mod7(-a), mod7(-b), mod7(-c), mod7(-d)}; }
};
M2 bar(const CMat& x);

// ---- classes and characters --------------------------------------------
using Character = std::vector<FieldElem>;

struct ClassInfo {
  std::string label;
  long size = 0;
};

struct ClassData {
  std::string group;
  long order = 0;
  std::vector<ClassInfo> classes;
  std::vector<std::vector<int>> power;  // power[c][k]: class of rep^k
  size_t size() const { return classes.size(); }
};

struct CharTable {
  const ClassData* cd = nullptr;
  std::vector<std::string> names;
  std::vector<Character> rows;
  int index(const std::string& name) const;  // -1 if absent
  const Character& operator[](const std::string& name) const;
};

inline constexpr int kMaxPower = 16;

struct G7Data {
  ClassData cd;
  std::vector<MonoMat> reps;         // one matrix per class
  std::vector<HElem> rep_elems;
  std::vector<std::pair<int, int>> mn;      // label of C(m,n) classes, else (0,0)
  std::vector<int> phase;                   // label of central and C_iota classes
  std::vector<int> class_of;                // indexed like elements
  std::vector<MonoMat> elements;
};

struct SL2Data {
  ClassData cd;
  std::vector<M2> elements;
  std::vector<int> class_of;
  std::vector<int> rep;  // element index of each class representative
  int class_of_matrix(const M2& g) const;
};

const G7Data& g7();
const SL2Data& sl2();
const CharTable& g7_table();   // matrix convention: V_i takes -theta^i(a) on C_iota(a)
const CharTable& sl2_table();  // as printed
CharTable g7_printed_table();  // the printed sign on the C_iota classes

struct OrthogonalityReport {
  bool rows = false, columns = false;
  Rat sum_dim_squares;
};
OrthogonalityReport orthogonality(const CharTable& T);

// Exact inner product (1/|G|) sum |c| a(c) conj(b(c)).
FieldElem inner(const ClassData& cd, const Character& a, const Character& b);
Character product(const Character& a, const Character& b);
Character sum(const Character& a, const Character& b);
Character scaled(const Character& a, long k);
Character galois(const Character& a, int i);
Character sym_power_char(const ClassData& cd, const Character& chi, int k);
Character ext_power_char(const ClassData& cd, const Character& chi, int k);

// Character of a rep of G7 given by images of (sigma, tau, iota); relations
// are checked and constancy on classes is verified on every element.
Character char_of_rep(const std::vector<CMat>& gens);
std::vector<CMat> schroedinger_images(int twist_i = 0);

struct Decomposition {
  const CharTable* table = nullptr;
  std::vector<Rat> mult;  // aligned with table->rows
  bool genuine() const;   // integral and non-negative
  std::string str() const;
  bool operator==(const Decomposition& o) const { return mult == o.mult; }
};

Decomposition decompose(const CharTable& T, const Character& chi);          // throws NotACharacter
Decomposition decompose_virtual(const CharTable& T, const Character& chi);  // integrality only
// "3V2 + 4V2#", "8I + 28S + 35Z", "I + M2 + L", "0"
Decomposition parse_decomposition(const CharTable& T, const std::string& s);
Character character_of(const Decomposition& d);

// ---- subspaces --------------------------------------------------------
// Images of x_j under the contragredient action of g, i.e. x_j o g^-1.
std::vector<pl::Poly<Cyc7>> x_action(const CMat& g, const pl::Ring* X);
// Trace of each substitution on span(basis); throws NotInvariant naming the element.
std::vector<Cyc7> subspace_character(const std::vector<pl::Poly<Cyc7>>& basis,
                                     const std::vector<std::vector<pl::Poly<Cyc7>>>& elements,
                                     const std::vector<std::string>& names);
// Class-function of G7 on a span of forms in x0..x6.
Character g7_subspace_character(const std::vector<pl::Poly<Cyc7>>& basis);

// Matrix of g on span(columns of B): g B = B R. Throws NotInvariant.
CMat restrict_to(const CMat& g, const CMat& B);
CMat v_plus_basis();
CMat v_minus_basis();

// ---- formula checks ---------------------------------------------------
struct FormulaCheck {
  std::string id;
  std::string expected;
  std::string computed;
  bool ok = false;
  std::string note;
};

Decomposition omega3_sections(int k);   // virtual; genuine() false past the valid range
Decomposition h0_oa_decomposition(int k);  // derived for 7 !| k, printed row for 7 | k
bool h0_oa_consistent(int k, const Decomposition& d);  // dimension and iota-trace

std::vector<FormulaCheck> check_useful_formulae();  // tensor, exterior, symmetric rows
std::vector<FormulaCheck> check_omega3_rows();
std::vector<FormulaCheck> check_oa_rows();
std::vector<FormulaCheck> check_sl2_products();
std::vector<FormulaCheck> check_normalizer_rows();   // the N-module rows, three levels
std::vector<FormulaCheck> check_concrete_decompositions();  // restriction matrices and W, W', U' powers

// Restrictions of V, V+ and V- to the complement, per SL2 class.
struct ComplementReport {
  size_t order = 0;
  bool lift_consistent = false;
  Character v, v_plus, v_minus;
};
const ComplementReport& complement();

}  // namespace hr
