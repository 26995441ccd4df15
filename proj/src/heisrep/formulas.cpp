#include <functional>
#include <sstream>

#include "heisrep/heisrep.hpp"

namespace hr {

namespace {

const Character& V(int i, bool sharp = false) {
  return g7_table()["V" + std::to_string(((i % 6) + 6) % 6) + (sharp ? "#" : "")];
}

// "3V{2} + 4V{2}#" -> indices shifted by i modulo 6
std::string inst(const std::string& tmpl, int i) {
  std::string out;
  for (size_t k = 0; k < tmpl.size(); ++k) {
    if (tmpl[k] == '{') {
      size_t e = tmpl.find('}', k);
      int off = std::stoi(tmpl.substr(k + 1, e - k - 1));
      out += std::to_string(((i + off) % 6 + 6) % 6);
      k = e;
    } else {
      out += tmpl[k];
    }
  }
  return out;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int class_index(const ClassData& cd, const std::string& label) {
  for (size_t c = 0; c < cd.size(); ++c)
    if (cd.classes[c].label == label) return int(c);
  throw std::invalid_argument("no class " + label);
}

std::string fe(const FieldElem& x) { return ef::to_string(x); }

// Where two G7 characters differ: degree, iota, a non-central H element.
std::string diagnose(const Character& printed, const Character& computed) {
  const ClassData& cd = g7().cd;
  int io = class_index(cd, "C_iota(z^0)"), h = class_index(cd, "C(0,1)");
  std::ostringstream os;
  os << "printed: dim " << fe(printed[0]) << ", trace(iota) " << fe(printed[io]) << ", trace on C(0,1) "
     << fe(printed[h]) << "; computed: dim " << fe(computed[0]) << ", trace(iota) " << fe(computed[io])
     << ", trace on C(0,1) " << fe(computed[h]);
  return os.str();
}

FormulaCheck compare_g7(const std::string& id, const std::string& printed, const Character& chi) {
  FormulaCheck fc;
  fc.id = id;
  fc.expected = printed;
  const CharTable& T = g7_table();
  Decomposition want = parse_decomposition(T, printed);
  try {
    Decomposition got = decompose(T, chi);
    fc.computed = got.str();
    fc.ok = got == want;
  } catch (const NotACharacter& e) {
    fc.computed = std::string("not a character: ") + e.what();
  }
  if (!fc.ok) fc.note = diagnose(character_of(want), chi);
  return fc;
}

// One check per formula, quantified over the twist index i = 0..5.
FormulaCheck over_twists(const std::string& id, const std::string& tmpl,
                         const std::function<Character(int)>& lhs) {
  FormulaCheck agg;
  agg.id = id;
  agg.ok = true;
  for (int i = 0; i < 6; ++i) {
    FormulaCheck fc = compare_g7(id, inst(tmpl, i), lhs(i));
    if (i == 0) {
      agg.expected = fc.expected;
      agg.computed = fc.computed;
      agg.note = fc.note;
    }
    if (!fc.ok && agg.ok) {
      agg.ok = false;
      if (i) agg.note = "i=" + std::to_string(i) + ": " + fc.note;
    }
  }
  return agg;
}

}  // namespace

std::vector<FormulaCheck> check_useful_formulae() {
  const ClassData& cd = g7().cd;
  std::vector<FormulaCheck> out;
  const std::vector<std::pair<int, std::string>> tensors = {
      {0, "3V{2} + 4V{2}#"}, {1, "3V{4} + 4V{4}#"}, {2, "3V{1} + 4V{1}#"}, {3, "I + Z"}};
  for (auto& [d, rhs] : tensors)
    out.push_back(over_twists("V_i (x) V_i+" + std::to_string(d), rhs,
                              [d = d](int i) { return product(V(i), V(i + d)); }));
  const std::vector<std::pair<int, std::string>> exts = {{2, "3V{2}"},         {3, "V{1} + 4V{1}#"}, {4, "V{4} + 4V{4}#"},
                                                         {5, "3V{5}"},         {6, "V{3}"},          {7, "I"}};
  for (auto& [k, rhs] : exts)
    out.push_back(over_twists("Lambda^" + std::to_string(k) + " V_i", rhs,
                              [&cd, k = k](int i) { return ext_power_char(cd, V(i), k); }));

  long c18 = binom(18, 6) / 2, c19 = binom(19, 6) / 2;
  auto rowpair = [](long a, long b, int off) {
    return std::to_string(a) + "V{" + std::to_string(off) + "} + " + std::to_string(b) + "V{" +
           std::to_string(off) + "}#";
  };
  const std::vector<std::pair<int, std::string>> syms = {
      {2, "4V{2}#"},
      {3, "8V{1} + 4V{1}#"},
      {4, "10V{4} + 20V{4}#"},
      {5, "38V{5} + 28V{5}#"},
      {6, "56V{3} + 76V{3}#"},
      {7, "8I + 28S + 35Z"},
      {8, "197V{0} + 232V{0}#"},
      {9, "375V{2} + 340V{2}#"},
      {10, "544V{1} + 600V{1}#"},
      {11, "908V{4} + 852V{4}#"},
      // (1/7)(C(18,6)/2 -+ 42), read literally
      {12, rowpair((c18 - 42) / 7, (c18 + 42) / 7, 5)},
      {13, rowpair((c19 - 42) / 7, (c19 + 42) / 7, 3)},
      // 12*384 I + 12*374 S + 48*618 Z: the factor 48 = dim Z
      {14, std::to_string(12 * 384) + "I + " + std::to_string(12 * 374) + "S + 618Z"},
  };
  for (auto& [k, rhs] : syms) {
    FormulaCheck fc = over_twists("S^" + std::to_string(k) + " V_i", rhs,
                                  [&cd, k = k](int i) { return sym_power_char(cd, V(i), k); });
    if (!fc.ok && (k == 12 || k == 13)) {
      // the other bracketing: C/2/7 -+ 42
      long c = (k == 12 ? c18 : c19) / 7;
      int off = k == 12 ? 5 : 3;
      auto alt = parse_decomposition(g7_table(), inst(rowpair(c - 42, c + 42, off), 0));
      auto swapped = parse_decomposition(g7_table(), inst(rowpair(c + 42, c - 42, off), 0));
      auto got = decompose(g7_table(), sym_power_char(cd, V(0), k));
      fc.note += got == alt       ? "; matches (1/7)(C/2) -+ 42"
                 : got == swapped ? "; matches (1/7)(C/2) +- 42, signs exchanged"
                                  : "; no bracketing of the binomial row matches";
    }
    out.push_back(fc);
  }
  return out;
}

Decomposition omega3_sections(int k) {
  const ClassData& cd = g7().cd;
  const Character& v3 = V(3);
  Character chi(cd.size(), FieldElem(0));
  for (int j = 0; j <= 3; ++j) {
    Character t = product(ext_power_char(cd, v3, 3 - j), sym_power_char(cd, v3, k - 3 + j));
    chi = sum(chi, j % 2 ? scaled(t, -1) : t);
  }
  return decompose_virtual(g7_table(), chi);
}

std::vector<FormulaCheck> check_omega3_rows() {
  const std::vector<std::string> printed = {"0",           "V1 + 4V1#",        "16V2 + 16V2#",  "56V0 + 64V0#",
                                            "24I + 24S + 49Z", "405V3 + 420V3#", "880V5 + 880V5#", "1704V4 + 1728V4#"};
  std::vector<FormulaCheck> out;
  for (int k = 3; k <= 10; ++k) {
    FormulaCheck fc;
    fc.id = "H0(Omega^3(" + std::to_string(k) + "))";
    fc.expected = printed[k - 3];
    Decomposition d = omega3_sections(k);
    fc.computed = d.str();
    fc.ok = d.genuine() && d == parse_decomposition(g7_table(), printed[k - 3]);
    if (!d.genuine()) fc.note = "negative multiplicity: outside the range where the Koszul sum is exact";
    if (k == 4) {
      bool ext = decompose(g7_table(), ext_power_char(g7().cd, V(0), 3)) == d;
      fc.ok = fc.ok && ext;
      fc.note += ext ? "equals Lambda^3 V" : "differs from Lambda^3 V";
    }
    out.push_back(fc);
  }
  return out;
}

namespace {

const std::vector<std::string>& oa_printed() {
  static const std::vector<std::string> rows = {
      "V3",          "4V5#",          "5V4 + 4V4#",  "6V1 + 10V1#", "13V2 + 12V2#", "16V0 + 20V0#", "3I + 4S + 7Z",
      "30V3 + 34V3#", "41V5 + 40V5#", "48V4 + 52V4#", "61V1 + 60V1#", "70V2 + 74V2#", "85V0 + 84V0#", "16I + 12S + 28Z"};
  return rows;
}

}  // namespace

Decomposition h0_oa_decomposition(int k) {
  if (k < 1) throw std::invalid_argument("k >= 1");
  if (k % 7 == 0) {
    if (k > 14) throw std::invalid_argument("no printed row");
    return parse_decomposition(g7_table(), oa_printed()[k - 1]);
  }
  // centre acts by z^-k; V_i has central character z^(3^i)
  int i = 0;
  for (int p = 1; p != mod7(-k); p = p * 3 % 7) ++i;
  long tr = k % 2 ? -1 : 4;  // trace of iota; V_i contributes -1, V_i# +1
  long a = (long(k) * k - tr) / 2, b = (long(k) * k + tr) / 2;
  std::string s = std::to_string(a) + "V" + std::to_string(i) + " + " + std::to_string(b) + "V" + std::to_string(i) + "#";
  return parse_decomposition(g7_table(), s);
}

bool h0_oa_consistent(int k, const Decomposition& d) {
  Character chi = character_of(d);
  const ClassData& cd = g7().cd;
  FieldElem tr = chi[class_index(cd, "C_iota(z^0)")];
  return chi[0] == FieldElem(7L * k * k) && tr == FieldElem(k % 2 ? -1 : 4);
}

std::vector<FormulaCheck> check_oa_rows() {
  std::vector<FormulaCheck> out;
  for (int k = 1; k <= 14; ++k) {
    FormulaCheck fc;
    fc.id = "H0(O_A(" + std::to_string(k) + "))";
    fc.expected = oa_printed()[k - 1];
    Decomposition printed = parse_decomposition(g7_table(), fc.expected);
    Decomposition d = h0_oa_decomposition(k);
    fc.computed = d.str();
    if (k % 7) {
      fc.ok = d == printed && h0_oa_consistent(k, d);
    } else {
      fc.ok = h0_oa_consistent(k, printed);
      fc.note = "dimension and iota-trace only";
    }
    out.push_back(fc);
  }
  return out;
}

std::vector<FormulaCheck> check_sl2_products() {
  static const char* rows[][3] = {
      {"M1", "M1", "I + 3M2 + 3L + 2T + W + W'"},
      {"M1", "M2", "3M1 + 2U + 2U' + 2T1 + 2T2"},
      {"M2", "M2", "I + 3M2 + 3L + 2T + W + W'"},
      {"M1", "L", "3M1 + U + U' + 2T1 + 2T2"},
      {"M2", "L", "3M2 + 2L + 2T + W + W'"},
      {"M1", "U", "2M2 + L + T + W"},
      {"M2", "U", "2M1 + U + T1 + T2"},
      {"M1", "U'", "2M2 + L + T + W'"},
      {"M2", "U'", "2M1 + U' + T1 + T2"},
      {"M1", "T1", "2M2 + 2L + 2T + W + W'"},
      {"M2", "T1", "2M1 + U + U' + 2T1 + 2T2"},
      {"M1", "T2", "2M2 + 2L + 2T + W + W'"},
      {"M2", "T2", "2M1 + U + U' + 2T1 + 2T2"},
      {"M1", "T", "2M1 + U + U' + 2T1 + 2T2"},
      {"M2", "T", "2M2 + 2L + 2T + W + W'"},
      {"M1", "W", "M1 + U + T1 + T2"},
      {"M2", "W", "M2 + L + T + W"},
      {"M1", "W'", "M1 + U' + T1 + T2"},
      {"M2", "W'", "M2 + L + T + W'"},
      {"L", "L", "I + 2M2 + 2L + 2T + W + W'"},
      {"L", "U", "M1 + U + U' + T1 + T2"},
      {"L", "U'", "M1 + U + U' + T1 + T2"},
      {"L", "T1", "2M1 + U + U' + T1 + 2T2"},
      {"L", "T2", "2M1 + U + U' + 2T1 + T2"},
      {"L", "T", "2M2 + 2L + T + W + W'"},
      {"L", "W", "M2 + L + T"},
      {"L", "W'", "M2 + L + T"},
      {"U", "U", "L + T + W"},
      {"U", "U'", "I + M2 + L"},
      {"U'", "U'", "L + T + W'"},
      {"U", "T1", "M2 + L + T + W'"},
      {"U'", "T1", "M2 + L + T + W"},
      {"U", "T2", "M2 + L + T + W'"},
      {"U'", "T2", "M2 + L + T + W"},
      {"U", "T", "M1 + U' + T1 + T2"},
      {"U'", "T", "M1 + U + T1 + T2"},
      {"U", "W", "T1 + T2"},
      {"U'", "W", "M1 + U"},
      {"U", "W'", "M1 + U'"},
      {"U'", "W'", "T1 + T2"},
      {"T1", "T1", "I + 2M2 + L + T + W + W'"},
      {"T1", "T2", "2M2 + 2L + T"},
      {"T2", "T2", "I + 2M2 + L + T + W + W'"},
      {"T1", "T", "2M1 + U + U' + T1 + T2"},
      {"T2", "T", "2M1 + U + U' + T1 + T2"},
      {"T1", "W", "M1 + U' + T1"},
      {"T2", "W", "M1 + U' + T2"},
      {"T1", "W'", "M1 + U + T1"},
      {"T2", "W'", "M1 + U + T2"},
      {"T", "T", "I + 2M2 + L + 2T"},
      {"W", "W", "T + W'"},
      {"T", "W", "M2 + L + W'"},
      {"W", "W'", "I + M2"},
      {"T", "W'", "M2 + L + W"},
      {"W'", "W'", "T + W"},
  };
  const CharTable& T = sl2_table();
  std::vector<FormulaCheck> out;
  for (auto& r : rows) {
    FormulaCheck fc;
    fc.id = std::string(r[0]) + " (x) " + r[1];
    fc.expected = r[2];
    Decomposition got = decompose(T, product(T[r[0]], T[r[1]]));
    fc.computed = got.str();
    fc.ok = got == parse_decomposition(T, r[2]);
    out.push_back(fc);
  }
  return out;
}

// ---- N-module rows ---------------------------------------------------------

namespace {

constexpr int kTop = 7;  // highest power needed by the rows below

// Complete and elementary symmetric functions from power sums p[1..kTop].
void newton(const std::vector<Cyc7>& p, std::vector<Cyc7>& h, std::vector<Cyc7>& e) {
  h.assign(kTop + 1, Cyc7());
  e.assign(kTop + 1, Cyc7());
  h[0] = e[0] = Cyc7(1);
  for (int d = 1; d <= kTop; ++d) {
    for (int j = 1; j <= d; ++j) {
      h[d] += p[j] * h[d - j];
      if (j % 2) e[d] += p[j] * e[d - j];
      else e[d] -= p[j] * e[d - j];
    }
    h[d] *= Rat(1, d);
    e[d] *= Rat(1, d);
  }
}

struct Sample {
  std::vector<Cyc7> p;  // p[m] = trace of M^m
  int cls = 0;          // SL2 class of the image
};

const std::vector<Sample>& samples() {
  static const std::vector<Sample> S = [] {
    std::vector<HElem> hs;
    for (int a = 0; a < 7; ++a) hs.push_back({a, 0, 0, 0});
    for (int m = 0; m < 7; ++m)
      for (int n = 0; n < 7; ++n)
        if (m || n) hs.push_back({0, m, n, 0});
    // one normalizer element over each SL2 class, found by walking words in mu, nu, delta
    const SL2Data& G = sl2();
    std::vector<CMat> gens = {n_mu(), n_nu(), n_delta()};
    std::vector<CMat> ss(G.cd.size());
    std::vector<char> have(G.cd.size(), 0), seen(7 * 7 * 7 * 7, 0);
    std::vector<CMat> walk = {pl::identity(7, Cyc7())};
    size_t found = 0;
    for (size_t i = 0; i < walk.size() && found < ss.size(); ++i) {
      M2 b = bar(walk[i]);
      if (seen[b.key()]) continue;
      seen[b.key()] = 1;
      int c = G.class_of_matrix(b);
      if (!have[c]) {
        have[c] = 1;
        ss[c] = walk[i];
        ++found;
      }
      for (auto& g : gens) walk.push_back(mat_mul(walk[i], g));
    }
    if (found < ss.size()) throw std::logic_error("normalizer words miss an SL2 class");
    std::vector<Sample> out;
    for (size_t cls = 0; cls < ss.size(); ++cls) {
      const CMat& s = ss[cls];
      for (auto& h : hs) {
        CMat M = mat_mul(matrix_of(law(), h).dense(), s);
        Sample smp;
        smp.cls = int(cls);
        smp.p.assign(kTop + 1, Cyc7());
        CMat P = M;
        for (int m = 1; m <= kTop; ++m) {
          smp.p[m] = trace(P);
          if (m < kTop) P = mat_mul(P, M);
        }
        out.push_back(std::move(smp));
      }
    }
    return out;
  }();
  return S;
}

enum class Lhs { Tensor, Ext, Sym, Omega };
enum class Rhs { XV, IZ, Omega7 };

struct NRow {
  std::string id;
  Lhs lhs;
  int a, b;  // tensor: indices; ext/sym: (k, index); omega: (k, -)
  Rhs rhs;
  std::string X;
  int r;  // V index, -1 for none
};

std::vector<Cyc7> twisted(const std::vector<Cyc7>& p, int i) {
  std::vector<Cyc7> q(p.size());
  for (size_t m = 0; m < p.size(); ++m) q[m] = ef::galois_theta(p[m], i);
  return q;
}

int m6(int i) { return ((i % 6) + 6) % 6; }

struct Side {
  long dim = 0;
  Character g7;
};

Cyc7 lhs_at(const NRow& r, const Sample& s) {
  std::vector<Cyc7> h, e;
  switch (r.lhs) {
    case Lhs::Tensor:
      return ef::galois_theta(s.p[1], r.a) * ef::galois_theta(s.p[1], r.b);
    case Lhs::Ext:
      newton(twisted(s.p, r.b), h, e);
      return e[r.a];
    case Lhs::Sym:
      newton(twisted(s.p, r.b), h, e);
      return h[r.a];
    case Lhs::Omega: {
      newton(twisted(s.p, 3), h, e);
      Cyc7 v;
      for (int j = 0; j <= 3; ++j) {
        if (r.a - 3 + j < 0) continue;
        Cyc7 t = e[3 - j] * h[r.a - 3 + j];
        if (j % 2) v -= t;
        else v += t;
      }
      return v;
    }
  }
  return Cyc7();
}

Character lhs_g7(const NRow& r) {
  const ClassData& cd = g7().cd;
  switch (r.lhs) {
    case Lhs::Tensor:
      return product(V(r.a), V(r.b));
    case Lhs::Ext:
      return ext_power_char(cd, V(r.b), r.a);
    case Lhs::Sym:
      return sym_power_char(cd, V(r.b), r.a);
    case Lhs::Omega:
      return character_of(omega3_sections(r.a));
  }
  return {};
}

Character inflate(const std::string& X) {
  const G7Data& G = g7();
  Character x = character_of(parse_decomposition(sl2_table(), X));
  Character out(G.cd.size());
  for (size_t c = 0; c < out.size(); ++c) out[c] = G.rep_elems[c].iota ? x[1] : x[0];
  return out;
}

Character rhs_g7(const NRow& r) {
  Character iz = product(V(0), V(3));
  switch (r.rhs) {
    case Rhs::XV:
      return r.r < 0 ? inflate(r.X) : product(inflate(r.X), V(r.r));
    case Rhs::IZ:
      return iz;
    case Rhs::Omega7: {
      Character z = sum(iz, scaled(g7_table()["I"], -1));
      return sum(product(inflate(r.X), iz), z);
    }
  }
  return {};
}

Cyc7 rhs_at(const NRow& r, const Sample& s, const Character& x) {
  const FieldElem& xv = x[s.cls];
  if (!xv.in_cyc7()) throw std::logic_error("irrational SL2 value on a sample");
  Cyc7 X = xv.a();
  Cyc7 iz = s.p[1] * ef::galois_theta(s.p[1], 3);
  switch (r.rhs) {
    case Rhs::XV:
      return r.r < 0 ? X : X * ef::galois_theta(s.p[1], r.r);
    case Rhs::IZ:
      return iz;
    case Rhs::Omega7:
      return X * iz + iz - Cyc7(1);
  }
  return Cyc7();
}

std::vector<NRow> n_rows() {
  std::vector<NRow> rows;
  auto V_ = [](int i) { return "V" + std::to_string(m6(i)); };
  for (int j = 0; j < 3; ++j) {
    int e = 2 * j, o = 2 * j + 1;
    auto T = [&](int p, int q, const std::string& X, int r) {
      rows.push_back({V_(p) + " (x) " + V_(q), Lhs::Tensor, m6(p), m6(q), Rhs::XV, X, m6(r)});
    };
    T(e, e, "U' + W'", e + 2);
    T(e, o, "U + W", e + 4);
    T(o, o, "U + W", o + 2);
    T(o, e + 2, "U' + W'", o + 4);
    T(e, e + 2, "U + W", e + 1);
    T(o, o + 2, "U' + W'", o + 1);
    auto E = [&](int k, int p, const std::string& X, int r) {
      rows.push_back({"Lambda^" + std::to_string(k) + " " + V_(p), Lhs::Ext, k, m6(p), Rhs::XV, X, m6(r)});
    };
    E(2, e, "W'", e + 2);
    E(3, e, "I + U'", e + 1);
    E(4, e, "I + U", e + 4);
    E(5, e, "W", e + 5);
    E(2, o, "W", o + 2);
    E(3, o, "I + U", o + 1);
    E(4, o, "I + U'", o + 4);
    E(5, o, "W'", o + 5);
    auto S = [&](int k, int p, const std::string& X, int r) {
      rows.push_back({"S^" + std::to_string(k) + " " + V_(p), Lhs::Sym, k, m6(p), Rhs::XV, X, m6(r)});
    };
    S(2, e, "U'", e + 2);
    S(3, e, "I + L + U", e + 1);
    S(4, e, "L + W + U + U' + T1 + T2", e + 4);
    S(5, e, "I + M1 + M2 + 2L + U + U' + T1 + T2 + 2T + W'", e + 5);
  }
  for (int j = 0; j < 6; ++j) {
    rows.push_back({V_(j) + " (x) " + V_(j + 3), Lhs::Tensor, j, m6(j + 3), Rhs::IZ, "", -1});
    rows.push_back({"Lambda^6 " + V_(j), Lhs::Ext, 6, j, Rhs::XV, "I", m6(j + 3)});
    rows.push_back({"Lambda^7 " + V_(j), Lhs::Ext, 7, j, Rhs::XV, "I", -1});
  }
  auto O = [&](int k, const std::string& X, int r, Rhs kind = Rhs::XV) {
    rows.push_back({"H0(Omega^3(" + std::to_string(k) + "))", Lhs::Omega, k, 0, kind, X, r});
  };
  O(3, "0", -1);
  O(4, "I + U'", 1);
  O(5, "L + U' + W' + T1 + T2 + T", 2);
  O(6, "M1 + M2 + 3L + 2U + 2W + W' + 4T1 + 4T2 + 3T", 0);
  O(7, "I + 2L + U + 2U' + W' + T1 + T2 + T", -1, Rhs::Omega7);
  // the cubic decomposition behind the surface equations
  rows.push_back({"S^3 V3", Lhs::Sym, 3, 3, Rhs::XV, "I + U' + L", 4});
  return rows;
}

std::string x_label(const NRow& r) {
  switch (r.rhs) {
    case Rhs::IZ:
      return "I + Z";
    case Rhs::Omega7:
      return "(" + r.X + ")(I + Z) + Z";
    case Rhs::XV:
      return r.r < 0 ? r.X : "(" + r.X + ") V" + std::to_string(r.r);
  }
  return "";
}

// Solve LHS = X(class) theta^r(tr) for X, one sample per SL2 class.
std::string implied_space(const NRow& r) {
  Character X(sl2().cd.size(), FieldElem(0));
  std::vector<char> have(X.size(), 0);
  for (auto& s : samples()) {
    Cyc7 tr = ef::galois_theta(s.p[1], r.r);
    if (have[s.cls] || tr.is_zero()) continue;
    X[s.cls] = FieldElem(lhs_at(r, s) * ef::inv(tr));
    have[s.cls] = 1;
  }
  for (char h : have)
    if (!h) return "undetermined";
  try {
    return decompose(sl2_table(), X).str();
  } catch (const NotACharacter&) {
    return "not a character";
  }
}

}  // namespace

std::vector<FormulaCheck> check_normalizer_rows() {
  std::vector<FormulaCheck> out;
  const CharTable& T = g7_table();
  for (auto& r : n_rows()) {
    FormulaCheck fc;
    fc.id = r.id;
    fc.expected = x_label(r);
    Character L = lhs_g7(r), R = rhs_g7(r);
    bool dims = L[0] == R[0];
    bool g7ok = dims && decompose_virtual(T, L) == decompose_virtual(T, R);
    Character x = r.rhs == Rhs::IZ ? Character() : character_of(parse_decomposition(sl2_table(), r.X.empty() ? "0" : r.X));
    size_t bad = 0, total = 0;
    std::string first;
    for (auto& s : samples()) {
      ++total;
      if (!(lhs_at(r, s) == rhs_at(r, s, r.rhs == Rhs::IZ ? Character(11, FieldElem(0)) : x))) {
        if (!bad) first = "class " + sl2().cd.classes[s.cls].label;
        ++bad;
      }
    }
    fc.ok = dims && g7ok && bad == 0;
    std::ostringstream os;
    os << "dim " << (dims ? "ok" : "differs") << ", G7 " << (g7ok ? "ok" : "differs") << ", traces "
       << (total - bad) << "/" << total;
    if (bad) os << " (first failure over " << first << ")";
    fc.computed = os.str();
    if (bad && r.rhs == Rhs::XV && r.r >= 0) fc.note = "implied multiplicity space: " + implied_space(r);
    out.push_back(fc);
  }
  return out;
}

// ---- restriction matrices and small SL2 modules -----------------------------

std::vector<FormulaCheck> check_concrete_decompositions() {
  std::vector<FormulaCheck> out;
  auto add = [&](const std::string& id, const std::string& expected, const std::string& computed, bool ok,
                 const std::string& note = "") { out.push_back({id, expected, computed, ok, note}); };

  Cyc7 c = ef::gauss_sum();
  c *= Rat(1, 7);  // i / sqrt 7
  auto z = [](int k) { return Cyc7::zeta(k); };
  auto mat = [](std::vector<std::vector<Cyc7>> rows, const Cyc7& s) {
    CMat M(rows.size(), rows.size(), Cyc7());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rows.size(); ++j) M(i, j) = s * rows[i][j];
    return M;
  };
  Cyc7 l1 = z(1) - z(6), l2 = z(4) - z(3), l3 = z(2) - z(5);
  Cyc7 h1 = z(1) + z(6), h2 = z(4) + z(3), h3 = z(2) + z(5);
  Cyc7 o(1), n(0), t(2);
  std::vector<std::tuple<std::string, CMat, CMat, CMat>> printed = {
      {"mu+", n_mu(), v_plus_basis(), mat({{n, n, o}, {o, n, n}, {n, o, n}}, o)},
      {"nu+", n_nu(), v_plus_basis(), mat({{z(1), n, n}, {n, z(2), n}, {n, n, z(4)}}, o)},
      {"delta+", n_delta(), v_plus_basis(), mat({{l1, l2, l3}, {l2, l3, l1}, {l3, l1, l2}}, c)},
      {"mu-", n_mu(), v_minus_basis(), mat({{o, n, n, n}, {n, n, n, o}, {n, o, n, n}, {n, n, o, n}}, o)},
      {"nu-", n_nu(), v_minus_basis(), mat({{o, n, n, n}, {n, z(1), n, n}, {n, n, z(2), n}, {n, n, n, z(4)}}, o)},
      {"delta-", n_delta(), v_minus_basis(),
       mat({{o, o, o, o}, {t, h1, h2, h3}, {t, h2, h3, h1}, {t, h3, h1, h2}}, c)},
  };
  for (auto& [name, g, B, want] : printed) {
    bool ok = false;
    std::string comp = "matches";
    try {
      ok = restrict_to(g, B) == want;
      if (!ok) comp = "differs";
    } catch (const NotInvariant&) {
      comp = "subspace not invariant";
    }
    add(name, "printed matrix", comp, ok);
  }

  const ComplementReport& K = complement();
  const CharTable& T = sl2_table();
  add("complement order", "336", std::to_string(K.order), K.order == 336);
  add("complement lift", "homomorphic, traces constant on classes", K.lift_consistent ? "yes" : "no", K.lift_consistent);
  auto dec = [&](const Character& ch) { return decompose(T, ch); };
  auto check = [&](const std::string& id, const Character& ch, const std::string& want) {
    Decomposition d = dec(ch);
    add(id, want, d.str(), d == parse_decomposition(T, want));
  };
  check("V as SL2-module", K.v, "W' + U'");
  check("V+", K.v_plus, "W'");
  check("V-", K.v_minus, "U'");
  const ClassData& cd = sl2().cd;
  check("S^2 W", sym_power_char(cd, T["W"], 2), "T");
  check("S^3 W", sym_power_char(cd, T["W"], 3), "L + W'");
  check("S^4 W", sym_power_char(cd, T["W"], 4), "I + M2 + T");
  check("S^2 W'", sym_power_char(cd, T["W'"], 2), "T");
  check("S^3 W'", sym_power_char(cd, T["W'"], 3), "L + W");
  check("S^4 W'", sym_power_char(cd, T["W'"], 4), "I + M2 + T");
  check("S^2 U'", sym_power_char(cd, T["U'"], 2), "L + W'");
  return out;
}

}  // namespace hr
