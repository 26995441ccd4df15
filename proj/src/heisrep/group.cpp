#include <sstream>
#include <unordered_set>

#include "heisrep/heisrep.hpp"

namespace hr {

// ---- MonoMat ------------------------------------------------------------

MonoMat MonoMat::identity() { return scalar(0); }

MonoMat MonoMat::scalar(int a) {
  MonoMat g;
  for (int j = 0; j < 7; ++j) {
    g.to[j] = int8_t(j);
    g.ex[j] = int8_t(mod7(a));
    g.sg[j] = 1;
  }
  return g;
}

MonoMat MonoMat::operator*(const MonoMat& b) const {
  MonoMat r;
  for (int j = 0; j < 7; ++j) {
    int t = b.to[j];
    r.to[j] = to[t];
    r.ex[j] = int8_t((b.ex[j] + ex[t]) % 7);
    r.sg[j] = int8_t(b.sg[j] * sg[t]);
  }
  return r;
}

MonoMat MonoMat::inverse() const {
  MonoMat r;
  for (int j = 0; j < 7; ++j) {
    r.to[to[j]] = int8_t(j);
    r.ex[to[j]] = int8_t(mod7(-ex[j]));
    r.sg[to[j]] = sg[j];
  }
  return r;
}

uint64_t MonoMat::key() const {
  uint64_t k = 0;
  for (int j = 0; j < 7; ++j) k = (k << 7) | uint64_t(to[j] << 4 | ex[j] << 1 | (sg[j] < 0));
  return k;
}

Cyc7 MonoMat::trace() const {
  Cyc7 t;
  for (int j = 0; j < 7; ++j)
    if (to[j] == j) t += sg[j] > 0 ? Cyc7::zeta(ex[j]) : -Cyc7::zeta(ex[j]);
  return t;
}

CMat MonoMat::dense() const {
  CMat M(7, 7, Cyc7());
  for (int j = 0; j < 7; ++j) M(to[j], j) = sg[j] > 0 ? Cyc7::zeta(ex[j]) : -Cyc7::zeta(ex[j]);
  return M;
}

namespace {

MonoMat from_rule(int (*target)(int), int (*expo)(int), int sign) {
  MonoMat g;
  for (int j = 0; j < 7; ++j) {
    g.to[j] = int8_t(target(j));
    g.ex[j] = int8_t(mod7(expo(j)));
    g.sg[j] = int8_t(sign);
  }
  return g;
}

}  // namespace

MonoMat m_sigma() {
  return from_rule([](int j) { return mod7(j - 1); }, [](int) { return 0; }, 1);
}
MonoMat m_tau() {
  return from_rule([](int j) { return j; }, [](int j) { return j; }, 1);
}
MonoMat m_iota() {
  return from_rule([](int j) { return mod7(-j); }, [](int) { return 0; }, -1);
}
MonoMat m_mu() {
  return from_rule([](int j) { return mod7(4 * j); }, [](int) { return 0; }, 1);
}
MonoMat m_nu() {
  return from_rule([](int j) { return j; }, [](int j) { return j * j; }, 1);
}

MonoMat power(MonoMat g, int k) {
  MonoMat r = MonoMat::identity();
  if (k < 0) {
    g = g.inverse();
    k = -k;
  }
  for (; k; --k) r = r * g;
  return r;
}

std::optional<MonoMat> as_monomial(const CMat& M) {
  if (M.rows != 7 || M.cols != 7) return std::nullopt;
  MonoMat g;
  for (int j = 0; j < 7; ++j) {
    int found = -1;
    for (int i = 0; i < 7; ++i)
      if (!M(i, j).is_zero()) {
        if (found >= 0) return std::nullopt;
        found = i;
      }
    if (found < 0) return std::nullopt;
    g.to[j] = int8_t(found);
    bool ok = false;
    for (int k = 0; k < 7 && !ok; ++k)
      for (int s : {1, -1})
        if (M(found, j) == (s > 0 ? Cyc7::zeta(k) : -Cyc7::zeta(k))) {
          g.ex[j] = int8_t(k);
          g.sg[j] = int8_t(s);
          ok = true;
          break;
        }
    if (!ok) return std::nullopt;
  }
  return g;
}

CMat delta_matrix() {
  Cyc7 c = ef::gauss_sum();
  c *= Rat(1, 7);
  CMat D(7, 7, Cyc7());
  for (int k = 0; k < 7; ++k)
    for (int j = 0; j < 7; ++j) D(k, j) = c * Cyc7::zeta(k * j);
  return D;
}

// ---- dense helpers -------------------------------------------------------

CMat mat_mul(const CMat& A, const CMat& B) { return pl::matmul(A, B); }

CMat mat_inverse(const CMat& A) {
  size_t n = A.rows;
  CMat aug(n, 2 * n, Cyc7());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = Cyc7(1);
  }
  auto E = pl::rref(aug);
  if (E.rank() < n || E.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  CMat R(n, n, Cyc7());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) R(i, j) = E.R(i, n + j);
  return R;
}

CMat mat_power(const CMat& A, int k) {
  CMat R = pl::identity(A.rows, Cyc7());
  for (int i = 0; i < k; ++i) R = mat_mul(R, A);
  return R;
}

CMat transpose(const CMat& A) {
  CMat T(A.cols, A.rows, Cyc7());
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

CMat twist(const CMat& A, int i) {
  CMat T = A;
  for (auto& x : T.a) x = ef::galois_theta(x, i);
  return T;
}

Cyc7 trace(const CMat& A) {
  Cyc7 t;
  for (size_t i = 0; i < A.rows; ++i) t += A(i, i);
  return t;
}

Cyc7 determinant(CMat A) {
  size_t n = A.rows;
  Cyc7 d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && A(p, c).is_zero()) ++p;
    if (p == n) return Cyc7();
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(A(p, j), A(c, j));
      d = -d;
    }
    d *= A(c, c);
    Cyc7 iv = ef::inv(A(c, c));
    for (size_t i = c + 1; i < n; ++i) {
      if (A(i, c).is_zero()) continue;
      Cyc7 f = A(i, c) * iv;
      for (size_t j = c; j < n; ++j) A(i, j) -= f * A(c, j);
    }
  }
  return d;
}

bool operator==(const CMat& A, const CMat& B) { return A.rows == B.rows && A.cols == B.cols && A.a == B.a; }

// ---- the law -------------------------------------------------------------

std::string Law::describe() const {
  std::string s = tau_first ? "Phi(m,n) = z^(4mn) tau^n sigma^m" : "Phi(m,n) = z^(4mn) sigma^m tau^n";
  s += transposed_b ? ", B(z,z') = z^(3(m'n-mn'))" : ", B(z,z') = z^(3(mn'-m'n))";
  return s;
}

int cocycle(const Law& L, int m, int n, int m2, int n2) {
  return L.transposed_b ? mod7(3 * (m2 * n - m * n2)) : mod7(3 * (m * n2 - m2 * n));
}

HElem mul(const Law& L, const HElem& a, const HElem& b) {
  int s = a.iota ? -1 : 1;
  int m2 = mod7(s * b.m), n2 = mod7(s * b.n);
  HElem r;
  r.phase = mod7(a.phase + b.phase + cocycle(L, a.m, a.n, m2, n2));
  r.m = mod7(a.m + m2);
  r.n = mod7(a.n + n2);
  r.iota = a.iota ^ b.iota;
  return r;
}

MonoMat matrix_of(const Law& L, const HElem& h) {
  MonoMat sm = power(m_sigma(), h.m), tn = power(m_tau(), h.n);
  MonoMat phi = MonoMat::scalar(4 * h.m * h.n + h.phase) * (L.tau_first ? tn * sm : sm * tn);
  return h.iota ? phi * m_iota() : phi;
}

std::string to_string(const HElem& h) {
  std::ostringstream os;
  os << "z^" << h.phase << " Phi(" << h.m << "," << h.n << ")" << (h.iota ? " iota" : "");
  return os.str();
}

size_t generated_order(const std::vector<MonoMat>& gens) {
  std::unordered_set<uint64_t> seen;
  std::vector<MonoMat> todo = {MonoMat::identity()};
  seen.insert(todo[0].key());
  while (!todo.empty()) {
    MonoMat g = todo.back();
    todo.pop_back();
    for (auto& s : gens) {
      MonoMat h = g * s;
      if (seen.insert(h.key()).second) todo.push_back(h);
    }
  }
  return seen.size();
}

namespace {

std::vector<HElem> all_elements(bool with_iota) {
  std::vector<HElem> v;
  for (int b = 0; b <= (with_iota ? 1 : 0); ++b)
    for (int a = 0; a < 7; ++a)
      for (int m = 0; m < 7; ++m)
        for (int n = 0; n < 7; ++n) v.push_back({a, m, n, b});
  return v;
}

// Exhaustive comparison; returns the first failing pair or "".
std::string check_law(const Law& L, const std::vector<HElem>& els, size_t& pairs) {
  std::vector<uint64_t> key(els.size());
  std::vector<MonoMat> mats(els.size());
  for (size_t i = 0; i < els.size(); ++i) {
    mats[i] = matrix_of(L, els[i]);
    key[i] = mats[i].key();
  }
  auto index = [](const HElem& h) { return size_t(((h.iota * 7 + h.phase) * 7 + h.m) * 7 + h.n); };
  pairs = 0;
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = 0; j < els.size(); ++j) {
      ++pairs;
      HElem p = mul(L, els[i], els[j]);
      if ((mats[i] * mats[j]).key() != key[index(p)])
        return to_string(els[i]) + " * " + to_string(els[j]);
    }
  return "";
}

}  // namespace

HeisReport build_heisenberg() {
  HeisReport rep;
  auto H = all_elements(false);
  int holding = 0;
  for (bool tf : {false, true})
    for (bool tb : {false, true}) {
      LawCandidate c;
      c.law = {tf, tb};
      size_t pairs = 0;
      c.first_failure = check_law(c.law, H, pairs);
      c.holds = c.first_failure.empty();
      if (c.holds) {
        rep.law = c.law;
        rep.h_pairs = pairs;
        ++holding;
      }
      rep.candidates.push_back(c);
    }
  if (holding != 1) {
    std::string msg = "no unique reading of the law agrees with the matrices:";
    for (auto& c : rep.candidates) msg += " [" + c.law.describe() + ": " + (c.holds ? "holds" : c.first_failure) + "]";
    throw LawError(msg);
  }
  rep.g_law_holds = check_law(rep.law, all_elements(true), rep.g_pairs).empty();

  MonoMat s = m_sigma(), t = m_tau(), i = m_iota();
  rep.h_order = generated_order({s, t});
  rep.g_order = generated_order({s, t, i});
  MonoMat c = s * t * s.inverse() * t.inverse();
  rep.commutator_central = c * s == s * c && c * t == t * c && c * i == i * c;
  MonoMat p = c;
  rep.commutator_order = 1;
  while (!(p == MonoMat::identity())) {
    p = p * c;
    ++rep.commutator_order;
  }
  rep.sigma_tau_zeta_tau_sigma = s * t == MonoMat::scalar(1) * t * s;
  return rep;
}

const Law& law() {
  static const Law L = build_heisenberg().law;
  return L;
}

}  // namespace hr
