// Matrices of forms, determinants, Pfaffians, differential operators.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "polylin/linalg.hpp"
#include "polylin/poly.hpp"
#include "polylin/span.hpp"

namespace pl {

template <class K>
struct FormMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Poly<K>> e;

  FormMatrix() = default;
  FormMatrix(size_t r, size_t c, const Ring* R) : rows(r), cols(c), e(r * c, Poly<K>(R)) {}
  Poly<K>& operator()(size_t i, size_t j) { return e[i * cols + j]; }
  const Poly<K>& operator()(size_t i, size_t j) const { return e[i * cols + j]; }

  bool is_skew() const {
    if (rows != cols) return false;
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }
  bool is_zero() const {
    for (auto& p : e)
      if (!p.is_zero()) return false;
    return true;
  }
  FormMatrix transpose() const {
    FormMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.e.resize(e.size());
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  FormMatrix scaled(const K& c) const {
    FormMatrix r = *this;
    for (auto& p : r.e) p = p.scaled(c);
    return r;
  }
  friend FormMatrix operator+(FormMatrix a, const FormMatrix& b) {
    for (size_t i = 0; i < a.e.size(); ++i) a.e[i] += b.e[i];
    return a;
  }
  friend FormMatrix operator-(FormMatrix a, const FormMatrix& b) {
    for (size_t i = 0; i < a.e.size(); ++i) a.e[i] -= b.e[i];
    return a;
  }
  friend bool operator==(const FormMatrix& a, const FormMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
  }
  FormMatrix submatrix(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
    FormMatrix s;
    s.rows = rs.size();
    s.cols = cs.size();
    for (size_t i : rs)
      for (size_t j : cs) s.e.push_back((*this)(i, j));
    return s;
  }
};

template <class K>
FormMatrix<K> matmul(const FormMatrix<K>& A, const FormMatrix<K>& B) {
  if (A.cols != B.rows) throw std::invalid_argument("form matmul: shape");
  const Ring* R = A.e.empty() ? nullptr : A.e[0].ring();
  FormMatrix<K> C(A.rows, B.cols, R);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < B.cols; ++j)
      for (size_t k = 0; k < A.cols; ++k)
        if (!A(i, k).is_zero() && !B(k, j).is_zero()) C(i, j) += A(i, k) * B(k, j);
  return C;
}

// Laplace expansion along rows with memoised column subsets.
template <class K>
Poly<K> det(const FormMatrix<K>& M, const K& one) {
  if (M.rows != M.cols) throw std::invalid_argument("det: non-square");
  size_t n = M.rows;
  const Ring* R = M.e.empty() ? nullptr : M.e[0].ring();
  if (n == 0) return Poly<K>::constant(R, one);
  std::map<unsigned, Poly<K>> memo;
  auto rec = [&](auto&& self, size_t row, unsigned used) -> Poly<K> {
    if (row == n) return Poly<K>::constant(R, one);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Poly<K> acc(R);
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      const Poly<K>& a = M(row, c);
      if (!a.is_zero()) {
        Poly<K> t = a * self(self, row + 1, used | (1u << c));
        if (sign > 0) acc += t;
        else acc -= t;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0u);
}

// Pf of the principal submatrix on `idx`; Pf([[0,1],[-1,0]]) = 1.
template <class K>
Poly<K> pfaffian(const FormMatrix<K>& M, std::vector<size_t> idx, const K& one) {
  if (!M.is_skew()) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  const Ring* R = M.e.empty() ? nullptr : M.e[0].ring();
  if (idx.size() % 2) throw std::invalid_argument("pfaffian: odd size");
  if (idx.empty()) return Poly<K>::constant(R, one);
  Poly<K> acc(R);
  size_t i0 = idx[0];
  for (size_t k = 1; k < idx.size(); ++k) {
    const Poly<K>& a = M(i0, idx[k]);
    if (a.is_zero()) continue;
    std::vector<size_t> rest;
    for (size_t q = 1; q < idx.size(); ++q)
      if (q != k) rest.push_back(idx[q]);
    Poly<K> t = a * pfaffian(M, rest, one);
    if (k % 2) acc += t;
    else acc -= t;
  }
  return acc;
}

template <class K>
Poly<K> pfaffian(const FormMatrix<K>& M, const K& one) {
  std::vector<size_t> idx(M.rows);
  for (size_t i = 0; i < M.rows; ++i) idx[i] = i;
  return pfaffian(M, idx, one);
}

// (-1)^k Pf(M with row/column k deleted), for odd-size skew M.
template <class K>
std::vector<Poly<K>> principal_pfaffians(const FormMatrix<K>& M, const K& one) {
  std::vector<Poly<K>> out;
  for (size_t k = 0; k < M.rows; ++k) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < M.rows; ++i)
      if (i != k) idx.push_back(i);
    Poly<K> p = pfaffian(M, idx, one);
    out.push_back(k % 2 ? -p : p);
  }
  return out;
}

// Evaluate all entries at a point of the ring.
template <class K>
Mat<K> evaluate(const FormMatrix<K>& M, const std::vector<K>& pt, const K& zero) {
  Mat<K> out(M.rows, M.cols, zero);
  for (size_t i = 0; i < M.e.size(); ++i) {
    K v = zero;
    for (auto& t : M.e[i].terms()) {
      K term = t.c;
      for (int k = 0; k < int(pt.size()); ++k)
        for (int q = 0; q < t.m[k]; ++q) term *= pt[k];
      v += term;
    }
    out.a[i] = v;
  }
  return out;
}

template <class K>
std::vector<std::vector<std::string>> serialize(const FormMatrix<K>& M) {
  std::vector<std::vector<std::string>> out(M.rows);
  for (size_t i = 0; i < M.rows; ++i)
    for (size_t j = 0; j < M.cols; ++j) out[i].push_back(to_string(M(i, j)));
  return out;
}

template <class K>
FormMatrix<K> form_matrix_from_strings(const std::vector<std::vector<std::string>>& rows, const Ring* R) {
  FormMatrix<K> M(rows.size(), rows.empty() ? 0 : rows[0].size(), R);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if constexpr (std::is_same_v<K, Rat>) M(i, j) = parse_poly(rows[i][j], R);
      else if constexpr (std::is_same_v<K, Cyc7>) M(i, j) = parse_poly_cyc(rows[i][j], R);
      else M(i, j) = parse_poly_field(rows[i][j], R);
    }
  return M;
}

// ---- differential operators ---------------------------------------------
// A polynomial in the partials d/du_k, stored with exponents = derivative orders.
struct DiffOp {
  Poly<Rat> symbol;
};

template <class K>
Poly<K> apply_diffop(const DiffOp& D, const Poly<K>& f) {
  Poly<K> out(f.ring());
  for (auto& d : D.symbol.terms()) {
    std::vector<typename Poly<K>::Term> ts;
    for (auto& t : f.terms()) {
      if (!mono_divides(d.m, t.m)) continue;
      Rat factor = d.c;
      for (int i = 0; i < kMaxVars; ++i)
        for (int k = 0; k < d.m[i]; ++k) factor *= t.m[i] - k;
      K c = t.c;
      if constexpr (std::is_same_v<K, Fp>) c *= ef::to_fp(factor, c.p);
      else c *= K(factor);
      ts.push_back({mono_div(t.m, d.m), c});
    }
    out += Poly<K>::from_terms(f.ring(), std::move(ts));
  }
  return out;
}

// Basis of degree-d forms annihilated by every operator (reduced echelon).
std::vector<Poly<Rat>> kernel_of_operators(const std::vector<DiffOp>& ops, int d, const Ring* R);

}  // namespace pl
