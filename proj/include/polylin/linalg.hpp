// Dense linear algebra over exact fields.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "exactfield/exactfield.hpp"

namespace pl {

template <class K>
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(size_t r, size_t c, const K& zero) : rows(r), cols(c), a(r * c, zero) {}
  K& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const K& operator()(size_t i, size_t j) const { return a[i * cols + j]; }
};

template <class K>
struct Echelon {
  Mat<K> R;                // reduced row echelon form
  std::vector<size_t> pivots;  // pivot column of each nonzero row
  size_t rank() const { return pivots.size(); }
};

namespace detail {

// Row reduction on raw residues mod p; much faster than per-element Fp.
inline std::vector<size_t> rref_mod(std::vector<uint32_t>& a, size_t rows, size_t cols, uint32_t p) {
  std::vector<size_t> piv;
  size_t r = 0;
  auto inv = [p](uint32_t x) {
    uint64_t res = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) res = res * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return uint32_t(res);
  };
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && a[pr * cols + c] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (size_t j = 0; j < cols; ++j) std::swap(a[pr * cols + j], a[r * cols + j]);
    uint32_t* row = &a[r * cols];
    uint32_t iv = inv(row[c]);
    for (size_t j = c; j < cols; ++j) row[j] = uint32_t(uint64_t(row[j]) * iv % p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      uint32_t* o = &a[i * cols];
      uint32_t f = o[c];
      if (!f) continue;
      uint32_t nf = p - f;
      for (size_t j = c; j < cols; ++j)
        if (row[j]) o[j] = uint32_t((o[j] + uint64_t(nf) * row[j]) % p);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace detail

template <class K>
Echelon<K> rref(Mat<K> M) {
  Echelon<K> E;
  if constexpr (std::is_same_v<K, ef::Fp>) {
    if (M.rows && M.cols) {
      uint32_t p = M.a[0].p;
      std::vector<uint32_t> raw(M.a.size());
      for (size_t i = 0; i < raw.size(); ++i) raw[i] = M.a[i].v;
      E.pivots = detail::rref_mod(raw, M.rows, M.cols, p);
      for (size_t i = 0; i < raw.size(); ++i) M.a[i].v = raw[i];
    }
    E.R = std::move(M);
    return E;
  } else {
    size_t r = 0;
    for (size_t c = 0; c < M.cols && r < M.rows; ++c) {
      size_t pr = r;
      while (pr < M.rows && ef::is_zero(M(pr, c))) ++pr;
      if (pr == M.rows) continue;
      if (pr != r)
        for (size_t j = 0; j < M.cols; ++j) std::swap(M(pr, j), M(r, j));
      K iv = ef::inv(M(r, c));
      for (size_t j = c; j < M.cols; ++j)
        if (!ef::is_zero(M(r, j))) M(r, j) *= iv;
      for (size_t i = 0; i < M.rows; ++i) {
        if (i == r || ef::is_zero(M(i, c))) continue;
        K f = M(i, c);
        for (size_t j = c; j < M.cols; ++j)
          if (!ef::is_zero(M(r, j))) M(i, j) -= f * M(r, j);
      }
      E.pivots.push_back(c);
      ++r;
    }
    E.R = std::move(M);
    return E;
  }
}

template <class K>
size_t rank(const Mat<K>& M) {
  return rref(M).rank();
}

// Basis of {v : M v = 0}; one vector per free column, deterministic.
template <class K>
std::vector<std::vector<K>> null_space(const Mat<K>& M, const K& zero) {
  Echelon<K> E = rref(M);
  std::vector<int> is_piv(M.cols, -1);
  for (size_t i = 0; i < E.pivots.size(); ++i) is_piv[E.pivots[i]] = int(i);
  std::vector<std::vector<K>> out;
  K one = ef::one_of(zero);
  for (size_t f = 0; f < M.cols; ++f) {
    if (is_piv[f] >= 0) continue;
    std::vector<K> v(M.cols, zero);
    v[f] = one;
    for (size_t i = 0; i < E.pivots.size(); ++i) v[E.pivots[i]] = -E.R(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

template <class K>
Mat<K> from_rows(const std::vector<std::vector<K>>& rows, size_t cols, const K& zero) {
  Mat<K> M(rows.size(), cols, zero);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) M(i, j) = rows[i][j];
  return M;
}

template <class K>
Mat<K> identity(size_t n, const K& zero) {
  Mat<K> M(n, n, zero);
  for (size_t i = 0; i < n; ++i) M(i, i) = ef::one_of(zero);
  return M;
}

template <class K>
Mat<K> matmul(const Mat<K>& A, const Mat<K>& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matmul: shape");
  K zero = A.a.empty() ? K{} : ef::zero_of(A.a[0]);
  Mat<K> C(A.rows, B.cols, zero);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t k = 0; k < A.cols; ++k) {
      if (ef::is_zero(A(i, k))) continue;
      for (size_t j = 0; j < B.cols; ++j)
        if (!ef::is_zero(B(k, j))) C(i, j) += A(i, k) * B(k, j);
    }
  return C;
}

}  // namespace pl
