#include <sstream>

#include "groebner/groebner.hpp"

namespace gb {

namespace {

using pl::Mono;

void minimalize(std::vector<Mono>& M) {
  std::sort(M.begin(), M.end(), [](const Mono& a, const Mono& b) { return a.deg < b.deg; });
  std::vector<Mono> out;
  for (auto& m : M) {
    bool red = false;
    for (auto& o : out)
      if (pl::mono_divides(o, m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  M = std::move(out);
}

Series mul(const Series& a, const Series& b) {
  Series r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void add_into(Series& a, const Series& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

Series numerator_rec(std::vector<Mono> M) {
  minimalize(M);
  if (M.empty()) return {1};
  // pairwise coprime generators give a product
  bool coprime = true;
  for (size_t a = 0; a < M.size() && coprime; ++a)
    for (size_t b = a + 1; b < M.size() && coprime; ++b)
      if (!pl::mono_coprime(M[a], M[b])) coprime = false;
  if (coprime) {
    Series r = {1};
    for (auto& m : M) {
      Series f(m.deg + 1, 0);
      f[0] = 1;
      f[m.deg] -= 1;
      r = mul(r, f);
    }
    return r;
  }
  // pivot on the variable shared by the most generators
  int best = -1, best_count = 0;
  for (int v = 0; v < pl::kMaxVars; ++v) {
    int c = 0;
    for (auto& m : M)
      if (m.e[v]) ++c;
    if (c > best_count) {
      best_count = c;
      best = v;
    }
  }
  Mono p;
  p.set(best, 1);
  std::vector<Mono> plus = M;
  plus.push_back(p);
  std::vector<Mono> colon;
  for (auto& m : M) {
    Mono q = m;
    if (q.e[best]) q.set(best, q.e[best] - 1);
    colon.push_back(q);
  }
  Series r = numerator_rec(std::move(plus));
  add_into(r, numerator_rec(std::move(colon)), 1);
  return r;
}

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Series hilbert_numerator(const std::vector<Mono>& gens, int nvars) {
  Series s = numerator_rec(gens);
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return s;
}

long long hilbert_function_value(const Series& num, int nvars, int d) {
  long long v = 0;
  for (size_t k = 0; k < num.size(); ++k) {
    if (int(k) > d) break;
    v += num[k] * (nvars == 0 ? (int(k) == d) : binom(d - k + nvars - 1, nvars - 1));
  }
  return v;
}

HilbertData hilbert_from_leads(const std::vector<Mono>& leads, int nvars, int upto) {
  HilbertData h;
  h.nvars = nvars;
  h.numerator = hilbert_numerator(leads, nvars);
  Series q = h.numerator;
  int factors = 0;
  auto at_one = [](const Series& s) {
    long long v = 0;
    for (auto c : s) v += c;
    return v;
  };
  while (factors < nvars && q.size() > 1 && at_one(q) == 0) {
    Series r(q.size() - 1);
    long long acc = 0;
    for (size_t k = 0; k + 1 < q.size(); ++k) {
      acc += q[k];
      r[k] = acc;
    }
    q = r;
    ++factors;
  }
  if (q.size() == 1 && q[0] == 0) factors = nvars;  // zero ring
  h.reduced = q;
  h.krull_dim = nvars - factors;
  h.degree = at_one(q);
  for (int d = 0; d <= upto; ++d) h.values.push_back(hilbert_function_value(h.numerator, nvars, d));
  return h;
}

// ---- Betti table rendering ----------------------------------------------

int BettiTable::length() const {
  int l = 0;
  for (auto& [k, v] : beta)
    if (v) l = std::max(l, k.first);
  return l;
}

int BettiTable::max_row() const {
  int r = 0;
  for (auto& [k, v] : beta)
    if (v) r = std::max(r, k.second - k.first);
  return r;
}

std::string BettiTable::macaulay() const {
  int L = length(), rows = max_row();
  std::vector<std::vector<std::string>> cells(rows + 1, std::vector<std::string>(L + 1));
  size_t w = 1;
  for (int r = 0; r <= rows; ++r)
    for (int i = 0; i <= L; ++i) {
      long v = at(i, i + r);
      cells[r][i] = v ? std::to_string(v) : "-";
      w = std::max(w, cells[r][i].size());
    }
  std::ostringstream os;
  for (int r = 0; r <= rows; ++r) {
    std::string idx = std::to_string(r) + ":";
    os << idx;
    for (int i = 0; i <= L; ++i) os << ' ' << std::string(w - cells[r][i].size(), ' ') << cells[r][i];
    os << '\n';
  }
  return os.str();
}

std::string BettiTable::shorthand() const {
  int rows = max_row();
  std::ostringstream os;
  os << '(';
  for (int r = 0; r <= rows; ++r) {
    if (r) os << "; ";
    std::vector<long> vals;
    int first = -1, last = -1;
    for (int i = 0; i <= length(); ++i)
      if (at(i, i + r)) {
        if (first < 0) first = i;
        last = i;
      }
    if (first < 0) {
      os << "-";
      continue;
    }
    for (int i = first; i <= last; ++i) {
      if (i > first) os << ' ';
      long v = at(i, i + r);
      if (v) os << v;
      else os << '-';
    }
  }
  os << ')';
  return os.str();
}

Series BettiTable::alternating_sum() const {
  Series s;
  for (auto& [k, v] : beta) {
    if (int(s.size()) <= k.second) s.resize(k.second + 1, 0);
    s[k.second] += (k.first % 2 ? -v : v);
  }
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return s;
}

}  // namespace gb
