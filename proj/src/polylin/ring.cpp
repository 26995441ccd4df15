#include "polylin/ring.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pl {

Ring::Ring(std::vector<std::string> names, std::vector<int> blocks, std::vector<int> registries)
    : names_(std::move(names)), blocks_(std::move(blocks)), reg_sizes_(std::move(registries)) {
  int n = int(names_.size());
  if (n > kMaxVars) throw std::invalid_argument("too many variables");
  if (blocks_.empty()) blocks_ = {n};
  if (reg_sizes_.empty()) reg_sizes_ = {n};
  if (std::accumulate(blocks_.begin(), blocks_.end(), 0) != n ||
      std::accumulate(reg_sizes_.begin(), reg_sizes_.end(), 0) != n)
    throw std::invalid_argument("block sizes must add up to the variable count");
  for (int r = 0; r < int(reg_sizes_.size()); ++r)
    for (int k = 0; k < reg_sizes_[r]; ++k) reg_of_.push_back(r);
}

int Ring::index_of(const std::string& nm) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == nm) return i;
  return -1;
}

int Ring::cmp(const Mono& a, const Mono& b) const {
  if (blocks_.size() == 1) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (int i = nvars() - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
  int start = 0;
  for (int len : blocks_) {
    int da = 0, db = 0;
    for (int i = start; i < start + len; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = start + len - 1; i >= start; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    start += len;
  }
  return 0;
}

std::vector<int> Ring::multidegree(const Mono& m) const {
  std::vector<int> d(reg_sizes_.size(), 0);
  for (int i = 0; i < nvars(); ++i) d[reg_of_[i]] += m.e[i];
  return d;
}

std::string Ring::mono_string(const Mono& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += names_[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<Mono> Ring::monomials(int d) const {
  std::vector<Mono> out;
  if (d < 0) return out;
  int n = nvars();
  Mono m;
  // enumerate compositions of d into n parts
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      Mono x;
      for (int k = 0; k < n; ++k) x.set(k, e[k]);
      out.push_back(x);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [this](const Mono& a, const Mono& b) { return greater(a, b); });
  return out;
}

namespace {
struct RingStore {
  std::mutex mu;
  std::map<std::tuple<std::vector<std::string>, std::vector<int>, std::vector<int>>, std::unique_ptr<Ring>> rings;
};
RingStore& store() {
  static RingStore s;
  return s;
}
std::vector<std::string> seq(const std::string& p, int n, int from = 0) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(p + std::to_string(from + i));
  return v;
}
}  // namespace

const Ring* make_ring(const std::vector<std::string>& names, const std::vector<int>& blocks,
                      const std::vector<int>& registries) {
  auto& s = store();
  std::lock_guard<std::mutex> lk(s.mu);
  auto key = std::make_tuple(names, blocks, registries);
  auto it = s.rings.find(key);
  if (it != s.rings.end()) return it->second.get();
  auto r = std::make_unique<Ring>(names, blocks, registries);
  const Ring* p = r.get();
  s.rings.emplace(key, std::move(r));
  return p;
}

const Ring* ring_vars(const std::string& prefix, int n) { return make_ring(seq(prefix, n)); }
const Ring* ring_X() { return ring_vars("x", 7); }
const Ring* ring_U() { return ring_vars("u", 4); }
const Ring* ring_Y() { return ring_vars("y", 3); }
const Ring* ring_T() { return ring_vars("t", 4); }
const Ring* ring_TU() {
  auto names = seq("t", 4);
  auto u = seq("u", 4);
  names.insert(names.end(), u.begin(), u.end());
  return make_ring(names, {8}, {4, 4});
}

}  // namespace pl
