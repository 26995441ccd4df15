#include "polylin/formmatrix.hpp"

namespace pl {

std::vector<Poly<Rat>> kernel_of_operators(const std::vector<DiffOp>& ops, int d, const Ring* R) {
  auto monos = R->monomials(d);
  std::vector<Poly<Rat>> images;  // one column per monomial, stacked over operators
  std::vector<Poly<Rat>> all;
  std::vector<std::vector<Poly<Rat>>> cols(monos.size());
  for (size_t j = 0; j < monos.size(); ++j) {
    Poly<Rat> m = Poly<Rat>::monomial(R, monos[j], Rat(1));
    for (auto& D : ops) {
      cols[j].push_back(apply_diffop(D, m));
      all.push_back(cols[j].back());
    }
  }
  std::vector<Poly<Rat>> out;
  if (ops.empty()) {
    for (auto& m : monos) out.push_back(Poly<Rat>::monomial(R, m, Rat(1)));
    return span_basis(out, Rat(0));
  }
  auto cs = CoordSystem<Rat>::of(all);
  size_t nrow = ops.size() * cs.monos.size();
  Mat<Rat> M(nrow, monos.size(), Rat(0));
  for (size_t j = 0; j < monos.size(); ++j)
    for (size_t k = 0; k < ops.size(); ++k)
      for (auto& t : cols[j][k].terms()) M(k * cs.monos.size() + cs.index.at(t.m), j) = t.c;
  for (auto& v : null_space(M, Rat(0))) {
    std::vector<Poly<Rat>::Term> ts;
    for (size_t j = 0; j < monos.size(); ++j)
      if (sgn(v[j])) ts.push_back({monos[j], v[j]});
    out.push_back(Poly<Rat>::from_terms(R, std::move(ts)));
  }
  return span_basis(out, Rat(0));
}

}  // namespace pl
