#pragma once

// Degree-bounded ideal membership by exact linear algebra, independent of
// the Groebner code: p is in the span of {mu * g : deg(mu * g) <= D}.

#include <dtoric/theta.hpp>

#include <map>
#include <vector>

namespace dtoric::testing {

inline std::vector<Exponent> monomials_up_to(std::size_t dim, unsigned degree) {
  std::vector<Exponent> out;
  Exponent e(dim, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == dim) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// Rows are monomials, columns are the products mu * g plus p last; p is a
// member iff appending p does not raise the rank.
inline bool member_by_linear_algebra(const ThetaPolynomial& p, const std::vector<ThetaPolynomial>& gens,
                                     unsigned degree_bound) {
  if (p.is_zero()) return true;
  const std::size_t dim = p.dim();
  std::vector<ThetaPolynomial> cols;
  for (const ThetaPolynomial& g : gens) {
    if (g.is_zero() || g.total_degree() > degree_bound) continue;
    for (const Exponent& mu : monomials_up_to(dim, degree_bound - g.total_degree())) {
      ThetaPolynomial t(dim);
      t.add_multiple(g, 1, mu);
      cols.push_back(std::move(t));
    }
  }
  std::map<Exponent, std::size_t> row_of;
  auto row = [&](const Exponent& e) {
    auto [it, inserted] = row_of.try_emplace(e, row_of.size());
    return it->second;
  };
  for (const auto& c : cols)
    for (const auto& [e, v] : c.terms()) row(e);
  for (const auto& [e, v] : p.terms()) row(e);

  const std::size_t R = row_of.size(), C = cols.size() + 1;
  std::vector<std::vector<Rational>> M(R, std::vector<Rational>(C, Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [e, v] : cols[j].terms()) M[row_of[e]][j] = v;
  for (const auto& [e, v] : p.terms()) M[row_of[e]][C - 1] = v;

  // Eliminate on the generator columns only, then p must be reduced to zero.
  std::size_t r = 0;
  for (std::size_t c = 0; c + 1 < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && M[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(M[piv], M[r]);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c] / M[r][c];
      for (std::size_t k = c; k < C; ++k) M[i][k] -= f * M[r][k];
    }
    ++r;
  }
  for (std::size_t i = r; i < R; ++i)
    if (M[i][C - 1] != 0) return false;
  return true;
}

}  // namespace dtoric::testing
