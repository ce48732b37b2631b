#include <dtoric/error.hpp>
#include <dtoric/tfr.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace dtoric {

namespace {

// Terms of equal degree summed, zero symbols dropped.
std::vector<HomogeneousTerm> merge_terms(const std::vector<HomogeneousTerm>& terms) {
  std::map<LatticePoint, ThetaPolynomial> by_degree;
  for (const HomogeneousTerm& t : terms) {
    auto [it, inserted] = by_degree.try_emplace(t.degree, t.symbol);
    if (!inserted) it->second += t.symbol;
  }
  std::vector<HomogeneousTerm> out;
  for (auto& [b, q] : by_degree)
    if (!q.is_zero()) out.push_back({b, std::move(q)});
  return out;
}

TfrElement image_in(const std::vector<HomogeneousTerm>& terms, const LatticePoint& a,
                    const std::function<bool(const LatticePoint&)>& keep) {
  TfrElement out;
  for (const HomogeneousTerm& t : terms) {
    Rational c = t.symbol.evaluate(a);
    if (c == 0) continue;
    LatticePoint target = a + t.degree;
    if (!keep(target)) continue;
    auto [it, inserted] = out.try_emplace(target, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

std::string describe_term(const LatticePoint& b, const ThetaPolynomial& q) {
  return "t^" + b.to_string() + " * (" + q.to_string() + ")";
}

}  // namespace

OperatorTuple OperatorTuple::zero(const MonoidalComplex& C) {
  OperatorTuple t;
  t.components.assign(C.maximal().size(), {});
  return t;
}

AdmissibilityResult homogeneous_component_admissible(const MonoidalComplex& C, std::size_t sigma, const LatticePoint& b,
                                                     const ThetaPolynomial& q, const Int& bound) {
  if (b.dim() != C.ambient_dim() || q.dim() != C.ambient_dim())
    throw validation_error("operator dimension mismatch");
  if (std::find(C.maximal().begin(), C.maximal().end(), sigma) == C.maximal().end())
    throw validation_error("cone '" + C.name(sigma) + "' is not maximal");
  AdmissibilityResult r;
  if (q.is_zero()) return r;
  for (const LatticePoint& a : C.monoid(sigma).elements_up_to(bound)) {
    Rational v = q.evaluate(a);
    if (v == 0) continue;
    const LatticePoint target = a + b;
    if (!C.in_cone(sigma, target)) {
      r.admissible = false;
      r.violation = "condition (i) fails at a = " + a.to_string() + ": q(a) = " + to_string(v) + " and a + b leaves '" +
                    C.name(sigma) + "'";
      return r;
    }
    for (std::size_t tau : C.maximal()) {
      if (tau == sigma) continue;
      auto shared = C.intersection(sigma, tau);
      auto in_shared = [&](const LatticePoint& p) { return shared ? C.in_cone(*shared, p) : p.is_zero(); };
      if (!in_shared(a) && in_shared(target)) {
        r.admissible = false;
        r.violation = "condition (ii) fails at a = " + a.to_string() + ": q(a) = " + to_string(v) +
                      " and a + b lands on the face shared with '" + C.name(tau) + "'";
        return r;
      }
    }
  }
  return r;
}

TupleCheckResult tuple_check(const MonoidalComplex& C, const OperatorTuple& T, const Int& bound) {
  const auto& maximal = C.maximal();
  if (T.components.size() != maximal.size())
    throw validation_error("tuple has " + std::to_string(T.components.size()) + " components, expected " +
                           std::to_string(maximal.size()));
  TupleCheckResult r;
  std::vector<std::vector<HomogeneousTerm>> comps;
  for (const auto& c : T.components) comps.push_back(merge_terms(c));

  for (std::size_t x = 0; x < maximal.size(); ++x) {
    for (const HomogeneousTerm& t : comps[x]) {
      auto adm = homogeneous_component_admissible(C, maximal[x], t.degree, t.symbol, bound);
      if (!adm.admissible) {
        r.condition_b = false;
        r.diagnostics.push_back("component '" + C.name(maximal[x]) + "', term " + describe_term(t.degree, t.symbol) +
                                ": " + adm.violation);
      }
    }
  }

  // Condition (a) on pairs; larger sets of cones project through a pair.
  for (std::size_t x = 0; x < maximal.size(); ++x) {
    for (std::size_t y = x + 1; y < maximal.size(); ++y) {
      auto shared = C.intersection(maximal[x], maximal[y]);
      auto in_shared = [&](const LatticePoint& p) { return shared ? C.in_cone(*shared, p) : p.is_zero(); };
      std::vector<LatticePoint> window = shared ? C.monoid(*shared).elements_up_to(bound)
                                                : std::vector<LatticePoint>{LatticePoint::zero(C.ambient_dim())};
      for (const LatticePoint& a : window) {
        if (image_in(comps[x], a, in_shared) != image_in(comps[y], a, in_shared)) {
          r.condition_a = false;
          r.diagnostics.push_back("restrictions of '" + C.name(maximal[x]) + "' and '" + C.name(maximal[y]) +
                                  "' to their shared face differ at a = " + a.to_string());
          break;
        }
      }
    }
  }
  r.passed = r.condition_a && r.condition_b;
  return r;
}

TruncatedAction lift_tuple(const MonoidalComplex& C, const TruncatedAlgebra& T, const OperatorTuple& tuple,
                           const Int& bound) {
  if (bound > T.bound()) throw resource_error("lift bound exceeds the algebra window");
  TupleCheckResult check = tuple_check(C, tuple, bound);
  if (!check.passed) throw validation_error("incompatible tuple: " + check.diagnostics.front());

  const auto& maximal = C.maximal();
  const std::size_t n = maximal.size();
  if (n >= 20) throw resource_error("too many maximal cones for inclusion-exclusion");
  std::vector<std::vector<HomogeneousTerm>> comps;
  for (const auto& c : tuple.components) comps.push_back(merge_terms(c));

  TruncatedAction act;
  act.domain_bound = bound;
  act.columns.assign(T.basis().size(), {});
  for (std::size_t k = 0; k < T.basis().size(); ++k) {
    const LatticePoint& a = T.basis()[k];
    if (T.degree(a) > bound) break;
    TfrElement col;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> lambda;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) lambda.push_back(maximal[i]);
      if (!C.in_all(lambda, a)) continue;
      const std::size_t first = static_cast<std::size_t>(__builtin_ctzll(mask));
      const Rational sign = lambda.size() % 2 == 1 ? 1 : -1;
      TfrElement img = image_in(comps[first], a, [&](const LatticePoint& p) { return C.in_all(lambda, p); });
      for (const auto& [t, c] : img) {
        auto [it, inserted] = col.try_emplace(t, sign * c);
        if (!inserted) {
          it->second += sign * c;
          if (it->second == 0) col.erase(it);
        }
      }
    }
    act.columns[k] = std::move(col);
  }
  return act;
}

bool sr_generator_admissible(const SimplicialComplex& D, const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != D.vertices() || b.dim() != D.vertices()) throw validation_error("exponent dimension mismatch");
  auto support = [](const LatticePoint& v) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (v[i] != 0) s.insert(i);
    return s;
  };
  const auto sa = support(a), sb = support(b);
  for (const auto& F : D.facets()) {
    bool a_in = std::includes(F.begin(), F.end(), sa.begin(), sa.end());
    bool b_in = std::includes(F.begin(), F.end(), sb.begin(), sb.end());
    if (a_in && !b_in) return false;
  }
  return true;
}

}  // namespace dtoric
