#include <dtoric/error.hpp>
#include <dtoric/oracle.hpp>

#include <algorithm>

namespace dtoric {

namespace {

void add_to(TfrElement& f, const LatticePoint& a, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = f.try_emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) f.erase(it);
}

bool is_zero_action(const TruncatedAlgebra& T, const TruncatedAction& act) {
  for (std::size_t k = 0; k < T.basis().size(); ++k) {
    if (T.degree(T.basis()[k]) > act.domain_bound) break;
    if (!act.columns[k].empty()) return false;
  }
  return true;
}

// [delta, t^g] on the shrunken window.
TruncatedAction commutator(const TruncatedAlgebra& T, const TruncatedAction& act, const LatticePoint& g) {
  TruncatedAction out;
  out.domain_bound = act.domain_bound - T.degree(g);
  out.columns.assign(T.basis().size(), {});
  for (std::size_t k = 0; k < T.basis().size(); ++k) {
    const LatticePoint& a = T.basis()[k];
    if (T.degree(a) > out.domain_bound) break;
    TfrElement col;
    if (auto ga = T.multiply(g, a)) {
      for (const auto& [t, c] : act.columns[*T.index(*ga)]) add_to(col, t, c);
    }
    for (const auto& [t, c] : act.columns[k]) {
      if (auto gt = T.multiply(g, t)) add_to(col, *gt, -c);
    }
    out.columns[k] = std::move(col);
  }
  return out;
}

// delta(f) = delta(1) f on the window.
bool is_multiplication(const TruncatedAlgebra& T, const TruncatedAction& act) {
  const LatticePoint zero = LatticePoint::zero(T.grading().dim());
  auto one = T.index(zero);
  if (!one) throw validation_error("algebra window does not contain 1");
  const TfrElement& r = act.columns[*one];
  for (std::size_t k = 0; k < T.basis().size(); ++k) {
    const LatticePoint& a = T.basis()[k];
    if (T.degree(a) > act.domain_bound) break;
    TfrElement expect;
    for (const auto& [t, c] : r)
      if (auto ta = T.multiply(t, a)) add_to(expect, *ta, c);
    if (expect != act.columns[k]) return false;
  }
  return true;
}

bool order_rec(const TruncatedAlgebra& T, const TruncatedAction& act, unsigned i, std::size_t first_gen) {
  if (is_zero_action(T, act)) return true;
  if (i == 0) return is_multiplication(T, act);
  const auto& gens = T.generators();
  // Iterated commutators are symmetric in the generators, so nondecreasing
  // sequences suffice.
  for (std::size_t k = first_gen; k < gens.size(); ++k) {
    if (!order_rec(T, commutator(T, act, gens[k]), i - 1, k)) return false;
  }
  return true;
}

}  // namespace

// ----------------------------------------------------------- TruncatedAlgebra

TruncatedAlgebra TruncatedAlgebra::semigroup(const AffineMonoid& M, const Int& bound) {
  TruncatedAlgebra T;
  auto monoid = std::make_shared<const AffineMonoid>(M);
  T.basis_ = M.elements_up_to(bound);
  T.generators_ = M.generators();
  std::sort(T.generators_.begin(), T.generators_.end());
  T.generators_.erase(std::unique(T.generators_.begin(), T.generators_.end()), T.generators_.end());
  T.grading_ = M.grading();
  T.bound_ = bound;
  T.member_ = [monoid](const LatticePoint& a) { return monoid->contains(a); };
  T.mult_ = [](const LatticePoint& a, const LatticePoint& b) -> std::optional<LatticePoint> { return a + b; };
  for (std::size_t k = 0; k < T.basis_.size(); ++k) T.index_.emplace(T.basis_[k], k);
  return T;
}

TruncatedAlgebra TruncatedAlgebra::complex(const MonoidalComplex& C, const Int& bound) {
  TruncatedAlgebra T;
  auto cx = std::make_shared<const MonoidalComplex>(C);
  T.basis_ = C.support_up_to(bound);
  T.generators_ = C.generators();
  T.grading_ = C.grading();
  T.bound_ = bound;
  T.member_ = [cx](const LatticePoint& a) { return cx->in_support(a); };
  T.mult_ = [cx](const LatticePoint& a, const LatticePoint& b) { return tfr_multiply(*cx, a, b); };
  for (std::size_t k = 0; k < T.basis_.size(); ++k) T.index_.emplace(T.basis_[k], k);
  return T;
}

Int TruncatedAlgebra::max_generator_degree() const {
  Int m = 0;
  for (const LatticePoint& g : generators_) m = std::max(m, degree(g));
  return m;
}

std::optional<std::size_t> TruncatedAlgebra::index(const LatticePoint& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ----------------------------------------------------------- TruncatedAction

TruncatedAction& TruncatedAction::operator+=(const TruncatedAction& other) {
  if (columns.size() != other.columns.size()) throw validation_error("actions on different windows");
  domain_bound = std::min(domain_bound, other.domain_bound);
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const auto& [t, c] : other.columns[k]) add_to(columns[k], t, c);
  escapes.insert(escapes.end(), other.escapes.begin(), other.escapes.end());
  return *this;
}

TruncatedAction realize(const TruncatedAlgebra& T, const LatticePoint& m, const ThetaPolynomial& q) {
  if (m.dim() != T.grading().dim() || q.dim() != m.dim()) throw validation_error("operator dimension mismatch");
  TruncatedAction act;
  act.domain_bound = T.bound();
  act.columns.assign(T.basis().size(), {});
  for (std::size_t k = 0; k < T.basis().size(); ++k) {
    const LatticePoint& a = T.basis()[k];
    Rational c = q.evaluate(a);
    if (c == 0) continue;
    LatticePoint target = a + m;
    if (T.contains(target))
      act.columns[k].emplace(std::move(target), c);
    else
      act.escapes.push_back(a);
  }
  return act;
}

TruncatedAction realize(const TruncatedAlgebra& T, const std::vector<HomogeneousTerm>& terms) {
  TruncatedAction act;
  act.domain_bound = T.bound();
  act.columns.assign(T.basis().size(), {});
  for (const HomogeneousTerm& t : terms) act += realize(T, t.degree, t.symbol);
  return act;
}

const TfrElement& apply(const TruncatedAlgebra& T, const TruncatedAction& act, const LatticePoint& a) {
  auto k = T.index(a);
  if (!k || T.degree(a) > act.domain_bound) throw resource_error("monomial " + a.to_string() + " is outside the window");
  return act.columns[*k];
}

Int certified_degree(const TruncatedAlgebra& T, const TruncatedAction& act, unsigned i) {
  return act.domain_bound - Int(i) * T.max_generator_degree();
}

bool order_check(const TruncatedAlgebra& T, const TruncatedAction& act, unsigned i) {
  if (act.columns.size() != T.basis().size()) throw validation_error("action does not match the algebra window");
  if (certified_degree(T, act, i) < 0)
    throw resource_error("window too small: order " + std::to_string(i) + " needs bound at least " +
                         Int(Int(i) * T.max_generator_degree()).get_str());
  return order_rec(T, act, i, 0);
}

bool maps_into(const TruncatedAlgebra& T, const TruncatedAction& act,
               const std::function<bool(const LatticePoint&)>& source,
               const std::function<bool(const LatticePoint&)>& target) {
  for (std::size_t k = 0; k < T.basis().size(); ++k) {
    const LatticePoint& a = T.basis()[k];
    if (T.degree(a) > act.domain_bound) break;
    if (!source(a)) continue;
    for (const auto& [t, c] : act.columns[k])
      if (c != 0 && !target(t)) return false;
  }
  return true;
}

RetractCheck retract_condition_check(const MonoidalComplex& C, const TruncatedAlgebra& T, const TruncatedAction& act,
                                     unsigned order) {
  RetractCheck r;
  for (std::size_t l : C.maximal()) {
    for (std::size_t k = 0; k < T.basis().size() && r.condition2; ++k) {
      const LatticePoint& a = T.basis()[k];
      if (T.degree(a) > act.domain_bound) break;
      if (C.in_cone(l, a)) continue;
      for (const auto& [t, c] : act.columns[k]) {
        if (c != 0 && C.in_cone(l, t)) {
          r.condition2 = false;
          r.diagnostic = "proj onto '" + C.name(l) + "' kills t^" + a.to_string() + " but not its image t^" +
                         t.to_string();
          break;
        }
      }
    }
  }
  for (std::size_t l : C.maximal()) {
    TruncatedAlgebra S = TruncatedAlgebra::semigroup(C.monoid(l), act.domain_bound);
    TruncatedAction part;
    part.domain_bound = act.domain_bound;
    part.columns.assign(S.basis().size(), {});
    for (std::size_t k = 0; k < S.basis().size(); ++k) {
      for (const auto& [t, c] : apply(T, act, S.basis()[k]))
        if (C.in_cone(l, t)) part.columns[k].emplace(t, c);
    }
    if (!order_check(S, part, order)) {
      r.condition1 = false;
      if (r.diagnostic.empty())
        r.diagnostic = "component on '" + C.name(l) + "' is not of order " + std::to_string(order);
      break;
    }
  }
  return r;
}

}  // namespace dtoric
