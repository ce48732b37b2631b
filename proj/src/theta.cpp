#include <dtoric/error.hpp>
#include <dtoric/theta.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace dtoric {

namespace {

unsigned degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool divides_exp(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

std::string monomial_text(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "t" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

}  // namespace

bool grevlex_greater(const Exponent& a, const Exponent& b) {
  unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// ------------------------------------------------------------ ThetaPolynomial

ThetaPolynomial ThetaPolynomial::constant(std::size_t dim, const Rational& c) {
  ThetaPolynomial p(dim);
  p.add_term(Exponent(dim, 0), c);
  return p;
}

ThetaPolynomial ThetaPolynomial::variable(std::size_t dim, std::size_t i) {
  Exponent e(dim, 0);
  e.at(i) = 1;
  return monomial(e, 1);
}

ThetaPolynomial ThetaPolynomial::linear(const LatticePoint& f, const Int& c) {
  ThetaPolynomial p(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    Exponent e(f.dim(), 0);
    e[i] = 1;
    p.add_term(e, Rational(f[i]));
  }
  p.add_term(Exponent(f.dim(), 0), Rational(-c));
  return p;
}

ThetaPolynomial ThetaPolynomial::monomial(const Exponent& e, const Rational& c) {
  ThetaPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

bool ThetaPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

unsigned ThetaPolynomial::total_degree() const { return terms_.empty() ? 0 : degree_of(leading_exponent()); }

void ThetaPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != dim_) throw validation_error("exponent dimension mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    it->second.canonicalize();
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void ThetaPolynomial::add_multiple(const ThetaPolynomial& g, const Rational& c, const Exponent& shift) {
  if (c == 0) return;
  Exponent e(dim_);
  for (const auto& [ge, gc] : g.terms_) {
    for (std::size_t i = 0; i < dim_; ++i) e[i] = ge[i] + shift[i];
    add_term(e, c * gc);
  }
}

ThetaPolynomial& ThetaPolynomial::operator+=(const ThetaPolynomial& o) {
  if (o.dim_ != dim_) throw validation_error("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ThetaPolynomial& ThetaPolynomial::operator-=(const ThetaPolynomial& o) {
  if (o.dim_ != dim_) throw validation_error("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ThetaPolynomial& ThetaPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ThetaPolynomial operator*(const ThetaPolynomial& a, const ThetaPolynomial& b) {
  if (a.dim_ != b.dim_) throw validation_error("polynomial dimension mismatch");
  ThetaPolynomial r(a.dim_);
  for (const auto& [e, c] : b.terms_) r.add_multiple(a, c, e);
  return r;
}

ThetaPolynomial ThetaPolynomial::monic() const {
  if (is_zero()) return *this;
  ThetaPolynomial r = *this;
  r *= Rational(1) / leading_coefficient();
  return r;
}

Rational ThetaPolynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != dim_) throw validation_error("evaluation point dimension mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < dim_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return canonical(total);
}

Rational ThetaPolynomial::evaluate(const LatticePoint& point) const {
  std::vector<Rational> q;
  q.reserve(point.dim());
  for (const Int& v : point) q.emplace_back(v);
  return evaluate(q);
}

std::string ThetaPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string mono = monomial_text(e);
    if (mono.empty())
      s += dtoric::to_string(mag);
    else if (mag == 1)
      s += mono;
    else
      s += dtoric::to_string(mag) + "*" + mono;
  }
  return s;
}

// --------------------------------------------------------------- LinearFactor

LinearFactor::LinearFactor(LatticePoint f, Int c, Rational* unit) : form_(std::move(f)), shift_(std::move(c)) {
  if (form_.is_zero()) throw validation_error("linear factor with zero form");
  Int g = gcd(form_.content(), shift_);
  std::size_t lead = 0;
  while (form_[lead] == 0) ++lead;
  if (form_[lead] < 0) g = -g;
  if (g != 1) {
    for (std::size_t i = 0; i < form_.dim(); ++i) form_[i] /= g;
    shift_ /= g;
  }
  if (unit) *unit = Rational(g);
}

Rational LinearFactor::evaluate(const std::vector<Rational>& point) const {
  Rational v = -Rational(shift_);
  for (std::size_t i = 0; i < form_.dim(); ++i) v += Rational(form_[i]) * point.at(i);
  return canonical(v);
}

std::string LinearFactor::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < form_.dim(); ++i) {
    const Int& c = form_[i];
    if (c == 0) continue;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    Int mag = abs(c);
    if (mag != 1) s += mag.get_str();
    s += "t" + std::to_string(i + 1);
  }
  if (shift_ > 0)
    s += "-" + shift_.get_str();
  else if (shift_ < 0)
    s += "+" + Int(-shift_).get_str();
  return s;
}

// -------------------------------------------------------- LinearFactorProduct

void LinearFactorProduct::multiply(const LatticePoint& f, const Int& c) {
  if (f.dim() != dim_) throw validation_error("factor dimension mismatch");
  Rational unit;
  factors_.emplace_back(f, c, &unit);
  scalar_ *= unit;
}

void LinearFactorProduct::multiply(const LinearFactorProduct& other) {
  if (other.dim_ != dim_) throw validation_error("factor dimension mismatch");
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  scalar_ *= other.scalar_;
}

std::string LinearFactorProduct::to_string() const {
  std::string s;
  if (scalar_ != 1 || factors_.empty()) s = dtoric::to_string(scalar_);
  if (scalar_ == -1 && !factors_.empty()) s = "-";
  for (const LinearFactor& f : factors_) s += "(" + f.to_string() + ")";
  return s;
}

ThetaPolynomial expand(const LinearFactorProduct& p) {
  ThetaPolynomial r = ThetaPolynomial::constant(p.dim(), p.scalar());
  for (const LinearFactor& f : p.factors()) r = r * f.polynomial();
  return r;
}

LinearFactorProduct radical_of_linear_product(const LinearFactorProduct& p) {
  LinearFactorProduct r(p.dim());
  std::set<LinearFactor> seen;
  for (const LinearFactor& f : p.factors())
    if (seen.insert(f).second) r.multiply(f);
  return r;
}

// ----------------------------------------------------------------- ThetaIdeal

ThetaIdeal::ThetaIdeal(std::size_t dim) : dim_(dim) {}

ThetaIdeal::ThetaIdeal(std::size_t dim, std::vector<ThetaPolynomial> generators) : dim_(dim) {
  for (ThetaPolynomial& g : generators) {
    if (g.dim() != dim) throw validation_error("generator dimension mismatch");
    if (g.is_zero()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) != gens_.end()) continue;
    gens_.push_back(std::move(g));
  }
}

ThetaIdeal::ThetaIdeal(std::size_t dim, const std::vector<LinearFactorProduct>& generators) : dim_(dim) {
  for (const LinearFactorProduct& p : generators) {
    if (p.dim() != dim) throw validation_error("generator dimension mismatch");
    ThetaPolynomial g = expand(p);
    if (g.is_zero()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) != gens_.end()) continue;
    gens_.push_back(std::move(g));
    factored_.push_back(p);
  }
}

const std::vector<ThetaPolynomial>& ThetaIdeal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->basis = buchberger(gens_); });
  return cache_->basis;
}

std::string ThetaIdeal::to_string(bool factored_form) const {
  if (gens_.empty()) return "⟨0⟩";
  std::string s = "⟨";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += factored_form && has_factored() ? factored_[i].to_string() : gens_[i].to_string();
  }
  return s + "⟩";
}

// ------------------------------------------------------------------ Groebner

ThetaPolynomial normal_form(const ThetaPolynomial& p, const std::vector<ThetaPolynomial>& G) {
  ThetaPolynomial rest = p;
  ThetaPolynomial rem(p.dim());
  while (!rest.is_zero()) {
    const Exponent e = rest.leading_exponent();
    const Rational c = rest.leading_coefficient();
    const ThetaPolynomial* div = nullptr;
    for (const ThetaPolynomial& g : G)
      if (divides_exp(g.leading_exponent(), e)) {
        div = &g;
        break;
      }
    if (div) {
      rest.add_multiple(*div, -c / div->leading_coefficient(), exp_sub(e, div->leading_exponent()));
    } else {
      rem.add_term(e, c);
      rest.add_term(e, -c);
    }
  }
  return rem;
}

std::vector<ThetaPolynomial> buchberger(std::vector<ThetaPolynomial> generators) {
  std::vector<ThetaPolynomial> G;
  for (ThetaPolynomial& g : generators) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {ThetaPolynomial::constant(g.dim(), 1)};
    G.push_back(g.monic());
  }
  if (G.empty()) return {};
  const std::size_t dim = G.front().dim();

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pending.empty()) {
    // Normal selection: smallest lcm of leading monomials.
    auto best = pending.begin();
    Exponent best_lcm = exp_lcm(G[best->first].leading_exponent(), G[best->second].leading_exponent());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponent l = exp_lcm(G[it->first].leading_exponent(), G[it->second].leading_exponent());
      if (grevlex_greater(best_lcm, l)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Exponent& li = G[i].leading_exponent();
    const Exponent& lj = G[j].leading_exponent();
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides_exp(G[k].leading_exponent(), best_lcm) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;

    ThetaPolynomial s(dim);
    s.add_multiple(G[i], 1, exp_sub(best_lcm, li));
    s.add_multiple(G[j], -1, exp_sub(best_lcm, lj));
    ThetaPolynomial r = normal_form(s, G);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {ThetaPolynomial::constant(dim, 1)};
    G.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pending.emplace(k, G.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<ThetaPolynomial> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
      if (a == b || !divides_exp(G[b].leading_exponent(), G[a].leading_exponent())) continue;
      redundant = G[b].leading_exponent() != G[a].leading_exponent() || b < a;
    }
    if (!redundant) minimal.push_back(G[a]);
  }
  std::vector<ThetaPolynomial> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<ThetaPolynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    reduced.push_back(normal_form(minimal[a], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const ThetaPolynomial& x, const ThetaPolynomial& y) {
    return grevlex_greater(x.leading_exponent(), y.leading_exponent());
  });
  return reduced;
}

bool ideal_member(const ThetaPolynomial& p, const ThetaIdeal& I) {
  if (p.is_zero()) return true;
  return normal_form(p, I.groebner()).is_zero();
}

bool ideal_contains(const ThetaIdeal& big, const ThetaIdeal& small) {
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const ThetaPolynomial& g) { return ideal_member(g, big); });
}

bool ideal_equal(const ThetaIdeal& I, const ThetaIdeal& J) {
  if (I.dim() != J.dim()) return false;
  return I.groebner() == J.groebner();
}

// ------------------------------------------------- nonmembership certificate

namespace {

struct Equation {
  std::vector<Rational> coeffs;
  Rational rhs;
};

// Solution set x0 + span(dirs) of a rational linear system.
struct AffineSpace {
  std::vector<Rational> x0;
  std::vector<std::vector<Rational>> dirs;
};

std::optional<AffineSpace> solve_system(const std::vector<Equation>& eqs, std::size_t dim) {
  std::vector<std::vector<Rational>> m;
  for (const Equation& e : eqs) {
    std::vector<Rational> row = e.coeffs;
    row.push_back(e.rhs);
    m.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < dim && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Rational inv = Rational(1) / m[row][c];
    for (Rational& v : m[row]) v = canonical(v * inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t cc = 0; cc <= dim; ++cc) m[r][cc] = canonical(m[r][cc] - f * m[row][cc]);
    }
    pivot_cols.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < m.size(); ++r)
    if (m[r][dim] != 0) return std::nullopt;

  AffineSpace s;
  s.x0.assign(dim, Rational(0));
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) s.x0[pivot_cols[r]] = m[r][dim];
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> d(dim, Rational(0));
    d[f] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) d[pivot_cols[r]] = -m[r][f];
    s.dirs.push_back(std::move(d));
  }
  return s;
}

bool vanishes_on(const LinearFactor& f, const AffineSpace& s) {
  if (f.evaluate(s.x0) != 0) return false;
  for (const auto& d : s.dirs) {
    Rational v = 0;
    for (std::size_t i = 0; i < d.size(); ++i) v += Rational(f.form()[i]) * d[i];
    if (v != 0) return false;
  }
  return true;
}

Equation equation_of(const LinearFactor& f) {
  Equation e;
  for (const Int& v : f.form()) e.coeffs.emplace_back(v);
  e.rhs = Rational(f.shift());
  return e;
}

}  // namespace

std::optional<std::vector<Rational>> nonmembership_certificate(const ThetaPolynomial& p, const ThetaIdeal& I) {
  if (p.is_zero() || !I.has_factored()) return std::nullopt;
  const std::size_t dim = I.dim();
  const auto& gens = I.factored();
  const unsigned grid = p.total_degree();

  std::vector<Equation> eqs;
  std::function<std::optional<std::vector<Rational>>(std::size_t, const AffineSpace&)> dfs =
      [&](std::size_t k, const AffineSpace& space) -> std::optional<std::vector<Rational>> {
    if (k == gens.size()) {
      // p restricted to the space has degree <= grid, so this grid detects it.
      std::vector<unsigned> t(space.dirs.size(), 0);
      for (;;) {
        std::vector<Rational> x = space.x0;
        for (std::size_t a = 0; a < t.size(); ++a)
          for (std::size_t i = 0; i < dim; ++i) x[i] += space.dirs[a][i] * t[a];
        for (Rational& v : x) v.canonicalize();
        if (p.evaluate(x) != 0) return x;
        std::size_t a = 0;
        while (a < t.size() && t[a] == grid) t[a++] = 0;
        if (a == t.size()) return std::nullopt;
        ++t[a];
      }
    }
    const auto& factors = gens[k].factors();
    if (std::any_of(factors.begin(), factors.end(), [&](const LinearFactor& f) { return vanishes_on(f, space); }))
      return dfs(k + 1, space);
    std::set<LinearFactor> tried;
    for (const LinearFactor& f : factors) {
      if (!tried.insert(f).second) continue;
      eqs.push_back(equation_of(f));
      auto next = solve_system(eqs, dim);
      std::optional<std::vector<Rational>> hit;
      if (next) hit = dfs(k + 1, *next);
      eqs.pop_back();
      if (hit) return hit;
    }
    return std::nullopt;
  };

  auto whole = solve_system({}, dim);
  return dfs(0, *whole);
}

std::string format_point(const std::vector<Rational>& point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) s += ", ";
    s += dtoric::to_string(point[i]);
  }
  return s + ")";
}

}  // namespace dtoric
