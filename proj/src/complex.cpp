#include <dtoric/complex.hpp>
#include <dtoric/error.hpp>

#include <algorithm>

namespace dtoric {

namespace {

IntMatrix stacked_generators(std::size_t dim, const std::vector<ConeInput>& cones) {
  std::vector<LatticePoint> cols;
  for (const ConeInput& c : cones)
    for (const LatticePoint& g : c.generators.columns()) cols.push_back(g);
  return IntMatrix::from_columns(cols, dim);
}

}  // namespace

MonoidalComplex::MonoidalComplex(std::size_t ambient_dim, std::vector<ConeInput> cones,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& containments,
                                 std::optional<LatticePoint> grading, long window)
    : dim_(ambient_dim) {
  if (cones.empty()) throw validation_error("complex has no cones");
  for (const ConeInput& c : cones) {
    if (c.generators.rows() != dim_ && c.generators.cols() != 0)
      throw validation_error("cone '" + c.name + "' has the wrong ambient dimension");
    for (const LatticePoint& g : c.generators.columns())
      if (g.is_zero()) throw validation_error("cone '" + c.name + "' has a zero generator");
  }
  if (!grading) {
    IntMatrix all = stacked_generators(dim_, cones);
    grading = all.cols() == 0 ? LatticePoint::unit(dim_, 0) : find_grading(all, static_cast<int>(4 * dim_));
    if (!grading) throw validation_error("no common grading for the complex");
  }
  grading_ = *grading;
  if (grading_.dim() != dim_) throw validation_error("grading dimension mismatch");

  for (ConeInput& c : cones) {
    names_.push_back(c.name);
    IntMatrix g = c.generators.cols() == 0 ? IntMatrix(dim_, 0) : std::move(c.generators);
    monoids_.emplace_back(std::move(g), grading_);
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw validation_error("duplicate cone name '" + names_[i] + "'");

  // Transitive closure of the containment relation.
  const std::size_t n = monoids_.size();
  below_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) below_[i].insert(i);
  for (const auto& [s, l] : containments) {
    if (s >= n || l >= n) throw validation_error("containment refers to an unknown cone");
    below_[s].insert(l);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::set<std::size_t> add;
      for (std::size_t j : below_[i])
        for (std::size_t k : below_[j])
          if (!below_[i].count(k)) add.insert(k);
      if (!add.empty()) {
        below_[i].insert(add.begin(), add.end());
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : below_[i])
      if (j != i && below_[j].count(i)) throw validation_error("containment relation has a cycle");

  // M_s = s ∩ M_l on the window.
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t l : below_[s]) {
      if (l == s) continue;
      for (const LatticePoint& g : monoids_[s].generators())
        if (!monoids_[l].contains(g))
          throw validation_error("generator " + g.to_string() + " of '" + names_[s] + "' is not in '" + names_[l] + "'");
      for (const LatticePoint& a : monoids_[l].elements_up_to(window)) {
        if (in_real_cone(monoids_[s].generator_matrix(), a) && !monoids_[s].contains(a))
          throw validation_error("monoid of '" + names_[s] + "' is not the restriction of '" + names_[l] + "' at " +
                                 a.to_string());
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    if (below_[i].size() == 1) maximal_.push_back(i);

  for (std::size_t x = 0; x < maximal_.size(); ++x) {
    for (std::size_t y = x + 1; y < maximal_.size(); ++y) {
      const std::size_t j = maximal_[x], k = maximal_[y];
      std::set<LatticePoint> common;
      for (const LatticePoint& a : monoids_[j].elements_up_to(window))
        if (monoids_[k].contains(a)) common.insert(a);
      std::optional<std::size_t> found;
      for (std::size_t i = 0; i < n; ++i) {
        if (!below_[i].count(j) || !below_[i].count(k)) continue;
        auto elems = monoids_[i].elements_up_to(window);
        if (std::set<LatticePoint>(elems.begin(), elems.end()) == common) {
          found = i;
          break;
        }
      }
      if (!found && common.size() > 1)
        throw validation_error("intersection of '" + names_[j] + "' and '" + names_[k] + "' is not a listed cone");
      intersections_[{j, k}] = found;
      intersections_[{k, j}] = found;
    }
  }
}

std::optional<std::size_t> MonoidalComplex::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> MonoidalComplex::intersection(std::size_t i, std::size_t j) const {
  if (i == j) return i;
  auto it = intersections_.find({i, j});
  if (it == intersections_.end()) throw validation_error("intersection requested for non-maximal cones");
  return it->second;
}

bool MonoidalComplex::in_all(const std::vector<std::size_t>& cones, const LatticePoint& a) const {
  return std::all_of(cones.begin(), cones.end(), [&](std::size_t i) { return monoids_[i].contains(a); });
}

bool MonoidalComplex::in_support(const LatticePoint& a) const {
  return std::any_of(maximal_.begin(), maximal_.end(), [&](std::size_t i) { return monoids_[i].contains(a); });
}

std::vector<LatticePoint> MonoidalComplex::generators() const {
  std::set<LatticePoint> all;
  for (const AffineMonoid& M : monoids_) all.insert(M.generators().begin(), M.generators().end());
  return {all.begin(), all.end()};
}

std::vector<LatticePoint> MonoidalComplex::support_up_to(const Int& bound) const {
  std::set<LatticePoint> all;
  for (std::size_t i : maximal_) {
    auto e = monoids_[i].elements_up_to(bound);
    all.insert(e.begin(), e.end());
  }
  std::vector<LatticePoint> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [&](const LatticePoint& a, const LatticePoint& b) {
    Int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

std::optional<LatticePoint> tfr_multiply(const MonoidalComplex& C, const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t i : C.maximal())
    if (C.in_cone(i, a) && C.in_cone(i, b)) return a + b;
  return std::nullopt;
}

TfrElement project_to_cone(const MonoidalComplex& C, std::size_t tau, const TfrElement& f) {
  TfrElement out;
  for (const auto& [a, c] : f)
    if (c != 0 && C.in_cone(tau, a)) out.emplace(a, c);
  return out;
}

// --------------------------------------------------------- simplicial complex

SimplicialComplex::SimplicialComplex(std::size_t vertices, std::vector<std::set<std::size_t>> facets)
    : n_(vertices), facets_(std::move(facets)) {
  if (facets_.empty()) throw validation_error("simplicial complex has no facets");
  for (const auto& F : facets_) {
    if (F.empty()) throw validation_error("empty facet");
    for (std::size_t v : F)
      if (v >= n_) throw validation_error("vertex " + std::to_string(v + 1) + " out of range");
  }
  for (std::size_t i = 0; i < facets_.size(); ++i)
    for (std::size_t j = 0; j < facets_.size(); ++j)
      if (i != j && std::includes(facets_[j].begin(), facets_[j].end(), facets_[i].begin(), facets_[i].end()))
        throw validation_error("facets " + format_vertex_set(facets_[i]) + " and " + format_vertex_set(facets_[j]) +
                               " are comparable");
}

bool SimplicialComplex::is_face(const std::set<std::size_t>& s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const std::set<std::size_t>& F) { return std::includes(F.begin(), F.end(), s.begin(), s.end()); });
}

std::vector<std::set<std::size_t>> SimplicialComplex::faces() const {
  std::set<std::set<std::size_t>> all;
  for (const auto& F : facets_) {
    std::vector<std::size_t> v(F.begin(), F.end());
    for (std::size_t mask = 0; mask < (std::size_t{1} << v.size()); ++mask) {
      std::set<std::size_t> s;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mask & (std::size_t{1} << i)) s.insert(v[i]);
      all.insert(std::move(s));
    }
  }
  std::vector<std::set<std::size_t>> out(all.begin(), all.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

MonoidalComplex sr_to_complex(const SimplicialComplex& D) {
  const std::size_t d = D.vertices() + 1;
  const auto faces = D.faces();
  std::vector<ConeInput> cones;
  for (const auto& F : faces) {
    std::vector<LatticePoint> cols;
    for (std::size_t v : F) {
      LatticePoint g(d);
      g[v] = 1;
      g[d - 1] = 1;
      cols.push_back(g);
    }
    cones.push_back({format_vertex_set(F), IntMatrix::from_columns(cols, d)});
  }
  std::vector<std::pair<std::size_t, std::size_t>> containments;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j)
      if (i != j && std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end()))
        containments.emplace_back(i, j);
  return MonoidalComplex(d, std::move(cones), containments, LatticePoint::unit(d, d - 1), 3);
}

MonomialOperator sr_operator(const SimplicialComplex& D, const LatticePoint& a, const LatticePoint& b) {
  const std::size_t n = D.vertices(), d = n + 1;
  if (a.dim() != n || b.dim() != n) throw validation_error("operator exponents need one entry per vertex");
  MonomialOperator op{LatticePoint(d), ThetaPolynomial::constant(d, 1)};
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < 0 || b[i] < 0) throw validation_error("operator exponents must be nonnegative");
    Int shift = a[i] - b[i];
    op.degree[i] += shift;
    op.degree[d - 1] += shift;
    for (Int k = 0; k < b[i]; ++k) {
      LatticePoint f(d);
      f[i] = 1;
      op.symbol = op.symbol * ThetaPolynomial::linear(f, k);
    }
  }
  return op;
}

std::string format_vertex_set(const std::set<std::size_t>& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t v : s) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace dtoric
