#include <dtoric/dring.hpp>
#include <dtoric/error.hpp>

#include <algorithm>
#include <functional>

namespace dtoric {

namespace {

void require_normal(const SemigroupPresentation& P, const DringOptions& opt) {
  const NormalityStatus& s = P.normality();
  if (s.kind == NormalityStatus::Kind::NotNormal)
    throw validation_error("semigroup is not normal: " + s.describe());
  if (opt.strict_normality && !s.usable()) throw validation_error("normality unknown");
}

void require_dim(const SemigroupPresentation& P, const LatticePoint& m) {
  if (m.dim() != P.dim()) throw validation_error("degree has dimension " + std::to_string(m.dim()) + ", expected " +
                                                 std::to_string(P.dim()));
}

// Shared construction of the idealizer (strict) and D(R,J) (weak) pieces.
GradedOperatorPiece tuple_piece(const SemigroupPresentation& P, const RadicalMonomialIdealSpec& J,
                                const LatticePoint& m, bool weak) {
  require_dim(P, m);
  const LinearFactorProduct G = g_product(P, m);
  const auto& faces = J.faces();
  std::vector<std::vector<std::size_t>> choices;
  for (const FaceDescriptor& f : faces)
    choices.emplace_back(f.vanishing_facets.begin(), f.vanishing_facets.end());

  std::vector<LinearFactorProduct> gens;
  std::vector<std::size_t> pick(faces.size(), 0);
  for (;;) {
    LinearFactorProduct H(P.dim());
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const SupportForm& F = P.facets()[choices[i][pick[i]]];
      Int v = F(m);
      if (v < 0 || (weak && v == 0)) H.multiply(h_form(F, m));
    }
    LinearFactorProduct g = G;
    g.multiply(radical_of_linear_product(H));
    gens.push_back(std::move(g));

    std::size_t i = faces.size();
    while (i > 0 && pick[i - 1] + 1 == choices[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
  return {m, ThetaIdeal(P.dim(), gens)};
}

}  // namespace

std::string GradedOperatorPiece::to_string(bool factored_form) const {
  return "t^" + m.to_string() + " * " + ideal.to_string(factored_form);
}

// ---------------------------------------------------------- ideal specification

RadicalMonomialIdealSpec::RadicalMonomialIdealSpec(const SemigroupPresentation& P,
                                                   const std::vector<std::set<std::size_t>>& faces) {
  if (faces.empty()) throw validation_error("ideal needs at least one face");
  std::set<FaceDescriptor> seen;
  for (const auto& ids : faces) {
    if (ids.empty()) throw validation_error("the whole cone is not a proper face");
    for (std::size_t i : ids)
      if (i >= P.facets().size()) throw validation_error("facet index " + std::to_string(i + 1) + " out of range");
    FaceDescriptor f = face_closure(P, ids);
    if (seen.insert(f).second) faces_.push_back(std::move(f));
  }
}

RadicalMonomialIdealSpec RadicalMonomialIdealSpec::omega(const SemigroupPresentation& P) {
  std::vector<std::set<std::size_t>> faces;
  for (const SupportForm& F : P.facets()) faces.push_back({F.facet_id});
  return RadicalMonomialIdealSpec(P, faces);
}

RadicalMonomialIdealSpec RadicalMonomialIdealSpec::facet(const SemigroupPresentation& P, std::size_t facet_id) {
  return RadicalMonomialIdealSpec(P, {{facet_id}});
}

std::size_t RadicalMonomialIdealSpec::tuple_count() const {
  std::size_t n = 1;
  for (const FaceDescriptor& f : faces_) n *= f.vanishing_facets.size();
  return n;
}

bool RadicalMonomialIdealSpec::contains(const SemigroupPresentation& P, const LatticePoint& a) const {
  return std::all_of(faces_.begin(), faces_.end(), [&](const FaceDescriptor& f) {
    return std::any_of(f.vanishing_facets.begin(), f.vanishing_facets.end(),
                       [&](std::size_t i) { return P.facets()[i](a) > 0; });
  });
}

// ------------------------------------------------------------------ formulas

LinearFactorProduct g_product(const SemigroupPresentation& P, const LatticePoint& m) {
  require_dim(P, m);
  LinearFactorProduct g(P.dim());
  for (const SupportForm& F : P.facets()) {
    Int v = F(m);
    for (Int i = 0; i < -v; ++i) g.multiply(F.normal, i);
  }
  return g;
}

LinearFactor h_form(const SupportForm& F, const LatticePoint& m) {
  if (F.normal.dim() != m.dim()) throw validation_error("degree dimension mismatch");
  return LinearFactor(F.normal, -F(m));
}

GradedOperatorPiece d_piece(const SemigroupPresentation& P, const LatticePoint& m, const DringOptions& opt) {
  require_normal(P, opt);
  return {m, ThetaIdeal(P.dim(), std::vector<LinearFactorProduct>{g_product(P, m)})};
}

GradedOperatorPiece idealizer_piece(const SemigroupPresentation& P, const RadicalMonomialIdealSpec& J,
                                    const LatticePoint& m, const DringOptions& opt) {
  require_normal(P, opt);
  return tuple_piece(P, J, m, false);
}

GradedOperatorPiece d_into_piece(const SemigroupPresentation& P, const RadicalMonomialIdealSpec& J,
                                 const LatticePoint& m, const DringOptions& opt) {
  require_normal(P, opt);
  return tuple_piece(P, J, m, true);
}

QuotientPiece quotient_piece(const SemigroupPresentation& P, const RadicalMonomialIdealSpec& J, const LatticePoint& m,
                             const DringOptions& opt) {
  QuotientPiece q;
  q.numerator = idealizer_piece(P, J, m, opt);
  q.denominator = d_into_piece(P, J, m, opt);
  const ThetaIdeal& num = q.numerator.ideal;
  const ThetaIdeal& den = q.denominator.ideal;
  for (std::size_t k = 0; k < num.generators().size(); ++k) {
    const ThetaPolynomial& g = num.generators()[k];
    auto point = nonmembership_certificate(g, den);
    if (point || !ideal_member(g, den)) {
      q.nonzero = true;
      q.witness = g;
      q.witness_factored = num.factored()[k];
      q.certificate = point;
      break;
    }
  }
  return q;
}

GradedOperatorPiece omega_times_d_piece(const SemigroupPresentation& P, const std::vector<LatticePoint>& omega_gens,
                                        const LatticePoint& m, const DringOptions& opt) {
  require_normal(P, opt);
  require_dim(P, m);
  std::vector<LinearFactorProduct> gens;
  for (const LatticePoint& c : omega_gens) gens.push_back(g_product(P, m - c));
  return {m, ThetaIdeal(P.dim(), gens)};
}

std::optional<LatticePoint> gorenstein_certificate(const SemigroupPresentation& P) {
  std::vector<LatticePoint> rows;
  for (const SupportForm& F : P.facets()) rows.push_back(F.normal);
  IntMatrix M = IntMatrix::from_rows(rows, P.dim());
  LatticePoint ones(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) ones[i] = 1;
  auto sol = solve_diophantine(M, ones);
  if (!sol) return std::nullopt;
  return sol->particular;
}

bool GorensteinReport::box_equal() const {
  return std::all_of(operator_check.begin(), operator_check.end(), [](const DegreeComparison& c) { return c.equal; });
}

std::vector<LatticePoint> degree_box(std::size_t dim, long lo, long hi) {
  std::vector<LatticePoint> out;
  if (lo > hi) return out;
  LatticePoint cur(dim);
  for (std::size_t i = 0; i < dim; ++i) cur[i] = lo;
  for (;;) {
    out.push_back(cur);
    std::size_t i = dim;
    while (i > 0 && cur[i - 1] == hi) cur[--i] = lo;
    if (i == 0) break;
    cur[i - 1] += 1;
  }
  return out;
}

GorensteinReport gorenstein_report(const SemigroupPresentation& P, long lo, long hi, const DringOptions& opt) {
  require_normal(P, opt);
  GorensteinReport r;
  r.certificate = gorenstein_certificate(P);
  r.is_gorenstein = r.certificate.has_value();
  InteriorGenerators om = interior_ideal_generators(P);
  r.omega_generators = om.generators;
  r.omega_complete = om.complete;
  r.omega_bound = om.bound;
  const RadicalMonomialIdealSpec omega = RadicalMonomialIdealSpec::omega(P);

  std::vector<LatticePoint> degrees = degree_box(P.dim(), lo, hi);
  const LatticePoint zero = LatticePoint::zero(P.dim());
  if (std::find(degrees.begin(), degrees.end(), zero) == degrees.end()) degrees.insert(degrees.begin(), zero);

  for (const LatticePoint& m : degrees) {
    GradedOperatorPiece lhs = omega_times_d_piece(P, r.omega_generators, m, opt);
    GradedOperatorPiece rhs = d_into_piece(P, omega, m, opt);
    DegreeComparison c;
    c.m = m;
    c.contained = ideal_contains(rhs.ideal, lhs.ideal);
    c.equal = c.contained && ideal_contains(lhs.ideal, rhs.ideal);
    if (!c.equal) {
      for (std::size_t k = 0; k < rhs.ideal.generators().size(); ++k) {
        const ThetaPolynomial& g = rhs.ideal.generators()[k];
        if (ideal_member(g, lhs.ideal)) continue;
        c.witness = rhs.ideal.factored()[k];
        c.certificate = nonmembership_certificate(g, lhs.ideal);
        break;
      }
    }
    r.operator_check.push_back(std::move(c));
  }
  return r;
}

}  // namespace dtoric
