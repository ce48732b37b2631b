#pragma once

// Monoidal complexes, their toric face rings, and simplicial complexes with
// the cone construction that turns a Stanley-Reisner ring into a toric
// face ring.

#include <dtoric/cone.hpp>
#include <dtoric/theta.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dtoric {

// A formal sum of monomials t^a.
using TfrElement = std::map<LatticePoint, Rational>;

struct ConeInput {
  std::string name;
  IntMatrix generators;  // d x k, may be rank deficient or empty
};

class MonoidalComplex {
 public:
  // `containments` lists pairs (smaller, larger) by cone index. Validation
  // checks M_s = s ∩ M_l on window points of degree <= `window`, and that
  // the intersection of any two maximal cones is a listed cone or {0}.
  MonoidalComplex(std::size_t ambient_dim, std::vector<ConeInput> cones,
                  const std::vector<std::pair<std::size_t, std::size_t>>& containments,
                  std::optional<LatticePoint> grading = std::nullopt, long window = 6);

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return monoids_.size(); }
  const AffineMonoid& monoid(std::size_t i) const { return monoids_.at(i); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const LatticePoint& grading() const noexcept { return grading_; }
  Int degree(const LatticePoint& a) const { return grading_.dot(a); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  // Cone i is contained in cone j (reflexive, transitively closed).
  bool contained(std::size_t i, std::size_t j) const { return below_.at(i).count(j) != 0; }
  const std::vector<std::size_t>& maximal() const noexcept { return maximal_; }
  // The listed cone equal to the intersection of two maximal cones, or
  // nullopt when the intersection is {0} and no zero cone is listed.
  std::optional<std::size_t> intersection(std::size_t i, std::size_t j) const;

  bool in_cone(std::size_t i, const LatticePoint& a) const { return monoids_.at(i).contains(a); }
  // a lies in the intersection of the monoids of the maximal cones in `cones`.
  bool in_all(const std::vector<std::size_t>& cones, const LatticePoint& a) const;
  bool in_support(const LatticePoint& a) const;
  // Union of all cone generators, deduplicated and sorted.
  std::vector<LatticePoint> generators() const;
  // Elements of |M| of degree <= bound, sorted by (degree, lex).
  std::vector<LatticePoint> support_up_to(const Int& bound) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<AffineMonoid> monoids_;
  LatticePoint grading_;
  std::vector<std::set<std::size_t>> below_;  // below_[i] = cones containing i
  std::vector<std::size_t> maximal_;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<std::size_t>> intersections_;
};

// t^a * t^b, or nullopt (zero) when no cone holds both exponents.
std::optional<LatticePoint> tfr_multiply(const MonoidalComplex& C, const LatticePoint& a, const LatticePoint& b);

// Kills the monomials outside M_tau.
TfrElement project_to_cone(const MonoidalComplex& C, std::size_t tau, const TfrElement& f);

class SimplicialComplex {
 public:
  // Vertices are 0-based; facets must be nonempty and pairwise incomparable.
  SimplicialComplex(std::size_t vertices, std::vector<std::set<std::size_t>> facets);

  std::size_t vertices() const noexcept { return n_; }
  const std::vector<std::set<std::size_t>>& facets() const noexcept { return facets_; }
  // Every face, the empty face included, by (size, lex).
  std::vector<std::set<std::size_t>> faces() const;
  bool is_face(const std::set<std::size_t>& s) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::set<std::size_t>> facets_;
};

// Cones C_F spanned by e_i + e_d over the faces F, in Z^{n+1}.
MonoidalComplex sr_to_complex(const SimplicialComplex& D);

// The monomial operator t^a d^b of the polynomial ring, in the coordinates
// of sr_to_complex: multidegree sum (a_i - b_i)(e_i + e_d) and symbol
// prod_i prod_{k<b_i} (theta_i - k).
struct MonomialOperator {
  LatticePoint degree;
  ThetaPolynomial symbol;
};
MonomialOperator sr_operator(const SimplicialComplex& D, const LatticePoint& a, const LatticePoint& b);

// "{1,2}" with 1-based vertices.
std::string format_vertex_set(const std::set<std::size_t>& s);

}  // namespace dtoric
