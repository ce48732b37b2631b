#pragma once

// Differential operators on toric face rings assembled from operators on the
// maximal cones: admissibility of homogeneous components, compatibility of
// tuples, the inclusion-exclusion lift, and the Stanley-Reisner criterion.

#include <dtoric/complex.hpp>
#include <dtoric/oracle.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dtoric {

// One entry per maximal cone, in C.maximal() order; an empty component is
// the zero operator.
struct OperatorTuple {
  std::vector<std::vector<HomogeneousTerm>> components;

  static OperatorTuple zero(const MonoidalComplex& C);
};

struct AdmissibilityResult {
  bool admissible = true;
  std::string violation;  // first failing condition, empty when admissible
};

// Conditions (i) and (ii) for t^b q(theta) on the maximal cone sigma,
// checked at every a in M_sigma of degree <= bound.
AdmissibilityResult homogeneous_component_admissible(const MonoidalComplex& C, std::size_t sigma, const LatticePoint& b,
                                                     const ThetaPolynomial& q, const Int& bound);

struct TupleCheckResult {
  bool passed = true;
  bool condition_a = true;  // restrictions agree on shared faces
  bool condition_b = true;  // each component is admissible
  std::vector<std::string> diagnostics;
};

TupleCheckResult tuple_check(const MonoidalComplex& C, const OperatorTuple& T, const Int& bound);

// The operator sum over nonempty sets lambda of maximal cones of
// (-1)^{|lambda|-1} inc . rho_lambda . proj, on the truncation of k[M] at
// `bound`. Throws "incompatible tuple" when tuple_check fails.
TruncatedAction lift_tuple(const MonoidalComplex& C, const TruncatedAlgebra& T, const OperatorTuple& tuple,
                           const Int& bound);

// For every facet F of D: supp(a) is not inside F, or supp(b) is.
bool sr_generator_admissible(const SimplicialComplex& D, const LatticePoint& a, const LatticePoint& b);

}  // namespace dtoric
