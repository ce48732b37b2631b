#pragma once

// Brute-force ground truth on finite windows of monomial bases: operators as
// linear maps, the inductive order test D^i, the retract conditions for toric
// face rings, and mapping contracts into monomial ideals.

#include <dtoric/complex.hpp>
#include <dtoric/theta.hpp>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dtoric {

// Monomials of degree <= bound of a semigroup ring or a toric face ring.
class TruncatedAlgebra {
 public:
  static TruncatedAlgebra semigroup(const AffineMonoid& M, const Int& bound);
  static TruncatedAlgebra complex(const MonoidalComplex& C, const Int& bound);

  const std::vector<LatticePoint>& basis() const noexcept { return basis_; }
  const Int& bound() const noexcept { return bound_; }
  const LatticePoint& grading() const noexcept { return grading_; }
  Int degree(const LatticePoint& a) const { return grading_.dot(a); }
  const std::vector<LatticePoint>& generators() const noexcept { return generators_; }
  Int max_generator_degree() const;

  std::optional<std::size_t> index(const LatticePoint& a) const;
  // t^a is a nonzero monomial of the ring (no degree limit).
  bool contains(const LatticePoint& a) const { return member_(a); }
  // t^a t^b, or nullopt for zero.
  std::optional<LatticePoint> multiply(const LatticePoint& a, const LatticePoint& b) const { return mult_(a, b); }

 private:
  std::vector<LatticePoint> basis_;
  std::map<LatticePoint, std::size_t> index_;
  std::vector<LatticePoint> generators_;
  LatticePoint grading_;
  Int bound_ = 0;
  std::function<bool(const LatticePoint&)> member_;
  std::function<std::optional<LatticePoint>(const LatticePoint&, const LatticePoint&)> mult_;
};

// A linear map given on the basis monomials of degree <= domain_bound.
struct TruncatedAction {
  std::vector<TfrElement> columns;  // parallel to the algebra basis
  Int domain_bound = 0;
  // Basis monomials whose image left the ring with a nonzero coefficient.
  std::vector<LatticePoint> escapes;

  bool escaped() const { return !escapes.empty(); }
  TruncatedAction& operator+=(const TruncatedAction& other);
};

struct HomogeneousTerm {
  LatticePoint degree;  // b
  ThetaPolynomial symbol;  // q
};

// t^m q(theta): t^a -> q(a) t^{a+m}; images outside the ring are dropped and
// recorded as escapes when the coefficient is nonzero.
TruncatedAction realize(const TruncatedAlgebra& T, const LatticePoint& m, const ThetaPolynomial& q);
TruncatedAction realize(const TruncatedAlgebra& T, const std::vector<HomogeneousTerm>& terms);

// Image of basis element a as a formal sum; the algebra must hold a in the domain.
const TfrElement& apply(const TruncatedAlgebra& T, const TruncatedAction& act, const LatticePoint& a);

// The action lies in D^i on the window. Iterated commutators are taken
// against the algebra generators; each one shrinks the domain by the
// generator's degree. Throws a resource error when the window cannot hold
// i commutators.
bool order_check(const TruncatedAlgebra& T, const TruncatedAction& act, unsigned i);

// Degree below which an order-i result is certified.
Int certified_degree(const TruncatedAlgebra& T, const TruncatedAction& act, unsigned i);

// Every domain monomial with source(a) maps into target or to zero.
bool maps_into(const TruncatedAlgebra& T, const TruncatedAction& act,
               const std::function<bool(const LatticePoint&)>& source,
               const std::function<bool(const LatticePoint&)>& target);

struct RetractCheck {
  bool condition1 = true;  // every component lies in D^i of its retract
  bool condition2 = true;  // proj_l(f) = 0 implies proj_l(act f) = 0
  std::string diagnostic;

  bool passed() const { return condition1 && condition2; }
};

// The two retract conditions over the maximal cones of C, for an action on
// the truncation of k[M] given by TruncatedAlgebra::complex(C, B).
RetractCheck retract_condition_check(const MonoidalComplex& C, const TruncatedAlgebra& T, const TruncatedAction& act,
                                     unsigned order);

}  // namespace dtoric
