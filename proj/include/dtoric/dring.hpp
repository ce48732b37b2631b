#pragma once

// Graded pieces of rings of differential operators on a normal affine
// semigroup ring R, the idealizer of a radical monomial ideal, the operators
// into it, and the Gorenstein comparison of omega D(R) with D(R, omega).

#include <dtoric/cone.hpp>
#include <dtoric/theta.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dtoric {

// t^m * ideal inside D(k[Z^d]).
struct GradedOperatorPiece {
  LatticePoint m;
  ThetaIdeal ideal;

  // "t^(-1,-1) * ⟨(t2)(2t1-t2)⟩"
  std::string to_string(bool factored_form = true) const;
};

// J = intersection of the primes P_tau over the listed faces tau.
class RadicalMonomialIdealSpec {
 public:
  // Faces are given by facet index sets, closed under implication and
  // deduplicated. Throws on an empty list, an empty set (the whole cone),
  // or an index out of range.
  RadicalMonomialIdealSpec(const SemigroupPresentation& P, const std::vector<std::set<std::size_t>>& faces);

  // The interior ideal: one prime per facet.
  static RadicalMonomialIdealSpec omega(const SemigroupPresentation& P);
  // The prime of a single facet.
  static RadicalMonomialIdealSpec facet(const SemigroupPresentation& P, std::size_t facet_id);

  const std::vector<FaceDescriptor>& faces() const noexcept { return faces_; }
  // Number of tuples in K_J.
  std::size_t tuple_count() const;

  // t^a lies in J, for a in the semigroup.
  bool contains(const SemigroupPresentation& P, const LatticePoint& a) const;

 private:
  std::vector<FaceDescriptor> faces_;
};

struct DringOptions {
  // Refuse presentations without normality evidence.
  bool strict_normality = true;
};

LinearFactorProduct g_product(const SemigroupPresentation& P, const LatticePoint& m);

// F(theta) + F(m)
LinearFactor h_form(const SupportForm& F, const LatticePoint& m);

GradedOperatorPiece d_piece(const SemigroupPresentation& P, const LatticePoint& m, const DringOptions& opt = {});
GradedOperatorPiece idealizer_piece(const SemigroupPresentation& P, const RadicalMonomialIdealSpec& J,
                                    const LatticePoint& m, const DringOptions& opt = {});
GradedOperatorPiece d_into_piece(const SemigroupPresentation& P, const RadicalMonomialIdealSpec& J,
                                 const LatticePoint& m, const DringOptions& opt = {});

struct QuotientPiece {
  GradedOperatorPiece numerator;
  GradedOperatorPiece denominator;
  bool nonzero = false;
  std::optional<ThetaPolynomial> witness;
  std::optional<LinearFactorProduct> witness_factored;
  // Point where the denominator vanishes and the witness does not, when found.
  std::optional<std::vector<Rational>> certificate;
};

QuotientPiece quotient_piece(const SemigroupPresentation& P, const RadicalMonomialIdealSpec& J, const LatticePoint& m,
                             const DringOptions& opt = {});

// < G_{m - c_j} : j >
GradedOperatorPiece omega_times_d_piece(const SemigroupPresentation& P, const std::vector<LatticePoint>& omega_gens,
                                        const LatticePoint& m, const DringOptions& opt = {});

// Integer c with F_i(c) = 1 for every facet.
std::optional<LatticePoint> gorenstein_certificate(const SemigroupPresentation& P);

struct DegreeComparison {
  LatticePoint m;
  bool equal = false;
  // Always expected: omega D(R)_m is contained in D(R, omega)_m.
  bool contained = false;
  // A generator of D(R, omega)_m outside omega D(R)_m, when unequal.
  std::optional<LinearFactorProduct> witness;
  std::optional<std::vector<Rational>> certificate;
};

struct GorensteinReport {
  bool is_gorenstein = false;
  std::optional<LatticePoint> certificate;
  std::vector<LatticePoint> omega_generators;
  bool omega_complete = true;
  Int omega_bound = 0;
  std::vector<DegreeComparison> operator_check;

  // Every degree in the box compared equal.
  bool box_equal() const;
  // The certificate test and the operator test agree.
  bool consistent() const { return is_gorenstein == box_equal(); }
};

// Compares omega D(R)_m with D(R, omega)_m for every m with lo <= m_i <= hi,
// plus m = 0.
GorensteinReport gorenstein_report(const SemigroupPresentation& P, long lo, long hi, const DringOptions& opt = {});

// Every integer point of [lo, hi]^d in lexicographic order.
std::vector<LatticePoint> degree_box(std::size_t dim, long lo, long hi);

}  // namespace dtoric
