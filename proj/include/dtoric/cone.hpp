#pragma once

// Polyhedral and lattice geometry of a finitely generated monoid N A inside
// Z^d: gradings, membership, support functions of facets, faces, normality
// and the interior ideal.

#include <dtoric/linalg.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dtoric {

// Monoid generated by the columns of a d x k matrix, positively graded by w.
// No rank or lattice requirement; the tfr module uses lower-dimensional ones.
class AffineMonoid {
 public:
  AffineMonoid() = default;
  // Throws unless w . g >= 1 for every generator g.
  AffineMonoid(IntMatrix generators, LatticePoint grading);

  std::size_t ambient_dim() const noexcept { return gens_.rows(); }
  const IntMatrix& generator_matrix() const noexcept { return gens_; }
  const std::vector<LatticePoint>& generators() const noexcept { return columns_; }
  const LatticePoint& grading() const noexcept { return grading_; }
  Int degree(const LatticePoint& p) const { return grading_.dot(p); }
  Int max_generator_degree() const;

  // p = A x for some x in N^k; decided by enumeration bounded by w . p.
  bool contains(const LatticePoint& p) const;
  // All monoid elements of degree <= bound, sorted by (degree, lex).
  std::vector<LatticePoint> elements_up_to(const Int& bound) const;

 private:
  bool contains_memo(const LatticePoint& p, std::map<LatticePoint, bool>& memo) const;

  IntMatrix gens_;
  std::vector<LatticePoint> columns_;
  LatticePoint grading_;
};

// Smallest-norm integer w with w . a >= 1 for every column, searching
// vectors of L1 norm up to `max_norm`; nullopt when none is found.
std::optional<LatticePoint> find_grading(const IntMatrix& A, int max_norm);

// Exact test whether p lies in the real cone R_{>=0} G.
bool in_real_cone(const IntMatrix& G, const LatticePoint& p);

// The primitive integral support function f . theta of one facet.
struct SupportForm {
  LatticePoint normal;
  std::size_t facet_id = 0;

  Int operator()(const LatticePoint& p) const { return normal.dot(p); }
  friend bool operator==(const SupportForm&, const SupportForm&) = default;
};

// A face, named by the facets that vanish on it. Closed under implication.
struct FaceDescriptor {
  std::set<std::size_t> vanishing_facets;

  friend bool operator==(const FaceDescriptor&, const FaceDescriptor&) = default;
  friend auto operator<=>(const FaceDescriptor&, const FaceDescriptor&) = default;
};

struct NormalityStatus {
  enum class Kind { Unknown, Assumed, VerifiedToBound, NotNormal };
  Kind kind = Kind::Unknown;
  Int bound = 0;
  std::optional<LatticePoint> counterexample;

  bool usable() const { return kind == Kind::Assumed || kind == Kind::VerifiedToBound; }
  std::string describe() const;
};

struct PresentationOptions {
  std::optional<LatticePoint> grading;
  // When false, Z A != Z^d is tolerated; used to inspect non-normal examples.
  bool require_full_lattice = true;
  int grading_search_norm = 0;  // 0 picks 4 * d
};

class SemigroupPresentation {
 public:
  std::size_t dim() const noexcept { return A_.rows(); }
  std::size_t num_generators() const noexcept { return A_.cols(); }
  const IntMatrix& matrix() const noexcept { return A_; }
  const AffineMonoid& monoid() const noexcept { return monoid_; }
  const LatticePoint& grading() const noexcept { return monoid_.grading(); }
  const std::vector<SupportForm>& facets() const noexcept { return facets_; }
  bool lattice_full() const noexcept { return lattice_full_; }
  const NormalityStatus& normality() const noexcept { return normality_; }
  void set_normality(NormalityStatus status) { normality_ = std::move(status); }

  // Values F_i(p) for every facet, in facet order.
  std::vector<Int> support_values(const LatticePoint& p) const;
  bool in_cone(const LatticePoint& p) const;

 private:
  friend SemigroupPresentation validate_presentation(const IntMatrix&, const PresentationOptions&);

  IntMatrix A_;
  AffineMonoid monoid_;
  std::vector<SupportForm> facets_;
  bool lattice_full_ = false;
  NormalityStatus normality_;
};

// Throws "lattice not full" or "cone not pointed".
SemigroupPresentation validate_presentation(const IntMatrix& A, const PresentationOptions& options = {});

// Facet support forms by brute force over (d-1)-subsets of columns, sorted
// lexicographically by normal vector. Requires rank A = d.
std::vector<SupportForm> compute_facets(const IntMatrix& A);

inline const std::vector<SupportForm>& facets(const SemigroupPresentation& P) { return P.facets(); }

// Every face, from the whole cone (no vanishing facets) to the apex.
std::vector<FaceDescriptor> face_lattice(const SemigroupPresentation& P);

// Smallest face containing the intersection of the given facets.
FaceDescriptor face_closure(const SemigroupPresentation& P, const std::set<std::size_t>& facet_ids);

bool semigroup_member(const SemigroupPresentation& P, const LatticePoint& p);

// Lattice points p with F_i(p) >= min_value for all facets and w . p <= bound,
// sorted by (degree, lex).
std::vector<LatticePoint> cone_lattice_points(const SemigroupPresentation& P, const Int& bound,
                                              const Int& min_value = 0);

struct NormalityResult {
  bool verified = false;
  Int bound = 0;
  std::optional<LatticePoint> counterexample;
};

NormalityResult normality_check(const SemigroupPresentation& P, const Int& degree_bound);

// Runs normality_check and stores the outcome on P.
NormalityResult record_normality(SemigroupPresentation& P, const Int& degree_bound);

struct InteriorGenerators {
  std::vector<LatticePoint> generators;
  Int bound = 0;
  // True when the top degree shell holds no generator.
  bool complete = true;
};

// 3 * max_j w . a_j
Int default_interior_bound(const SemigroupPresentation& P);

InteriorGenerators interior_ideal_generators(const SemigroupPresentation& P,
                                             std::optional<Int> degree_bound = std::nullopt);

// "2t1 - t2" style rendering of a linear form with integer coefficients.
std::string format_linear_form(const LatticePoint& normal);

}  // namespace dtoric
