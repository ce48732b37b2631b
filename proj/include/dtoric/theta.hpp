#pragma once

// Polynomials in the Euler operators theta_1..theta_d over Q, products of
// shifted linear forms, and ideals with Groebner-basis support.

#include <dtoric/linalg.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace dtoric {

using Exponent = std::vector<unsigned>;

// Graded reverse lexicographic order with theta_1 > theta_2 > ... .
// Returns true when a is strictly greater than b.
bool grevlex_greater(const Exponent& a, const Exponent& b);

struct GrevlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const { return grevlex_greater(a, b); }
};

class ThetaPolynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrevlexDescending>;

  ThetaPolynomial() = default;
  explicit ThetaPolynomial(std::size_t dim) : dim_(dim) {}

  static ThetaPolynomial constant(std::size_t dim, const Rational& c);
  static ThetaPolynomial variable(std::size_t dim, std::size_t i);
  // f . theta - c
  static ThetaPolynomial linear(const LatticePoint& f, const Int& c);
  static ThetaPolynomial monomial(const Exponent& e, const Rational& c);

  std::size_t dim() const noexcept { return dim_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;

  // Leading data under grevlex; undefined on the zero polynomial.
  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Exponent& e, const Rational& c);
  // this += c * theta^shift * g
  void add_multiple(const ThetaPolynomial& g, const Rational& c, const Exponent& shift);

  ThetaPolynomial& operator+=(const ThetaPolynomial& o);
  ThetaPolynomial& operator-=(const ThetaPolynomial& o);
  ThetaPolynomial& operator*=(const Rational& c);
  friend ThetaPolynomial operator+(ThetaPolynomial a, const ThetaPolynomial& b) { return a += b; }
  friend ThetaPolynomial operator-(ThetaPolynomial a, const ThetaPolynomial& b) { return a -= b; }
  friend ThetaPolynomial operator*(const ThetaPolynomial& a, const ThetaPolynomial& b);
  friend ThetaPolynomial operator*(const Rational& c, ThetaPolynomial a) { return a *= c; }
  friend bool operator==(const ThetaPolynomial& a, const ThetaPolynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  // Scaled so the leading coefficient is one; zero stays zero.
  ThetaPolynomial monic() const;

  Rational evaluate(const std::vector<Rational>& point) const;
  Rational evaluate(const LatticePoint& point) const;

  // "4*t1^2*t2 - 2*t1*t2^2 + t2", terms in grevlex order, "0" for zero.
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  TermMap terms_;
};

// The linear polynomial f . theta - c, normalized so that the entry gcd of
// (f, c) is one and the first nonzero entry of f is positive.
class LinearFactor {
 public:
  // Throws when f is zero. `unit`, when given, receives the scalar u with
  // f . theta - c = u * (normalized factor).
  LinearFactor(LatticePoint f, Int c, Rational* unit = nullptr);

  const LatticePoint& form() const noexcept { return form_; }
  const Int& shift() const noexcept { return shift_; }
  ThetaPolynomial polynomial() const { return ThetaPolynomial::linear(form_, shift_); }
  Rational evaluate(const std::vector<Rational>& point) const;

  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
  friend auto operator<=>(const LinearFactor& a, const LinearFactor& b) {
    if (auto c = a.form_ <=> b.form_; c != 0) return c;
    return cmp(a.shift_, b.shift_) <=> 0;
  }

  // "2t1-t2-1"
  std::string to_string() const;

 private:
  LatticePoint form_;
  Int shift_;
};

class LinearFactorProduct {
 public:
  LinearFactorProduct() = default;
  explicit LinearFactorProduct(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LinearFactor>& factors() const noexcept { return factors_; }
  const Rational& scalar() const noexcept { return scalar_; }
  std::size_t degree() const noexcept { return factors_.size(); }

  // Multiplies by f . theta - c.
  void multiply(const LatticePoint& f, const Int& c);
  void multiply(const LinearFactor& factor) { factors_.push_back(factor); }
  void multiply(const LinearFactorProduct& other);
  void scale(const Rational& c) { scalar_ *= c; }

  friend bool operator==(const LinearFactorProduct&, const LinearFactorProduct&) = default;

  // "(t2)(2t1-t2)(2t1-t2-1)"; "1" when empty; scalar prefixed when not one.
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<LinearFactor> factors_;
  Rational scalar_ = 1;
};

ThetaPolynomial expand(const LinearFactorProduct& p);

// Distinct factors in first-occurrence order, scalar one.
LinearFactorProduct radical_of_linear_product(const LinearFactorProduct& p);

class ThetaIdeal {
 public:
  ThetaIdeal() = default;
  explicit ThetaIdeal(std::size_t dim);
  ThetaIdeal(std::size_t dim, std::vector<ThetaPolynomial> generators);
  // Generators given as products; the factored forms are kept for printing
  // and for nonmembership certificates. Duplicate expansions are dropped.
  ThetaIdeal(std::size_t dim, const std::vector<LinearFactorProduct>& generators);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ThetaPolynomial>& generators() const noexcept { return gens_; }
  // Parallel to generators() when every generator was given factored.
  const std::vector<LinearFactorProduct>& factored() const noexcept { return factored_; }
  bool has_factored() const noexcept { return !factored_.empty() && factored_.size() == gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }

  // Reduced Groebner basis, computed once and shared by copies.
  const std::vector<ThetaPolynomial>& groebner() const;

  // "<(t2)(2t1-t2)>", "<1>" for the unit ideal, "<0>" for zero.
  std::string to_string(bool factored_form = true) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<ThetaPolynomial> basis;
  };

  std::size_t dim_ = 0;
  std::vector<ThetaPolynomial> gens_;
  std::vector<LinearFactorProduct> factored_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Buchberger with normal pair selection and both classical criteria.
std::vector<ThetaPolynomial> buchberger(std::vector<ThetaPolynomial> generators);

inline const std::vector<ThetaPolynomial>& groebner(const ThetaIdeal& I) { return I.groebner(); }

// Remainder of full reduction of p by the polynomials in G.
ThetaPolynomial normal_form(const ThetaPolynomial& p, const std::vector<ThetaPolynomial>& G);

bool ideal_member(const ThetaPolynomial& p, const ThetaIdeal& I);
bool ideal_contains(const ThetaIdeal& big, const ThetaIdeal& small);
bool ideal_equal(const ThetaIdeal& I, const ThetaIdeal& J);

// A rational point where every generator of I vanishes but p does not,
// searched over intersections of the generators' linear factors. Absence
// is inconclusive. Needs factored generators.
std::optional<std::vector<Rational>> nonmembership_certificate(const ThetaPolynomial& p, const ThetaIdeal& I);

std::string format_point(const std::vector<Rational>& point);

}  // namespace dtoric
