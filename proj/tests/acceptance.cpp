// Acceptance run: one PASS/FAIL line per criterion. With an argument N only
// criterion N runs. Exit status is nonzero when any selected criterion fails.

#include "support/examples.hpp"
#include "support/linear_membership.hpp"

#include <dtoric/dring.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace dtoric;
using namespace dtoric::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

LinearFactorProduct falling_product(std::size_t dim, std::initializer_list<std::pair<LatticePoint, long>> parts) {
  LinearFactorProduct p(dim);
  for (const auto& [f, count] : parts)
    for (long i = 0; i < count; ++i) p.multiply(f, i);
  return p;
}

// 1 --------------------------------------------------------------------------
Outcome curve_equality() {
  Outcome o;
  auto P = rnc2();
  auto omega = interior_ideal_generators(P).generators;
  auto J = RadicalMonomialIdealSpec::omega(P);
  int n = 0;
  for (const auto& m : degree_box(2, -3, 3)) {
    bool eq = ideal_equal(omega_times_d_piece(P, omega, m).ideal, d_into_piece(P, J, m).ideal);
    o.require(eq, "omega D(R) != D(R,omega) at m = " + m.to_string());
    ++n;
  }
  o.note(std::to_string(n) + " degrees compared");
  return o;
}

// 2 --------------------------------------------------------------------------
Outcome cubic_inclusion() {
  Outcome o;
  auto P = rnc3();
  const LatticePoint m{-1, -1}, T2{0, 1}, F2{3, -1};
  o.require(!gorenstein_certificate(P), "certificate should be absent");
  auto rhs = d_into_piece(P, RadicalMonomialIdealSpec::omega(P), m);
  auto W = falling_product(2, {{T2, 2}, {F2, 3}});
  o.require(rhs.ideal.generators().size() == 1 && rhs.ideal.generators()[0] == expand(W),
            "D(R,omega)_m should be principal on " + W.to_string());
  auto omega = interior_ideal_generators(P).generators;
  o.require(omega == std::vector<LatticePoint>{{1, 1}, {1, 2}}, "omega generators (1,1), (1,2)");
  auto lhs = omega_times_d_piece(P, omega, m);
  ThetaIdeal stated(2, std::vector<LinearFactorProduct>{falling_product(2, {{T2, 2}, {F2, 4}}),
                                                        falling_product(2, {{T2, 3}, {F2, 3}})});
  o.require(lhs.ideal.generators().size() == 2 && ideal_equal(lhs.ideal, stated),
            "omega D(R)_m should have the two stated generators");
  o.require(!ideal_member(expand(W), lhs.ideal), "witness must lie outside omega D(R)_m");
  if (auto pt = nonmembership_certificate(expand(W), lhs.ideal)) o.note("certificate point " + format_point(*pt));
  return o;
}

// 3 --------------------------------------------------------------------------
Outcome classification() {
  Outcome o;
  auto c2 = gorenstein_certificate(rnc2());
  o.require(c2 && *c2 == LatticePoint{1, 1}, "curve of degree 2: c = (1,1)");
  o.require(!gorenstein_certificate(rnc3()), "twisted cubic: not Gorenstein");
  auto cp = gorenstein_certificate(polynomial_ring(2));
  o.require(cp && *cp == LatticePoint{1, 1}, "k[x,y]: c = (1,1)");
  auto r = gorenstein_report(pyramid(), -2, 2);
  o.require(r.consistent(), "pyramid: certificate and operator test disagree");
  o.note(std::string("pyramid: ") + (r.is_gorenstein ? "Gorenstein, c = " + r.certificate->to_string() : "not Gorenstein") +
         ", operator test " + (r.box_equal() ? "equal" : "unequal") + " on " +
         std::to_string(r.operator_check.size()) + " degrees");
  return o;
}

// 4 --------------------------------------------------------------------------
std::string op_name(const LatticePoint& a, const LatticePoint& b) {
  std::string s;
  const char* var[] = {"x", "y"};
  for (int i = 0; i < 2; ++i) {
    if (a[i] != 0) s += std::string(var[i]) + (a[i] == 1 ? "" : "^" + a[i].get_str());
  }
  for (int i = 0; i < 2; ++i) {
    if (b[i] != 0) s += std::string("d") + var[i] + (b[i] == 1 ? "" : "^" + b[i].get_str());
  }
  return s.empty() ? "1" : s;
}

Outcome generator_pattern() {
  Outcome o;
  SimplicialComplex D(2, {{0}, {1}});
  auto C = sr_to_complex(D);
  auto T = TruncatedAlgebra::complex(C, 7);
  std::vector<std::string> extra, missing, oracle_disagree, zero_disagree;
  int admitted = 0;
  for (const auto& a : degree_box(2, 0, 3))
    for (const auto& b : degree_box(2, 0, 3)) {
      const bool criterion = sr_generator_admissible(D, a, b);
      const bool x_only = a[1] == 0 && b[1] == 0, y_only = a[0] == 0 && b[0] == 0;
      const bool pattern = (x_only && a[0] >= b[0]) || (y_only && a[1] >= b[1]);
      if (criterion) ++admitted;
      if (criterion && !pattern) extra.push_back(op_name(a, b));
      if (!criterion && pattern) missing.push_back(op_name(a, b));
      auto op = sr_operator(D, a, b);
      auto act = realize(T, op.degree, op.symbol);
      const bool oracle = retract_condition_check(C, T, act, static_cast<unsigned>(Int(b[0] + b[1]).get_ui())).passed();
      const bool acts = std::any_of(act.columns.begin(), act.columns.end(), [](const auto& c) { return !c.empty(); });
      if (oracle != criterion) (acts ? oracle_disagree : zero_disagree).push_back(op_name(a, b));
    }
  const LatticePoint zero{0, 0}, ex{1, 0};
  o.require(!sr_generator_admissible(D, zero, ex), "dx must be rejected");
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  };
  o.note(std::to_string(admitted) + " of 256 operators admitted by the criterion");
  o.require(oracle_disagree.empty(), "criterion and retract oracle disagree on: " + join(oracle_disagree));
  if (!zero_disagree.empty())
    o.note(std::to_string(zero_disagree.size()) + " operators act as zero on R; the oracle admits them, the criterion rejects them");
  o.require(missing.empty(), "pattern operators rejected by the criterion: " + join(missing));
  o.require(extra.empty(), "criterion admits " + std::to_string(extra.size()) +
                               " operators outside the pattern: " + join(extra));
  return o;
}

// 5 --------------------------------------------------------------------------
Outcome pyramid_formula() {
  Outcome o;
  auto P = pyramid();
  std::vector<LatticePoint> normals;
  for (const auto& F : P.facets()) normals.push_back(F.normal);
  std::vector<LatticePoint> expected{{0, 0, 1}, {0, 1, 0}, {1, -1, 0}, {1, 0, -1}};
  std::sort(normals.begin(), normals.end());
  std::sort(expected.begin(), expected.end());
  o.require(normals == expected, "facets tz, ty, tx - ty, tx - tz");
  const LatticePoint tz{0, 0, 1}, ty{0, 1, 0}, txz{1, 0, -1}, txy{1, -1, 0};
  for (const LatticePoint& m : std::vector<LatticePoint>{{-1, 0, 0}, {-1, -1, -1}, {-2, 1, 0}, {0, -2, -1}, {-3, -1, -2}}) {
    auto count = [](const Int& v) { return std::max(0L, v.get_si()); };
    LinearFactorProduct display = falling_product(3, {{tz, count(-m[2])},
                                                      {ty, count(-m[1])},
                                                      {txz, count(-m[0] + m[2])},
                                                      {txy, count(-m[0] + m[1])}});
    auto piece = d_piece(P, m);
    o.require(piece.ideal.generators().size() == 1 && piece.ideal.generators()[0] == expand(display),
              "d_piece at " + m.to_string() + " should be " + display.to_string());
    o.note(m.to_string() + ": " + display.to_string());
  }
  return o;
}

// 6 --------------------------------------------------------------------------
Outcome glued_tuples() {
  Outcome o;
  auto C = glued_curves();
  const long B = 8;
  auto T = TruncatedAlgebra::complex(C, B);
  int accepted = 0;
  auto accept = [&](const OperatorTuple& t, const std::string& label) {
    auto r = tuple_check(C, t, B);
    o.require(r.passed, label + " should be accepted" + (r.diagnostics.empty() ? "" : ": " + r.diagnostics.front()));
    if (!r.passed) return;
    unsigned order = 0;
    for (const auto& comp : t.components)
      for (const auto& h : comp) order = std::max(order, h.symbol.total_degree());
    auto rc = retract_condition_check(C, T, lift_tuple(C, T, t, B), order);
    o.require(rc.passed(), "lift of " + label + " fails the retract check: " + rc.diagnostic);
    ++accepted;
  };
  for (long u : {-1, -2}) {
    const std::string us = std::to_string(u);
    accept(pair_tuple({rho_u(u)}, {delta_u(u)}), "(rho_" + us + ", delta_" + us + ")");
    auto half = tuple_check(C, pair_tuple({rho_u(u)}, {}), B);
    o.require(!half.passed && !half.condition_a, "(rho_" + us + ", 0) should fail the shared-face condition");
    for (long v : {1, 2}) {
      const std::string uv = us + "," + std::to_string(v);
      accept(pair_tuple({rho_uv(u, v)}, {}), "(rho_" + uv + ", 0)");
      accept(pair_tuple({}, {delta_uv(u, v)}), "(0, delta_" + uv + ")");
    }
  }
  o.note(std::to_string(accepted) + " tuples accepted and lifted, 2 rejected");
  return o;
}

// 7 --------------------------------------------------------------------------
Outcome oracle_agreement() {
  Outcome o;
  struct Case {
    std::string name;
    SemigroupPresentation P;
  };
  std::vector<Case> cases{{"rnc2", rnc2()}, {"rnc3", rnc3()}, {"pyramid", pyramid()}};
  int degrees = 0, generators = 0;
  for (const auto& [name, P] : cases) {
    auto J = RadicalMonomialIdealSpec::omega(P);
    auto inJ = [&](const LatticePoint& a) { return J.contains(P, a); };
    auto all = [](const LatticePoint&) { return true; };
    auto T8 = TruncatedAlgebra::semigroup(P.monoid(), 8);
    for (const auto& m : degree_box(P.dim(), -2, 2)) {
      ++degrees;
      const std::string where = name + " m = " + m.to_string();
      auto G = g_product(P, m);
      const unsigned i = static_cast<unsigned>(G.degree());
      auto T = TruncatedAlgebra::semigroup(P.monoid(), 8 + i);
      auto act = realize(T, m, expand(G));
      o.require(!act.escaped(), where + ": generator escapes at " +
                                    (act.escaped() ? act.escapes.front().to_string() : std::string()));
      o.require(order_check(T, act, i), where + ": not of order " + std::to_string(i));
      if (i >= 1) o.require(!order_check(T, act, i - 1), where + ": unexpectedly of order " + std::to_string(i - 1));
      const auto idealizer = idealizer_piece(P, J, m);
      for (const auto& g : idealizer.ideal.generators()) {
        ++generators;
        o.require(maps_into(T8, realize(T8, m, g), inJ, inJ), where + ": idealizer generator leaves J");
      }
      const auto into = d_into_piece(P, J, m);
      for (const auto& g : into.ideal.generators()) {
        ++generators;
        o.require(maps_into(T8, realize(T8, m, g), all, inJ), where + ": D(R,J) generator misses J");
      }
    }
  }
  o.note(std::to_string(degrees) + " degrees, " + std::to_string(generators) + " ideal generators checked");
  return o;
}

// 8 --------------------------------------------------------------------------
IntMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rows(1, 6), cols(1, 8), entry(-20, 20);
  IntMatrix M(rows(rng), cols(rng));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = entry(rng);
  return M;
}

bool unimodular(const IntMatrix& U) { return abs(determinant(U)) == 1; }

bool smith_shape(const IntMatrix& S) {
  Int prev = 1;
  bool zero = false;
  for (std::size_t i = 0; i < S.rows(); ++i)
    for (std::size_t j = 0; j < S.cols(); ++j) {
      const Int& v = S(i, j);
      if (i != j) {
        if (v != 0) return false;
        continue;
      }
      if (v < 0 || (zero && v != 0)) return false;
      if (v == 0) {
        zero = true;
        continue;
      }
      if (!divides(prev, v)) return false;
      prev = v;
    }
  return true;
}

bool hermite_shape(const HermiteForm& h) {
  std::size_t lead = 0;
  for (std::size_t r = 0; r < h.H.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.H.cols() && h.H(r, c) == 0) ++c;
    if (c == h.H.cols()) {
      for (std::size_t rr = r; rr < h.H.rows(); ++rr)
        for (std::size_t cc = 0; cc < h.H.cols(); ++cc)
          if (h.H(rr, cc) != 0) return false;
      return r == h.rank;
    }
    if ((r > 0 && c < lead) || h.H(r, c) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h.H(above, c) < 0 || h.H(above, c) >= h.H(r, c)) return false;
    lead = c + 1;
  }
  return h.rank == h.H.rows();
}

ThetaPolynomial random_polynomial(std::mt19937_64& rng, std::size_t dim, unsigned max_degree, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  ThetaPolynomial p(dim);
  for (int k = 0; k < terms; ++k) {
    Exponent e(dim, 0);
    unsigned left = deg(rng);
    for (std::size_t i = 0; i + 1 < dim; ++i) {
      std::uniform_int_distribution<unsigned> part(0, left);
      e[i] = part(rng);
      left -= e[i];
    }
    e[dim - 1] = left;
    p.add_term(e, coef(rng));
  }
  return p;
}

Outcome kernel_properties() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  int snf_ok = 0, hnf_ok = 0;
  for (int k = 0; k < 200; ++k) {
    IntMatrix M = random_matrix(rng);
    auto s = smith_normal_form(M);
    bool sok = s.U * M * s.V == s.S && unimodular(s.U) && unimodular(s.V) && smith_shape(s.S);
    auto h = hermite_normal_form(M);
    bool hok = h.U * M == h.H && unimodular(h.U) && hermite_shape(h);
    snf_ok += sok;
    hnf_ok += hok;
    o.require(sok, "Smith form fails on " + M.to_string());
    o.require(hok, "Hermite form fails on " + M.to_string());
  }
  int agree = 0, members = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t dim = 1 + k % 3;
    std::uniform_int_distribution<int> ngens(1, dim == 3 ? 2 : 3);
    std::vector<ThetaPolynomial> gens;
    for (int g = ngens(rng); g > 0; --g) {
      ThetaPolynomial p = random_polynomial(rng, dim, 4, 3);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) gens.push_back(ThetaPolynomial::variable(dim, 0));
    ThetaIdeal I(dim, gens);
    // One certain member built from the generators, one arbitrary polynomial.
    ThetaPolynomial combo(dim);
    unsigned combo_degree = 0;
    for (const auto& g : gens) {
      ThetaPolynomial h = random_polynomial(rng, dim, 2, 2);
      combo += h * g;
      combo_degree = std::max(combo_degree, h.total_degree() + g.total_degree());
    }
    ThetaPolynomial any = random_polynomial(rng, dim, 4, 4);
    bool ok = true;
    const bool gb_combo = ideal_member(combo, I), la_combo = member_by_linear_algebra(combo, gens, combo_degree);
    ok = ok && gb_combo && la_combo;
    // Cofactor degrees can exceed the input degree, so a positive answer from
    // the Groebner side is chased with growing linear-algebra bounds.
    const bool gb_any = ideal_member(any, I);
    bool la_any = false;
    for (unsigned extra = 0; extra <= 10 && !la_any; extra += 2)
      la_any = member_by_linear_algebra(any, gens, any.total_degree() + extra);
    ok = ok && gb_any == la_any;
    members += gb_any;
    agree += ok;
    o.require(ok, "membership disagreement on ideal " + I.to_string(false));
  }
  o.note(std::to_string(snf_ok) + "/200 Smith, " + std::to_string(hnf_ok) + "/200 Hermite, " + std::to_string(agree) +
         "/100 membership agreements (" + std::to_string(members) + " arbitrary polynomials were members)");
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "degree-2 curve: omega D(R) = D(R, omega) on [-3,3]^2", 5, curve_equality},
      {2, "twisted cubic: strict inclusion at (-1,-1)", 5, cubic_inclusion},
      {3, "Gorenstein classification", 30, classification},
      {4, "two-point Stanley-Reisner ring: generator pattern on [0,3]^2", 1, generator_pattern},
      {5, "pyramid: facets and d_piece formula", 5, pyramid_formula},
      {6, "glued curves: operator tuples and lifts at B = 8", 60, glued_tuples},
      {7, "oracle and formula agreement for |m| <= 2", 120, oracle_agreement},
      {8, "Smith/Hermite and membership property suites", 120, kernel_properties},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.require(false, "time limit " + std::to_string(c.limit_seconds) + " s exceeded");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << "  (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "        " << n << "\n";
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
