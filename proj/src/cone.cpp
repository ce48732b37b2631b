#include <dtoric/cone.hpp>
#include <dtoric/error.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace dtoric {

namespace {

bool degree_then_lex(const LatticePoint& a, const LatticePoint& b, const LatticePoint& w) {
  Int da = w.dot(a), db = w.dot(b);
  if (da != db) return da < db;
  return a < b;
}

// Rational solution of G_S lambda = p for the columns S, or nullopt.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& G, const std::vector<std::size_t>& S,
                                                    const LatticePoint& p) {
  const std::size_t rows = G.rows(), k = S.size();
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = Rational(G(r, S[c]));
    aug[r][k] = Rational(p[r]);
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && aug[piv][c] == 0) ++piv;
    if (piv == rows) return std::nullopt;  // dependent columns
    std::swap(aug[row], aug[piv]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || aug[r][c] == 0) continue;
      Rational f = aug[r][c] / aug[row][c];
      for (std::size_t cc = c; cc <= k; ++cc) aug[r][cc] -= f * aug[row][cc];
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (aug[r][k] != 0) return std::nullopt;
  std::vector<Rational> lambda(k);
  for (std::size_t i = 0; i < pivots.size(); ++i) lambda[pivots[i]] = aug[i][k] / aug[i][pivots[i]];
  return lambda;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Integer vectors of L1 norm s, in decreasing lexicographic order.
void vectors_of_norm(std::size_t d, long s, std::vector<LatticePoint>& out) {
  LatticePoint cur(d);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == d) {
      if (left == 0) {
        cur[i] = 0;
        out.push_back(cur);
      } else {
        cur[i] = left;
        out.push_back(cur);
        cur[i] = -left;
        out.push_back(cur);
      }
      return;
    }
    for (long v = left; v >= -left; --v) {
      cur[i] = v;
      rec(i + 1, left - std::labs(v));
    }
  };
  if (d == 0) return;
  rec(0, s);
}

}  // namespace

// ----------------------------------------------------------------- AffineMonoid

AffineMonoid::AffineMonoid(IntMatrix generators, LatticePoint grading)
    : gens_(std::move(generators)), columns_(gens_.columns()), grading_(std::move(grading)) {
  if (grading_.dim() != gens_.rows()) throw validation_error("grading dimension mismatch");
  for (const LatticePoint& g : columns_)
    if (grading_.dot(g) < 1)
      throw validation_error("grading " + grading_.to_string() + " is not positive on generator " + g.to_string());
}

Int AffineMonoid::max_generator_degree() const {
  Int m = 0;
  for (const LatticePoint& g : columns_) m = std::max(m, grading_.dot(g));
  return m;
}

bool AffineMonoid::contains(const LatticePoint& p) const {
  if (p.dim() != ambient_dim()) throw validation_error("point dimension mismatch");
  std::map<LatticePoint, bool> memo;
  return contains_memo(p, memo);
}

bool AffineMonoid::contains_memo(const LatticePoint& p, std::map<LatticePoint, bool>& memo) const {
  if (p.is_zero()) return true;
  if (grading_.dot(p) <= 0) return false;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  bool found = false;
  for (const LatticePoint& g : columns_) {
    if (contains_memo(p - g, memo)) {
      found = true;
      break;
    }
  }
  memo.emplace(p, found);
  return found;
}

std::vector<LatticePoint> AffineMonoid::elements_up_to(const Int& bound) const {
  std::set<LatticePoint> seen;
  if (bound < 0) return {};
  std::vector<LatticePoint> frontier{LatticePoint::zero(ambient_dim())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<LatticePoint> next;
    for (const LatticePoint& p : frontier)
      for (const LatticePoint& g : columns_) {
        LatticePoint q = p + g;
        if (grading_.dot(q) > bound) continue;
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  std::vector<LatticePoint> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [&](const LatticePoint& a, const LatticePoint& b) { return degree_then_lex(a, b, grading_); });
  return out;
}

std::optional<LatticePoint> find_grading(const IntMatrix& A, int max_norm) {
  const std::vector<LatticePoint> cols = A.columns();
  for (long s = 1; s <= max_norm; ++s) {
    std::vector<LatticePoint> candidates;
    vectors_of_norm(A.rows(), s, candidates);
    for (const LatticePoint& w : candidates) {
      if (w.content() != 1) continue;
      if (std::all_of(cols.begin(), cols.end(), [&](const LatticePoint& a) { return w.dot(a) >= 1; })) return w;
    }
  }
  return std::nullopt;
}

bool in_real_cone(const IntMatrix& G, const LatticePoint& p) {
  if (p.is_zero()) return true;
  const std::size_t r = rank(G);
  if (r == 0) return false;
  bool found = false;
  for_each_subset(G.cols(), r, [&](const std::vector<std::size_t>& S) {
    if (found) return;
    auto lambda = solve_rational(G, S, p);
    if (lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x >= 0; }))
      found = true;
  });
  return found;
}

// -------------------------------------------------------------- presentations

std::string NormalityStatus::describe() const {
  switch (kind) {
    case Kind::Unknown: return "unknown";
    case Kind::Assumed: return "assumed";
    case Kind::VerifiedToBound: return "verified to degree " + bound.get_str();
    case Kind::NotNormal: return "not normal, counterexample " + counterexample->to_string();
  }
  return "unknown";
}

std::vector<Int> SemigroupPresentation::support_values(const LatticePoint& p) const {
  std::vector<Int> v;
  v.reserve(facets_.size());
  for (const SupportForm& F : facets_) v.push_back(F(p));
  return v;
}

bool SemigroupPresentation::in_cone(const LatticePoint& p) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const SupportForm& F) { return F(p) >= 0; });
}

std::vector<SupportForm> compute_facets(const IntMatrix& A) {
  const std::size_t d = A.rows();
  const std::vector<LatticePoint> cols = A.columns();
  std::set<LatticePoint> normals;
  for_each_subset(cols.size(), d - 1, [&](const std::vector<std::size_t>& S) {
    std::vector<LatticePoint> rows;
    for (std::size_t j : S) rows.push_back(cols[j]);
    std::vector<LatticePoint> ker = kernel_basis(IntMatrix::from_rows(rows, d));
    if (ker.size() != 1) return;
    LatticePoint f = primitive_vector(ker.front());
    bool nonneg = true, nonpos = true;
    for (const LatticePoint& a : cols) {
      Int v = f.dot(a);
      if (v < 0) nonneg = false;
      if (v > 0) nonpos = false;
    }
    if (nonneg == nonpos) return;  // mixed signs, or every column on the hyperplane
    normals.insert(nonneg ? f : -f);
  });
  std::vector<SupportForm> out;
  for (const LatticePoint& n : normals) out.push_back(SupportForm{n, out.size()});
  return out;
}

SemigroupPresentation validate_presentation(const IntMatrix& A, const PresentationOptions& options) {
  if (A.empty()) throw validation_error("empty matrix");
  const std::size_t d = A.rows();
  for (const LatticePoint& a : A.columns())
    if (a.is_zero()) throw validation_error("zero column in generator matrix");

  SemigroupPresentation P;
  P.A_ = A;
  SmithForm snf = smith_normal_form(A);
  std::vector<Int> diag = snf.diagonal();
  P.lattice_full_ = snf.rank == d && std::all_of(diag.begin(), diag.end(), [](const Int& s) { return s == 1; });
  if (snf.rank != d || (options.require_full_lattice && !P.lattice_full_))
    throw validation_error("lattice not full");

  P.facets_ = compute_facets(A);

  std::optional<LatticePoint> w = options.grading;
  if (!w) {
    int norm = options.grading_search_norm > 0 ? options.grading_search_norm : static_cast<int>(4 * d);
    w = find_grading(A, norm);
  }
  if (!w && !P.facets_.empty()) {
    // Sum of the support forms is positive on every nonzero point of a pointed cone.
    LatticePoint s(d);
    for (const SupportForm& F : P.facets_) s += F.normal;
    if (!s.is_zero()) w = primitive_vector(s);
  }
  const std::vector<LatticePoint> cols = A.columns();
  if (!w || !std::all_of(cols.begin(), cols.end(), [&](const LatticePoint& a) { return w->dot(a) >= 1; }))
    throw validation_error(options.grading ? "grading is not positive on every column" : "cone not pointed");
  P.monoid_ = AffineMonoid(A, *w);
  return P;
}

FaceDescriptor face_closure(const SemigroupPresentation& P, const std::set<std::size_t>& facet_ids) {
  std::vector<LatticePoint> on_face;
  for (const LatticePoint& a : P.matrix().columns()) {
    bool vanish = std::all_of(facet_ids.begin(), facet_ids.end(),
                              [&](std::size_t i) { return P.facets().at(i)(a) == 0; });
    if (vanish) on_face.push_back(a);
  }
  FaceDescriptor f;
  for (const SupportForm& F : P.facets()) {
    if (std::all_of(on_face.begin(), on_face.end(), [&](const LatticePoint& a) { return F(a) == 0; }))
      f.vanishing_facets.insert(F.facet_id);
  }
  return f;
}

std::vector<FaceDescriptor> face_lattice(const SemigroupPresentation& P) {
  const std::size_t r = P.facets().size();
  if (r >= 24) throw resource_error("too many facets for face enumeration");
  std::set<FaceDescriptor> faces;
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::set<std::size_t> S;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t{1} << i)) S.insert(i);
    faces.insert(face_closure(P, S));
  }
  std::vector<FaceDescriptor> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
    if (a.vanishing_facets.size() != b.vanishing_facets.size())
      return a.vanishing_facets.size() < b.vanishing_facets.size();
    return a < b;
  });
  return out;
}

bool semigroup_member(const SemigroupPresentation& P, const LatticePoint& p) { return P.monoid().contains(p); }

std::vector<LatticePoint> cone_lattice_points(const SemigroupPresentation& P, const Int& bound, const Int& min_value) {
  const std::size_t d = P.dim();
  const LatticePoint& w = P.grading();
  std::vector<Int> box(d);
  for (std::size_t k = 0; k < d; ++k) {
    Rational best = 0;
    for (const LatticePoint& a : P.matrix().columns()) {
      Rational ratio(abs(a[k]), w.dot(a));
      ratio.canonicalize();
      if (ratio > best) best = ratio;
    }
    Rational lim = best * Rational(bound);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lim.get_num_mpz_t(), lim.get_den_mpz_t());
    box[k] = fl;
  }
  std::vector<LatticePoint> out;
  if (bound < 0) return out;
  LatticePoint cur(d);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == d) {
      Int deg = w.dot(cur);
      if (deg < 0 || deg > bound) return;
      for (const SupportForm& F : P.facets())
        if (F(cur) < min_value) return;
      out.push_back(cur);
      return;
    }
    for (Int v = -box[k]; v <= box[k]; ++v) {
      cur[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [&](const LatticePoint& a, const LatticePoint& b) { return degree_then_lex(a, b, w); });
  return out;
}

NormalityResult normality_check(const SemigroupPresentation& P, const Int& degree_bound) {
  NormalityResult r;
  r.bound = degree_bound;
  for (const LatticePoint& p : cone_lattice_points(P, degree_bound)) {
    if (!P.monoid().contains(p)) {
      r.counterexample = p;
      return r;
    }
  }
  r.verified = true;
  return r;
}

NormalityResult record_normality(SemigroupPresentation& P, const Int& degree_bound) {
  NormalityResult r = normality_check(P, degree_bound);
  NormalityStatus s;
  s.bound = degree_bound;
  if (r.verified) {
    s.kind = NormalityStatus::Kind::VerifiedToBound;
  } else {
    s.kind = NormalityStatus::Kind::NotNormal;
    s.counterexample = r.counterexample;
  }
  P.set_normality(s);
  return r;
}

Int default_interior_bound(const SemigroupPresentation& P) { return 3 * P.monoid().max_generator_degree(); }

InteriorGenerators interior_ideal_generators(const SemigroupPresentation& P, std::optional<Int> degree_bound) {
  InteriorGenerators out;
  out.bound = degree_bound.value_or(default_interior_bound(P));
  const Int shell_floor = out.bound - P.monoid().max_generator_degree();
  auto interior = [&](const LatticePoint& p) {
    return std::all_of(P.facets().begin(), P.facets().end(), [&](const SupportForm& F) { return F(p) >= 1; });
  };
  for (const LatticePoint& m : cone_lattice_points(P, out.bound, 1)) {
    bool minimal = true;
    for (const LatticePoint& a : P.monoid().generators())
      if (interior(m - a)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    out.generators.push_back(m);
    if (P.grading().dot(m) > shell_floor) out.complete = false;
  }
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

std::string format_linear_form(const LatticePoint& normal) {
  std::string s;
  for (std::size_t i = 0; i < normal.dim(); ++i) {
    const Int& c = normal[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += mag.get_str();
    s += "t" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace dtoric
