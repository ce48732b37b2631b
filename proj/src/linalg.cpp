#include <dtoric/error.hpp>
#include <dtoric/linalg.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace dtoric {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw validation_error("malformed rational '" + text + "'");
  }
  if (r.get_den() == 0) throw validation_error("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- LatticePoint

LatticePoint::LatticePoint(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticePoint LatticePoint::unit(std::size_t dim, std::size_t i) {
  LatticePoint p(dim);
  p[i] = 1;
  return p;
}

bool LatticePoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

Int LatticePoint::dot(const LatticePoint& other) const {
  if (other.dim() != dim()) throw validation_error("dimension mismatch in dot product");
  Int s = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * other.coords_[i];
  return s;
}

Int LatticePoint::content() const {
  Int g = 0;
  for (const Int& c : coords_) g = gcd(g, c);
  return g;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
  if (other.dim() != dim()) throw validation_error("dimension mismatch in lattice sum");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other) {
  if (other.dim() != dim()) throw validation_error("dimension mismatch in lattice difference");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticePoint operator-(LatticePoint a) {
  for (Int& c : a.coords_) c = -c;
  return a;
}

LatticePoint operator*(const Int& s, LatticePoint a) {
  for (Int& c : a.coords_) c *= s;
  return a;
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string LatticePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + ")";
}

// ------------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw validation_error("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<LatticePoint>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw validation_error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<LatticePoint>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != rows) throw validation_error("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

LatticePoint IntMatrix::row(std::size_t r) const {
  LatticePoint p(cols_);
  for (std::size_t c = 0; c < cols_; ++c) p[c] = (*this)(r, c);
  return p;
}

LatticePoint IntMatrix::column(std::size_t c) const {
  LatticePoint p(rows_);
  for (std::size_t r = 0; r < rows_; ++r) p[r] = (*this)(r, c);
  return p;
}

std::vector<LatticePoint> IntMatrix::columns() const {
  std::vector<LatticePoint> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw validation_error("matrix product dimension mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

LatticePoint operator*(const IntMatrix& a, const LatticePoint& x) {
  if (a.cols() != x.dim()) throw validation_error("matrix-vector dimension mismatch");
  LatticePoint y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
  return y;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ",";
    os << row(r).to_string();
  }
  os << "]";
  return os.str();
}

// ------------------------------------------------------------------------ SNF

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  SmithForm f{M, IntMatrix::identity(m), IntMatrix::identity(n), 0};
  IntMatrix& S = f.S;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block.
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (S(i, j) == 0) continue;
          if (pr == m || mpz_cmpabs(S(i, j).get_mpz_t(), S(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      if (pr == m) {
        f.rank = t;
        return f;
      }
      S.swap_rows(t, pr);
      f.U.swap_rows(t, pr);
      S.swap_cols(t, pc);
      f.V.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Int q = -floor_div(S(i, t), S(t, t));
        S.add_row_multiple(i, t, q);
        f.U.add_row_multiple(i, t, q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Int q = -floor_div(S(t, j), S(t, t));
        S.add_col_multiple(j, t, q);
        f.V.add_col_multiple(j, t, q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility chain: fold an offending row into the pivot row.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(S(t, t), S(i, j))) {
            bad = i;
            break;
          }
      if (bad == m) break;
      S.add_row_multiple(t, bad, 1);
      f.U.add_row_multiple(t, bad, 1);
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      f.U.negate_row(t);
    }
  }
  f.rank = 0;
  for (std::size_t i = 0; i < std::min(m, n); ++i)
    if (S(i, i) != 0) ++f.rank;
  return f;
}

// ------------------------------------------------------------------------ HNF

HermiteForm hermite_normal_form(const IntMatrix& M) {
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  HermiteForm f{M, IntMatrix::identity(m), 0};
  IntMatrix& H = f.H;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (H(i, c) == 0) continue;
      if (H(r, c) == 0) {
        H.swap_rows(r, i);
        f.U.swap_rows(r, i);
        continue;
      }
      // Unimodular 2x2 step [[s, t], [-b/g, a/g]] on rows r and i.
      Int a = H(r, c), b = H(i, c), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int ag = a / g, bg = b / g;
      for (IntMatrix* X : {&H, &f.U}) {
        for (std::size_t k = 0; k < X->cols(); ++k) {
          Int x = (*X)(r, k), y = (*X)(i, k);
          (*X)(r, k) = s * x + t * y;
          (*X)(i, k) = -bg * x + ag * y;
        }
      }
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      f.U.negate_row(r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Int q = -floor_div(H(k, c), H(r, c));
      H.add_row_multiple(k, r, q);
      f.U.add_row_multiple(k, r, q);
    }
    ++r;
  }
  f.rank = r;
  return f;
}

Int determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw validation_error("determinant of a non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && A(p, k) == 0) ++p;
      if (p == n) return 0;
      A.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
      }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& M) { return hermite_normal_form(M).rank; }

std::vector<LatticePoint> kernel_basis(const IntMatrix& M) {
  SmithForm f = smith_normal_form(M);
  std::vector<LatticePoint> raw;
  for (std::size_t j = f.rank; j < M.cols(); ++j) raw.push_back(f.V.column(j));
  if (raw.empty()) return raw;
  HermiteForm h = hermite_normal_form(IntMatrix::from_rows(raw, M.cols()));
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < h.rank; ++i) out.push_back(h.H.row(i));
  return out;
}

std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& M, const LatticePoint& b) {
  if (M.rows() != b.dim()) throw validation_error("right-hand side dimension mismatch");
  SmithForm f = smith_normal_form(M);
  LatticePoint c = f.U * b;
  LatticePoint y(M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (i < f.rank) {
      if (!divides(f.S(i, i), c[i])) return std::nullopt;
      y[i] = c[i] / f.S(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  DiophantineSolution sol{f.V * y, kernel_basis(M)};
  for (const LatticePoint& k : sol.kernel) {
    std::size_t p = 0;
    while (k[p] == 0) ++p;
    sol.particular -= floor_div(sol.particular[p], k[p]) * k;
  }
  return sol;
}

LatticePoint primitive_vector(const LatticePoint& v) {
  Int g = v.content();
  if (g == 0) throw validation_error("degenerate normal");
  LatticePoint out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i] / g;
  return out;
}

}  // namespace dtoric
