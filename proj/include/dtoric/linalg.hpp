#pragma once

// Exact integer linear algebra: lattice points, integer matrices, Smith and
// Hermite normal forms, and integer solutions of linear systems.

#include <dtoric/integer.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dtoric {

// A point of Z^d. Ordered lexicographically.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::size_t dim) : coords_(dim) {}
  explicit LatticePoint(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long> coords);

  static LatticePoint zero(std::size_t dim) { return LatticePoint(dim); }
  static LatticePoint unit(std::size_t dim, std::size_t i);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Int> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const;
  Int dot(const LatticePoint& other) const;
  // Entry gcd; zero for the zero vector.
  Int content() const;

  LatticePoint& operator+=(const LatticePoint& other);
  LatticePoint& operator-=(const LatticePoint& other);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator-(LatticePoint a);
  friend LatticePoint operator*(const Int& s, LatticePoint a);

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) = default;
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);

  // "(1,-2,0)"
  std::string to_string() const;

 private:
  std::vector<Int> coords_;
};

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<LatticePoint>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<LatticePoint>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  LatticePoint row(std::size_t r) const;
  LatticePoint column(std::size_t c) const;
  std::vector<LatticePoint> columns() const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend LatticePoint operator*(const IntMatrix& a, const LatticePoint& x);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct SmithForm {
  IntMatrix S;  // diagonal, s_1 | s_2 | ..., nonnegative
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix V;  // unimodular, cols x cols
  std::size_t rank = 0;

  std::vector<Int> diagonal() const;
};

// S = U * M * V. Pivoting picks the smallest nonzero absolute value.
SmithForm smith_normal_form(const IntMatrix& M);

struct HermiteForm {
  IntMatrix H;  // row echelon, positive pivots, entries above a pivot in [0, pivot)
  IntMatrix U;  // unimodular with U * M = H
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& M);

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& M);

std::size_t rank(const IntMatrix& M);

// Basis of {x in Z^n : M x = 0}, in Hermite normal form (one vector per row).
std::vector<LatticePoint> kernel_basis(const IntMatrix& M);

struct DiophantineSolution {
  LatticePoint particular;
  std::vector<LatticePoint> kernel;
};

// All integer solutions of M x = b, or nullopt when none exists. The
// particular solution is reduced against the Hermite kernel basis.
std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& M, const LatticePoint& b);

// v divided by the gcd of its entries. Throws "degenerate normal" on zero.
LatticePoint primitive_vector(const LatticePoint& v);

}  // namespace dtoric
