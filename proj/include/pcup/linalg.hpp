#pragma once

// Exact rational vectors and matrices. Everything here is GMP-backed and
// never rounds; the geometric predicates upstream are sign-exact.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcup {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

/// Parses "p", "p/q" or "-p/q". Throws Error(parse) on malformed input or a
/// zero denominator.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& value);
std::string to_string(const Vec& v);

int sign(const Rat& value);

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Rat dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rat& s, const Vec& a);
bool is_zero(const Vec& v);

/// Scales a rational vector to the primitive integer vector on the same ray
/// (gcd of entries 1). The zero vector is returned unchanged.
Vec primitive(const Vec& v);
/// primitive() followed by making the first nonzero entry positive, so that
/// v and -v map to the same representative of a line.
Vec canonical_line(const Vec& v);

/// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  /// All rows must share one length; cols is taken from the first row, or
  /// from `cols` when `rows` is empty.
  explicit Mat(const std::vector<Vec>& rows, std::size_t cols = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> row_vectors() const;
  Mat transpose() const;
  Vec apply(const Vec& x) const;

  static Mat identity(std::size_t n);
  /// Matrix whose columns are the given vectors (each of length `rows`).
  static Mat from_columns(std::span<const Vec> columns, std::size_t rows);

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct Echelon {
  Mat reduced;                     // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

Echelon rref(Mat m);
std::size_t rank(const Mat& m);
std::size_t rank(std::span<const Vec> vectors, std::size_t dim);

/// Sign of the determinant of a square matrix: -1, 0 or +1.
int det_sign(const Mat& m);
Rat determinant(const Mat& m);

/// Basis of {x : m x = 0}, canonicalized to reduced row echelon form.
std::vector<Vec> nullspace(const Mat& m);

struct AffineSolution {
  Vec particular;
  std::vector<Vec> nullspace_basis;
};

/// One exact solution of a x = b together with a basis of ker(a), or
/// std::nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Mat& a, const Vec& b);

/// Basis of {u : u . w = 0 for every input w}, canonical (rref).
std::vector<Vec> orthogonal_complement(std::span<const Vec> vectors,
                                       std::size_t dim);

/// Canonical basis (rref rows) of the span of the given vectors.
std::vector<Vec> span_basis(std::span<const Vec> vectors, std::size_t dim);

bool in_span(std::span<const Vec> basis, const Vec& v, std::size_t dim);

/// Coordinates of vectors in a fixed basis of a subspace. Built once per
/// basis; coords() is only meaningful for vectors lying in the span.
class BasisCoordinates {
 public:
  BasisCoordinates() = default;
  /// `basis` must be linearly independent.
  BasisCoordinates(std::span<const Vec> basis, std::size_t ambient_dim);

  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  bool contains(const Vec& v) const;
  Vec coords(const Vec& v) const;

 private:
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivot_rows_;
  Mat inverse_;  // inverse of the basis restricted to pivot_rows_
  std::size_t ambient_ = 0;
};

}  // namespace pcup
