#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ghrv/poly.hpp"

namespace ghrv {

// Dense row-major matrix of polynomials over one PolyRing.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(PolyRingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(PolyRingPtr ring, std::size_t n);
  static PolyMatrix scalar(const Poly& p, std::size_t n);
  static PolyMatrix from_rows(PolyRingPtr ring, const std::vector<std::vector<Poly>>& rows);

  const PolyRingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  PolyMatrix transpose() const;
  PolyMatrix map(const std::function<Poly(const Poly&)>& f) const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  bool is_zero() const;

  PolyMatrix operator-() const;
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix scaled(const Poly& p) const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  // [[a, b], [c, d]]
  static PolyMatrix block(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d);

 private:
  PolyRingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

// Laplace expansion for n <= 3, fraction-free Bareiss elimination otherwise.
Poly det(const PolyMatrix& m);
// Cofactor expansion along the first row at every size.
Poly det_laplace(const PolyMatrix& m);
Poly det_bareiss(const PolyMatrix& m);

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static FieldMatrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);
  FieldMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

struct RowEchelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // rows of the input matrix, in pivot order
  std::vector<std::size_t> pivot_cols;
};

// Gaussian elimination; pivot = first nonzero entry in row-major scan of the
// remaining submatrix, so the choice is deterministic.
RowEchelon row_echelon(const FieldMatrix& m);
std::size_t rank_over_field(const FieldMatrix& m);
// Throws Precondition if singular.
FieldMatrix inverse(const FieldMatrix& m);

// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);
// Binomial coefficient, saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace ghrv
