#include "ghrv/matrix.hpp"

#include <limits>
#include <utility>

#include "ghrv/error.hpp"

namespace ghrv {

PolyMatrix::PolyMatrix(PolyRingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::identity(PolyRingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::from_int(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::scalar(const Poly& p, std::size_t n) {
  PolyMatrix m(p.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = p;
  return m;
}

PolyMatrix PolyMatrix::from_rows(PolyRingPtr ring, const std::vector<std::vector<Poly>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  PolyMatrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(ErrorCode::Format, "matrix rows have different lengths");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

PolyMatrix PolyMatrix::map(const std::function<Poly(const Poly&)>& f) const {
  PolyMatrix out;
  out.rows_ = rows_;
  out.cols_ = cols_;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) out.entries_.push_back(f(e));
  out.ring_ = out.entries_.empty() ? ring_ : out.entries_.front().ring();
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  PolyMatrix s(ring_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) s.at(i, j) = at(rs[i], cs[j]);
  return s;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::operator-() const {
  return map([](const Poly& p) { return -p; });
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::Precondition, "matrix shape mismatch in sum");
  PolyMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::Precondition, "matrix shape mismatch in product");
  PolyMatrix r(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& lhs = a.at(i, k);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Poly& rhs = b.at(k, j);
        if (!rhs.is_zero()) r.at(i, j) += lhs * rhs;
      }
    }
  }
  return r;
}

PolyMatrix PolyMatrix::scaled(const Poly& p) const {
  return map([&](const Poly& e) { return e * p; });
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix PolyMatrix::block(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d) {
  if (a.rows_ != b.rows_ || c.rows_ != d.rows_ || a.cols_ != c.cols_ || b.cols_ != d.cols_) {
    fail(ErrorCode::Precondition, "block shapes do not fit");
  }
  PolyMatrix m(a.ring_, a.rows_ + c.rows_, a.cols_ + b.cols_);
  auto put = [&](const PolyMatrix& src, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < src.rows_; ++i)
      for (std::size_t j = 0; j < src.cols_; ++j) m.at(r0 + i, c0 + j) = src.at(i, j);
  };
  put(a, 0, 0);
  put(b, 0, a.cols_);
  put(c, a.rows_, 0);
  put(d, a.rows_, a.cols_);
  return m;
}

Poly det_laplace(const PolyMatrix& m) {
  if (!m.square()) fail(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const std::size_t n = m.rows();
  if (n == 0) return Poly::from_int(m.ring(), 1);
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  Poly acc(m.ring());
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) cols.push_back(k);
    }
    Poly term = m.at(0, j) * det_laplace(m.submatrix(rows, cols));
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

Poly det_bareiss(const PolyMatrix& input) {
  if (!input.square()) fail(ErrorCode::NotSquare, std::to_string(input.rows()) + "x" + std::to_string(input.cols()));
  const std::size_t n = input.rows();
  if (n == 0) return Poly::from_int(input.ring(), 1);
  PolyMatrix a = input;
  Poly prev = Poly::from_int(input.ring(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a.at(swap, k).is_zero()) ++swap;
      if (swap == n) return Poly(input.ring());
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num.divide_exact(prev);
      }
      a.at(i, k) = Poly(input.ring());
    }
    prev = a.at(k, k);
  }
  Poly d = a.at(n - 1, n - 1);
  return negate ? -d : d;
}

Poly det(const PolyMatrix& m) {
  if (!m.square()) fail(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  return m.rows() <= 3 ? det_laplace(m) : det_bareiss(m);
}

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_->zero()) {}

FieldMatrix FieldMatrix::identity(FieldPtr field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::Precondition, "matrix shape mismatch in product");
  const Field& k = *a.field_;
  FieldMatrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Scalar& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(l, j).is_zero()) r.at(i, j) = k.add(r.at(i, j), k.mul(x, b.at(l, j)));
      }
    }
  return r;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::Precondition, "matrix shape mismatch in sum");
  FieldMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = a.field_->add(a.entries_[i], b.entries_[i]);
  return r;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::Precondition, "matrix shape mismatch in difference");
  FieldMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = a.field_->sub(a.entries_[i], b.entries_[i]);
  return r;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

FieldMatrix FieldMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  FieldMatrix s(field_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) s.at(i, j) = at(rs[i], cs[j]);
  return s;
}

RowEchelon row_echelon(const FieldMatrix& input) {
  const Field& k = *input.field();
  FieldMatrix a = input;
  std::vector<std::size_t> row_id(a.rows());
  for (std::size_t i = 0; i < row_id.size(); ++i) row_id[i] = i;
  std::vector<bool> col_used(a.cols(), false);
  RowEchelon out;
  std::size_t top = 0;
  while (top < a.rows()) {
    std::size_t pr = a.rows(), pc = a.cols();
    for (std::size_t i = top; i < a.rows() && pr == a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!col_used[j] && !a.at(i, j).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == a.rows()) break;
    if (pr != top) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(top, j));
      std::swap(row_id[pr], row_id[top]);
    }
    const Scalar pinv = k.inv(a.at(top, pc));
    for (std::size_t i = top + 1; i < a.rows(); ++i) {
      if (a.at(i, pc).is_zero()) continue;
      const Scalar factor = k.mul(a.at(i, pc), pinv);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!a.at(top, j).is_zero()) a.at(i, j) = k.sub(a.at(i, j), k.mul(factor, a.at(top, j)));
      }
    }
    col_used[pc] = true;
    out.pivot_rows.push_back(row_id[top]);
    out.pivot_cols.push_back(pc);
    ++top;
  }
  out.rank = out.pivot_cols.size();
  return out;
}

std::size_t rank_over_field(const FieldMatrix& m) { return row_echelon(m).rank; }

FieldMatrix inverse(const FieldMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const Field& k = *m.field();
  const std::size_t n = m.rows();
  FieldMatrix a = m;
  FieldMatrix inv = FieldMatrix::identity(m.field(), n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c).is_zero()) ++p;
    if (p == n) fail(ErrorCode::Precondition, "singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a.at(p, j), a.at(c, j));
      std::swap(inv.at(p, j), inv.at(c, j));
    }
    const Scalar pinv = k.inv(a.at(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) = k.mul(a.at(c, j), pinv);
      inv.at(c, j) = k.mul(inv.at(c, j), pinv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a.at(i, c).is_zero()) continue;
      const Scalar f = a.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) = k.sub(a.at(i, j), k.mul(f, a.at(c, j)));
        inv.at(i, j) = k.sub(inv.at(i, j), k.mul(f, inv.at(c, j)));
      }
    }
  }
  return inv;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(r);
}

}  // namespace ghrv
