#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately avoid the library's own algorithms: determinants by the
// Leibniz sum, ranks by exhaustive minors, projective points by brute force.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "ghrv/complex.hpp"
#include "ghrv/fixtures.hpp"
#include "ghrv/matrix.hpp"
#include "ghrv/ring.hpp"
#include "ghrv/variety.hpp"

namespace testing {

inline ghrv::RingPtr ring5() { return ghrv::example_ring(ghrv::Field::prime(5)); }
inline ghrv::RingPtr ring_over(std::uint64_t p) { return ghrv::example_ring(ghrv::Field::prime(p)); }

inline ghrv::PolyMatrix mat(const ghrv::RingSpec& ring, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<ghrv::Poly>> polys;
  for (const auto& r : rows) {
    std::vector<ghrv::Poly> row;
    for (const auto& e : r) row.push_back(ring.parse(e));
    polys.push_back(std::move(row));
  }
  return ghrv::PolyMatrix::from_rows(ring.poly_ring(), polys);
}

// Leibniz determinant: sum over permutations with explicit sign.
inline ghrv::Poly leibniz_det(const ghrv::PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ghrv::Poly total(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    ghrv::Poly term = ghrv::Poly::from_int(m.ring(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m.at(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline ghrv::Scalar leibniz_det(const ghrv::FieldMatrix& m) {
  const auto& f = *m.field();
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ghrv::Scalar total = f.zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    ghrv::Scalar term = f.one();
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m.at(i, perm[i]));
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Largest r with a nonzero r x r minor, by enumeration of all minors.
inline std::size_t minor_rank(const ghrv::FieldMatrix& m) {
  for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r) {
    for (const auto& rows : ghrv::combinations(m.rows(), r))
      for (const auto& cols : ghrv::combinations(m.cols(), r))
        if (!leibniz_det(m.submatrix(rows, cols)).is_zero()) return r;
  }
  return 0;
}

// Residue matrix at a point with constant preimages, computed by plain
// evaluation: x_i -> alpha_i, y -> 0.
inline ghrv::FieldMatrix residue_by_evaluation(const ghrv::PolyMatrix& m, const ghrv::ProjPoint& alpha) {
  ghrv::FieldMatrix out(alpha.field, m.rows(), m.cols());
  const auto& ring = *m.ring();
  std::vector<ghrv::Scalar> values(ring.nvars(), alpha.field->zero());
  for (std::size_t i = 0; i < ring.nx(); ++i) values[i] = alpha.coords[i];
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).evaluate(values, *alpha.field);
  return out;
}

// Points of P^{c-1}(F_q) by brute force: every nonzero vector, scaled so the
// first nonzero coordinate is 1, collected in a set of codes.
inline std::set<std::vector<std::uint64_t>> brute_force_points(const ghrv::FieldPtr& f, std::size_t c) {
  std::set<std::vector<std::uint64_t>> out;
  const std::uint64_t q = f->order();
  std::vector<std::uint64_t> v(c, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < c && v[k] == q - 1) v[k++] = 0;
    if (k == c) break;
    ++v[k];
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    const ghrv::Scalar inv = f->inv(f->element(v[lead]));
    std::vector<std::uint64_t> scaled;
    for (auto x : v) scaled.push_back(f->mul(f->element(x), inv).code());
    out.insert(scaled);
  }
  return out;
}

inline std::vector<ghrv::ProjPoint> points(const ghrv::FieldPtr& f, std::size_t c = 2) {
  return ghrv::enumerate_points(f, c);
}

inline ghrv::ProjPoint pt(const ghrv::FieldPtr& f, long long a, long long b) {
  return ghrv::ProjPoint::normalized(f, {f->from_int(a), f->from_int(b)});
}

}  // namespace testing
