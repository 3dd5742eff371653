#include "ghrv/rank.hpp"

#include <algorithm>
#include <atomic>

#include "ghrv/error.hpp"
#include "ghrv/parallel.hpp"

namespace ghrv {

namespace {

Scalar random_element(const Field& k, std::mt19937_64& rng) { return k.element(rng() % k.order()); }

// True when some r x r minor is nonzero mod w.
bool has_nonzero_minor(const PolyMatrix& m, std::size_t r, const RingSpec& ring) {
  if (r == 0) return true;
  const auto rows = combinations(m.rows(), r);
  const auto cols = combinations(m.cols(), r);
  std::atomic<bool> found{false};
  parallel_for(rows.size(), [&](std::size_t i) {
    for (const auto& cs : cols) {
      if (found.load(std::memory_order_relaxed)) return;
      if (!normal_form(det(m.submatrix(rows[i], cs)), ring).is_zero()) {
        found = true;
        return;
      }
    }
  });
  return found.load();
}

std::size_t minor_count(const PolyMatrix& m, std::size_t r) {
  const std::size_t a = binomial(m.rows(), r);
  const std::size_t b = binomial(m.cols(), r);
  if (a != 0 && b > SIZE_MAX / a) return SIZE_MAX;
  return a * b;
}

}  // namespace

std::size_t rank_by_minors(const PolyMatrix& m, const RingSpec& ring) {
  for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r) {
    if (has_nonzero_minor(m, r, ring)) return r;
  }
  return 0;
}

FieldPtr evaluation_field(const RingSpec& ring) {
  const Field& k = *ring.field();
  if (k.kind() == FieldKind::Rational) return Field::prime(2147483647ull);
  const std::uint64_t p = k.characteristic();
  unsigned e = 1;
  std::uint64_t q = p;
  while (q < (std::uint64_t{1} << 32)) {
    q *= p;
    ++e;
  }
  return Field::finite(p, e);
}

std::vector<Scalar> hypersurface_point(const RingSpec& ring, const FieldPtr& field, std::mt19937_64& rng) {
  const Field& k = *field;
  const std::size_t c = ring.c();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Scalar> v(ring.poly_ring()->nvars());
    for (auto& s : v) s = random_element(k, rng);
    for (std::size_t i = 0; i < c; ++i) {
      const Scalar fi = ring.f()[i].evaluate(v, k);
      if (fi.is_zero()) continue;
      Scalar rest = k.zero();
      for (std::size_t j = 0; j < c; ++j) {
        if (j != i) rest = k.add(rest, k.mul(ring.f()[j].evaluate(v, k), v[j]));
      }
      v[i] = k.neg(k.div(rest, fi));
      return v;
    }
  }
  fail(ErrorCode::Precondition, "could not sample a point of the hypersurface");
}

FieldMatrix evaluate(const PolyMatrix& m, const std::vector<Scalar>& values, const FieldPtr& field) {
  FieldMatrix out(field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).evaluate(values, *field);
  return out;
}

std::size_t rank_lower_bound(const PolyMatrix& m, const RingSpec& ring, std::uint64_t seed, unsigned trials) {
  const FieldPtr field = evaluation_field(ring);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::size_t best = 0;
  const std::size_t cap = std::min(m.rows(), m.cols());
  for (unsigned t = 0; t < trials && best < cap; ++t) {
    best = std::max(best, rank_over_field(evaluate(m, hypersurface_point(ring, field, rng), field)));
  }
  return best;
}

RankResult rank_over_R(const PolyMatrix& m, const RingSpec& ring, std::uint64_t seed) {
  const std::size_t cap = std::min(m.rows(), m.cols());
  std::size_t r = rank_lower_bound(m, ring, seed, 3);
  while (r < cap) {
    if (minor_count(m, r + 1) > kMinorBudget) {
      // too many minors to check exhaustively; widen the evaluation instead
      return RankResult{std::max(r, rank_lower_bound(m, ring, seed + 1, 16)), false};
    }
    if (!has_nonzero_minor(m, r + 1, ring)) break;
    ++r;
  }
  return RankResult{r, true};
}

PairRanks pair_ranks(const PolyMatrix& a, const PolyMatrix& b, const RingSpec& ring, std::uint64_t seed) {
  const std::size_t n = a.rows();
  const FieldPtr field = evaluation_field(ring);
  std::mt19937_64 rng(seed ^ 0x51ed270b27f1a3c5ull);
  std::size_t ra = 0, rb = 0;
  for (unsigned t = 0; t < 8; ++t) {
    const auto pt = hypersurface_point(ring, field, rng);
    ra = std::max(ra, rank_over_field(evaluate(a, pt, field)));
    rb = std::max(rb, rank_over_field(evaluate(b, pt, field)));
    if (ra + rb > n) fail(ErrorCode::NotAComplex, "rank A + rank B exceeds the module rank");
    if (ra + rb == n) return PairRanks{{ra, true}, {rb, true}};
  }
  return PairRanks{rank_over_R(a, ring, seed), rank_over_R(b, ring, seed + 7)};
}

}  // namespace ghrv
