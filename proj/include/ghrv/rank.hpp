#pragma once

// Ranks over the domain R = P/(w).
//
// rank_by_minors is the literal definition: the largest r with an r x r
// minor that is nonzero modulo w, searched downward from min(rows, cols).
// rank_over_R combines a lower bound from evaluation at points of the
// hypersurface w = 0 over a large finite field (any nonzero evaluated minor
// is nonzero mod w) with an exact check that every (r+1)-minor vanishes
// mod w, falling back to repeated evaluation when that check is too big.

#include <cstdint>
#include <random>
#include <vector>

#include "ghrv/matrix.hpp"
#include "ghrv/ring.hpp"

namespace ghrv {

inline constexpr std::size_t kMinorBudget = 20000;

struct RankResult {
  std::size_t rank = 0;
  bool certified = false;  // false: Monte Carlo estimate, exact with high probability
};

std::size_t rank_by_minors(const PolyMatrix& m, const RingSpec& ring);

// Field used for evaluation: GF(p^e) with p^e >= 2^32 over a GF(p) ring,
// GF(2^31 - 1) over QQ.
FieldPtr evaluation_field(const RingSpec& ring);

// Values for (x1..xc, y1..yd) with w = 0.
std::vector<Scalar> hypersurface_point(const RingSpec& ring, const FieldPtr& field, std::mt19937_64& rng);

FieldMatrix evaluate(const PolyMatrix& m, const std::vector<Scalar>& values, const FieldPtr& field);

std::size_t rank_lower_bound(const PolyMatrix& m, const RingSpec& ring, std::uint64_t seed, unsigned trials);

RankResult rank_over_R(const PolyMatrix& m, const RingSpec& ring, std::uint64_t seed = 0);

// Ranks of a pair with AB = BA = 0 mod w (n x n). rank A + rank B <= n over
// Frac(R), so lower bounds summing to n certify both values.
struct PairRanks {
  RankResult a;
  RankResult b;
};
PairRanks pair_ranks(const PolyMatrix& a, const PolyMatrix& b, const RingSpec& ring, std::uint64_t seed = 0);

}  // namespace ghrv
