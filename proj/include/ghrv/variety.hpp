#pragma once

// Rank varieties of periodic complexes as unions of projective zero sets.
//
// V(C) = Z(Ibar_{rA}(A)) u Z(Ibar_{rB}(B)), where Ibar_r is the image in
// k[x1..xc] of the ideal of r x r minors and rA, rB are ranks over R.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghrv/complex.hpp"
#include "ghrv/matrix.hpp"
#include "ghrv/rank.hpp"
#include "ghrv/ring.hpp"

namespace ghrv {

// Generators are y-free, x-homogeneous, normalized, deduplicated and sorted.
// Empty list: zero ideal. A constant generator: unit ideal.
struct IdealGens {
  std::vector<Poly> generators;

  bool is_zero_ideal() const { return generators.empty(); }
  bool is_unit_ideal() const;
  std::vector<std::string> to_strings() const;
};

struct ProjPoint {
  FieldPtr field;
  std::vector<Scalar> coords;  // first nonzero coordinate is 1

  // Scales so the first nonzero coordinate is 1.
  static ProjPoint normalized(FieldPtr field, std::vector<Scalar> coords);
  std::string to_string() const;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords == b.coords; }
};

// One zero set Z(Ibar_r(M)). When the number of minors is within budget the
// generators are listed explicitly and membership evaluates them; otherwise
// membership tests rank(Mbar(alpha)) < r, the same condition.
struct Component {
  PolyMatrix image;  // y-killed matrix over k[x]
  std::size_t r = 0;
  bool materialized = false;
  IdealGens ideal;
};

struct ZeroSetUnion {
  RingPtr ring;
  std::vector<Component> components;
};

inline constexpr std::size_t kGeneratorBudget = 100000;

// Largest r with some r x r minor nonzero mod w. Exact by construction for
// small matrices; see RankResult::certified otherwise.
RankResult rank_over_R(const HomMatrix& m, const RingSpec& ring);

// All r x r minors, mapped to k[x]; r = 0 gives the unit ideal.
// Throws TooLarge when the number of minors exceeds `budget`.
IdealGens minor_ideal_image(const PolyMatrix& m, std::size_t r, const RingSpec& ring,
                            std::size_t budget = kGeneratorBudget);
// Literal route: minor over P, normal form mod w, then image. For testing
// the equality with minor_ideal_image.
IdealGens minor_ideal_image_via_normal_form(const PolyMatrix& m, std::size_t r, const RingSpec& ring);

// Normalize, drop zeros, deduplicate up to scalars and sort.
IdealGens make_ideal(std::vector<Poly> gens);

ZeroSetUnion rank_variety(const PeriodicComplex& c);
// Component for an arbitrary matrix at rank r.
Component make_component(const PolyMatrix& m, std::size_t r, const RingSpec& ring);

bool membership(const ZeroSetUnion& v, const ProjPoint& alpha);
bool component_contains(const Component& comp, const RingSpec& ring, const ProjPoint& alpha);
// All generators of `ideal` vanish at alpha.
bool ideal_vanishes_at(const IdealGens& ideal, const ProjPoint& alpha);

// All normalized points of P^{c-1}(field), (q^c - 1)/(q - 1) of them.
std::vector<ProjPoint> enumerate_points(const FieldPtr& field, std::size_t c);
std::vector<ProjPoint> member_points(const ZeroSetUnion& v, const FieldPtr& field);

struct EmptinessVerdict {
  bool empty = false;               // empty over GF(p^j) for every j <= bound
  unsigned bound = 0;
  std::optional<ProjPoint> witness;  // when nonempty
};
EmptinessVerdict is_empty(const ZeroSetUnion& v, unsigned extension_bound = kDefaultExtensionBound);

// Residue-field matrix of m specialized at alpha: x_i -> a_i, then y -> 0.
FieldMatrix residue_matrix(const PolyMatrix& m, const Alpha& alpha, const RingSpec& ring);

// rank(A_alpha (x) k) + rank(B_alpha (x) k) = n.
bool contractible_at(const PeriodicComplex& c, const Alpha& alpha);

struct ContractionData {
  int index = 0;
  // s_0 : C_0 -> C_1 and s_{-1} : C_{-1} -> C_0, constant lifts to R_alpha.
  PolyMatrix s_n;
  PolyMatrix s_n_minus_1;
  // Residue of d_1 s_0 + s_{-1} d_0, invertible.
  FieldMatrix residue_homotopy;
};

// Throws NotContractible.
ContractionData construct_contraction(const PeriodicComplex& c, const Alpha& alpha);

}  // namespace ghrv
