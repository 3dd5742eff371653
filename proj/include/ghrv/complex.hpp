#pragma once

// Graded free modules, homogeneous maps and complexes over P and R = P/(w).
//
// Degrees are internal x-degrees of basis generators. A map entry (i, j) is
// homogeneous when it is x-homogeneous of degree deg_source(j) - deg_target(i).
// A PeriodicComplex is the 2-periodic complex of a pair (A, B):
//
//   ... -> C_2 --B--> C_1 --A--> C_0 --B--> C_{-1} -> ...
//
// with C_{m+2} = C_m shifted up by one generator degree (deg w = 1).

#include <map>
#include <string>
#include <vector>

#include "ghrv/error.hpp"
#include "ghrv/matrix.hpp"
#include "ghrv/ring.hpp"

namespace ghrv {

struct GradedFreeModule {
  std::vector<int> degrees;

  std::size_t rank() const { return degrees.size(); }
  GradedFreeModule twisted(int t) const;
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);

struct HomMatrix {
  GradedFreeModule source;
  GradedFreeModule target;
  PolyMatrix entries;  // target.rank() x source.rank()

  // Positions (row, col) of entries violating homogeneity.
  std::vector<std::pair<std::size_t, std::size_t>> inhomogeneous_entries() const;
  bool is_homogeneous() const { return inhomogeneous_entries().empty(); }
};

HomMatrix make_hom(GradedFreeModule source, GradedFreeModule target, PolyMatrix entries);

enum class Ambient { P, R };

// Differentials d_n : C_n -> C_{n-1} for lo < n <= hi.
struct FiniteComplex {
  int lo = 0;
  int hi = 0;
  Ambient ambient = Ambient::P;
  std::map<int, GradedFreeModule> modules;
  std::map<int, HomMatrix> differentials;

  const GradedFreeModule& module(int n) const;
  const HomMatrix& d(int n) const;
  std::vector<std::size_t> ranks() const;
};

struct Finding {
  ErrorCode code;
  std::string message;
};

struct ValidationReport {
  std::vector<std::string> passed;
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
  std::string to_string() const;
};

// Raw pair data, e.g. as read from a file, before any checks.
struct PairData {
  RingPtr ring;
  PolyMatrix a;
  PolyMatrix b;
  std::vector<int> degrees0;
  std::vector<int> degrees1;
  bool certify = false;
};

class PeriodicComplex {
 public:
  // Validates shapes, the complex condition mod w and homogeneity; with
  // `certify`, also AB = BA = w*I over P. Throws NotAComplex,
  // NotHomogeneous or CertificationFailed.
  static PeriodicComplex from_pair(RingPtr ring, PolyMatrix a, PolyMatrix b, std::vector<int> degrees0,
                                   std::vector<int> degrees1, bool certify);
  static PeriodicComplex from_pair(const PairData& data);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return a_.entries.rows(); }
  // A : C_1 -> C_0 and B : C_2 -> C_1.
  const HomMatrix& a() const { return a_; }
  const HomMatrix& b() const { return b_; }
  const std::vector<int>& degrees0() const { return a_.target.degrees; }
  const std::vector<int>& degrees1() const { return a_.source.degrees; }
  bool certified() const { return certified_; }
  PairData data() const;

 private:
  PeriodicComplex(RingPtr ring, HomMatrix a, HomMatrix b, bool certified)
      : ring_(std::move(ring)), a_(std::move(a)), b_(std::move(b)), certified_(certified) {}

  RingPtr ring_;
  HomMatrix a_;
  HomMatrix b_;
  bool certified_;
};

// Checks: shapes, complex condition mod w, homogeneity and degree drift,
// rank A + rank B = n, and certification when requested. Never throws for
// mathematical defects; they are listed as findings.
ValidationReport validate(const PairData& data);
ValidationReport validate(const PeriodicComplex& c);
ValidationReport validate(const FiniteComplex& c, const RingSpec& ring);

// Generators of the Koszul complexes below.
//   All: (x1..xc, y1..yd), resolving P/(x, y); the Shamash construction
//        then resolves the graded residue field k = R/(x, y).
//   Y:   (y1..yd), resolving P/(y) = k[x1..xc]; the Shamash construction
//        then resolves R/(y)R, the residue field of Q extended to R, whose
//        variety is all of P^{c-1}.
enum class KoszulVariables { All, Y };

// Koszul complex over P. Generator e_v has degree 1 for an x-variable and 0
// for a y-variable; basis of F_k = k-subsets in lex order.
FiniteComplex koszul(const RingSpec& ring, KoszulVariables which = KoszulVariables::All);
// Coefficients of xi = sum_v g_v e_v with d(xi) = w. All: g = (f_1..f_c, 0..0).
// Y: g_j = sum_i h_ij x_i where f_i = sum_j h_ij y_j.
std::vector<Poly> xi_coefficients(const RingSpec& ring, KoszulVariables which);
// Left exterior multiplication by xi, F_k -> F_{k+1}.
PolyMatrix exterior_xi(const RingSpec& ring, std::size_t k, KoszulVariables which = KoszulVariables::All);

// Resolution over R with G_n = sum_j F_{n-2j}, copy j shifted up by j,
// differential = Koszul differential + exterior_xi.
FiniteComplex shamash_resolution(const RingSpec& ring, int length, KoszulVariables which = KoszulVariables::All);

// (d_{m+1}, d_{m+2}) of a Shamash resolution, m = number of Koszul
// generators, certified. Throws NotStabilized or CertificationFailed.
PeriodicComplex extract_mf(const FiniteComplex& g, const RingPtr& ring, KoszulVariables which = KoszulVariables::All);

inline PeriodicComplex periodic_from_pair(RingPtr ring, PolyMatrix a, PolyMatrix b, std::vector<int> degrees0,
                                          std::vector<int> degrees1, bool certify) {
  return PeriodicComplex::from_pair(std::move(ring), std::move(a), std::move(b), std::move(degrees0),
                                    std::move(degrees1), certify);
}

// Mapping cone of multiplication by an x-homogeneous p:
// ([[A, p], [0, -B]], [[B, p], [0, -A]]). Throws NotHomogeneousScalar.
PeriodicComplex cone_mul(const PeriodicComplex& c, const Poly& p);
// Sigma C: (-B, -A) with the homological index moved by one.
PeriodicComplex shift(const PeriodicComplex& c);
PeriodicComplex direct_sum(const PeriodicComplex& c, const PeriodicComplex& d);
// Hom(C, R): (B^T, A^T), degrees negated.
PeriodicComplex dual(const PeriodicComplex& c);

}  // namespace ghrv
