#pragma once

// End-to-end constructions: the complete resolution of k, realization of
// projective algebraic sets by iterated cones, module varieties, and the
// reproduction of the worked examples.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghrv/complex.hpp"
#include "ghrv/variety.hpp"

namespace ghrv {

// Complete resolution of k = R/(y)R: Koszul complex on the y-variables,
// Shamash resolution of length d + 2, then the stabilized pair. Matrices are
// 2^{d-1} square and certified; the variety is all of P^{c-1}.
PeriodicComplex complete_resolution_of_k(const RingPtr& ring);

// Pointwise check of V(C_i) = V(C_{i-1}) n Z(p_i) over GF(p^j), j <= bound.
struct StepCheck {
  bool performed = false;  // false over QQ
  unsigned bound = 0;
  std::size_t points = 0;
  std::size_t mismatches = 0;
  std::optional<ProjPoint> first_mismatch;
  bool ok() const { return mismatches == 0; }
};

struct RealizationStep {
  Poly p;  // as given, over k[x]
  std::size_t size = 0;
  ZeroSetUnion variety;
  StepCheck check;
};

struct RealizationTrace {
  RingPtr ring;
  std::vector<Poly> inputs;
  std::vector<PeriodicComplex> complexes;  // C_0 = resolution of k, then one cone per input
  std::vector<RealizationStep> steps;      // steps[0] describes C_0
  const PeriodicComplex& result() const { return complexes.back(); }
  const ZeroSetUnion& variety() const { return steps.back().variety; }
  bool ok() const;
};

struct RealizeOptions {
  bool verify = true;
  unsigned extension_bound = 2;
};

// Each p must be x-homogeneous, y-free and nonzero. Throws NotHomogeneousScalar
// or VariableLeak.
RealizationTrace realize(const RingPtr& ring, const std::vector<Poly>& ps, const RealizeOptions& options = {});
RealizationTrace realize(const RingPtr& ring, const std::vector<std::string>& ps,
                         const RealizeOptions& options = {});

// A module of finite projective dimension presented by its complete
// resolution; only the periodic pair is stored.
struct ModulePresentation {
  PeriodicComplex resolution;
};

// Requires a certified resolution (otherwise InvalidComplex).
ZeroSetUnion module_variety(const ModulePresentation& m);

struct PreimageTrial {
  std::vector<Poly> preimages;
  bool contractible = false;
};

struct PreimageReport {
  std::uint64_t seed = 0;
  ProjPoint point;
  bool constant_verdict = false;
  std::vector<PreimageTrial> trials;
  bool consistent() const;
};

// Compares contractibility at alpha for constant preimages and for `trials`
// random perturbations a_i + (terms of y-degree 1 and 2).
PreimageReport preimage_independence_check(const PeriodicComplex& c, const ProjPoint& alpha, unsigned trials,
                                           std::uint64_t seed);

struct Claim {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReproductionReport {
  FieldPtr field;
  std::uint64_t seed = 0;
  std::vector<Claim> claims;
  std::vector<ProjPoint> witness_points;  // member points of V(K^{x1*x2})
  bool ok() const;
};

// Reruns the worked examples over `field` (a prime field).
ReproductionReport reproduce_worked_examples(const FieldPtr& field, std::uint64_t seed = 0);

}  // namespace ghrv
