#pragma once

// The generic hypersurface R = P/(w), P = Q[x1..xc], w = f1*x1 + ... + fc*xc,
// with Q modelled by polynomials in the degree-0 variables y1..yd. Locality
// of Q is visible only through is_local_unit (nonzero constant term).

#include <memory>
#include <string>
#include <vector>

#include "ghrv/field.hpp"
#include "ghrv/poly.hpp"

namespace ghrv {

enum class Regularity { Verified, Unverified };

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

class RingSpec {
 public:
  // Throws BadArity, NotInMaximalIdeal, NotRegularSequence, VariableLeak.
  static RingPtr make(FieldPtr field, std::vector<std::string> yvars, std::vector<std::string> xvars,
                      const std::vector<std::string>& f);
  static RingPtr make(PolyRingPtr ring, std::vector<Poly> f);

  const FieldPtr& field() const { return ring_->field(); }
  const PolyRingPtr& poly_ring() const { return ring_; }
  std::size_t c() const { return ring_->nx(); }
  std::size_t d() const { return ring_->ny(); }
  std::vector<std::string> xvars() const;
  std::vector<std::string> yvars() const;
  const std::vector<Poly>& f() const { return f_; }
  const Poly& w() const { return w_; }
  Regularity regularity() const { return regularity_; }

  Poly parse(const std::string& text) const;
  Poly x(std::size_t i) const { return Poly::variable(ring_, i); }
  Poly y(std::size_t j) const { return Poly::variable(ring_, c() + j); }
  Poly constant(long long v) const { return Poly::from_int(ring_, v); }

  bool same_as(const RingSpec& other) const;

 private:
  RingSpec(PolyRingPtr ring, std::vector<Poly> f, Poly w, Regularity reg)
      : ring_(std::move(ring)), f_(std::move(f)), w_(std::move(w)), regularity_(reg) {}

  PolyRingPtr ring_;
  std::vector<Poly> f_;
  Poly w_;
  Regularity regularity_;
};

inline RingPtr make_ring(FieldPtr field, std::vector<std::string> yvars, std::vector<std::string> xvars,
                         const std::vector<std::string>& f) {
  return RingSpec::make(std::move(field), std::move(yvars), std::move(xvars), f);
}

// A point of P^{c-1} over a field containing the ring's field, with
// preimages a_i in Q (polynomials in y) whose constant terms are the
// coordinates.
struct Alpha {
  FieldPtr field;
  std::vector<Scalar> point;
  std::vector<Poly> preimages;  // over ring->poly_ring()->with_field(field)

  // Constant preimages a_i = alpha_i.
  static Alpha constant(const RingSpec& ring, FieldPtr field, std::vector<Scalar> point);
  static Alpha with_preimages(const RingSpec& ring, FieldPtr field, std::vector<Scalar> point,
                              std::vector<Poly> preimages);
};

// Element of R, stored by its normal form modulo (w).
class RElem {
 public:
  RElem(const RingSpec& ring, const Poly& representative);
  const Poly& representative() const { return rep_; }
  friend bool operator==(const RElem& a, const RElem& b) { return a.rep_ == b.rep_; }

 private:
  Poly rep_;
};

// Remainder of p on division by w in the fixed order.
Poly normal_form(const Poly& p, const RingSpec& ring);
// R -> k[x1..xc]: every y-variable set to 0.
Poly image_in_kx(const Poly& p, const RingSpec& ring);
// R -> R_alpha: x_i -> a_i. Result is a polynomial in y over alpha.field.
Poly specialize(const Poly& p, const Alpha& alpha, const RingSpec& ring);
// Q -> k: constant term; VariableLeak if q mentions an x-variable.
Scalar residue(const Poly& q, const RingSpec& ring);
bool is_local_unit(const Poly& q, const RingSpec& ring);

}  // namespace ghrv
