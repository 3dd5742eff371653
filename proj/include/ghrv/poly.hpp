#pragma once

// Sparse multivariate polynomials over a runtime field.
//
// Variables are split into x-variables (degree 1, listed first) and
// y-variables (degree 0). Terms are kept sorted in graded reverse
// lexicographic order with x1 > ... > xc > y1 > ... > yd, largest first.

#include <climits>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghrv/field.hpp"

namespace ghrv {

inline constexpr int kMinusInfinity = INT_MIN;

using Exponents = std::vector<std::uint32_t>;

// a > b in grevlex
bool grevlex_greater(const Exponents& a, const Exponents& b);

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  PolyRing(FieldPtr field, std::vector<std::string> xvars, std::vector<std::string> yvars);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return names_.size() - nx_; }
  bool is_x(std::size_t i) const { return i < nx_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  PolyRingPtr with_field(FieldPtr field) const;
  // Same variable list and same field.
  bool compatible(const PolyRing& other) const;

 private:
  FieldPtr field_;
  std::vector<std::string> names_;
  std::size_t nx_;
};

struct Term {
  Exponents exp;
  Scalar coeff;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(PolyRingPtr ring, const Scalar& c);
  static Poly from_int(PolyRingPtr ring, long long c);
  static Poly variable(PolyRingPtr ring, std::size_t index);
  static Poly variable(PolyRingPtr ring, const std::string& name);
  static Poly monomial(PolyRingPtr ring, Exponents exp, const Scalar& c);
  // Terms in any order; like terms are combined and zeros dropped.
  static Poly from_terms(PolyRingPtr ring, std::vector<Term> terms);

  const PolyRingPtr& ring() const { return ring_; }
  const Field& field() const { return *ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading_term() const { return terms_.front(); }

  int total_degree() const;  // kMinusInfinity for zero
  bool mentions_x() const;
  bool mentions_y() const;
  bool mentions(std::size_t var) const;
  // x-degree when all terms share one x-degree; nullopt otherwise or for 0.
  std::optional<int> x_homogeneous_degree() const;
  bool is_x_homogeneous() const { return is_zero() || x_homogeneous_degree().has_value(); }
  Scalar constant_term() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& c) const;
  Poly pow(unsigned n) const;

  friend bool operator==(const Poly& a, const Poly& b);

  // Simultaneous substitution; unbound variables are kept. Bindings may
  // live over an extension of this polynomial's field.
  Poly substitute(const std::map<std::size_t, Poly>& bindings) const;
  // Point evaluation; values[i] is the value of variable i in `target`.
  Scalar evaluate(std::span<const Scalar> values, const Field& target) const;
  Poly with_field(FieldPtr field) const;

  // Remainder of division by a single divisor (full reduction).
  Poly remainder(const Poly& divisor) const;
  // Quotient; throws Precondition when the division is not exact.
  Poly divide_exact(const Poly& divisor) const;

  // Monic over finite fields; primitive integral with positive leading
  // coefficient over QQ. Zero stays zero.
  Poly normalized() const;

  std::string to_string() const;

 private:
  void check_ring(const Poly& o) const;
  PolyRingPtr ring_;
  std::vector<Term> terms_;  // grevlex descending, nonzero coefficients
};

std::string exponents_to_string(const PolyRing& ring, const Exponents& exp);

}  // namespace ghrv
