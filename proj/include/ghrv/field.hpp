#pragma once

// Coefficient fields: GF(p), GF(p^e) and QQ.
//
// Finite-field elements are encoded as an integer in [0, q). For GF(p^e)
// the base-p digits of the code are the coefficients (lowest first) of the
// residue class modulo the defining polynomial, so GF(p) elements carry the
// same code inside any GF(p^e). Rationals are reduced mpq values.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace ghrv {

inline constexpr unsigned kDefaultExtensionBound = 4;

class Scalar {
 public:
  Scalar() : v_(std::uint64_t{0}) {}
  explicit Scalar(std::uint64_t code) : v_(code) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  std::uint64_t code() const { return std::get<std::uint64_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  bool is_zero() const {
    return is_rational() ? sgn(rational()) == 0 : code() == 0;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
    if (a.is_rational()) return a.rational() < b.rational();
    return a.code() < b.code();
  }

 private:
  std::variant<std::uint64_t, mpq_class> v_;
};

enum class FieldKind { Prime, Extension, Rational };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr prime(std::uint64_t p);
  // Public constructor for GF(p^e): e >= 2 and e <= bound.
  static FieldPtr extension(std::uint64_t p, unsigned e,
                            unsigned bound = kDefaultExtensionBound);
  // GF(q) for any prime power q; e = 1 gives the prime field.
  static FieldPtr finite(std::uint64_t p, unsigned e);
  static FieldPtr rationals();
  // "GF(q)" or "QQ".
  static FieldPtr parse(const std::string& name);

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != FieldKind::Rational; }
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint64_t order() const { return q_; }
  // Monic defining polynomial over GF(p), coefficients lowest first.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  std::string name() const;

  // True when every element of `sub` is an element of this field under the
  // code embedding (GF(p) inside GF(p^e), or identical fields).
  bool contains(const Field& sub) const;
  bool same_as(const Field& other) const;
  FieldPtr prime_field() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& v) const;
  // Reduces a scalar of another field into this one (QQ -> GF(p), or an
  // embedding of a subfield).
  Scalar coerce(const Scalar& s, const Field& from) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t n) const;
  Scalar frobenius(const Scalar& a) const { return pow(a, p_); }
  bool is_one(const Scalar& a) const { return a == one(); }

  // Finite fields: element with the given code, and the generator t of
  // GF(p^e) over GF(p).
  Scalar element(std::uint64_t code) const;
  Scalar generator() const;

  // Symmetric-residue or polynomial-in-`a` rendering.
  std::string to_string(const Scalar& a) const;
  // Parses an integer, "n/d" (QQ only) or, for GF(p^e), a polynomial in `a`.
  Scalar parse_scalar(const std::string& text) const;

  Field(FieldKind kind, std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus);

 private:
  std::vector<std::uint64_t> digits(std::uint64_t code) const;
  std::uint64_t encode(const std::vector<std::uint64_t>& digits) const;

  FieldKind kind_;
  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

bool is_prime(std::uint64_t n);

// Rabin irreducibility test for a monic polynomial over GF(p)
// (coefficients lowest first). Includes the t^(p^e) = t (mod m) check.
bool is_irreducible(const std::vector<std::uint64_t>& monic, std::uint64_t p);

// Smallest monic irreducible of degree e over GF(p) under the ascending
// search order (coefficient vector read as a base-p number).
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned e);

}  // namespace ghrv
