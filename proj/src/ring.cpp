#include "ghrv/ring.hpp"

#include "ghrv/error.hpp"
#include "ghrv/parse.hpp"

namespace ghrv {

RingPtr RingSpec::make(FieldPtr field, std::vector<std::string> yvars, std::vector<std::string> xvars,
                       const std::vector<std::string>& f) {
  if (field->kind() == FieldKind::Extension) {
    fail(ErrorCode::UnsupportedField, "ring coefficients must be GF(p) or QQ, got " + field->name());
  }
  if (xvars.size() < 2) fail(ErrorCode::BadArity, "need c >= 2 x-variables, got " + std::to_string(xvars.size()));
  if (yvars.empty()) fail(ErrorCode::BadArity, "need at least one y-variable");
  if (f.size() != xvars.size()) {
    fail(ErrorCode::BadArity, "expected " + std::to_string(xvars.size()) + " polynomials f_i, got " +
                                  std::to_string(f.size()));
  }
  auto ring = std::make_shared<const PolyRing>(field, std::move(xvars), std::move(yvars));
  std::vector<Poly> fs;
  for (const auto& text : f) fs.push_back(parse_poly(text, ring));
  return make(ring, std::move(fs));
}

RingPtr RingSpec::make(PolyRingPtr ring, std::vector<Poly> f) {
  if (ring->field()->kind() == FieldKind::Extension) {
    fail(ErrorCode::UnsupportedField, "ring coefficients must be GF(p) or QQ");
  }
  if (ring->nx() < 2) fail(ErrorCode::BadArity, "need c >= 2 x-variables");
  if (ring->ny() < 1) fail(ErrorCode::BadArity, "need at least one y-variable");
  if (f.size() != ring->nx()) fail(ErrorCode::BadArity, "need one f_i per x-variable");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) fail(ErrorCode::NotInMaximalIdeal, "f" + std::to_string(i + 1) + " is zero");
    if (f[i].mentions_x()) {
      fail(ErrorCode::VariableLeak, "f" + std::to_string(i + 1) + " = " + f[i].to_string() + " mentions an x-variable");
    }
    if (!f[i].constant_term().is_zero()) {
      fail(ErrorCode::NotInMaximalIdeal, "f" + std::to_string(i + 1) + " = " + f[i].to_string() +
                                             " has a nonzero constant term");
    }
  }
  Regularity reg = Regularity::Unverified;
  bool all_monomial = true;
  for (const auto& fi : f) all_monomial = all_monomial && fi.is_monomial();
  if (all_monomial) {
    // pairwise coprime monomials form a regular sequence
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        const auto& a = f[i].leading_term().exp;
        const auto& b = f[j].leading_term().exp;
        for (std::size_t v = 0; v < a.size(); ++v) {
          if (a[v] && b[v]) {
            fail(ErrorCode::NotRegularSequence, f[i].to_string() + " and " + f[j].to_string() +
                                                    " share the variable " + ring->names()[v]);
          }
        }
      }
    }
    reg = Regularity::Verified;
  }
  Poly w(ring);
  for (std::size_t i = 0; i < f.size(); ++i) w += f[i] * Poly::variable(ring, i);
  return RingPtr(new RingSpec(std::move(ring), std::move(f), std::move(w), reg));
}

std::vector<std::string> RingSpec::xvars() const {
  const auto& n = ring_->names();
  return {n.begin(), n.begin() + static_cast<long>(c())};
}

std::vector<std::string> RingSpec::yvars() const {
  const auto& n = ring_->names();
  return {n.begin() + static_cast<long>(c()), n.end()};
}

Poly RingSpec::parse(const std::string& text) const { return parse_poly(text, ring_); }

bool RingSpec::same_as(const RingSpec& other) const {
  return this == &other || (ring_->compatible(*other.ring_) && f_ == other.f_);
}

Alpha Alpha::constant(const RingSpec& ring, FieldPtr field, std::vector<Scalar> point) {
  auto target = ring.poly_ring()->with_field(field);
  std::vector<Poly> pre;
  for (const auto& a : point) pre.push_back(Poly::constant(target, a));
  return with_preimages(ring, std::move(field), std::move(point), std::move(pre));
}

Alpha Alpha::with_preimages(const RingSpec& ring, FieldPtr field, std::vector<Scalar> point,
                            std::vector<Poly> preimages) {
  if (!field->contains(*ring.field())) {
    fail(ErrorCode::RingMismatch, "point field " + field->name() + " does not contain " + ring.field()->name());
  }
  if (point.size() != ring.c() || preimages.size() != ring.c()) {
    fail(ErrorCode::BadArity, "point needs " + std::to_string(ring.c()) + " coordinates");
  }
  bool nonzero = false;
  for (const auto& a : point) nonzero = nonzero || !a.is_zero();
  if (!nonzero) fail(ErrorCode::Precondition, "projective point has all coordinates zero");
  for (std::size_t i = 0; i < preimages.size(); ++i) {
    const Poly& a = preimages[i];
    if (!a.ring()->field()->same_as(*field) || a.ring()->names() != ring.poly_ring()->names()) {
      fail(ErrorCode::RingMismatch, "preimage " + std::to_string(i + 1) + " lives in the wrong ring");
    }
    if (a.mentions_x()) fail(ErrorCode::VariableLeak, "preimage " + a.to_string() + " mentions an x-variable");
    if (!(a.constant_term() == point[i])) {
      fail(ErrorCode::Precondition, "preimage " + a.to_string() + " does not reduce to coordinate " +
                                        field->to_string(point[i]));
    }
  }
  return Alpha{std::move(field), std::move(point), std::move(preimages)};
}

RElem::RElem(const RingSpec& ring, const Poly& representative) : rep_(normal_form(representative, ring)) {}

Poly normal_form(const Poly& p, const RingSpec& ring) { return p.remainder(ring.w()); }

Poly image_in_kx(const Poly& p, const RingSpec& ring) {
  std::vector<Term> kept;
  for (const auto& t : p.terms()) {
    bool y_free = true;
    for (std::size_t j = ring.c(); j < t.exp.size(); ++j) y_free = y_free && t.exp[j] == 0;
    if (y_free) kept.push_back(t);
  }
  return Poly::from_terms(p.ring(), std::move(kept));
}

Poly specialize(const Poly& p, const Alpha& alpha, const RingSpec& ring) {
  std::map<std::size_t, Poly> bindings;
  for (std::size_t i = 0; i < ring.c(); ++i) bindings.emplace(i, alpha.preimages[i]);
  Poly out = p.substitute(bindings);
  if (!out.ring()->field()->same_as(*alpha.field)) out = out.with_field(alpha.field);
  return out;
}

Scalar residue(const Poly& q, const RingSpec& ring) {
  (void)ring;
  if (q.mentions_x()) fail(ErrorCode::VariableLeak, q.to_string() + " mentions an x-variable");
  return q.constant_term();
}

bool is_local_unit(const Poly& q, const RingSpec& ring) { return !residue(q, ring).is_zero(); }

}  // namespace ghrv
