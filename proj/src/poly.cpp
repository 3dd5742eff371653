#include "ghrv/poly.hpp"

#include <algorithm>
#include <numeric>

#include "ghrv/error.hpp"

namespace ghrv {

bool grevlex_greater(const Exponents& a, const Exponents& b) {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

PolyRing::PolyRing(FieldPtr field, std::vector<std::string> xvars, std::vector<std::string> yvars)
    : field_(std::move(field)), nx_(xvars.size()) {
  names_ = std::move(xvars);
  names_.insert(names_.end(), yvars.begin(), yvars.end());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) fail(ErrorCode::Format, "duplicate variable '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

PolyRingPtr PolyRing::with_field(FieldPtr field) const {
  std::vector<std::string> xs(names_.begin(), names_.begin() + static_cast<long>(nx_));
  std::vector<std::string> ys(names_.begin() + static_cast<long>(nx_), names_.end());
  return std::make_shared<const PolyRing>(std::move(field), std::move(xs), std::move(ys));
}

bool PolyRing::compatible(const PolyRing& other) const {
  return this == &other ||
         (nx_ == other.nx_ && names_ == other.names_ && field_->same_as(*other.field_));
}

namespace {

// Sorts, combines like terms, drops zeros.
std::vector<Term> canonical(const Field& k, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_greater(a.exp, b.exp); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents exp_sub(const Exponents& b, const Exponents& a) {
  Exponents r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

}  // namespace

Poly Poly::constant(PolyRingPtr ring, const Scalar& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back(Term{Exponents(ring->nvars(), 0), c});
  return p;
}

Poly Poly::from_int(PolyRingPtr ring, long long c) {
  const Scalar s = ring->field()->from_int(c);
  return constant(std::move(ring), s);
}

Poly Poly::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) fail(ErrorCode::UnknownVariable, "variable index out of range");
  Exponents e(ring->nvars(), 0);
  e[index] = 1;
  const Scalar one = ring->field()->one();
  return monomial(std::move(ring), std::move(e), one);
}

Poly Poly::variable(PolyRingPtr ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) fail(ErrorCode::UnknownVariable, "'" + name + "'");
  return variable(std::move(ring), *idx);
}

Poly Poly::monomial(PolyRingPtr ring, Exponents exp, const Scalar& c) {
  Poly p(ring);
  if (exp.size() != ring->nvars()) fail(ErrorCode::Precondition, "exponent vector length mismatch");
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(exp), c});
  return p;
}

Poly Poly::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  Poly p(ring);
  p.terms_ = canonical(*ring->field(), std::move(terms));
  return p;
}

void Poly::check_ring(const Poly& o) const {
  if (!ring_ || !o.ring_ || !ring_->compatible(*o.ring_)) {
    fail(ErrorCode::RingMismatch, "polynomials live in different rings");
  }
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(), [](auto e) { return e == 0; }));
}

int Poly::total_degree() const {
  if (terms_.empty()) return kMinusInfinity;
  const auto& e = terms_.front().exp;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

bool Poly::mentions(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exp[var] != 0; });
}

bool Poly::mentions_x() const {
  for (std::size_t i = 0; i < ring_->nx(); ++i) {
    if (mentions(i)) return true;
  }
  return false;
}

bool Poly::mentions_y() const {
  for (std::size_t i = ring_->nx(); i < ring_->nvars(); ++i) {
    if (mentions(i)) return true;
  }
  return false;
}

std::optional<int> Poly::x_homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::optional<int> deg;
  for (const auto& t : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < ring_->nx(); ++i) d += static_cast<int>(t.exp[i]);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

Scalar Poly::constant_term() const {
  if (!terms_.empty()) {
    const auto& last = terms_.back();
    if (std::all_of(last.exp.begin(), last.exp.end(), [](auto e) { return e == 0; })) return last.coeff;
  }
  return ring_->field()->zero();
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  const Field& k = field();
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grevlex_greater(terms_[i].exp, o.terms_[j].exp))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || grevlex_greater(o.terms_[j].exp, terms_[i].exp)) {
      merged.push_back(o.terms_[j++]);
    } else {
      Scalar c = k.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!c.is_zero()) merged.push_back(Term{std::move(terms_[i].exp), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  const Field& k = a.field();
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Exponents e(s.exp.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exp[i] + t.exp[i];
      prod.push_back(Term{std::move(e), k.mul(s.coeff, t.coeff)});
    }
  }
  Poly r(a.ring_);
  r.terms_ = canonical(k, std::move(prod));
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly r = Poly::constant(ring_, field().one());
  Poly base = *this;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

Poly Poly::substitute(const std::map<std::size_t, Poly>& bindings) const {
  PolyRingPtr target = ring_;
  for (const auto& [var, value] : bindings) {
    if (var >= ring_->nvars()) fail(ErrorCode::UnknownVariable, "substitution index out of range");
    if (!value.ring_->field()->contains(field())) {
      fail(ErrorCode::RingMismatch, "binding field does not contain " + field().name());
    }
    if (value.ring_->names() != ring_->names()) {
      fail(ErrorCode::RingMismatch, "binding uses a different variable list");
    }
    target = value.ring_;
  }
  const Field& k = *target->field();
  std::map<std::pair<std::size_t, std::uint32_t>, Poly> powers;
  auto power = [&](std::size_t var, std::uint32_t e) -> const Poly& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, bindings.at(var).pow(e)).first;
    return it->second;
  };
  Poly result(target);
  for (const auto& t : terms_) {
    Exponents kept = t.exp;
    std::vector<const Poly*> factors;
    for (std::size_t v = 0; v < kept.size(); ++v) {
      if (kept[v] != 0 && bindings.count(v)) {
        factors.push_back(&power(v, kept[v]));
        kept[v] = 0;
      }
    }
    Poly piece = Poly::monomial(target, std::move(kept), k.coerce(t.coeff, field()));
    for (const Poly* f : factors) piece = piece * *f;
    result += piece;
  }
  return result;
}

Scalar Poly::evaluate(std::span<const Scalar> values, const Field& target) const {
  if (values.size() != ring_->nvars()) fail(ErrorCode::Precondition, "evaluation point has wrong length");
  Scalar acc = target.zero();
  for (const auto& t : terms_) {
    Scalar v = target.coerce(t.coeff, field());
    for (std::size_t i = 0; i < t.exp.size() && !v.is_zero(); ++i) {
      if (t.exp[i]) v = target.mul(v, target.pow(values[i], t.exp[i]));
    }
    acc = target.add(acc, v);
  }
  return acc;
}

Poly Poly::with_field(FieldPtr k) const {
  auto target = ring_->with_field(k);
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(Term{t.exp, k->coerce(t.coeff, field())});
  return from_terms(std::move(target), std::move(ts));
}

Poly Poly::remainder(const Poly& divisor) const {
  check_ring(divisor);
  if (divisor.is_zero()) return *this;
  const Field& k = field();
  const Term& lead = divisor.leading_term();
  const Scalar lead_inv = k.inv(lead.coeff);
  Poly p = *this;
  Poly rem(ring_);
  while (!p.is_zero()) {
    const Term& t = p.leading_term();
    if (divides(lead.exp, t.exp)) {
      Poly q = Poly::monomial(ring_, exp_sub(t.exp, lead.exp), k.mul(t.coeff, lead_inv));
      p -= q * divisor;
    } else {
      rem.terms_.push_back(t);
      p.terms_.erase(p.terms_.begin());
    }
  }
  return rem;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  check_ring(divisor);
  if (divisor.is_zero()) fail(ErrorCode::Precondition, "division by the zero polynomial");
  const Field& k = field();
  const Term& lead = divisor.leading_term();
  const Scalar lead_inv = k.inv(lead.coeff);
  Poly p = *this;
  std::vector<Term> quotient;
  while (!p.is_zero()) {
    const Term& t = p.leading_term();
    if (!divides(lead.exp, t.exp)) fail(ErrorCode::Precondition, "inexact polynomial division");
    Term q{exp_sub(t.exp, lead.exp), k.mul(t.coeff, lead_inv)};
    p -= Poly::monomial(ring_, q.exp, q.coeff) * divisor;
    quotient.push_back(std::move(q));
  }
  return from_terms(ring_, std::move(quotient));
}

Poly Poly::normalized() const {
  if (is_zero()) return *this;
  const Field& k = field();
  if (k.kind() != FieldKind::Rational) return scaled(k.inv(leading_term().coeff));
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.rational().get_num_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  if (sgn(leading_term().coeff.rational()) < 0) factor = -factor;
  return scaled(Scalar(factor));
}

std::string exponents_to_string(const PolyRing& ring, const Exponents& exp) {
  std::string out;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.names()[i];
    if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const Field& k = field();
  std::string out;
  for (const auto& t : terms_) {
    std::string c = k.to_string(t.coeff);
    bool negative = false;
    if (k.kind() != FieldKind::Extension && !c.empty() && c[0] == '-') {
      negative = true;
      c.erase(0, 1);
    }
    if (k.kind() == FieldKind::Extension && c.find('+') != std::string::npos) c = "(" + c + ")";
    const std::string mono = exponents_to_string(*ring_, t.exp);
    std::string body;
    if (mono.empty()) {
      body = c;
    } else if (c == "1") {
      body = mono;
    } else {
      body = c + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace ghrv
