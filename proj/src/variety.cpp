#include "ghrv/variety.hpp"

#include <algorithm>

#include "ghrv/error.hpp"
#include "ghrv/parallel.hpp"

namespace ghrv {

namespace {

bool term_list_less(const Poly& a, const Poly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (ta[i].exp != tb[i].exp) return grevlex_greater(ta[i].exp, tb[i].exp);
    if (!(ta[i].coeff == tb[i].coeff)) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

std::vector<Scalar> point_values(const RingSpec& ring, const ProjPoint& alpha) {
  std::vector<Scalar> v(ring.poly_ring()->nvars(), alpha.field->zero());
  for (std::size_t i = 0; i < ring.c(); ++i) v[i] = alpha.coords[i];
  return v;
}

std::string coord_string(const Field& k, const Scalar& s) {
  if (k.kind() == FieldKind::Prime) return std::to_string(s.code());
  return k.to_string(s);
}

}  // namespace

bool IdealGens::is_unit_ideal() const {
  return std::any_of(generators.begin(), generators.end(), [](const Poly& g) { return g.is_constant() && !g.is_zero(); });
}

std::vector<std::string> IdealGens::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.to_string());
  return out;
}

IdealGens make_ideal(std::vector<Poly> gens) {
  IdealGens ideal;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Poly n = g.normalized();
    if (n.is_constant()) return IdealGens{{n}};
    ideal.generators.push_back(std::move(n));
  }
  std::sort(ideal.generators.begin(), ideal.generators.end(), term_list_less);
  ideal.generators.erase(std::unique(ideal.generators.begin(), ideal.generators.end()), ideal.generators.end());
  return ideal;
}

ProjPoint ProjPoint::normalized(FieldPtr field, std::vector<Scalar> coords) {
  auto first = std::find_if(coords.begin(), coords.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (first == coords.end()) fail(ErrorCode::Precondition, "projective point has all coordinates zero");
  const Scalar scale = field->inv(*first);
  for (auto& s : coords) s = field->mul(s, scale);
  return ProjPoint{std::move(field), std::move(coords)};
}

std::string ProjPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ":";
    out += coord_string(*field, coords[i]);
  }
  return out + ")";
}

RankResult rank_over_R(const HomMatrix& m, const RingSpec& ring) { return rank_over_R(m.entries, ring); }

IdealGens minor_ideal_image(const PolyMatrix& m, std::size_t r, const RingSpec& ring, std::size_t budget) {
  if (r > std::min(m.rows(), m.cols())) fail(ErrorCode::Precondition, "minor size exceeds the matrix");
  if (r == 0) return IdealGens{{Poly::from_int(ring.poly_ring(), 1)}};
  const std::size_t count = binomial(m.rows(), r) * binomial(m.cols(), r);
  if (count > budget) {
    fail(ErrorCode::TooLarge, std::to_string(count) + " minors of size " + std::to_string(r) + " exceed the budget " +
                                  std::to_string(budget));
  }
  const PolyMatrix image = m.map([&](const Poly& p) { return image_in_kx(p, ring); });
  const auto rows = combinations(m.rows(), r);
  const auto cols = combinations(m.cols(), r);
  auto per_row = parallel_map<std::vector<Poly>>(rows.size(), [&](std::size_t i) {
    std::vector<Poly> out;
    for (const auto& cs : cols) {
      Poly d = det(image.submatrix(rows[i], cs));
      if (!d.is_zero()) out.push_back(d.normalized());
    }
    // local dedup keeps memory small on large scans
    std::sort(out.begin(), out.end(), term_list_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  });
  std::vector<Poly> all;
  for (auto& v : per_row) all.insert(all.end(), v.begin(), v.end());
  return make_ideal(std::move(all));
}

IdealGens minor_ideal_image_via_normal_form(const PolyMatrix& m, std::size_t r, const RingSpec& ring) {
  if (r == 0) return IdealGens{{Poly::from_int(ring.poly_ring(), 1)}};
  std::vector<Poly> all;
  for (const auto& rs : combinations(m.rows(), r)) {
    for (const auto& cs : combinations(m.cols(), r)) {
      all.push_back(image_in_kx(normal_form(det(m.submatrix(rs, cs)), ring), ring));
    }
  }
  return make_ideal(std::move(all));
}

Component make_component(const PolyMatrix& m, std::size_t r, const RingSpec& ring) {
  Component comp;
  comp.image = m.map([&](const Poly& p) { return image_in_kx(p, ring); });
  comp.r = r;
  if (r == 0 || binomial(m.rows(), r) * binomial(m.cols(), r) <= kGeneratorBudget) {
    comp.ideal = minor_ideal_image(m, r, ring);
    comp.materialized = true;
  }
  return comp;
}

ZeroSetUnion rank_variety(const PeriodicComplex& c) {
  const RingSpec& ring = *c.ring();
  const PairRanks ranks = pair_ranks(c.a().entries, c.b().entries, ring);
  ZeroSetUnion v;
  v.ring = c.ring();
  v.components.push_back(make_component(c.a().entries, ranks.a.rank, ring));
  v.components.push_back(make_component(c.b().entries, ranks.b.rank, ring));
  return v;
}

bool ideal_vanishes_at(const IdealGens& ideal, const ProjPoint& alpha) {
  for (const auto& g : ideal.generators) {
    std::vector<Scalar> values(g.ring()->nvars(), alpha.field->zero());
    for (std::size_t i = 0; i < g.ring()->nx(); ++i) values[i] = alpha.coords[i];
    if (!g.evaluate(values, *alpha.field).is_zero()) return false;
  }
  return true;
}

bool component_contains(const Component& comp, const RingSpec& ring, const ProjPoint& alpha) {
  if (comp.materialized) return ideal_vanishes_at(comp.ideal, alpha);
  const FieldMatrix at = evaluate(comp.image, point_values(ring, alpha), alpha.field);
  return rank_over_field(at) < comp.r;
}

bool membership(const ZeroSetUnion& v, const ProjPoint& alpha) {
  if (alpha.coords.size() != v.ring->c()) fail(ErrorCode::BadArity, "point has the wrong number of coordinates");
  if (!alpha.field->contains(*v.ring->field())) {
    fail(ErrorCode::RingMismatch, alpha.field->name() + " does not contain " + v.ring->field()->name());
  }
  for (const auto& comp : v.components) {
    if (component_contains(comp, *v.ring, alpha)) return true;
  }
  return false;
}

std::vector<ProjPoint> enumerate_points(const FieldPtr& field, std::size_t c) {
  if (!field->is_finite()) fail(ErrorCode::UnsupportedField, "cannot enumerate points over " + field->name());
  if (c == 0) fail(ErrorCode::Precondition, "projective space needs c >= 1");
  const std::uint64_t q = field->order();
  long double total = 0;
  for (std::size_t i = 0; i < c; ++i) total = total * q + 1;
  if (total > 5e6) fail(ErrorCode::TooLarge, "P^" + std::to_string(c - 1) + "(" + field->name() + ") has too many points");
  std::vector<ProjPoint> out;
  for (std::size_t lead = 0; lead < c; ++lead) {
    const std::size_t free = c - 1 - lead;
    std::vector<std::uint64_t> counter(free, 0);
    for (;;) {
      std::vector<Scalar> coords(c, field->zero());
      coords[lead] = field->one();
      for (std::size_t k = 0; k < free; ++k) coords[lead + 1 + k] = field->element(counter[k]);
      out.push_back(ProjPoint{field, std::move(coords)});
      std::size_t k = free;
      while (k > 0) {
        if (++counter[k - 1] < q) break;
        counter[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  return out;
}

std::vector<ProjPoint> member_points(const ZeroSetUnion& v, const FieldPtr& field) {
  const auto pts = enumerate_points(field, v.ring->c());
  const auto hit = parallel_map<char>(pts.size(), [&](std::size_t i) { return membership(v, pts[i]) ? 1 : 0; });
  std::vector<ProjPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (hit[i]) out.push_back(pts[i]);
  }
  return out;
}

EmptinessVerdict is_empty(const ZeroSetUnion& v, unsigned extension_bound) {
  const Field& base = *v.ring->field();
  if (!base.is_finite()) fail(ErrorCode::UnsupportedField, "emptiness scan needs a finite field, got " + base.name());
  if (extension_bound == 0) fail(ErrorCode::Precondition, "extension bound must be at least 1");
  for (unsigned j = 1; j <= extension_bound; ++j) {
    const FieldPtr field = Field::finite(base.characteristic(), base.degree() * j);
    const auto members = member_points(v, field);
    if (!members.empty()) return EmptinessVerdict{false, extension_bound, members.front()};
  }
  return EmptinessVerdict{true, extension_bound, std::nullopt};
}

FieldMatrix residue_matrix(const PolyMatrix& m, const Alpha& alpha, const RingSpec& ring) {
  FieldMatrix out(alpha.field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = residue(specialize(m.at(i, j), alpha, ring), ring);
  return out;
}

bool contractible_at(const PeriodicComplex& c, const Alpha& alpha) {
  const RingSpec& ring = *c.ring();
  const std::size_t ra = rank_over_field(residue_matrix(c.a().entries, alpha, ring));
  const std::size_t rb = rank_over_field(residue_matrix(c.b().entries, alpha, ring));
  return ra + rb == c.size();
}

namespace {

// s with m * s * m = m on the row space: s[J, I] = m[I, J]^{-1} for pivot
// rows I and pivot columns J of m; zero elsewhere.
FieldMatrix pivot_inverse(const FieldMatrix& m) {
  const RowEchelon ech = row_echelon(m);
  const FieldMatrix core_inv = inverse(m.submatrix(ech.pivot_rows, ech.pivot_cols));
  FieldMatrix s(m.field(), m.cols(), m.rows());
  for (std::size_t a = 0; a < ech.rank; ++a)
    for (std::size_t b = 0; b < ech.rank; ++b) s.at(ech.pivot_cols[a], ech.pivot_rows[b]) = core_inv.at(a, b);
  return s;
}

PolyMatrix constant_lift(const FieldMatrix& m, const PolyRingPtr& ring) {
  PolyMatrix out(ring, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = Poly::constant(ring, m.at(i, j));
  return out;
}

}  // namespace

ContractionData construct_contraction(const PeriodicComplex& c, const Alpha& alpha) {
  if (!contractible_at(c, alpha)) {
    fail(ErrorCode::NotContractible, "the specialized complex is not contractible at this point");
  }
  const RingSpec& ring = *c.ring();
  const std::size_t n = c.size();
  const FieldPtr& k = alpha.field;
  const FieldMatrix a = residue_matrix(c.a().entries, alpha, ring);
  const FieldMatrix b = residue_matrix(c.b().entries, alpha, ring);
  const FieldMatrix id = FieldMatrix::identity(k, n);

  const FieldMatrix s_prev = pivot_inverse(b);     // C_{-1} -> C_0
  const FieldMatrix projection = s_prev * b;      // idempotent, kernel = ker b = im a
  const FieldMatrix s0 = pivot_inverse(a) * (id - projection);  // C_0 -> C_1
  if (!(a * s0 + s_prev * b == id)) {
    fail(ErrorCode::NotContractible, "contraction equations have no solution over the residue field");
  }

  const PolyRingPtr local = ring.poly_ring()->with_field(k);
  ContractionData out;
  out.index = 0;
  out.s_n = constant_lift(s0, local);
  out.s_n_minus_1 = constant_lift(s_prev, local);
  const PolyMatrix a_spec = c.a().entries.map([&](const Poly& p) { return specialize(p, alpha, ring); });
  const PolyMatrix b_spec = c.b().entries.map([&](const Poly& p) { return specialize(p, alpha, ring); });
  const PolyMatrix homotopy = a_spec * out.s_n + out.s_n_minus_1 * b_spec;
  FieldMatrix res(k, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) res.at(i, j) = residue(homotopy.at(i, j), ring);
  if (rank_over_field(res) != n) {
    fail(ErrorCode::NotContractible, "lifted homotopy is not an isomorphism");
  }
  out.residue_homotopy = std::move(res);
  return out;
}

}  // namespace ghrv
