#include "ghrv/fixtures.hpp"

#include "ghrv/error.hpp"
#include "ghrv/parse.hpp"

namespace ghrv {

namespace {

// Parses text written in the fixture names x, y, x1, x2 into `ring`.
Poly fx(const RingSpec& ring, const std::string& text) {
  const auto local = std::make_shared<const PolyRing>(ring.field(), std::vector<std::string>{"x1", "x2"},
                                                     std::vector<std::string>{"x", "y"});
  Poly p = parse_poly(text, local);
  return Poly::from_terms(ring.poly_ring(), p.terms());
}

PolyMatrix fmat(const RingSpec& ring, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Poly>> polys;
  for (const auto& r : rows) {
    std::vector<Poly> row;
    for (const auto& e : r) row.push_back(fx(ring, e));
    polys.push_back(std::move(row));
  }
  return PolyMatrix::from_rows(ring.poly_ring(), polys);
}

}  // namespace

RingPtr example_ring(FieldPtr field) { return make_ring(std::move(field), {"x", "y"}, {"x1", "x2"}, {"x^2", "y^2"}); }

void require_example_ring(const RingSpec& ring) {
  if (ring.c() != 2 || ring.d() != 2 || !(ring.f()[0] == fx(ring, "x^2")) || !(ring.f()[1] == fx(ring, "y^2"))) {
    fail(ErrorCode::Precondition, "fixture needs two y-variables, two x-variables and f = (y1^2, y2^2)");
  }
}

PeriodicComplex fixture_k(const RingPtr& ring) {
  require_example_ring(*ring);
  return periodic_from_pair(ring, fmat(*ring, {{"-y", "x*x1"}, {"x", "y*x2"}}),
                            fmat(*ring, {{"-y*x2", "x*x1"}, {"x", "y"}}), {0, 0}, {0, 1}, true);
}

PeriodicComplex fixture_k_cone(const RingPtr& ring) { return cone_mul(fixture_k(ring), fx(*ring, "x1*x2")); }

PeriodicComplex fixture_ci(const RingPtr& ring) {
  require_example_ring(*ring);
  return periodic_from_pair(ring, fmat(*ring, {{"x1", "-y^2"}, {"x2", "x^2"}}),
                            fmat(*ring, {{"x^2", "y^2"}, {"-x2", "x1"}}), {0, 0}, {1, 0}, true);
}

PeriodicComplex fixture_trivial(const RingPtr& ring) {
  PolyMatrix a = PolyMatrix::identity(ring->poly_ring(), 1);
  PolyMatrix b = PolyMatrix::scalar(ring->w(), 1);
  return periodic_from_pair(ring, std::move(a), std::move(b), {0}, {0}, true);
}

PolyMatrix literal_cone_d(const RingSpec& ring) {
  return fmat(ring, {{"-y", "x*x1", "x1*x2", "0"},
                     {"x", "y*x2", "0", "x1*x2"},
                     {"0", "0", "y*x2", "-x*x1"},
                     {"0", "0", "-x", "-y"}});
}

PolyMatrix literal_cone_d_prime(const RingSpec& ring) {
  return fmat(ring, {{"-y*x2", "x*x1", "x1*x2", "0"},
                     {"x", "y", "0", "x1*x2"},
                     {"0", "0", "y", "-x*x1"},
                     {"0", "0", "-x", "-y*x2"}});
}

std::vector<std::string> fixture_names() { return {"k5", "k5-example", "s3-example", "trivial"}; }

PeriodicComplex fixture(const RingPtr& ring, const std::string& name) {
  if (name == "k5") return fixture_k(ring);
  if (name == "k5-example") return fixture_k_cone(ring);
  if (name == "s3-example") return fixture_ci(ring);
  if (name == "trivial") return fixture_trivial(ring);
  fail(ErrorCode::Format, "unknown fixture '" + name + "' (known: k5, k5-example, s3-example, trivial)");
}

}  // namespace ghrv
