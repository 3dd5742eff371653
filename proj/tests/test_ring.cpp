#include "support.hpp"

#include "ghrv/error.hpp"

using namespace ghrv;
using testing::ring5;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("ring construction") {
  auto r = ring5();
  CHECK(r->c() == 2);
  CHECK(r->d() == 2);
  CHECK(r->w() == r->parse("x^2*x1 + y^2*x2"));
  CHECK(r->regularity() == Regularity::Verified);
  auto f5 = Field::prime(5);
  CHECK(code_of([&] { make_ring(f5, {"x"}, {"x1", "x2"}, {"x^2", "x^3"}); }) == ErrorCode::NotRegularSequence);
  CHECK(code_of([&] { make_ring(f5, {"x", "y"}, {"x1", "x2"}, {"x^2+1", "y^2"}); }) ==
        ErrorCode::NotInMaximalIdeal);
  CHECK(code_of([&] { make_ring(f5, {"x", "y"}, {"x1", "x2"}, {"x^2*x1", "y^2"}); }) == ErrorCode::VariableLeak);
  CHECK(code_of([&] { make_ring(f5, {"x", "y"}, {"x1", "x2"}, {"x^2"}); }) == ErrorCode::BadArity);
  CHECK(code_of([&] { make_ring(Field::finite(3, 2), {"x", "y"}, {"x1", "x2"}, {"x^2", "y^2"}); }) ==
        ErrorCode::UnsupportedField);
  auto unverified = make_ring(f5, {"x", "y"}, {"x1", "x2"}, {"x^2+y^3", "y^2"});
  CHECK(unverified->regularity() == Regularity::Unverified);
}

TEST_CASE("normal form modulo w") {
  auto r = ring5();
  CHECK(normal_form(r->parse("x^2*x1"), *r) == r->parse("-y^2*x2"));
  CHECK(normal_form(r->x(1), *r) == r->x(1));
  CHECK(normal_form(r->w() * r->parse("1 + x + y"), *r).is_zero());
  // The remainder differs from the input by a multiple of w.
  const Poly p = r->parse("x^3*x1^2 + x*y*x2 + x^2*x1*y");
  const Poly nf = normal_form(p, *r);
  CHECK((p - nf).remainder(r->w()).is_zero());
  CHECK(RElem(*r, p) == RElem(*r, nf));
}

TEST_CASE("image in k[x], specialization, residue") {
  auto r = ring5();
  CHECK(image_in_kx(r->x(0), *r) == r->x(0));
  CHECK(image_in_kx(r->parse("-y^2"), *r).is_zero());
  CHECK(image_in_kx(r->parse("x^2 + x1*x2"), *r) == r->parse("x1*x2"));

  auto f5 = r->field();
  const Alpha a10 = Alpha::constant(*r, f5, {f5->one(), f5->zero()});
  CHECK(specialize(r->w(), a10, *r) == r->parse("x^2"));
  const Alpha a11 = Alpha::constant(*r, f5, {f5->one(), f5->one()});
  CHECK(specialize(r->parse("x1*x2"), a11, *r) == r->constant(1));
  const Alpha bent = Alpha::with_preimages(*r, f5, {f5->one(), f5->zero()}, {r->parse("1 + y"), r->constant(0)});
  CHECK(specialize(r->w(), bent, *r) == r->parse("x^2 + x^2*y"));

  CHECK(residue(r->parse("1 + y"), *r) == f5->one());
  CHECK(residue(r->parse("x^2"), *r).is_zero());
  CHECK(residue(r->constant(0), *r).is_zero());
  CHECK(code_of([&] { residue(r->x(0), *r); }) == ErrorCode::VariableLeak);
  CHECK(is_local_unit(r->parse("1 + y"), *r));
  CHECK_FALSE(is_local_unit(r->parse("y^2"), *r));
  CHECK(is_local_unit(r->constant(7), *r));
}

TEST_CASE("preimages must reduce to the coordinates") {
  auto r = ring5();
  auto f5 = r->field();
  CHECK(code_of([&] {
          Alpha::with_preimages(*r, f5, {f5->one(), f5->zero()}, {r->parse("2 + y"), r->constant(0)});
        }) == ErrorCode::Precondition);
  CHECK(code_of([&] {
          Alpha::with_preimages(*r, f5, {f5->one(), f5->zero()}, {r->parse("1 + x1"), r->constant(0)});
        }) == ErrorCode::VariableLeak);
  CHECK(code_of([&] { Alpha::constant(*r, f5, {f5->zero(), f5->zero()}); }) == ErrorCode::Precondition);
}
