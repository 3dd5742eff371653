#include <random>

#include "support.hpp"

#include "ghrv/error.hpp"
#include "ghrv/rank.hpp"

using namespace ghrv;
using testing::mat;
using testing::pt;
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

std::vector<std::string> member_strings(const ZeroSetUnion& v, const FieldPtr& f) {
  std::vector<std::string> out;
  for (const auto& p : member_points(v, f)) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("rank over R") {
  auto r = ring5();
  const auto ci = mat(*r, {{"x1", "-y^2"}, {"x2", "x^2"}});
  CHECK(rank_by_minors(ci, *r) == 1);
  CHECK(rank_over_R(ci, *r).rank == 1);
  CHECK(rank_over_R(ci, *r).certified);
  CHECK(rank_over_R(PolyMatrix::identity(r->poly_ring(), 5), *r).rank == 5);
  CHECK(rank_over_R(PolyMatrix(r->poly_ring(), 3, 4), *r).rank == 0);
  const auto d = literal_cone_d(*r);
  CHECK(rank_by_minors(d, *r) == 2);
  CHECK(rank_over_R(d, *r).rank == 2);
  CHECK(rank_over_R(literal_cone_d_prime(*r), *r).rank == 2);
}

TEST_CASE("rank over R agrees with minor search on random matrices") {
  auto r = ring5();
  std::mt19937_64 rng(23);
  const std::vector<std::string> atoms{"0", "0", "1", "x", "y", "x1", "x2", "x^2", "y^2", "x*x1", "y*x2"};
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    PolyMatrix m(r->poly_ring(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = r->parse(atoms[rng() % atoms.size()]);
    CHECK(rank_over_R(m, *r).rank == rank_by_minors(m, *r));
  }
}

TEST_CASE("minor ideal images") {
  auto r = ring5();
  const auto ci = fixture_ci(r);
  CHECK(minor_ideal_image(ci.a().entries, 1, *r).to_strings() == std::vector<std::string>{"x1", "x2"});
  CHECK(minor_ideal_image(ci.b().entries, 1, *r).to_strings() == std::vector<std::string>{"x1", "x2"});
  CHECK(minor_ideal_image(PolyMatrix::identity(r->poly_ring(), 2), 2, *r).is_unit_ideal());
  CHECK(minor_ideal_image(ci.a().entries, 0, *r).is_unit_ideal());
  const auto d = literal_cone_d(*r);
  const auto ideal = minor_ideal_image(d, 2, *r);
  CHECK(ideal.generators == minor_ideal_image_via_normal_form(d, 2, *r).generators);
  for (auto f : {Field::prime(5), Field::finite(5, 2)}) {
    for (const auto& p : testing::points(f)) {
      const bool on_axes = p.coords[0].is_zero() || p.coords[1].is_zero();
      CHECK(ideal_vanishes_at(ideal, p) == on_axes);
    }
  }
  CHECK(code_of([&] { minor_ideal_image(d, 2, *r, 10); }) == ErrorCode::TooLarge);
}

TEST_CASE("rank varieties of the worked examples") {
  auto r = ring5();
  auto f5 = r->field();
  const auto v_ci = rank_variety(fixture_ci(r));
  REQUIRE(v_ci.components.size() == 2);
  for (const auto& comp : v_ci.components) CHECK(comp.ideal.to_strings() == std::vector<std::string>{"x1", "x2"});
  CHECK(member_points(v_ci, f5).empty());
  CHECK(member_points(v_ci, Field::finite(5, 2)).empty());

  const auto v_trivial = rank_variety(fixture_trivial(r));
  CHECK(v_trivial.components[1].ideal.is_unit_ideal());
  CHECK(is_empty(v_trivial, 2).empty);

  for (auto f : {Field::prime(2), Field::prime(3), Field::prime(5), Field::finite(3, 2)}) {
    auto rf = ghrv::example_ring(f->prime_field());
    CHECK(member_strings(rank_variety(fixture_k_cone(rf)), f) == std::vector<std::string>{"(1:0)", "(0:1)"});
    CHECK(member_points(rank_variety(fixture_k(rf)), f).size() == f->order() + 1);
  }
}

TEST_CASE("membership is invariant under scaling") {
  auto r = ring5();
  auto f5 = r->field();
  const auto v = rank_variety(fixture_k_cone(r));
  CHECK(membership(v, pt(f5, 1, 0)));
  CHECK_FALSE(membership(v, pt(f5, 1, 1)));
  for (long long lambda = 1; lambda < 5; ++lambda) {
    for (const auto& p : testing::points(f5)) {
      ProjPoint scaled{f5, {f5->mul(p.coords[0], f5->from_int(lambda)), f5->mul(p.coords[1], f5->from_int(lambda))}};
      CHECK(membership(v, scaled) == membership(v, p));
    }
  }
}

TEST_CASE("point enumeration") {
  CHECK(testing::points(Field::prime(3)).size() == 4);
  CHECK(testing::points(Field::prime(2), 3).size() == 7);
  CHECK(testing::points(Field::finite(3, 2)).size() == 10);
  for (auto [f, c] : std::vector<std::pair<FieldPtr, std::size_t>>{
           {Field::prime(2), 3}, {Field::prime(3), 2}, {Field::finite(2, 2), 3}, {Field::prime(5), 3}}) {
    std::set<std::vector<std::uint64_t>> got;
    for (const auto& p : testing::points(f, c)) {
      std::vector<std::uint64_t> codes;
      for (const auto& x : p.coords) codes.push_back(x.code());
      got.insert(codes);
    }
    CHECK(got == testing::brute_force_points(f, c));
  }
  CHECK(code_of([] { enumerate_points(Field::rationals(), 2); }) == ErrorCode::UnsupportedField);
}

TEST_CASE("bounded emptiness") {
  auto r3 = testing::ring_over(3);
  const auto comp = make_component(mat(*r3, {{"x1^2 + x2^2"}}), 1, *r3);
  ZeroSetUnion v{r3, {comp}};
  CHECK(member_points(v, r3->field()).empty());
  const auto verdict = is_empty(v, 2);
  CHECK_FALSE(verdict.empty);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->field->order() == 9);
  CHECK(is_empty(v, 1).empty);

  auto r5 = ring5();
  const auto z = is_empty(rank_variety(fixture_k_cone(r5)), 2);
  CHECK_FALSE(z.empty);
  CHECK(z.witness->to_string() == "(1:0)");
}

TEST_CASE("contractibility") {
  auto r = ring5();
  auto f5 = r->field();
  auto alpha = [&](long long a, long long b) { return Alpha::constant(*r, f5, {f5->from_int(a), f5->from_int(b)}); };
  CHECK(contractible_at(fixture_ci(r), alpha(1, 0)));
  for (const auto& p : testing::points(f5)) CHECK_FALSE(contractible_at(fixture_k(r), Alpha::constant(*r, f5, p.coords)));
  CHECK(contractible_at(fixture_k_cone(r), alpha(1, 1)));
  CHECK_FALSE(contractible_at(fixture_k_cone(r), alpha(0, 1)));
}

TEST_CASE("contraction data is verified") {
  auto r = ring5();
  auto f5 = r->field();
  const Alpha a10 = Alpha::constant(*r, f5, {f5->one(), f5->zero()});
  for (const auto& c : {fixture_ci(r), fixture_trivial(r)}) {
    const auto h = construct_contraction(c, a10);
    // Independent check of the residue homotopy: Abar s0 + s_{-1} Bbar.
    const auto abar = residue_matrix(c.a().entries, a10, *r);
    const auto bbar = residue_matrix(c.b().entries, a10, *r);
    const auto s0 = residue_matrix(h.s_n, a10, *r);
    const auto s1 = residue_matrix(h.s_n_minus_1, a10, *r);
    const auto hom = abar * s0 + s1 * bbar;
    CHECK(hom == h.residue_homotopy);
    CHECK(!testing::leibniz_det(hom).is_zero());
  }
  CHECK(code_of([&] { construct_contraction(fixture_k(r), a10); }) == ErrorCode::NotContractible);
}

TEST_CASE("membership equals non-contractibility, by two routes") {
  auto r = testing::ring_over(3);
  for (const auto& c : {fixture_k(r), fixture_ci(r), fixture_k_cone(r), cone_mul(fixture_k(r), r->parse("x1 - x2"))}) {
    const auto v = rank_variety(c);
    for (auto f : {Field::prime(3), Field::finite(3, 2)}) {
      for (const auto& p : testing::points(f)) {
        const bool member = membership(v, p);
        CHECK(member == !contractible_at(c, Alpha::constant(*r, f, p.coords)));
        // Residue ranks by plain evaluation and exhaustive minors.
        const std::size_t ra = testing::minor_rank(testing::residue_by_evaluation(c.a().entries, p));
        const std::size_t rb = testing::minor_rank(testing::residue_by_evaluation(c.b().entries, p));
        CHECK(member == (ra + rb < c.size()));
      }
    }
  }
}
