#include <random>

#include "support.hpp"

#include "ghrv/error.hpp"
#include "ghrv/parse.hpp"

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

// Naive GF(p^e) product on coefficient vectors, reduced by the monic modulus.
std::vector<std::uint64_t> naive_mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                     const std::vector<std::uint64_t>& modulus, std::uint64_t p) {
  const std::size_t e = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = prod.size(); k-- > e;) {
    const std::uint64_t c = prod[k];
    if (!c) continue;
    for (std::size_t i = 0; i <= e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - c) * modulus[i]) % p;
  }
  prod.resize(e);
  return prod;
}

std::vector<std::uint64_t> digits(std::uint64_t code, std::uint64_t p, unsigned e) {
  std::vector<std::uint64_t> d(e);
  for (auto& x : d) {
    x = code % p;
    code /= p;
  }
  return d;
}

}  // namespace

TEST_CASE("parser: worked-example polynomials") {
  auto r = ring5();
  const Poly w = parse_poly("x^2*x1 + y^2*x2", r->poly_ring());
  CHECK(w.terms().size() == 2);
  CHECK(w == r->w());
  CHECK(parse_poly("0", r->poly_ring()).is_zero());
  CHECK(parse_poly("(x1 - x2)^2", r->poly_ring()).to_string() == "x1^2 - 2*x1*x2 + x2^2");
  CHECK(parse_poly("-(x + 2*y)*x1", r->poly_ring()) == r->parse("-x*x1 - 2*y*x1"));
}

TEST_CASE("parser: errors carry positions") {
  auto r = ring5();
  try {
    parse_poly("x1 + * x2", r->poly_ring());
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Syntax);
    REQUIRE(e.position().has_value());
    CHECK(*e.position() == 5);
  }
  try {
    parse_poly("x1 + z", r->poly_ring());
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
    CHECK(*e.position() == 5);
  }
  CHECK(code_of([&] { parse_poly("(x1", r->poly_ring()); }) == ErrorCode::Syntax);
  CHECK(code_of([&] { parse_poly("", r->poly_ring()); }) == ErrorCode::Syntax);
}

TEST_CASE("parser: round trip through to_string") {
  auto r = ring5();
  std::mt19937_64 rng(7);
  const std::vector<std::string> atoms{"x", "y", "x1", "x2", "2", "-1", "x^2", "y*x2"};
  for (int t = 0; t < 50; ++t) {
    Poly p(r->poly_ring());
    for (int k = 0; k < 4; ++k) p += r->parse(atoms[rng() % atoms.size()]) * r->parse(atoms[rng() % atoms.size()]);
    CHECK(r->parse(p.to_string()) == p);
  }
}

TEST_CASE("substitute") {
  auto r = ring5();
  std::map<std::size_t, Poly> b{{0, r->constant(1)}, {1, r->constant(0)}};
  CHECK(r->w().substitute(b) == r->parse("x^2"));
  const Poly p = r->parse("x1*x2 + y^3 - 4");
  CHECK(p.substitute({}) == p);
  CHECK(r->parse("x1*y").substitute({{3, r->constant(0)}}).is_zero());
}

TEST_CASE("determinants agree with the Leibniz oracle") {
  auto r = ring5();
  CHECK(det(PolyMatrix::identity(r->poly_ring(), 3)) == r->constant(1));
  CHECK(det(testing::mat(*r, {{"x1", "-y^2"}, {"x2", "x^2"}})) == r->w());
  CHECK(det(testing::mat(*r, {{"0", "x1"}, {"x2", "0"}})) == r->parse("-x1*x2"));
  std::mt19937_64 rng(11);
  const std::vector<std::string> atoms{"0", "1", "x", "y", "x1", "x2", "x+x1", "2*y*x2", "x1-x2"};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 8; ++t) {
      PolyMatrix m(r->poly_ring(), n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = r->parse(atoms[rng() % atoms.size()]);
      const Poly oracle = testing::leibniz_det(m);
      CHECK(det_bareiss(m) == oracle);
      CHECK(det_laplace(m) == oracle);
      CHECK(det(m) == oracle);
    }
  }
}

TEST_CASE("rank over a field agrees with exhaustive minors") {
  auto f = Field::prime(5);
  CHECK(rank_over_field(FieldMatrix::identity(f, 4)) == 4);
  CHECK(rank_over_field(FieldMatrix(f, 3, 5)) == 0);
  FieldMatrix m(f, 2, 2);
  m.at(0, 0) = f->one();
  CHECK(rank_over_field(m) == 1);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    FieldMatrix a(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = f->element(rng() % 3 ? rng() % 5 : 0);
    CHECK(rank_over_field(a) == testing::minor_rank(a));
  }
}

TEST_CASE("inverse over a field") {
  auto f = Field::finite(3, 2);
  std::mt19937_64 rng(5);
  int tested = 0;
  while (tested < 10) {
    FieldMatrix a(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = f->element(rng() % 9);
    if (testing::leibniz_det(a).is_zero()) continue;
    CHECK(a * inverse(a) == FieldMatrix::identity(f, 3));
    ++tested;
  }
}

TEST_CASE("extension fields") {
  auto f9 = Field::extension(3, 2);
  CHECK(f9->order() == 9);
  CHECK(is_irreducible(f9->modulus(), 3));
  auto f8 = Field::extension(2, 3);
  CHECK(f8->order() == 8);
  std::set<std::uint64_t> nonzero_powers;
  for (std::uint64_t c = 1; c < 8; ++c) nonzero_powers.insert(f8->element(c).code());
  CHECK(nonzero_powers.size() == 7);
  CHECK(code_of([] { Field::extension(3, 1); }) == ErrorCode::Precondition);
  CHECK(code_of([] { Field::extension(3, 9); }) == ErrorCode::BoundExceeded);
}

TEST_CASE("extension multiplication agrees with naive polynomial arithmetic") {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
    auto f = Field::finite(p, e);
    const std::uint64_t q = f->order();
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        const auto expected = naive_mul(digits(a, p, e), digits(b, p, e), f->modulus(), p);
        CHECK(digits(f->mul(f->element(a), f->element(b)).code(), p, e) == expected);
      }
    }
  }
}

TEST_CASE("field axioms and Frobenius") {
  for (auto f : {Field::finite(3, 2), Field::finite(2, 3), Field::prime(7)}) {
    const std::uint64_t q = f->order();
    for (std::uint64_t a = 0; a < q; ++a) {
      const Scalar x = f->element(a);
      CHECK(f->pow(x, q) == x);
      if (!x.is_zero()) CHECK(f->mul(x, f->inv(x)) == f->one());
      for (std::uint64_t b = 0; b < q; ++b) {
        const Scalar y = f->element(b);
        CHECK(f->frobenius(f->add(x, y)) == f->add(f->frobenius(x), f->frobenius(y)));
        CHECK(f->frobenius(f->mul(x, y)) == f->mul(f->frobenius(x), f->frobenius(y)));
      }
    }
  }
}

TEST_CASE("scalar parsing and printing") {
  auto f5 = Field::prime(5);
  CHECK(f5->parse_scalar("7") == f5->from_int(2));
  CHECK(f5->to_string(f5->from_int(4)) == "-1");
  auto qq = Field::rationals();
  CHECK(qq->parse_scalar("-3/6") == qq->from_rational(mpq_class(-1, 2)));
  auto f9 = Field::finite(3, 2);
  const Scalar a = f9->generator();
  CHECK(f9->parse_scalar(f9->to_string(a)) == a);
  CHECK(Field::parse("GF(9)")->order() == 9);
  CHECK(Field::parse("QQ")->kind() == FieldKind::Rational);
}
