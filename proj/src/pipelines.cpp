#include "ghrv/pipelines.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "ghrv/error.hpp"
#include "ghrv/fixtures.hpp"
#include "ghrv/parallel.hpp"

namespace ghrv {

namespace {

Scalar eval_at(const Poly& p, const ProjPoint& alpha) {
  std::vector<Scalar> values(p.ring()->nvars(), alpha.field->zero());
  for (std::size_t i = 0; i < p.ring()->nx(); ++i) values[i] = alpha.coords[i];
  return p.evaluate(values, *alpha.field);
}

StepCheck check_step(const ZeroSetUnion& before, const ZeroSetUnion& after, const Poly* p, unsigned bound) {
  StepCheck out;
  const Field& base = *after.ring->field();
  if (!base.is_finite()) return out;
  out.performed = true;
  out.bound = bound;
  for (unsigned j = 1; j <= bound; ++j) {
    const FieldPtr field = Field::finite(base.characteristic(), base.degree() * j);
    const auto pts = enumerate_points(field, after.ring->c());
    const auto bad = parallel_map<char>(pts.size(), [&](std::size_t k) {
      const bool expected = p ? membership(before, pts[k]) && eval_at(*p, pts[k]).is_zero() : true;
      return membership(after, pts[k]) == expected ? 0 : 1;
    });
    out.points += pts.size();
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (!bad[k]) continue;
      if (!out.first_mismatch) out.first_mismatch = pts[k];
      ++out.mismatches;
    }
  }
  return out;
}

std::vector<ProjPoint> all_points(const FieldPtr& field, std::size_t c) { return enumerate_points(field, c); }

}  // namespace

PeriodicComplex complete_resolution_of_k(const RingPtr& ring) {
  const int m = static_cast<int>(ring->d());
  return extract_mf(shamash_resolution(*ring, m + 2, KoszulVariables::Y), ring, KoszulVariables::Y);
}

bool RealizationTrace::ok() const {
  for (const auto& s : steps) {
    if (!s.check.ok()) return false;
  }
  return true;
}

RealizationTrace realize(const RingPtr& ring, const std::vector<Poly>& ps, const RealizeOptions& options) {
  for (const auto& p : ps) {
    if (p.mentions_y()) fail(ErrorCode::VariableLeak, "realize: " + p.to_string() + " mentions a y-variable");
    if (p.is_zero() || !p.x_homogeneous_degree()) {
      fail(ErrorCode::NotHomogeneousScalar, "realize: " + p.to_string() + " is not a nonzero homogeneous form");
    }
  }
  RealizationTrace trace;
  trace.ring = ring;
  trace.inputs = ps;
  trace.complexes.push_back(complete_resolution_of_k(ring));
  RealizationStep first;
  first.size = trace.complexes.back().size();
  first.variety = rank_variety(trace.complexes.back());
  if (options.verify) first.check = check_step(first.variety, first.variety, nullptr, options.extension_bound);
  trace.steps.push_back(std::move(first));
  for (const auto& p : ps) {
    trace.complexes.push_back(cone_mul(trace.complexes.back(), p));
    RealizationStep step;
    step.p = p;
    step.size = trace.complexes.back().size();
    step.variety = rank_variety(trace.complexes.back());
    if (options.verify) step.check = check_step(trace.steps.back().variety, step.variety, &p, options.extension_bound);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

RealizationTrace realize(const RingPtr& ring, const std::vector<std::string>& ps, const RealizeOptions& options) {
  std::vector<Poly> polys;
  for (const auto& text : ps) polys.push_back(ring->parse(text));
  return realize(ring, polys, options);
}

ZeroSetUnion module_variety(const ModulePresentation& m) {
  if (!m.resolution.certified()) {
    fail(ErrorCode::InvalidComplex, "module variety needs a certified resolution (AB = BA = w*I over P)");
  }
  return rank_variety(m.resolution);
}

bool PreimageReport::consistent() const {
  for (const auto& t : trials) {
    if (t.contractible != constant_verdict) return false;
  }
  return true;
}

PreimageReport preimage_independence_check(const PeriodicComplex& c, const ProjPoint& alpha, unsigned trials,
                                           std::uint64_t seed) {
  const RingSpec& ring = *c.ring();
  PreimageReport report;
  report.seed = seed;
  report.point = alpha;
  report.constant_verdict = contractible_at(c, Alpha::constant(ring, alpha.field, alpha.coords));
  const auto target = ring.poly_ring()->with_field(alpha.field);
  const Field& field = *alpha.field;
  std::mt19937_64 rng(seed);
  auto random_scalar = [&]() {
    if (field.is_finite()) return field.element(rng() % field.order());
    return field.from_int(static_cast<long long>(rng() % 7) - 3);
  };
  const std::size_t c0 = ring.c();
  const std::size_t d = ring.d();
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<Poly> pre;
    for (std::size_t i = 0; i < c0; ++i) {
      Poly a = Poly::constant(target, alpha.coords[i]);
      for (std::size_t j = 0; j < d; ++j) {
        Exponents e(target->nvars(), 0);
        e[c0 + j] = 1;
        a += Poly::monomial(target, e, random_scalar());
        for (std::size_t k = j; k < d; ++k) {
          Exponents e2(target->nvars(), 0);
          e2[c0 + j] += 1;
          e2[c0 + k] += 1;
          a += Poly::monomial(target, e2, random_scalar());
        }
      }
      pre.push_back(std::move(a));
    }
    const Alpha a = Alpha::with_preimages(ring, alpha.field, alpha.coords, pre);
    report.trials.push_back(PreimageTrial{std::move(pre), contractible_at(c, a)});
  }
  return report;
}

bool ReproductionReport::ok() const {
  for (const auto& c : claims) {
    if (!c.passed) return false;
  }
  return true;
}

ReproductionReport reproduce_worked_examples(const FieldPtr& field, std::uint64_t seed) {
  if (field->kind() != FieldKind::Prime) {
    fail(ErrorCode::UnsupportedField, "worked examples run over a prime field, got " + field->name());
  }
  ReproductionReport report;
  report.field = field;
  report.seed = seed;
  auto claim = [&](std::string name, bool passed, std::string detail) {
    report.claims.push_back(Claim{std::move(name), passed, std::move(detail)});
  };
  auto guarded = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, detail] = body();
      claim(name, ok, std::move(detail));
    } catch (const Error& e) {
      claim(name, false, std::string(error_code_name(e.code())) + ": " + e.what());
    }
  };

  const RingPtr ring = example_ring(field);
  const auto pts = all_points(field, 2);

  guarded("ci pair: AB = BA = w*I", [&] {
    const auto c = fixture_ci(ring);
    return std::pair{c.certified(), std::string("2x2 pair certified over P")};
  });
  guarded("ci pair: rank A = rank B = 1", [&] {
    const auto c = fixture_ci(ring);
    const auto ra = rank_over_R(c.a(), *ring);
    const auto rb = rank_over_R(c.b(), *ring);
    return std::pair{ra.rank == 1 && rb.rank == 1,
                     "rank A = " + std::to_string(ra.rank) + ", rank B = " + std::to_string(rb.rank)};
  });
  guarded("ci pair: image of I_1(A) and I_1(B) is (x1, x2)", [&] {
    const auto c = fixture_ci(ring);
    const IdealGens ia = minor_ideal_image(c.a().entries, 1, *ring);
    const IdealGens ib = minor_ideal_image(c.b().entries, 1, *ring);
    const IdealGens expected = make_ideal({ring->x(0), ring->x(1)});
    const auto show = [](const IdealGens& g) {
      std::string s = "(";
      const auto names = g.to_strings();
      for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
      return s + ")";
    };
    return std::pair{ia.generators == expected.generators && ib.generators == expected.generators,
                     "A: " + show(ia) + ", B: " + show(ib)};
  });
  guarded("ci pair: V(C) is empty", [&] {
    const auto v = is_empty(rank_variety(fixture_ci(ring)), 2);
    return std::pair{v.empty, v.empty ? "no point over " + field->name() + " or its quadratic extension"
                                      : "member " + v.witness->to_string()};
  });
  guarded("ci pair: contractible at every point", [&] {
    const auto c = fixture_ci(ring);
    std::size_t good = 0;
    for (const auto& p : pts) {
      const Alpha a = Alpha::constant(*ring, field, p.coords);
      if (contractible_at(c, a)) {
        construct_contraction(c, a);
        ++good;
      }
    }
    return std::pair{good == pts.size(), std::to_string(good) + "/" + std::to_string(pts.size()) +
                                             " points with an explicit contraction"};
  });
  guarded("K: AB = BA = w*I", [&] {
    const auto k = fixture_k(ring);
    return std::pair{k.certified(), std::string("2x2 pair certified over P")};
  });
  guarded("K: V(K) is all of P^1", [&] {
    const auto members = member_points(rank_variety(fixture_k(ring)), field);
    return std::pair{members.size() == pts.size(),
                     std::to_string(members.size()) + "/" + std::to_string(pts.size()) + " points"};
  });
  guarded("resolution of k: certified and V agrees with V(K)", [&] {
    const auto res = complete_resolution_of_k(ring);
    const auto vk = rank_variety(fixture_k(ring));
    const auto vr = rank_variety(res);
    std::size_t agree = 0, members = 0;
    for (const auto& p : pts) {
      agree += membership(vk, p) == membership(vr, p);
      members += membership(vr, p);
    }
    return std::pair{res.certified() && agree == pts.size() && members == pts.size(),
                     std::to_string(res.size()) + "x" + std::to_string(res.size()) + " pair, " +
                         std::to_string(members) + "/" + std::to_string(pts.size()) + " points in V, agreement at " +
                         std::to_string(agree) + "/" + std::to_string(pts.size())};
  });
  guarded("graded residue field: 8x8 pair with empty variety", [&] {
    const int m = static_cast<int>(ring->c() + ring->d());
    const auto res = extract_mf(shamash_resolution(*ring, m + 2), ring);
    const auto v = is_empty(rank_variety(res), 2);
    return std::pair{res.size() == 8 && res.certified() && v.empty,
                     std::to_string(res.size()) + "x" + std::to_string(res.size()) + " pair, variety " +
                         (v.empty ? "empty" : "contains " + v.witness->to_string())};
  });
  guarded("K^{x1*x2}: cone matrices D and D'", [&] {
    const auto cone = fixture_k_cone(ring);
    const bool ok = cone.a().entries == literal_cone_d(*ring) && cone.b().entries == literal_cone_d_prime(*ring);
    return std::pair{ok, std::string(ok ? "entrywise equal" : "entries differ")};
  });
  guarded("K^{x1*x2}: rank D = rank D' = 2", [&] {
    const auto cone = fixture_k_cone(ring);
    const auto ra = rank_over_R(cone.a(), *ring);
    const auto rb = rank_over_R(cone.b(), *ring);
    const std::size_t oracle = rank_by_minors(cone.a().entries, *ring);
    return std::pair{ra.rank == 2 && rb.rank == 2 && oracle == 2,
                     "rank D = " + std::to_string(ra.rank) + ", rank D' = " + std::to_string(rb.rank) +
                         ", minor search on D = " + std::to_string(oracle)};
  });
  guarded("K^{x1*x2}: V = {(1:0), (0:1)}", [&] {
    const auto v = rank_variety(fixture_k_cone(ring));
    report.witness_points = member_points(v, field);
    const auto ext = member_points(v, Field::finite(field->characteristic(), 2));
    const std::vector<ProjPoint> expected{ProjPoint::normalized(field, {field->one(), field->zero()}),
                                          ProjPoint::normalized(field, {field->zero(), field->one()})};
    std::string detail;
    for (const auto& p : report.witness_points) detail += (detail.empty() ? "" : " ") + p.to_string();
    detail += "; " + std::to_string(ext.size()) + " points over " + ext.front().field->name();
    return std::pair{report.witness_points == expected && ext.size() == 2, detail};
  });
  guarded("K^{x1*x2}: verdicts independent of preimages", [&] {
    const auto cone = fixture_k_cone(ring);
    std::size_t consistent = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      consistent += preimage_independence_check(cone, pts[i], 3, seed + i).consistent();
    }
    return std::pair{consistent == pts.size(),
                     std::to_string(consistent) + "/" + std::to_string(pts.size()) + " points, seed " +
                         std::to_string(seed)};
  });
  guarded("K^{x1*x2}: shift and dual have the same variety", [&] {
    const auto cone = fixture_k_cone(ring);
    const auto v = rank_variety(cone);
    const auto vs = rank_variety(shift(cone));
    const auto vd = rank_variety(dual(cone));
    std::size_t agree = 0;
    for (const auto& p : pts) agree += membership(v, p) == membership(vs, p) && membership(v, p) == membership(vd, p);
    return std::pair{agree == pts.size(), std::to_string(agree) + "/" + std::to_string(pts.size()) + " points"};
  });
  return report;
}

}  // namespace ghrv
