#include "ghrv/ghrv.h"

#include <cstring>
#include <sstream>

#include "ghrv/error.hpp"
#include "ghrv/fixtures.hpp"
#include "ghrv/io.hpp"
#include "ghrv/parallel.hpp"
#include "ghrv/parse.hpp"
#include "ghrv/pipelines.hpp"
#include "ghrv/report.hpp"

struct ghrv_ring {
  ghrv::RingPtr ring;
};
struct ghrv_complex {
  ghrv::PeriodicComplex c;
};
struct ghrv_variety {
  ghrv::ZeroSetUnion v;
};
struct ghrv_trace {
  ghrv::RealizationTrace t;
};

namespace {

thread_local std::string last_error;

ghrv_status status_of(ghrv::ErrorCode code) { return static_cast<ghrv_status>(static_cast<int>(code) + 1); }

template <class F>
ghrv_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return GHRV_OK;
  } catch (const ghrv::Error& e) {
    last_error = std::string(ghrv::error_code_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GHRV_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return GHRV_ERR_INTERNAL;
  }
}

ghrv_status invalid(const char* what) {
  last_error = std::string("InvalidArgument: ") + what;
  return GHRV_ERR_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

ghrv::FieldPtr point_field(const ghrv::RingSpec& ring, const char* field) {
  return field ? ghrv::Field::parse(field) : ring.field();
}

ghrv::ProjPoint parse_point(const ghrv::RingSpec& ring, const char* alpha, const ghrv::FieldPtr& field) {
  const auto parts = split_commas(alpha);
  if (parts.size() != ring.c()) {
    ghrv::fail(ghrv::ErrorCode::BadArity, "point \"" + std::string(alpha) + "\" needs " + std::to_string(ring.c()) +
                                              " coordinates");
  }
  if (!field->contains(*ring.field())) {
    ghrv::fail(ghrv::ErrorCode::RingMismatch, field->name() + " does not contain " + ring.field()->name());
  }
  std::vector<ghrv::Scalar> coords;
  bool nonzero = false;
  for (const auto& p : parts) {
    coords.push_back(field->parse_scalar(p));
    nonzero = nonzero || !coords.back().is_zero();
  }
  if (!nonzero) ghrv::fail(ghrv::ErrorCode::Precondition, "projective point has all coordinates zero");
  return ghrv::ProjPoint::normalized(field, std::move(coords));
}

ghrv::Alpha parse_alpha(const ghrv::RingSpec& ring, const char* alpha, const char* field, const char* preimages) {
  const auto f = point_field(ring, field);
  const auto parts = split_commas(alpha);
  if (parts.size() != ring.c()) {
    ghrv::fail(ghrv::ErrorCode::BadArity, "point \"" + std::string(alpha) + "\" needs " + std::to_string(ring.c()) +
                                              " coordinates");
  }
  std::vector<ghrv::Scalar> coords;
  for (const auto& p : parts) coords.push_back(f->parse_scalar(p));
  if (!preimages) return ghrv::Alpha::constant(ring, f, coords);
  const auto texts = split_commas(preimages);
  if (texts.size() != ring.c()) ghrv::fail(ghrv::ErrorCode::BadArity, "need one preimage per coordinate");
  const auto target = ring.poly_ring()->with_field(f);
  std::vector<ghrv::Poly> pre;
  for (const auto& t : texts) pre.push_back(ghrv::parse_poly(t, target));
  return ghrv::Alpha::with_preimages(ring, f, coords, pre);
}

const ghrv::HomMatrix& pick(const ghrv::PeriodicComplex& c, char which) {
  if (which == 'A' || which == 'a') return c.a();
  if (which == 'B' || which == 'b') return c.b();
  ghrv::fail(ghrv::ErrorCode::Precondition, std::string("map must be A or B, got '") + which + "'");
}

std::string format_field_matrix(const ghrv::FieldMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) out << ' ' << m.field()->to_string(m.at(i, j));
    out << " ]\n";
  }
  return out.str();
}

std::string alpha_header(const ghrv::Alpha& a) {
  std::string s = "alpha = (";
  for (std::size_t i = 0; i < a.point.size(); ++i) s += (i ? ":" : "") + a.field->to_string(a.point[i]);
  s += ") over " + a.field->name() + ", preimages ";
  for (std::size_t i = 0; i < a.preimages.size(); ++i) s += (i ? ", " : "") + a.preimages[i].to_string();
  return s + "\n";
}

}  // namespace

extern "C" {

const char* ghrv_last_error(void) { return last_error.c_str(); }

const char* ghrv_status_name(ghrv_status status) {
  switch (status) {
    case GHRV_OK:
      return "Ok";
    case GHRV_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case GHRV_ERR_INTERNAL:
      return "InternalError";
    default:
      if (status > GHRV_OK && status < GHRV_ERR_INVALID_ARGUMENT) {
        return ghrv::error_code_name(static_cast<ghrv::ErrorCode>(static_cast<int>(status) - 1)).data();
      }
      return "Unknown";
  }
}

void ghrv_string_free(char* s) { std::free(s); }

void ghrv_set_jobs(unsigned jobs) { ghrv::set_jobs(jobs); }

ghrv_status ghrv_ring_load(const char* path, ghrv_ring** out) {
  if (!path || !out) return invalid("null argument");
  return guard([&] { *out = new ghrv_ring{ghrv::load_ring(path)}; });
}

ghrv_status ghrv_ring_from_json(const char* json, ghrv_ring** out) {
  if (!json || !out) return invalid("null argument");
  return guard([&] {
    ghrv::Json j;
    try {
      j = ghrv::Json::parse(json);
    } catch (const ghrv::Json::parse_error& e) {
      ghrv::fail(ghrv::ErrorCode::Format, e.what());
    }
    *out = new ghrv_ring{ghrv::ring_from_json(j)};
  });
}

ghrv_status ghrv_ring_with_field(const ghrv_ring* ring, const char* field, ghrv_ring** out) {
  if (!ring || !field || !out) return invalid("null argument");
  return guard([&] {
    ghrv::Json j = ghrv::ring_to_json(*ring->ring);
    j["field"] = field;
    *out = new ghrv_ring{ghrv::ring_from_json(j)};
  });
}

ghrv_status ghrv_ring_c(const ghrv_ring* ring, size_t* out) {
  if (!ring || !out) return invalid("null argument");
  *out = ring->ring->c();
  return GHRV_OK;
}

ghrv_status ghrv_ring_to_json(const ghrv_ring* ring, char** out) {
  if (!ring || !out) return invalid("null argument");
  return guard([&] { *out = dup(ghrv::ring_to_json(*ring->ring).dump(2)); });
}

void ghrv_ring_free(ghrv_ring* ring) { delete ring; }

ghrv_status ghrv_complex_load(const char* path, const char* fixture, ghrv_complex** out) {
  if (!path || !out) return invalid("null argument");
  return guard([&] {
    std::optional<std::string> name;
    if (fixture) name = fixture;
    *out = new ghrv_complex{ghrv::load_complex_or_fixture(path, name)};
  });
}

ghrv_status ghrv_complex_fixture(const ghrv_ring* ring, const char* name, ghrv_complex** out) {
  if (!ring || !name || !out) return invalid("null argument");
  return guard([&] { *out = new ghrv_complex{ghrv::fixture(ring->ring, name)}; });
}

ghrv_status ghrv_complex_check(const char* path, int* ok, char** report) {
  if (!path || !ok || !report) return invalid("null argument");
  return guard([&] {
    const auto r = ghrv::validate(ghrv::load_pair(path));
    *ok = r.ok() ? 1 : 0;
    *report = dup(r.to_string());
  });
}

ghrv_status ghrv_complex_ring(const ghrv_complex* c, ghrv_ring** out) {
  if (!c || !out) return invalid("null argument");
  return guard([&] { *out = new ghrv_ring{c->c.ring()}; });
}

ghrv_status ghrv_complex_size(const ghrv_complex* c, size_t* out) {
  if (!c || !out) return invalid("null argument");
  *out = c->c.size();
  return GHRV_OK;
}

ghrv_status ghrv_complex_describe(const ghrv_complex* c, char** out) {
  if (!c || !out) return invalid("null argument");
  return guard([&] { *out = dup(ghrv::format_complex(c->c)); });
}

ghrv_status ghrv_complex_to_json(const ghrv_complex* c, char** out) {
  if (!c || !out) return invalid("null argument");
  return guard([&] { *out = dup(ghrv::complex_to_json(c->c).dump(2)); });
}

ghrv_status ghrv_complex_rank(const ghrv_complex* c, char which, size_t* rank, int* certified) {
  if (!c || !rank) return invalid("null argument");
  return guard([&] {
    const auto r = ghrv::rank_over_R(pick(c->c, which), *c->c.ring());
    *rank = r.rank;
    if (certified) *certified = r.certified ? 1 : 0;
  });
}

ghrv_status ghrv_complex_ideal(const ghrv_complex* c, char which, char** out) {
  if (!c || !out) return invalid("null argument");
  return guard([&] {
    const auto& m = pick(c->c, which);
    const auto r = ghrv::rank_over_R(m, *c->c.ring());
    const auto ideal = ghrv::minor_ideal_image(m.entries, r.rank, *c->c.ring());
    *out = dup(ghrv::Json(ideal.to_strings()).dump());
  });
}

ghrv_status ghrv_complex_cone(const ghrv_complex* c, const char* p, ghrv_complex** out) {
  if (!c || !p || !out) return invalid("null argument");
  return guard([&] { *out = new ghrv_complex{ghrv::cone_mul(c->c, c->c.ring()->parse(p))}; });
}

ghrv_status ghrv_complex_shift(const ghrv_complex* c, ghrv_complex** out) {
  if (!c || !out) return invalid("null argument");
  return guard([&] { *out = new ghrv_complex{ghrv::shift(c->c)}; });
}

ghrv_status ghrv_complex_dual(const ghrv_complex* c, ghrv_complex** out) {
  if (!c || !out) return invalid("null argument");
  return guard([&] { *out = new ghrv_complex{ghrv::dual(c->c)}; });
}

ghrv_status ghrv_complex_sum(const ghrv_complex* c, const ghrv_complex* d, ghrv_complex** out) {
  if (!c || !d || !out) return invalid("null argument");
  return guard([&] { *out = new ghrv_complex{ghrv::direct_sum(c->c, d->c)}; });
}

void ghrv_complex_free(ghrv_complex* c) { delete c; }

ghrv_status ghrv_specialize(const ghrv_complex* c, const char* alpha, const char* field, const char* preimages,
                            char** report) {
  if (!c || !alpha || !report) return invalid("null argument");
  return guard([&] {
    const auto& ring = *c->c.ring();
    const auto a = parse_alpha(ring, alpha, field, preimages);
    auto spec = [&](const ghrv::PolyMatrix& m) {
      ghrv::PolyMatrix out(ring.poly_ring()->with_field(a.field), m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = ghrv::specialize(m.at(i, j), a, ring);
      return out;
    };
    const auto ra = ghrv::residue_matrix(c->c.a().entries, a, ring);
    const auto rb = ghrv::residue_matrix(c->c.b().entries, a, ring);
    std::ostringstream out;
    out << alpha_header(a);
    out << "A_alpha\n" << ghrv::format_matrix(spec(c->c.a().entries));
    out << "B_alpha\n" << ghrv::format_matrix(spec(c->c.b().entries));
    out << "A_alpha over the residue field, rank " << ghrv::rank_over_field(ra) << "\n" << format_field_matrix(ra);
    out << "B_alpha over the residue field, rank " << ghrv::rank_over_field(rb) << "\n" << format_field_matrix(rb);
    *report = dup(out.str());
  });
}

ghrv_status ghrv_contractible(const ghrv_complex* c, const char* alpha, const char* field, const char* preimages,
                              int* contractible, char** report) {
  if (!c || !alpha || !contractible) return invalid("null argument");
  return guard([&] {
    const auto& ring = *c->c.ring();
    const auto a = parse_alpha(ring, alpha, field, preimages);
    const auto ra = ghrv::rank_over_field(ghrv::residue_matrix(c->c.a().entries, a, ring));
    const auto rb = ghrv::rank_over_field(ghrv::residue_matrix(c->c.b().entries, a, ring));
    const bool yes = ghrv::contractible_at(c->c, a);
    *contractible = yes ? 1 : 0;
    if (!report) return;
    std::ostringstream out;
    out << alpha_header(a);
    out << "residue ranks: A " << ra << ", B " << rb << ", size " << c->c.size() << "\n";
    if (yes) {
      const auto h = ghrv::construct_contraction(c->c, a);
      out << "contractible: yes\n";
      out << "s_0 : C_0 -> C_1 (lifted)\n" << ghrv::format_matrix(h.s_n);
      out << "s_-1 : C_-1 -> C_0 (lifted)\n" << ghrv::format_matrix(h.s_n_minus_1);
    } else {
      out << "contractible: no (alpha lies in V(C))\n";
    }
    *report = dup(out.str());
  });
}

ghrv_status ghrv_preimage_check(const ghrv_complex* c, const char* alpha, const char* field, unsigned trials,
                                uint64_t seed, int* consistent) {
  if (!c || !alpha || !consistent) return invalid("null argument");
  return guard([&] {
    const auto& ring = *c->c.ring();
    const auto p = parse_point(ring, alpha, point_field(ring, field));
    *consistent = ghrv::preimage_independence_check(c->c, p, trials, seed).consistent() ? 1 : 0;
  });
}

ghrv_status ghrv_points(const char* field, size_t c, char** out) {
  if (!field || !out) return invalid("null argument");
  return guard([&] {
    const auto f = ghrv::Field::parse(field);
    const auto pts = ghrv::enumerate_points(f, c);
    std::ostringstream s;
    s << pts.size() << " points of P^" << (c - 1) << "(" << f->name() << ")\n";
    for (const auto& p : pts) s << p.to_string() << "\n";
    *out = dup(s.str());
  });
}

ghrv_status ghrv_complex_variety(const ghrv_complex* c, ghrv_variety** out) {
  if (!c || !out) return invalid("null argument");
  return guard([&] { *out = new ghrv_variety{ghrv::rank_variety(c->c)}; });
}

ghrv_status ghrv_module_variety(const ghrv_complex* c, ghrv_variety** out) {
  if (!c || !out) return invalid("null argument");
  return guard([&] { *out = new ghrv_variety{ghrv::module_variety(ghrv::ModulePresentation{c->c})}; });
}

ghrv_status ghrv_variety_report(const ghrv_variety* v, const char* points_field, char** out) {
  if (!v || !out) return invalid("null argument");
  return guard([&] {
    *out = dup(ghrv::format_variety(v->v, points_field ? ghrv::Field::parse(points_field) : nullptr));
  });
}

ghrv_status ghrv_variety_to_json(const ghrv_variety* v, const char* points_field, char** out) {
  if (!v || !out) return invalid("null argument");
  return guard([&] {
    *out = dup(ghrv::variety_to_json(v->v, points_field ? ghrv::Field::parse(points_field) : nullptr).dump(2));
  });
}

ghrv_status ghrv_variety_contains(const ghrv_variety* v, const char* alpha, const char* field, int* member) {
  if (!v || !alpha || !member) return invalid("null argument");
  return guard([&] {
    const auto& ring = *v->v.ring;
    *member = ghrv::membership(v->v, parse_point(ring, alpha, point_field(ring, field))) ? 1 : 0;
  });
}

ghrv_status ghrv_variety_is_empty(const ghrv_variety* v, unsigned bound, int* empty, char** witness) {
  if (!v || !empty) return invalid("null argument");
  return guard([&] {
    const auto verdict = ghrv::is_empty(v->v, bound);
    *empty = verdict.empty ? 1 : 0;
    if (witness) *witness = verdict.witness ? dup(verdict.witness->to_string()) : nullptr;
  });
}

void ghrv_variety_free(ghrv_variety* v) { delete v; }

ghrv_status ghrv_resolve_k(const ghrv_ring* ring, ghrv_complex** out) {
  if (!ring || !out) return invalid("null argument");
  return guard([&] { *out = new ghrv_complex{ghrv::complete_resolution_of_k(ring->ring)}; });
}

ghrv_status ghrv_realize(const ghrv_ring* ring, const char* const* ps, size_t n, unsigned ext_bound,
                         ghrv_trace** out) {
  if (!ring || !out || (n && !ps)) return invalid("null argument");
  return guard([&] {
    std::vector<std::string> texts;
    for (size_t i = 0; i < n; ++i) {
      if (!ps[i]) ghrv::fail(ghrv::ErrorCode::Precondition, "null polynomial");
      texts.emplace_back(ps[i]);
    }
    ghrv::RealizeOptions options;
    options.extension_bound = ext_bound;
    options.verify = ext_bound > 0;
    *out = new ghrv_trace{ghrv::realize(ring->ring, texts, options)};
  });
}

ghrv_status ghrv_trace_ok(const ghrv_trace* t, int* ok) {
  if (!t || !ok) return invalid("null argument");
  *ok = t->t.ok() ? 1 : 0;
  return GHRV_OK;
}

ghrv_status ghrv_trace_result(const ghrv_trace* t, ghrv_complex** out) {
  if (!t || !out) return invalid("null argument");
  return guard([&] { *out = new ghrv_complex{t->t.result()}; });
}

ghrv_status ghrv_trace_report(const ghrv_trace* t, int with_points, char** out) {
  if (!t || !out) return invalid("null argument");
  return guard([&] { *out = dup(ghrv::format_trace(t->t, with_points != 0)); });
}

ghrv_status ghrv_trace_to_json(const ghrv_trace* t, int with_points, char** out) {
  if (!t || !out) return invalid("null argument");
  return guard([&] { *out = dup(ghrv::trace_to_json(t->t, with_points != 0).dump(2)); });
}

void ghrv_trace_free(ghrv_trace* t) { delete t; }

ghrv_status ghrv_reproduce(const char* field, uint64_t seed, int* ok, char** report) {
  if (!ok || !report) return invalid("null argument");
  return guard([&] {
    const auto r = ghrv::reproduce_worked_examples(ghrv::Field::parse(field ? field : "GF(5)"), seed);
    *ok = r.ok() ? 1 : 0;
    *report = dup(ghrv::format_reproduction(r));
  });
}

}  // extern "C"
