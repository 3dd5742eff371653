// ghrv command-line front end. Talks to the library only through ghrv.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ghrv/ghrv.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct Failure {
  ghrv_status status;
};

int exit_code(ghrv_status s) {
  switch (s) {
    case GHRV_OK:
      return kExitOk;
    case GHRV_ERR_SYNTAX:
    case GHRV_ERR_UNKNOWN_VARIABLE:
    case GHRV_ERR_IO:
    case GHRV_ERR_FORMAT:
    case GHRV_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return kExitMath;
  }
}

void check(ghrv_status s) {
  if (s != GHRV_OK) throw Failure{s};
}

struct StringDeleter {
  void operator()(char* s) const { ghrv_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) {
  OwnedString owned(s);
  return s ? std::string(s) : std::string();
}

struct RingDeleter {
  void operator()(ghrv_ring* r) const { ghrv_ring_free(r); }
};
struct ComplexDeleter {
  void operator()(ghrv_complex* c) const { ghrv_complex_free(c); }
};
struct VarietyDeleter {
  void operator()(ghrv_variety* v) const { ghrv_variety_free(v); }
};
struct TraceDeleter {
  void operator()(ghrv_trace* t) const { ghrv_trace_free(t); }
};
using Ring = std::unique_ptr<ghrv_ring, RingDeleter>;
using Complex = std::unique_ptr<ghrv_complex, ComplexDeleter>;
using Variety = std::unique_ptr<ghrv_variety, VarietyDeleter>;
using Trace = std::unique_ptr<ghrv_trace, TraceDeleter>;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "IoError: cannot write " << path << "\n";
    throw Failure{GHRV_ERR_IO};
  }
  out << text << '\n';
}

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

Ring load_ring(const std::string& path, const std::optional<std::string>& field) {
  ghrv_ring* raw = nullptr;
  check(ghrv_ring_load(path.c_str(), &raw));
  Ring ring(raw);
  if (field) {
    check(ghrv_ring_with_field(ring.get(), field->c_str(), &raw));
    ring.reset(raw);
  }
  return ring;
}

Complex load_complex(const std::string& path, const std::optional<std::string>& fixture) {
  ghrv_complex* raw = nullptr;
  check(ghrv_complex_load(path.c_str(), opt(fixture), &raw));
  return Complex(raw);
}

std::string field_of(ghrv_complex* c) {
  ghrv_ring* raw = nullptr;
  check(ghrv_complex_ring(c, &raw));
  Ring ring(raw);
  char* json = nullptr;
  check(ghrv_ring_to_json(ring.get(), &json));
  return nlohmann::json::parse(take(json)).at("field").get<std::string>();
}

// "GF(q)" -> "GF(q^j)"; empty for QQ.
std::string power_field(const std::string& base, unsigned j) {
  if (base.rfind("GF(", 0) != 0) return {};
  unsigned long long q = std::stoull(base.substr(3));
  unsigned long long out = 1;
  for (unsigned i = 0; i < j; ++i) out *= q;
  return "GF(" + std::to_string(out) + ")";
}

struct Options {
  std::string input;
  std::optional<std::string> fixture;
  std::optional<std::string> field;
  std::optional<std::string> out;
  std::string which = "A";
  bool points = false;
  unsigned ext_bound = 0;
  std::size_t c = 2;
  std::string alpha;
  std::optional<std::string> preimages;
  std::string p;
  std::vector<std::string> ps;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
};

int run_check(const Options& o) {
  int ok = 0;
  char* report = nullptr;
  check(ghrv_complex_check(o.input.c_str(), &ok, &report));
  std::cout << take(report);
  return ok ? kExitOk : kExitMath;
}

int run_rank(const Options& o, bool both) {
  auto c = load_complex(o.input, o.fixture);
  for (char which : both ? std::string("AB") : o.which) {
    std::size_t r = 0;
    int certified = 0;
    check(ghrv_complex_rank(c.get(), which, &r, &certified));
    std::cout << "rank " << which << " = " << r << (certified ? "" : " (probabilistic)") << "\n";
  }
  return kExitOk;
}

int run_ideal(const Options& o) {
  auto c = load_complex(o.input, o.fixture);
  std::size_t r = 0;
  check(ghrv_complex_rank(c.get(), o.which[0], &r, nullptr));
  char* gens = nullptr;
  check(ghrv_complex_ideal(c.get(), o.which[0], &gens));
  const auto list = nlohmann::json::parse(take(gens));
  std::cout << "image of I_" << r << "(" << o.which << ") in k[x]: ";
  if (list.empty()) {
    std::cout << "(0)\n";
  } else {
    std::cout << "(";
    for (std::size_t i = 0; i < list.size(); ++i) std::cout << (i ? ", " : "") << list[i].get<std::string>();
    std::cout << ")\n";
  }
  return kExitOk;
}

int report_variety(ghrv_variety* v, const std::string& base, const Options& o) {
  char* text = nullptr;
  const std::string points_field = o.points && !power_field(base, 1).empty() ? base : std::string();
  check(ghrv_variety_report(v, points_field.empty() ? nullptr : points_field.c_str(), &text));
  std::cout << take(text);
  if (o.points) {
    for (unsigned j = 2; j <= o.ext_bound; ++j) {
      const std::string f = power_field(base, j);
      if (f.empty()) break;
      check(ghrv_variety_report(v, f.c_str(), &text));
      const std::string rep = take(text);
      std::cout << rep.substr(rep.find("points over"));
    }
  }
  if (o.ext_bound > 0 && !power_field(base, 1).empty()) {
    int empty = 0;
    char* witness = nullptr;
    check(ghrv_variety_is_empty(v, o.ext_bound, &empty, &witness));
    const std::string w = take(witness);
    if (empty) {
      std::cout << "empty over GF(p^j) for j <= " << o.ext_bound << "\n";
    } else {
      std::cout << "nonempty, witness " << w << "\n";
    }
  }
  if (o.out) {
    char* json = nullptr;
    check(ghrv_variety_to_json(v, points_field.empty() ? nullptr : points_field.c_str(), &json));
    write_file(*o.out, take(json));
  }
  return kExitOk;
}

int run_variety(const Options& o, bool module) {
  auto c = load_complex(o.input, o.fixture);
  ghrv_variety* raw = nullptr;
  check(module ? ghrv_module_variety(c.get(), &raw) : ghrv_complex_variety(c.get(), &raw));
  Variety v(raw);
  return report_variety(v.get(), field_of(c.get()), o);
}

int run_points(const Options& o) {
  char* text = nullptr;
  check(ghrv_points(o.field->c_str(), o.c, &text));
  std::cout << take(text);
  return kExitOk;
}

int run_specialize(const Options& o) {
  auto c = load_complex(o.input, o.fixture);
  char* text = nullptr;
  check(ghrv_specialize(c.get(), o.alpha.c_str(), opt(o.field), opt(o.preimages), &text));
  std::cout << take(text);
  return kExitOk;
}

int run_contractible(const Options& o) {
  auto c = load_complex(o.input, o.fixture);
  int yes = 0;
  char* text = nullptr;
  check(ghrv_contractible(c.get(), o.alpha.c_str(), opt(o.field), opt(o.preimages), &yes, &text));
  std::cout << take(text);
  return kExitOk;
}

int run_cone(const Options& o) {
  auto c = load_complex(o.input, o.fixture);
  ghrv_complex* raw = nullptr;
  check(ghrv_complex_cone(c.get(), o.p.c_str(), &raw));
  Complex cone(raw);
  char* text = nullptr;
  check(ghrv_complex_describe(cone.get(), &text));
  std::cout << take(text);
  if (o.out) {
    check(ghrv_complex_to_json(cone.get(), &text));
    write_file(*o.out, take(text));
  }
  return kExitOk;
}

int run_resolve_k(const Options& o) {
  auto ring = load_ring(o.input, o.field);
  ghrv_complex* raw = nullptr;
  check(ghrv_resolve_k(ring.get(), &raw));
  Complex c(raw);
  std::size_t n = 0;
  check(ghrv_complex_size(c.get(), &n));
  std::cout << "complete resolution of k: certified " << n << "x" << n << " pair\n";
  char* text = nullptr;
  check(ghrv_complex_to_json(c.get(), &text));
  write_file(*o.out, take(text));
  std::cout << "written to " << *o.out << "\n";
  return kExitOk;
}

int run_realize(const Options& o) {
  auto ring = load_ring(o.input, o.field);
  std::vector<const char*> ps;
  for (const auto& p : o.ps) ps.push_back(p.c_str());
  ghrv_trace* raw = nullptr;
  check(ghrv_realize(ring.get(), ps.data(), ps.size(), o.ext_bound ? o.ext_bound : 2, &raw));
  Trace t(raw);
  char* text = nullptr;
  check(ghrv_trace_report(t.get(), o.points ? 1 : 0, &text));
  std::cout << take(text);
  if (o.out) {
    check(ghrv_trace_to_json(t.get(), o.points ? 1 : 0, &text));
    write_file(*o.out, take(text));
  }
  int ok = 0;
  check(ghrv_trace_ok(t.get(), &ok));
  return ok ? kExitOk : kExitMath;
}

int run_reproduce(const Options& o) {
  int ok = 0;
  char* text = nullptr;
  check(ghrv_reproduce(o.field ? o.field->c_str() : "GF(5)", o.seed, &ok, &text));
  std::cout << take(text);
  return ok ? kExitOk : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ghrv: rank varieties of periodic complexes over generic hypersurfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--jobs", o.jobs, "worker threads (0: all cores)");
  app.add_option("--seed", o.seed, "seed for randomized checks");

  auto complex_arg = [&](CLI::App* sub) {
    sub->add_option("complex", o.input, "complex file (or ring file with --fixture)")->required();
    sub->add_option("--fixture", o.fixture, "built-in complex: k5, k5-example, s3-example, trivial");
  };
  auto which_opt = [&](CLI::App* sub, bool required) {
    auto* w = sub->add_option("--which", o.which, "A or B")->check(CLI::IsMember({"A", "B"}));
    if (required) w->required();
  };
  auto alpha_opts = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "point a1,...,ac")->required();
    sub->add_option("--preimages", o.preimages, "preimages p1,...,pc in the y-variables");
    sub->add_option("--field", o.field, "field of the point, e.g. GF(9)");
  };

  auto* check_cmd = app.add_subcommand("check", "validate a complex file");
  check_cmd->add_option("complex", o.input, "complex file")->required();

  auto* rank_cmd = app.add_subcommand("rank", "ranks of A and B over R");
  complex_arg(rank_cmd);
  which_opt(rank_cmd, false);

  auto* ideal_cmd = app.add_subcommand("ideal", "image in k[x] of the ideal of maximal nonzero minors");
  complex_arg(ideal_cmd);
  which_opt(ideal_cmd, true);

  auto* variety_cmd = app.add_subcommand("variety", "rank variety V(C)");
  complex_arg(variety_cmd);
  variety_cmd->add_flag("--points", o.points, "list member points");
  variety_cmd->add_option("--ext-bound", o.ext_bound, "also scan GF(p^j), j <= N");
  variety_cmd->add_option("--out", o.out, "write the variety as JSON");

  auto* points_cmd = app.add_subcommand("points", "enumerate P^{c-1}(GF(q))");
  points_cmd->add_option("--field", o.field, "GF(q)")->required();
  points_cmd->add_option("--c", o.c, "number of homogeneous coordinates")->required();

  auto* specialize_cmd = app.add_subcommand("specialize", "C_alpha and its residue matrices");
  complex_arg(specialize_cmd);
  alpha_opts(specialize_cmd);

  auto* contractible_cmd = app.add_subcommand("contractible", "contractibility of C_alpha");
  complex_arg(contractible_cmd);
  alpha_opts(contractible_cmd);

  auto* cone_cmd = app.add_subcommand("cone", "mapping cone of multiplication by p");
  complex_arg(cone_cmd);
  cone_cmd->add_option("--p", o.p, "homogeneous polynomial in the x-variables")->required();
  cone_cmd->add_option("--out", o.out, "write the cone as a complex file");

  auto* resolve_cmd = app.add_subcommand("resolve-k", "periodic part of the complete resolution of k");
  resolve_cmd->add_option("ring", o.input, "ring file")->required();
  resolve_cmd->add_option("--out", o.out, "complex file to write")->required();
  resolve_cmd->add_option("--field", o.field, "override the ring's field");

  auto* realize_cmd = app.add_subcommand("realize", "complex whose variety is Z(p1, ..., pm)");
  realize_cmd->add_option("ring", o.input, "ring file")->required();
  realize_cmd->add_option("--p", o.ps, "homogeneous polynomial in the x-variables (repeatable)");
  realize_cmd->add_flag("--points", o.points, "list member points");
  realize_cmd->add_option("--ext-bound", o.ext_bound, "extension bound of the pointwise check (default 2)");
  realize_cmd->add_option("--out", o.out, "write the trace as a complex file");
  realize_cmd->add_option("--field", o.field, "override the ring's field");

  auto* module_cmd = app.add_subcommand("module-variety", "variety of the module resolved by a certified pair");
  complex_arg(module_cmd);
  module_cmd->add_flag("--points", o.points, "list member points");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "rerun the worked examples");
  reproduce_cmd->add_option("--field", o.field, "prime field, default GF(5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ghrv_set_jobs(o.jobs);
  try {
    if (*check_cmd) return run_check(o);
    if (*rank_cmd) return run_rank(o, rank_cmd->count("--which") == 0);
    if (*ideal_cmd) return run_ideal(o);
    if (*variety_cmd) return run_variety(o, false);
    if (*points_cmd) return run_points(o);
    if (*specialize_cmd) return run_specialize(o);
    if (*contractible_cmd) return run_contractible(o);
    if (*cone_cmd) return run_cone(o);
    if (*resolve_cmd) return run_resolve_k(o);
    if (*realize_cmd) return run_realize(o);
    if (*module_cmd) return run_variety(o, true);
    if (*reproduce_cmd) return run_reproduce(o);
  } catch (const Failure& f) {
    std::cerr << ghrv_last_error() << "\n";
    return exit_code(f.status);
  }
  return kExitUsage;
}
