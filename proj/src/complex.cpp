#include "ghrv/complex.hpp"

#include <sstream>

#include "ghrv/rank.hpp"

namespace ghrv {

GradedFreeModule GradedFreeModule::twisted(int t) const {
  GradedFreeModule m = *this;
  for (auto& d : m.degrees) d += t;
  return m;
}

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
  GradedFreeModule m = a;
  m.degrees.insert(m.degrees.end(), b.degrees.begin(), b.degrees.end());
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> HomMatrix::inhomogeneous_entries() const {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < entries.rows(); ++i) {
    for (std::size_t j = 0; j < entries.cols(); ++j) {
      const Poly& e = entries.at(i, j);
      if (e.is_zero()) continue;
      const auto deg = e.x_homogeneous_degree();
      if (!deg || *deg != source.degrees[j] - target.degrees[i]) bad.emplace_back(i, j);
    }
  }
  return bad;
}

HomMatrix make_hom(GradedFreeModule source, GradedFreeModule target, PolyMatrix entries) {
  if (entries.rows() != target.rank() || entries.cols() != source.rank()) {
    fail(ErrorCode::Precondition, "matrix shape does not match the graded modules");
  }
  return HomMatrix{std::move(source), std::move(target), std::move(entries)};
}

const GradedFreeModule& FiniteComplex::module(int n) const {
  auto it = modules.find(n);
  if (it == modules.end()) fail(ErrorCode::Precondition, "index " + std::to_string(n) + " outside the window");
  return it->second;
}

const HomMatrix& FiniteComplex::d(int n) const {
  auto it = differentials.find(n);
  if (it == differentials.end()) {
    fail(ErrorCode::Precondition, "no differential at index " + std::to_string(n));
  }
  return it->second;
}

std::vector<std::size_t> FiniteComplex::ranks() const {
  std::vector<std::size_t> out;
  for (int n = lo; n <= hi; ++n) out.push_back(module(n).rank());
  return out;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& p : passed) os << "  ok    " << p << "\n";
  for (const auto& f : findings) os << "  FAIL  " << error_code_name(f.code) << ": " << f.message << "\n";
  return os.str();
}

namespace {

std::string position(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// First entry of m that is nonzero mod w, if any.
std::optional<std::pair<std::size_t, std::size_t>> nonzero_mod_w(const PolyMatrix& m, const RingSpec& ring) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!normal_form(m.at(i, j), ring).is_zero()) return std::make_pair(i, j);
    }
  return std::nullopt;
}

ValidationReport validate_pair(const PairData& data, bool check_ranks) {
  ValidationReport report;
  const RingSpec& ring = *data.ring;
  const std::size_t n = data.a.rows();
  if (!data.a.square() || !data.b.square() || data.b.rows() != n || data.degrees0.size() != n ||
      data.degrees1.size() != n) {
    report.findings.push_back({ErrorCode::NotAComplex, "A and B must be square of equal size matching the degree lists"});
    return report;
  }
  const PolyMatrix ab = data.a * data.b;
  const PolyMatrix ba = data.b * data.a;
  bool complex_ok = true;
  if (auto bad = nonzero_mod_w(ab, ring)) {
    complex_ok = false;
    report.findings.push_back({ErrorCode::NotAComplex, "A*B is nonzero mod w at entry " + position(bad->first, bad->second)});
  }
  if (auto bad = nonzero_mod_w(ba, ring)) {
    complex_ok = false;
    report.findings.push_back({ErrorCode::NotAComplex, "B*A is nonzero mod w at entry " + position(bad->first, bad->second)});
  }
  if (complex_ok) report.passed.push_back("complex condition: A*B = B*A = 0 mod w");

  GradedFreeModule c0{data.degrees0}, c1{data.degrees1};
  const HomMatrix a{c1, c0, data.a};
  const HomMatrix b{c0.twisted(1), c1, data.b};
  const auto bad_a = a.inhomogeneous_entries();
  const auto bad_b = b.inhomogeneous_entries();
  if (!bad_a.empty()) {
    report.findings.push_back({ErrorCode::NotHomogeneous, "A entry " + position(bad_a[0].first, bad_a[0].second) +
                                                              " = " + data.a.at(bad_a[0].first, bad_a[0].second).to_string() +
                                                              " is not homogeneous of the required degree"});
  }
  if (!bad_b.empty()) {
    report.findings.push_back({ErrorCode::NotHomogeneous, "B entry " + position(bad_b[0].first, bad_b[0].second) +
                                                              " = " + data.b.at(bad_b[0].first, bad_b[0].second).to_string() +
                                                              " is not homogeneous of the required degree"});
  }
  if (bad_a.empty() && bad_b.empty()) {
    report.passed.push_back("homogeneity and degree drift (C_2 = C_0 shifted by +1)");
  }

  if (data.certify) {
    const PolyMatrix wi = PolyMatrix::scalar(ring.w(), n);
    if (ab == wi && ba == wi) {
      report.passed.push_back("matrix factorization: A*B = B*A = w*I over P");
    } else {
      report.findings.push_back({ErrorCode::CertificationFailed, "A*B or B*A differs from w*I over P"});
    }
  } else {
    report.passed.push_back("total acyclicity assumed (pair not certified)");
  }

  if (check_ranks && complex_ok) {
    const PairRanks r = pair_ranks(data.a, data.b, ring);
    const std::size_t sum = r.a.rank + r.b.rank;
    const std::string detail = "rank A + rank B = " + std::to_string(r.a.rank) + " + " + std::to_string(r.b.rank) +
                               " vs size " + std::to_string(n);
    if (sum == n) {
      report.passed.push_back(detail);
    } else {
      report.findings.push_back({ErrorCode::NotAComplex, detail + " (not exact over the fraction field)"});
    }
  }
  return report;
}

}  // namespace

ValidationReport validate(const PairData& data) { return validate_pair(data, true); }

ValidationReport validate(const PeriodicComplex& c) { return validate_pair(c.data(), true); }

ValidationReport validate(const FiniteComplex& c, const RingSpec& ring) {
  ValidationReport report;
  bool all_zero = true;
  for (int n = c.lo + 2; n <= c.hi; ++n) {
    const PolyMatrix comp = c.d(n - 1).entries * c.d(n).entries;
    const bool zero = c.ambient == Ambient::P ? comp.is_zero() : !nonzero_mod_w(comp, ring).has_value();
    if (!zero) {
      all_zero = false;
      report.findings.push_back({ErrorCode::NotAComplex, "d_" + std::to_string(n - 1) + " * d_" + std::to_string(n) +
                                                             (c.ambient == Ambient::P ? " != 0" : " != 0 mod w")});
    }
  }
  if (all_zero) report.passed.push_back("d*d = 0" + std::string(c.ambient == Ambient::R ? " mod w" : ""));
  bool homogeneous = true;
  for (const auto& [n, d] : c.differentials) {
    if (!d.is_homogeneous()) {
      homogeneous = false;
      report.findings.push_back({ErrorCode::NotHomogeneous, "d_" + std::to_string(n) + " is not homogeneous"});
    }
  }
  if (homogeneous) report.passed.push_back("homogeneity");
  return report;
}

PeriodicComplex PeriodicComplex::from_pair(RingPtr ring, PolyMatrix a, PolyMatrix b, std::vector<int> degrees0,
                                           std::vector<int> degrees1, bool certify) {
  PairData data{std::move(ring), std::move(a), std::move(b), std::move(degrees0), std::move(degrees1), certify};
  return from_pair(data);
}

PeriodicComplex PeriodicComplex::from_pair(const PairData& data) {
  if (!data.a.ring()->compatible(*data.ring->poly_ring()) || !data.b.ring()->compatible(*data.ring->poly_ring())) {
    fail(ErrorCode::RingMismatch, "matrices are not over the ring's polynomial ring");
  }
  const ValidationReport report = validate_pair(data, false);
  if (!report.ok()) {
    const Finding& f = report.findings.front();
    throw Error(f.code, std::string(error_code_name(f.code)) + ": " + f.message);
  }
  GradedFreeModule c0{data.degrees0}, c1{data.degrees1};
  HomMatrix a{c1, c0, data.a};
  HomMatrix b{c0.twisted(1), c1, data.b};
  return PeriodicComplex(data.ring, std::move(a), std::move(b), data.certify);
}

PairData PeriodicComplex::data() const {
  return PairData{ring_, a_.entries, b_.entries, degrees0(), degrees1(), certified_};
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t k) { return combinations(m, k); }

std::map<std::vector<std::size_t>, std::size_t> subset_index(std::size_t m, std::size_t k) {
  std::map<std::vector<std::size_t>, std::size_t> idx;
  const auto all = subsets(m, k);
  for (std::size_t i = 0; i < all.size(); ++i) idx.emplace(all[i], i);
  return idx;
}

// Ring variable indices of the Koszul generators, in basis order.
std::vector<std::size_t> koszul_vars(const RingSpec& ring, KoszulVariables which) {
  std::vector<std::size_t> out;
  const std::size_t first = which == KoszulVariables::All ? 0 : ring.c();
  for (std::size_t v = first; v < ring.poly_ring()->nvars(); ++v) out.push_back(v);
  return out;
}

int subset_degree(const RingSpec& ring, const std::vector<std::size_t>& vars, const std::vector<std::size_t>& s) {
  int d = 0;
  for (auto v : s) d += ring.poly_ring()->is_x(vars[v]) ? 1 : 0;
  return d;
}

GradedFreeModule koszul_module(const RingSpec& ring, const std::vector<std::size_t>& vars, std::size_t k) {
  GradedFreeModule f;
  for (const auto& s : subsets(vars.size(), k)) f.degrees.push_back(subset_degree(ring, vars, s));
  return f;
}

PolyMatrix koszul_differential(const RingSpec& ring, const std::vector<std::size_t>& vars, std::size_t k) {
  const std::size_t m = vars.size();
  const auto sources = subsets(m, k);
  const auto target_idx = subset_index(m, k - 1);
  PolyMatrix d(ring.poly_ring(), target_idx.size(), sources.size());
  for (std::size_t j = 0; j < sources.size(); ++j) {
    const auto& s = sources[j];
    for (std::size_t t = 0; t < s.size(); ++t) {
      auto rest = s;
      rest.erase(rest.begin() + static_cast<long>(t));
      Poly v = Poly::variable(ring.poly_ring(), vars[s[t]]);
      d.at(target_idx.at(rest), j) = (t % 2) ? -v : v;
    }
  }
  return d;
}

}  // namespace

std::vector<Poly> xi_coefficients(const RingSpec& ring, KoszulVariables which) {
  const auto& pr = ring.poly_ring();
  if (which == KoszulVariables::All) {
    std::vector<Poly> out(pr->nvars(), Poly(pr));
    for (std::size_t i = 0; i < ring.c(); ++i) out[i] = ring.f()[i];
    return out;
  }
  // f_i = sum_j h_ij y_j, each term of f_i charged to its first y-variable;
  // the coefficient of e_{y_j} is sum_i h_ij x_i.
  std::vector<Poly> out(ring.d(), Poly(pr));
  for (std::size_t i = 0; i < ring.c(); ++i) {
    for (const auto& t : ring.f()[i].terms()) {
      std::size_t j = 0;
      while (t.exp[ring.c() + j] == 0) ++j;
      Exponents e = t.exp;
      e[ring.c() + j] -= 1;
      e[i] += 1;
      out[j] += Poly::monomial(pr, std::move(e), t.coeff);
    }
  }
  return out;
}

FiniteComplex koszul(const RingSpec& ring, KoszulVariables which) {
  const auto vars = koszul_vars(ring, which);
  const std::size_t m = vars.size();
  FiniteComplex k;
  k.lo = 0;
  k.hi = static_cast<int>(m);
  k.ambient = Ambient::P;
  for (std::size_t i = 0; i <= m; ++i) k.modules.emplace(static_cast<int>(i), koszul_module(ring, vars, i));
  for (std::size_t i = 1; i <= m; ++i) {
    k.differentials.emplace(static_cast<int>(i),
                            HomMatrix{k.module(static_cast<int>(i)), k.module(static_cast<int>(i) - 1),
                                      koszul_differential(ring, vars, i)});
  }
  return k;
}

PolyMatrix exterior_xi(const RingSpec& ring, std::size_t k, KoszulVariables which) {
  const std::size_t m = koszul_vars(ring, which).size();
  const auto coeffs = xi_coefficients(ring, which);
  const auto sources = subsets(m, k);
  const auto target_idx = subset_index(m, k + 1);
  PolyMatrix s(ring.poly_ring(), target_idx.size(), sources.size());
  for (std::size_t j = 0; j < sources.size(); ++j) {
    const auto& src = sources[j];
    for (std::size_t i = 0; i < m; ++i) {
      if (coeffs[i].is_zero() || std::find(src.begin(), src.end(), i) != src.end()) continue;
      std::size_t before = 0;
      for (auto v : src) before += v < i ? 1 : 0;
      auto tgt = src;
      tgt.insert(std::upper_bound(tgt.begin(), tgt.end(), i), i);
      s.at(target_idx.at(tgt), j) += before % 2 ? -coeffs[i] : coeffs[i];
    }
  }
  return s;
}

namespace {

struct ShamashPiece {
  std::size_t koszul_index;
  int copy;
  std::size_t offset;
};

std::vector<ShamashPiece> shamash_pieces(int n, std::size_t m) {
  std::vector<ShamashPiece> out;
  std::size_t offset = 0;
  for (int j = 0; n - 2 * j >= 0; ++j) {
    const std::size_t i = static_cast<std::size_t>(n - 2 * j);
    if (i > m) continue;
    out.push_back({i, j, offset});
    offset += binomial(m, i);
  }
  return out;
}

}  // namespace

FiniteComplex shamash_resolution(const RingSpec& ring, int length, KoszulVariables which) {
  if (length < 0) fail(ErrorCode::Precondition, "resolution length must be non-negative");
  const auto vars = koszul_vars(ring, which);
  const std::size_t m = vars.size();
  std::vector<PolyMatrix> kd(m + 1), xi(m + 1);
  for (std::size_t i = 1; i <= m; ++i) kd[i] = koszul_differential(ring, vars, i);
  for (std::size_t i = 0; i < m; ++i) xi[i] = exterior_xi(ring, i, which);

  FiniteComplex g;
  g.lo = 0;
  g.hi = length;
  g.ambient = Ambient::R;
  for (int n = 0; n <= length; ++n) {
    GradedFreeModule mod;
    for (const auto& piece : shamash_pieces(n, m)) {
      const auto f = koszul_module(ring, vars, piece.koszul_index).twisted(piece.copy);
      mod.degrees.insert(mod.degrees.end(), f.degrees.begin(), f.degrees.end());
    }
    g.modules.emplace(n, std::move(mod));
  }
  for (int n = 1; n <= length; ++n) {
    const auto src = shamash_pieces(n, m);
    const auto tgt = shamash_pieces(n - 1, m);
    PolyMatrix d(ring.poly_ring(), g.module(n - 1).rank(), g.module(n).rank());
    auto find_target = [&](std::size_t i, int j) -> const ShamashPiece* {
      for (const auto& t : tgt) {
        if (t.koszul_index == i && t.copy == j) return &t;
      }
      return nullptr;
    };
    auto place = [&](const PolyMatrix& block, std::size_t row0, std::size_t col0) {
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) d.at(row0 + r, col0 + c) = block.at(r, c);
    };
    for (const auto& piece : src) {
      if (piece.koszul_index >= 1) {
        if (const auto* t = find_target(piece.koszul_index - 1, piece.copy)) {
          place(kd[piece.koszul_index], t->offset, piece.offset);
        }
      }
      if (piece.copy >= 1 && piece.koszul_index + 1 <= m) {
        if (const auto* t = find_target(piece.koszul_index + 1, piece.copy - 1)) {
          place(xi[piece.koszul_index], t->offset, piece.offset);
        }
      }
    }
    g.differentials.emplace(n, HomMatrix{g.module(n), g.module(n - 1), std::move(d)});
  }
  return g;
}

PeriodicComplex extract_mf(const FiniteComplex& g, const RingPtr& ring, KoszulVariables which) {
  const int m = static_cast<int>(koszul_vars(*ring, which).size());
  if (g.lo > m || g.hi < m + 2) {
    fail(ErrorCode::NotStabilized, "need the differentials d_" + std::to_string(m + 1) + " and d_" +
                                       std::to_string(m + 2) + "; window ends at " + std::to_string(g.hi));
  }
  const auto& c0 = g.module(m);
  const auto& c1 = g.module(m + 1);
  const auto& c2 = g.module(m + 2);
  if (c0.rank() != c1.rank() || c1.rank() != c2.rank() || c2 != c0.twisted(1)) {
    fail(ErrorCode::NotStabilized, "modules G_m, G_{m+1}, G_{m+2} do not have the periodic shape");
  }
  const PolyMatrix& a = g.d(m + 1).entries;
  const PolyMatrix& b = g.d(m + 2).entries;
  return PeriodicComplex::from_pair(ring, a, b, c0.degrees, c1.degrees, true);
}

PeriodicComplex cone_mul(const PeriodicComplex& c, const Poly& p) {
  const RingSpec& ring = *c.ring();
  if (!p.ring()->compatible(*ring.poly_ring())) fail(ErrorCode::RingMismatch, "multiplier is not in the ring");
  int g = 0;
  if (!p.is_zero()) {
    const auto deg = p.x_homogeneous_degree();
    if (!deg) fail(ErrorCode::NotHomogeneousScalar, p.to_string() + " is not x-homogeneous");
    g = *deg;
  }
  const std::size_t n = c.size();
  const PolyMatrix& a = c.a().entries;
  const PolyMatrix& b = c.b().entries;
  const PolyMatrix pi = PolyMatrix::scalar(p, n);
  const PolyMatrix zero(ring.poly_ring(), n, n);
  PolyMatrix ca = PolyMatrix::block(a, pi, zero, -b);
  PolyMatrix cb = PolyMatrix::block(b, pi, zero, -a);
  std::vector<int> d0 = c.degrees0(), d1 = c.degrees1();
  std::vector<int> deg0 = d0, deg1 = d1;
  for (int v : d1) deg0.push_back(v - 1 + g);
  for (int v : d0) deg1.push_back(v + g);
  return PeriodicComplex::from_pair(c.ring(), std::move(ca), std::move(cb), std::move(deg0), std::move(deg1),
                                    c.certified());
}

PeriodicComplex shift(const PeriodicComplex& c) {
  std::vector<int> deg0 = c.degrees1();
  for (auto& v : deg0) v -= 1;
  return PeriodicComplex::from_pair(c.ring(), -c.b().entries, -c.a().entries, std::move(deg0), c.degrees0(),
                                    c.certified());
}

PeriodicComplex direct_sum(const PeriodicComplex& c, const PeriodicComplex& d) {
  if (!c.ring()->same_as(*d.ring())) fail(ErrorCode::RingMismatch, "direct sum of complexes over different rings");
  const auto& ring = c.ring()->poly_ring();
  const PolyMatrix z12(ring, c.size(), d.size());
  const PolyMatrix z21(ring, d.size(), c.size());
  PolyMatrix a = PolyMatrix::block(c.a().entries, z12, z21, d.a().entries);
  PolyMatrix b = PolyMatrix::block(c.b().entries, z12, z21, d.b().entries);
  std::vector<int> deg0 = c.degrees0(), deg1 = c.degrees1();
  deg0.insert(deg0.end(), d.degrees0().begin(), d.degrees0().end());
  deg1.insert(deg1.end(), d.degrees1().begin(), d.degrees1().end());
  return PeriodicComplex::from_pair(c.ring(), std::move(a), std::move(b), std::move(deg0), std::move(deg1),
                                    c.certified() && d.certified());
}

PeriodicComplex dual(const PeriodicComplex& c) {
  std::vector<int> deg0 = c.degrees0(), deg1 = c.degrees1();
  for (auto& v : deg0) v = -v;
  for (auto& v : deg1) v = 1 - v;
  return PeriodicComplex::from_pair(c.ring(), c.b().entries.transpose(), c.a().entries.transpose(), std::move(deg0),
                                    std::move(deg1), c.certified());
}

}  // namespace ghrv
