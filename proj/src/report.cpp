#include "ghrv/report.hpp"

#include <algorithm>
#include <sstream>

namespace ghrv {

std::string format_matrix(const PolyMatrix& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i][j] = m.at(i, j).to_string();
      width[j] = std::max(width[j], cells[i][j].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    out << indent << "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? "  " : " ") << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    out << " ]\n";
  }
  return out.str();
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

std::string format_complex(const PeriodicComplex& c) {
  std::ostringstream out;
  out << "periodic complex of size " << c.size() << " over " << c.ring()->field()->name()
      << (c.certified() ? " (certified: AB = BA = w*I)" : " (uncertified)") << "\n";
  out << "degrees C0 " << join_ints(c.degrees0()) << ", C1 " << join_ints(c.degrees1()) << "\n";
  out << "A : C1 -> C0\n" << format_matrix(c.a().entries);
  out << "B : C2 -> C1\n" << format_matrix(c.b().entries);
  return out.str();
}

std::string format_ideal(const IdealGens& ideal) {
  if (ideal.is_zero_ideal()) return "(0)";
  std::string s = "(";
  const auto gens = ideal.to_strings();
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i];
  return s + ")";
}

std::string format_points(const std::vector<ProjPoint>& points) {
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) s += (i ? ", " : "") + points[i].to_string();
  return s + "}";
}

std::string format_variety(const ZeroSetUnion& v, const FieldPtr& points_field) {
  std::ostringstream out;
  const char* names[] = {"A", "B"};
  out << "V = union of " << v.components.size() << " components\n";
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    const Component& comp = v.components[i];
    out << "  " << (i < 2 ? names[i] : "?") << ": rank " << comp.r << ", ";
    if (comp.materialized) {
      out << "Z" << format_ideal(comp.ideal) << "\n";
    } else {
      out << "Z(I_" << comp.r << ") of a " << comp.image.rows() << "x" << comp.image.cols()
          << " matrix, generators not materialized\n";
    }
  }
  if (points_field) {
    const auto members = member_points(v, points_field);
    out << "points over " << points_field->name() << ": " << format_points(members) << "\n";
  }
  return out.str();
}

std::string format_trace(const RealizationTrace& t, bool with_points) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    out << "step " << i << ": ";
    if (i == 0) {
      out << "complete resolution of k";
    } else {
      out << "cone by " << s.p.to_string();
    }
    out << ", size " << s.size;
    if (s.check.performed) {
      out << ", pointwise check " << (s.check.ok() ? "ok" : "FAILED") << " (" << s.check.points
          << " points, extension bound " << s.check.bound << ")";
      if (s.check.first_mismatch) out << ", first mismatch " << s.check.first_mismatch->to_string();
    }
    out << "\n";
  }
  std::string sizes;
  for (const auto& s : t.steps) sizes += (sizes.empty() ? "" : " -> ") + std::to_string(s.size);
  out << "sizes: " << sizes << "\n";
  const FieldPtr field = with_points && t.ring->field()->is_finite() ? t.ring->field() : nullptr;
  out << format_variety(t.variety(), field);
  return out.str();
}

std::string format_reproduction(const ReproductionReport& r) {
  std::ostringstream out;
  out << "worked examples over " << r.field->name() << ", seed " << r.seed << "\n";
  for (const auto& c : r.claims) {
    out << (c.passed ? "[pass] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
  }
  out << "witness set: " << format_points(r.witness_points) << "\n";
  out << (r.ok() ? "all claims reproduced" : "some claims failed") << "\n";
  return out.str();
}

}  // namespace ghrv
