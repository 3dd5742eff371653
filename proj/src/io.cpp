#include "ghrv/io.hpp"

#include <fstream>
#include <sstream>

#include "ghrv/error.hpp"
#include "ghrv/fixtures.hpp"

namespace ghrv {

namespace fs = std::filesystem;

namespace {

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::Format, where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorCode::Format, what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(ErrorCode::Format, what + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<int> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorCode::Format, what + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) fail(ErrorCode::Format, what + " must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

RingPtr ring_reference(const Json& j, const fs::path& base_dir) {
  if (j.is_string()) {
    fs::path p = j.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return load_ring(p);
  }
  return ring_from_json(j, base_dir);
}

}  // namespace

Json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::Format, path.string() + ": " + e.what());
  }
}

void write_json(const fs::path& path, const Json& value) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Io, "cannot write " + path.string());
  out << value.dump(2) << '\n';
  if (!out) fail(ErrorCode::Io, "error writing " + path.string());
}

RingPtr ring_from_json(const Json& j, const fs::path&) {
  const Json& field = member(j, "field", "ring");
  if (!field.is_string()) fail(ErrorCode::Format, "ring: \"field\" must be a string");
  return make_ring(Field::parse(field.get<std::string>()), string_list(member(j, "yvars", "ring"), "yvars"),
                   string_list(member(j, "xvars", "ring"), "xvars"), string_list(member(j, "f", "ring"), "f"));
}

Json ring_to_json(const RingSpec& ring) {
  Json j;
  j["field"] = ring.field()->name();
  j["yvars"] = ring.yvars();
  j["xvars"] = ring.xvars();
  Json f = Json::array();
  for (const auto& fi : ring.f()) f.push_back(fi.to_string());
  j["f"] = f;
  return j;
}

RingPtr load_ring(const fs::path& path) {
  const Json j = read_json(path);
  return ring_from_json(j, path.parent_path());
}

Json matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).to_string());
    rows.push_back(row);
  }
  return rows;
}

PolyMatrix matrix_from_json(const Json& j, const RingSpec& ring, const std::string& what) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::Format, what + " must be a nonempty array of rows");
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : j) {
    const auto texts = string_list(r, what + " row");
    if (!rows.empty() && texts.size() != rows.front().size()) fail(ErrorCode::Format, what + " rows differ in length");
    std::vector<Poly> row;
    for (const auto& t : texts) row.push_back(ring.parse(t));
    rows.push_back(std::move(row));
  }
  return PolyMatrix::from_rows(ring.poly_ring(), rows);
}

PairData pair_from_json(const Json& j, const fs::path& base_dir) {
  const RingPtr ring = ring_reference(member(j, "ring", "complex"), base_dir);
  if (j.contains("fixture")) {
    if (!j.at("fixture").is_string()) fail(ErrorCode::Format, "complex: \"fixture\" must be a string");
    return fixture(ring, j.at("fixture").get<std::string>()).data();
  }
  const Json& per = member(j, "periodic", "complex");
  PairData data;
  data.ring = ring;
  data.a = matrix_from_json(member(per, "A", "periodic"), *ring, "A");
  data.b = matrix_from_json(member(per, "B", "periodic"), *ring, "B");
  data.degrees0 = int_list(member(per, "degrees0", "periodic"), "degrees0");
  data.degrees1 = int_list(member(per, "degrees1", "periodic"), "degrees1");
  if (per.contains("certified")) {
    if (!per.at("certified").is_boolean()) fail(ErrorCode::Format, "periodic: \"certified\" must be a boolean");
    data.certify = per.at("certified").get<bool>();
  }
  return data;
}

Json complex_to_json(const PeriodicComplex& c) {
  Json j;
  j["ring"] = ring_to_json(*c.ring());
  Json per;
  per["A"] = matrix_to_json(c.a().entries);
  per["B"] = matrix_to_json(c.b().entries);
  per["degrees0"] = c.degrees0();
  per["degrees1"] = c.degrees1();
  per["certified"] = c.certified();
  j["periodic"] = per;
  return j;
}

PairData load_pair(const fs::path& path) { return pair_from_json(read_json(path), path.parent_path()); }

PeriodicComplex load_complex(const fs::path& path) { return PeriodicComplex::from_pair(load_pair(path)); }

PeriodicComplex load_complex_or_fixture(const fs::path& path, const std::optional<std::string>& name) {
  const Json j = read_json(path);
  if (!name) return PeriodicComplex::from_pair(pair_from_json(j, path.parent_path()));
  if (j.contains("periodic") || j.contains("fixture")) {
    fail(ErrorCode::Format, path.string() + " already describes a complex; --fixture needs a ring file");
  }
  return fixture(ring_from_json(j, path.parent_path()), *name);
}

Json point_to_json(const ProjPoint& p) {
  Json coords = Json::array();
  for (const auto& a : p.coords) {
    if (p.field->kind() == FieldKind::Extension) {
      coords.push_back(p.field->to_string(a));
    } else {
      coords.push_back(a.code());
    }
  }
  return coords;
}

Json variety_to_json(const ZeroSetUnion& v, const FieldPtr& points_field) {
  Json j;
  Json comps = Json::array();
  const char* names[] = {"A", "B"};
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    const Component& comp = v.components[i];
    Json c;
    if (i < 2) c["map"] = names[i];
    c["rank"] = comp.r;
    if (comp.materialized) {
      c["generators"] = comp.ideal.to_strings();
    } else {
      c["generators"] = nullptr;
      c["note"] = "minor ideal not materialized; membership tested by rank of the specialized matrix";
    }
    comps.push_back(c);
  }
  j["components"] = comps;
  if (points_field) {
    Json pts;
    pts["field"] = points_field->name();
    Json members = Json::array();
    for (const auto& p : member_points(v, points_field)) members.push_back(point_to_json(p));
    pts["members"] = members;
    j["points"] = pts;
  }
  return j;
}

Json trace_to_json(const RealizationTrace& t, bool with_points) {
  Json j = complex_to_json(t.result());
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json r;
    r["p"] = s.p.ring() ? Json(s.p.to_string()) : Json(nullptr);
    r["size"] = s.size;
    r["variety"] = variety_to_json(s.variety, with_points && t.ring->field()->is_finite() ? t.ring->field() : nullptr);
    if (s.check.performed) {
      Json c;
      c["extension_bound"] = s.check.bound;
      c["points"] = s.check.points;
      c["mismatches"] = s.check.mismatches;
      r["check"] = c;
    }
    steps.push_back(r);
  }
  j["trace"] = steps;
  return j;
}

}  // namespace ghrv
