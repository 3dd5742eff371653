#pragma once

// JSON files: rings, periodic complexes, varieties and realization traces.
//
//   ring:    {"field": "GF(5)", "yvars": [...], "xvars": [...], "f": [...]}
//   complex: {"ring": <ring object or path>, "periodic": {"A": [[...]], "B": [[...]],
//             "degrees0": [...], "degrees1": [...], "certified": bool}}
//            or {"ring": ..., "fixture": "k5"}
//
// Relative ring paths resolve against the directory of the referring file.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ghrv/complex.hpp"
#include "ghrv/pipelines.hpp"
#include "ghrv/variety.hpp"

namespace ghrv {

using Json = nlohmann::ordered_json;

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& value);

RingPtr ring_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json ring_to_json(const RingSpec& ring);
RingPtr load_ring(const std::filesystem::path& path);

// Unchecked pair data; the "certified" flag becomes PairData::certify.
PairData pair_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json complex_to_json(const PeriodicComplex& c);
PairData load_pair(const std::filesystem::path& path);
PeriodicComplex load_complex(const std::filesystem::path& path);

// A complex file, or a ring file combined with a fixture name.
PeriodicComplex load_complex_or_fixture(const std::filesystem::path& path, const std::optional<std::string>& fixture);

Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j, const RingSpec& ring, const std::string& what);

Json point_to_json(const ProjPoint& p);
// Points are emitted only when `points_field` is given.
Json variety_to_json(const ZeroSetUnion& v, const FieldPtr& points_field = nullptr);
Json trace_to_json(const RealizationTrace& t, bool with_points);

}  // namespace ghrv
