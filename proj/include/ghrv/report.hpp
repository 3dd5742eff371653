#pragma once

// Plain-text reports for the command line.

#include <string>

#include "ghrv/complex.hpp"
#include "ghrv/pipelines.hpp"
#include "ghrv/variety.hpp"

namespace ghrv {

std::string format_matrix(const PolyMatrix& m, const std::string& indent = "  ");
std::string format_complex(const PeriodicComplex& c);
std::string format_ideal(const IdealGens& ideal);
std::string format_points(const std::vector<ProjPoint>& points);
// Lists the components; with a finite `points_field`, also the member points.
std::string format_variety(const ZeroSetUnion& v, const FieldPtr& points_field = nullptr);
std::string format_trace(const RealizationTrace& t, bool with_points);
std::string format_reproduction(const ReproductionReport& r);

}  // namespace ghrv
