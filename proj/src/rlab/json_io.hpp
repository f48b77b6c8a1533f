#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rlab/correspond.hpp"
#include "rlab/graph.hpp"
#include "rlab/hypoconvex.hpp"
#include "rlab/matrix.hpp"
#include "rlab/report.hpp"

namespace rlab {

inline constexpr std::string_view kVersion = "0.1.0";

/// JSON has no infinities: +-inf serialize as the strings "inf"/"-inf",
/// NaN as null.
nlohmann::json json_number(double v);

/// Graph file: {"dim": n, "pairs": [{"x": [..], "u": [..]}, ...]}
OperatorGraph graph_from_json(const std::string& text);
std::string graph_to_json_text(const OperatorGraph& g);

/// Matrix file: {"n": k, "rows": [[..], ..]}
Matrix matrix_from_json(const std::string& text);
std::string matrix_to_json_text(const Matrix& m);

nlohmann::json report_to_json(const CertReport& r);
nlohmann::json classification_json(const Matrix& a);
nlohmann::json reflected_report_json(const ReflectedReport& rep);
nlohmann::json regime_report_json(const RegimeReport& rep, std::uint64_t seed, double tol);

/// "R" (whole line), "R+" (the cone [0, inf)), or "lo,hi" / "[lo,hi]" with
/// "inf"/"-inf" accepted as bounds.
Box parse_box_spec(const std::string& spec);

/// Function registry used by the CLI: "exp"/"exp-hypoconvex",
/// "indicator-quadratic" (spec = box), "concave-quadratic",
/// "quadratic-spline" (spec = JSON {"pieces": [{a,b,c,lo,hi}, ...]}).
HypoconvexFn make_function(const std::string& name, double lambda, const std::string& spec);

}  // namespace rlab
