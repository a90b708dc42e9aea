#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ktheta/klein_model.hpp"
#include "ktheta/real_sw.hpp"

namespace ktheta {

inline constexpr const char* kProgramName = "ktheta";
inline constexpr const char* kProgramVersion = "1.0.0";

nlohmann::json type_to_json(const TopologicalType& t);
TopologicalType type_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const IntegerVector& v);
IntegerVector vector_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const IntegerMatrix& m);

nlohmann::json model_to_json(const RealCurveModel& model);

/// {"type", "q", "arf", "invariantBasis", "circleClasses", "components":
///  [{"mu", "row", "circleValues"}], "spinData", "provenance"}
nlohmann::json table_to_json(const SWTable& table, const nlohmann::json& parameters = {});

/// One line per component: mu, row values, circle values; metadata in
/// leading '#' comment lines.
std::string table_to_csv(const SWTable& table);

/// Re-validates a serialized table against the module invariants and
/// recomputes it from (type, q); returns the first problem found.
std::optional<std::string> validate_table_json(const nlohmann::json& j);

/// "%.17g" rendering used for every floating-point report value.
std::string format_double(double x);

}  // namespace ktheta
