#include "ktheta/table_io.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "ktheta/errors.hpp"

namespace ktheta {

using nlohmann::json;

json type_to_json(const TopologicalType& t) { return json{{"g", t.g}, {"n", t.n}, {"a", t.a}}; }

TopologicalType type_from_json(const json& j) {
  return TopologicalType{j.at("g").get<int>(), j.at("n").get<int>(), j.at("a").get<int>()};
}

json vector_to_json(const IntegerVector& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      out.push_back(x.get_si());
    else
      out.push_back(x.get_str());
  }
  return out;
}

IntegerVector vector_from_json(const json& j) {
  IntegerVector out;
  for (const auto& x : j) {
    if (x.is_string())
      out.emplace_back(x.get<std::string>());
    else
      out.emplace_back(x.get<long>());
  }
  return out;
}

json matrix_to_json(const IntegerMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

json model_to_json(const RealCurveModel& model) {
  json circles = json::array();
  for (const auto& c : model.circleClasses) circles.push_back(vector_to_json(c));
  return json{{"type", type_to_json(model.type)},
              {"hBlock", matrix_to_json(model.hBlock)},
              {"iotaStar", matrix_to_json(model.iotaStar)},
              {"circleClasses", circles},
              {"comessattiRank", model.type.g + 1 - model.type.n}};
}

json table_to_json(const SWTable& table, const json& parameters) {
  json basis = json::array();
  for (const auto& b : table.invariantBasis) basis.push_back(vector_to_json(b));
  json circles = json::array();
  for (const auto& c : table.model.circleClasses) circles.push_back(vector_to_json(c));
  json components = json::array();
  for (const auto& row : table.rows)
    components.push_back(json{{"mu", row.component.mu_strings()},
                              {"row", row.row},
                              {"circleValues", row.circleValues}});
  json provenance{{"program", kProgramName}, {"version", kProgramVersion}};
  provenance["parameters"] = parameters.is_null() ? json::object() : parameters;
  return json{{"type", type_to_json(table.model.type)},
              {"q", table.form.to_string()},
              {"arf", table.form.arf()},
              {"invariantBasis", basis},
              {"circleClasses", circles},
              {"components", components},
              {"spinData", table.spinData},
              {"provenance", provenance}};
}

std::string table_to_csv(const SWTable& table) {
  std::ostringstream os;
  os << "# type " << table.model.type.g << ',' << table.model.type.n << ',' << table.model.type.a
     << '\n';
  os << "# q " << table.form.to_string() << '\n';
  os << "# spinData";
  for (int s : table.spinData) os << ' ' << s;
  os << '\n';
  os << "mu";
  for (std::size_t i = 0; i < table.invariantBasis.size(); ++i) os << ",w_b" << i + 1;
  for (std::size_t i = 0; i < table.model.circleClasses.size(); ++i) os << ",w_C" << i + 1;
  os << '\n';
  for (const auto& row : table.rows) {
    const auto mu = row.component.mu_strings();
    for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? " " : "") << mu[i];
    for (int v : row.row) os << ',' << v;
    for (int v : row.circleValues) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

std::optional<std::string> validate_table_json(const json& j) {
  try {
    for (const char* key : {"type", "q", "components", "spinData", "provenance", "invariantBasis",
                            "circleClasses"})
      if (!j.contains(key)) return std::string("missing key '") + key + "'";
    const TopologicalType type = type_from_json(j.at("type"));
    if (auto why = type_violation(type.g, type.n, type.a)) return "invalid type: " + *why;
    if (type.n == 0) return "n = 0 tables are undefined";

    std::vector<int> bits;
    for (char c : j.at("q").get<std::string>())
      if (c == '0' || c == '1') bits.push_back(c - '0');
    const QuadraticFormZ2 q = QuadraticFormZ2::from_values(bits);
    if (q.genus() != type.g) return "form length does not match the genus";

    std::vector<IntegerVector> basis;
    for (const auto& b : j.at("invariantBasis")) basis.push_back(vector_from_json(b));
    std::vector<IntegerVector> circles;
    for (const auto& c : j.at("circleClasses")) circles.push_back(vector_from_json(c));
    if (circles.size() != static_cast<std::size_t>(type.n)) return "circle class count != n";

    const auto& comps = j.at("components");
    if (comps.size() != (std::size_t{1} << (type.n - 1))) return "row count != 2^(n-1)";
    const IntegerMatrix basisMatrix = IntegerMatrix::from_rows(basis, 2 * static_cast<std::size_t>(type.g));
    std::set<std::vector<std::string>> seen;
    for (const auto& comp : comps) {
      const auto mu = comp.at("mu").get<std::vector<std::string>>();
      if (!seen.insert(mu).second) return "duplicate component";
      const auto row = comp.at("row").get<std::vector<int>>();
      const auto circleValues = comp.at("circleValues").get<std::vector<int>>();
      if (row.size() != basis.size()) return "row length != rank of the invariant lattice";
      if (circleValues.size() != circles.size()) return "circle value count != n";
      for (int v : row)
        if (v != 0 && v != 1) return "row entries must be in Z2";
      // Rows are homomorphisms: circle values follow from the basis values.
      const Z2Homomorphism w(basisMatrix, row);
      for (std::size_t i = 0; i < circles.size(); ++i)
        if (w(circles[i]) != circleValues[i]) return "circle values are not given by the row";
    }
    const auto spin = j.at("spinData").get<std::vector<int>>();
    const auto zero = comps.at(0).at("circleValues").get<std::vector<int>>();
    if (spin.size() != zero.size()) return "spinData length != n";
    for (std::size_t i = 0; i < spin.size(); ++i)
      if (spin[i] != (zero[i] ^ 1)) return "spinData != row [0] circle values + 1";

    const SWTable fresh = sw_table(standard_model(type), q);
    json expected = table_to_json(fresh);
    json got = j;
    got.erase("provenance");
    expected.erase("provenance");
    if (got != expected) return "table differs from a fresh computation";
  } catch (const std::exception& e) {
    return std::string("malformed table: ") + e.what();
  }
  return std::nullopt;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace ktheta
