#include "ktheta/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>

#include "ktheta/errors.hpp"
#include "ktheta/klein_model.hpp"
#include "ktheta/real_sw.hpp"
#include "ktheta/table_io.hpp"
#include "ktheta/theta_form.hpp"
#include "ktheta/verify.hpp"

namespace ktheta::cli {

namespace {

using nlohmann::json;

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw ValidationError(what + ": '" + item + "' is not an integer");
    out.push_back(value);
  }
  return out;
}

TopologicalType parse_type(const std::string& text) {
  const auto v = parse_ints(text, "--type");
  if (v.size() != 3) throw ValidationError("--type expects g,n,a");
  const TopologicalType t{v[0], v[1], v[2]};
  if (auto why = type_violation(t.g, t.n, t.a))
    throw ValidationError("invalid type " + t.to_string() + ": " + *why);
  return t;
}

QuadraticFormZ2 parse_form(const std::string& text, int genus) {
  const auto v = parse_ints(text, "--q");
  if (v.size() != static_cast<std::size_t>(2 * genus))
    throw ValidationError("--q expects 2g = " + std::to_string(2 * genus) + " bits, got " +
                          std::to_string(v.size()));
  return QuadraticFormZ2::from_values(v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Config {
  std::string format = "json";
  int gMax = 0;
  std::string type;
  int genus = 0;
  bool real = false;
  std::string q;
  std::string suite;
  double tol = -1.0;
  std::uint64_t seed = VerifyOptions{}.seed;
  bool serial = false;
};

int cmd_types(const Config& c, std::ostream& out) {
  if (c.gMax < 0) throw ValidationError("--g-max must be non-negative");
  const auto types = enumerate_types(c.gMax);
  if (c.format == "csv") {
    out << "g,n,a\n";
    for (const auto& t : types) out << t.g << ',' << t.n << ',' << t.a << '\n';
    return kExitOk;
  }
  json list = json::array();
  for (const auto& t : types) list.push_back(type_to_json(t));
  out << json{{"gMax", c.gMax}, {"count", types.size()}, {"types", list}}.dump(2) << '\n';
  return kExitOk;
}

int cmd_model(const Config& c, std::ostream& out) {
  const RealCurveModel model = standard_model(parse_type(c.type));
  if (auto why = model_violation(model)) throw VerificationFailure("model check: " + *why);
  const json j = model_to_json(model);
  if (c.format == "csv") {
    out << "field,value\n";
    for (const auto& [key, value] : j.items()) out << key << ',' << csv_escape(value.dump()) << '\n';
    return kExitOk;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_theta(const Config& c, std::ostream& out) {
  std::vector<QuadraticFormZ2> forms;
  json header;
  if (c.real) {
    const RealCurveModel model = standard_model(parse_type(c.type));
    if (c.genus != model.type.g)
      throw ValidationError("--g " + std::to_string(c.genus) + " disagrees with --type genus " +
                            std::to_string(model.type.g));
    forms = real_theta(model);
    header["type"] = type_to_json(model.type);
  } else {
    if (c.genus < 0 || c.genus > 13) throw ValidationError("--g must lie in 0..13");
    forms = enumerate_theta(c.genus);
  }
  if (c.format == "csv") {
    out << "# genus=" << c.genus << (c.real ? " real" : "") << '\n' << "q,arf\n";
    for (const auto& q : forms) out << csv_escape(q.to_string()) << ',' << q.arf() << '\n';
    return kExitOk;
  }
  json list = json::array();
  for (const auto& q : forms) list.push_back(json{{"q", q.values()}, {"arf", q.arf()}});
  header["genus"] = c.genus;
  header["real"] = c.real;
  header["count"] = forms.size();
  header["forms"] = std::move(list);
  out << header.dump(2) << '\n';
  return kExitOk;
}

int cmd_sw(const Config& c, std::ostream& out) {
  const RealCurveModel model = standard_model(parse_type(c.type));
  const QuadraticFormZ2 q = parse_form(c.q, model.type.g);
  const SWTable table = sw_table(model, q);
  const json params{{"type", c.type}, {"q", c.q}};
  const json j = table_to_json(table, params);
  if (auto why = validate_table_json(json::parse(j.dump())))
    throw VerificationFailure("emitted table fails validation: " + *why);
  if (c.format == "csv") {
    out << table_to_csv(table);
    return kExitOk;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.seed = c.seed;
  if (c.tol >= 0.0) {
    opts.cocycleTolerance = c.tol;
    opts.holonomyTolerance = c.tol;
  }
  if (c.serial) opts.mode = sweeps::Mode::Serial;
  const auto ids = suite_criteria(c.suite);
  json results = json::array();
  bool allPassed = true;
  if (c.format == "csv") out << "criterion,name,passed,detail\n";
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, opts);
    allPassed = allPassed && r.passed;
    err << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.name << " (" << format_double(r.seconds)
        << " s)" << (r.passed ? "" : ": " + r.detail) << '\n';
    if (c.format == "csv")
      out << r.id << ',' << csv_escape(r.name) << ',' << (r.passed ? 1 : 0) << ','
          << csv_escape(r.detail) << '\n';
    else
      results.push_back(json{{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (c.format != "csv") {
    const json report{{"suite", c.suite},
                      {"seed", c.seed},
                      {"cocycleTolerance", format_double(opts.cocycleTolerance)},
                      {"holonomyTolerance", format_double(opts.holonomyTolerance)},
                      {"passed", allPassed},
                      {"criteria", results}};
    out << report.dump(2) << '\n';
  }
  return allPassed ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real theta characteristics and Stiefel-Whitney tables for Klein surfaces", kProgramName};
  app.set_version_flag("--version", std::string(kProgramVersion));
  app.require_subcommand(1);
  Config c;
  app.add_option("--format", c.format, "output encoding")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* types = app.add_subcommand("types", "enumerate valid topological types (g,n,a)");
  types->add_option("--g-max", c.gMax, "largest genus")->required();

  auto* model = app.add_subcommand("model", "standard integral model of a real curve");
  model->add_option("--type", c.type, "topological type g,n,a")->required();

  auto* theta = app.add_subcommand("theta", "enumerate theta characteristics");
  theta->add_option("--g", c.genus, "genus")->required();
  auto* realFlag = theta->add_flag("--real", c.real, "only real characteristics of --type");
  auto* thetaType = theta->add_option("--type", c.type, "topological type g,n,a");
  realFlag->needs(thetaType);
  thetaType->needs(realFlag);

  auto* sw = app.add_subcommand("sw", "Stiefel-Whitney table of a real theta characteristic");
  sw->add_option("--type", c.type, "topological type g,n,a")->required();
  sw->add_option("--q", c.q, "2g comma-separated bits q(e_1..e_g, f_1..f_g)")->required();

  auto* verify = app.add_subcommand("verify", "run acceptance checks");
  verify->add_option("--suite", c.suite, "check suite")
      ->required()
      ->check(CLI::IsMember({"lattice", "theta", "ah", "sw", "analytic", "all"}));
  verify->add_option("--tol", c.tol, "numerical tolerance for cocycle and holonomy probes")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", c.seed, "seed for randomized checks");
  verify->add_flag("--serial", c.serial, "use the serial reference kernels");

  for (auto* sub : {types, model, theta, sw, verify})
    sub->add_option("--format", c.format, "output encoding")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    (void)app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << kProgramName << ": " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (types->parsed()) return cmd_types(c, out);
    if (model->parsed()) return cmd_model(c, out);
    if (theta->parsed()) return cmd_theta(c, out);
    if (sw->parsed()) return cmd_sw(c, out);
    return cmd_verify(c, out, err);
  } catch (const ValidationError& e) {
    err << kProgramName << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    err << kProgramName << ": verification failure: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    err << kProgramName << ": internal error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
}

}  // namespace ktheta::cli
