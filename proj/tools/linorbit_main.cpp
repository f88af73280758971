// Command-line front end: orbit-closure degrees, predegree polynomials,
// constrained counts, characteristic tables and the internal verification
// grids, with text, JSON or CSV output. All values are exact; numeric
// results are serialized as decimal integer or p/q strings.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "linorbit/golden.hpp"
#include "linorbit/orbit.hpp"
#include "linorbit/verify.hpp"

using nlohmann::ordered_json;
using namespace linorbit;

namespace {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + csv + "'");
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<GaussianRational> parse_alpha_list(const std::string& csv) {
  std::vector<GaussianRational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto a = GaussianRational::parse(item);
    if (!a) throw std::invalid_argument("bad pencil parameter '" + item + "'");
    out.push_back(*a);
  }
  if (out.empty()) throw std::invalid_argument("empty parameter list");
  return out;
}

struct SpecFlags {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string s_csv = "1";
  std::string alphas_csv;
  std::int64_t r = 0;
  std::int64_t q = 0;
  std::int64_t qbar = 0;
  std::int64_t A = 0; // 0 = not given
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--n", f.n, "degree parameter n of the pencil x^n = alpha y^m z^(n-m)")
      ->required();
  cmd->add_option("--m", f.m, "cusp parameter m, 1 <= m < n coprime to n")->required();
  cmd->add_option("--s", f.s_csv, "comma list of component multiplicities (0 entries dropped)");
  cmd->add_option("--alphas", f.alphas_csv,
                  "comma list of pencil parameters, Gaussian rationals like 1/2+3*i");
  cmd->add_option("--r", f.r, "multiplicity of the line joining the two distinguished points");
  cmd->add_option("--q", f.q, "multiplicity of the tangent cone mu");
  cmd->add_option("--qbar", f.qbar, "multiplicity of the tangent cone mubar");
  cmd->add_option("--A", f.A, "stabilizer component count override");
}

CurveSpec build_spec(const SpecFlags& f) {
  CurveSpec spec;
  spec.n = f.n;
  spec.m = f.m;
  spec.r = f.r;
  spec.q = f.q;
  spec.qbar = f.qbar;
  const auto mults = parse_int_list(f.s_csv);
  std::vector<GaussianRational> alphas;
  if (!f.alphas_csv.empty()) {
    alphas = parse_alpha_list(f.alphas_csv);
    if (alphas.size() != mults.size())
      throw std::invalid_argument("--alphas must list one parameter per --s entry");
  }
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (mults[i] == 0) continue; // multiplicity 0 means the component is absent
    PencilComponent c;
    c.mult = mults[i];
    if (!alphas.empty()) c.alpha = alphas[i];
    spec.components.push_back(std::move(c));
  }
  if (f.A != 0) spec.A_override = f.A;
  spec.validate();
  return spec;
}

ordered_json spec_json(const CurveSpec& spec) {
  ordered_json j;
  j["n"] = spec.n;
  j["m"] = spec.m;
  ordered_json s = ordered_json::array();
  for (const auto& c : spec.components) s.push_back(c.mult);
  j["s"] = s;
  if (spec.alphas_present()) {
    ordered_json a = ordered_json::array();
    for (const auto& c : spec.components) a.push_back(c.alpha->str());
    j["alphas"] = a;
  } else {
    j["alphas"] = nullptr;
  }
  j["r"] = spec.r;
  j["q"] = spec.q;
  j["qbar"] = spec.qbar;
  if (spec.A_override) j["A"] = *spec.A_override;
  else j["A"] = nullptr;
  return j;
}

struct Envelope {
  ordered_json body;
  Envelope(const std::string& command) {
    body["command"] = command;
  }
  void set_spec(const CurveSpec& spec) { body["spec"] = spec_json(spec); }
  ordered_json& results() { return body["results"]; }
  void warn(const std::vector<std::string>& ws) {
    if (!body.contains("warnings")) body["warnings"] = ordered_json::array();
    for (const auto& w : ws) body["warnings"].push_back(w);
  }
  void note(const std::string& n) {
    if (!body.contains("notes")) body["notes"] = ordered_json::array();
    body["notes"].push_back(n);
  }
  void finish() {
    if (!body.contains("warnings")) body["warnings"] = ordered_json::array();
    if (!body.contains("notes")) body["notes"] = ordered_json::array();
  }
};

void print_kv(std::ostream& os, const ordered_json& j, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      print_kv(os, value, prefix + key + ".");
    } else if (value.is_array()) {
      os << prefix << key << " =";
      for (const auto& v : value) os << " " << (v.is_string() ? v.get<std::string>() : v.dump());
      os << "\n";
    } else if (value.is_string()) {
      os << prefix << key << " = " << value.get<std::string>() << "\n";
    } else {
      os << prefix << key << " = " << value.dump() << "\n";
    }
  }
}

void emit(Envelope& env, Format format) {
  env.finish();
  if (format == Format::Json) {
    std::cout << env.body.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) {
    // flat, one header row and one value row built from the results object
    const auto& res = env.body["results"];
    std::string header, row;
    for (const auto& [key, value] : res.items()) {
      if (!header.empty()) {
        header += ",";
        row += ",";
      }
      header += key;
      row += value.is_string() ? value.get<std::string>() : value.dump();
    }
    std::cout << header << "\n" << row << "\n";
    for (const auto& w : env.body["warnings"]) std::cout << "# warning: " << w.get<std::string>() << "\n";
    return;
  }
  print_kv(std::cout, env.body["results"], "");
  for (const auto& w : env.body["warnings"])
    std::cout << "warning: " << w.get<std::string>() << "\n";
  for (const auto& n : env.body["notes"]) std::cout << "note: " << n.get<std::string>() << "\n";
}

int cmd_degree(const SpecFlags& flags, const std::string& method, Format format) {
  const CurveSpec spec = build_spec(flags);
  Envelope env("degree");
  env.set_spec(spec);
  bool mismatch = false;
  if (method == "closed" || method == "both") {
    const DegreeResult res = orbit_degree(spec, DegreeMethod::Closed);
    env.results()["degree"] = res.degree.str();
    env.results()["Q"] = res.Q.str();
    env.results()["A"] = std::to_string(res.A);
    env.results()["Q_polynomial"] = degree_polynomial_formal(spec).str();
    env.warn(res.warnings);
    env.note("closed-form degree polynomial");
  }
  if (method == "pipeline" || method == "both") {
    const DegreeResult res = orbit_degree(spec, DegreeMethod::Pipeline);
    env.results()["degree_pipeline"] = res.degree.str();
    env.results()["Q_pipeline"] = res.Q.str();
    if (method == "pipeline") {
      env.results()["degree"] = res.degree.str();
      env.results()["Q"] = res.Q.str();
      env.results()["A"] = std::to_string(res.A);
      env.warn(res.warnings);
    }
    env.note("intersection-theoretic pipeline");
  }
  if (method == "both") {
    mismatch = env.results()["degree"] != env.results()["degree_pipeline"];
    env.results()["match"] = mismatch ? "no" : "yes";
  }
  emit(env, format);
  if (mismatch) {
    std::cerr << "error: closed form and pipeline disagree\n";
    return 2;
  }
  return 0;
}

int cmd_predegree(const SpecFlags& flags, const std::string& method, Format format) {
  const CurveSpec spec = build_spec(flags);
  Envelope env("predegree");
  env.set_spec(spec);
  const PredegreePolynomial p = predegree(spec);
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.c) coeffs.push_back(c.str());
  env.results()["coefficients"] = coeffs;
  env.results()["orbit_dimension"] = p.orbit_dimension;
  if (spec.triangle_only() && spec.q >= 1 && spec.qbar >= 1 && spec.r >= 1) {
    const std::int64_t stab = triangle_stabilizer_degree(spec.q, spec.qbar, spec.r);
    env.results()["stabilizer_degree"] = std::to_string(stab);
    env.results()["orbit_closure_degree"] =
        (p.c[p.orbit_dimension] / Rational(stab)).str();
    env.note("triangle-only input: predegree divided by the stabilizer closure degree");
  }
  bool mismatch = false;
  if (method == "both") {
    // the top coefficient carries n times the degree polynomial
    const Rational nQ = degree_polynomial_value(spec) * Rational(spec.n);
    env.results()["nQ"] = nQ.str();
    mismatch = p.c[7] != nQ;
    env.results()["match"] = mismatch ? "no" : "yes";
    env.note("cross-check of the top coefficient against n * Q");
  }
  emit(env, format);
  if (mismatch) {
    std::cerr << "error: top predegree coefficient disagrees with n * Q\n";
    return 2;
  }
  return 0;
}

int cmd_constrained(const SpecFlags& flags, int jmu, int jmubar, int jlambda,
                    const std::string& method, Format format) {
  const CurveSpec spec = build_spec(flags);
  const ConditionProfile jp{jmu, jmubar, jlambda};
  jp.validate();
  Envelope env("constrained");
  env.set_spec(spec);
  env.results()["jmu"] = jmu;
  env.results()["jmubar"] = jmubar;
  env.results()["jlambda"] = jlambda;
  bool mismatch = false;
  if (method == "closed" || method == "both") {
    env.results()["count"] = constrained_degree(spec, jp).str();
    env.note("derivative of the closed degree polynomial");
  }
  if (method == "pipeline" || method == "both") {
    const Rational direct = constrained_degree_direct(spec, jp);
    env.results()["count_pipeline"] = direct.str();
    if (method == "pipeline") env.results()["count"] = direct.str();
    env.note("single-profile pipeline assembly");
  }
  if (method == "both") {
    mismatch = env.results()["count"] != env.results()["count_pipeline"];
    env.results()["match"] = mismatch ? "no" : "yes";
  }
  emit(env, format);
  if (mismatch) {
    std::cerr << "error: derivative and pipeline counts disagree\n";
    return 2;
  }
  return 0;
}

int cmd_table(const SpecFlags& flags, Format format) {
  const CurveSpec spec = build_spec(flags);
  const CharacteristicTable table = characteristic_table(spec);
  if (format == Format::Json) {
    Envelope env("table");
    env.set_spec(spec);
    ordered_json rows = ordered_json::array();
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 2; ++k) {
          ordered_json row;
          row["jmu"] = i;
          row["jmubar"] = j;
          row["jlambda"] = k;
          row["count"] = table[i][j][k].str();
          rows.push_back(row);
        }
    env.results()["rows"] = rows;
    emit(env, Format::Json);
    return 0;
  }
  if (format == Format::Csv) std::cout << "jmu,jmubar,jlambda,count\n";
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k) {
        if (format == Format::Csv)
          std::cout << i << "," << j << "," << k << "," << table[i][j][k].str() << "\n";
        else
          std::cout << i << " " << j << " " << k << " " << table[i][j][k].str() << "\n";
      }
  return 0;
}

int cmd_quadritangent(const std::string& s_csv, std::int64_t q, const std::string& alphas_csv,
                      std::int64_t A, Format format) {
  const auto mults = parse_int_list(s_csv);
  std::vector<GaussianRational> alphas;
  if (!alphas_csv.empty()) alphas = parse_alpha_list(alphas_csv);
  const auto res = quadritangent_degree(
      mults, q, alphas, A != 0 ? std::optional<std::int64_t>(A) : std::nullopt);
  Envelope env("quadritangent");
  ordered_json spec;
  spec["s"] = mults;
  spec["q"] = q;
  if (!alphas.empty()) {
    ordered_json a = ordered_json::array();
    for (const auto& al : alphas) a.push_back(al.str());
    spec["alphas"] = a;
  } else {
    spec["alphas"] = nullptr;
  }
  spec["A"] = A != 0 ? ordered_json(A) : ordered_json(nullptr);
  env.body["spec"] = spec;
  env.results()["Q"] = res.Q.str();
  env.results()["A"] = std::to_string(res.A);
  env.results()["degree"] = res.degree.str();
  env.warn(res.warnings);
  emit(env, format);
  return 0;
}

int cmd_verify(bool deep, Format format) {
  VerifyOptions opts;
  opts.deep = deep;
  const auto results = run_verification(opts);
  bool all_ok = true;
  std::string first_failure;
  if (format == Format::Json) {
    Envelope env("verify");
    ordered_json rows = ordered_json::array();
    for (const auto& r : results) {
      ordered_json row;
      row["name"] = r.name;
      row["passed"] = r.passed;
      row["checks"] = r.checks;
      if (!r.passed) row["counterexample"] = r.counterexample;
      rows.push_back(row);
      if (!r.passed && all_ok) {
        all_ok = false;
        first_failure = r.name + ": " + r.counterexample;
      }
    }
    env.results()["checks"] = rows;
    env.results()["passed"] = all_ok;
    emit(env, Format::Json);
  } else {
    for (const auto& r : results) {
      if (r.passed) {
        std::cout << "ok   " << r.name << " (" << r.checks << " checks)\n";
      } else {
        std::cout << "FAIL " << r.name << ": " << r.counterexample << "\n";
        if (all_ok) {
          all_ok = false;
          first_failure = r.name + ": " + r.counterexample;
        }
      }
    }
  }
  if (!all_ok) {
    std::cerr << "error: verification failed, minimal counterexample: " << first_failure << "\n";
    return 2;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumerative geometry of plane curves with small linear orbits"};
  app.require_subcommand(1);

  SpecFlags dflags;
  std::string dmethod = "closed", dformat = "text";
  auto* degree = app.add_subcommand("degree", "degree of the orbit closure");
  add_spec_flags(degree, dflags);
  degree->add_option("--method", dmethod)->check(CLI::IsMember({"closed", "pipeline", "both"}));
  degree->add_option("--format", dformat)->check(CLI::IsMember({"text", "json", "csv"}));

  SpecFlags pflags;
  std::string pmethod = "closed", pformat = "text";
  auto* pre = app.add_subcommand("predegree", "adjusted predegree polynomial");
  add_spec_flags(pre, pflags);
  pre->add_option("--method", pmethod)->check(CLI::IsMember({"closed", "both"}));
  pre->add_option("--format", pformat)->check(CLI::IsMember({"text", "json", "csv"}));

  SpecFlags cflags;
  int jmu = 0, jmubar = 0, jlambda = 0;
  std::string cmethod = "closed", cformat = "text";
  auto* con = app.add_subcommand("constrained", "count with point conditions on the triangle lines");
  add_spec_flags(con, cflags);
  con->add_option("--jmu", jmu, "points imposed on mu (0..2)");
  con->add_option("--jmubar", jmubar, "points imposed on mubar (0..2)");
  con->add_option("--jlambda", jlambda, "points imposed on lambda (0..2)");
  con->add_option("--method", cmethod)->check(CLI::IsMember({"closed", "pipeline", "both"}));
  con->add_option("--format", cformat)->check(CLI::IsMember({"text", "json", "csv"}));

  SpecFlags tflags;
  std::string tformat = "csv";
  auto* table = app.add_subcommand("table", "3x3x3 characteristic-number table");
  add_spec_flags(table, tflags);
  table->add_option("--format", tformat)->check(CLI::IsMember({"text", "json", "csv"}));

  std::string qt_s = "1,1", qt_alphas;
  std::int64_t qt_q = 0, qt_A = 0;
  std::string qtformat = "text";
  auto* quad = app.add_subcommand("quadritangent", "degree for a union of quadritangent conics");
  quad->add_option("--s", qt_s, "comma list of conic multiplicities");
  quad->add_option("--q", qt_q, "multiplicity of the common tangent line");
  quad->add_option("--alphas", qt_alphas, "comma list of conic parameters");
  quad->add_option("--A", qt_A, "stabilizer component count override");
  quad->add_option("--format", qtformat)->check(CLI::IsMember({"text", "json", "csv"}));

  bool deep = false;
  std::string vformat = "text";
  auto* verify = app.add_subcommand("verify", "run the internal verification grids");
  verify->add_flag("--deep", deep, "extend the ladder identity grid to n <= 20");
  verify->add_option("--format", vformat)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (degree->parsed()) return cmd_degree(dflags, dmethod, parse_format(dformat));
    if (pre->parsed()) return cmd_predegree(pflags, pmethod, parse_format(pformat));
    if (con->parsed())
      return cmd_constrained(cflags, jmu, jmubar, jlambda, cmethod, parse_format(cformat));
    if (table->parsed()) return cmd_table(tflags, parse_format(tformat));
    if (quad->parsed()) return cmd_quadritangent(qt_s, qt_q, qt_alphas, qt_A, parse_format(qtformat));
    if (verify->parsed()) return cmd_verify(deep, parse_format(vformat));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
