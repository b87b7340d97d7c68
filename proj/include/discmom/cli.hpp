#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "discmom/json_io.hpp"

namespace discmom::cli {

enum ExitCode { kOk = 0, kViolated = 1, kInputError = 2 };

struct Input {
  MomentVector moments;
  Grid grid = Grid::naturals();
};

struct Request {
  std::string command;
  std::vector<Input> inputs;
  /// True when inputs came from a JSON array (output is then an array).
  bool batch = false;
  std::optional<long> upper;        // --N
  std::optional<std::size_t> order; // --n
  bool json = false;
  RootPattern alpha;
  std::string fixture_case = "a";
  Rational fixture_c = 1;
  SolverOptions solver;
};

inline std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    const Rational a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool unit = a == 1 && k > 0;
    if (!unit) out += is_integer(a) || k == 0 ? to_string(a) : "(" + to_string(a) + ")";
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::string join(std::span<const Rational> values, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + to_string(values[i]);
  return out;
}

inline std::string describe_polynomial(const Polynomial& p) {
  std::string out = format_polynomial(p);
  if (p.roots()) out += "  (roots " + join(*p.roots()) + ")";
  return out;
}

inline std::string describe_measure(const AtomicMeasure& mu) {
  std::string out;
  for (std::size_t i = 0; i < mu.atoms.size(); ++i)
    out += (i ? " + " : "") + to_string(mu.weights[i]) + " d" + to_string(mu.atoms[i]);
  return out;
}

namespace detail {

struct Outcome {
  int code = kOk;
  Json json;
  std::string text;
};

inline Json input_json(const Input& in) {
  return Json{{"moments", rationals_json(in.moments.values())}, {"grid", in.grid}};
}

inline Outcome run_check(const Request& req, const Input& in) {
  Outcome o;
  o.json = input_json(in);
  std::ostringstream text;
  text << "moments: " << join(in.moments.values()) << "\n" << "grid: " << in.grid.describe() << "\n";
  if (in.grid.is_naturals()) {
    const bool sufficient = sufficient_check(in.moments);
    o.json["sufficient"] = sufficient;
    text << "sufficient: " << (sufficient ? "yes" : "no (not conclusive when no)") << "\n";
  } else {
    o.json["sufficient"] = nullptr;
  }
  const Verdict v = classify(in.moments, in.grid, req.solver);
  o.json["verdict"] = v;
  text << "status: " << status_name(v.status) << "\n";
  std::visit(
      [&](const auto& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, MinPolyCertificate>) {
          text << "minimizing polynomial: " << describe_polynomial(c.polynomial) << "\n";
          if (c.value) text << "L value: " << to_string(*c.value) << "\n";
        } else if constexpr (std::is_same_v<C, BoundaryCertificate>) {
          text << "measure: " << describe_measure(c.measure) << "\n";
          text << "vanishing polynomial: " << describe_polynomial(c.polynomial) << "\n";
        } else if constexpr (std::is_same_v<C, NegativityWitness>) {
          text << "witness (prefix " << c.index << "): " << describe_polynomial(c.polynomial) << "\n";
          text << "L value: " << to_string(c.value) << "\n";
        } else {
          text << "boundary polynomial (prefix " << c.index - c.shift << "): " << describe_polynomial(c.polynomial)
               << "\n";
          text << "m_" << c.index << " must equal " << to_string(c.forced) << ", got " << to_string(c.actual) << "\n";
        }
      },
      v.certificate);
  o.text = text.str();
  o.code = v.status == Status::NotRealizable ? kViolated : kOk;
  return o;
}

inline Outcome run_min_poly(const Request& req, const Input& in) {
  const std::size_t n = req.order.value_or(in.moments.size() + 1);
  if (n == 0) throw ArityError("--n must be at least 1");
  if (in.moments.size() + 1 < n) throw ArityError("min-poly with n = " + std::to_string(n) + " needs m_1..m_" + std::to_string(n - 1));
  if (n >= 2 && classify(in.moments.prefix(n - 1), in.grid, req.solver).status != Status::IRealizable)
    throw PreconditionError("the prefix m_1..m_" + std::to_string(n - 1) + " is not I-realizable");
  const MinPolyCertificate cert = min_poly(in.moments, n, in.grid, req.solver.method);
  Outcome o;
  o.json = input_json(in);
  o.json["n"] = n;
  o.json["polynomial"] = cert.polynomial;
  std::string text = "P_" + std::to_string(n) + " = " + describe_polynomial(cert.polynomial) + "\n";
  if (cert.value) {
    o.json["value"] = rational_json(*cert.value);
    text += "L value: " + to_string(*cert.value) + "\n";
  }
  o.text = std::move(text);
  return o;
}

inline Outcome run_extend(const Request& req, const Input& in) {
  const Verdict v = classify(in.moments, in.grid, req.solver);
  Outcome o;
  o.json = input_json(in);
  o.json["status"] = status_name(v.status);
  const std::size_t next = in.moments.size() + 1;
  if (v.status == Status::NotRealizable) {
    o.json["verdict"] = v;
    o.text = "status: Not (no extension exists)\n";
    o.code = kViolated;
    return o;
  }
  if (v.status == Status::IRealizable) {
    auto [value, mu] = minimal_extension(in.moments, in.grid, req.solver.method);
    o.json["m_next_min"] = rational_json(value);
    o.json["measure"] = mu;
    o.text = "status: I\nminimal m_" + std::to_string(next) + ": " + to_string(value) + "\nmeasure: " +
             describe_measure(mu) + "\n";
    return o;
  }
  const AtomicMeasure& mu = std::get<BoundaryCertificate>(v.certificate).measure;
  const Rational forced = mu.moment(next);
  o.json["m_next_forced"] = rational_json(forced);
  o.json["measure"] = mu;
  o.text = "status: B\nforced m_" + std::to_string(next) + ": " + to_string(forced) + "\nmeasure: " +
           describe_measure(mu) + "\n";
  return o;
}

inline Outcome run_sufficient(const Request&, const Input& in) {
  Outcome o;
  o.json = input_json(in);
  Json matrices = Json::array();
  std::string text;
  for (std::size_t j = 1; j <= in.moments.size(); ++j) {
    const SymmetricRationalMatrix d = d_matrix(in.moments, j);
    matrices.push_back(matrix_json(d));
    text += "D_" + std::to_string(j) + " = [";
    const auto rows = d.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) text += (r ? "; " : "") + join(rows[r], " ");
    text += "]\n";
  }
  const bool sufficient = sufficient_check(in.moments);
  o.json["sufficient"] = sufficient;
  o.json["matrices"] = std::move(matrices);
  o.text = text + "sufficient: " + (sufficient ? "yes" : "no (not conclusive when no)") + "\n";
  o.code = sufficient ? kOk : kViolated;
  return o;
}

inline Outcome run_oracle(const Request& req, const Input& in) {
  if (!req.upper) throw ArityError("oracle needs --N");
  const ConditionReport report = realizable_on_NN(in.moments, *req.upper);
  Outcome o;
  o.json = input_json(in);
  o.json["N"] = *req.upper;
  o.json["report"] = report;
  std::string text = "conditions checked: " + std::to_string(report.checked) + "\n";
  if (report.satisfied) {
    text += "realizable on {0.." + std::to_string(*req.upper) + "}: yes\n";
  } else {
    const ConditionViolation& v = *report.first_violation;
    text += "realizable on {0.." + std::to_string(*req.upper) + "}: no\n";
    text += std::string("violated (") + family_name(v.family) + "): " + describe_polynomial(v.polynomial) +
            ", L value " + to_string(v.value) + "\n";
  }
  o.text = std::move(text);
  o.code = report.satisfied ? kOk : kViolated;
  return o;
}

inline Outcome run_fixture(const Request& req) {
  FixtureCase which;
  if (req.fixture_case == "a")
    which = FixtureCase::A;
  else if (req.fixture_case == "b")
    which = FixtureCase::B;
  else if (req.fixture_case == "c")
    which = FixtureCase::C;
  else
    throw ParseError("--case must be a, b or c", 0);
  if (!req.order) throw ArityError("fixture needs --n");
  const MomentVector m = fixture(req.alpha, which, *req.order, req.fixture_c);
  Outcome o;
  o.json = Json{{"alpha", rationals_json(req.alpha)}, {"case", req.fixture_case}, {"n", *req.order},
                {"moments", rationals_json(m.values())}};
  o.text = join(m.values(), ",") + "\n";
  return o;
}

inline Outcome run_one(const Request& req, const Input& in) {
  if (req.command == "check") return run_check(req, in);
  if (req.command == "min-poly") return run_min_poly(req, in);
  if (req.command == "extend") return run_extend(req, in);
  if (req.command == "sufficient") return run_sufficient(req, in);
  if (req.command == "oracle") return run_oracle(req, in);
  throw ParseError("unknown command '" + req.command + "'", 0);
}

inline std::string error_message(const std::exception& e) { return e.what(); }

}  // namespace detail

/// Runs a parsed request; reports go to `out`, diagnostics to `err`.
inline int run(const Request& req, std::ostream& out, std::ostream& err) {
  std::vector<detail::Outcome> outcomes;
  if (req.command == "fixture") {
    try {
      outcomes.push_back(detail::run_fixture(req));
    } catch (const std::exception& e) {
      err << "error: " << detail::error_message(e) << "\n";
      return kInputError;
    }
  } else {
    if (req.inputs.empty()) {
      err << "error: no moments given (use --m or --file)\n";
      return kInputError;
    }
    for (const Input& in : req.inputs) {
      try {
        if (in.moments.empty()) throw ArityError("moment vector is empty");
        outcomes.push_back(detail::run_one(req, in));
      } catch (const std::exception& e) {
        detail::Outcome o;
        o.code = kInputError;
        o.json = detail::input_json(in);
        o.json["error"] = detail::error_message(e);
        o.text = "error: " + detail::error_message(e) + "\n";
        err << o.text;
        outcomes.push_back(std::move(o));
      }
    }
  }
  int code = kOk;
  for (const detail::Outcome& o : outcomes) code = std::max(code, o.code);
  if (req.json) {
    Json body;
    if (req.batch) {
      body = Json::array();
      for (detail::Outcome& o : outcomes) body.push_back(std::move(o.json));
      body = Json{{"results", std::move(body)}};
    } else {
      body = std::move(outcomes.front().json);
    }
    body["schema"] = kSchemaVersion;
    body["command"] = req.command;
    out << body.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].code == kInputError) continue;
      if (i) out << "\n";
      out << outcomes[i].text;
    }
  }
  return code;
}

/// Reads inputs from a JSON file holding one object or an array of objects
/// {"moments": [...], "grid": {...}}.
inline std::vector<Input> read_inputs(const std::string& path, const Grid& default_grid, bool& batch) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'", 0);
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  batch = doc.is_array();
  if (!batch) doc = Json::array({doc});
  std::vector<Input> inputs;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const Json& item = doc[k];
    try {
      if (!item.is_object() || !item.contains("moments")) throw ParseError("expected an object with \"moments\"", 0);
      Input in;
      in.moments = MomentVector(rationals_from_json(item.at("moments")));
      in.grid = item.contains("grid") ? grid_from_json(item.at("grid")) : default_grid;
      inputs.push_back(std::move(in));
    } catch (const ParseError& e) {
      throw ParseError("input " + std::to_string(k) + ", " + e.message(), e.position());
    } catch (const Json::exception& e) {
      throw ParseError("input " + std::to_string(k) + ", " + e.what(), 0);
    }
  }
  return inputs;
}

/// Entry point shared by the executable and the tests.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact realizability of truncated moment sequences on discrete grids"};
  app.require_subcommand(1);
  std::string moments_text, grid_text = "nn0", file, alpha_text, c_text = "1", case_text = "a";
  long upper = 0;
  std::size_t order = 0;
  bool json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", moments_text, "moments m_1,...,m_n as exact rationals p/q");
    sub->add_option("--grid", grid_text, "nn0 | nn:N | explicit:0,p1,p2,...");
    sub->add_option("--file", file, "JSON object or array of {\"moments\": [...], \"grid\": {...}}");
    sub->add_flag("--json", json, "JSON output");
  };
  CLI::App* check = app.add_subcommand("check", "classify as I-realizable, B-realizable or not realizable");
  CLI::App* minp = app.add_subcommand("min-poly", "minimizing polynomial P_n");
  CLI::App* extend = app.add_subcommand("extend", "minimal or forced next moment");
  CLI::App* suff = app.add_subcommand("sufficient", "D_j positive-definiteness pre-screen");
  CLI::App* oracle = app.add_subcommand("oracle", "finite condition check on {0..N}");
  CLI::App* fix = app.add_subcommand("fixture", "non-realizable test vector from a root pattern");
  for (CLI::App* sub : {check, minp, extend, suff, oracle}) add_common(sub);
  minp->add_option("--n", order, "degree n (default: number of moments + 1)");
  oracle->add_option("--N", upper, "grid bound N")->required();
  fix->add_option("--alpha", alpha_text, "root pattern, e.g. 0,2,3")->required();
  fix->add_option("--case", case_text, "a | b | c");
  fix->add_option("--n", order, "moment count n")->required();
  fix->add_option("--c", c_text, "case c offset (default 1)");
  fix->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  Request req;
  req.command = app.get_subcommands().front()->get_name();
  req.json = json;
  if (const char* env = std::getenv("MOMENT_ORACLE_NMAX")) {
    try {
      req.solver.n_max = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      err << "error: MOMENT_ORACLE_NMAX must be a positive integer\n";
      return kInputError;
    }
  }
  try {
    if (req.command == "fixture") {
      req.alpha = parse_rational_list(alpha_text);
      req.fixture_case = case_text;
      req.fixture_c = parse_rational(c_text);
      req.order = order;
      return run(req, out, err);
    }
    if (const CLI::Option* n = app.get_subcommands().front()->get_option_no_throw("--n"); n && n->count()) req.order = order;
    if (req.command == "oracle") req.upper = upper;
    const Grid grid = parse_grid(grid_text);
    if (!file.empty()) {
      if (!moments_text.empty()) throw ParseError("give either --m or --file, not both", 0);
      req.inputs = read_inputs(file, grid, req.batch);
    } else if (!moments_text.empty()) {
      req.inputs.push_back({MomentVector(parse_rational_list(moments_text)), grid});
    }
  } catch (const std::exception& e) {
    err << "error: " << detail::error_message(e) << "\n";
    return kInputError;
  }
  return run(req, out, err);
}

}  // namespace discmom::cli
