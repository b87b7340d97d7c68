#pragma once

#include <json.hpp>

#include "discmom/oracle.hpp"
#include "discmom/sufficiency.hpp"

namespace discmom {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Json rational_json(const Rational& q) { return to_string(q); }

/// Accepts "p/q" strings and JSON integers; floats are rejected.
inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_number_float())
    throw ParseError("decimal number " + j.dump() + " is not exact; write it as a fraction p/q", 0);
  throw ParseError("expected a rational as \"p/q\" string, got " + j.dump(), 0);
}

inline Json rationals_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(rational_json(v));
  return out;
}

inline std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals", 0);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      out.push_back(rational_from_json(j[i]));
    } catch (const ParseError& e) {
      throw ParseError("entry " + std::to_string(i) + ": " + e.message(), i);
    }
  }
  return out;
}

inline Json matrix_json(const SymmetricRationalMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m.rows()) out.push_back(rationals_json(row));
  return out;
}

inline void to_json(Json& j, const Polynomial& p) {
  j = Json{{"coeffs", rationals_json(p.coefficients())}};
  if (p.roots()) j["roots"] = rationals_json(*p.roots());
}

/// When roots are given they define the polynomial; coeffs must agree.
inline void from_json(const Json& j, Polynomial& p) {
  const std::vector<Rational> coeffs = rationals_from_json(j.at("coeffs"));
  if (j.contains("roots")) {
    const std::vector<Rational> roots = rationals_from_json(j.at("roots"));
    Polynomial from_roots = Polynomial::from_roots(roots, coeffs.empty() ? Rational(0) : coeffs.back());
    if (!(from_roots == Polynomial(coeffs))) throw ParseError("polynomial coeffs disagree with its roots", 0);
    p = std::move(from_roots);
    return;
  }
  p = Polynomial(coeffs);
}

inline void to_json(Json& j, const AtomicMeasure& mu) {
  j = Json{{"atoms", rationals_json(mu.atoms)}, {"weights", rationals_json(mu.weights)}};
}

inline void from_json(const Json& j, AtomicMeasure& mu) {
  mu.atoms = rationals_from_json(j.at("atoms"));
  mu.weights = rationals_from_json(j.at("weights"));
}

inline void to_json(Json& j, const Grid& g) {
  switch (g.kind()) {
    case Grid::Kind::Naturals: j = Json{{"kind", "nn0"}}; break;
    case Grid::Kind::Bounded: j = Json{{"kind", "nn"}, {"N", g.bound()}}; break;
    case Grid::Kind::Explicit: j = Json{{"kind", "explicit"}, {"points", rationals_json(g.points())}}; break;
  }
}

inline Grid grid_from_json(const Json& j) {
  if (j.is_string()) return parse_grid(j.get<std::string>());
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "nn0") return Grid::naturals();
  if (kind == "nn") return Grid::bounded(j.at("N").get<long>());
  if (kind == "explicit") return Grid::explicit_points(rationals_from_json(j.at("points")));
  throw ParseError("unknown grid kind '" + kind + "'", 0);
}

inline Status status_from_name(const std::string& name) {
  if (name == "I") return Status::IRealizable;
  if (name == "B") return Status::BRealizable;
  if (name == "Not") return Status::NotRealizable;
  throw ParseError("unknown status '" + name + "'", 0);
}

inline void to_json(Json& j, const Verdict& v) {
  Json cert = std::visit(
      [](const auto& c) -> Json {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, MinPolyCertificate>) {
          Json out{{"kind", "min_poly"}, {"polynomial", c.polynomial}};
          if (c.value) out["value"] = rational_json(*c.value);
          return out;
        } else if constexpr (std::is_same_v<C, BoundaryCertificate>) {
          return Json{{"kind", "boundary"}, {"measure", c.measure}, {"polynomial", c.polynomial}};
        } else if constexpr (std::is_same_v<C, NegativityWitness>) {
          return Json{{"kind", "negativity"},
                      {"witness", {{"index", c.index}, {"polynomial", c.polynomial}, {"value", rational_json(c.value)}}}};
        } else {
          return Json{{"kind", "forced_mismatch"},
                      {"witness",
                       {{"index", c.index},
                        {"polynomial", c.polynomial},
                        {"shift", c.shift},
                        {"forced", rational_json(c.forced)},
                        {"actual", rational_json(c.actual)}}}};
        }
      },
      v.certificate);
  j = Json{{"status", status_name(v.status)}, {"certificate", std::move(cert)}};
}

inline void from_json(const Json& j, Verdict& v) {
  v.status = status_from_name(j.at("status").get<std::string>());
  const Json& c = j.at("certificate");
  const std::string kind = c.at("kind").get<std::string>();
  if (kind == "min_poly") {
    MinPolyCertificate cert{c.at("polynomial").get<Polynomial>(), std::nullopt};
    if (c.contains("value")) cert.value = rational_from_json(c.at("value"));
    v.certificate = std::move(cert);
  } else if (kind == "boundary") {
    v.certificate = BoundaryCertificate{c.at("measure").get<AtomicMeasure>(), c.at("polynomial").get<Polynomial>()};
  } else if (kind == "negativity") {
    const Json& w = c.at("witness");
    v.certificate = NegativityWitness{w.at("index").get<std::size_t>(), w.at("polynomial").get<Polynomial>(),
                                      rational_from_json(w.at("value"))};
  } else if (kind == "forced_mismatch") {
    const Json& w = c.at("witness");
    v.certificate = ForcedMismatch{w.at("index").get<std::size_t>(), w.at("polynomial").get<Polynomial>(),
                                   w.at("shift").get<std::size_t>(), rational_from_json(w.at("forced")),
                                   rational_from_json(w.at("actual"))};
  } else {
    throw ParseError("unknown certificate kind '" + kind + "'", 0);
  }
}

inline void to_json(Json& j, const ConditionReport& r) {
  j = Json{{"satisfied", r.satisfied}, {"checked", r.checked}};
  if (r.first_violation) {
    j["first_violation"] = Json{{"family", family_name(r.first_violation->family)},
                                {"polynomial", r.first_violation->polynomial},
                                {"value", rational_json(r.first_violation->value)}};
  }
}

}  // namespace discmom
