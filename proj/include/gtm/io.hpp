#pragma once
// JSON module documents and report serialization. Scalars travel as strings
// in the exactnum text form; objects keep insertion order for stable output.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gtm/audit.hpp"
#include "gtm/classify.hpp"

namespace gtm {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct ModuleDocument {
  DefiningSet ds;
  std::optional<FamilyLabel> label;
};

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline std::vector<Scalar> scalar_list(const Json& j, const char* field, long d) {
  if (!j.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  const Json& arr = j.at(field);
  if (!arr.is_array()) throw ParseError(std::string("field '") + field + "' must be an array of scalar strings");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = std::string(field) + "[" + std::to_string(i) + "]";
    if (!arr[i].is_string()) throw ParseError(where + ": scalar must be a string");
    Scalar s;
    try {
      s = Scalar::parse(arr[i].get<std::string>());
    } catch (const Error& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (s.d() != 0 && s.d() != d)
      throw ParseError(where + ": uses sqrt(" + std::to_string(s.d()) + ") but field_d is " + std::to_string(d));
    out.push_back(s);
  }
  return out;
}

inline int int_field(const Json& j, const char* field) {
  if (!j.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  if (!j.at(field).is_number_integer()) throw ParseError(std::string("field '") + field + "' must be an integer");
  return j.at(field).get<int>();
}

}  // namespace detail

inline ModuleDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON at " + detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  const int version = detail::int_field(j, "schema_version");
  if (version != kSchemaVersion) throw ParseError("unsupported schema_version " + std::to_string(version));
  const int N = detail::int_field(j, "n_plus_1");
  if (N < 1) throw ParseError("n_plus_1 must be positive");
  if (!j.contains("convention") || !j.at("convention").is_string())
    throw ParseError("field 'convention' must be \"tilde\" or \"standard\"");
  const std::string conv = j.at("convention").get<std::string>();
  if (conv != "tilde" && conv != "standard") throw ParseError("convention must be \"tilde\" or \"standard\", got \"" + conv + "\"");
  const int d = detail::int_field(j, "field_d");
  if (d < 0) throw ParseError("field_d must be nonnegative");
  ModuleDocument doc;
  auto alpha = detail::scalar_list(j, "alpha", d);
  auto b = detail::scalar_list(j, "b_or_beta", d);
  if (static_cast<int>(alpha.size()) != N - 1)
    throw ParseError("alpha has " + std::to_string(alpha.size()) + " entries, expected n_plus_1 - 1 = " + std::to_string(N - 1));
  if (static_cast<int>(b.size()) != std::max(N - 2, 0))
    throw ParseError("b_or_beta has " + std::to_string(b.size()) + " entries, expected n_plus_1 - 2 = " +
                     std::to_string(std::max(N - 2, 0)));
  doc.ds = DefiningSet(N, conv == "tilde" ? Convention::Tilde : Convention::Standard, std::move(alpha), std::move(b));
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw ParseError("field 'label' must be a string");
    try {
      doc.label = FamilyLabel::parse(j.at("label").get<std::string>());
    } catch (const Error& e) {
      throw ParseError(std::string("label: ") + e.what());
    }
  }
  return doc;
}

inline Json scalar_array(const std::vector<Scalar>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

inline Json document_json(const ModuleDocument& doc) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n_plus_1"] = doc.ds.n_plus_1;
  j["convention"] = to_string(doc.ds.convention);
  j["field_d"] = doc.ds.field_d();
  j["alpha"] = scalar_array(doc.ds.alpha);
  j["b_or_beta"] = scalar_array(doc.ds.b);
  if (doc.label) j["label"] = doc.label->str();
  return j;
}

inline std::string print_document(const ModuleDocument& doc) { return document_json(doc).dump(2) + "\n"; }

// Integer parameters as JSON numbers, everything else as scalar strings.
inline Json param_value(const Scalar& s) {
  if (s.is_rational() && s.a().is_integer() && s.a().num().fits_slong_p()) return s.a().num().get_si();
  return s.str();
}

inline Json label_json(const FamilyLabel& L) {
  Json p = Json::object();
  for (const auto& [k, v] : L.params) p[k] = param_value(v);
  Json j;
  j["family"] = L.tag;
  if (!L.variant.empty()) j["variant"] = L.variant;
  j["params"] = p;
  j["label"] = L.str();
  return j;
}

inline Json residual_json(const ResidualReport& r) {
  Json j;
  j["all_zero"] = r.all_zero();
  j["checked"] = r.entries.size();
  Json nz = Json::array();
  for (const auto& e : r.nonzero()) nz.push_back({{"relation", e.relation}, {"index", e.index}, {"value", e.value.str()}});
  j["nonzero"] = nz;
  return j;
}

inline Json pattern_json(const ZeroPattern& p) {
  Json j;
  j["kind"] = to_string(p.kind);
  j["zeros"] = p.zeros;
  if (p.kind == PatternKind::TypeB || p.kind == PatternKind::TypeC) j["k"] = p.k;
  return j;
}

inline Json classification_json(const ClassificationResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  if (r.label) {
    Json l = label_json(*r.label);
    j["family"] = l["family"];
    if (l.contains("variant")) j["variant"] = l["variant"];
    j["params"] = l["params"];
    j["witness"] = scalar_array(r.witness);
    j["label"] = l["label"];
  }
  j["pattern"] = pattern_json(r.pattern);
  if (!r.also.empty()) {
    Json a = Json::array();
    for (const auto& L : r.also) a.push_back(L.str());
    j[r.status == Status::Classified ? "also" : "candidates"] = a;
  }
  if (r.via_dual) j["via_dual"] = true;
  if (r.residual) j["residual"] = {{"relation", r.residual->relation}, {"index", r.residual->index}, {"value", r.residual->value.str()}};
  if (r.split) j["split"] = {{"m", r.split->m}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json claim_json(const ClaimCheck& c) {
  return {{"claim", c.claim}, {"computed", c.computed}, {"reproduced", c.reproduced}};
}

inline Json intersection_json(const IntersectionResult& r) {
  Json j;
  j["a"] = component_name(r.a, r.nine);
  j["b"] = component_name(r.b, r.nine);
  j["complete"] = r.complete;
  Json pieces = Json::array();
  for (const auto& p : r.pieces) {
    Json pj;
    if (p.curve) {
      pj["kind"] = "curve";
      if (!p.free_parameter.empty()) pj["free_parameter"] = p.free_parameter;
      Json d = Json::object();
      for (const auto& [k, v] : p.description) d[k] = v;
      pj["relations"] = d;
    } else {
      pj["kind"] = "point";
      pj["a"] = p.a.str();
      pj["b"] = p.b.str();
    }
    pieces.push_back(pj);
  }
  j["pieces"] = pieces;
  if (!r.unresolved.empty()) {
    Json u = Json::array();
    for (const auto& p : r.unresolved) u.push_back(p.str());
    j["unresolved"] = u;
  }
  return j;
}

inline Json eliminant_json(const EliminantReport& e) {
  Json j;
  j["eliminant"] = e.eliminant.str();
  j["factor"] = e.factor.str();
  j["constant"] = e.constant.str();
  j["degree"] = e.degree;
  j["identity"] = e.identity;
  j["factor_z_minus_y_minus_2_5_divides"] = e.printed_factor_divides;
  return j;
}

inline Json audit_json(const AuditReport& r) {
  Json j;
  j["n_plus_1"] = r.n_plus_1;
  j["type"] = to_string(r.kind);
  j["seed"] = r.seed;
  j["status"] = r.all_reproduced() ? "reproduced" : "mismatch";
  Json claims = Json::array();
  for (const auto& c : r.claims) claims.push_back(claim_json(c));
  j["claims"] = claims;
  if (r.eliminant) j["eliminant"] = eliminant_json(*r.eliminant);
  if (!r.components.empty()) {
    Json cs = Json::array();
    for (const auto& c : r.components)
      cs.push_back({{"component", c.component}, {"samples", c.samples}, {"residuals_zero", c.residuals_zero}, {"meets", c.meets}});
    j["components"] = cs;
  }
  if (!r.intersections.empty()) {
    Json t = Json::array();
    for (const auto& x : r.intersections) t.push_back(intersection_json(x));
    j["intersections"] = t;
  }
  if (r.criterion) {
    Json c;
    c["computed_u"] = r.criterion->computed_u;
    c["sufficient"] = r.criterion->sufficient;
    c["necessary"] = r.criterion->necessary;
    c["excluded_v"] = scalar_array(r.criterion->excluded_v);
    j["m1_m2_criterion"] = c;
  }
  if (!r.extensions.empty()) {
    Json es = Json::array();
    for (const auto& e : r.extensions) {
      Json ej;
      ej["component"] = e.component;
      ej["side"] = e.side();
      ej["verdict"] = e.verdict;
      ej["complete"] = e.complete;
      Json ps = Json::array();
      for (const auto& p : e.pieces) ps.push_back({{"locus", p.locus}, {"dim", p.dim}, {"images", p.images}});
      ej["pieces"] = ps;
      if (!e.unresolved.empty()) ej["unresolved"] = e.unresolved;
      es.push_back(ej);
    }
    j["extensions"] = es;
  }
  if (!r.typec.empty()) {
    Json ts = Json::array();
    for (const auto& t : r.typec) {
      Json tj;
      tj["k"] = t.k;
      tj["complete"] = t.complete;
      tj["decomposable_discarded"] = t.decomposable_discarded;
      tj["split_patterns"] = t.split_patterns;
      tj["families_with_parameters"] = t.families_with_parameters;
      Json sols = Json::array();
      for (const auto& s : t.solutions) {
        Json names = Json::array();
        for (const auto& L : s.isomorphic_to) names.push_back(L.str());
        sols.push_back({{"b", scalar_array(s.b)}, {"isomorphic_to", names}});
      }
      tj["solutions"] = sols;
      ts.push_back(tj);
    }
    j["typec"] = ts;
  }
  if (r.distinctness) {
    const auto& d = *r.distinctness;
    j["distinctness"] = {{"draws", d.draws},
                         {"classified", d.classified},
                         {"pairs_compared", d.pairs_compared},
                         {"coincidences", d.coincidences},
                         {"violations", d.violations},
                         {"split_isomorphic", d.split_isomorphic},
                         {"coincidence_examples", d.coincidence_examples},
                         {"failures", d.failures}};
  }
  return j;
}

}  // namespace gtm
