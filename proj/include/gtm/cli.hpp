#pragma once
// Command-line front end. run_cli parses arguments and writes reports to the
// given streams, so tests can drive it in-process. Exit codes depend only on
// the report status.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gtm/io.hpp"

namespace gtm {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;  // residuals nonzero, not a module, empty extension, audit mismatch
inline constexpr int decomposable = 2;
inline constexpr int below_threshold = 3;
inline constexpr int degenerate = 4;
inline constexpr int usage = 64;
inline constexpr int data = 65;  // ParseError, BadParams
inline constexpr int no_input = 66;
inline constexpr int internal = 70;
}  // namespace exit_code

inline constexpr unsigned kDefaultSeed = 20240601u;

struct CommandResult {
  Json report;      // printed as JSON
  std::string text; // printed instead when non-empty
  int code = exit_code::ok;
};

inline int classification_exit(Status s) {
  switch (s) {
    case Status::Classified: return exit_code::ok;
    case Status::NotAModule: return exit_code::failed;
    case Status::Decomposable: return exit_code::decomposable;
    case Status::BelowThreshold: return exit_code::below_threshold;
    default: return exit_code::degenerate;
  }
}

inline CommandResult cmd_verify(const ModuleDocument& doc) {
  const DefiningSet& ds = doc.ds;
  const ActionTable table = ds.action();
  ResidualReport benoist = benoist_residuals(table);
  std::vector<JacobiDefect> jacobi = full_jacobi_check(table);
  ResidualReport special = specialized_residuals(ds);
  const bool ok = benoist.all_zero() && jacobi.empty() && special.all_zero();
  Json j;
  j["status"] = ok ? "ok" : "residuals_nonzero";
  j["n_plus_1"] = ds.n_plus_1;
  j["pattern"] = pattern_json(detect_type(ds));
  j["benoist"] = residual_json(benoist);
  Json jd = Json::array();
  for (const auto& d : jacobi) jd.push_back({{"i", d.i}, {"j", d.j}, {"m", d.m}, {"value", d.value.str()}});
  j["jacobi"] = {{"all_zero", jacobi.empty()}, {"nonzero", jd}};
  j["specialized"] = residual_json(special);
  Json fz = Json::array();
  for (const auto& [i, m] : forced_zero_set(ds.to_tilde().alpha)) fz.push_back({i, m});
  j["forced_zeros"] = fz;
  const auto split = decompose(ds);
  j["decomposable"] = is_decomposable(ds);
  if (split) j["split_at"] = split->m;
  return {j, "", ok ? exit_code::ok : exit_code::failed};
}

inline CommandResult cmd_classify(const ModuleDocument& doc) {
  ClassificationResult r = classify(doc.ds);
  return {classification_json(r), "", classification_exit(r.status)};
}

inline ModuleDocument cmd_family(const std::string& label, int N) {
  FamilyLabel L = FamilyLabel::parse(label);
  return {make_family(L, N), L};
}

// The dual label is kept only where the stated duality is an involution, so
// dualizing twice returns the original document.
inline ModuleDocument cmd_dual(const ModuleDocument& doc) {
  ModuleDocument out{dualize(doc.ds), std::nullopt};
  if (doc.label) {
    try {
      FamilyLabel d = dual_label(*doc.label, doc.ds.n_plus_1);
      if (dual_label(d, doc.ds.n_plus_1).str() == doc.label->str()) out.label = d;
    } catch (const Error&) {
    }
  }
  return out;
}

inline CommandResult cmd_extend(const ModuleDocument& doc, Side side) {
  Extension e = extend(doc.ds, side);
  Json j;
  j["status"] = to_string(e.kind);
  j["direction"] = side == Side::Right ? "right" : "left";
  if (e.value) {
    j["b_new"] = e.value->str();
    j["document"] = document_json({extended_with(doc.ds, side, *e.value), std::nullopt});
  }
  return {j, "", e.kind == ExtensionKind::Empty ? exit_code::failed : exit_code::ok};
}

inline std::string piece_text(const IntersectionPiece& p) {
  if (!p.curve) return p.a.str() + " = " + p.b.str();
  std::string s = "curve";
  if (!p.free_parameter.empty()) s += " in " + p.free_parameter;
  for (const auto& [k, v] : p.description) s += ", " + k + " = " + v;
  return s;
}

inline std::string eliminant_text(const EliminantReport& e) {
  std::ostringstream o;
  o << "eliminant identity=" << (e.identity ? "yes" : "no") << " degree=" << e.degree << " constant=" << e.constant.str()
    << "\n";
  o << "eliminant factor " << e.factor.str() << "\n";
  o << "eliminant z - y - 2/5 divides: " << (e.printed_factor_divides ? "yes" : "no") << "\n";
  o << "eliminant " << e.eliminant.str() << "\n";
  return o.str();
}

inline std::string audit_text(const AuditReport& r) {
  std::ostringstream o;
  o << "audit dim=" << r.n_plus_1 << " type=" << to_string(r.kind) << " seed=" << r.seed
    << " status=" << (r.all_reproduced() ? "reproduced" : "mismatch") << "\n";
  for (const auto& c : r.claims) o << (c.reproduced ? "[ok]   " : "[FAIL] ") << c.claim << ": " << c.computed << "\n";
  if (r.eliminant) o << eliminant_text(*r.eliminant);
  for (const auto& c : r.components) {
    o << "component " << c.component << " samples=" << c.samples << " residuals=" << (c.residuals_zero ? "zero" : "NONZERO")
      << " meets:";
    if (c.meets.empty()) o << " none";
    for (std::size_t i = 0; i < c.meets.size(); ++i) o << (i ? "; " : " ") << c.meets[i];
    o << "\n";
  }
  for (const auto& x : r.intersections) {
    o << "intersection " << component_name(x.a, x.nine) << " x " << component_name(x.b, x.nine) << ":";
    if (x.pieces.empty()) o << " empty";
    for (std::size_t i = 0; i < x.pieces.size(); ++i) o << (i ? "; " : " ") << piece_text(x.pieces[i]);
    if (!x.complete) {
      o << " (incomplete, unresolved:";
      for (const auto& u : x.unresolved) o << " " << u.str();
      o << ")";
    }
    o << "\n";
  }
  if (r.criterion)
    o << "criterion u = " << r.criterion->computed_u << " sufficient=" << (r.criterion->sufficient ? "yes" : "no")
      << " necessary=" << (r.criterion->necessary ? "yes" : "no") << "\n";
  for (const auto& e : r.extensions) o << "extension " << e.component << " " << e.side() << ": " << e.summary() << "\n";
  for (const auto& t : r.typec) {
    o << "typeC k=" << t.k << " solutions=" << t.solutions.size() << " complete=" << (t.complete ? "yes" : "no") << ":";
    for (const auto& s : t.solutions)
      for (const auto& L : s.isomorphic_to) o << " " << L.str();
    o << "\n";
  }
  if (r.distinctness) {
    const auto& d = *r.distinctness;
    o << "distinctness draws=" << d.draws << " classified=" << d.classified << " pairs=" << d.pairs_compared
      << " coincidences=" << d.coincidences << " violations=" << d.violations << "\n";
    for (const auto& f : d.failures) o << "distinctness failure " << f << "\n";
  }
  return o.str();
}

inline CommandResult cmd_audit(int N, PatternKind kind, unsigned seed) {
  AuditReport r = uniqueness_audit(N, kind, seed);
  return {audit_json(r), audit_text(r), r.all_reproduced() ? exit_code::ok : exit_code::failed};
}

inline CommandResult cmd_eliminant() {
  EliminantReport e = eliminant_identity();
  return {eliminant_json(e), eliminant_text(e), e.identity ? exit_code::ok : exit_code::failed};
}

inline PatternKind parse_kind(const std::string& s) {
  if (s == "typeA") return PatternKind::TypeA;
  if (s == "typeB") return PatternKind::TypeB;
  if (s == "typeC") return PatternKind::TypeC;
  throw Error("BadParams", "type must be typeA, typeB or typeC, got \"" + s + "\"");
}

struct InputMissing : Error {
  explicit InputMissing(const std::string& m) : Error("InputMissing", m) {}
};

inline ModuleDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputMissing("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction, verification and classification of graded thread modules over W+", "gtm"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned seed = kDefaultSeed;
  bool json = false, quiet = false;
  app.add_option("--seed", seed, "Seed for randomized audit sampling")->capture_default_str();
  app.add_flag("--json", json, "Print audit and eliminant reports as JSON instead of text");
  app.add_flag("--quiet", quiet, "Suppress standard output; only the exit code reports");

  std::string file, label, dir = "right", type;
  int dim = 0;
  auto* verify = app.add_subcommand("verify", "Check all relation residuals of a module document");
  verify->add_option("file", file, "Module document")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Identify the family of a module document");
  classify_cmd->add_option("file", file, "Module document")->required();
  auto* family = app.add_subcommand("family", "Build the module document of a family label");
  family->add_option("label", label, "Family label, e.g. Rk(k=4)")->required();
  family->add_option("--dim", dim, "Dimension n+1")->required()->check(CLI::PositiveNumber);
  auto* dual = app.add_subcommand("dual", "Print the dual module document");
  dual->add_option("file", file, "Module document")->required();
  auto* ext = app.add_subcommand("extend", "Add one basis vector on the right or left");
  ext->add_option("file", file, "Module document")->required();
  ext->add_option("--dir", dir, "right or left")->check(CLI::IsMember({"right", "left"}))->capture_default_str();
  auto* audit = app.add_subcommand("audit", "Re-derive the uniqueness facts for one dimension and pattern");
  audit->add_option("dim", dim, "Dimension n+1")->required()->check(CLI::PositiveNumber);
  audit->add_option("type", type, "typeA, typeB or typeC")->required()->check(CLI::IsMember({"typeA", "typeB", "typeC"}));
  auto* elim = app.add_subcommand("eliminant", "Check the factorization of the dimension-8 eliminant");

  std::vector<std::string> argv_store{"gtm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  auto emit = [&](const CommandResult& r, bool text_default) {
    if (quiet) return r.code;
    if (text_default && !json && !r.text.empty()) out << r.text;
    else out << r.report.dump(2) << "\n";
    return r.code;
  };
  try {
    if (verify->parsed()) return emit(cmd_verify(read_document(file)), false);
    if (classify_cmd->parsed()) return emit(cmd_classify(read_document(file)), false);
    if (family->parsed()) return emit({document_json(cmd_family(label, dim)), "", exit_code::ok}, false);
    if (dual->parsed()) return emit({document_json(cmd_dual(read_document(file))), "", exit_code::ok}, false);
    if (ext->parsed())
      return emit(cmd_extend(read_document(file), dir == "left" ? Side::Left : Side::Right), false);
    if (audit->parsed()) return emit(cmd_audit(dim, parse_kind(type), seed), true);
    if (elim->parsed()) return emit(cmd_eliminant(), true);
  } catch (const InputMissing& e) {
    err << "gtm: " << e.what() << "\n";
    return exit_code::no_input;
  } catch (const Error& e) {
    err << "gtm: " << e.code << ": " << e.what() << "\n";
    return e.code == "ParseError" || e.code == "BadParams" ? exit_code::data : exit_code::internal;
  } catch (const std::exception& e) {
    err << "gtm: internal error: " << e.what() << "\n";
    return exit_code::internal;
  }
  return exit_code::usage;
}

}  // namespace gtm
