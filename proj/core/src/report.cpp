#include "mwp/report.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mwp/version.hpp"

namespace mwp {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void format_error(const std::string& what) {
  throw ReportError("malformed report: " + what);
}

Json delta_list_to_json(const DeltaList& deltas) {
  Json out = Json::array();
  for (const auto& d : deltas) out.push_back(Json::array({d.alternative, d.index}));
  return out;
}

DeltaList delta_list_from_json(const Json& j) {
  DeltaList out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) format_error("delta must be [alternative, index]");
    const auto alt = pair[0].get<unsigned>();
    if (alt >= kAlternatives) format_error("alternative out of range");
    out.push_back(Delta{static_cast<std::uint8_t>(alt), pair[1].get<std::uint32_t>()});
  }
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& m : p.monomials()) {
    Json mono;
    mono["scalar"] = std::string(to_string(m.scalar()));
    mono["deltas"] = delta_list_to_json(m.deltas());
    out.push_back(std::move(mono));
  }
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<Monomial> monos;
  for (const auto& mono : j) {
    auto scalar = coefficient_from_string(mono.at("scalar").get<std::string>());
    if (!scalar) format_error("unknown scalar '" + mono.at("scalar").get<std::string>() + "'");
    monos.emplace_back(*scalar, delta_list_from_json(mono.at("deltas")));
  }
  return Polynomial(std::move(monos));
}

Json relation_to_json(const Relation& r) {
  Json out;
  out["variables"] = r.variables();
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < r.size(); ++j) row.push_back(polynomial_to_json(r.matrix().at(i, j)));
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  return out;
}

Relation relation_from_json(const Json& j) {
  auto vars = j.at("variables").get<std::vector<std::string>>();
  const auto& rows = j.at("matrix");
  if (rows.size() != vars.size()) format_error("matrix rows do not match variables");
  FlowMatrix m(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (rows[i].size() != vars.size()) format_error("matrix is not square");
    for (std::size_t k = 0; k < vars.size(); ++k) m.at(i, k) = polynomial_from_json(rows[i][k]);
  }
  try {
    return Relation(std::move(vars), std::move(m));
  } catch (const InternalError& e) {
    format_error(e.what());
  }
}

Json choices_to_json(const ChoiceSet& c) {
  Json out;
  out["num_indices"] = c.num_indices();
  out["count"] = c.count();
  Json frags = Json::array();
  for (const auto& f : c.fragments()) frags.push_back(delta_list_to_json(f));
  out["fragments"] = std::move(frags);
  return out;
}

ChoiceSet choices_from_json(const Json& j) {
  std::vector<DeltaList> frags;
  for (const auto& f : j.at("fragments")) frags.push_back(delta_list_from_json(f));
  ChoiceSet out(j.at("num_indices").get<std::uint32_t>(), std::move(frags));
  if (out.count() != j.at("count").get<std::string>()) format_error("choice count mismatch");
  return out;
}

Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::Polynomial, Verdict::Infinite, Verdict::NotEvaluated}) {
    if (to_string(v) == s) return v;
  }
  format_error("unknown verdict '" + s + "'");
}

DiagnosticKind kind_from_string(const std::string& s) {
  for (auto k : {DiagnosticKind::SyntaxError, DiagnosticKind::UnsupportedConstruct,
                 DiagnosticKind::UndeclaredVariable, DiagnosticKind::DuplicateDeclaration}) {
    if (category(k) == s) return k;
  }
  format_error("unknown diagnostic category '" + s + "'");
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Polynomial: return "polynomial";
    case Verdict::Infinite: return "infinite";
    case Verdict::NotEvaluated: return "not_evaluated";
  }
  return "?";
}

Report make_report(const ProgramAnalysis& analysis, std::string file) {
  Report report;
  report.tool_version = std::string(kVersion);
  report.file = std::move(file);
  for (const auto& fn : analysis.functions) {
    FunctionReport f;
    f.name = fn.function;
    f.relation = fn.relation;
    f.num_indices = fn.num_indices;
    if (fn.evaluation) {
      f.verdict = fn.evaluation->passing.empty() ? Verdict::Infinite : Verdict::Polynomial;
      f.infinite_vars = fn.evaluation->infinite_vars;
      f.choices = fn.evaluation->passing;
    }
    report.functions.push_back(std::move(f));
  }
  report.diagnostics = analysis.diagnostics;
  return report;
}

std::string serialize_report(const Report& report) {
  Json root;
  root["schema"] = report.schema;
  root["tool_version"] = report.tool_version;
  root["file"] = report.file;
  if (report.wall_time_seconds) root["wall_time_seconds"] = *report.wall_time_seconds;
  Json fns = Json::array();
  for (const auto& f : report.functions) {
    Json fj;
    fj["name"] = f.name;
    fj["num_indices"] = f.num_indices;
    fj["verdict"] = std::string(to_string(f.verdict));
    fj["infinite_vars"] = f.infinite_vars;
    fj["choices"] = f.choices ? choices_to_json(*f.choices) : Json(nullptr);
    fj["relation"] = relation_to_json(f.relation);
    fns.push_back(std::move(fj));
  }
  root["functions"] = std::move(fns);
  Json diags = Json::array();
  for (const auto& d : report.diagnostics) {
    Json dj;
    dj["line"] = d.location.line;
    dj["column"] = d.location.column;
    dj["category"] = std::string(category(d.kind));
    dj["message"] = d.message;
    diags.push_back(std::move(dj));
  }
  root["diagnostics"] = std::move(diags);
  return root.dump(2) + "\n";
}

Report parse_report(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    format_error(e.what());
  }
  try {
    Report report;
    report.schema = root.at("schema").get<std::string>();
    if (report.schema != kReportSchema) format_error("unsupported schema '" + report.schema + "'");
    report.tool_version = root.at("tool_version").get<std::string>();
    report.file = root.at("file").get<std::string>();
    if (root.contains("wall_time_seconds")) {
      report.wall_time_seconds = root["wall_time_seconds"].get<double>();
    }
    for (const auto& fj : root.at("functions")) {
      FunctionReport f;
      f.name = fj.at("name").get<std::string>();
      f.num_indices = fj.at("num_indices").get<std::uint32_t>();
      f.verdict = verdict_from_string(fj.at("verdict").get<std::string>());
      f.infinite_vars = fj.at("infinite_vars").get<std::vector<std::string>>();
      if (!fj.at("choices").is_null()) f.choices = choices_from_json(fj["choices"]);
      f.relation = relation_from_json(fj.at("relation"));
      report.functions.push_back(std::move(f));
    }
    for (const auto& dj : root.at("diagnostics")) {
      Diagnostic d;
      d.location = {dj.at("line").get<std::uint32_t>(), dj.at("column").get<std::uint32_t>()};
      d.kind = kind_from_string(dj.at("category").get<std::string>());
      d.message = dj.at("message").get<std::string>();
      report.diagnostics.push_back(std::move(d));
    }
    return report;
  } catch (const Json::exception& e) {
    format_error(e.what());
  }
}

void save_report(const Report& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ReportError(path.string() + ": cannot open for writing: " + std::strerror(errno));
  out << serialize_report(report);
  out.flush();
  if (!out) throw ReportError(path.string() + ": write failed: " + std::strerror(errno));
}

Report load_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReportError(path.string() + ": cannot open for reading: " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_report(buf.str());
  } catch (const ReportError& e) {
    throw ReportError(path.string() + ": " + e.what());
  }
}

}  // namespace mwp
