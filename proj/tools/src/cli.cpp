#include "mwp_cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "mwp/analysis.hpp"
#include "mwp/report.hpp"
#include "mwp/version.hpp"

namespace mwp::cli {

namespace {

struct Options {
  std::string file;
  std::string out_path;
  bool no_eval = false;
  bool fin = false;
  bool print_matrix = false;
  bool time = false;
};

std::string fragment_string(const DeltaList& fragment) {
  if (fragment.empty()) return "*";
  std::string s;
  for (const auto& d : fragment) {
    if (!s.empty()) s += ".";
    s += "d(" + std::to_string(d.alternative) + "," + std::to_string(d.index) + ")";
  }
  return s;
}

std::string assignment_string(Assignment a) {
  std::string s;
  for (auto alt : a) s += static_cast<char>('0' + alt);
  return s;
}

void print_choices(std::ostream& out, const ChoiceSet& choices, bool fin) {
  if (fin && !choices.count_exceeds(kExpansionCap)) {
    out << "  assignments:\n";
    choices.for_each([&](Assignment a) { out << "    " << assignment_string(a) << "\n"; });
    return;
  }
  if (fin) out << "  passing set exceeds " << kExpansionCap << " assignments, compact form:\n";
  else out << "  fragments:\n";
  for (const auto& f : choices.fragments()) out << "    " << fragment_string(f) << "\n";
}

void print_function(std::ostream& out, const FunctionReport& f, const Options& opts) {
  out << f.name << ": " << to_string(f.verdict) << "\n";
  out << "  variables: ";
  for (std::size_t i = 0; i < f.relation.variables().size(); ++i) {
    out << (i ? ", " : "") << f.relation.variables()[i];
  }
  out << "\n  derivation points: " << f.num_indices << "\n";
  if (opts.print_matrix) {
    std::istringstream lines(to_string(f.relation));
    out << "  relation:\n";
    for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
  }
  if (!f.choices) return;
  out << "  passing assignments: " << f.choices->count() << "\n";
  if (!f.infinite_vars.empty()) {
    out << "  infinite:";
    for (const auto& v : f.infinite_vars) out << " " << v;
    out << "\n";
  }
  if (!f.choices->empty()) print_choices(out, *f.choices, opts.fin);
}

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": error: cannot read file\n";
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Polynomial growth analysis for a subset of C", "mwp-analyze"};
  app.add_option("file", opts.file, "C source file")->required();
  app.add_option("--out", opts.out_path, "Write the JSON report to this path");
  app.add_flag("--no-eval", opts.no_eval, "Compute relations only");
  app.add_flag("--fin", opts.fin, "List every passing assignment");
  app.add_flag("--print-matrix", opts.print_matrix, "Print the flow relation");
  app.add_flag("--time", opts.time, "Record analysis wall time");
  app.set_version_flag("--version", std::string(kVersion));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPolynomial;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kAllPolynomial;
  } catch (const CLI::ParseError& e) {
    err << "mwp-analyze: error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  auto source = read_file(opts.file, err);
  if (!source) return kInputError;

  const auto start = std::chrono::steady_clock::now();
  const auto analysis = analyze_source(*source, AnalysisOptions{.evaluate = !opts.no_eval});
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  auto report = make_report(analysis, opts.file);
  if (opts.time) report.wall_time_seconds = elapsed.count();

  for (const auto& d : report.diagnostics) err << format_diagnostic(d, opts.file) << "\n";
  for (const auto& f : report.functions) print_function(out, f, opts);
  if (opts.time) out << "time: " << elapsed.count() << " s\n";

  if (!opts.out_path.empty()) {
    try {
      save_report(report, opts.out_path);
    } catch (const ReportError& e) {
      err << "mwp-analyze: error: " << e.what() << "\n";
      return kInputError;
    }
  }

  if (!report.diagnostics.empty()) return kInputError;
  for (const auto& f : report.functions) {
    if (f.verdict == Verdict::Infinite) return kSomeInfinite;
  }
  return kAllPolynomial;
}

}  // namespace mwp::cli
