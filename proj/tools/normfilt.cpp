#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "normfilt/error.hpp"
#include "normfilt/input.hpp"
#include "normfilt/report.hpp"
#include "normfilt/statements.hpp"
#include "normfilt/theorems.hpp"

namespace {

using namespace normfilt;

struct Flags {
  std::string file;
  std::optional<std::size_t> nmax;
  std::string format = "md";
  std::string checks = "all";
};

std::vector<std::string> check_list(const std::string& s) {
  if (s == "all") return {};
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string id;
  while (std::getline(in, id, ',')) {
    if (id.empty()) continue;
    if (!is_statement_id(id)) throw CLI::ValidationError("--checks", "unknown statement id '" + id + "'");
    out.push_back(id);
  }
  return out;
}

int refuted_code(const std::vector<TheoremReport>& reports) {
  for (const auto& r : reports) {
    if (!r.error.empty()) return r.error_code;
  }
  for (const auto& r : reports) {
    if (r.refuted()) return 1;
  }
  return 0;
}

int run(const std::string& command, const Flags& flags) {
  const Format format = parse_format(flags.format);
  const std::vector<std::string> ids = check_list(flags.checks);
  AnalysisOptions options;
  options.nmax = flags.nmax;

  if (command == "corpus") {
    const auto reports = run_corpus(load_corpus(flags.file), options, ids);
    std::cout << render_verdicts(reports, format);
    return refuted_code(reports);
  }

  const InputSpec spec = read_input_file(flags.file);
  const EntryAnalysis a = analyze(spec, options);
  if (command == "table") {
    std::cout << render_table(a, format);
    return 0;
  }
  if (command == "coeffs") {
    std::cout << render_coeffs(a, format);
    return a.normal_fit.ok() && a.adic_fit.ok() ? 0 : static_cast<int>(ErrorKind::horizon);
  }
  if (command == "sally") {
    if (!a.has_reduction) {
      throw PreconditionError("no d-generated monomial minimal reduction; supply one with 'reduction'");
    }
    std::cout << render_sally(a, format);
    return a.sally_fit.ok() ? 0 : static_cast<int>(ErrorKind::horizon);
  }
  TheoremReport report;
  report.source = flags.file;
  report.name = spec.name.empty() ? flags.file : spec.name;
  report.verdicts = run_checks(a, ids.empty() ? spec.checks : ids);
  report.type = ring_type_report(a);
  report.analysis = a;
  std::cout << render_verdicts({report}, format);
  return report.refuted() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal Hilbert coefficients, Sally modules and statement checks for monomial and semigroup rings"};
  app.require_subcommand(1);
  Flags flags;
  std::string command;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"table", "length tables of the normal, adic and E filtrations"},
      {"coeffs", "normal and adic Hilbert coefficients and the sectional genus"},
      {"sally", "normal Sally module lengths, coefficients, reduction number, CM status"},
      {"check", "run statement checks on one input file"},
      {"corpus", "run statement checks on every *.nf file of a directory"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", flags.file, name == "corpus" ? "directory or input file" : "input file")->required();
    sub->add_option("--nmax", flags.nmax, "horizon: degrees 0..nmax (default d + 5, at least d + 3)");
    sub->add_option("--format", flags.format, "output format")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--checks", flags.checks, "comma-separated statement ids, or all");
    sub->callback([&command, name = name] { command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorKind::parse);
  }

  try {
    return run(command, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::parse);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::parse);
  }
}
