#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commint/cli.hpp"

namespace {

// Runs `body` against the -o file when one was given, else stdout.
template <typename Body>
int with_output(const std::string& path, Body&& body) {
  if (path.empty() || path == "-") return body(std::cout);
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return commint::cli::kUsage;
  }
  return body(file);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = commint::cli;

  CLI::App app{"Commuting graphs of finite groups: exact spectra and integrality checks"};
  app.require_subcommand(1);

  std::string spec;
  std::string format = "text";
  std::string output;
  const auto format_check = CLI::IsMember({"text", "json", "dot"});

  auto* analyze = app.add_subcommand("analyze", "Report centre, centralizers, commuting graph and spectrum");
  analyze->add_option("group", spec, "Group spec, e.g. dicyclic:3 or file:s3.cayley")->required();
  analyze->add_option("--format", format, "text, json or dot")->check(format_check);
  analyze->add_option("-o,--output", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "analyze plus the centralizer-count corollary checks");
  verify->add_option("group", spec, "Group spec")->required();
  verify->add_option("--format", format, "text or json")->check(format_check);
  verify->add_option("-o,--output", output, "Output file (default stdout)");

  cli::SuiteOptions suite_options;
  std::string only;
  auto* suite = app.add_subcommand("suite", "Verify every group of the catalog grid");
  suite->add_option("--only", only, "Grid selector: extraspecial, products, dicyclic, u6n, metacyclic, dihedral");
  suite->add_option("--extra", suite_options.extra, "Additional group specs to verify (repeatable)");
  suite->add_option("-j,--jobs", suite_options.jobs, "Worker threads")->check(CLI::Range(1, 256));
  suite->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  suite->add_option("-o,--output", output, "Output file (default stdout)");

  std::string dot_path;
  auto* dot = app.add_subcommand("export-dot", "Write the commuting graph in Graphviz format");
  dot->add_option("group", spec, "Group spec")->required();
  dot->add_option("path", dot_path, "Output file (default stdout)");

  auto* catalog = app.add_subcommand("catalog", "List the verification grid");
  catalog->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  catalog->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  const auto fmt = cli::parse_format(format);
  if (*analyze) return with_output(output, [&](std::ostream& out) { return cli::run_analyze(spec, fmt, out, std::cerr); });
  if (*verify) return with_output(output, [&](std::ostream& out) { return cli::run_verify(spec, fmt, out, std::cerr); });
  if (*suite) {
    if (!only.empty()) suite_options.only = only;
    suite_options.format = fmt;
    return with_output(output, [&](std::ostream& out) { return cli::run_suite(suite_options, out, std::cerr); });
  }
  if (*dot) return cli::run_export_dot(spec, dot_path, std::cout, std::cerr);
  return with_output(output, [&](std::ostream& out) { return cli::run_catalog(fmt, out); });
}
