#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "commint/catalog.hpp"

namespace commint::cli {

enum class Format { Text, Json, Dot };

/// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;  // computational mismatch or domain error
inline constexpr int kUsage = 2;     // bad arguments, unparsable spec or file

Format parse_format(const std::string& text);
int exit_code_for(ErrorKind kind);

struct LoadedGroup {
  std::string name;
  FiniteGroup group;
  std::optional<FamilySpec> family;
};

/// Resolves a family spelling or `file:<path>`.
LoadedGroup load_group(const std::string& spec);

int run_analyze(const std::string& spec, Format format, std::ostream& out, std::ostream& err);
/// Like analyze, plus the centralizer-count corollary checklist.
int run_verify(const std::string& spec, Format format, std::ostream& out, std::ostream& err);

struct SuiteOptions {
  std::optional<std::string> only;  // grid selector
  std::vector<std::string> extra;   // additional group specs, e.g. file:...
  std::size_t jobs = 1;
  Format format = Format::Text;
};
int run_suite(const SuiteOptions& options, std::ostream& out, std::ostream& err);

/// Writes DOT to `path`, or to `out` when path is empty or "-".
int run_export_dot(const std::string& spec, const std::string& path, std::ostream& out, std::ostream& err);
int run_catalog(Format format, std::ostream& out);

}  // namespace commint::cli
