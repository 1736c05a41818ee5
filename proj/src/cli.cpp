#include "commint/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <ostream>
#include <thread>

#include "commint/theorems.hpp"

namespace commint::cli {

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "dot") return Format::Dot;
  throw Error(ErrorKind::ParseError, "unknown format '" + text + "'");
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ParameterOutOfRange:
    case ErrorKind::NotPrime:
    case ErrorKind::UnsupportedFamily:
    case ErrorKind::IndexOutOfRange:
      return kUsage;
    default:
      return kMismatch;
  }
}

LoadedGroup load_group(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    return {path, read_cayley_file(path), std::nullopt};
  }
  FamilySpec family = parse_family(spec);
  FiniteGroup group = build(family);
  return {family.to_string(), std::move(group), std::move(family)};
}

namespace {

void print_text(const VerificationReport& r, std::ostream& out) {
  out << "group:             " << r.group << '\n'
      << "order:             " << r.order << '\n'
      << "center size:       " << r.center_size << '\n'
      << "centralizers:      " << r.centralizer_count << '\n'
      << "G/Z(G):            " << r.quotient.to_string() << '\n'
      << "vertices:          " << r.vertices << '\n'
      << "edges:             " << r.edges << '\n'
      << "components:        ";
  for (std::size_t i = 0; i < r.component_sizes.size(); ++i) out << (i ? " " : "") << r.component_sizes[i];
  out << (r.all_cliques ? " (all cliques)" : "") << '\n'
      << "spectrum:          " << r.spectrum.to_string() << '\n'
      << "integral:          " << (r.integral ? "yes" : "no") << '\n';
  if (!r.integral) out << "remainder:         " << r.remainder.to_string() << '\n';
  for (const auto& v : r.predictions) {
    out << "prediction:        " << v.prediction.source << ' ' << v.prediction.spectrum.to_string()
        << ' ' << (v.match ? "match" : "MISMATCH") << '\n';
  }
}

void print_text(const CorollaryChecklist& list, std::ostream& out) {
  out << "max non-commuting: " << list.max_noncommuting << '\n';
  for (const auto& c : list.checks) {
    out << "corollary:         " << c.name << ": "
        << (!c.hypothesis_held ? "n/a" : c.conclusion_verified ? "verified" : "FAILED") << '\n';
  }
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
}

int analyze_impl(const std::string& spec, Format format, bool corollaries, std::ostream& out) {
  const auto loaded = load_group(spec);
  const auto report = verify_group(loaded.group, loaded.name, loaded.family);
  std::optional<CorollaryChecklist> checklist;
  if (corollaries) checklist = verify_centralizer_corollaries(loaded.group);

  switch (format) {
    case Format::Json: {
      Json json = to_json(report);
      if (checklist) json["corollaries"] = to_json(*checklist);
      out << json.dump(2) << '\n';
      break;
    }
    case Format::Dot:
      out << export_dot(CommutingGraph::build(loaded.group), loaded.name);
      break;
    case Format::Text:
      print_text(report, out);
      if (checklist) print_text(*checklist, out);
      break;
  }
  const bool ok = report.all_match() && (!checklist || checklist->all_hold());
  return ok ? kOk : kMismatch;
}

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string reason;
  std::optional<VerificationReport> report;
  std::optional<CorollaryChecklist> corollaries;
};

SuiteResult run_one(const std::string& name, const std::function<LoadedGroup()>& load, bool expect_prediction) {
  SuiteResult result{name, false, "", std::nullopt, std::nullopt};
  try {
    const auto loaded = load();
    result.report = verify_group(loaded.group, name, loaded.family);
    result.corollaries = verify_centralizer_corollaries(loaded.group);
    const auto& r = *result.report;
    if (!r.integral) {
      result.reason = "not integral";
    } else if (expect_prediction && r.predictions.empty()) {
      result.reason = "no applicable prediction";
    } else if (!r.all_match()) {
      result.reason = "prediction mismatch";
    } else if (!result.corollaries->all_hold()) {
      result.reason = "corollary conclusion failed";
    } else {
      result.pass = true;
    }
  } catch (const std::exception& e) {
    result.reason = e.what();
  }
  return result;
}

}  // namespace

int run_analyze(const std::string& spec, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return analyze_impl(spec, format, false, out); });
}

int run_verify(const std::string& spec, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return analyze_impl(spec, format, true, out); });
}

int run_suite(const SuiteOptions& options, std::ostream& out, std::ostream& err) {
  struct Job {
    std::string name;
    std::function<LoadedGroup()> load;
    bool expect_prediction;
  };
  std::vector<Job> jobs;
  for (const auto& entry : list_catalog()) {
    if (options.only && entry.grid != *options.only) continue;
    jobs.push_back({entry.name, [entry] { return LoadedGroup{entry.name, build(entry.spec), entry.spec}; }, true});
  }
  for (const auto& spec : options.extra) {
    jobs.push_back({spec, [spec] { return load_group(spec); }, false});
  }
  if (jobs.empty()) {
    err << "error: no groups selected\n";
    return kUsage;
  }

  std::vector<SuiteResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = run_one(jobs[i].name, jobs[i].load, jobs[i].expect_prediction);
    }
  };
  {
    std::vector<std::jthread> pool;
    const std::size_t threads = std::clamp<std::size_t>(options.jobs, 1, jobs.size());
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  const auto failed = static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const SuiteResult& r) { return !r.pass; }));

  if (options.format == Format::Json) {
    Json list = Json::array();
    for (const auto& r : results) {
      Json entry = {{"name", r.name}, {"pass", r.pass}};
      if (!r.pass) entry["reason"] = r.reason;
      if (r.report) entry["report"] = to_json(*r.report);
      if (r.corollaries) entry["corollaries"] = to_json(*r.corollaries);
      list.push_back(std::move(entry));
    }
    Json summary = {{"schema", 1},
                    {"passed", results.size() - failed},
                    {"failed", failed},
                    {"results", list}};
    out << summary.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (r.report) out << "  " << r.report->spectrum.to_string();
      if (!r.pass) out << "  [" << r.reason << "]";
      out << '\n';
    }
    out << results.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kOk : kMismatch;
}

int run_export_dot(const std::string& spec, const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto loaded = load_group(spec);
    const std::string dot = export_dot(CommutingGraph::build(loaded.group), loaded.name);
    if (path.empty() || path == "-") {
      out << dot;
    } else {
      std::ofstream file(path);
      if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
      file << dot;
    }
    return kOk;
  });
}

int run_catalog(Format format, std::ostream& out) {
  const auto grid = list_catalog();
  if (format == Format::Json) {
    Json list = Json::array();
    for (const auto& e : grid) list.push_back({{"name", e.name}, {"spec", e.spec.to_string()}, {"grid", e.grid}});
    out << list.dump(2) << '\n';
  } else {
    for (const auto& e : grid) out << e.name << '\t' << e.spec.to_string() << '\t' << e.grid << '\n';
  }
  return kOk;
}

}  // namespace commint::cli
