// Copyright 2026 The zfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "zfo/axioms.hpp"
#include "zfo/extension.hpp"
#include "zfo/matrix_io.hpp"
#include "zfo/oracle.hpp"
#include "zfo/simd/kernels.hpp"
#include "zfo/value_preserving.hpp"

namespace zfo::cli {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::size_t kMaxWitnessLines = 20;
constexpr const char* kManifest = "manifest.json";

// Input or usage problem detected after argument parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool json_report = false;
  std::string format;
  std::string backend;
  std::string file;
  std::string out;
  std::string a;
  std::string b;
  std::string family_dir;
  std::string policy = "low";
  bool trace = false;
  std::size_t n = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
};

const char* yes_no(bool v) { return v ? "yes" : "no"; }

std::string pair_text(const FuzzyRelation& r, std::size_t x, std::size_t y) {
  return "(" + r.label(x) + "," + r.label(y) + ")";
}

json pair_json(const FuzzyRelation& r, Pair p) { return json::array({r.label(p.first), r.label(p.second)}); }

json matrix_json(const FuzzyRelation& r) {
  return json::parse(io::emit_json(r));
}

std::optional<io::Format> explicit_format(const Options& o) {
  if (o.format.empty()) return std::nullopt;
  auto f = io::parse_format(o.format);
  if (!f) throw UsageError("unknown format '" + o.format + "' (expected csv or json)");
  return f;
}

FuzzyRelation load(const Options& o) {
  if (!fs::exists(o.file)) throw UsageError("input file '" + o.file + "' does not exist");
  return io::read_matrix_file(o.file);
}

std::size_t resolve(const FuzzyRelation& r, const std::string& label, const char* flag) {
  const auto idx = r.index_of(label);
  if (!idx) throw UsageError(std::string("--") + flag + ": no element labeled '" + label + "'");
  return *idx;
}

// Writes to -o when given, otherwise embeds the matrix in the report.
void deliver(const FuzzyRelation& r, const Options& o, io::Format fallback, RunReport& report) {
  const io::Format format = explicit_format(o).value_or(fallback);
  if (o.out.empty()) {
    report.output = {{"matrix", matrix_json(r)}};
    std::istringstream lines(io::emit_matrix(r, format));
    for (std::string line; std::getline(lines, line);) report.summary.push_back(line);
  } else {
    io::write_matrix_file(o.out, r, format);
    report.output = {{"path", o.out}, {"format", io::to_string(format)}};
    report.summary.push_back("wrote " + o.out);
  }
}

json raised_json(const FuzzyRelation& r, const std::vector<RaisedEntry>& raised) {
  json out = json::array();
  for (const auto& e : raised) {
    out.push_back({{"x", r.label(e.at.first)}, {"y", r.label(e.at.second)}, {"old", e.old_value},
                   {"new", e.new_value}});
  }
  return out;
}

json certificate_json(const FuzzyRelation& r, const Certificate& c) {
  return {{"kind", c.kind == CertificateKind::kOrients ? "orients" : "preserves"},
          {"a", r.label(c.pair.first)},
          {"b", r.label(c.pair.second)}};
}

template <class Container>
void add_witness_lines(RunReport& report, const Container& items, const std::string& heading,
                       auto&& describe) {
  if (items.empty()) return;
  report.summary.push_back(heading + " (" + std::to_string(items.size()) + "):");
  for (std::size_t i = 0; i < items.size() && i < kMaxWitnessLines; ++i) {
    report.summary.push_back("  " + describe(items[i]));
  }
  if (items.size() > kMaxWitnessLines) {
    report.summary.push_back("  ... " + std::to_string(items.size() - kMaxWitnessLines) + " more");
  }
}

int cmd_check(const Options& o, RunReport& report) {
  const auto r = load(o);
  const AxiomReport axioms = check_order(r);
  const auto incomparable = incomparable_pairs(r);
  const bool order = axioms.is_order();
  const bool linear = order && incomparable.empty();

  report.verdicts = {{"reflexive", axioms.reflexive.passed()},
                     {"antisymmetric", axioms.antisymmetric.passed()},
                     {"transitive", axioms.transitive.passed()},
                     {"zadeh_order", order},
                     {"linear", linear}};
  json refl = json::array(), anti = json::array(), trans = json::array(), inc = json::array();
  for (const auto& w : axioms.reflexive.witnesses) refl.push_back({{"element", r.label(w.element)}, {"value", w.value}});
  for (const auto& w : axioms.antisymmetric.witnesses) {
    anti.push_back({{"pair", pair_json(r, w.pair)}, {"forward", w.forward}, {"backward", w.backward}});
  }
  for (const auto& w : axioms.transitive.witnesses) {
    trans.push_back({{"triple", {r.label(w.x), r.label(w.y), r.label(w.z)}},
                     {"direct", w.direct},
                     {"through", w.through}});
  }
  for (const auto& p : incomparable) inc.push_back(pair_json(r, p));
  report.witnesses = {{"reflexivity", refl}, {"antisymmetry", anti}, {"transitivity", trans}, {"incomparable", inc}};

  report.summary.push_back(std::string("Zadeh fuzzy order: ") + yes_no(order) + "; linear: " + yes_no(linear) +
                           "; incomparable pairs: " + std::to_string(incomparable.size()));
  add_witness_lines(report, axioms.reflexive.witnesses, "reflexivity violations", [&](const auto& w) {
    return "r" + pair_text(r, w.element, w.element) + " = " + io::format_value(w.value);
  });
  add_witness_lines(report, axioms.antisymmetric.witnesses, "antisymmetry violations", [&](const auto& w) {
    return "r" + pair_text(r, w.pair.first, w.pair.second) + " = " + io::format_value(w.forward) + ", r" +
           pair_text(r, w.pair.second, w.pair.first) + " = " + io::format_value(w.backward);
  });
  add_witness_lines(report, axioms.transitive.witnesses, "transitivity violations", [&](const auto& w) {
    return "r" + pair_text(r, w.x, w.z) + " = " + io::format_value(w.direct) + " < min(r" +
           pair_text(r, w.x, w.y) + ", r" + pair_text(r, w.y, w.z) + ") = " + io::format_value(w.through);
  });
  return order ? kSuccess : kPropertyFails;
}

int cmd_linearize(const Options& o, RunReport& report) {
  const auto r = load(o);
  PivotPolicy policy;
  if (o.policy == "high") {
    policy.orientation = PivotOrientation::kHighFirst;
  } else if (o.policy != "low") {
    throw UsageError("--policy must be low or high");
  }
  const auto result = linearize(r, policy);
  const bool linear = is_linear(result.relation).passed();
  const bool ext = extends(r, result.relation);
  report.verdicts = {{"zadeh_order", is_zadeh_order(result.relation)}, {"linear", linear}, {"extends_input", ext}};

  json pivots = json::array();
  for (const auto& step : result.trace) pivots.push_back({r.label(step.a), r.label(step.b)});
  report.trace = {{"k", result.k}, {"m", result.m}, {"pivots", pivots}};
  if (o.trace) {
    json steps = json::array();
    for (const auto& step : result.trace) {
      steps.push_back({{"step", step.step_index},
                       {"a", r.label(step.a)},
                       {"b", r.label(step.b)},
                       {"raised", raised_json(r, step.entries_raised)}});
    }
    report.trace["steps"] = steps;
  }

  std::string pivots_text;
  for (const auto& step : result.trace) pivots_text += (pivots_text.empty() ? "" : " ") + pair_text(r, step.a, step.b);
  report.summary.push_back("pivots k=" + std::to_string(result.k) + " (m=" + std::to_string(result.m) +
                           ", bound k <= m/2 = " + std::to_string(result.m / 2) + ")" +
                           (pivots_text.empty() ? "" : ": " + pivots_text));
  if (o.trace) {
    for (const auto& step : result.trace) {
      std::string line = "  step " + std::to_string(step.step_index) + " " + pair_text(r, step.a, step.b) + ":";
      for (const auto& e : step.entries_raised) {
        line += " " + pair_text(r, e.at.first, e.at.second) + " " + io::format_value(e.old_value) + "->" +
                io::format_value(e.new_value);
      }
      report.summary.push_back(line);
    }
  }
  deliver(result.relation, o, io::format_for_path(o.file), report);
  return linear && ext ? kSuccess : kPropertyFails;
}

int cmd_pivot(const Options& o, RunReport& report) {
  const auto r = load(o);
  const std::size_t a = resolve(r, o.a, "a");
  const std::size_t b = resolve(r, o.b, "b");
  auto [out, step] = pivot_extend_traced(r, a, b);
  report.verdicts = {{"zadeh_order", is_zadeh_order(out)},
                     {"extends_input", extends(r, out)},
                     {"linear", is_linear(out).passed()}};
  report.trace = {{"k", 1}, {"pivots", json::array({json::array({o.a, o.b})})},
                  {"raised", raised_json(r, step.entries_raised)}};
  report.summary.push_back("pivot " + pair_text(r, a, b) + " raised " + std::to_string(step.entries_raised.size()) +
                           " entries");
  deliver(out, o, io::format_for_path(o.file), report);
  return kSuccess;
}

int cmd_clamp(const Options& o, RunReport& report) {
  const auto r = load(o);
  const std::size_t a = resolve(r, o.a, "a");
  const std::size_t b = resolve(r, o.b, "b");
  const auto result = clamp_extend(r, a, b);
  const bool preserved = result.relation(a, b) == r(a, b);
  report.verdicts = {{"zadeh_order", is_zadeh_order(result.relation)},
                     {"linear", is_linear(result.relation).passed()},
                     {"extends_input", extends(r, result.relation)},
                     {"preserves_value", preserved}};
  report.trace = {{"beta", result.beta.value()}, {"base", matrix_json(result.base)}};
  report.summary.push_back("clamp " + pair_text(r, a, b) + " beta=" + io::format_value(result.beta.value()) +
                           "; base value there " + io::format_value(result.base(a, b)));
  deliver(result.relation, o, io::format_for_path(o.file), report);
  return preserved ? kSuccess : kPropertyFails;
}

std::string member_file_name(std::size_t i, io::Format format) {
  std::ostringstream name;
  name << "member_" << std::setw(3) << std::setfill('0') << i << "." << io::to_string(format);
  return name.str();
}

int cmd_family(const Options& o, RunReport& report) {
  const auto r = load(o);
  const auto family = certifying_family(r);
  const io::Format format = explicit_format(o).value_or(io::format_for_path(o.file));

  json members = json::array();
  if (!o.out.empty()) fs::create_directories(o.out);
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& m = family.members[i];
    json entry = {{"certifies", json::array()}};
    for (const auto& c : m.certifies) entry["certifies"].push_back(certificate_json(r, c));
    if (!o.out.empty()) {
      const auto name = member_file_name(i, format);
      io::write_matrix_file(fs::path(o.out) / name, m.relation, format);
      entry["file"] = name;
    }
    members.push_back(entry);
  }
  if (!o.out.empty()) {
    std::ofstream manifest(fs::path(o.out) / kManifest);
    manifest << json{{"elements", r.labels()}, {"members", members}}.dump(2) << '\n';
    if (!manifest) throw Error("failed writing manifest in '" + o.out + "'");
    report.output = {{"path", o.out}, {"format", io::to_string(format)}};
  }
  report.family = {{"size", family.size()}, {"certificates", family.certificate_count()}, {"members", members}};
  report.summary.push_back("certifying family: " + std::to_string(family.size()) + " distinct linear extensions (" +
                           std::to_string(family.certificate_count()) + " certificates)");
  if (!o.out.empty()) report.summary.push_back("wrote " + o.out);
  return kSuccess;
}

std::vector<fs::path> family_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw UsageError("family directory '" + dir.string() + "' does not exist");
  std::vector<fs::path> files;
  const auto manifest = dir / kManifest;
  if (fs::exists(manifest)) {
    std::ifstream in(manifest);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError("invalid manifest: " + std::string(e.what()));
    }
    for (const auto& m : doc.value("members", json::array())) {
      if (!m.contains("file") || !m["file"].is_string()) throw UsageError("manifest member without a file name");
      files.push_back(dir / m["file"].get<std::string>());
    }
  } else {
    for (const auto& entry : fs::directory_iterator(dir)) {
      const auto ext = entry.path().extension();
      if (entry.is_regular_file() && (ext == ".csv" || ext == ".json")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  }
  return files;
}

int cmd_verify(const Options& o, RunReport& report) {
  const auto r = load(o);
  std::vector<FuzzyRelation> members;
  for (const auto& path : family_files(o.family_dir)) members.push_back(io::read_matrix_file(path));
  if (members.empty()) throw UsageError("family directory '" + o.family_dir + "' holds no members");

  const auto check = verify_intersection(r, std::span<const FuzzyRelation>(members));
  std::size_t not_extending = 0;
  for (const auto& m : members) not_extending += (is_zadeh_order(m) && is_linear(m).passed() && extends(r, m)) ? 0 : 1;

  report.verdicts = {{"intersection_equals_input", check.passed()},
                     {"members_are_linear_extensions", not_extending == 0}};
  json mismatches = json::array();
  for (const auto& w : check.mismatches) {
    mismatches.push_back({{"pair", pair_json(r, w.at)}, {"infimum", w.infimum}, {"expected", w.expected}});
  }
  report.witnesses = {{"mismatches", mismatches}};
  report.family = {{"size", members.size()}};
  report.summary.push_back(std::string("infimum of ") + std::to_string(members.size()) + " members equals input: " +
                           yes_no(check.passed()));
  if (not_extending) {
    report.summary.push_back(std::to_string(not_extending) + " member(s) are not linear extensions of the input");
  }
  add_witness_lines(report, check.mismatches, "mismatches", [&](const EntryMismatch& w) {
    return pair_text(r, w.at.first, w.at.second) + ": infimum " + io::format_value(w.infimum) + " != " +
           io::format_value(w.expected);
  });
  return check.passed() ? kSuccess : kPropertyFails;
}

int cmd_gen(const Options& o, RunReport& report) {
  oracle::GeneratorSpec spec;
  spec.n = o.n;
  spec.density = o.density;
  spec.seed = o.seed;
  FuzzyRelation r = [&] {
    try {
      return oracle::random_zadeh_order(spec);
    } catch (const InvalidSpec& e) {
      throw UsageError(e.what());
    }
  }();
  report.verdicts = {{"zadeh_order", oracle::brute_check_order(r)}, {"linear", is_linear(r).passed()}};
  report.summary.push_back("generated n=" + std::to_string(o.n) + " density=" + io::format_value(o.density) +
                           " seed=" + std::to_string(o.seed));
  deliver(r, o, o.out.empty() ? io::Format::kCsv : io::format_for_path(o.out), report);
  return kSuccess;
}

}  // namespace

json RunReport::to_json() const {
  json out = {{"command", command},   {"verdicts", verdicts}, {"witnesses", witnesses},
              {"trace", trace},       {"family", family},     {"timing", {{"elapsed_ms", elapsed_ms}}}};
  if (!output.is_null()) out["output"] = output;
  return out;
}

std::string RunReport::to_text() const {
  std::string out;
  for (const auto& line : summary) out += line + '\n';
  return out;
}

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  Options o;

  CLI::App app{"Linear extensions of Zadeh fuzzy orders on finite sets", "zfo"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for all subcommands");
  app.add_flag("--json", o.json_report, "Print the run report as JSON");
  app.add_option("--backend", o.backend, "Kernel backend (scalar, avx2, neon)");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format (csv or json); defaults to the input format");
  };

  auto* check = app.add_subcommand("check", "Validate the order axioms and report linearity");
  check->add_option("file", o.file, "Matrix file (.csv or .json)")->required();

  auto* lin = app.add_subcommand("linearize", "Extend an order to a linear order");
  lin->add_option("file", o.file, "Matrix file")->required();
  lin->add_option("-o,--output", o.out, "Output matrix file");
  lin->add_flag("--trace", o.trace, "Report the entries raised by every pivot");
  lin->add_option("--policy", o.policy, "Orientation for incomparable pairs: low or high")
      ->check(CLI::IsMember({"low", "high"}));
  add_format(lin);

  auto* piv = app.add_subcommand("pivot", "Apply one pivot extension placing --a below --b");
  piv->add_option("file", o.file, "Matrix file")->required();
  piv->add_option("--a", o.a, "Label of a")->required();
  piv->add_option("--b", o.b, "Label of b")->required();
  piv->add_option("-o,--output", o.out, "Output matrix file");
  add_format(piv);

  auto* clamp = app.add_subcommand("clamp", "Linear extension preserving r(a,b)");
  clamp->add_option("file", o.file, "Matrix file")->required();
  clamp->add_option("--a", o.a, "Label of a")->required();
  clamp->add_option("--b", o.b, "Label of b")->required();
  clamp->add_option("-o,--output", o.out, "Output matrix file");
  add_format(clamp);

  auto* fam = app.add_subcommand("family", "Build the certifying family of linear extensions");
  fam->add_option("file", o.file, "Matrix file")->required();
  fam->add_option("-o,--output", o.out, "Directory for member files and manifest.json");
  add_format(fam);

  auto* ver = app.add_subcommand("verify", "Check that a family's infimum equals the relation");
  ver->add_option("file", o.file, "Matrix file")->required();
  ver->add_option("--family", o.family_dir, "Directory written by 'family'")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random Zadeh fuzzy order");
  gen->add_option("--n", o.n, "Carrier size (1..12)")->required();
  gen->add_option("--density", o.density, "Forward edge probability in [0,1]")->required();
  gen->add_option("--seed", o.seed, "64-bit seed")->required();
  gen->add_option("-o,--output", o.out, "Output matrix file");
  add_format(gen);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("zfo");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kUsageOrInput;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  auto* sub = app.get_subcommands().front();
  RunReport& report = result.report;
  for (const auto& arg : args) report.command += (report.command.empty() ? "" : " ") + arg;

  const auto start = std::chrono::steady_clock::now();
  try {
    if (!o.backend.empty()) {
      if (o.backend == "scalar") {
        simd::force_backend(simd::Backend::kScalar);
      } else if (o.backend == "avx2") {
        simd::force_backend(simd::Backend::kAvx2);
      } else if (o.backend == "neon") {
        simd::force_backend(simd::Backend::kNeon);
      } else {
        throw UsageError("unknown backend '" + o.backend + "'");
      }
    }
    const std::string name = sub->get_name();
    if (name == "check") result.exit_code = cmd_check(o, report);
    else if (name == "linearize") result.exit_code = cmd_linearize(o, report);
    else if (name == "pivot") result.exit_code = cmd_pivot(o, report);
    else if (name == "clamp") result.exit_code = cmd_clamp(o, report);
    else if (name == "family") result.exit_code = cmd_family(o, report);
    else if (name == "verify") result.exit_code = cmd_verify(o, report);
    else if (name == "gen") result.exit_code = cmd_gen(o, report);
  } catch (const std::invalid_argument& e) {
    result.exit_code = kUsageOrInput;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const Error& e) {
    result.exit_code = kUsageOrInput;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const fs::filesystem_error& e) {
    result.exit_code = kUsageOrInput;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  if (!o.backend.empty()) simd::reset_backend();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  result.out = o.json_report ? report.to_json().dump(2) + "\n" : report.to_text();
  return result;
}

}  // namespace zfo::cli
