#include "togliatti/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "togliatti/errors.hpp"
#include "togliatti/io.hpp"
#include "togliatti/lefschetz.hpp"
#include "togliatti/smoothness.hpp"
#include "togliatti/stability.hpp"
#include "togliatti/survey.hpp"
#include "togliatti/togliatti.hpp"

namespace togliatti {

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInput = 2;
constexpr int kBudget = 3;
constexpr int kUnknownTarget = 4;
constexpr int kTargetFailed = 5;

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string version() { return std::string(kToolVersion); }

// Append-only JSON lines: {"version", "key", "value"}. Lines from other
// versions are ignored, later lines win.
class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}

  std::optional<nlohmann::json> get(const std::string& key) const {
    if (dir_.empty()) return std::nullopt;
    std::ifstream in(path());
    std::optional<nlohmann::json> hit;
    std::string line;
    while (std::getline(in, line)) {
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) continue;
      if (j.value("version", "") == version() && j.value("key", "") == key && j.contains("value")) hit = j["value"];
    }
    return hit;
  }

  void put(const std::string& key, const nlohmann::json& value) const {
    if (dir_.empty()) return;
    std::filesystem::create_directories(dir_);
    std::ofstream o(path(), std::ios::app);
    o << nlohmann::json{{"version", version()}, {"key", key}, {"value", value}}.dump() << '\n';
  }

 private:
  std::filesystem::path path() const { return std::filesystem::path(dir_) / "togliatti-cache.jsonl"; }
  std::string dir_;
};

// Everything written to stdout goes through here so --out can redirect it.
class Output {
 public:
  Output(std::ostream& out, const std::string& path) : out_(out), path_(path) {}
  std::ostream& stream() { return buffer_; }
  void flush() {
    if (path_.empty()) {
      out_ << buffer_.str();
    } else {
      std::ofstream f(path_);
      if (!f) throw InputError(InputErrorKind::invalid_argument, "cannot write " + path_);
      f << buffer_.str();
    }
  }

 private:
  std::ostream& out_;
  std::string path_;
  std::ostringstream buffer_;
};

MonomialIdeal read_ideal(const std::string& arg, std::optional<int> n) {
  std::error_code ec;
  if (arg.find(',') == std::string::npos && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream f(arg);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_ideal(ss.str(), n);
  }
  return parse_ideal(arg, n);
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void write_ideals(std::ostream& os, const std::vector<MonomialIdeal>& ideals, const std::string& format) {
  if (format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& I : ideals) arr.push_back(ideal_to_json(I));
    os << arr.dump(2) << '\n';
  } else if (format == "csv") {
    os << "index,generators,ideal\n";
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      os << i << ',' << ideals[i].num_generators() << ',' << csv_quote(ideals[i].to_string()) << '\n';
    }
  } else {
    for (const auto& I : ideals) os << I.to_string() << '\n';
  }
}

std::vector<int> parse_mu_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    auto dash = part.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        const int lo = std::stoi(part.substr(0, dash));
        const int hi = std::stoi(part.substr(dash + 1));
        for (int m = lo; m <= hi; ++m) out.push_back(m);
      }
    } catch (const std::logic_error&) {
      throw InputError(InputErrorKind::invalid_argument, "bad --mu value '" + part + "'");
    }
  }
  return out;
}

std::string bound_text(const BoundEntry& e) {
  std::string s = e.empty ? "empty" : e.value ? std::to_string(*e.value) : "unknown";
  if (e.paper_asserted) s += " asserted";
  if (e.verified) s += " verified";
  if (!e.note.empty()) s += " (" + e.note + ")";
  return s;
}

void text_report(std::ostream& os, const nlohmann::json& r) {
  os << "ideal      " << r["input"]["canonical"]["inline"].get<std::string>() << '\n';
  if (r.contains("wlp")) {
    os << "wlp        " << (r["wlp"]["has_wlp"].get<bool>() ? "yes" : "no");
    if (!r["wlp"]["failing_degrees"].empty()) os << ", fails in degrees " << r["wlp"]["failing_degrees"].dump();
    os << '\n';
  }
  if (r.contains("togliatti")) {
    const auto& t = r["togliatti"];
    os << "togliatti  " << (t["is_togliatti"].get<bool>() ? "yes" : "no") << ", kernel dimension "
       << t["kernel_dimension"].get<std::size_t>() << ", minimal " << (t["is_minimal"].get<bool>() ? "yes" : "no")
       << '\n';
    if (!t["certificate"].is_null()) os << "certificate " << t["certificate"]["polynomial"].get<std::string>() << '\n';
  }
  if (r.contains("smoothness")) {
    os << "smooth     " << (r["smoothness"]["is_smooth"].get<bool>() ? "yes" : "no");
    if (r["smoothness"].value("criterion_caveat", false)) os << " (criterion as implemented)";
    os << '\n';
  }
  if (r.contains("stability")) {
    const auto& q = r["stability"]["slope_of_E"];
    os << "stability  " << r["stability"]["verdict"].get<std::string>() << ", slope " << q["num"].dump();
    if (q["den"].dump() != "1") os << '/' << q["den"].dump();
    os << '\n';
  }
  std::string tags;
  for (auto& [k, v] : r["tags"].items()) {
    if (v.get<bool>()) tags += " " + k;
  }
  os << "tags      " << (tags.empty() ? " none" : tags) << '\n';
}

struct Common {
  std::string format;
  std::string out_path;
};

int cmd_analyze(const std::string& input, std::optional<int> n, const std::string& checks, bool timing,
                const std::string& svg, const Common& c, const Cache& cache, std::ostream& out) {
  const auto ideal = read_ideal(input, n);
  AnalyzeOptions opt;
  opt.checks = parse_checks(checks);
  opt.timing = timing;
  nlohmann::json report;
  std::string key = "analyze:" + canonical_form(ideal).to_string() + ":" + checks;
  if (auto hit = timing ? std::nullopt : cache.get(key)) {
    report = *hit;
    report["input"]["as_given"] = ideal_to_json(ideal);
  } else {
    report = analysis_report(ideal, opt);
    if (!timing) cache.put(key, report);
  }
  if (!svg.empty()) {
    if (ideal.n() != 2) throw InputError(InputErrorKind::invalid_argument, "--svg needs n = 2");
    std::ofstream f(svg);
    if (!f) throw InputError(InputErrorKind::invalid_argument, "cannot write " + svg);
    f << polygon_svg(ideal);
  }
  Output o(out, c.out_path);
  if (c.format == "text") {
    text_report(o.stream(), report);
  } else if (c.format == "json") {
    o.stream() << report.dump(2) << '\n';
  } else {
    throw InputError(InputErrorKind::invalid_argument, "analyze supports --format json or text");
  }
  o.flush();
  return kOk;
}

int cmd_enumerate(int n, int d, int mu, const std::string& filter, bool sym, std::uint64_t budget, unsigned threads,
                  const Common& c, std::ostream& out) {
  if (mu < n + 1) throw InputError(InputErrorKind::invalid_argument, "mu must be at least n+1");
  EnumerationOptions opt;
  if (!filter.empty()) opt.filters = parse_filters(filter);
  opt.up_to_symmetry = sym;
  opt.budget = budget;
  opt.threads = threads;
  const auto ideals = enumerate(n, d, mu - (n + 1), opt);
  Output o(out, c.out_path);
  write_ideals(o.stream(), ideals, c.format);
  o.flush();
  return kOk;
}

int cmd_survey(int n, int d, const std::string& mus, std::uint64_t budget, unsigned threads, const Common& c,
               std::ostream& out) {
  EnumerationOptions opt;
  opt.budget = budget;
  opt.threads = threads;
  std::vector<SurveyRow> rows;
  for (int mu : parse_mu_list(mus)) rows.push_back(survey(n, d, mu, opt));
  Output o(out, c.out_path);
  if (c.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    o.stream() << arr.dump(2) << '\n';
  } else if (c.format == "csv") {
    o.stream() << survey_csv_header() << '\n';
    for (const auto& r : rows) o.stream() << to_csv(r) << '\n';
  } else {
    for (const auto& r : rows) {
      o.stream() << "(n,d,mu)=(" << r.n << ',' << r.d << ',' << r.mu << ")  orbits " << r.total << "  togliatti "
                 << r.togliatti << "  minimal " << r.minimal << "  smooth " << r.minimal_smooth << "  trivial "
                 << r.trivial << "  type-b " << r.trivial_type_b << '\n';
      for (const auto& I : r.minimal_smooth_representatives) o.stream() << "    smooth minimal  " << I.to_string() << '\n';
    }
  }
  o.flush();
  return kOk;
}

int cmd_bounds(int n, int d, std::uint64_t budget, const Common& c, std::ostream& out) {
  const auto b = mu_bounds(n, d, budget);
  Output o(out, c.out_path);
  if (c.format == "text") {
    o.stream() << "(n,d)=(" << n << ',' << d << ")  generator bound " << b.generator_bound << '\n'
               << "mu     " << bound_text(b.mu) << '\n'
               << "mu_s   " << bound_text(b.mu_s) << '\n'
               << "rho_s  " << bound_text(b.rho_s) << '\n'
               << "rho    " << bound_text(b.rho) << '\n';
  } else {
    o.stream() << to_json(b).dump(2) << '\n';
  }
  o.flush();
  return kOk;
}

nlohmann::json result_json(const TargetResult& r) {
  return {{"name", r.name}, {"passed", r.passed}, {"lines", r.lines}};
}

int cmd_reproduce(const std::vector<std::string>& names, bool all, bool list, bool progress, unsigned threads,
                  const Common& c, const Cache& cache, std::ostream& out, std::ostream& err) {
  Output o(out, c.out_path);
  if (list) {
    for (const auto& t : list_targets()) o.stream() << std::left << std::setw(28) << t.name << t.description << '\n';
    o.flush();
    return kOk;
  }
  std::vector<std::string> run = names;
  if (all) {
    run.clear();
    for (const auto& t : list_targets()) run.push_back(t.name);
  }
  if (run.empty()) throw InputError(InputErrorKind::invalid_argument, "name a target, or pass --all or --list");
  for (const auto& name : run) {
    bool known = false;
    for (const auto& t : list_targets()) known = known || t.name == name;
    if (!known) throw UnknownTarget("unknown target '" + name + "'");
  }
  std::vector<nlohmann::json> results;
  for (const auto& name : run) {
    const std::string key = "reproduce:" + name;
    if (auto hit = cache.get(key)) {
      results.push_back(*hit);
      continue;
    }
    if (progress) err << "running " << name << '\n';
    auto j = result_json(reproduce(name, threads));
    cache.put(key, j);
    results.push_back(j);
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r["passed"].get<bool>();
  if (c.format == "json") {
    o.stream() << nlohmann::json{{"tool_version", version()}, {"targets", results}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      o.stream() << (r["passed"].get<bool>() ? "PASS  " : "FAIL  ") << r["name"].get<std::string>() << '\n';
      for (const auto& line : r["lines"]) o.stream() << "    " << line.get<std::string>() << '\n';
    }
    o.stream() << passed << '/' << results.size() << " targets passed\n";
  }
  o.flush();
  return passed == results.size() ? kOk : kTargetFailed;
}

}  // namespace

std::vector<Check> parse_checks(std::string_view text) {
  if (text == "all") return AnalyzeOptions{}.checks;
  std::vector<Check> out;
  for (const auto& name : split(text, ',')) {
    if (name == "wlp") {
      out.push_back(Check::wlp);
    } else if (name == "togliatti") {
      out.push_back(Check::togliatti);
    } else if (name == "smoothness") {
      out.push_back(Check::smoothness);
    } else if (name == "stability") {
      out.push_back(Check::stability);
    } else {
      throw InputError(InputErrorKind::invalid_argument, "unknown check '" + name + "'");
    }
  }
  return out;
}

nlohmann::json analysis_report(const MonomialIdeal& as_given, const AnalyzeOptions& options) {
  using clock = std::chrono::steady_clock;
  auto has = [&](Check c) { return std::find(options.checks.begin(), options.checks.end(), c) != options.checks.end(); };
  nlohmann::json r;
  nlohmann::json timing;
  auto timed = [&](const char* name, auto&& fn) {
    const auto t0 = clock::now();
    fn();
    timing[name] = std::chrono::duration<double>(clock::now() - t0).count();
  };
  const auto ideal = canonical_form(as_given);
  r["tool_version"] = version();
  r["input"] = {{"canonical", ideal_to_json(ideal)}, {"as_given", ideal_to_json(as_given)}};

  if (has(Check::wlp)) timed("wlp", [&] { r["wlp"] = to_json(wlp_report(ideal)); });
  // Tags need the Togliatti verdict and, for minimal systems, smoothness.
  TogliattiReport t;
  timed("togliatti", [&] {
    t = togliatti_report(ideal);
    if (has(Check::togliatti)) r["togliatti"] = to_json(t, togliatti_kernel(ideal));
  });
  std::optional<SmoothnessReport> s;
  if (has(Check::smoothness) || t.is_minimal) {
    timed("smoothness", [&] { s = is_smooth(ideal); });
    if (has(Check::smoothness)) r["smoothness"] = to_json(*s);
  }
  if (has(Check::stability)) {
    if (ideal.num_generators() < 3) throw InputError(InputErrorKind::invalid_argument, "stability needs r >= 3");
    timed("stability", [&] { r["stability"] = to_json(stability_class(ideal)); });
  }
  const bool minimal = t.is_togliatti && t.is_minimal;
  r["tags"] = {{"togliatti", t.is_togliatti},
               {"trivial", t.is_togliatti && is_trivial(ideal).has_value()},
               {"trivial_type_b", t.is_togliatti && is_trivial_type_b(ideal).has_value()},
               {"minimal", minimal},
               {"smooth_minimal", minimal && s && s->is_smooth}};
  if (options.timing) r["timing"] = timing;
  return r;
}

std::string cache_dir_from_env() {
  const char* v = std::getenv("TOGLIATTI_CACHE_DIR");
  return v ? std::string(v) : std::string();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::string& cache_dir) {
  CLI::App app{"Monomial Togliatti systems: analysis, enumeration and reproduction targets", "togliatti"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  Common common;
  int n = 0, d = 0;
  std::optional<int> n_opt;
  std::string mu_text;
  std::string filter, checks = "all", svg;
  bool timing = false, sym = true, all = false, list = false, progress = false;
  std::uint64_t budget = 10'000'000;
  unsigned threads = default_threads();
  std::string input;
  std::vector<std::string> targets;

  auto add_common = [&](CLI::App* sub, const std::string& default_format, std::vector<std::string> formats) {
    common.format = default_format;
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", common.out_path, "write output to this file");
  };

  auto* analyze = app.add_subcommand("analyze", "classify one ideal");
  analyze->add_option("ideal", input, "inline ideal, JSON text, or a file holding either")->required();
  analyze->add_option("--n", n_opt, "number of variables minus one");
  analyze->add_option("--checks", checks, "all, or a subset of wlp,togliatti,smoothness,stability");
  analyze->add_flag("--timing", timing, "include timings (makes output non-deterministic)");
  analyze->add_option("--svg", svg, "write the n=2 polygon to this SVG file");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list ideals with mu generators, one per orbit");
  auto* survey_cmd = app.add_subcommand("survey", "per-(n,d,mu) counts");
  for (auto* sub : {enumerate_cmd, survey_cmd}) {
    sub->add_option("--n", n, "number of variables minus one")->required();
    sub->add_option("--d", d, "degree")->required();
    sub->add_option("--mu", mu_text, "number of generators")->required();
    sub->add_option("--budget", budget, "largest raw subset count to attempt");
    sub->add_option("--threads", threads, "worker threads");
  }
  enumerate_cmd->add_option("--filter", filter, "comma list of togliatti,minimal,smooth,trivial,nontrivial");
  enumerate_cmd->add_option("--up-to-symmetry", sym, "one ideal per coordinate-permutation orbit (default true)");

  auto* bounds = app.add_subcommand("bounds", "mu, mu_s, rho_s, rho for (n,d)");
  std::uint64_t verify_budget = 0;
  bounds->add_option("--n", n, "number of variables minus one")->required();
  bounds->add_option("--d", d, "degree")->required();
  bounds->add_option("--budget", verify_budget, "enumeration budget for verifying the values (0: none)");

  auto* repro = app.add_subcommand("reproduce", "run reproduction targets");
  repro->add_option("target", targets, "target names");
  repro->add_flag("--all", all, "run every target");
  repro->add_flag("--list", list, "list the targets");
  repro->add_flag("--progress", progress, "report progress on stderr");
  repro->add_option("--threads", threads, "worker threads");

  add_common(analyze, "json", {"json", "text"});
  add_common(enumerate_cmd, "text", {"json", "csv", "text"});
  add_common(survey_cmd, "csv", {"json", "csv", "text"});
  add_common(bounds, "json", {"json", "text"});
  add_common(repro, "text", {"json", "text"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  // CLI11 fills the format of whichever subcommand parsed; reset the default
  // of the others.
  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--format") == 0) {
      common.format = sub == analyze || sub == bounds ? "json" : sub == survey_cmd ? "csv" : "text";
    }
  }

  const Cache cache(cache_dir);
  try {
    if (analyze->parsed()) return cmd_analyze(input, n_opt, checks, timing, svg, common, cache, out);
    if (enumerate_cmd->parsed()) {
      const auto mus = parse_mu_list(mu_text);
      if (mus.size() != 1) throw InputError(InputErrorKind::invalid_argument, "enumerate takes a single --mu");
      return cmd_enumerate(n, d, mus[0], filter, sym, budget, threads, common, out);
    }
    if (survey_cmd->parsed()) return cmd_survey(n, d, mu_text, budget, threads, common, out);
    if (bounds->parsed()) return cmd_bounds(n, d, verify_budget, common, out);
    if (repro->parsed()) return cmd_reproduce(targets, all, list, progress, threads, common, cache, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const UnknownTarget& e) {
    err << "error: " << e.what() << "\nknown targets:\n";
    for (const auto& t : list_targets()) err << "  " << t.name << '\n';
    return kUnknownTarget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

}  // namespace togliatti
