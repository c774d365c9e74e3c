#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cohera/errors.hpp"
#include "cohera/groebner.hpp"
#include "scenario.hpp"

namespace cohera::runner {

namespace {

using Clock = std::chrono::steady_clock;

/// A grid point failed; the task reports it as a computation error.
struct PointFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json point_json(const Point& n) { return json(n); }

json rational_map(const FittedPolynomial& p) {
  json out = json::array();
  for (const auto& [exp, c] : p.coefficients) out.push_back({{"exponent", exp}, {"coefficient", c.str()}});
  return out;
}

json fit_json(const FitResult& f) {
  json out{{"ok", f.ok}};
  if (!f.ok) {
    out["reason"] = f.reason;
    return out;
  }
  const FittedPolynomial& p = f.polynomial;
  out["polynomial"] = p.to_string();
  out["coefficients"] = rational_map(p);
  out["degree"] = p.total_degree() ? json(*p.total_degree()) : json("-inf");
  out["onset"] = point_json(p.onset);
  out["fit_region"] = {{"lo", p.fit_lo}, {"hi", p.fit_hi}};
  out["validated_points"] = p.residuals.size();
  out["evidence"] = "exact interpolation, validated on every box point >= onset";
  return out;
}

json verdict_json(const StabilizationVerdict& v) {
  return {{"observable", v.observable}, {"stable", v.stable},          {"value", v.value},
          {"witness_lo", v.witness_lo}, {"witness_hi", v.witness_hi}, {"evidence", v.evidence}};
}

std::string dim_string(const KrullDim& d) { return dim_to_string(d); }

class TaskRunner {
 public:
  TaskRunner(const Scenario& s, const RunOptions& o) : s_(s), o_(o) {}

  json run(const TaskSpec& t) {
    if (t.kind == "fit") return fit_task(t);
    if (t.kind == "degree_bound") return degree_bound_task(t);
    if (t.kind == "normal_form") return normal_form_task();
    if (t.kind == "stabilization") return stabilization_task(t);
    if (t.kind == "grade") return grade_task(t);
    if (t.kind == "betti_bass") return betti_bass_task(t);
    if (t.kind == "component_track") return component_track_task(t);
    return artin_rees_task(t);
  }

  const std::optional<GridTable>& lambda_grid() const { return lambda_; }

 private:
  ObservableRequest request(const json& args) const {
    ObservableRequest obs;
    if (!args.contains("observables")) {
      obs.ass = true;
      return obs;
    }
    for (const auto& o : args.at("observables")) {
      std::string name = o.get<std::string>();
      if (name == "ass") obs.ass = true;
      if (name == "pd") obs.pd = true;
      if (name == "id") obs.id = true;
      if (name == "betti") obs.betti_max = args.value("i_max", 2);
      if (name == "bass") obs.bass_max = args.value("i_max", 2);
      if (name == "grade") obs.grade_ideal = s_.ideals.at(args.at("ideal").get<std::string>());
    }
    return obs;
  }

  static void check_points(const GridTable& table, const std::string& operation) {
    for (const auto& p : table.points)
      if (!p.error.empty())
        throw PointFailure(operation + " at n=" + point_to_string(p.n) + ": " + p.error);
  }

  const GridTable& lengths() {
    if (!lambda_) {
      lambda_ = grid_evaluate(s_.functor, s_.family, s_.box, ObservableRequest{}, o_.jobs);
      check_points(*lambda_, "evaluate");
    }
    return *lambda_;
  }

  const FitResult& fit(const json& args) {
    if (!fit_) {
      int cap = args.contains("degree_cap") ? args.at("degree_cap").get<int>()
                                            : default_degree_cap(s_.functor, s_.family, s_.box);
      try {
        fit_ = fit_polynomial(lengths().lengths(), s_.box, cap);
      } catch (const ContractViolation& e) {
        fit_ = FitResult{false, {}, e.what()};
      }
    }
    return *fit_;
  }

  static std::vector<std::string> expectations(const json& args, const std::vector<StabilizationVerdict>& vs) {
    std::vector<std::string> failed;
    if (!args.contains("expect")) return failed;
    for (const auto& [obs, want] : args.at("expect").items()) {
      auto it = std::find_if(vs.begin(), vs.end(), [&](const auto& v) { return v.observable == obs; });
      if (it == vs.end()) {
        failed.push_back(obs + ": not observed");
      } else if (!it->stable || it->value != want.get<std::string>()) {
        failed.push_back(obs + ": expected " + want.get<std::string>() + ", got " +
                         (it->stable ? it->value : std::string("unstable")));
      }
    }
    return failed;
  }

  static json finish(json out, const std::vector<std::string>& failed) {
    out["status"] = failed.empty() ? "pass" : "fail";
    if (!failed.empty()) out["failures"] = failed;
    return out;
  }

  json fit_task(const TaskSpec& t) {
    const FitResult& f = fit(t.args);
    json out = fit_json(f);
    std::vector<std::string> failed;
    if (!f.ok) failed.push_back("no polynomial fit on box: " + f.reason);
    if (f.ok && t.args.contains("expect") && f.polynomial.to_string() != t.args.at("expect").get<std::string>())
      failed.push_back("expected P = " + t.args.at("expect").get<std::string>() + ", got " + f.polynomial.to_string());
    if (f.ok && t.args.contains("expect_onset") && f.polynomial.onset != t.args.at("expect_onset").get<Point>())
      failed.push_back("expected onset " + point_to_string(t.args.at("expect_onset").get<Point>()) + ", got " +
                       point_to_string(f.polynomial.onset));
    return finish(out, failed);
  }

  json degree_bound_task(const TaskSpec& t) {
    const FitResult& f = fit(t.args);
    if (!f.ok) return finish({{"fit", fit_json(f)}}, {"no polynomial fit on box: " + f.reason});
    DegreeBoundVerdict v = degree_bound_check(s_.functor, s_.family.m(), s_.family.family(), f.polynomial);
    json out{{"dim_f", dim_string(v.dim_f)},
             {"analytic_spread", dim_string(v.spread)},
             {"r", v.r},
             {"degree", v.degree ? json(*v.degree) : json("-inf")},
             {"bound", dim_string(v.bound)},
             {"equality_required", v.equality_required},
             {"law_holds", v.holds},
             {"verdict", v.to_string()}};
    std::vector<std::string> failed;
    if (!v.holds) failed.push_back("degree-bound law violated: " + v.to_string());
    if (t.args.contains("assert_max_degree")) {
      int k = t.args.at("assert_max_degree").get<int>();
      out["asserted_max_degree"] = k;
      if (v.degree && *v.degree > k)
        failed.push_back("asserted deg P <= " + std::to_string(k) + ", fitted degree " + std::to_string(*v.degree));
    }
    return finish(out, failed);
  }

  json normal_form_task() {
    try {
      NormalForm nf = normal_form(s_.functor.functor(), s_.family, s_.box);
      json out{{"c", nf.c},
               {"d", nf.d},
               {"c_mode", nf.c_mode},
               {"d_mode", nf.d_mode},
               {"generators", {{"u", nf.u.gens().size()}, {"v", nf.v.gens().size()}, {"w", nf.w.gens().size()}}},
               {"hilbert_u", nf.u_module().hilbert_series().to_string()},
               {"validated_points", nf.validated.size()},
               {"evidence", "Hilbert series of both sides equal at every box point >= d"}};
      return finish(out, {});
    } catch (const ValidationFailure& e) {
      return finish(json::object(), {std::string("normal-form validation: ") + e.what()});
    }
  }

  json stabilization_task(const TaskSpec& t) {
    GridTable table = grid_evaluate(s_.functor, s_.family, s_.box, request(t.args), o_.jobs);
    check_points(table, "stabilization");
    std::vector<StabilizationVerdict> vs = detect_stabilization(table);
    json out{{"verdicts", json::array()}};
    for (const auto& v : vs) out["verdicts"].push_back(verdict_json(v));
    return finish(out, expectations(t.args, vs));
  }

  json grade_task(const TaskSpec& t) {
    const SubmoduleBasis& j = s_.ideals.at(t.args.at("ideal").get<std::string>());
    GradeAsymptotics g = grade_asymptotics(j, s_.functor, s_.family, s_.box, o_.jobs);
    check_points(g.table, "grade");
    json out{{"verdict", verdict_json(g.verdict)}, {"values", json::array()}};
    std::vector<std::string> failed;
    bool oracle = t.args.value("oracle", true);
    for (const auto& p : g.table.points) {
      json row{{"n", p.n}, {"grade", p.grade ? p.grade->to_string() : "?"}};
      if (oracle && p.grade) {
        FPModule x = s_.family.kind() == FamilySpec::Kind::Quotient ? quotient_member(s_.family, p.n)
                                                                     : graded_component(s_.family.graded(), p.n);
        ExtNat seq = regular_sequence_grade(j, evaluate_expression(s_.functor, x));
        row["regular_sequence"] = seq.to_string();
        if (!(seq == *p.grade))
          failed.push_back("grade routes disagree at n=" + point_to_string(p.n) + ": ext " + p.grade->to_string() +
                           ", regular sequence " + seq.to_string());
      }
      out["values"].push_back(row);
    }
    auto more = expectations(t.args, {g.verdict});
    failed.insert(failed.end(), more.begin(), more.end());
    return finish(out, failed);
  }

  json betti_bass_task(const TaskSpec& t) {
    int i_max = t.args.value("i_max", static_cast<int>(s_.ring->nvars()) + 1);
    BettiBassAsymptotics b = betti_bass_asymptotics(s_.functor, s_.family, s_.box, i_max, o_.jobs);
    check_points(b.table, "betti_bass");
    json out{{"depth_R", b.depth_r}, {"betti", json::array()}, {"bass", json::array()}, {"verdicts", json::array()}};
    for (const auto& f : b.betti_fits) out["betti"].push_back(fit_json(f));
    for (const auto& f : b.bass_fits) out["bass"].push_back(fit_json(f));
    for (const auto& v : b.verdicts) out["verdicts"].push_back(verdict_json(v));
    out["degree_bound"] = b.degree_bound ? json(*b.degree_bound) : json(nullptr);
    out["bound_respected"] = b.bound_respected;
    std::vector<std::string> failed;
    if (!b.bound_respected) failed.push_back("Betti/Bass degree bound violated");
    auto more = expectations(t.args, b.verdicts);
    failed.insert(failed.end(), more.begin(), more.end());
    return finish(out, failed);
  }

  json component_track_task(const TaskSpec& t) {
    ComponentTrack c = component_track(s_.family.graded(), s_.functor, s_.box, request(t.args), o_.jobs);
    check_points(c.table, "component_track");
    json out{{"fit", fit_json(c.fit)}, {"verdicts", json::array()}};
    for (const auto& v : c.verdicts) out["verdicts"].push_back(verdict_json(v));
    std::vector<std::string> failed;
    if (!c.fit.ok) failed.push_back("no polynomial fit on box: " + c.fit.reason);
    auto more = expectations(t.args, c.verdicts);
    failed.insert(failed.end(), more.begin(), more.end());
    return finish(out, failed);
  }

  json artin_rees_task(const TaskSpec& t) {
    try {
      ArtinReesResult a = artin_rees_exponent(s_.family.m(), s_.family.n(), s_.family.family(), s_.box);
      json out{{"d", a.d},
               {"certified", a.certified},
               {"mode", a.mode},
               {"generator_degrees", a.generator_degrees},
               {"checked_points", a.checked.size()},
               {"evidence", "I^n M ∩ N = I^(n-d)(I^d M ∩ N) compared exactly on the box"}};
      std::vector<std::string> failed;
      if (t.args.contains("expect_d") && a.d != t.args.at("expect_d").get<Point>())
        failed.push_back("expected d = " + point_to_string(t.args.at("expect_d").get<Point>()) + ", got " +
                         point_to_string(a.d));
      return finish(out, failed);
    } catch (const ValidationFailure& e) {
      return finish(json::object(), {std::string("Artin-Rees validation: ") + e.what()});
    }
  }

  const Scenario& s_;
  const RunOptions& o_;
  std::optional<GridTable> lambda_;
  std::optional<FitResult> fit_;
};

std::string lambda_string(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "inf"; }

std::string csv_for(const GridTable& t) {
  std::ostringstream os;
  for (std::size_t j = 0; j < t.box.rank(); ++j) os << (t.box.rank() == 1 ? "n" : "n" + std::to_string(j + 1)) << ",";
  os << "lambda\n";
  for (const auto& p : t.points) {
    for (int v : p.n) os << v << ",";
    os << lambda_string(p.length) << "\n";
  }
  return os.str();
}

std::string task_summary(const json& r) {
  if (r.contains("failures")) return r.at("failures").at(0).get<std::string>();
  if (r.contains("error")) return r.at("error").get<std::string>();
  if (r.contains("polynomial")) return "P = " + r.at("polynomial").get<std::string>() + ", onset " +
                                       point_to_string(r.at("onset").get<Point>());
  if (r.contains("verdict") && r.at("verdict").is_string()) return r.at("verdict").get<std::string>();
  if (r.contains("d")) return "d = " + point_to_string(r.at("d").get<Point>());
  if (r.contains("verdict")) return r.at("verdict").at("observable").get<std::string>() + " -> " +
                                    r.at("verdict").at("value").get<std::string>();
  if (r.contains("verdicts")) {
    std::string s;
    for (const auto& v : r.at("verdicts"))
      s += (s.empty() ? "" : "; ") + v.at("observable").get<std::string>() + " " +
           (v.at("stable").get<bool>() ? v.at("value").get<std::string>() : std::string("unstable"));
    return s;
  }
  return "";
}

std::string markdown_for(const Scenario& s, const RunResult& r) {
  std::ostringstream md;
  md << "# " << s.name << "\n\n";
  md << "- engine: " << kEngineVersion << "\n";
  md << "- functor: " << s.functor.label() << "\n";
  md << "- box: " << point_to_string(s.box.lo) << " .. " << point_to_string(s.box.hi) << ", shell " << s.box.shell
     << "\n";
  md << "- status: " << r.report.at("status").get<std::string>() << " (exit " << r.exit_code << ")\n\n";
  md << "| task | status | result |\n|---|---|---|\n";
  for (const auto& t : r.report.at("tasks"))
    md << "| " << t.at("task").get<std::string>() << " | " << t.at("status").get<std::string>() << " | "
       << task_summary(t.at("result")) << " |\n";
  if (r.report.contains("grid")) {
    md << "\n| n | lambda |\n|---|---|\n";
    for (const auto& p : r.report.at("grid"))
      md << "| " << point_to_string(p.at("n").get<Point>()) << " | " << p.at("lambda").get<std::string>() << " |\n";
  }
  return md.str();
}

json cache_json(const GroebnerCacheStats& st) {
  return {{"memory_hits", st.memory_hits}, {"disk_hits", st.disk_hits}, {"misses", st.misses},
          {"invalidated", st.invalidated}};
}

}  // namespace

RunResult run_scenario(const Scenario& s, const RunOptions& options) {
  RunResult result;
  GroebnerCache::instance().reset_stats();
  TaskRunner runner(s, options);
  json tasks = json::array();
  json timing = json::array();
  bool computation_error = false;
  auto start = Clock::now();
  for (const auto& t : s.tasks) {
    auto t0 = Clock::now();
    json entry{{"task", t.kind}};
    try {
      json r = runner.run(t);
      entry["status"] = r.at("status");
      r.erase("status");
      entry["result"] = r;
      if (entry["status"] == "fail")
        result.failures.push_back(t.kind + ": " + r.at("failures").at(0).get<std::string>());
    } catch (const std::exception& e) {
      entry["status"] = "error";
      entry["result"] = {{"error", std::string("computation error in ") + t.kind + ": " + e.what()}};
      computation_error = true;
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    timing.push_back({{"task", t.kind}, {"millis", ms}});
    tasks.push_back(entry);
  }
  result.exit_code = computation_error ? 3 : (result.failures.empty() ? 0 : 1);

  json& rep = result.report;
  rep["format"] = "cohera-report/1";
  rep["engine"] = kEngineVersion;
  rep["scenario"] = s.source;
  rep["name"] = s.name;
  rep["characteristic"] = s.ring->field().characteristic();
  rep["functor"] = s.functor.label();
  rep["family"] = {{"kind", s.family.kind() == FamilySpec::Kind::Quotient ? "quotient" : "component"},
                   {"ideals", s.family_ideals},
                   {"rank", s.family.rank()}};
  rep["box"] = {{"lo", s.box.lo}, {"hi", s.box.hi}, {"shell", s.box.shell}};
  rep["tasks"] = tasks;
  rep["status"] = result.exit_code == 0 ? "pass" : (result.exit_code == 1 ? "fail" : "error");
  if (const auto& grid = runner.lambda_grid()) {
    json g = json::array();
    for (const auto& p : grid->points)
      g.push_back({{"n", p.n}, {"lambda", lambda_string(p.length)}, {"hilbert", p.hilbert}});
    rep["grid"] = g;
    result.csv["lambda"] = csv_for(*grid);
  }

  result.timings = {{"engine", kEngineVersion},
                    {"name", s.name},
                    {"jobs", options.jobs},
                    {"tasks", timing},
                    {"total_millis", std::chrono::duration<double, std::milli>(Clock::now() - start).count()},
                    {"cache", cache_json(GroebnerCache::instance().stats())}};
  result.markdown = markdown_for(s, result);
  return result;
}

namespace {

bool write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

void configure_cache(const RunOptions& options) {
  GroebnerCache& cache = GroebnerCache::instance();
  cache.set_enabled(options.use_cache);
  if (!options.use_cache) {
    cache.set_directory(std::nullopt);
    return;
  }
  if (const char* dir = std::getenv(kCacheEnv); dir && *dir) {
    cache.set_directory(std::string(dir));
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    cache.set_directory((std::filesystem::path(home) / ".cache" / "cohera").string());
  }
}

}  // namespace

int run_scenario_file(const std::filesystem::path& path, const RunOptions& options, std::ostream& out,
                      std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read scenario " << path.string() << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  Scenario s;
  try {
    s = load_scenario(buf.str(), options);
  } catch (const ScenarioError& e) {
    err << path.string();
    if (e.line() > 0) err << ":" << e.line() << ":" << e.column();
    err << ": " << (e.block() == "syntax" ? "parse error" : "error in block \"" + e.block() + "\"");
    if (e.line() == 0 && e.column() > 0) err << " (column " << e.column() << ")";
    err << ": " << e.what() << "\n";
    return 2;
  }
  if (s.name.empty()) s.name = path.stem().string();
  if (s.output.stem.empty()) s.output.stem = s.name;

  configure_cache(options);
  RunResult r = run_scenario(s, options);

  std::error_code ec;
  std::filesystem::create_directories(options.out, ec);
  const auto base = options.out / s.output.stem;
  bool ok = true;
  if (s.output.json) ok &= write_text(base.string() + ".report.json", r.report.dump(2) + "\n");
  if (s.output.markdown) ok &= write_text(base.string() + ".summary.md", r.markdown);
  if (s.output.csv)
    for (const auto& [suffix, text] : r.csv) ok &= write_text(base.string() + "." + suffix + ".csv", text);
  ok &= write_text(base.string() + ".timings.json", r.timings.dump(2) + "\n");
  if (!ok) {
    err << "error: cannot write report files under " << options.out.string() << "\n";
    return 3;
  }

  for (const auto& t : r.report.at("tasks"))
    out << t.at("task").get<std::string>() << ": " << t.at("status").get<std::string>() << "  "
        << task_summary(t.at("result")) << "\n";
  for (const auto& t : r.report.at("tasks"))
    if (t.at("status") == "error") err << t.at("result").at("error").get<std::string>() << "\n";
  for (const auto& f : r.failures) err << "assertion failed in task " << f << "\n";
  out << "status: " << r.report.at("status").get<std::string>() << "\n";
  return r.exit_code;
}

}  // namespace cohera::runner
