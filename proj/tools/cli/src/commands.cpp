#include "asrc_cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "asrc/analysis.hpp"
#include "asrc/builtin_scenarios.hpp"
#include "asrc/errors.hpp"
#include "asrc/trace_csv.hpp"
#include "asrc_cli/manifest.hpp"
#include "asrc_cli/scenario_io.hpp"

namespace asrc::cli {
namespace {

namespace fs = std::filesystem;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Job {
  std::string id;
  Scenario scenario;
  std::optional<double> value;
};

struct RunResult {
  std::string status = "ok";
  bool failed = false;
  std::size_t ticks = 0;
  Metrics all{kNaN, kNaN, kNaN};
  Metrics tail{kNaN, kNaN, kNaN};
  ChatteringReport chatter;
  double min_theta = kNaN;
  double min_gamma = kNaN;
  double min_k = kNaN;
  std::size_t episodes = 0;
  std::size_t episodes_evaluable = 0;
  std::size_t episodes_within = 0;
  double fp_root = kNaN;
  ThetaStar theta_star;
};

std::string f(double v) { return format_float(v); }

Scenario resolve_scenario(const std::string& ref, const fs::path& base_dir) {
  if (is_builtin_scenario(ref)) return builtin_scenario(ref);
  const fs::path p = fs::path(ref).is_absolute() ? fs::path(ref) : base_dir / ref;
  return load_scenario(p);
}

std::vector<Job> expand_jobs(const RunManifest& m, const Scenario& base) {
  std::vector<ControllerKind> controllers = m.controllers;
  if (controllers.empty()) controllers.push_back(base.controller);
  std::vector<std::optional<double>> values{std::nullopt};
  if (m.sweep) values.assign(m.sweep->values.begin(), m.sweep->values.end());

  std::vector<Job> jobs;
  for (ControllerKind c : controllers) {
    for (const auto& v : values) {
      Job j;
      j.scenario = base;
      j.scenario.controller = c;
      j.id = std::string(to_string(c));
      if (v) {
        apply_parameter(j.scenario, m.sweep->parameter, *v);
        j.id += "__" + m.sweep->parameter + "_" + format_float(*v);
      }
      j.value = v;
      jobs.push_back(std::move(j));
    }
  }
  return jobs;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

template <class W>
void write_with(const fs::path& path, W&& writer) {
  std::ostringstream ss;
  writer(ss);
  write_file(path, ss.str());
}

std::string analysis_text(const Job& job, const SimTrace& trace, const RunResult& r,
                          const std::vector<IncreaseEpisode>& episodes) {
  std::ostringstream s;
  s << "run " << job.id << "\n";
  s << "scenario " << job.scenario.name << ", controller " << to_string(job.scenario.controller)
    << "\n";
  s << "status " << r.status << "\n";
  s << "ticks " << r.ticks << "\n";
  s << "theta_star " << f(trace.theta_star.theta[0]) << " " << f(trace.theta_star.theta[1]) << " "
    << f(trace.theta_star.theta[2]) << "\n";
  s << "plant mu1 " << f(trace.constants.mu1) << " mu2 " << f(trace.constants.mu2) << "\n";
  s << "rms_ep_m " << f(r.all.rms_ep) << "\nrms_tau " << f(r.all.rms_tau) << "\nrms_e_rad "
    << f(r.all.rms_e) << "\ntail25_rms_ep_m " << f(r.tail.rms_ep) << "\n";
  s << "chattering max_jump " << f(r.chatter.max_jump) << " median " << f(r.chatter.median_magnitude)
    << " flagged " << (r.chatter.flagged ? "yes" : "no") << "\n";
  if (job.scenario.controller == ControllerKind::Asrc) {
    s << "min_theta_hat " << f(r.min_theta) << "\nmin_gamma " << f(r.min_gamma) << "\n";
    s << "fp_root_iota " << f(r.fp_root) << "\n";
    s << "increase_episodes " << episodes.size() << " (bound evaluable " << r.episodes_evaluable
      << ", first decrease within bound " << r.episodes_within << ")\n";
    for (const IncreaseEpisode& e : episodes) {
      s << "  t_in " << f(e.t_in) << " t_stop " << (e.t_stop ? f(*e.t_stop) : "-") << " ("
        << to_string(e.stop_mode) << ") t_first_decrease "
        << (e.t_first_decrease ? f(*e.t_first_decrease) : "-") << " t_bar " << f(e.bounds.t_bar)
        << " delta_t " << f(e.bounds.delta_t) << " deadline "
        << (e.bound_evaluable ? f(e.deadline) : "n/a") << "\n";
    }
  } else if (job.scenario.controller == ControllerKind::Asmc) {
    s << "min_k " << f(r.min_k) << "\n";
  }
  return s.str();
}

bool episode_within_bound(const IncreaseEpisode& e) {
  if (e.t_first_decrease) return *e.t_first_decrease <= e.deadline;
  return e.t_stop && *e.t_stop <= e.deadline;
}

RunResult execute(const Job& job, const fs::path& dir) {
  RunResult r;
  const SimTrace trace = run_scenario(job.scenario);
  const ControllerConfig& cfg = job.scenario.config;
  r.ticks = trace.records.size();
  r.theta_star = trace.theta_star;
  if (trace.diverged) {
    r.status = "diverged: " + trace.divergence_reason;
    r.failed = true;
  }
  if (!trace.records.empty()) {
    r.all = metrics(trace);
    r.tail = tail_metrics(trace, 0.25);
    r.chatter = chattering_check(trace, 0.5 * job.scenario.horizon);
  }
  std::vector<IncreaseEpisode> episodes;
  if (job.scenario.controller == ControllerKind::Asrc && !trace.records.empty()) {
    r.min_theta = std::numeric_limits<double>::infinity();
    r.min_gamma = std::numeric_limits<double>::infinity();
    for (const TraceRecord& rec : trace.records) {
      for (std::size_t i = 0; i < regressor_size(cfg.order); ++i)
        r.min_theta = std::min(r.min_theta, rec.gains[i]);
      r.min_gamma = std::min(r.min_gamma, rec.gains[3]);
    }
    episodes = increase_episodes(trace, cfg);
    r.episodes = episodes.size();
    for (const IncreaseEpisode& e : episodes) {
      if (!e.bound_evaluable) continue;
      ++r.episodes_evaluable;
      if (episode_within_bound(e)) ++r.episodes_within;
    }
    try {
      const FpPolynomial poly =
          FpPolynomial::build(trace.theta_star, cfg, gamma_norm(cfg.omega),
                              convergence_rate(cfg, trace.constants.mu2), zeta_from_trace(trace, cfg));
      r.fp_root = fp_positive_root(poly);
    } catch (const StructuralError&) {
      r.fp_root = kNaN;
    }
  }
  if (job.scenario.controller == ControllerKind::Asmc && !trace.records.empty()) {
    r.min_k = std::numeric_limits<double>::infinity();
    for (const TraceRecord& rec : trace.records) r.min_k = std::min(r.min_k, rec.k);
  }

  fs::create_directories(dir);
  write_file(dir / "scenario.json", serialize_scenario(job.scenario));
  write_with(dir / "trace.csv", [&](std::ostream& o) { write_trace_csv(o, trace); });
  write_with(dir / "gains.csv", [&](std::ostream& o) { write_gains_csv(o, trace); });

  std::vector<double> t;
  std::vector<double> ef;
  std::vector<double> rho;
  for (const TraceRecord& rec : trace.records) {
    t.push_back(rec.t);
    ef.push_back(rec.e_f_norm);
    rho.push_back(rec.rho_hat);
  }
  write_with(dir / "series_e_f_norm.csv",
             [&](std::ostream& o) { write_series_csv(o, "t_s", "e_f_norm", t, ef); });
  write_with(dir / "series_rho_hat.csv",
             [&](std::ostream& o) { write_series_csv(o, "t_s", "rho_hat", t, rho); });
  if (trace.pose) {
    write_with(dir / "series_e_p.csv", [&](std::ostream& o) {
      write_series_csv(o, "t_s", "e_p_m", t, trace.pose->position_error);
    });
  }
  write_file(dir / "analysis.txt", analysis_text(job, trace, r, episodes));
  return r;
}

const char* kMetricsHeader =
    "run,scenario,controller,parameter,value,status,ticks,rms_ep_m,rms_tau,rms_e_rad,"
    "tail25_rms_ep_m,max_delta_tau_jump,median_delta_tau,chattering_flag,min_theta_hat,"
    "min_gamma,min_k,increase_episodes,episodes_evaluable,episodes_within_bound,fp_root_iota\n";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

int cmd_run(const fs::path& manifest_path, std::ostream& out, std::ostream& err) {
  RunManifest m;
  Scenario base;
  std::vector<Job> jobs;
  fs::path out_dir;
  const fs::path manifest_dir = manifest_path.has_parent_path() ? manifest_path.parent_path() : ".";
  try {
    m = load_manifest(manifest_path);
    try {
      base = resolve_scenario(m.scenario, manifest_dir);
    } catch (const ConfigError& e) {
      throw ConfigFileError(manifest_path.string(), 0, "scenario", e.what());
    }
    jobs = expand_jobs(m, base);
    for (const Job& j : jobs) {
      if (auto problems = validate(j.scenario); !problems.empty()) {
        for (const std::string& p : problems) err << "config error: run " << j.id << ": " << p << "\n";
        return kExitConfigError;
      }
    }
    out_dir = resolve_output_dir(m, manifest_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir)) {
      throw ConfigFileError(manifest_path.string(), 0, "output_dir",
                            "cannot create " + out_dir.string());
    }
  } catch (const ConfigFileError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  std::vector<RunResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = execute(jobs[i], out_dir / jobs[i].id);
      } catch (const std::exception& e) {
        results[i].status = std::string("error: ") + e.what();
        results[i].failed = true;
      }
    }
  };
  unsigned workers = m.workers ? m.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::ostringstream metrics_csv;
  std::ostringstream summary;
  metrics_csv << kMetricsHeader;
  summary << "scenario " << base.name << "\n";
  summary << "runs " << jobs.size() << "\n";
  bool any_failed = false;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job& j = jobs[i];
    const RunResult& r = results[i];
    any_failed |= r.failed;
    metrics_csv << csv_field(j.id) << ',' << csv_field(j.scenario.name) << ','
                << to_string(j.scenario.controller) << ',' << (m.sweep ? m.sweep->parameter : "")
                << ',' << (j.value ? f(*j.value) : "") << ',' << csv_field(r.status) << ','
                << r.ticks << ',' << f(r.all.rms_ep) << ',' << f(r.all.rms_tau) << ','
                << f(r.all.rms_e) << ',' << f(r.tail.rms_ep) << ',' << f(r.chatter.max_jump) << ','
                << f(r.chatter.median_magnitude) << ',' << (r.chatter.flagged ? 1 : 0) << ','
                << f(r.min_theta) << ',' << f(r.min_gamma) << ',' << f(r.min_k) << ','
                << r.episodes << ',' << r.episodes_evaluable << ',' << r.episodes_within << ','
                << f(r.fp_root) << '\n';
    summary << j.id << ": " << r.status << ", rms_ep_m " << f(r.all.rms_ep) << ", rms_tau "
            << f(r.all.rms_tau) << ", rms_e_rad " << f(r.all.rms_e) << ", chattering "
            << (r.chatter.flagged ? "flagged" : "none") << "\n";
    out << j.id << ": " << r.status << "\n";
  }
  try {
    write_file(out_dir / "metrics.csv", metrics_csv.str());
    write_file(out_dir / "summary.txt", summary.str());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDiverged;
  }
  out << "wrote " << jobs.size() << " run(s) to " << out_dir.string() << "\n";
  if (any_failed) {
    err << "one or more runs diverged or failed; partial outputs kept\n";
    return kExitDiverged;
  }
  return kExitOk;
}

int cmd_validate(const std::string& config, std::ostream& out, std::ostream& err) {
  Scenario sc;
  try {
    sc = is_builtin_scenario(config) ? builtin_scenario(config) : load_scenario(config);
  } catch (const ConfigFileError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  const std::vector<std::string> problems = validate(sc);
  for (const std::string& p : problems) out << "violation: " << p << "\n";
  if (!problems.empty()) return kExitViolations;
  out << "ok: " << (sc.name.empty() ? config : sc.name) << "\n";
  return kExitOk;
}

int cmd_list_scenarios(std::ostream& out) {
  for (const BuiltinScenarioInfo& s : builtin_scenarios()) out << s.name << "\t" << s.description << "\n";
  return kExitOk;
}

}  // namespace asrc::cli
