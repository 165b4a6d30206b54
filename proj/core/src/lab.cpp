#include "widthlab/lab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>

#include "widthlab/certify.hpp"
#include "widthlab/errors.hpp"
#include "widthlab/packing.hpp"
#include "widthlab/prng.hpp"
#include "widthlab/svg.hpp"

namespace widthlab::lab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

Method method_from_config(const ExperimentConfig& cfg) {
  return Method::parse(cfg.method, cfg.method_p);
}

// Random s-sparse vector with unit l2 norm (support and values seeded).
RealVector sparse_unit_vector(int N, int s, std::uint64_t seed) {
  RealVector x = RealVector::Zero(N);
  if (s == 0) return x;
  CounterRng rng(seed, "phase-x");
  std::vector<int> scratch(N);
  for (int i = 0; i < N; ++i) scratch[i] = i;
  for (int i = 0; i < s; ++i) {
    const int j = i + static_cast<int>(rng.below(i, N - i));
    std::swap(scratch[i], scratch[j]);
  }
  for (int i = 0; i < s; ++i) {
    x[scratch[i]] = rng.gaussian(static_cast<std::uint64_t>(N) + i);
  }
  const double norm = x.norm();
  if (norm > 0.0) x /= norm;
  return x;
}

std::string csv_cell_header() {
  return "N,m,s,p,q,trials,success_rate,mean_err,max_err,seed\n";
}

std::string csv_cell_row(const CellResult& c) {
  std::string row;
  row += std::to_string(c.N) + "," + std::to_string(c.m) + "," + std::to_string(c.s) + ",";
  row += format_double(c.p) + "," + format_double(c.q) + ",";
  row += std::to_string(c.trials) + ",";
  row += format_double(c.success_rate) + "," + format_double(c.mean_err) + "," +
         format_double(c.max_err) + ",";
  row += std::to_string(c.cell_seed) + "\n";
  return row;
}

Json cell_to_json(const CellResult& c, bool stability) {
  Json j{{"N", c.N},     {"m", c.m},         {"s", c.s},
         {"p", c.p},     {"q", c.q},         {"trials", c.trials},
         {"success_rate", c.success_rate},   {"mean_err", c.mean_err},
         {"max_err", c.max_err},             {"seed", c.cell_seed},
         {"skipped", c.skipped},             {"skip_reason", c.skip_reason}};
  Json seeds = Json::array();
  for (auto s : c.trial_seeds) seeds.push_back(s);
  j["trial_seeds"] = std::move(seeds);
  if (stability) {
    j["delta"] = c.delta;
    j["adopted_constant"] = c.bound_constant;
    j["sparse_probe_max_err"] = c.sparse_probe_max_err;
  }
  return j;
}

}  // namespace

std::vector<int> MRule::expand(int N, int s) const {
  switch (kind) {
    case Kind::explicit_list:
      return values;
    case Kind::alpha_fraction:
      return {std::max(1, static_cast<int>(std::ceil(alpha * N)))};
    case Kind::rip_rule:
      return {static_cast<int>(rip_sample_complexity(std::max(1, s), N, C1))};
  }
  return {};
}

std::uint64_t trial_seed(std::uint64_t master, int N, int m, int s, int trial) {
  return derive_seed({master, static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(m),
                      static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(trial)});
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig cfg;
  try {
    cfg.campaign = j.at("campaign").get<std::string>();
    for (const auto& n : j.at("N")) cfg.Ns.push_back(n.get<int>());
    if (j.contains("s")) {
      for (const auto& s : j["s"]) cfg.ss.push_back(s.get<int>());
    }
    if (j.contains("m")) {
      const auto& m = j["m"];
      if (m.is_array()) {
        cfg.m_rule.kind = MRule::Kind::explicit_list;
        for (const auto& v : m) cfg.m_rule.values.push_back(v.get<int>());
      } else {
        const std::string rule = m.at("rule").get<std::string>();
        if (rule == "list") {
          cfg.m_rule.kind = MRule::Kind::explicit_list;
          for (const auto& v : m.at("values")) cfg.m_rule.values.push_back(v.get<int>());
        } else if (rule == "alpha") {
          cfg.m_rule.kind = MRule::Kind::alpha_fraction;
          cfg.m_rule.alpha = m.at("alpha").get<double>();
        } else if (rule == "rip") {
          cfg.m_rule.kind = MRule::Kind::rip_rule;
          cfg.m_rule.C1 = m.at("C1").get<double>();
        } else {
          throw ConfigError("unknown m rule: " + rule);
        }
      }
    }
    if (j.contains("p")) {
      cfg.ps.clear();
      if (j["p"].is_array()) {
        for (const auto& v : j["p"]) cfg.ps.push_back(v.get<double>());
      } else {
        cfg.ps.push_back(j["p"].get<double>());
      }
    }
    if (j.contains("q")) cfg.q = j["q"].get<double>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("method")) cfg.method = j["method"].get<std::string>();
    if (j.contains("method_p")) cfg.method_p = j["method_p"].get<double>();
    if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
    if (j.contains("success_tol")) cfg.success_tol = j["success_tol"].get<double>();
    if (j.contains("width_starts")) cfg.width_starts = j["width_starts"].get<int>();
    if (j.contains("width_iterations")) cfg.width_iterations = j["width_iterations"].get<int>();
    if (j.contains("max_certified_s")) cfg.max_certified_s = j["max_certified_s"].get<int>();
    if (j.contains("rip_budget")) cfg.rip_budget = j["rip_budget"].get<long>();
    if (j.contains("sparse_probes")) cfg.sparse_probes = j["sparse_probes"].get<int>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
  if (cfg.campaign.empty() || cfg.Ns.empty()) throw ConfigError("config needs campaign and N");
  if (cfg.trials < 1) throw ConfigError("config: trials >= 1");
  return cfg;
}

Json config_to_json(const ExperimentConfig& cfg) {
  Json m;
  switch (cfg.m_rule.kind) {
    case MRule::Kind::explicit_list: {
      Json values = Json::array();
      for (int v : cfg.m_rule.values) values.push_back(v);
      m = Json{{"rule", "list"}, {"values", std::move(values)}};
      break;
    }
    case MRule::Kind::alpha_fraction:
      m = Json{{"rule", "alpha"}, {"alpha", cfg.m_rule.alpha}};
      break;
    case MRule::Kind::rip_rule:
      m = Json{{"rule", "rip"}, {"C1", cfg.m_rule.C1}};
      break;
  }
  Json ps = Json::array();
  for (double p : cfg.ps) ps.push_back(p);
  Json Ns = Json::array();
  for (int n : cfg.Ns) Ns.push_back(n);
  Json ss = Json::array();
  for (int s : cfg.ss) ss.push_back(s);
  return Json{{"campaign", cfg.campaign},
              {"N", std::move(Ns)},
              {"s", std::move(ss)},
              {"m", std::move(m)},
              {"p", std::move(ps)},
              {"q", cfg.q},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"method", cfg.method},
              {"method_p", cfg.method_p},
              {"success_tol", cfg.success_tol},
              {"width_starts", cfg.width_starts},
              {"width_iterations", cfg.width_iterations},
              {"max_certified_s", cfg.max_certified_s},
              {"rip_budget", cfg.rip_budget},
              {"sparse_probes", cfg.sparse_probes}};
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("cannot parse config: ") + e.what());
  }
  return config_from_json(j);
}

CampaignResult run_phase_transition(const ExperimentConfig& cfg) {
  CampaignResult out;
  out.campaign = "phase";
  const Method method = method_from_config(cfg);
  const double p = cfg.ps.front();

  for (int N : cfg.Ns) {
    for (int s : cfg.ss) {
      for (int m : cfg.m_rule.expand(N, s)) {
        if (m < 1 || m > N || s > N) continue;
        CellResult cell;
        cell.N = N;
        cell.m = m;
        cell.s = s;
        cell.p = p;
        cell.q = 2.0;
        cell.trials = cfg.trials;
        cell.cell_seed = trial_seed(cfg.seed, N, m, s, -1);
        const auto t0 = Clock::now();
        int successes = 0;
        double err_sum = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
          const std::uint64_t ts = trial_seed(cfg.seed, N, m, s, t);
          cell.trial_seeds.push_back(ts);
          const MeasurementMatrix A = gaussian_matrix(m, N, derive_seed({ts, 1}));
          const RealVector x = sparse_unit_vector(N, s, derive_seed({ts, 2}));
          const RecoveryResult res = reconstruct(A, A.A * x, method);
          double rel_err;
          if (res.status == RecoveryStatus::infeasible) {
            rel_err = std::numeric_limits<double>::infinity();
          } else {
            const double scale = x.norm();
            rel_err = scale > 0.0 ? (res.solution - x).norm() / scale : res.solution.norm();
          }
          const bool success =
              rel_err <= cfg.success_tol && res.status != RecoveryStatus::tie_detected &&
              res.status != RecoveryStatus::infeasible;
          if (success) ++successes;
          err_sum += std::isfinite(rel_err) ? rel_err : 1.0;
          cell.max_err = std::max(cell.max_err, std::isfinite(rel_err) ? rel_err : 1.0);
        }
        cell.success_rate = static_cast<double>(successes) / cfg.trials;
        cell.mean_err = err_sum / cfg.trials;
        cell.mean_runtime_ms = ms_since(t0) / cfg.trials;
        out.cells.push_back(std::move(cell));
      }
    }
  }

  out.csv = csv_cell_header();
  Json cells = Json::array();
  for (const auto& c : out.cells) {
    out.csv += csv_cell_row(c);
    cells.push_back(cell_to_json(c, false));
  }
  out.json = Json{{"campaign", out.campaign},
                  {"config", config_to_json(cfg)},
                  {"cells", std::move(cells)}};

  // heatmap over (m, s) for the first N
  if (!cfg.Ns.empty()) {
    const int N0 = cfg.Ns.front();
    std::vector<int> ms;
    for (const auto& c : out.cells) {
      if (c.N == N0 && std::find(ms.begin(), ms.end(), c.m) == ms.end()) ms.push_back(c.m);
    }
    std::sort(ms.begin(), ms.end());
    HeatmapSpec spec;
    spec.title = "phase transition, N=" + std::to_string(N0) + " (success rate)";
    spec.x_label = "m";
    spec.y_label = "s";
    for (int m : ms) spec.x_ticks.push_back(m);
    for (int s : cfg.ss) spec.y_ticks.push_back(s);
    spec.cells.assign(cfg.ss.size(),
                      std::vector<double>(ms.size(), std::numeric_limits<double>::quiet_NaN()));
    for (const auto& c : out.cells) {
      if (c.N != N0) continue;
      const auto si = std::find(cfg.ss.begin(), cfg.ss.end(), c.s) - cfg.ss.begin();
      const auto mi = std::find(ms.begin(), ms.end(), c.m) - ms.begin();
      spec.cells[si][mi] = c.success_rate;
    }
    out.svg = svg_heatmap(spec);
  }
  return out;
}

CampaignResult run_stability(const ExperimentConfig& cfg) {
  CampaignResult out;
  out.campaign = "stability";
  const Method method = method_from_config(cfg);
  const double p = cfg.ps.front();
  const double delta_cap = std::sqrt(2.0) - 1.0;

  for (int N : cfg.Ns) {
    for (int s : cfg.ss) {
      for (int m : cfg.m_rule.expand(N, s)) {
        if (m < 1 || m > N || 2 * s > std::min(m, N)) continue;
        CellResult cell;
        cell.N = N;
        cell.m = m;
        cell.s = s;
        cell.p = p;
        cell.q = p;
        cell.trials = cfg.trials;
        cell.cell_seed = trial_seed(cfg.seed, N, m, s, -1);
        const auto t0 = Clock::now();

        const MeasurementMatrix A = gaussian_matrix(m, N, derive_seed({cell.cell_seed, 1}));
        RipOptions rip_opts;
        rip_opts.max_supports = cfg.rip_budget;
        try {
          const RipEstimate rip = rip_constant(A, 2 * s, RipMethod::exhaustive, rip_opts);
          cell.delta = rip.delta;
        } catch (const BudgetExceeded&) {
          cell.skipped = true;
          cell.skip_reason = "exhaustive delta budget exceeded";
        }
        if (!cell.skipped && cell.delta >= delta_cap) {
          cell.skipped = true;
          cell.skip_reason = "hypothesis unmet: delta_{2s} >= sqrt(2)-1";
        }

        if (!cell.skipped) {
          cell.bound_constant = stability_constant(cell.delta);
          int within = 0;
          double ratio_sum = 0.0;
          for (int t = 0; t < cfg.trials; ++t) {
            const std::uint64_t ts = trial_seed(cfg.seed, N, m, s, t);
            cell.trial_seeds.push_back(ts);
            const RealVector x = compressible_model_vector(N, p, ts);
            const RecoveryResult res = reconstruct(A, A.A * x, method);
            const double num = std::pow(lp_quasinorm(x - res.solution, p), p);
            const double den = std::pow(best_s_term_error(x, s, p), p);
            const double ratio = den > 0.0 ? num / den : 0.0;
            if (ratio <= cell.bound_constant * (1.0 + 1e-9)) ++within;
            ratio_sum += ratio;
            cell.max_err = std::max(cell.max_err, ratio);
          }
          cell.success_rate = static_cast<double>(within) / cfg.trials;
          cell.mean_err = ratio_sum / cfg.trials;

          // s-sparse probes: recovery must be exact
          for (int t = 0; t < cfg.sparse_probes; ++t) {
            const std::uint64_t ts = trial_seed(cfg.seed, N, m, s, 100000 + t);
            const RealVector x = sparse_unit_vector(N, s, ts);
            const RecoveryResult res = reconstruct(A, A.A * x, method);
            const double err = (res.solution - x).norm();
            cell.sparse_probe_max_err = std::max(cell.sparse_probe_max_err, err);
          }
        }
        cell.mean_runtime_ms = ms_since(t0) / cfg.trials;
        out.cells.push_back(std::move(cell));
      }
    }
  }

  out.csv = csv_cell_header();
  Json cells = Json::array();
  for (const auto& c : out.cells) {
    out.csv += csv_cell_row(c);
    cells.push_back(cell_to_json(c, true));
  }
  out.json = Json{{"campaign", out.campaign},
                  {"config", config_to_json(cfg)},
                  {"cells", std::move(cells)}};

  LinePlotSpec spec;
  spec.title = "stability ratios vs adopted constant";
  spec.x_label = "cell index";
  spec.y_label = "ratio";
  LineSeries worst{"max ratio", {}};
  LineSeries bound{"adopted C(delta)", {}};
  int idx = 0;
  for (const auto& c : out.cells) {
    if (!c.skipped) {
      worst.points.push_back({static_cast<double>(idx), c.max_err});
      bound.points.push_back({static_cast<double>(idx), c.bound_constant});
    }
    ++idx;
  }
  spec.series = {worst, bound};
  out.svg = svg_line_plot(spec);
  return out;
}

CampaignResult run_width_sweep(const ExperimentConfig& cfg) {
  CampaignResult out;
  out.campaign = "widths";

  for (double p : cfg.ps) {
    for (int N : cfg.Ns) {
      for (int m : cfg.m_rule.expand(N, 0)) {
        if (m < 1 || m >= N) continue;
        WidthRow row;
        row.N = N;
        row.m = m;
        row.p = p;
        row.q = cfg.q;
        row.matrix_seed = derive_seed({cfg.seed, static_cast<std::uint64_t>(N),
                                       static_cast<std::uint64_t>(m), 0x77});
        const auto t0 = Clock::now();
        // draws are full-rank with overwhelming probability; a deficient draw
        // is reseeded and recorded, never used silently
        MeasurementMatrix A = gaussian_matrix(m, N, row.matrix_seed);
        for (int attempt = 0; kernel_basis(A).rank < m && attempt < 4; ++attempt) {
          row.matrix_seed = derive_seed({row.matrix_seed, 0xBAD});
          row.certified_note += "reseeded:rank-deficient-draw ";
          A = gaussian_matrix(m, N, row.matrix_seed);
        }

        WidthSearchOptions search;
        search.starts = cfg.width_starts;
        search.iterations = cfg.width_iterations;
        search.seed = derive_seed({row.matrix_seed, 0x5});
        row.estimate = empirical_width_lower(A, p, cfg.q, search);
        row.band = rate_band(N, m, p, cfg.q);

        // best certified upper over the s values the budget allows
        RipOptions rip_opts;
        rip_opts.max_supports = cfg.rip_budget;
        std::string note = "unavailable:";
        for (int s = 1; s <= cfg.max_certified_s; ++s) {
          try {
            const WidthEstimate upper = certified_width_upper(A, p, cfg.q, s, rip_opts);
            if (!row.estimate.certified_upper ||
                *upper.certified_upper < *row.estimate.certified_upper) {
              row.estimate.certified_upper = upper.certified_upper;
              row.certified_s = s;
            }
          } catch (const BudgetExceeded&) {
            note += " s=" + std::to_string(s) + ":budget";
            break;
          } catch (const std::invalid_argument& e) {
            note += std::string(" s=") + std::to_string(s) + ":" + e.what();
          }
        }
        if (!row.estimate.certified_upper) row.certified_note += note;

        // consistency monitor (budget-guarded; see widths module)
        const ContradictionReplay replay =
            replay_contradiction_monitor(A, p, cfg.q, row.estimate.empirical_lower);
        row.estimate.diag.contradiction_flag = replay.fired;

        row.mean_runtime_ms = ms_since(t0);
        out.width_rows.push_back(std::move(row));
      }
    }
  }

  out.csv =
      "N,m,p,q,empirical_lower,certified_upper,certified_s,rate,alt_rate,vybiral,"
      "lower_const,lower_over_rate,upper_over_rate,best_source,seed\n";
  Json rows = Json::array();
  for (const auto& r : out.width_rows) {
    const auto& e = r.estimate;
    out.csv += std::to_string(r.N) + "," + std::to_string(r.m) + "," + format_double(r.p) +
               "," + format_double(r.q) + "," + format_double(e.empirical_lower) + ",";
    out.csv += e.certified_upper ? format_double(*e.certified_upper) : "";
    out.csv += "," + std::to_string(r.certified_s) + "," + format_double(r.band.rate) + "," +
               format_double(r.band.alt_rate) + "," + format_double(r.band.vybiral) + "," +
               format_double(r.band.lower_const) + "," +
               format_double(e.empirical_lower / r.band.rate) + ",";
    out.csv += e.certified_upper ? format_double(*e.certified_upper / r.band.rate) : "";
    out.csv += "," + e.diag.best_source + "," + std::to_string(r.matrix_seed) + "\n";

    rows.push_back(Json{{"N", r.N},
                        {"m", r.m},
                        {"p", r.p},
                        {"q", r.q},
                        {"estimate", width_estimate_to_json(e)},
                        {"band", rate_band_to_json(r.band)},
                        {"certified_s", r.certified_s},
                        {"certified_note", r.certified_note},
                        {"sandwich",
                         Json{{"c1", std::pow(2.0, 1.0 / r.p)},
                              {"c2", std::max(1.0, std::pow(2.0, 1.0 / r.q - 1.0))}}},
                        {"seed", r.matrix_seed}});
  }
  out.json = Json{{"campaign", out.campaign},
                  {"config", config_to_json(cfg)},
                  {"rows", std::move(rows)}};

  LinePlotSpec spec;
  spec.title = "width estimates vs rate (log-log)";
  spec.x_label = "N";
  spec.y_label = "value";
  spec.log_x = true;
  spec.log_y = true;
  for (double p : cfg.ps) {
    LineSeries lower{"empirical lower p=" + format_double(p), {}};
    LineSeries rate{"rate p=" + format_double(p), {}};
    LineSeries floor{"coordinate floor p=" + format_double(p), {}};
    for (const auto& r : out.width_rows) {
      if (r.p != p) continue;
      lower.points.push_back({static_cast<double>(r.N), r.estimate.empirical_lower});
      rate.points.push_back({static_cast<double>(r.N), r.band.rate});
      floor.points.push_back({static_cast<double>(r.N), r.band.vybiral});
    }
    spec.series.push_back(std::move(lower));
    spec.series.push_back(std::move(rate));
    spec.series.push_back(std::move(floor));
  }
  out.svg = svg_line_plot(spec);
  return out;
}

CampaignResult run_pack_demo(const ExperimentConfig& cfg) {
  CampaignResult out;
  out.campaign = "pack-demo";
  out.csv = "N,s,family_size,size_bound,sizes_ok,intersections_ok,size_bound_ok\n";
  Json rows = Json::array();
  LinePlotSpec spec;
  spec.title = "greedy packing size vs guarantee";
  spec.x_label = "N";
  spec.y_label = "family size";
  spec.log_x = true;
  spec.log_y = true;

  for (int s : cfg.ss) {
    LineSeries sizes{"greedy s=" + std::to_string(s), {}};
    LineSeries bounds{"bound s=" + std::to_string(s), {}};
    for (int N : cfg.Ns) {
      if (s < 1 || s >= N) continue;
      const PackingFamily family = greedy_packing(N, s);
      const PackingCheck check = check_packing(family);
      const double bound = packing_size_bound(N, s);
      out.csv += std::to_string(N) + "," + std::to_string(s) + "," +
                 std::to_string(family.sets.size()) + "," + format_double(bound) + "," +
                 (check.sizes_ok ? "1" : "0") + "," + (check.intersections_ok ? "1" : "0") +
                 "," + (check.size_bound_ok ? "1" : "0") + "\n";
      rows.push_back(Json{{"N", N},
                          {"s", s},
                          {"size_bound", bound},
                          {"check", packing_check_to_json(check)},
                          {"family", family_to_json(family)}});
      sizes.points.push_back({static_cast<double>(N), static_cast<double>(family.sets.size())});
      bounds.points.push_back({static_cast<double>(N), bound});
    }
    spec.series.push_back(std::move(sizes));
    spec.series.push_back(std::move(bounds));
  }
  out.json = Json{{"campaign", out.campaign},
                  {"config", config_to_json(cfg)},
                  {"rows", std::move(rows)}};
  out.svg = svg_line_plot(spec);
  return out;
}

CampaignResult run_campaign(const ExperimentConfig& cfg) {
  if (cfg.campaign == "phase") return run_phase_transition(cfg);
  if (cfg.campaign == "stability") return run_stability(cfg);
  if (cfg.campaign == "widths") return run_width_sweep(cfg);
  if (cfg.campaign == "pack-demo") return run_pack_demo(cfg);
  throw ConfigError("unknown campaign: " + cfg.campaign);
}

EmittedFiles emit_outputs(const CampaignResult& result,
                          const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  EmittedFiles files;
  files.csv = out_dir / (result.campaign + ".csv");
  files.json = out_dir / (result.campaign + ".json");
  files.svg = out_dir / (result.campaign + ".svg");
  files.meta = out_dir / (result.campaign + "_meta.json");

  write_text_file(files.csv, result.csv);
  write_text_file(files.json, result.json.dump(2) + "\n");
  write_text_file(files.svg, result.svg);

  Json meta{{"written_at", iso_timestamp()}};
  Json runtimes = Json::array();
  for (const auto& c : result.cells) {
    runtimes.push_back(Json{{"N", c.N}, {"m", c.m}, {"s", c.s},
                            {"mean_runtime_ms", c.mean_runtime_ms}});
  }
  for (const auto& r : result.width_rows) {
    runtimes.push_back(Json{{"N", r.N}, {"m", r.m}, {"runtime_ms", r.mean_runtime_ms}});
  }
  meta["runtimes"] = std::move(runtimes);
  write_text_file(files.meta, meta.dump(2) + "\n");
  return files;
}

}  // namespace widthlab::lab
