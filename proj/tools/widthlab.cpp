// widthlab: sparse recovery, matrix certification, and width estimation CLI.
//
// Subcommands: recover, rip, nsp, pack, bounds, phase, stability, widths.
// Exit codes: 0 success, 2 property failure (witness in the JSON report),
// 3 combinatorial budget exceeded, 4 bad configuration or input.

#include <CLI11.hpp>
#include <iostream>

#include "widthlab/certify.hpp"
#include "widthlab/errors.hpp"
#include "widthlab/io.hpp"
#include "widthlab/lab.hpp"
#include "widthlab/packing.hpp"
#include "widthlab/widths.hpp"

namespace {

using namespace widthlab;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 2;
constexpr int kExitBudget = 3;
constexpr int kExitBadConfig = 4;

void emit(const Json& report, const std::string& out_file) {
  const std::string text = report.dump(2) + "\n";
  if (out_file.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_file, text);
  }
}

int run_recover(const std::string& matrix_file, const std::string& rhs_file,
                const std::string& method_name, double p, const std::string& out_file) {
  const MeasurementMatrix A = load_matrix_csv(matrix_file);
  RealVector y = load_vector_file(rhs_file);
  if (y.size() < A.rows()) {
    RealVector padded = RealVector::Zero(A.rows());
    padded.head(y.size()) = y;
    y = padded;
  } else if (y.size() > A.rows()) {
    throw ConfigError("rhs longer than the number of matrix rows");
  }
  const Method method = Method::parse(method_name, p);
  const RecoveryResult res = reconstruct(A, y, method);
  Json report = recovery_to_json(res);
  report["method"] = method.name();
  report["p"] = method.kind == Method::Kind::l1 ? 1.0 : p;
  emit(report, out_file);
  return res.status == RecoveryStatus::infeasible ? kExitPropertyFailure : kExitOk;
}

int run_rip(const std::string& matrix_file, int s, const std::string& method, long samples,
            long budget, std::uint64_t seed, const std::string& out_file) {
  const MeasurementMatrix A = load_matrix_csv(matrix_file);
  RipOptions opts;
  opts.samples = samples;
  opts.max_supports = budget;
  opts.seed = seed;
  const RipMethod rip_method =
      method == "sampled" ? RipMethod::sampled : RipMethod::exhaustive;
  const RipEstimate est = rip_constant(A, s, rip_method, opts);
  emit(rip_to_json(est), out_file);
  return kExitOk;
}

int run_nsp(const std::string& matrix_file, int s, double p, const std::string& method_name,
            long budget, std::uint64_t seed, const std::string& out_file) {
  const MeasurementMatrix A = load_matrix_csv(matrix_file);
  NspMethod method;
  if (method_name == "exact-l1") {
    method = NspMethod::exact_l1;
  } else if (method_name == "oracle" || method_name == "oracle-equivalence") {
    method = NspMethod::oracle_equivalence;
  } else if (method_name == "heuristic") {
    method = NspMethod::heuristic;
  } else {
    throw ConfigError("nsp method must be exact-l1 | oracle | heuristic");
  }
  NspOptions opts;
  opts.max_lp_budget = budget;
  opts.seed = seed;
  const NspReport report = check_nsp(A, s, p, method, opts);
  emit(nsp_to_json(report), out_file);
  return report.holds ? kExitOk : kExitPropertyFailure;
}

int run_pack(int N, int s, const std::string& out_file) {
  const PackingFamily family = greedy_packing(N, s);
  const PackingCheck check = check_packing(family);
  Json report = family_to_json(family);
  report["check"] = packing_check_to_json(check);
  report["size_bound"] = packing_size_bound(N, s);
  emit(report, out_file);
  return check.all_ok() ? kExitOk : kExitPropertyFailure;
}

int run_bounds(int N, int m, int s, double p, double q, double C1, double C,
               const std::string& out_file) {
  Json report;
  const LowerBoundConstants k = lower_bound_constants(p, q);
  report["constants"] = Json{{"c", k.c}, {"c1", k.c1}, {"c2", k.c2},
                             {"d", k.d}, {"c_pq", k.c_pq}};
  if (m >= 1 && m < N) report["rate_band"] = rate_band_to_json(rate_band(N, m, p, q));
  // min_measurements_lp takes s meaning "recovery of 2s-sparse vectors".
  if (s >= 1 && 2 * s < N) report["min_measurements_lp"] = min_measurements_lp(s, N, p);
  if (s >= 1 && s < N) {
    report["stability_min_measurements"] = stability_min_measurements(s, N, p, C);
    report["stability_rate_constant"] = stability_rate_constant(C);
    report["rip_sample_complexity"] = rip_sample_complexity(s, N, C1);
  }
  report["case_split_D"] = case_split_constant(C1);
  if (m >= 1 && m < N) report["upper_bound_case1"] = upper_bound_case1(N, m, C1);
  emit(report, out_file);
  return kExitOk;
}

int run_campaign_cli(const std::string& campaign, const std::string& config_file,
                     const std::string& out_dir, std::optional<std::uint64_t> seed) {
  lab::ExperimentConfig cfg = lab::load_config(config_file);
  if (cfg.campaign != campaign) cfg.campaign = campaign;  // flags override config
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (seed) cfg.seed = *seed;
  const lab::CampaignResult result = lab::run_campaign(cfg);
  const lab::EmittedFiles files = lab::emit_outputs(result, cfg.out_dir);
  std::cout << "wrote " << files.csv.string() << ", " << files.json.string() << ", "
            << files.svg.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compressive-sensing width laboratory"};
  app.require_subcommand(1);

  std::string matrix_file, rhs_file, out_file, out_dir, config_file;
  std::string method = "l1";
  double p = 1.0, q = 2.0, C1 = 2.0, C = 1.0;
  int s = 1, N = 16, m = 0;
  long samples = 1000, budget = 2'000'000, nsp_budget = 100'000;
  std::uint64_t seed = 0;
  bool seed_set = false;

  auto* recover = app.add_subcommand("recover", "reconstruct from measurements");
  recover->add_option("--matrix-file", matrix_file)->required();
  recover->add_option("--rhs-file,--vector-file", rhs_file)->required();
  recover->add_option("--method", method, "l1 | irls | exact");
  recover->add_option("--p", p, "exponent for irls/exact");
  recover->add_option("--out", out_file);

  auto* rip = app.add_subcommand("rip", "restricted isometry constant");
  rip->add_option("--matrix-file", matrix_file)->required();
  rip->add_option("--s", s)->required();
  rip->add_option("--method", method, "exhaustive | sampled");
  rip->add_option("--samples", samples);
  rip->add_option("--budget", budget);
  rip->add_option("--seed", seed);
  rip->add_option("--out", out_file);

  auto* nsp = app.add_subcommand("nsp", "null space property certification");
  nsp->add_option("--matrix-file", matrix_file)->required();
  nsp->add_option("--s", s)->required();
  nsp->add_option("--p", p);
  nsp->add_option("--method", method, "exact-l1 | oracle | heuristic");
  nsp->add_option("--budget", nsp_budget);
  nsp->add_option("--seed", seed);
  nsp->add_option("--out", out_file);

  auto* pack = app.add_subcommand("pack", "greedy support packing");
  pack->add_option("--N", N)->required();
  pack->add_option("--s", s)->required();
  pack->add_option("--out", out_file);

  auto* bounds = app.add_subcommand("bounds", "closed-form rate and constant calculators");
  bounds->add_option("--N", N)->required();
  bounds->add_option("--m", m);
  bounds->add_option("--s", s);
  bounds->add_option("--p", p);
  bounds->add_option("--q", q);
  bounds->add_option("--C1", C1);
  bounds->add_option("--C", C);
  bounds->add_option("--out", out_file);

  for (const std::string name : {"phase", "stability", "widths"}) {
    auto* cmd = app.add_subcommand(name, name + " campaign");
    cmd->add_option("--config", config_file)->required();
    cmd->add_option("--out", out_dir);
    cmd->add_option("--seed", seed)->each([&](const std::string&) { seed_set = true; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadConfig;
  }

  try {
    if (recover->parsed()) {
      if (method == "exhaustive" || method == "sampled") method = "l1";
      return run_recover(matrix_file, rhs_file, method, p, out_file);
    }
    if (rip->parsed()) {
      return run_rip(matrix_file, s, method == "l1" ? "exhaustive" : method, samples, budget,
                     seed, out_file);
    }
    if (nsp->parsed()) {
      return run_nsp(matrix_file, s, p, method == "l1" ? "exact-l1" : method, nsp_budget, seed,
                     out_file);
    }
    if (pack->parsed()) return run_pack(N, s, out_file);
    if (bounds->parsed()) return run_bounds(N, m, s, p, q, C1, C, out_file);
    for (const std::string name : {"phase", "stability", "widths"}) {
      if (app.get_subcommand(name)->parsed()) {
        return run_campaign_cli(name, config_file, out_dir,
                                seed_set ? std::optional<std::uint64_t>(seed) : std::nullopt);
      }
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const OversizeError& e) {
    std::cerr << "oversize: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitBadConfig;
}
