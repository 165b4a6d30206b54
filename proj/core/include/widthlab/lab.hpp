#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "widthlab/io.hpp"
#include "widthlab/solvers.hpp"
#include "widthlab/widths.hpp"

namespace widthlab::lab {

struct MRule {
  enum class Kind { explicit_list, alpha_fraction, rip_rule };
  Kind kind = Kind::alpha_fraction;
  std::vector<int> values;
  double alpha = 0.25;
  double C1 = 2.0;

  std::vector<int> expand(int N, int s) const;
};

struct ExperimentConfig {
  std::string campaign;  // phase | stability | widths | pack-demo
  std::vector<int> Ns;
  std::vector<int> ss;
  MRule m_rule;
  std::vector<double> ps{1.0};
  double q = 2.0;
  int trials = 20;
  std::uint64_t seed = 0;
  std::string method = "l1";
  double method_p = 0.5;  // p used by irls/exact reconstruction
  std::string out_dir = "out";
  double success_tol = 1e-6;  // relative l2
  // widths campaign knobs
  int width_starts = 64;
  int width_iterations = 200;
  int max_certified_s = 4;
  long rip_budget = 2'000'000;
  int sparse_probes = 5;  // stability: per-cell exact-recovery probes
};

ExperimentConfig config_from_json(const Json& j);
Json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::filesystem::path& path);

// Per-trial seed: pure function of master seed and cell coordinates, so any
// single trial reproduces in isolation.
std::uint64_t trial_seed(std::uint64_t master, int N, int m, int s, int trial);

struct CellResult {
  int N = 0, m = 0, s = 0;
  double p = 1.0, q = 2.0;
  int trials = 0;
  double success_rate = 0.0;
  double mean_err = 0.0;
  double max_err = 0.0;
  double mean_runtime_ms = 0.0;  // sidecar metadata only (nondeterministic)
  std::uint64_t cell_seed = 0;
  std::vector<std::uint64_t> trial_seeds;
  bool skipped = false;
  std::string skip_reason;
  // stability extras
  double delta = 0.0;
  double bound_constant = 0.0;
  double sparse_probe_max_err = 0.0;
};

struct WidthRow {
  int N = 0, m = 0;
  double p = 1.0, q = 2.0;
  WidthEstimate estimate;
  RateBand band;
  int certified_s = 0;  // 0 when no certified upper is available
  std::string certified_note;
  std::uint64_t matrix_seed = 0;
  double mean_runtime_ms = 0.0;
};

struct CampaignResult {
  std::string campaign;
  std::vector<CellResult> cells;
  std::vector<WidthRow> width_rows;
  Json json;         // deterministic full-fidelity record (incl. seeds)
  std::string csv;   // deterministic; schema in README
  std::string svg;   // deterministic figure
  Json meta;         // sidecar: timestamps and runtimes (not deterministic)
};

CampaignResult run_phase_transition(const ExperimentConfig& cfg);
CampaignResult run_stability(const ExperimentConfig& cfg);
CampaignResult run_width_sweep(const ExperimentConfig& cfg);
CampaignResult run_pack_demo(const ExperimentConfig& cfg);

CampaignResult run_campaign(const ExperimentConfig& cfg);

struct EmittedFiles {
  std::filesystem::path csv, json, svg, meta;
};

EmittedFiles emit_outputs(const CampaignResult& result,
                          const std::filesystem::path& out_dir);

}  // namespace widthlab::lab
