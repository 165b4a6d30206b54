#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "widthlab/errors.hpp"
#include "widthlab/lab.hpp"

using namespace widthlab;
using namespace widthlab::lab;

namespace {

// Minimal well-formedness check: every open tag is closed in order.
bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    const size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;  // declaration/comment
    const bool closing = tag[0] == '/';
    const bool self_closing = tag.back() == '/';
    if (closing) tag = tag.substr(1);
    const size_t name_end = tag.find_first_of(" \t\n/");
    const std::string name = tag.substr(0, name_end);
    if (name.empty()) return false;
    if (closing) {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!self_closing) {
      stack.push_back(name);
    }
  }
  return stack.empty();
}

ExperimentConfig tiny_phase_config() {
  ExperimentConfig cfg;
  cfg.campaign = "phase";
  cfg.Ns = {8};
  cfg.ss = {0, 1, 2};
  cfg.m_rule.kind = MRule::Kind::explicit_list;
  cfg.m_rule.values = {4, 8};
  cfg.trials = 4;
  cfg.seed = 11;
  return cfg;
}

}  // namespace

TEST_CASE("config json round trip") {
  const ExperimentConfig cfg = tiny_phase_config();
  const ExperimentConfig back = config_from_json(config_to_json(cfg));
  CHECK(back.campaign == cfg.campaign);
  CHECK(back.Ns == cfg.Ns);
  CHECK(back.ss == cfg.ss);
  CHECK(back.m_rule.values == cfg.m_rule.values);
  CHECK(back.trials == cfg.trials);
  CHECK(back.seed == cfg.seed);

  // plain list shorthand for m
  const Json j{{"campaign", "phase"}, {"N", {16}}, {"s", {1}}, {"m", {4, 8}}};
  const ExperimentConfig shorthand = config_from_json(j);
  CHECK(shorthand.m_rule.values == std::vector<int>{4, 8});

  CHECK_THROWS_AS(config_from_json(Json{{"campaign", "phase"}}), ConfigError);
  CHECK_THROWS_AS(config_from_json(Json{{"N", {4}}}), ConfigError);
}

TEST_CASE("m rules expand") {
  MRule alpha;
  alpha.kind = MRule::Kind::alpha_fraction;
  alpha.alpha = 0.25;
  CHECK(alpha.expand(64, 1) == std::vector<int>{16});

  MRule rip;
  rip.kind = MRule::Kind::rip_rule;
  rip.C1 = 2.0;
  CHECK(rip.expand(256, 4) == std::vector<int>{42});
}

TEST_CASE("phase campaign: trivial cells succeed and outputs are deterministic") {
  const ExperimentConfig cfg = tiny_phase_config();
  const CampaignResult run1 = run_phase_transition(cfg);
  const CampaignResult run2 = run_phase_transition(cfg);

  CHECK(run1.csv == run2.csv);
  CHECK(run1.json.dump() == run2.json.dump());
  CHECK(run1.svg == run2.svg);

  // header + one row per cell
  const std::string header = run1.csv.substr(0, run1.csv.find('\n'));
  CHECK(header == "N,m,s,p,q,trials,success_rate,mean_err,max_err,seed");
  size_t rows = 0;
  for (char c : run1.csv) rows += c == '\n';
  CHECK(rows == run1.cells.size() + 1);

  for (const auto& cell : run1.cells) {
    if (cell.s == 0) CHECK(cell.success_rate == 1.0);  // zero vector always recovered
    if (cell.m == 8) CHECK(cell.success_rate == 1.0);  // m = N: unique solution
    CHECK(cell.trial_seeds.size() == static_cast<size_t>(cfg.trials));
  }

  CHECK(xml_well_formed(run1.svg));
}

TEST_CASE("per-trial seeds reproduce in isolation") {
  CHECK(trial_seed(1, 8, 4, 2, 3) == trial_seed(1, 8, 4, 2, 3));
  CHECK(trial_seed(1, 8, 4, 2, 3) != trial_seed(1, 8, 4, 2, 4));
  CHECK(trial_seed(1, 8, 4, 2, 3) != trial_seed(2, 8, 4, 2, 3));
}

TEST_CASE("stability campaign flags hypothesis-unmet cells") {
  ExperimentConfig cfg;
  cfg.campaign = "stability";
  cfg.Ns = {12};
  cfg.ss = {1};
  cfg.m_rule.kind = MRule::Kind::explicit_list;
  cfg.m_rule.values = {10};
  cfg.trials = 2;
  cfg.seed = 3;
  const CampaignResult run = run_stability(cfg);
  REQUIRE(run.cells.size() == 1);
  // a 10x12 variance-1/m Gaussian never has delta_2 below sqrt(2)-1
  CHECK(run.cells[0].skipped);
  CHECK(run.cells[0].skip_reason == "hypothesis unmet: delta_{2s} >= sqrt(2)-1");
  CHECK(run.cells[0].delta >= std::sqrt(2.0) - 1.0);
}

TEST_CASE("width sweep campaign emits rows with rate bands") {
  ExperimentConfig cfg;
  cfg.campaign = "widths";
  cfg.Ns = {16, 32};
  cfg.m_rule.kind = MRule::Kind::alpha_fraction;
  cfg.m_rule.alpha = 0.25;
  cfg.ps = {1.0};
  cfg.q = 2.0;
  cfg.width_starts = 8;
  cfg.width_iterations = 40;
  cfg.max_certified_s = 1;
  cfg.seed = 5;
  const CampaignResult run = run_width_sweep(cfg);
  REQUIRE(run.width_rows.size() == 2);
  for (const auto& row : run.width_rows) {
    CHECK(row.estimate.empirical_lower > 0.0);
    CHECK(row.estimate.empirical_lower >= row.band.vybiral - 1e-6);
    CHECK(row.band.rate > 0.0);
    if (row.estimate.certified_upper) {
      CHECK(*row.estimate.certified_upper >= row.estimate.empirical_lower - 1e-9);
    } else {
      CHECK(row.certified_note.find("unavailable") == 0);
    }
  }
  CHECK(xml_well_formed(run.svg));

  const CampaignResult again = run_width_sweep(cfg);
  CHECK(run.csv == again.csv);
  CHECK(run.json.dump() == again.json.dump());
}

TEST_CASE("pack-demo campaign") {
  ExperimentConfig cfg;
  cfg.campaign = "pack-demo";
  cfg.Ns = {8, 16};
  cfg.ss = {2};
  const CampaignResult run = run_pack_demo(cfg);
  CHECK(run.json["rows"].size() == 2);
  CHECK(xml_well_formed(run.svg));
  for (const auto& row : run.json["rows"]) {
    CHECK(row["check"]["sizes_ok"].get<bool>());
    CHECK(row["check"]["intersections_ok"].get<bool>());
    CHECK(row["check"]["size_bound_ok"].get<bool>());
  }
}

TEST_CASE("emit_outputs writes csv/json/svg plus sidecar metadata") {
  const ExperimentConfig cfg = tiny_phase_config();
  const CampaignResult result = run_phase_transition(cfg);
  const auto dir = std::filesystem::temp_directory_path() / "widthlab-test-out";
  std::filesystem::remove_all(dir);
  const EmittedFiles files = emit_outputs(result, dir);
  CHECK(std::filesystem::exists(files.csv));
  CHECK(std::filesystem::exists(files.json));
  CHECK(std::filesystem::exists(files.svg));
  CHECK(std::filesystem::exists(files.meta));

  // deterministic artifacts byte-for-byte on re-emission
  const auto dir2 = std::filesystem::temp_directory_path() / "widthlab-test-out2";
  std::filesystem::remove_all(dir2);
  const CampaignResult rerun = run_phase_transition(cfg);
  const EmittedFiles files2 = emit_outputs(rerun, dir2);
  CHECK(read_text_file(files.csv) == read_text_file(files2.csv));
  CHECK(read_text_file(files.json) == read_text_file(files2.json));
  CHECK(read_text_file(files.svg) == read_text_file(files2.svg));

  const Json parsed = Json::parse(read_text_file(files.json));
  CHECK(parsed["campaign"] == "phase");
  CHECK(parsed["cells"].size() == result.cells.size());
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(dir2);
}

TEST_CASE("run_campaign dispatch validates the campaign name") {
  ExperimentConfig cfg = tiny_phase_config();
  cfg.campaign = "bogus";
  CHECK_THROWS_AS(run_campaign(cfg), ConfigError);
}
