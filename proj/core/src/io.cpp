#include "widthlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "widthlab/errors.hpp"

namespace widthlab {

namespace {

std::vector<double> parse_csv_numbers(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(std::stod(tok));
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path.string());
  out << content;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MeasurementMatrix load_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix file: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("matrix file empty: " + path.string());
  const auto header = parse_csv_numbers(line);
  if (header.size() != 2) throw ConfigError("matrix file: first line must be 'm,N'");
  const int m = static_cast<int>(header[0]);
  const int N = static_cast<int>(header[1]);
  if (m < 1 || N < 1) throw ConfigError("matrix file: invalid dimensions");

  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(m) * N);
  while (std::getline(in, line)) {
    for (double v : parse_csv_numbers(line)) entries.push_back(v);
  }
  if (entries.size() != static_cast<size_t>(m) * N) {
    throw ConfigError("matrix file: expected " + std::to_string(m * N) + " entries, got " +
                      std::to_string(entries.size()));
  }
  Matrix A(m, N);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < N; ++j) A(i, j) = entries[static_cast<size_t>(i) * N + j];
  }
  if (!A.allFinite()) throw ConfigError("matrix file: entries must be finite");
  return {std::move(A), "file:" + path.filename().string()};
}

void save_matrix_csv(const std::filesystem::path& path, const MeasurementMatrix& M) {
  std::string out = std::to_string(M.rows()) + "," + std::to_string(M.cols()) + "\n";
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) {
      out += format_double(M.A(i, j));
      out += j + 1 < M.cols() ? ',' : '\n';
    }
  }
  write_text_file(path, out);
}

RealVector load_vector_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ConfigError("vector file empty: " + path.string());

  if (text[first] == '[') {
    return vector_from_json(Json::parse(text));
  }
  // CSV "i,value" rows, 1-based indices; missing indices are zero.
  std::stringstream ss(text);
  std::string line;
  std::vector<std::pair<int, double>> pairs;
  int max_index = 0;
  while (std::getline(ss, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto nums = parse_csv_numbers(line);
    if (nums.size() != 2) throw ConfigError("vector file: expected 'i,value' rows");
    const int i = static_cast<int>(nums[0]);
    if (i < 1) throw ConfigError("vector file: indices are 1-based");
    pairs.emplace_back(i, nums[1]);
    max_index = std::max(max_index, i);
  }
  RealVector x = RealVector::Zero(max_index);
  for (const auto& [i, v] : pairs) x[i - 1] = v;
  if (!x.allFinite()) throw ConfigError("vector file: entries must be finite");
  return x;
}

Json vector_to_json(const RealVector& x) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) arr.push_back(x[i]);
  return arr;
}

RealVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("vector JSON must be an array");
  RealVector x(j.size());
  for (size_t i = 0; i < j.size(); ++i) x[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  if (!x.allFinite()) throw ConfigError("vector JSON: entries must be finite");
  return x;
}

Json family_to_json(const PackingFamily& f) {
  Json sets = Json::array();
  for (const auto& set : f.sets) {
    Json one = Json::array();
    for (int i : set) one.push_back(i + 1);
    sets.push_back(std::move(one));
  }
  return Json{{"N", f.N}, {"s", f.s}, {"sets", std::move(sets)}};
}

PackingFamily family_from_json(const Json& j) {
  PackingFamily f;
  f.N = j.at("N").get<int>();
  f.s = j.at("s").get<int>();
  for (const auto& set : j.at("sets")) {
    std::vector<int> one;
    for (const auto& i : set) one.push_back(i.get<int>() - 1);
    std::sort(one.begin(), one.end());
    f.sets.push_back(std::move(one));
  }
  return f;
}

Json packing_check_to_json(const PackingCheck& c) {
  return Json{{"sizes_ok", c.sizes_ok},
              {"intersections_ok", c.intersections_ok},
              {"size_bound_ok", c.size_bound_ok},
              {"violating_i", c.violating_i},
              {"violating_j", c.violating_j},
              {"detail", c.detail}};
}

Json recovery_to_json(const RecoveryResult& r) {
  return Json{{"status", to_string(r.status)},
              {"objective", r.objective},
              {"residual", r.residual},
              {"iterations", r.iterations},
              {"solution", vector_to_json(r.solution)}};
}

Json rip_to_json(const RipEstimate& r) {
  Json witness = Json::array();
  for (int i : r.witness_support) witness.push_back(i + 1);
  return Json{{"s", r.s},
              {"delta", r.delta},
              {"method", r.method == RipMethod::exhaustive ? "exhaustive" : "sampled"},
              {"supports_examined", r.supports_examined},
              {"witness_support", std::move(witness)}};
}

Json nsp_to_json(const NspReport& r) {
  Json j{{"s", r.s},
         {"p", r.p},
         {"method", to_string(r.method)},
         {"holds", r.holds},
         {"worst_ratio", r.worst_ratio},
         {"boundary", r.boundary},
         {"refutation_only", r.refutation_only},
         {"instances_examined", r.instances_examined}};
  if (r.witness) {
    Json support = Json::array();
    for (int i : r.witness->support) support.push_back(i + 1);
    j["witness"] = Json{{"ratio", r.witness->ratio},
                        {"support", std::move(support)},
                        {"v", vector_to_json(r.witness->v)}};
  }
  return j;
}

Json rate_band_to_json(const RateBand& b) {
  Json j{{"N", b.N},       {"m", b.m},
         {"p", b.p},       {"q", b.q},
         {"rate", b.rate}, {"alt_rate", b.alt_rate},
         {"lower_const", b.lower_const},
         {"vybiral", b.vybiral}};
  if (b.upper_q2) j["upper_q2"] = *b.upper_q2;
  if (b.sqrt_m_floor) j["sqrt_m_floor"] = *b.sqrt_m_floor;
  return j;
}

Json width_estimate_to_json(const WidthEstimate& w) {
  Json j{{"empirical_lower", w.empirical_lower},
         {"provenance", w.provenance},
         {"diagnostics",
          Json{{"starts", w.diag.starts},
               {"evaluations", w.diag.evaluations},
               {"kernel_dimension", w.diag.kernel_dimension},
               {"best_source", w.diag.best_source},
               {"coordinate_candidate", w.diag.coordinate_candidate},
               {"contradiction_flag", w.diag.contradiction_flag}}}};
  if (w.certified_upper) {
    j["certified_upper"] = *w.certified_upper;
  } else {
    j["certified_upper"] = nullptr;
  }
  return j;
}

Json em_report_to_json(const EmErrorReport& r) {
  return Json{{"sampler", r.sampler},   {"trials", r.trials},
              {"worst_error", r.worst_error}, {"mean_error", r.mean_error},
              {"c1", r.c1},             {"c2", r.c2},
              {"tie_failures", r.tie_failures}};
}

}  // namespace widthlab
