#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "widthlab/certify.hpp"
#include "widthlab/linalg.hpp"
#include "widthlab/packing.hpp"
#include "widthlab/solvers.hpp"
#include "widthlab/vectors.hpp"
#include "widthlab/widths.hpp"

namespace widthlab {

using Json = nlohmann::ordered_json;

// Matrix file: CSV, header line "m,N", then row-major entries.
MeasurementMatrix load_matrix_csv(const std::filesystem::path& path);
void save_matrix_csv(const std::filesystem::path& path, const MeasurementMatrix& M);

// Vector file: JSON array of doubles, or CSV lines "i,value" (1-based, sparse).
RealVector load_vector_file(const std::filesystem::path& path);

Json vector_to_json(const RealVector& x);
RealVector vector_from_json(const Json& j);

// Families use 1-based indices on disk.
Json family_to_json(const PackingFamily& f);
PackingFamily family_from_json(const Json& j);
Json packing_check_to_json(const PackingCheck& c);

Json recovery_to_json(const RecoveryResult& r);
Json rip_to_json(const RipEstimate& r);
Json nsp_to_json(const NspReport& r);
Json rate_band_to_json(const RateBand& b);
Json width_estimate_to_json(const WidthEstimate& w);
Json em_report_to_json(const EmErrorReport& r);

std::string format_double(double v);  // fixed "%.17g" round-trip format

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace widthlab
