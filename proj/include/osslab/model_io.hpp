#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "osslab/checkers.hpp"
#include "osslab/report.hpp"
#include "osslab/tensor.hpp"

namespace osslab {

/// Model file format:
///   { "dimension": n,
///     "components": [ { "indices": [i,j,k,l], "value": v }, ... ],
///     "generator": { ... }   // optional provenance metadata
///   }
/// Indices are 1-based in files, 0-based internally. Unlisted components
/// default to the values forced by symmetry, or zero. The writer emits the
/// canonical minimal set: i<j, k<l, (i,j) <= (k,l) lexicographically,
/// magnitude above 1e-15, sorted; numbers round-trip exactly.
struct ModelFile {
  CurvatureTensor tensor;
  nlohmann::json generator;  // null when absent
};

nlohmann::json model_to_json(const CurvatureTensor& r,
                             const nlohmann::json& generator = nullptr);

/// Throws FormatError with a diagnostic naming the first offending
/// component for conflicting, out-of-range or Bianchi-violating inputs.
ModelFile model_from_json(const nlohmann::json& j);

void write_model(const std::filesystem::path& path, const CurvatureTensor& r,
                 const nlohmann::json& generator = nullptr);

ModelFile read_model(const std::filesystem::path& path);

/// Report file format:
///   { "check": name, "verdict": "pass"|"fail", "maxResidual": x,
///     "tolerance": t, "samples": n, "witness": {...}?, "marginal": flag }
nlohmann::json report_to_json(const CheckReport& r);

nlohmann::json equivalence_to_json(const EquivalenceReport& r);

}  // namespace osslab
