#include "osslab/model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace osslab {

using nlohmann::json;

namespace {

constexpr double kWriteCutoff = 1e-15;

std::string component_name(int i, int j, int k, int l) {  // 1-based for file messages
  std::ostringstream os;
  os << "[" << i + 1 << "," << j + 1 << "," << k + 1 << "," << l + 1 << "]";
  return os.str();
}

}  // namespace

json model_to_json(const CurvatureTensor& r, const json& generator) {
  const int n = r.dimension();
  json components = json::array();
  // Canonical minimal set: i<j, k<l, (i,j) <= (k,l), non-negligible, sorted
  // by the loop order itself.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (std::make_pair(i, j) > std::make_pair(k, l)) continue;
          const double v = r(i, j, k, l);
          if (std::abs(v) <= kWriteCutoff) continue;
          components.push_back({{"indices", {i + 1, j + 1, k + 1, l + 1}}, {"value", v}});
        }
  json out = {{"dimension", n}, {"components", std::move(components)}};
  if (!generator.is_null()) out["generator"] = generator;
  return out;
}

ModelFile model_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("model file must be a JSON object");
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw FormatError("model file is missing an integer \"dimension\"");
  const int n = j["dimension"].get<int>();
  if (n < CurvatureTensor::kMinDimension || n > CurvatureTensor::kMaxDimension)
    throw FormatError("dimension " + std::to_string(n) + " outside the supported range [2, 8]");

  std::vector<ComponentEntry> entries;
  if (j.contains("components")) {
    if (!j["components"].is_array()) throw FormatError("\"components\" must be an array");
    int pos = 0;
    for (const auto& c : j["components"]) {
      std::ostringstream where;
      where << "components[" << pos << "]";
      if (!c.is_object() || !c.contains("indices") || !c.contains("value") ||
          !c["indices"].is_array() || c["indices"].size() != 4 || !c["value"].is_number())
        throw FormatError(where.str() + ": expected {\"indices\": [i,j,k,l], \"value\": real}");
      int idx[4];
      for (int t = 0; t < 4; ++t) {
        if (!c["indices"][t].is_number_integer())
          throw FormatError(where.str() + ": indices must be integers");
        idx[t] = c["indices"][t].get<int>();
        if (idx[t] < 1 || idx[t] > n)
          throw FormatError(where.str() + ": index " + std::to_string(idx[t]) +
                            " out of range for dimension " + std::to_string(n));
      }
      entries.push_back(
          {idx[0] - 1, idx[1] - 1, idx[2] - 1, idx[3] - 1, c["value"].get<double>()});
      ++pos;
    }
  }

  try {
    ModelFile mf{canonicalize(n, entries), j.contains("generator") ? j["generator"] : json()};
    return mf;
  } catch (const ConflictingEntry& e) {
    throw FormatError("component " + component_name(e.i, e.j, e.k, e.l) +
                      " conflicts with an earlier component under the curvature symmetries "
                      "(existing " +
                      std::to_string(e.existing) + ", forced " + std::to_string(e.incoming) +
                      ")");
  } catch (const BianchiViolation& e) {
    throw FormatError(std::string("components violate the first Bianchi identity: ") +
                      e.what());
  }
}

void write_model(const std::filesystem::path& path, const CurvatureTensor& r,
                 const json& generator) {
  const json j = model_to_json(r, generator);
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << j.dump(2) << "\n";
  if (!f) throw IoError("failed while writing " + path.string());
}

ModelFile read_model(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path.string() + " for reading");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw FormatError("invalid JSON in " + path.string() + ": " + e.what());
  }
  return model_from_json(j);
}

json report_to_json(const CheckReport& r) {
  json out = {{"check", r.check},
              {"verdict", r.pass ? "pass" : "fail"},
              {"maxResidual", r.maxResidual},
              {"tolerance", r.threshold},
              {"samples", r.samplesUsed},
              {"marginal", r.marginal}};
  if (r.witness)
    out["witness"] = {{"direction", r.witness->direction},
                      {"eigenvalue", r.witness->eigenvalue},
                      {"residual", r.witness->residual}};
  return out;
}

json equivalence_to_json(const EquivalenceReport& r) {
  json out = {{"duality", report_to_json(r.duality)},
              {"osserman", report_to_json(r.osserman)},
              {"agree", r.agree}};
  if (r.exact) out["exact"] = report_to_json(*r.exact);
  if (r.exactConsistent) out["exactConsistent"] = *r.exactConsistent;
  return out;
}

}  // namespace osslab
