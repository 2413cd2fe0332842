#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvrf/gneiting.hpp"
#include "mvrf/models.hpp"
#include "mvrf/simulate.hpp"

namespace mvrf::io {

using nlohmann::json;

/// Raised on malformed configuration input; maps to the CLI usage/config
/// exit code rather than a mathematical failure.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path);

UnivariateVariogram parse_univariate_variogram(const json& j);
StationaryCovariance parse_stationary_covariance(const json& j);
CompletelyMonotoneSpec parse_completely_monotone(const json& j);
BernsteinSpec parse_bernstein(const json& j);
StieltjesSpec parse_stieltjes(const json& j);
PseudoVariogramModel parse_model(const json& j);
GneitingModel parse_gneiting(const json& j);

json to_json(const UnivariateVariogram& v);
json to_json(const StationaryCovariance& c);
json to_json(const CompletelyMonotoneSpec& s);
json to_json(const BernsteinSpec& s);
json to_json(const StieltjesSpec& s);
json to_json(const PseudoVariogramModel& m);
json to_json(const GneitingModel& m);

/// A simulation plan file: grids and replication plus the model pair that
/// drives the spectral sampler.
struct PlanFile {
  SimulationPlan plan;
  PseudoVariogramModel model;
  CompletelyMonotoneSpec phi;
  bool has_seed = false;
};

PlanFile parse_plan(const json& j);
json to_json(const PlanFile& p);

/// Shortest round-trippable decimal rendering of a double.
std::string format_double(double v);

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

/// Sample CSV layout: replicate (0-based), component (1-based),
/// space_index, time_index (0-based), value. LF line endings.
void write_fields_csv(std::ostream& os, const std::vector<FieldSample>& samples);
std::vector<FieldSample> read_fields_csv(std::istream& is);

}  // namespace mvrf::io
