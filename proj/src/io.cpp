#include "mvrf/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mvrf::io {

namespace {

[[noreturn]] void fail(const std::string& message) { throw ConfigError(message); }

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail("missing field '" + std::string(key) + "'");
  return *it;
}

double number(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) fail("field '" + std::string(key) + "' must be a number");
  return v.get<double>();
}

int integer(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) fail("field '" + std::string(key) + "' must be an integer");
  return v.get<int>();
}

std::string text(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) fail("field '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

Vec parse_vector(const json& j) {
  if (!j.is_array() || j.empty()) fail("expected a non-empty numeric array");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number()) fail("expected a numeric array");
    v[static_cast<Eigen::Index>(k)] = j[k].get<double>();
  }
  return v;
}

std::vector<Vec> parse_vector_list(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) fail(std::string(what) + " must be a non-empty array");
  std::vector<Vec> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(parse_vector(item));
  return out;
}

json vector_to_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v[k]);
  return out;
}

json vector_list_to_json(const std::vector<Vec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

TabulatedEntry parse_tabulated_entry(const json& j) {
  const std::string kind = text(j, "kind");
  if (kind == "zero") return TabulatedEntry::zero();
  if (kind == "constant") return TabulatedEntry::constant(number(j, "value"));
  if (kind == "power_norm")
    return TabulatedEntry::power_norm(number(j, "coefficient"), number(j, "exponent"));
  if (kind == "linear_sum") return TabulatedEntry::linear_sum(number(j, "coefficient"));
  fail("unknown tabulated entry kind '" + kind + "'");
}

json tabulated_entry_to_json(const TabulatedEntry& e) {
  switch (e.kind) {
    case TabulatedEntry::Kind::Zero:
      return json{{"kind", "zero"}};
    case TabulatedEntry::Kind::Constant:
      return json{{"kind", "constant"}, {"value", e.coefficient}};
    case TabulatedEntry::Kind::PowerNorm:
      return json{{"kind", "power_norm"}, {"coefficient", e.coefficient}, {"exponent", e.exponent}};
    case TabulatedEntry::Kind::LinearSum:
      return json{{"kind", "linear_sum"}, {"coefficient", e.coefficient}};
  }
  fail("unknown tabulated entry kind");
}

ShiftedCndFunction parse_shifted_cnd(const json& j) {
  return ShiftedCndFunction{number(j, "offset"), parse_model(require(j, "model"))};
}

json shifted_cnd_to_json(const ShiftedCndFunction& f) {
  return json{{"offset", f.offset}, {"model", to_json(f.model)}};
}

template <typename Fn>
auto wrap_config_errors(const Fn& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  } catch (const std::out_of_range& e) {
    fail(e.what());
  }
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

UnivariateVariogram parse_univariate_variogram(const json& j) {
  return wrap_config_errors([&] {
    const std::string kind = text(j, "kind");
    if (kind == "power")
      return UnivariateVariogram::power(number(j, "scale"), number(j, "exponent"));
    fail("unknown univariate variogram kind '" + kind + "'");
  });
}

StationaryCovariance parse_stationary_covariance(const json& j) {
  return wrap_config_errors([&] {
    const std::string kind = text(j, "kind");
    if (kind == "exponential")
      return StationaryCovariance::exponential(number(j, "sill"), number(j, "range"));
    fail("unknown stationary covariance kind '" + kind + "'");
  });
}

CompletelyMonotoneSpec parse_completely_monotone(const json& j) {
  return wrap_config_errors([&] {
    const std::string kind = text(j, "kind");
    if (kind == "exp") return CompletelyMonotoneSpec::exponential(number(j, "rate"));
    if (kind == "inverse_power")
      return CompletelyMonotoneSpec::inverse_power(number(j, "scale"), number(j, "shape"));
    fail("unknown completely monotone kind '" + kind + "'");
  });
}

BernsteinSpec parse_bernstein(const json& j) {
  return wrap_config_errors([&] {
    const std::string kind = text(j, "kind");
    if (kind == "power") return BernsteinSpec::power(number(j, "exponent"));
    if (kind == "log") return BernsteinSpec::log();
    if (kind == "bounded_exp") return BernsteinSpec::bounded_exp(number(j, "rate"));
    if (kind == "affine") return BernsteinSpec::affine(number(j, "intercept"), number(j, "slope"));
    fail("unknown Bernstein kind '" + kind + "'");
  });
}

StieltjesSpec parse_stieltjes(const json& j) {
  return wrap_config_errors([&] {
    const json& coeffs = require(j, "coefficients");
    if (!coeffs.is_array() || coeffs.empty()) fail("coefficients must be a non-empty matrix");
    const std::size_t m = coeffs.size();
    Mat b(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t r = 0; r < m; ++r) {
      if (!coeffs[r].is_array() || coeffs[r].size() != m) fail("coefficients must be square");
      for (std::size_t c = 0; c < m; ++c)
        b(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = coeffs[r][c].get<double>();
    }
    const json& support = require(j, "support");
    if (!support.is_array() || support.size() != 2) fail("support must be [lo, hi]");
    return StieltjesSpec(number(j, "order"), number(j, "constant"), std::move(b),
                         support[0].get<double>(), support[1].get<double>());
  });
}

PseudoVariogramModel parse_model(const json& j) {
  return wrap_config_errors([&] {
    const std::string variant = text(j, "variant");
    if (variant == "shift") {
      PseudoVariogramModel::Shift v{parse_univariate_variogram(require(j, "gamma0")),
                                    parse_vector_list(require(j, "delays"), "delays")};
      return PseudoVariogramModel(std::move(v));
    }
    if (variant == "noisy_common") {
      PseudoVariogramModel::NoisyCommon v{integer(j, "dim"),
                                          parse_univariate_variogram(require(j, "gamma0")),
                                          {}};
      const json& sig = require(j, "noise_variances");
      if (!sig.is_array() || sig.empty()) fail("noise_variances must be a non-empty array");
      for (const auto& s : sig) v.noise_variances.push_back(s.get<double>());
      return PseudoVariogramModel(std::move(v));
    }
    if (variant == "delayed_lmc") {
      PseudoVariogramModel::DelayedLmc v;
      v.dim = integer(j, "dim");
      const json& factors = require(j, "factors");
      if (!factors.is_array() || factors.empty()) fail("factors must be a non-empty array");
      for (const auto& f : factors) {
        PseudoVariogramModel::LmcFactor factor{
            parse_stationary_covariance(require(f, "covariance")),
            parse_vector(require(f, "loadings")),
            parse_vector_list(require(f, "delays"), "delays")};
        v.factors.push_back(std::move(factor));
      }
      return PseudoVariogramModel(std::move(v));
    }
    if (variant == "composed") {
      PseudoVariogramModel::Composed v{
          parse_bernstein(require(j, "outer")),
          std::make_shared<PseudoVariogramModel>(parse_model(require(j, "base")))};
      return PseudoVariogramModel(std::move(v));
    }
    if (variant == "tabulated") {
      PseudoVariogramModel::Tabulated v;
      v.dim = integer(j, "dim");
      const json& entries = require(j, "entries");
      if (!entries.is_array() || entries.empty()) fail("entries must be a non-empty matrix");
      for (const auto& row : entries) {
        if (!row.is_array() || row.size() != entries.size()) fail("entries must be square");
        std::vector<TabulatedEntry> parsed;
        for (const auto& e : row) parsed.push_back(parse_tabulated_entry(e));
        v.entries.push_back(std::move(parsed));
      }
      return PseudoVariogramModel(std::move(v));
    }
    fail("unknown model variant '" + variant + "'");
  });
}

GneitingModel parse_gneiting(const json& j) {
  return wrap_config_errors([&] {
    const std::string variant = text(j, "variant");
    if (variant == "original") {
      GneitingModel::Original v{parse_completely_monotone(require(j, "phi")),
                                parse_bernstein(require(j, "psi")), integer(j, "spatial_dim")};
      return GneitingModel(std::move(v));
    }
    if (variant == "multivariate_extended") {
      GneitingModel::MultivariateExtended v{
          parse_completely_monotone(require(j, "phi")), parse_model(require(j, "gamma")),
          number(j, "exponent"), integer(j, "spatial_dim")};
      return GneitingModel(std::move(v));
    }
    if (variant == "stieltjes") {
      GneitingModel::Stieltjes v{parse_stieltjes(require(j, "stieltjes")),
                                 parse_shifted_cnd(require(j, "g")),
                                 parse_shifted_cnd(require(j, "f")), number(j, "exponent")};
      return GneitingModel(std::move(v));
    }
    fail("unknown space-time model variant '" + variant + "'");
  });
}

json to_json(const UnivariateVariogram& v) {
  return json{{"kind", "power"}, {"scale", v.scale()}, {"exponent", v.exponent()}};
}

json to_json(const StationaryCovariance& c) {
  return json{{"kind", "exponential"}, {"sill", c.sill()}, {"range", c.range()}};
}

json to_json(const CompletelyMonotoneSpec& s) {
  switch (s.kind()) {
    case CompletelyMonotoneSpec::Kind::Exp:
      return json{{"kind", "exp"}, {"rate", s.rate()}};
    case CompletelyMonotoneSpec::Kind::InversePower:
      return json{{"kind", "inverse_power"}, {"scale", s.scale()}, {"shape", s.shape()}};
  }
  fail("unknown completely monotone kind");
}

json to_json(const BernsteinSpec& s) {
  switch (s.kind()) {
    case BernsteinSpec::Kind::Power:
      return json{{"kind", "power"}, {"exponent", s.exponent()}};
    case BernsteinSpec::Kind::Log:
      return json{{"kind", "log"}};
    case BernsteinSpec::Kind::BoundedExp:
      return json{{"kind", "bounded_exp"}, {"rate", s.rate()}};
    case BernsteinSpec::Kind::Affine:
      return json{{"kind", "affine"}, {"intercept", s.intercept()}, {"slope", s.slope()}};
  }
  fail("unknown Bernstein kind");
}

json to_json(const StieltjesSpec& s) {
  json coeffs = json::array();
  for (Eigen::Index r = 0; r < s.coefficients().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < s.coefficients().cols(); ++c)
      row.push_back(s.coefficients()(r, c));
    coeffs.push_back(std::move(row));
  }
  return json{{"order", s.order()},
              {"constant", s.constant()},
              {"coefficients", std::move(coeffs)},
              {"support", json::array({s.support_lo(), s.support_hi()})}};
}

json to_json(const PseudoVariogramModel& m) {
  struct Visitor {
    json operator()(const PseudoVariogramModel::Shift& v) const {
      return json{{"variant", "shift"},
                  {"gamma0", to_json(v.gamma0)},
                  {"delays", vector_list_to_json(v.delays)}};
    }
    json operator()(const PseudoVariogramModel::NoisyCommon& v) const {
      return json{{"variant", "noisy_common"},
                  {"dim", v.dim},
                  {"gamma0", to_json(v.gamma0)},
                  {"noise_variances", v.noise_variances}};
    }
    json operator()(const PseudoVariogramModel::DelayedLmc& v) const {
      json factors = json::array();
      for (const auto& f : v.factors)
        factors.push_back(json{{"covariance", to_json(f.covariance)},
                               {"loadings", vector_to_json(f.loadings)},
                               {"delays", vector_list_to_json(f.delays)}});
      return json{{"variant", "delayed_lmc"}, {"dim", v.dim}, {"factors", std::move(factors)}};
    }
    json operator()(const PseudoVariogramModel::Composed& v) const {
      return json{{"variant", "composed"}, {"outer", to_json(v.outer)}, {"base", to_json(*v.base)}};
    }
    json operator()(const PseudoVariogramModel::Tabulated& v) const {
      json entries = json::array();
      for (const auto& row : v.entries) {
        json out_row = json::array();
        for (const auto& e : row) out_row.push_back(tabulated_entry_to_json(e));
        entries.push_back(std::move(out_row));
      }
      return json{{"variant", "tabulated"}, {"dim", v.dim}, {"entries", std::move(entries)}};
    }
  };
  return std::visit(Visitor{}, m.variant());
}

json to_json(const GneitingModel& m) {
  struct Visitor {
    json operator()(const GneitingModel::Original& v) const {
      return json{{"variant", "original"},
                  {"phi", to_json(v.phi)},
                  {"psi", to_json(v.psi)},
                  {"spatial_dim", v.spatial_dim}};
    }
    json operator()(const GneitingModel::MultivariateExtended& v) const {
      return json{{"variant", "multivariate_extended"},
                  {"phi", to_json(v.phi)},
                  {"gamma", to_json(v.gamma)},
                  {"exponent", v.exponent},
                  {"spatial_dim", v.spatial_dim}};
    }
    json operator()(const GneitingModel::Stieltjes& v) const {
      return json{{"variant", "stieltjes"},
                  {"stieltjes", to_json(v.stieltjes)},
                  {"g", shifted_cnd_to_json(v.g)},
                  {"f", shifted_cnd_to_json(v.f)},
                  {"exponent", v.exponent}};
    }
  };
  return std::visit(Visitor{}, m.variant());
}

PlanFile parse_plan(const json& j) {
  return wrap_config_errors([&] {
    SimulationPlan plan;
    plan.spatial_grid = parse_vector_list(require(j, "spatial_grid"), "spatial_grid");
    plan.temporal_grid = parse_vector_list(require(j, "temporal_grid"), "temporal_grid");
    plan.replicates = integer(j, "replicates");
    bool has_seed = false;
    if (j.contains("seed")) {
      if (!j["seed"].is_number_integer()) fail("field 'seed' must be an integer");
      plan.seed = j["seed"].get<std::uint64_t>();
      has_seed = true;
    }
    if (j.contains("normalize")) {
      if (!j["normalize"].is_boolean()) fail("field 'normalize' must be a boolean");
      plan.normalize = j["normalize"].get<bool>();
    }
    if (j.contains("workers")) plan.workers = integer(j, "workers");
    plan.validate();
    PlanFile file{std::move(plan), parse_model(require(j, "model")),
                  parse_completely_monotone(require(j, "phi")), has_seed};
    if (file.model.dim() != file.plan.temporal_dim())
      fail("model dimension does not match the temporal grid");
    return file;
  });
}

json to_json(const PlanFile& p) {
  json j{{"spatial_grid", vector_list_to_json(p.plan.spatial_grid)},
         {"temporal_grid", vector_list_to_json(p.plan.temporal_grid)},
         {"replicates", p.plan.replicates},
         {"normalize", p.plan.normalize},
         {"workers", p.plan.workers},
         {"model", to_json(p.model)},
         {"phi", to_json(p.phi)}};
  if (p.has_seed) j["seed"] = p.plan.seed;
  return j;
}

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) os << ',';
    const std::string& f = fields[k];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      os << '"';
      for (char c : f) {
        if (c == '"') os << '"';
        os << c;
      }
      os << '"';
    } else {
      os << f;
    }
  }
  os << '\n';
}

void write_fields_csv(std::ostream& os, const std::vector<FieldSample>& samples) {
  write_csv_row(os, {"replicate", "component", "space_index", "time_index", "value"});
  for (std::size_t r = 0; r < samples.size(); ++r) {
    const FieldSample& z = samples[r];
    for (int p = 0; p < z.variates; ++p)
      for (int s = 0; s < z.n_space; ++s)
        for (int t = 0; t < z.n_time; ++t)
          write_csv_row(os, {std::to_string(r), std::to_string(p + 1), std::to_string(s),
                             std::to_string(t), format_double(z.at(p, s, t))});
  }
}

std::vector<FieldSample> read_fields_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) fail("empty sample CSV");

  struct Row {
    std::size_t replicate;
    int component, space, time;
    double value;
  };
  std::vector<Row> rows;
  std::size_t max_rep = 0;
  int max_comp = 0, max_space = 0, max_time = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    Row row{};
    try {
      std::getline(ss, field, ',');
      row.replicate = static_cast<std::size_t>(std::stoull(field));
      std::getline(ss, field, ',');
      row.component = std::stoi(field);
      std::getline(ss, field, ',');
      row.space = std::stoi(field);
      std::getline(ss, field, ',');
      row.time = std::stoi(field);
      std::getline(ss, field, ',');
      row.value = std::stod(field);
    } catch (const std::exception&) {
      fail("malformed sample CSV row: " + line);
    }
    if (row.component < 1 || row.space < 0 || row.time < 0)
      fail("malformed sample CSV indices: " + line);
    max_rep = std::max(max_rep, row.replicate);
    max_comp = std::max(max_comp, row.component);
    max_space = std::max(max_space, row.space);
    max_time = std::max(max_time, row.time);
    rows.push_back(row);
  }
  if (rows.empty()) fail("sample CSV contains no data rows");

  const std::size_t n_rep = max_rep + 1;
  const int m = max_comp, ns = max_space + 1, nt = max_time + 1;
  const std::size_t expected =
      n_rep * static_cast<std::size_t>(m) * static_cast<std::size_t>(ns) *
      static_cast<std::size_t>(nt);
  if (rows.size() != expected) fail("sample CSV is not a dense replicate grid");

  std::vector<FieldSample> samples(n_rep, FieldSample::zeros(m, ns, nt));
  for (const Row& row : rows)
    samples[row.replicate].at(row.component - 1, row.space, row.time) = row.value;
  return samples;
}

}  // namespace mvrf::io
