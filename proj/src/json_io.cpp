#include "orlicz/json_io.hpp"

#include <stdexcept>
#include <string>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(where + ": missing key \"" + key + "\"");
  return *it;
}

double number(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number()) throw std::invalid_argument(where + "." + key + ": expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_array()) throw std::invalid_argument(where + "." + key + ": expected an array");
  std::vector<double> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_number())
      throw std::invalid_argument(where + "." + key + "[" + std::to_string(k) + "]: expected a number");
    out.push_back(v[k].get<double>());
  }
  return out;
}

std::size_t count(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_unsigned()) throw std::invalid_argument(where + "." + key + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

OrliczFunction orlicz_from_json_at(const Json& j, const std::string& where) {
  const Json& kind = field(j, "kind", where);
  if (kind == "power") return OrliczFunction::power(number(j, "p", where), number(j, "scale", where));
  if (kind == "pwa") {
    auto knots = numbers(j, "knots", where);
    auto values = numbers(j, "values", where);
    if (j.contains("domain_bound")) {
      const double bound = number(j, "domain_bound", where);
      if (knots.empty() || knots.back() != bound)
        throw std::invalid_argument(where + ".domain_bound: must equal the last knot");
      return OrliczFunction::piecewise(
          PiecewiseAffine::with_domain_bound(std::move(knots), std::move(values)));
    }
    return OrliczFunction::piecewise(PiecewiseAffine::with_extension(
        std::move(knots), std::move(values), number(j, "ext_slope", where)));
  }
  throw std::invalid_argument(where + ".kind: expected \"power\" or \"pwa\"");
}

}  // namespace

Json to_json(const OrliczFunction& m) {
  Json j;
  if (const auto* p = m.as_power()) {
    j["kind"] = "power";
    j["p"] = p->exponent;
    j["scale"] = p->scale;
    return j;
  }
  const auto& f = *m.as_piecewise();
  j["kind"] = "pwa";
  j["knots"] = std::vector<double>(f.knots().begin(), f.knots().end());
  j["values"] = std::vector<double>(f.values().begin(), f.values().end());
  if (f.bounded())
    j["domain_bound"] = *f.domain_bound();
  else
    j["ext_slope"] = f.ext_slope();
  return j;
}

OrliczFunction orlicz_from_json(const Json& j) { return orlicz_from_json_at(j, "function"); }

Json to_json(const MusielakSystem& system) {
  Json j;
  j["n"] = system.dimension();
  j["functions"] = Json::array();
  for (const auto& m : system.functions()) j["functions"].push_back(to_json(m));
  return j;
}

MusielakSystem system_from_json(const Json& j) {
  const std::size_t n = count(j, "n", "system");
  const Json& list = field(j, "functions", "system");
  if (!list.is_array() || list.size() != n)
    throw std::invalid_argument("system.functions: expected an array of n entries");
  std::vector<OrliczFunction> functions;
  for (std::size_t i = 0; i < n; ++i)
    functions.push_back(orlicz_from_json_at(list[i], "system.functions[" + std::to_string(i) + "]"));
  return MusielakSystem(std::move(functions));
}

Json to_json(const WeightMatrix& a) {
  Json j;
  j["n"] = a.rows();
  j["N"] = a.cols();
  j["rows"] = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    j["rows"].push_back(std::vector<double>(row.begin(), row.end()));
  }
  return j;
}

WeightMatrix matrix_from_json(const Json& j) {
  const std::size_t n = count(j, "n", "matrix");
  const std::size_t big_n = count(j, "N", "matrix");
  const Json& rows = field(j, "rows", "matrix");
  if (!rows.is_array() || rows.size() != n)
    throw std::invalid_argument("matrix.rows: expected an array of n rows");
  std::vector<std::vector<double>> data;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "matrix.rows[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != big_n)
      throw std::invalid_argument(where + ": expected N numbers");
    std::vector<double> row;
    for (const auto& v : rows[i]) {
      if (!v.is_number()) throw std::invalid_argument(where + ": expected numbers");
      row.push_back(v.get<double>());
    }
    data.push_back(std::move(row));
  }
  return WeightMatrix::from_rows(data);
}

Json to_json(const AverageResult& r) {
  Json j;
  j["mode"] = std::string(to_string(r.mode));
  j["value"] = r.value;
  j["samples"] = r.samples;
  j["stderr"] = r.standard_error;
  return j;
}

Json to_json(const EquivalenceReport& r, bool with_ratios) {
  Json j;
  j["c_low"] = r.c_low;
  j["c_high"] = r.c_high;
  j["samples"] = r.samples();
  j["descriptor"] = r.descriptor;
  if (with_ratios) j["ratios"] = r.ratios;
  return j;
}

Json to_json(const DistortionReport& r, bool with_ratios) {
  Json j;
  j["ratio_min"] = r.ratio_min;
  j["ratio_max"] = r.ratio_max;
  j["distortion"] = r.distortion;
  j["samples"] = r.samples();
  j["scheme"] = r.scheme;
  j["note"] = "upper-bound witness for this embedding, not the Banach-Mazur distance";
  if (with_ratios) j["ratios"] = r.ratios;
  return j;
}

Json to_json(const ConstructionConfig& c) {
  Json j;
  j["n"] = c.n;
  j["tolerance"] = c.tolerance;
  j["max_depth"] = c.max_depth;
  j["fd_step"] = c.fd_step;
  j["t_min"] = c.cutoff();
  return j;
}

}  // namespace orlicz
