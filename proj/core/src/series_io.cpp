#include "jf/series_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace jf {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json series_to_json(const QZSeries& s) {
  ordered_json j;
  j["gridDenom"] = s.grid_denom();
  j["order"] = s.order() ? rational_to_string(*s.order()) : "inf";
  if (s.weight())
    j["weight"] = *s.weight();
  else
    j["weight"] = nullptr;
  if (s.index())
    j["index"] = *s.index();
  else
    j["index"] = nullptr;
  ordered_json coeffs = ordered_json::array();
  for (const auto& [n, p] : s.levels()) {
    for (const auto& [r, v] : p) {
      ordered_json e;
      e["n"] = n;
      e["r"] = r;
      e["v"] = rational_to_string(v);
      coeffs.push_back(std::move(e));
    }
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

QZSeries series_from_json(const json& j) {
  int grid = j.at("gridDenom").get<int>();
  std::optional<Rational> order;
  const auto& jo = j.at("order");
  if (jo.is_string() && jo.get<std::string>() != "inf")
    order = rational_from_string(jo.get<std::string>());
  else if (jo.is_number())
    order = Rational(jo.get<long>());

  std::map<long, ZetaPoly> levels;
  for (const auto& e : j.at("coeffs")) {
    long n = e.at("n").get<long>();
    long r = e.at("r").get<long>();
    Rational v = rational_from_string(e.at("v").get<std::string>());
    if (levels[n].count(r))
      throw std::invalid_argument("series JSON: duplicate coefficient entry");
    levels[n][r] = v;
  }
  QZSeries s = QZSeries::assemble(grid, order, std::move(levels));
  if (j.contains("weight") && !j.at("weight").is_null())
    s.set_weight(j.at("weight").get<int>());
  if (j.contains("index") && !j.at("index").is_null())
    s.set_index(j.at("index").get<int>());
  return s;
}

std::string series_to_string(const QZSeries& s) {
  return series_to_json(s).dump(2) + "\n";
}

QZSeries series_from_string(const std::string& text) {
  return series_from_json(json::parse(text));
}

void write_series_file(const std::string& path, const QZSeries& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << series_to_string(s);
  if (!out) throw std::runtime_error("write failed: " + path);
}

QZSeries read_series_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  json j = json::parse(in);
  return series_from_json(j);
}

}  // namespace jf
