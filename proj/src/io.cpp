#include "toric/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace toric {

using nlohmann::json;

namespace {

FanFile fromJson(const json& j) {
  FanFile file;
  if (!j.is_object()) throw Error("parse-error(root)", "fan file must be a JSON object");
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    throw Error("parse-error(rank)", "missing integer field 'rank'");
  file.fan.rank = j["rank"].get<int>();
  if (!j.contains("rays") || !j["rays"].is_array())
    throw Error("parse-error(rays)", "missing array field 'rays'");
  for (const auto& ray : j["rays"]) {
    if (!ray.is_array()) throw Error("parse-error(rays)", "each ray must be an array");
    VectorXz v(static_cast<Eigen::Index>(ray.size()));
    Eigen::Index i = 0;
    for (const auto& c : ray) {
      if (c.is_number_integer())
        v[i++] = Integer(c.get<long long>());
      else if (c.is_string())
        v[i++] = Integer(c.get<std::string>());
      else
        throw Error("parse-error(rays)", "ray coordinates must be integers");
    }
    file.fan.rays.push_back(std::move(v));
  }
  if (!j.contains("max_cones") || !j["max_cones"].is_array())
    throw Error("parse-error(max_cones)", "missing array field 'max_cones'");
  const int n = static_cast<int>(file.fan.rays.size());
  for (const auto& cone : j["max_cones"]) {
    if (!cone.is_array()) throw Error("parse-error(max_cones)", "each cone must be an array");
    std::vector<int> idx;
    for (const auto& c : cone) {
      if (!c.is_number_integer())
        throw Error("parse-error(max_cones)", "ray indices must be integers");
      int k = c.get<int>();
      if (k < 0 || k >= n)
        throw Error("parse-error(max_cones)", "ray index " + std::to_string(k) + " out of range");
      idx.push_back(k);
    }
    file.fan.maxCones.push_back(std::move(idx));
  }
  if (j.contains("pl_functions")) {
    if (!j["pl_functions"].is_object())
      throw Error("parse-error(pl_functions)", "'pl_functions' must be an object");
    for (const auto& [name, values] : j["pl_functions"].items()) {
      if (!values.is_array() || static_cast<int>(values.size()) != n)
        throw Error("parse-error(pl_functions)",
                    "'" + name + "' must list one value per ray");
      std::vector<Rational> u;
      for (const auto& v : values) {
        if (v.is_number_integer())
          u.push_back(Rational(v.get<long long>()));
        else if (v.is_string())
          u.push_back(parseRational(v.get<std::string>()));
        else
          throw Error("parse-error(pl_functions)", "values must be integers or rational strings");
      }
      file.plFunctions[name] = std::move(u);
    }
  }
  return file;
}

}  // namespace

FanFile parseFanJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("parse-error(json)", e.what());
  }
  return fromJson(j);
}

FanFile parseFanFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parseFanJson(buf.str());
}

std::string emitFanJson(const FanFile& file) {
  json j;
  j["rank"] = file.fan.rank;
  json rays = json::array();
  for (const auto& r : file.fan.rays) {
    json ray = json::array();
    for (Eigen::Index i = 0; i < r.size(); ++i) ray.push_back(r[i].convert_to<long long>());
    rays.push_back(ray);
  }
  j["rays"] = rays;
  json cones = json::array();
  for (const auto& c : file.fan.maxCones) cones.push_back(c);
  j["max_cones"] = cones;
  if (!file.plFunctions.empty()) {
    json pl = json::object();
    for (const auto& [name, values] : file.plFunctions) {
      json arr = json::array();
      for (const auto& v : values) arr.push_back(toString(v));
      pl[name] = arr;
    }
    j["pl_functions"] = pl;
  }
  return j.dump(2);
}

void emitCsv(const std::vector<CountRow>& rows, std::ostream& out) {
  long long prev = -1;
  for (const auto& r : rows)
    if (r.N < prev)
      throw Error("invariant-violation", "counts must be nondecreasing in B");
    else
      prev = r.N;
  out << "B,N,ties\n";
  for (const auto& r : rows) out << toString(r.B) << "," << r.N << "," << r.ties << "\n";
}

std::vector<CountRow> parseCsv(std::istream& in) {
  std::vector<CountRow> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.rfind("B,", 0) == 0) continue;  // header
    }
    std::stringstream ss(line);
    std::string bs, ns, ts;
    if (!std::getline(ss, bs, ',') || !std::getline(ss, ns, ','))
      throw Error("parse-error(csv)", "bad row: " + line);
    std::getline(ss, ts, ',');
    CountRow row;
    row.B = parseRational(bs);
    row.N = std::stoll(ns);
    row.ties = ts.empty() ? 0 : std::stoll(ts);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace toric
