// SPDX-License-Identifier: Apache-2.0
#include "finapp/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace finapp {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what(), e.byte);
  }
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + hex;
}

namespace {

Cost cost_from_json(const json& j) {
  if (j.is_string()) return parse_cost(j.get<std::string>());
  if (j.is_number_unsigned() || j.is_number_integer()) {
    auto n = j.get<long long>();
    if (n < 0) throw FormatError("negative cost " + j.dump());
    return Cost(static_cast<long>(n));
  }
  throw FormatError("cost must be a string such as \"1/2\" or \"inf\", got " + j.dump());
}

PointSet labels_from_json(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw FormatError(std::string("missing array '") + key + "'");
  }
  std::vector<std::string> labels;
  for (const auto& l : j.at(key)) {
    if (!l.is_string()) throw FormatError(std::string("labels in '") + key + "' must be strings");
    labels.push_back(l.get<std::string>());
  }
  try {
    return PointSet(std::move(labels));
  } catch (const ShapeError& e) {
    throw FormatError(e.what());
  }
}

std::vector<Cost> rows_from_json(const json& j, const char* key, std::size_t rows,
                                 std::size_t cols) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw FormatError(std::string("missing array '") + key + "'");
  }
  const json& m = j.at(key);
  if (m.size() != rows) {
    throw FormatError(std::string("'") + key + "' has " + std::to_string(m.size()) +
                      " rows, expected " + std::to_string(rows));
  }
  std::vector<Cost> out;
  out.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!m[r].is_array() || m[r].size() != cols) {
      throw FormatError(std::string("row ") + std::to_string(r) + " of '" + key +
                        "' must have " + std::to_string(cols) + " entries");
    }
    for (const auto& e : m[r]) out.push_back(cost_from_json(e));
  }
  return out;
}

json rows_to_json(const NumRel& r) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < r.cols(); ++k) row.push_back(to_string(r.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

NumRel matrix_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("matrix file must hold a JSON object");
  PointSet rows = labels_from_json(j, "rows");
  PointSet cols = labels_from_json(j, "cols");
  auto entries = rows_from_json(j, "entries", rows.size(), cols.size());
  return NumRel(std::move(rows), std::move(cols), std::move(entries));
}

json matrix_to_json(const NumRel& r) {
  return json{{"rows", r.source().labels()},
              {"cols", r.target().labels()},
              {"entries", rows_to_json(r)}};
}

NumRel space_matrix_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("space file must hold a JSON object");
  PointSet pts = labels_from_json(j, "points");
  auto entries = rows_from_json(j, "conv", pts.size(), pts.size());
  return NumRel(pts, pts, std::move(entries));
}

ApproachSpace space_from_json(const json& j, bool pseudo) {
  NumRel m = space_matrix_from_json(j);
  return pseudo ? ApproachSpace::pseudo(std::move(m))
                : ApproachSpace::from_matrix(std::move(m));
}

json space_to_json(const ApproachSpace& s) {
  return json{{"points", s.points().labels()}, {"conv", rows_to_json(s.matrix())}};
}

std::vector<Cost> function_from_json(const json& j, const PointSet& points) {
  if (!j.is_object() || !j.contains("values") || !j.at("values").is_object()) {
    throw FormatError("function file must hold {\"values\": {label: cost}}");
  }
  const json& vals = j.at("values");
  std::vector<Cost> out;
  for (const auto& l : points.labels()) {
    if (!vals.contains(l)) throw FormatError("function has no value at '" + l + "'");
    out.push_back(cost_from_json(vals.at(l)));
  }
  for (const auto& [k, _] : vals.items()) {
    if (!points.contains(k)) throw FormatError("function names unknown point '" + k + "'");
  }
  return out;
}

json function_to_json(const PointSet& points, const std::vector<Cost>& values) {
  json vals = json::object();
  for (std::size_t i = 0; i < points.size(); ++i) vals[points.label(i)] = to_string(values.at(i));
  return json{{"values", vals}};
}

json envelope(std::string_view command, const std::vector<InputFile>& inputs, json result) {
  json files = json::array();
  for (const auto& f : inputs) files.push_back({{"name", f.name}, {"digest", digest(f.bytes)}});
  return json{{"tool", "finapp"},
              {"version", std::string(kToolVersion)},
              {"command", std::string(command)},
              {"inputs", files},
              {"result", std::move(result)}};
}

json to_json(const AxiomReport& r, const PointSet& points) {
  json out{{"valid", r.ok()}};
  if (r.ok()) return out;
  out["failure"] = r.failure == AxiomReport::Failure::reflexivity ? "reflexivity" : "transitivity";
  json w = json::array();
  for (auto i : r.witness) w.push_back(points.label(i));
  out["witness"] = w;
  out["lhs"] = to_string(r.lhs);
  out["rhs"] = to_string(r.rhs);
  out["message"] = r.describe(points);
  return out;
}

json to_json(const ExpReport& r, const PointSet& points) {
  json out{{"method", to_string(r.method)},
           {"exponentiable", r.exponentiable},
           {"stats", {{"pairs", r.pairs_examined}, {"candidates", r.candidates_examined}}}};
  if (r.witness) {
    const auto& w = *r.witness;
    out["witness"] = {{"z", points.label(w.z)},
                      {"x0", points.label(w.x0)},
                      {"u", to_string(w.u)},
                      {"v", to_string(w.v)},
                      {"lhs", to_string(w.lhs)},
                      {"rhs", to_string(w.rhs)},
                      {"argmin_y", points.label(w.argmin_y)}};
  }
  if (r.offending_entry) {
    out["offending_entry"] = {{"z", points.label(r.offending_entry->first)},
                              {"x", points.label(r.offending_entry->second)}};
  }
  return out;
}

json to_json(const ReplayReport& r, const PointSet& points) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"name", s.name},
                     {"statement", s.statement},
                     {"relation", s.relation},
                     {"lhs", to_string(s.lhs)},
                     {"rhs", to_string(s.rhs)},
                     {"holds", s.holds}});
  }
  json out{{"z", r.z},
           {"x0", r.x0},
           {"u", to_string(r.u)},
           {"v", to_string(r.v)},
           {"ultrafilters", {{"X", r.big_x}, {"p", r.p}, {"P", r.big_p}, {"Q", r.big_q}}},
           {"p_values", function_to_json(points, r.p_values)["values"]},
           {"phi", function_to_json(points, r.phi)["values"]},
           {"facts_hold", r.facts_hold()},
           {"chain_holds", r.chain_holds()},
           {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)},
           {"steps", steps},
           {"log", r.log}};
  return out;
}

}  // namespace finapp
