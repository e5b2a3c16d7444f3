#pragma once

#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "raca/arithmeticity.hpp"
#include "raca/errors.hpp"
#include "raca/polyhedron.hpp"

namespace raca::io {

using Json = nlohmann::json;

namespace detail {

inline double parse_number(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw InputError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

inline int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw InputError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

}  // namespace detail

/// Accepts a decimal ("0.785398") or a rational multiple of pi: "pi",
/// "pi/4", "2pi/3", "2*pi/3", "-pi/6".
inline double parse_angle(std::string_view text) {
  const auto pos = text.find("pi");
  if (pos == std::string_view::npos) return detail::parse_number(text, "angle");

  double coefficient = 1.0;
  std::string_view head = text.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  if (head == "-") {
    coefficient = -1.0;
  } else if (head == "+") {
    coefficient = 1.0;
  } else if (!head.empty()) {
    coefficient = detail::parse_number(head, "angle coefficient");
  }

  std::string_view tail = text.substr(pos + 2);
  double denominator = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw InputError("cannot parse angle '" + std::string(text) + "'");
    denominator = detail::parse_number(tail.substr(1), "angle denominator");
    if (denominator == 0.0) throw InputError("angle '" + std::string(text) + "' divides by zero");
  }
  return coefficient * std::numbers::pi / denominator;
}

inline int parse_count(std::string_view text, std::string_view what) { return detail::parse_int(text, what); }

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

/// {"vertex_count": N, "faces": [[i, j, k, ...], ...]}
inline AbstractPolyhedron polyhedron_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertex_count") || !j.contains("faces"))
    throw InputError("polyhedron JSON needs 'vertex_count' and 'faces'");
  if (!j["vertex_count"].is_number_integer()) throw InputError("'vertex_count' must be an integer");
  if (!j["faces"].is_array()) throw InputError("'faces' must be an array");
  std::vector<Face> faces;
  for (const auto& f : j["faces"]) {
    if (!f.is_array()) throw InputError("each face must be an array of vertex indices");
    Face face;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw InputError("vertex indices must be integers");
      face.push_back(v.get<int>());
    }
    faces.push_back(std::move(face));
  }
  return {j["vertex_count"].get<int>(), std::move(faces)};
}

inline Json polyhedron_to_json(const AbstractPolyhedron& p) {
  return Json{{"vertex_count", p.vertex_count()}, {"faces", p.faces()}};
}

inline AbstractPolyhedron load_polyhedron(const std::string& path) { return polyhedron_from_json(read_json_file(path)); }

/// {"size": N, "m": [[1, 4, 2, ...], ...]} with "inf" for an infinite label.
inline CoxeterMatrix coxeter_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("m"))
    throw InputError("diagram JSON needs 'size' and 'm'");
  if (!j["size"].is_number_integer()) throw InputError("'size' must be an integer");
  const int n = j["size"].get<int>();
  const Json& rows = j["m"];
  if (n < 1 || !rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw InputError("'m' must have 'size' rows");
  std::vector<int> labels;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw InputError("every row of 'm' must have 'size' entries");
    for (const auto& entry : row) {
      if (entry.is_string() && entry.get<std::string>() == "inf") {
        labels.push_back(CoxeterMatrix::kInfiniteLabel);
      } else if (entry.is_number_integer()) {
        labels.push_back(entry.get<int>());
      } else {
        throw InputError("Coxeter labels must be integers or \"inf\"");
      }
    }
  }
  return {n, std::move(labels)};
}

inline Json coxeter_to_json(const CoxeterMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) {
      if (m.at(i, j) == CoxeterMatrix::kInfiniteLabel)
        row.push_back("inf");
      else
        row.push_back(m.at(i, j));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"size", m.size()}, {"m", std::move(rows)}};
}

inline CoxeterMatrix load_coxeter(const std::string& path) { return coxeter_from_json(read_json_file(path)); }

/// Fixed-point rendering used by every plain-text and JSON output.
inline std::string fixed(double value, int decimals) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(decimals);
  out << value;
  return out.str();
}

}  // namespace raca::io
