#pragma once

// JSON input document for the command-line tool: either vertices in the
// Klein disk or side lengths, plus optional settings.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypoly/area.hpp"
#include "hypoly/pe_core.hpp"

namespace hypoly {

/// Malformed input document.
class document_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PolygonDocument {
  std::optional<std::vector<KleinPoint>> vertices;
  std::optional<std::vector<double>> sides;
  std::optional<KleinPoint> origin;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;

  Polygon polygon() const {
    if (!vertices) {
      throw document_error("document has no vertices");
    }
    return Polygon(std::span<const KleinPoint>(*vertices));
  }

  SideLengths side_lengths() const {
    if (!sides) {
      throw document_error("document has no sides");
    }
    return SideLengths(*sides);
  }
};

namespace detail {

inline KleinPoint parse_disk_point(const nlohmann::json &j, const char *what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw document_error(std::string(what) + " must be a [xi, eta] pair of numbers");
  }
  const KleinPoint p{j[0].get<double>(), j[1].get<double>()};
  if (!(p.xi * p.xi + p.eta * p.eta < 1.0)) {
    throw document_error(std::string(what) + " lies outside the open unit disk");
  }
  return p;
}

}  // namespace detail

inline PolygonDocument document_from_json(const nlohmann::json &j) {
  if (!j.is_object()) {
    throw document_error("document must be a JSON object");
  }
  PolygonDocument doc;
  if (j.contains("vertices")) {
    const auto &v = j.at("vertices");
    if (!v.is_array()) {
      throw document_error("vertices must be an array");
    }
    std::vector<KleinPoint> pts;
    for (const auto &e : v) {
      pts.push_back(detail::parse_disk_point(e, "vertex"));
    }
    doc.vertices = std::move(pts);
  }
  if (j.contains("sides")) {
    const auto &s = j.at("sides");
    if (!s.is_array()) {
      throw document_error("sides must be an array");
    }
    std::vector<double> l;
    for (const auto &e : s) {
      if (!e.is_number()) {
        throw document_error("sides must be numbers");
      }
      l.push_back(e.get<double>());
    }
    doc.sides = std::move(l);
  }
  if (doc.vertices.has_value() == doc.sides.has_value()) {
    throw document_error("document needs exactly one of 'vertices' and 'sides'");
  }
  if (j.contains("origin")) {
    doc.origin = detail::parse_disk_point(j.at("origin"), "origin");
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) {
      throw document_error("seed must be a non-negative integer");
    }
    doc.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("tolerance")) {
    if (!j.at("tolerance").is_number() || !(j.at("tolerance").get<double>() > 0.0)) {
      throw document_error("tolerance must be a positive number");
    }
    doc.tolerance = j.at("tolerance").get<double>();
  }
  return doc;
}

inline PolygonDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw document_error(std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(j);
}

inline nlohmann::json to_json(const PolygonDocument &doc) {
  nlohmann::json j = nlohmann::json::object();
  if (doc.vertices) {
    j["vertices"] = nlohmann::json::array();
    for (const auto &p : *doc.vertices) {
      j["vertices"].push_back({p.xi, p.eta});
    }
  }
  if (doc.sides) {
    j["sides"] = *doc.sides;
  }
  if (doc.origin) {
    j["origin"] = {doc.origin->xi, doc.origin->eta};
  }
  if (doc.seed) {
    j["seed"] = *doc.seed;
  }
  if (doc.tolerance) {
    j["tolerance"] = *doc.tolerance;
  }
  return j;
}

inline PolygonDocument document_from_vertices(std::vector<KleinPoint> vertices) {
  PolygonDocument doc;
  doc.vertices = std::move(vertices);
  return doc;
}

}  // namespace hypoly
