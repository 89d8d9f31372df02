#pragma once

#include <string>

#include <json.hpp>

#include "neighborly/error.hpp"
#include "neighborly/gale_diagram.hpp"

namespace neighborly {

using ordered_json = nlohmann::ordered_json;

/// {"n": int, "center": int, "labels": [int x 2n]}
inline ordered_json diagram_to_json(const GaleDiagram& d) {
  ordered_json j;
  j["n"] = d.diameters();
  j["center"] = d.center();
  j["labels"] = std::vector<Label>(d.labels().begin(), d.labels().end());
  return j;
}

/// Throws MalformedDiagram on a missing field, a negative value, or a label
/// list whose length is not 2n.
template <class Json>
GaleDiagram diagram_from_json(const Json& j) {
  try {
    const auto n = j.at("n").template get<long long>();
    const auto center = j.contains("center") ? j.at("center").template get<long long>() : 0LL;
    const auto& arr = j.at("labels");
    if (!arr.is_array()) throw MalformedDiagram("diagram JSON: 'labels' must be an array");
    if (n < 2) throw MalformedDiagram("diagram JSON: n must be >= 2");
    if (center < 0) throw MalformedDiagram("diagram JSON: center must be nonnegative");
    if (arr.size() != static_cast<std::size_t>(2 * n))
      throw MalformedDiagram("diagram JSON: labels length " + std::to_string(arr.size()) + " != 2n = " +
                             std::to_string(2 * n));
    std::vector<Label> labels;
    labels.reserve(arr.size());
    for (const auto& v : arr) {
      const auto x = v.template get<long long>();
      if (x < 0) throw MalformedDiagram("diagram JSON: labels must be nonnegative");
      labels.push_back(static_cast<Label>(x));
    }
    return GaleDiagram(std::move(labels), static_cast<Label>(center));
  } catch (const nlohmann::json::exception& e) {
    throw MalformedDiagram(std::string("diagram JSON: ") + e.what());
  }
}

inline GaleDiagram diagram_from_json_text(const std::string& text) {
  try {
    return diagram_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedDiagram(std::string("diagram JSON: ") + e.what());
  }
}

inline std::string diagram_to_json_text(const GaleDiagram& d) { return diagram_to_json(d).dump(); }

}  // namespace neighborly
