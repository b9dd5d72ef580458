#ifndef FOLIUM_REPORT_HPP
#define FOLIUM_REPORT_HPP

#include <string>

#include <json.hpp>

#include "folium/blowup.hpp"
#include "folium/bounds.hpp"
#include "folium/darboux.hpp"
#include "folium/field.hpp"

namespace folium {

using Json = nlohmann::ordered_json;

extern const std::vector<std::string> kAffineVars;  // {"x", "y"}

std::string rational_str(const Rational& r);

Json to_json(const SingularScheme& s);
Json to_json(const InvariantCurve& c);
Json to_json(const FirstIntegral& fi);
Json to_json(const ResolutionTree& t);
Json to_json(const BoundReport& b);

/// Deterministic plain-text rendering of a report body.
std::string render_text(const Json& j);

}  // namespace folium

#endif
