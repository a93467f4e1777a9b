#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "shadowgauge/bodies.hpp"
#include "shadowgauge/inequalities.hpp"

namespace shadowgauge {

/// Parses the body format:
///   {"type":"zonotope","dim":n,"generators":[[...],...]}
///   {"type":"ball","dim":n,"radius":r}
///   {"type":"cross_polytope","dim":n,"scale":s}
///   {"type":"facet_body","dim":n,"vertices":[...],"atoms":[{"u":[...],"a":..,"h":..}]}
/// Malformed input throws Errc::parse_error; well-formed input that
/// violates a body invariant throws the corresponding geometry error.
Body body_from_json(const nlohmann::json& j);

/// Zonotopes, balls and facet bodies serialize to their own type tags.
nlohmann::json body_to_json(const Body& body);

nlohmann::json cross_polytope_json(int dim, double scale);

nlohmann::json report_to_json(const CheckReport& report);

nlohmann::json direction_to_json(const Direction& d);

} // namespace shadowgauge
