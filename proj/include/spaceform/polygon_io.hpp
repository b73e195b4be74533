#pragma once

#include <string>

#include <json.hpp>

#include "spaceform/polygon.hpp"

namespace spaceform {

// Polygon file format: JSON with an explicit curvature and a coordinate
// discriminator.
//
//   { "lambda": 0.0,
//     "coords": "embedding",            // or "polar"
//     "vertices": [[x, y], ...] }       // 3 reals per vertex for embedding
//                                       // with lambda != 0, 2 otherwise;
//                                       // polar rows are [r, phi] about the
//                                       // canonical base point
//
// Parse failures and invariant violations surface as Error with a message
// naming the offending field or vertex.
ConvexPolygon polygon_from_json(const nlohmann::json& doc);
ConvexPolygon polygon_from_string(const std::string& text);
ConvexPolygon polygon_from_file(const std::string& path);

// Serializes in embedding coordinates (2 per vertex for lambda = 0).
nlohmann::ordered_json polygon_to_json(const ConvexPolygon& poly);

} // namespace spaceform
