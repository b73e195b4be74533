#include "spaceform/polygon_io.hpp"

#include <fstream>
#include <sstream>

#include "spaceform/error.hpp"

namespace spaceform {

namespace {

double number_field(const nlohmann::json& doc, const char* name) {
    if (!doc.contains(name) || !doc[name].is_number())
        fail(ErrorKind::InvalidInput, std::string("missing or non-numeric field '") + name + "'");
    return doc[name].get<double>();
}

} // namespace

ConvexPolygon polygon_from_json(const nlohmann::json& doc) {
    if (!doc.is_object())
        fail(ErrorKind::InvalidInput, "polygon file must be a JSON object");
    const double lambda = number_field(doc, "lambda");
    const SpaceForm sf(lambda);

    if (!doc.contains("coords") || !doc["coords"].is_string())
        fail(ErrorKind::InvalidInput, "missing 'coords' discriminator");
    const std::string coords = doc["coords"].get<std::string>();
    const bool polar = coords == "polar";
    if (!polar && coords != "embedding")
        fail(ErrorKind::InvalidInput, "'coords' must be \"embedding\" or \"polar\"");

    if (!doc.contains("vertices") || !doc["vertices"].is_array() || doc["vertices"].empty())
        fail(ErrorKind::InvalidInput, "missing or empty 'vertices' array");

    const std::size_t want = polar ? 2 : (sf.flat() ? 2 : 3);
    const PolarFrame frame = canonical_frame(sf);
    std::vector<Point> verts;
    verts.reserve(doc["vertices"].size());
    std::size_t row = 0;
    for (const auto& entry : doc["vertices"]) {
        if (!entry.is_array() || entry.size() != want)
            fail(ErrorKind::InvalidInput,
                 "vertex " + std::to_string(row) + " must have " + std::to_string(want) +
                     " numeric coordinates");
        for (const auto& c : entry)
            if (!c.is_number())
                fail(ErrorKind::InvalidInput,
                     "vertex " + std::to_string(row) + " has a non-numeric coordinate");
        if (polar) {
            const double r = entry[0].get<double>();
            const double phi = entry[1].get<double>();
            if (r < 0.0)
                fail(ErrorKind::InvalidInput,
                     "vertex " + std::to_string(row) + " has a negative polar radius");
            verts.push_back(polar_point(sf, frame, r, phi));
        } else if (sf.flat()) {
            verts.push_back({{entry[0].get<double>(), entry[1].get<double>(), 0.0}});
        } else {
            verts.push_back(
                {{entry[0].get<double>(), entry[1].get<double>(), entry[2].get<double>()}});
        }
        ++row;
    }
    return ConvexPolygon::from_vertices(sf, std::move(verts));
}

ConvexPolygon polygon_from_string(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("JSON parse failure: ") + e.what());
    }
    return polygon_from_json(doc);
}

ConvexPolygon polygon_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return polygon_from_string(buffer.str());
}

nlohmann::ordered_json polygon_to_json(const ConvexPolygon& poly) {
    nlohmann::ordered_json doc;
    doc["lambda"] = poly.space().lambda();
    doc["coords"] = "embedding";
    auto verts = nlohmann::ordered_json::array();
    for (const Point& p : poly.vertices()) {
        if (poly.space().flat())
            verts.push_back({p.coords.x, p.coords.y});
        else
            verts.push_back({p.coords.x, p.coords.y, p.coords.z});
    }
    doc["vertices"] = std::move(verts);
    return doc;
}

} // namespace spaceform
