#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hexacent/centroid_bound.hpp"
#include "hexacent/geometry.hpp"
#include "hexacent/hexagon.hpp"
#include "hexacent/proof_verifier.hpp"

namespace hexacent {

using Json = nlohmann::ordered_json;

/// A polygon file as written: {"vertices": [["x", "y"], ...]}. Coordinates
/// keep their original spelling so that load followed by save is lossless.
struct PolygonDocument {
    std::vector<std::pair<std::string, std::string>> vertices;

    // Any "p/q" coordinate makes the whole polygon rational.
    bool exact() const;
    ConvexPolygon<Rational> exact_polygon() const;
    ConvexPolygon<double> float_polygon() const;
};

// Throws ParseError on malformed JSON, a missing "vertices" array, non-string
// coordinates or unparsable numbers. Geometry errors surface later, when the
// document is turned into a polygon.
PolygonDocument parse_polygon_document(const std::string& text);
PolygonDocument load_polygon_document(const std::string& path);
std::string dump_polygon_document(const PolygonDocument& doc);

std::string scalar_string(const Rational& x);
std::string scalar_string(double x);

template <typename T>
Json to_json(const Point<T>& p) {
    return Json::array({scalar_string(p.x), scalar_string(p.y)});
}

template <typename T>
PolygonDocument to_document(const ConvexPolygon<T>& poly) {
    PolygonDocument doc;
    for (const auto& v : poly.vertices()) doc.vertices.emplace_back(scalar_string(v.x), scalar_string(v.y));
    return doc;
}

template <typename T>
Json to_json(const AffineRegularHexagon<T>& h) {
    return Json{{"center", to_json(h.center)}, {"u", to_json(h.u)}, {"v", to_json(h.v)}};
}

template <typename T>
Json to_json(const BoundReport<T>& r) {
    Json j{{"hexagon", to_json(r.hexagon)},
           {"residual", scalar_string(r.residual)},
           {"centroid", to_json(r.centroid)},
           {"gauge", scalar_string(r.gauge_value)},
           {"ratio", scalar_string(r.ratio)},
           {"margin", scalar_string(r.margin)},
           {"contained", r.contained}};
    if (r.w_extracted) j["w"] = scalar_string(*r.w_extracted);
    return j;
}

Json to_json(const VerificationLedger& ledger);
Json to_json(const MonteCarloSummary& s);

// Plain "key: value" renderings for --format text.
std::string to_text(const VerificationLedger& ledger);
std::string to_text(const Json& j);

}  // namespace hexacent
