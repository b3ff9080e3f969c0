#include "hexacent/io.hpp"

#include <fstream>
#include <sstream>

namespace hexacent {

bool PolygonDocument::exact() const {
    for (const auto& [x, y] : vertices)
        if (is_fraction_literal(x) || is_fraction_literal(y)) return true;
    return false;
}

ConvexPolygon<Rational> PolygonDocument::exact_polygon() const {
    std::vector<Point<Rational>> pts;
    for (const auto& [x, y] : vertices) pts.push_back({parse_rational(x), parse_rational(y)});
    return ConvexPolygon<Rational>(std::move(pts));
}

ConvexPolygon<double> PolygonDocument::float_polygon() const {
    std::vector<Point<double>> pts;
    for (const auto& [x, y] : vertices) pts.push_back({parse_double(x), parse_double(y)});
    return ConvexPolygon<double>(std::move(pts));
}

PolygonDocument parse_polygon_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("expected an object with a \"vertices\" array");
    PolygonDocument doc;
    std::size_t index = 0;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
            throw ParseError("vertex " + std::to_string(index) + " must be a pair of strings");
        doc.vertices.emplace_back(v[0].get<std::string>(), v[1].get<std::string>());
        // Validate the spelling now so errors name the vertex.
        try {
            parse_rational(doc.vertices.back().first);
            parse_rational(doc.vertices.back().second);
        } catch (const ParseError& e) {
            throw ParseError("vertex " + std::to_string(index) + ": " + e.what());
        }
        ++index;
    }
    return doc;
}

PolygonDocument load_polygon_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_polygon_document(ss.str());
}

std::string dump_polygon_document(const PolygonDocument& doc) {
    Json vertices = Json::array();
    for (const auto& [x, y] : doc.vertices) vertices.push_back(Json::array({x, y}));
    return Json{{"vertices", vertices}}.dump(2) + "\n";
}

std::string scalar_string(const Rational& x) { return to_string(x); }
std::string scalar_string(double x) { return to_string(x); }

Json to_json(const VerificationLedger& ledger) {
    Json claims = Json::array();
    for (const auto& e : ledger.entries) {
        Json c{{"id", e.id}, {"status", to_string(e.status)}, {"description", e.description}};
        if (!e.note.empty()) c["note"] = e.note;
        if (!e.data.empty()) {
            Json data = Json::object();
            for (const auto& [k, v] : e.data) data[k] = v;
            c["data"] = data;
        }
        claims.push_back(c);
    }
    return Json{{"claims", claims}};
}

Json to_json(const MonteCarloSummary& s) {
    Json body = Json::array();
    for (const auto& p : s.argmin_body) body.push_back(to_json(p));
    return Json{{"trials", std::to_string(s.trials)},
                {"min_margin", scalar_string(s.min_margin)},
                {"argmin_seed", std::to_string(s.argmin_seed)},
                {"argmin_body", body},
                {"violations", std::to_string(s.violations)},
                {"inscription_failures", std::to_string(s.inscription_failures)},
                {"max_residual", scalar_string(s.max_residual)},
                {"wing_checked", std::to_string(s.wing_checked)},
                {"wing_counterexamples", std::to_string(s.wing_counterexamples)}};
}

std::string to_text(const VerificationLedger& ledger) {
    std::ostringstream os;
    for (const auto& e : ledger.entries) {
        os << e.id << "  " << to_string(e.status) << "  " << e.description << "\n";
        if (!e.note.empty()) os << "    erratum: " << e.note << "\n";
        for (const auto& [k, v] : e.data) os << "    " << k << ": " << v << "\n";
    }
    os << "verified " << ledger.count(ClaimStatus::Verified) << ", with erratum "
       << ledger.count(ClaimStatus::VerifiedWithErratum) << ", inconclusive "
       << ledger.count(ClaimStatus::Inconclusive) << ", disproved " << ledger.count(ClaimStatus::Disproved) << "\n";
    return os.str();
}

namespace {

void text_lines(std::ostringstream& os, const Json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) text_lines(os, v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array() && !j.empty() && j.front().is_string() && j.size() == 2) {
        os << prefix << ": (" << j[0].get<std::string>() << ", " << j[1].get<std::string>() << ")\n";
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) text_lines(os, j[i], prefix + "[" + std::to_string(i) + "]");
    } else if (j.is_string()) {
        os << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

}  // namespace

std::string to_text(const Json& j) {
    std::ostringstream os;
    text_lines(os, j, "");
    return os.str();
}

}  // namespace hexacent
