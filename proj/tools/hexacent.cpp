// Command-line front end: inscribe, check, symmetrize, verify-proof, stress, render.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hexacent/centroid_bound.hpp"
#include "hexacent/hexagon.hpp"
#include "hexacent/io.hpp"
#include "hexacent/proof_verifier.hpp"
#include "hexacent/steiner.hpp"
#include "hexacent/svg.hpp"

using namespace hexacent;

namespace {

enum ExitCode { kOk = 0, kViolation = 1, kInputError = 2, kInconclusive = 3 };

struct Globals {
    std::string format = "json";
    std::string mode;  // empty: decided by the input file
};

bool use_exact(const Globals& g, const PolygonDocument& doc) {
    if (g.mode.empty()) return doc.exact();
    return g.mode == "exact";
}

void emit(const Globals& g, const Json& j) {
    if (g.format == "text") {
        std::cout << to_text(j);
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

int cmd_inscribe(const Globals& g, const std::string& file) {
    const PolygonDocument doc = load_polygon_document(file);
    const ConvexPolygon<double> body = doc.float_polygon();
    const HexagonFit fit = inscribe(body);
    Json out;
    if (use_exact(g, doc)) {
        if (const auto exact = snap_exact(fit.hexagon, doc.exact_polygon())) {
            out = to_json(*exact);
            out["mode"] = "exact";
            out["residual"] = "0";
            emit(g, out);
            return kOk;
        }
    }
    out = to_json(fit.hexagon);
    out["mode"] = "float";
    out["residual"] = scalar_string(fit.residual);
    out["theta"] = scalar_string(fit.theta);
    emit(g, out);
    return kOk;
}

int cmd_check(const Globals& g, const std::string& file, const std::string& ratio_text) {
    const PolygonDocument doc = load_polygon_document(file);
    if (use_exact(g, doc)) {
        const Rational ratio = parse_rational(ratio_text);
        if (ratio <= 0) throw GeometryError(GeometryErrorKind::NonPositiveRatio, "ratio must be positive");
        if (const auto report = check_theorem_exact(doc.exact_polygon(), ratio)) {
            Json out = to_json(*report);
            out["mode"] = "exact";
            emit(g, out);
            return report->contained ? kOk : kViolation;
        }
        std::cerr << "no exactly inscribed hexagon found; falling back to floating point\n";
    }
    const double ratio = parse_double(ratio_text);
    if (ratio <= 0) throw GeometryError(GeometryErrorKind::NonPositiveRatio, "ratio must be positive");
    const BoundReport<double> report = check_theorem(doc.float_polygon(), ratio);
    Json out = to_json(report);
    out["mode"] = "float";
    emit(g, out);
    return report.contained ? kOk : kViolation;
}

template <typename T>
Line<T> parse_axis(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3) throw ParseError("--axis needs three numbers a,b,c for the line a*x + b*y = c");
    return Line<T>(scalar_from_string<T>(parts[0]), scalar_from_string<T>(parts[1]), scalar_from_string<T>(parts[2]));
}

int cmd_symmetrize(const Globals& g, const std::string& file, const std::string& axis) {
    const PolygonDocument doc = load_polygon_document(file);
    const bool exact = use_exact(g, doc) || is_fraction_literal(axis);
    const PolygonDocument out = exact ? to_document(steiner_symmetrize(doc.exact_polygon(), parse_axis<Rational>(axis)))
                                      : to_document(steiner_symmetrize(doc.float_polygon(), parse_axis<double>(axis)));
    if (g.format == "text") {
        for (const auto& [x, y] : out.vertices) std::cout << x << " " << y << "\n";
    } else {
        std::cout << dump_polygon_document(out);
    }
    return kOk;
}

int cmd_verify(const Globals& g, const std::optional<std::string>& claim, int depth, long budget) {
    VerifyOptions options;
    options.claim = claim;
    options.budget.max_depth = depth;
    options.budget.max_boxes = budget;
    const VerificationLedger ledger = run_full_verification(options);
    if (g.format == "text") {
        std::cout << to_text(ledger);
    } else {
        std::cout << to_json(ledger).dump(2) << "\n";
    }
    if (ledger.count(ClaimStatus::Disproved) > 0) return kViolation;
    if (ledger.count(ClaimStatus::Inconclusive) > 0) return kInconclusive;
    return kOk;
}

int cmd_stress(const Globals& g, long trials, std::uint64_t seed, const std::string& generator, unsigned threads) {
    if (const char* env = std::getenv("HEXACENT_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("HEXACENT_SEED is not an unsigned integer: ") + env);
        }
    }
    GeneratorMix mix = GeneratorMix::Mixed;
    if (generator == "a") mix = GeneratorMix::Ellipse;
    if (generator == "b") mix = GeneratorMix::Star;
    const MonteCarloSummary s = monte_carlo(trials, seed, mix, threads);
    Json out = to_json(s);
    out["seed"] = std::to_string(seed);
    emit(g, out);
    return s.violations > 0 ? kViolation : kOk;
}

int cmd_render(const std::string& file, const Overlays& overlays, const std::string& output) {
    const PolygonDocument doc = load_polygon_document(file);
    const ConvexPolygon<double> body = doc.float_polygon();
    std::optional<AffineRegularHexagon<double>> hexagon;
    if (overlays.hexagon || overlays.star || overlays.outer_vertices || overlays.homothet || overlays.construction)
        hexagon = inscribe(body).hexagon;
    const std::string svg = render_svg(body, hexagon, overlays);
    std::ofstream out(output, std::ios::binary);
    if (!out) throw ParseError("cannot write " + output);
    out << svg;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine-regular hexagons inscribed in planar convex bodies and the 4/21 centroid bound"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--mode", g.mode, "Arithmetic; default follows the input file")->check(CLI::IsMember({"exact", "float"}));

    std::string file;
    auto* inscribe_cmd = app.add_subcommand("inscribe", "Find an inscribed affine-regular hexagon");
    inscribe_cmd->add_option("polygon", file, "Polygon JSON")->required();

    std::string ratio = "4/21";
    auto* check_cmd = app.add_subcommand("check", "Check that the centroid lies in the scaled hexagon");
    check_cmd->add_option("polygon", file, "Polygon JSON")->required();
    check_cmd->add_option("--ratio", ratio, "Homothety ratio, decimal or p/q");

    std::string axis;
    auto* sym_cmd = app.add_subcommand("symmetrize", "Steiner symmetrization about the line a*x + b*y = c");
    sym_cmd->add_option("polygon", file, "Polygon JSON")->required();
    sym_cmd->add_option("--axis", axis, "a,b,c")->required();

    std::optional<std::string> claim;
    int depth = 30;
    long budget = 1'000'000;
    auto* verify_cmd = app.add_subcommand("verify-proof", "Re-check every step of the centroid bound");
    verify_cmd->add_option("--claim", claim, "Single claim id, e.g. P4a");
    verify_cmd->add_option("--depth", depth, "Subdivision depth limit")->check(CLI::Range(1, 60));
    verify_cmd->add_option("--budget", budget, "Box budget")->check(CLI::PositiveNumber);

    long trials = 1000;
    std::uint64_t seed = 1;
    std::string generator = "mixed";
    unsigned threads = 0;
    auto* stress_cmd = app.add_subcommand("stress", "Monte Carlo check on random bodies");
    stress_cmd->add_option("--trials", trials, "Number of bodies")->check(CLI::PositiveNumber);
    stress_cmd->add_option("--seed", seed, "Seed (HEXACENT_SEED overrides)");
    stress_cmd->add_option("--generator", generator, "a: ellipses, b: star bodies")
        ->check(CLI::IsMember({"a", "b", "mixed"}));
    stress_cmd->add_option("--threads", threads, "Worker threads, 0 for all cores");

    Overlays overlays;
    std::string output;
    bool all = false;
    auto* render_cmd = app.add_subcommand("render", "Draw the body and its hexagon as SVG");
    render_cmd->add_option("polygon", file, "Polygon JSON")->required();
    render_cmd->add_flag("--hexagon", overlays.hexagon);
    render_cmd->add_flag("--star", overlays.star);
    render_cmd->add_flag("--centroid", overlays.centroid);
    render_cmd->add_flag("--outer", overlays.outer_vertices);
    render_cmd->add_flag("--homothet", overlays.homothet);
    render_cmd->add_flag("--construction", overlays.construction);
    render_cmd->add_flag("--all", all);
    render_cmd->add_option("-o,--output", output, "SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*inscribe_cmd) return cmd_inscribe(g, file);
        if (*check_cmd) return cmd_check(g, file, ratio);
        if (*sym_cmd) return cmd_symmetrize(g, file, axis);
        if (*verify_cmd) return cmd_verify(g, claim, depth, budget);
        if (*stress_cmd) return cmd_stress(g, trials, seed, generator, threads);
        if (*render_cmd) {
            if (all) overlays = Overlays{true, true, true, true, true, true};
            return cmd_render(file, overlays, output);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InscriptionFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
