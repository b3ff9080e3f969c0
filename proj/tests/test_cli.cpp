#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "hexacent/io.hpp"
#include "hexacent/svg.hpp"

using namespace hexacent;
namespace fs = std::filesystem;

namespace {

const std::string kData = HEXACENT_TEST_DATA;
const std::string kCli = HEXACENT_CLI;

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("hexacent_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

struct Run {
    int code = -1;
    std::string out, err;
};

Run run(const std::string& args, const std::string& env = "") {
    const fs::path out = scratch("stdout.txt"), err = scratch("stderr.txt");
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args + " > '" + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

int count(const std::string& s, const std::string& needle) {
    int n = 0;
    for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("polygon documents round trip verbatim") {
    for (const char* name : {"tight_pentagon.json", "tight_pentagon_rational.json", "irregular.json"}) {
        const PolygonDocument doc = load_polygon_document(kData + "/" + name);
        const PolygonDocument again = parse_polygon_document(dump_polygon_document(doc));
        CHECK(again.vertices == doc.vertices);
    }
    const PolygonDocument rational = load_polygon_document(kData + "/tight_pentagon_rational.json");
    CHECK(rational.vertices[0].first == "0/1");
    CHECK(rational.exact());
    CHECK_FALSE(load_polygon_document(kData + "/tight_pentagon.json").exact());
    CHECK(area_and_centroid(rational.exact_polygon()).centroid == Point<Rational>{0, Rational(4, 21)});

    const PolygonDocument written = to_document(tight_pentagon<Rational>());
    CHECK(parse_polygon_document(dump_polygon_document(written)).exact_polygon() == tight_pentagon<Rational>());
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(load_polygon_document(kData + "/malformed.json"), ParseError);
    CHECK_THROWS_AS(load_polygon_document(kData + "/does_not_exist.json"), ParseError);
    CHECK_THROWS_AS(parse_polygon_document("[]"), ParseError);
    CHECK_THROWS_AS(parse_polygon_document(R"({"points": []})"), ParseError);
    CHECK_THROWS_AS(parse_polygon_document(R"({"vertices": [[0, 1]]})"), ParseError);
    CHECK_THROWS_AS(parse_polygon_document(R"({"vertices": [["0", "1", "2"]]})"), ParseError);
    try {
        parse_polygon_document(R"({"vertices": [["0", "0"], ["1", "abc"]]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_polygon_document(R"({"vertices": [["1/0", "0"]]})"), ParseError);
    CHECK_THROWS_AS(load_polygon_document(kData + "/not_convex.json").exact_polygon(), GeometryError);
}

TEST_CASE("scalars are written as strings") {
    CHECK(scalar_string(Rational(4, 21)) == "4/21");
    CHECK(scalar_string(Rational(3)) == "3");
    CHECK(scalar_string(0.1) == "0.1");
    const Json j = to_json(check_theorem(tight_pentagon<Rational>(), AffineRegularHexagon<Rational>::canonical(), Rational(4, 21)));
    CHECK(j["margin"] == "0");
    CHECK(j["gauge"] == "4/21");
    CHECK(j["centroid"][1] == "4/21");
}

TEST_CASE("svg: tight pentagon with every overlay") {
    const auto body = to_double(tight_pentagon<Rational>());
    const auto hex = AffineRegularHexagon<double>::canonical();
    const Overlays all{true, true, true, true, true, true};
    const std::string a = render_svg(body, hex, all);
    const std::string b = render_svg(body, hex, all);
    CHECK(a == b);
    CHECK(count(a, "class=\"centroid\"") == 1);
    std::smatch m;
    REQUIRE(std::regex_search(a, m, std::regex("class=\"centroid\" data-x=\"([^\"]*)\" data-y=\"([^\"]*)\"")));
    CHECK(std::stod(m[1].str()) == 0.0);
    CHECK(std::fabs(std::stod(m[2].str()) - 4.0 / 21.0) <= 1e-15);
    CHECK(a.find("<svg") == 0);
    CHECK(a.find("width=\"800\" height=\"450\"") != std::string::npos);
    for (const char* label : {">a1<", ">a6<", ">b1<", ">b6<", ">u<", ">m1<", ">m2<"}) CHECK(a.find(label) != std::string::npos);
}

TEST_CASE("svg: star of the canonical hexagon") {
    const auto hex = AffineRegularHexagon<double>::canonical();
    const std::string svg = render_svg(hex.polygon(), hex, Overlays{false, true, false, false, false, false});
    std::smatch m;
    REQUIRE(std::regex_search(svg, m, std::regex("class=\"star\" d=\"([^\"]*)\"")));
    const std::string d = m[1].str();
    CHECK(count(d, "M") + count(d, "L") == 12);

    // The view spans [-3.3, 3.3] x [-2.2, 2.2] around the star's tips.
    const double scale = std::min(800 / 6.6, 450 / 4.4);
    auto canvas = [&](double x, double y) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f,%.3f", 400 + scale * x, 225 - scale * y);
        return std::string(buf);
    };
    for (const auto& [x, y] : std::vector<std::pair<double, double>>{{3, 1}, {0, 2}, {-3, 1}, {-3, -1}, {0, -2}, {3, -1}})
        CHECK(d.find(canvas(x, y)) != std::string::npos);
}

TEST_CASE("cli: check") {
    const Run exact = run("check '" + kData + "/tight_pentagon.json' --mode exact");
    CHECK(exact.code == 0);
    const Json j = Json::parse(exact.out);
    CHECK(j["margin"] == "0");
    CHECK(j["mode"] == "exact");

    const Run text = run("--format text check '" + kData + "/tight_pentagon_rational.json'");
    CHECK(text.code == 0);
    CHECK(text.out.find("margin: 0") != std::string::npos);

    CHECK(run("check '" + kData + "/tight_pentagon.json' --mode exact --ratio 1/10").code == 1);
    CHECK(run("check '" + kData + "/irregular.json'").code == 0);

    const Run reflex = run("check '" + kData + "/not_convex.json'");
    CHECK(reflex.code == 2);
    CHECK(reflex.err.find("(1, 2, 3)") != std::string::npos);
    CHECK(run("check '" + kData + "/malformed.json'").code == 2);
    CHECK(run("check '" + kData + "/tight_pentagon.json' --ratio -1").code == 2);
}

TEST_CASE("cli: inscribe and symmetrize") {
    const Run ins = run("inscribe '" + kData + "/canonical_hexagon.json'");
    CHECK(ins.code == 0);
    const Json h = Json::parse(ins.out);
    CHECK(h.contains("center"));
    CHECK(h.contains("u"));
    CHECK(h.contains("v"));

    const Run sym = run("symmetrize '" + kData + "/tight_pentagon.json' --axis 1,0,0");
    CHECK(sym.code == 0);
    const PolygonDocument doc = parse_polygon_document(sym.out);
    CHECK(area_and_centroid(doc.exact_polygon()).area == 7);
    CHECK(run("symmetrize '" + kData + "/tight_pentagon.json' --axis 1,0").code == 2);
}

TEST_CASE("cli: verify-proof") {
    const Run one = run("verify-proof --claim P4a");
    CHECK(one.code == 0);
    const Json j = Json::parse(one.out);
    REQUIRE(j["claims"].size() == 1);
    CHECK(j["claims"][0]["id"] == "P4a");
    CHECK(j["claims"][0]["status"] == "Verified");

    CHECK(run("verify-proof --claim nope").code == 2);
    CHECK(run("verify-proof --claim P5a --depth 1 --budget 1").code == 3);
}

TEST_CASE("cli: stress and render") {
    const Run s = run("stress --trials 40 --seed 5");
    CHECK(s.code == 0);
    const Json j = Json::parse(s.out);
    CHECK(j["violations"] == "0");
    CHECK(j["seed"] == "5");
    const Run env = run("stress --trials 40 --seed 5", "HEXACENT_SEED=9");
    CHECK(Json::parse(env.out)["seed"] == "9");
    CHECK(run("stress --trials 0").code == 2);

    const fs::path a = scratch("a.svg"), b = scratch("b.svg");
    CHECK(run("render '" + kData + "/tight_pentagon.json' --all -o '" + a.string() + "'").code == 0);
    CHECK(run("render '" + kData + "/tight_pentagon.json' --all -o '" + b.string() + "'").code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(count(slurp(a), "class=\"centroid\"") == 1);
    CHECK(run("render '" + kData + "/tight_pentagon.json'").code == 2);
    CHECK(run("frobnicate").code == 2);
    fs::remove_all(a.parent_path());
}
