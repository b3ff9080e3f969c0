#include "hexacent/centroid_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "hexacent/formulas.hpp"

namespace hexacent {

template <typename T>
void validate(const GWParams<T>& p) {
    if (p.w < 1 || p.w > 2 || p.z < 0 || p.z > 1)
        throw GeometryError(GeometryErrorKind::OutOfRange, "parameters need w in [1,2] and z in [0,1]");
}

template <typename T>
Point<T> point_m1(const T& w) {
    return {T((2 + w) / w), T((2 - w) / w)};
}

template <typename T>
Point<T> point_p1(const GWParams<T>& p) {
    const Point<T> a1{T(1), T(1)};
    return a1 + p.z * (point_m1(p.w) - a1);
}

template <typename T>
ConvexPolygon<T> body_G(const GWParams<T>& p) {
    validate(p);
    const Point<T> p1 = point_p1(p);
    const Point<T> p2{T(-p1.x), p1.y};
    return ConvexPolygon<T>({{T(0), p.w}, p2, {T(-2), T(0)}, {T(-1), T(-1)}, {T(1), T(-1)}, {T(2), T(0)}, p1});
}

template <typename T>
ConvexPolygon<T> body_P(const T& w) {
    return body_G(GWParams<T>{w, T(1)});
}

template <typename T>
ConvexPolygon<T> tight_pentagon() {
    return ConvexPolygon<T>({{T(0), T(2)}, {T(-2), T(0)}, {T(-1), T(-1)}, {T(1), T(-1)}, {T(2), T(0)}});
}

namespace {

template <typename T>
std::optional<T> intercept(const Line<T>& l) {
    if (sign_of(l.b) == 0) return std::nullopt;
    return T(l.c / l.b);
}

}  // namespace

template <typename T>
T support_parameter_w(const ConvexPolygon<T>& a) {
    const Point<T> a1{T(1), T(1)};
    const auto& v = a.vertices();
    double tol = 0;
    if constexpr (!is_exact_v<T>) tol = 1e-7 * diameter(a);

    auto close = [&](const Point<T>& p, const Point<T>& q) {
        if constexpr (is_exact_v<T>) {
            return p == q;
        } else {
            return std::hypot(p.x - q.x, p.y - q.y) <= tol;
        }
    };

    std::optional<T> best;
    auto offer = [&](const Line<T>& l) {
        const auto c = intercept(l);
        if (c && (!best || *c < *best)) best = c;
    };

    std::size_t vertex = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (close(v[i], a1)) vertex = i;
    if (vertex < v.size()) {
        const auto [l1, l2] = supporting_cone(a, vertex);
        offer(l1);
        offer(l2);
    } else {
        bool on_edge = false;
        if constexpr (is_exact_v<T>) {
            on_edge = on_boundary(a, a1);
        } else {
            on_edge = boundary_distance(a, a1) <= tol;
        }
        if (!on_edge) throw GeometryError(GeometryErrorKind::NotCanonical, "a1 = (1,1) is not on the boundary of the body");
        // The edge carrying a1.
        std::size_t best_edge = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point<T>& p = v[i];
            const Point<T>& q = v[(i + 1) % v.size()];
            const Point<double> pd = to_double(p), qd = to_double(q), ad{1.0, 1.0};
            const Point<double> e = qd - pd;
            double t = std::clamp(dot(ad - pd, e) / dot(e, e), 0.0, 1.0);
            const Point<double> f = pd + t * e;
            const double d = std::hypot(ad.x - f.x, ad.y - f.y);
            if constexpr (is_exact_v<T>) {
                if (orient(p, q, a1) == 0) {
                    best_edge = i;
                    best_dist = 0;
                    break;
                }
            }
            if (d < best_dist) {
                best_dist = d;
                best_edge = i;
            }
        }
        offer(Line<T>::through(v[best_edge], v[(best_edge + 1) % v.size()]));
    }
    if (!best) throw GeometryError(GeometryErrorKind::NotCanonical, "no supporting line at a1 meets the axis x = 0");
    T w = *best;
    if (w < T(1) - T(tol) || w > T(2) + T(tol))
        throw GeometryError(GeometryErrorKind::NotCanonical, "supporting line at a1 meets x = 0 at " +
                                                                 to_string(to_double(w)) + ", outside [1, 2]");
    if (w < T(1)) w = T(1);
    if (w > T(2)) w = T(2);
    return w;
}

template <typename T>
BoundReport<T> check_theorem(const ConvexPolygon<T>& a, const AffineRegularHexagon<T>& hexagon, const T& ratio,
                             double residual) {
    BoundReport<T> r{hexagon, residual, area_and_centroid(a).centroid, T(0), ratio, T(0), false, std::nullopt};
    r.gauge_value = gauge(hexagon.polygon(), hexagon.center, r.centroid);
    r.margin = ratio - r.gauge_value;
    if constexpr (is_exact_v<T>) {
        r.contained = r.margin >= 0;
    } else {
        r.contained = r.margin >= -1e-9;
    }
    try {
        r.w_extracted = support_parameter_w(apply_map(hexagon.to_canonical(), a));
    } catch (const GeometryError&) {
        r.w_extracted.reset();
    }
    return r;
}

BoundReport<double> check_theorem(const ConvexPolygon<double>& a, double ratio) {
    const HexagonFit fit = inscribe(a);
    return check_theorem(a, fit.hexagon, ratio, fit.residual);
}

std::optional<BoundReport<Rational>> check_theorem_exact(const ConvexPolygon<Rational>& a, const Rational& ratio) {
    const HexagonFit fit = inscribe(to_double(a));
    const auto exact = snap_exact(fit.hexagon, a);
    if (!exact) return std::nullopt;
    return check_theorem(a, *exact, ratio, 0.0);
}

template void validate(const GWParams<double>&);
template void validate(const GWParams<Rational>&);
template Point<double> point_m1(const double&);
template Point<Rational> point_m1(const Rational&);
template Point<double> point_p1(const GWParams<double>&);
template Point<Rational> point_p1(const GWParams<Rational>&);
template ConvexPolygon<double> body_G(const GWParams<double>&);
template ConvexPolygon<Rational> body_G(const GWParams<Rational>&);
template ConvexPolygon<double> body_P(const double&);
template ConvexPolygon<Rational> body_P(const Rational&);
template ConvexPolygon<double> tight_pentagon();
template ConvexPolygon<Rational> tight_pentagon();
template double support_parameter_w(const ConvexPolygon<double>&);
template Rational support_parameter_w(const ConvexPolygon<Rational>&);
template BoundReport<double> check_theorem(const ConvexPolygon<double>&, const AffineRegularHexagon<double>&,
                                           const double&, double);
template BoundReport<Rational> check_theorem(const ConvexPolygon<Rational>&, const AffineRegularHexagon<Rational>&,
                                             const Rational&, double);

// ------------------------------------------------------------ random bodies

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomBody ellipse_body(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr double kTwoPi = 6.283185307179586;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double b = 0.15 + 0.85 * unit(rng);
        const double phi = 0.5 * kTwoPi * unit(rng);
        const double scale = 0.5 + 2.5 * unit(rng);
        const Point<double> shift{10 * unit(rng) - 5, 10 * unit(rng) - 5};
        const double c = std::cos(phi), s = std::sin(phi);
        std::vector<Point<double>> pts;
        for (int i = 0; i < n; ++i) {
            const double t = kTwoPi * unit(rng);
            const double x = std::cos(t) * scale, y = b * std::sin(t) * scale;
            pts.push_back({c * x - s * y + shift.x, s * x + c * y + shift.y});
        }
        try {
            ConvexPolygon<double> poly = convex_hull(std::move(pts));
            if (static_cast<int>(poly.size()) != n) continue;
            if (min_width(poly) < 1e-3 * diameter(poly)) continue;
            return {std::move(poly), std::nullopt, 0};
        } catch (const GeometryError&) {
        }
    }
    throw std::runtime_error("ellipse generator failed to produce a body");
}

RandomBody star_body(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double w = 1 + unit(rng);
    // The admissible region: below both supporting lines, outside T4, T5, T6.
    const ConvexPolygon<double> region = body_P(w);
    const auto hex = AffineRegularHexagon<double>::canonical();
    std::vector<Point<double>> pts;
    for (const auto& p : hex.vertices()) pts.push_back(p);
    while (static_cast<int>(pts.size()) < 6 + n) {
        const Point<double> p{6 * unit(rng) - 3, 3 * unit(rng) - 1};
        if (contains(region, p)) pts.push_back(p);
    }
    return {convex_hull(std::move(pts)), hex, w};
}

}  // namespace

RandomBody random_body(std::uint64_t seed, const BodySpec& spec) {
    if (spec.vertices < 3 || spec.vertices > 64)
        throw GeometryError(GeometryErrorKind::OutOfRange, "vertex count must be in 3..64");
    std::mt19937_64 rng(splitmix64(seed));
    return spec.generator == Generator::Ellipse ? ellipse_body(rng, spec.vertices) : star_body(rng, spec.vertices);
}

std::optional<WingCheck> wing_check(const ConvexPolygon<double>& body) {
    double w = 0;
    try {
        w = support_parameter_w(body);
    } catch (const GeometryError&) {
        return std::nullopt;
    }
    if (w < w0() || w >= 2) return std::nullopt;
    const GWParams<double> params{w, z_star(w)};
    const Point<double> p1 = point_p1(params), a6{2, 0}, m1 = point_m1(w);
    std::optional<ConvexPolygon<double>> tri;
    try {
        tri.emplace(std::vector<Point<double>>{p1, a6, m1});
    } catch (const GeometryError&) {
        return std::nullopt;
    }
    std::optional<ConvexPolygon<double>> part = body;
    const auto& tv = tri->vertices();
    for (std::size_t i = 0; i < tv.size() && part; ++i)
        part = clip_halfplane(*part, Line<double>::through(tv[i], tv[(i + 1) % tv.size()]), HalfPlane::NonPositive);
    if (!part) return std::nullopt;
    WingCheck check;
    check.w = w;
    check.body_part = area_and_centroid(*part).centroid.y;
    check.triangle = area_and_centroid(*tri).centroid.y;
    check.violated = check.body_part > check.triangle + 1e-12;
    return check;
}

TrialResult run_trial(std::uint64_t trial_seed, Generator generator, int vertices) {
    TrialResult r;
    r.seed = trial_seed;
    r.generator = generator;
    r.vertices = vertices;
    const RandomBody body = random_body(trial_seed, {generator, vertices});
    r.diameter = diameter(body.polygon);
    try {
        const BoundReport<double> report =
            body.hexagon ? check_theorem(body.polygon, *body.hexagon, 4.0 / 21.0) : check_theorem(body.polygon);
        r.margin = report.margin;
        r.residual = report.residual;
        if (generator == Generator::Star) {
            const auto wing = wing_check(body.polygon);
            r.wing_checked = wing.has_value();
            r.wing_counterexample = wing && wing->violated;
        }
    } catch (const InscriptionFailed& e) {
        r.inscription_failed = true;
        r.failure = e.what();
    }
    return r;
}

MonteCarloSummary monte_carlo(long trials, std::uint64_t seed, GeneratorMix mix, unsigned threads) {
    if (trials < 1) throw std::invalid_argument("monte carlo needs at least one trial");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<long>(threads, trials));

    std::vector<TrialResult> results(static_cast<std::size_t>(trials));
    auto work = [&](unsigned worker) {
        for (long i = worker; i < trials; i += threads) {
            const std::uint64_t trial_seed = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i)));
            Generator g = Generator::Ellipse;
            if (mix == GeneratorMix::Star || (mix == GeneratorMix::Mixed && i % 2 == 1)) g = Generator::Star;
            const int vertices = 3 + static_cast<int>(splitmix64(trial_seed + 1) % 62);
            results[static_cast<std::size_t>(i)] = run_trial(trial_seed, g, vertices);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& t : pool) t.join();

    MonteCarloSummary s;
    s.trials = trials;
    s.min_margin = std::numeric_limits<double>::infinity();
    for (const auto& r : results) {
        if (r.inscription_failed) {
            ++s.inscription_failures;
            continue;
        }
        if (r.margin < s.min_margin) {
            s.min_margin = r.margin;
            s.argmin_seed = r.seed;
        }
        if (r.margin < -1e-9) ++s.violations;
        if (r.wing_checked) ++s.wing_checked;
        if (r.wing_counterexample) ++s.wing_counterexamples;
        if (r.generator == Generator::Ellipse) s.max_residual = std::max(s.max_residual, r.residual);
    }
    if (s.inscription_failures < trials) {
        const auto& best = *std::find_if(results.begin(), results.end(),
                                         [&](const TrialResult& r) { return !r.inscription_failed && r.seed == s.argmin_seed; });
        s.argmin_body = random_body(best.seed, {best.generator, best.vertices}).polygon.vertices();
    }
    return s;
}

}  // namespace hexacent
