#include "hexacent/hexagon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hexacent/steiner.hpp"

namespace hexacent {

template <typename T>
AffineRegularHexagon<T>::AffineRegularHexagon(Point<T> center_, Point<T> u_, Point<T> v_)
    : center(std::move(center_)), u(std::move(u_)), v(std::move(v_)) {
    const int s = sign_of(cross(u, v));
    if (s == 0) throw GeometryError(GeometryErrorKind::DegenerateInput, "hexagon generators are parallel");
    if (s < 0) std::swap(u, v);
}

template <typename T>
AffineRegularHexagon<T> AffineRegularHexagon<T>::canonical() {
    return {Point<T>{T(0), T(0)}, Point<T>{T(1), T(1)}, Point<T>{T(-1), T(1)}};
}

template <typename T>
std::array<Point<T>, 6> AffineRegularHexagon<T>::vertices() const {
    const Point<T> w = v - u;
    return {center + u, center + v, center + w, center - u, center - v, center - w};
}

template <typename T>
ConvexPolygon<T> AffineRegularHexagon<T>::polygon() const {
    const auto vs = vertices();
    return ConvexPolygon<T>(std::vector<Point<T>>(vs.begin(), vs.end()));
}

template <typename T>
AffineMap<T> AffineRegularHexagon<T>::to_canonical() const {
    return AffineMap<T>::from_frames(center, u, v, Point<T>{T(0), T(0)}, Point<T>{T(1), T(1)}, Point<T>{T(-1), T(1)});
}

template <typename T>
std::array<Point<T>, 6> outer_vertices(const AffineRegularHexagon<T>& h) {
    const auto a = h.vertices();
    auto at = [&](int i) -> const Point<T>& { return a[static_cast<std::size_t>(((i % 6) + 6) % 6)]; };
    std::array<Point<T>, 6> out;
    for (int i = 0; i < 6; ++i) {
        const Line<T> forward = Line<T>::through(at(i), at(i + 1));
        const Line<T> backward = Line<T>::through(at(i - 1), at(i - 2));
        out[static_cast<std::size_t>(i)] = line_intersect(forward, backward);
    }
    return out;
}

template <typename T>
Star<T> star(const AffineRegularHexagon<T>& h) {
    const auto a = h.vertices();
    const auto bar = outer_vertices(h);
    Star<T> s;
    for (std::size_t i = 0; i < 6; ++i) {
        const Point<T>& prev = a[(i + 5) % 6];
        s.ring.push_back(prev);
        s.ring.push_back(bar[i]);
        s.wings.emplace_back(std::vector<Point<T>>{prev, bar[i], a[i]});
    }
    return s;
}

template <typename T>
bool star_contains(const Star<T>& s, const AffineRegularHexagon<T>& h, const Point<T>& p) {
    if (contains(h.polygon(), p)) return true;
    return std::any_of(s.wings.begin(), s.wings.end(), [&](const ConvexPolygon<T>& w) { return contains(w, p); });
}

template struct AffineRegularHexagon<double>;
template struct AffineRegularHexagon<Rational>;
template std::array<Point<double>, 6> outer_vertices(const AffineRegularHexagon<double>&);
template std::array<Point<Rational>, 6> outer_vertices(const AffineRegularHexagon<Rational>&);
template Star<double> star(const AffineRegularHexagon<double>&);
template Star<Rational> star(const AffineRegularHexagon<Rational>&);
template bool star_contains(const Star<double>&, const AffineRegularHexagon<double>&, const Point<double>&);
template bool star_contains(const Star<Rational>&, const AffineRegularHexagon<Rational>&, const Point<Rational>&);

double fit_residual(const ConvexPolygon<double>& body, const AffineRegularHexagon<double>& h) {
    double worst = 0;
    for (const auto& p : h.vertices()) worst = std::max(worst, boundary_distance(body, p));
    return worst / diameter(body);
}

namespace {

Point<double> rotate(const Point<double>& p, double c, double s) { return {c * p.x - s * p.y, s * p.x + c * p.y}; }

// The construction at one chord direction, in coordinates where that direction
// is horizontal.
struct Probe {
    double mismatch = 0;  // g: average of the outer chord midpoints minus the middle chord midpoint
    Point<double> a1, a2, mid_left, mid_right;
};

class ChordProblem {
public:
    explicit ChordProblem(const std::vector<Point<double>>& ccw) : oracle_(ccw) {
        ys_ = oracle_.breakpoints();
        for (double y : ys_) cs_.push_back(std::max(0.0, oracle_.length(y)));
        top_ = static_cast<std::size_t>(std::max_element(cs_.begin(), cs_.end()) - cs_.begin());
        // Last index attaining the maximum, for flat plateaus.
        top_last_ = top_;
        while (top_last_ + 1 < cs_.size() && cs_[top_last_ + 1] >= cs_[top_]) ++top_last_;
    }

    Probe solve() const {
        const double cmax = cs_[top_];
        // phi(s) = c(mid level) - 2s decreases from positive to negative.
        double lo = 0, hi = cmax;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * cmax; ++it) {
            const double s = 0.5 * (lo + hi);
            const double ym = 0.5 * (y_low(s) + y_high(s));
            if (oracle_.length(clamp_y(ym)) - 2 * s > 0) {
                lo = s;
            } else {
                hi = s;
            }
        }
        const double s = 0.5 * (lo + hi);
        const double yt = y_high(s), yb = y_low(s), ym = clamp_y(0.5 * (yt + yb));

        const double lt = oracle_.left(yt), rt = oracle_.right(yt);
        const double lb = oracle_.left(yb), rb = oracle_.right(yb);
        const double lm = oracle_.left(ym), rm = oracle_.right(ym);
        const double xm = 0.5 * (lm + rm);

        // Segment midpoints may slide along flat top or bottom edges.
        const double t_lo = lt + s / 2, t_hi = std::max(t_lo, rt - s / 2);
        const double b_lo = lb + s / 2, b_hi = std::max(b_lo, rb - s / 2);
        const double target = std::clamp(2 * xm, t_lo + b_lo, t_hi + b_hi);
        const double xt = std::clamp(target - 0.5 * (b_lo + b_hi), t_lo, t_hi);
        const double xb = std::clamp(target - xt, b_lo, b_hi);

        Probe p;
        p.mismatch = 0.5 * (xt + xb) - xm;
        p.a1 = {xt + s / 2, yt};
        p.a2 = {xt - s / 2, yt};
        p.mid_left = {lm, ym};
        p.mid_right = {rm, ym};
        return p;
    }

private:
    double clamp_y(double y) const { return std::clamp(y, oracle_.y_min(), oracle_.y_max()); }

    // Largest height whose chord is at least s long.
    double y_high(double s) const {
        if (cs_.back() >= s) return ys_.back();
        std::size_t i = top_last_;
        while (i + 1 < cs_.size() && cs_[i + 1] >= s) ++i;
        const double t = (cs_[i] - s) / (cs_[i] - cs_[i + 1]);
        return ys_[i] + t * (ys_[i + 1] - ys_[i]);
    }

    // Smallest height whose chord is at least s long.
    double y_low(double s) const {
        if (cs_.front() >= s) return ys_.front();
        std::size_t i = top_;
        while (i > 0 && cs_[i - 1] >= s) --i;
        const double t = (cs_[i] - s) / (cs_[i] - cs_[i - 1]);
        return ys_[i] - t * (ys_[i] - ys_[i - 1]);
    }

    ChordOracle<double> oracle_;
    std::vector<double> ys_, cs_;
    std::size_t top_ = 0, top_last_ = 0;
};

struct Direction {
    double theta, c, s;
};

Probe probe(const ConvexPolygon<double>& body, const Direction& d, double diam) {
    std::vector<Point<double>> rotated;
    rotated.reserve(body.size());
    double y_lo = std::numeric_limits<double>::infinity(), y_hi = -y_lo;
    for (const auto& p : body.vertices()) {
        rotated.push_back(rotate(p, d.c, -d.s));
        y_lo = std::min(y_lo, rotated.back().y);
        y_hi = std::max(y_hi, rotated.back().y);
    }
    // An edge parallel to the direction only comes out flat up to rounding.
    const double eps = 1e-14 * diam;
    for (auto& p : rotated) {
        if (y_hi - p.y <= eps) p.y = y_hi;
        if (p.y - y_lo <= eps) p.y = y_lo;
    }
    Probe pr = ChordProblem(rotated).solve();
    pr.a1 = rotate(pr.a1, d.c, d.s);
    pr.a2 = rotate(pr.a2, d.c, d.s);
    pr.mid_left = rotate(pr.mid_left, d.c, d.s);
    pr.mid_right = rotate(pr.mid_right, d.c, d.s);
    return pr;
}

Direction at_angle(double theta) { return {theta, std::cos(theta), std::sin(theta)}; }

// Scan directions: equispaced angles plus every edge direction, where a flat
// top or bottom lets the mismatch jump.
std::vector<Direction> scan_directions(const ConvexPolygon<double>& body, int count) {
    std::vector<Direction> out;
    for (int k = 0; k < count; ++k) out.push_back(at_angle(std::numbers::pi * k / count));
    const auto& v = body.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        Point<double> e = v[(i + 1) % v.size()] - v[i];
        if (e.y < 0 || (e.y == 0 && e.x < 0)) e = -e;
        const double len = std::hypot(e.x, e.y);
        const double theta = std::atan2(e.y, e.x);
        if (theta >= std::numbers::pi) continue;
        out.push_back({theta, e.x / len, e.y / len});
    }
    std::stable_sort(out.begin(), out.end(), [](const Direction& a, const Direction& b) { return a.theta < b.theta; });
    return out;
}

}  // namespace

HexagonFit inscribe(const ConvexPolygon<double>& body) {
    const double diam = diameter(body);
    if (min_width(body) < 1e-6 * diam) throw InscriptionFailed("body is too flat to inscribe a hexagon reliably");
    const double tol = 1e-10 * diam;
    constexpr int kScan = 64;

    auto finish = [&](const Probe& p, double theta) {
        const Point<double> center = 0.5 * (p.mid_left + p.mid_right);
        AffineRegularHexagon<double> h(center, p.a1 - center, p.a2 - center);
        HexagonFit fit{h, fit_residual(body, h), h.to_canonical(), theta};
        return fit;
    };

    const std::vector<Direction> dirs = scan_directions(body, kScan);
    Probe prev = probe(body, dirs.front(), diam);
    if (std::fabs(prev.mismatch) <= tol) return finish(prev, dirs.front().theta);
    const double g0 = prev.mismatch;
    for (std::size_t k = 1; k <= dirs.size(); ++k) {
        // Rotating by pi negates the mismatch, so the closing sample needs no new probe.
        const bool closing = k == dirs.size();
        const Direction dir = closing ? at_angle(std::numbers::pi) : dirs[k];
        Probe cur;
        if (closing) {
            cur.mismatch = -g0;
        } else {
            cur = probe(body, dir, diam);
            if (std::fabs(cur.mismatch) <= tol) return finish(cur, dir.theta);
        }
        if ((prev.mismatch < 0) != (cur.mismatch < 0)) {
            double lo = dirs[k - 1].theta, hi = dir.theta;
            double g_lo = prev.mismatch;
            Probe best = prev;
            double best_theta = lo;
            for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
                const double mid = 0.5 * (lo + hi);
                const Probe pm = probe(body, at_angle(mid), diam);
                if (std::fabs(pm.mismatch) < std::fabs(best.mismatch)) {
                    best = pm;
                    best_theta = mid;
                }
                if (std::fabs(pm.mismatch) <= tol) break;
                if ((pm.mismatch < 0) == (g_lo < 0)) {
                    lo = mid;
                    g_lo = pm.mismatch;
                } else {
                    hi = mid;
                }
            }
            if (std::fabs(best.mismatch) <= tol) return finish(best, best_theta);
            throw InscriptionFailed("angular bisection stalled with mismatch " + to_string(best.mismatch));
        }
        prev = cur;
    }
    throw InscriptionFailed("no sign change of the chord mismatch over [0, pi)");
}

std::optional<AffineRegularHexagon<Rational>> snap_exact(const AffineRegularHexagon<double>& h,
                                                         const ConvexPolygon<Rational>& body) {
    constexpr std::int64_t kMaxDen = 1000000;
    auto snap = [](const Point<double>& p) {
        return Point<Rational>{best_rational(p.x, kMaxDen), best_rational(p.y, kMaxDen)};
    };
    try {
        AffineRegularHexagon<Rational> exact(snap(h.center), snap(h.u), snap(h.v));
        for (const auto& p : exact.vertices())
            if (!on_boundary(body, p)) return std::nullopt;
        return exact;
    } catch (const GeometryError&) {
        return std::nullopt;
    }
}

AffineRegularHexagon<double> to_double(const AffineRegularHexagon<Rational>& h) {
    return {to_double(h.center), to_double(h.u), to_double(h.v)};
}

AffineRegularHexagon<Rational> to_exact(const AffineRegularHexagon<double>& h) {
    return {to_exact(h.center), to_exact(h.u), to_exact(h.v)};
}

}  // namespace hexacent
