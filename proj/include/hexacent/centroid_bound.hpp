#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hexacent/geometry.hpp"
#include "hexacent/hexagon.hpp"

namespace hexacent {

/// The two scalars of the heptagon family: w is the height where the
/// supporting line at a1 meets the axis x = 0, z places p1 on segment a1 m1.
template <typename T>
struct GWParams {
    T w;
    T z;
};

// Throws GeometryError(OutOfRange) unless 1 <= w <= 2 and 0 <= z <= 1.
template <typename T>
void validate(const GWParams<T>& p);

template <typename T>
Point<T> point_m1(const T& w);  // ((2+w)/w, (2-w)/w)
template <typename T>
Point<T> point_p1(const GWParams<T>& p);  // (1-z) a1 + z m1

// Heptagon u p2 a3 a4 a5 a6 p1 with u = (0, w).
template <typename T>
ConvexPolygon<T> body_G(const GWParams<T>& p);
// Pentagon m1 u m2 a4 a5, the heptagon at z = 1.
template <typename T>
ConvexPolygon<T> body_P(const T& w);
// (0,2), (-2,0), (-1,-1), (1,-1), (2,0).
template <typename T>
ConvexPolygon<T> tight_pentagon();

// Height where the supporting line of A at a1 = (1,1) with the smallest
// intercept meets x = 0. A must be in the canonical frame. Throws
// GeometryError(NotCanonical) if a1 is not on the boundary or the intercept
// leaves [1, 2] by more than the tolerance; the result is clamped to [1, 2].
template <typename T>
T support_parameter_w(const ConvexPolygon<T>& a);

template <typename T>
struct BoundReport {
    AffineRegularHexagon<T> hexagon;
    double residual = 0;
    Point<T> centroid;
    T gauge_value;
    T ratio;
    T margin;  // ratio - gauge_value
    bool contained = false;
    std::optional<T> w_extracted;
};

// Inscribes a hexagon and compares the gauge of the centroid against ratio.
BoundReport<double> check_theorem(const ConvexPolygon<double>& a, double ratio = 4.0 / 21.0);

// Same check against a hexagon already known to be inscribed.
template <typename T>
BoundReport<T> check_theorem(const ConvexPolygon<T>& a, const AffineRegularHexagon<T>& hexagon, const T& ratio,
                             double residual = 0);

// Exact check: inscribes in floating point and snaps the hexagon to rationals.
// Returns nothing when no exactly inscribed hexagon is recovered.
std::optional<BoundReport<Rational>> check_theorem_exact(const ConvexPolygon<Rational>& a, const Rational& ratio);

enum class Generator { Ellipse, Star };

struct BodySpec {
    Generator generator = Generator::Ellipse;
    int vertices = 8;  // hull size for ellipses, sample count for star bodies; 3..64
};

struct RandomBody {
    ConvexPolygon<double> polygon;
    // Star bodies come with the canonical hexagon already inscribed.
    std::optional<AffineRegularHexagon<double>> hexagon;
    double w_sampled = 0;
};

RandomBody random_body(std::uint64_t seed, const BodySpec& spec);

// Wing comparison for a body in the canonical frame with parameter w in
// [w0, 2): the part of A inside the triangle p1 a6 m1 (z = z_w) should not sit
// higher than the triangle itself. Returns the two centroid heights, or
// nothing when the check does not apply.
struct WingCheck {
    double w = 0;
    double body_part = 0;
    double triangle = 0;
    bool violated = false;
};
std::optional<WingCheck> wing_check(const ConvexPolygon<double>& canonical_body);

struct TrialResult {
    std::uint64_t seed = 0;
    Generator generator = Generator::Ellipse;
    int vertices = 0;
    bool inscription_failed = false;
    std::string failure;
    double margin = 0;
    double residual = 0;
    double diameter = 0;
    bool wing_checked = false;
    bool wing_counterexample = false;
};

struct MonteCarloSummary {
    long trials = 0;
    double min_margin = 0;
    std::uint64_t argmin_seed = 0;
    std::vector<Point<double>> argmin_body;
    long violations = 0;
    long wing_counterexamples = 0;
    long wing_checked = 0;
    long inscription_failures = 0;
    double max_residual = 0;  // over ellipse bodies, relative to the diameter
};

enum class GeneratorMix { Ellipse, Star, Mixed };

// Per-trial seeds derive from (seed, index), so the summary does not depend on
// the number of worker threads.
MonteCarloSummary monte_carlo(long trials, std::uint64_t seed, GeneratorMix mix = GeneratorMix::Mixed,
                              unsigned threads = 0);

TrialResult run_trial(std::uint64_t trial_seed, Generator generator, int vertices);

}  // namespace hexacent
