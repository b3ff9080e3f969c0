#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hexacent/interval.hpp"
#include "hexacent/polynomial.hpp"
#include "hexacent/rational.hpp"

namespace hexacent {

struct ParamPoint {
    Rational w;
    Rational z;
};

struct Box {
    Rational w1, w2, z1, z2;
};

// Vertices in (w, z) coordinates; orientation is normalized internally.
struct Triangle {
    ParamPoint a, b, c;
};

struct WInterval {
    Rational w1, w2;
};

using Region = std::variant<Box, Triangle, WInterval>;

// Throws std::invalid_argument for regions with zero area or length.
void validate_region(const Region& r);
bool region_contains(const Region& r, const ParamPoint& p);
std::string describe(const Region& r);

enum class Relation { LessEq, Less, GreaterEq, Greater };
std::string to_string(Relation r);
bool holds(Relation r, const Rational& value);

enum class CertStatus { Proved, Disproved, Inconclusive };
std::string to_string(CertStatus s);

struct CertifyBudget {
    int max_depth = 30;
    long max_boxes = 1'000'000;
};

struct Witness {
    ParamPoint at;
    Rational value;
};

struct SignCertificate {
    Relation relation = Relation::LessEq;
    Region region = WInterval{0, 1};
    CertStatus status = CertStatus::Inconclusive;
    std::optional<Witness> witness;  // set when Disproved
    long boxes_examined = 0;
    int max_depth = 0;
    // Root lines divided out before subdivision, e.g. "w - 2".
    std::vector<std::string> factored;
};

// Certified sign check by exact Bernstein subdivision. Weak relations first
// divide out axis-parallel root lines lying on the region boundary.
SignCertificate certify_sign(const BiPoly& p, const Region& region, Relation rel, CertifyBudget budget = {});
SignCertificate certify_sign(const UniPoly& p, const WInterval& region, Relation rel, CertifyBudget budget = {});

// Range enclosure of p on a box from its Bernstein coefficients.
std::pair<Rational, Rational> bernstein_range(const BiPoly& p, const Box& box);

/// Isolating interval for one real root; lo == hi when the root is rational
/// and was hit exactly.
struct RootInterval {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
    double approx() const { return to_double(Rational((lo + hi) / 2)); }
    Rational mid() const { return (lo + hi) / 2; }
};

// All distinct real roots in the closed interval [lo, hi], refined to the given width.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                             const Rational& width = Rational(1, 1000000000000));
// All distinct real roots.
std::vector<RootInterval> real_roots(const UniPoly& p, const Rational& width = Rational(1, 1000000000000));

// Resultant of p and q with respect to z, as a polynomial in w.
UniPoly resultant_z(const BiPoly& p, const BiPoly& q);

struct CriticalPoint {
    enum class Kind { Interior, Edge, Vertex };
    Kind kind = Kind::Vertex;
    double w = 0, z = 0;
    double value = 0;
    std::optional<Rational> exact_value;  // vertices and exactly located points
    std::string where;
};

struct CriticalPointReport {
    std::vector<CriticalPoint> points;
    UniPoly interior_resultant;            // Res_z(p_w, p_z)
    std::vector<double> resultant_roots;   // every real root, for reporting
    CriticalPoint maximum;
};

// Candidates for the global maximum of p over a box or triangle: interior
// stationary points, stationary points of every edge restriction, vertices.
CriticalPointReport critical_points(const BiPoly& p, const Region& region);

using IntervalFunction = std::function<IntervalDual(const IntervalDual&)>;

struct IntervalCertificate {
    Relation relation = Relation::LessEq;
    Rational lo, hi;
    CertStatus status = CertStatus::Inconclusive;
    std::optional<Rational> witness;  // a point whose enclosure violates the relation
    long pieces = 0;
    int max_depth = 0;
};

// Numeric certificate for a univariate expression (which may contain square
// roots) by outward-rounded interval evaluation with mean-value refinement.
IntervalCertificate certify_interval_sign(const IntervalFunction& f, const Rational& lo, const Rational& hi,
                                          Relation rel, int max_depth = 24, long budget = 1'000'000);

}  // namespace hexacent
