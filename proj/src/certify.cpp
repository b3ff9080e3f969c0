#include "hexacent/certify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexacent {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Rational binom(int n, int k) {
    Rational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Power coefficients c_k on [0,1] -> Bernstein coefficients of degree n.
std::vector<Rational> to_bernstein(const std::vector<Rational>& c, int n) {
    std::vector<Rational> b(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        Rational s = 0;
        for (int k = 0; k <= i && k < static_cast<int>(c.size()); ++k)
            if (c[static_cast<std::size_t>(k)] != 0) s += binom(i, k) / binom(n, k) * c[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(i)] = s;
    }
    return b;
}

std::vector<Rational> bernstein_1d(const UniPoly& p, const Rational& a, const Rational& b, int n) {
    const UniPoly moved = p.compose(UniPoly(std::vector<Rational>{a, b - a}));
    return to_bernstein(moved.coefficients(), n);
}

// Split a Bernstein sequence at t = 1/2.
void de_casteljau(const std::vector<Rational>& b, std::vector<Rational>& left, std::vector<Rational>& right) {
    const std::size_t n = b.size();
    std::vector<Rational> work = b;
    left.assign(n, 0);
    right.assign(n, 0);
    for (std::size_t level = 0; level < n; ++level) {
        left[level] = work[0];
        right[n - 1 - level] = work[n - 1 - level];
        for (std::size_t i = 0; i + 1 < n - level; ++i) work[i] = (work[i] + work[i + 1]) / 2;
    }
}

// Bernstein coefficients of p on a box, indexed [w-degree][z-degree].
Matrix bernstein_2d(const BiPoly& p, const Box& box, int m, int n) {
    const Rational hw = box.w2 - box.w1, hz = box.z2 - box.z1;
    Matrix a(static_cast<std::size_t>(m + 1), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
    const UniPoly wmap(std::vector<Rational>{box.w1, hw});
    for (int j = 0; j <= std::max(0, p.degree_z()); ++j) {
        const UniPoly cj = p.z_coefficient(j).compose(wmap);
        if (cj.is_zero()) continue;
        for (int l = 0; l <= j; ++l) {
            Rational f = binom(j, l);
            for (int e = 0; e < j - l; ++e) f *= box.z1;
            for (int e = 0; e < l; ++e) f *= hz;
            if (f == 0) continue;
            for (int k = 0; k <= cj.degree(); ++k) a[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] += cj.coeff(k) * f;
        }
    }
    // Convert along w, then along z.
    Matrix b = a;
    for (int l = 0; l <= n; ++l) {
        std::vector<Rational> col(static_cast<std::size_t>(m + 1));
        for (int k = 0; k <= m; ++k) col[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
        col = to_bernstein(col, m);
        for (int k = 0; k <= m; ++k) b[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = col[static_cast<std::size_t>(k)];
    }
    for (int k = 0; k <= m; ++k) b[static_cast<std::size_t>(k)] = to_bernstein(b[static_cast<std::size_t>(k)], n);
    return b;
}

void split_w(const Matrix& b, Matrix& left, Matrix& right) {
    const std::size_t m = b.size(), n = b[0].size();
    left.assign(m, std::vector<Rational>(n));
    right.assign(m, std::vector<Rational>(n));
    std::vector<Rational> col(m), l, r;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) col[i] = b[i][j];
        de_casteljau(col, l, r);
        for (std::size_t i = 0; i < m; ++i) {
            left[i][j] = l[i];
            right[i][j] = r[i];
        }
    }
}

void split_z(const Matrix& b, Matrix& left, Matrix& right) {
    left.resize(b.size());
    right.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) de_casteljau(b[i], left[i], right[i]);
}

std::pair<Rational, Rational> min_max(const Matrix& b) {
    Rational lo = b[0][0], hi = b[0][0];
    for (const auto& row : b)
        for (const auto& x : row) {
            if (x < lo) lo = x;
            if (x > hi) hi = x;
        }
    return {lo, hi};
}

bool range_satisfies(Relation rel, const Rational& lo, const Rational& hi) {
    switch (rel) {
        case Relation::LessEq: return hi <= 0;
        case Relation::Less: return hi < 0;
        case Relation::GreaterEq: return lo >= 0;
        case Relation::Greater: return lo > 0;
    }
    return false;
}

bool interval_satisfies(Relation rel, const Interval& v) {
    switch (rel) {
        case Relation::LessEq: return v.hi <= 0;
        case Relation::Less: return v.hi < 0;
        case Relation::GreaterEq: return v.lo >= 0;
        case Relation::Greater: return v.lo > 0;
    }
    return false;
}

bool interval_violates(Relation rel, const Interval& v) {
    switch (rel) {
        case Relation::LessEq: return v.lo > 0;
        case Relation::Less: return v.lo >= 0;
        case Relation::GreaterEq: return v.hi < 0;
        case Relation::Greater: return v.hi <= 0;
    }
    return false;
}

Relation flipped(Relation r) {
    switch (r) {
        case Relation::LessEq: return Relation::GreaterEq;
        case Relation::Less: return Relation::Greater;
        case Relation::GreaterEq: return Relation::LessEq;
        case Relation::Greater: return Relation::Less;
    }
    return r;
}

bool weak(Relation r) { return r == Relation::LessEq || r == Relation::GreaterEq; }

Box bounding_box(const Region& r) {
    if (const auto* b = std::get_if<Box>(&r)) return *b;
    if (const auto* t = std::get_if<Triangle>(&r)) {
        const Rational ws[] = {t->a.w, t->b.w, t->c.w}, zs[] = {t->a.z, t->b.z, t->c.z};
        return {*std::min_element(ws, ws + 3), *std::max_element(ws, ws + 3), *std::min_element(zs, zs + 3),
                *std::max_element(zs, zs + 3)};
    }
    const auto& iv = std::get<WInterval>(r);
    return {iv.w1, iv.w2, 0, 0};
}

Rational orient(const ParamPoint& a, const ParamPoint& b, const ParamPoint& c) {
    return (b.w - a.w) * (c.z - a.z) - (b.z - a.z) * (c.w - a.w);
}

Triangle ccw(const Triangle& t) {
    if (orient(t.a, t.b, t.c) < 0) return {t.a, t.c, t.b};
    return t;
}

enum class Overlap { Inside, Outside, Partial };

Overlap classify(const Triangle& t, const Box& b) {
    const ParamPoint corners[] = {{b.w1, b.z1}, {b.w2, b.z1}, {b.w2, b.z2}, {b.w1, b.z2}};
    const ParamPoint* v[] = {&t.a, &t.b, &t.c};
    bool all_inside = true;
    for (int e = 0; e < 3; ++e) {
        const ParamPoint& p = *v[e];
        const ParamPoint& q = *v[(e + 1) % 3];
        int outside = 0;
        for (const auto& c : corners) {
            const Rational o = orient(p, q, c);
            if (o < 0) {
                ++outside;
                all_inside = false;
            }
        }
        if (outside == 4) return Overlap::Outside;
    }
    if (all_inside) return Overlap::Inside;
    const Box bb = bounding_box(t);
    if (b.w2 < bb.w1 || b.w1 > bb.w2 || b.z2 < bb.z1 || b.z1 > bb.z2) return Overlap::Outside;
    return Overlap::Partial;
}

// Divide out (w - c) and (z - c) for c on the bounding box of the region while
// they divide p, adjusting the relation by the sign of the factor on the region.
void factor_root_lines(BiPoly& p, Relation& rel, const Region& region, std::vector<std::string>& factored) {
    if (p.is_zero()) return;
    const Box bb = bounding_box(region);
    const bool univariate = std::holds_alternative<WInterval>(region);
    bool progress = true;
    while (progress) {
        progress = false;
        struct Candidate {
            bool in_w;
            Rational c;
            bool at_min;
        };
        std::vector<Candidate> cands = {{true, bb.w1, true}, {true, bb.w2, false}};
        if (!univariate) {
            cands.push_back({false, bb.z1, true});
            cands.push_back({false, bb.z2, false});
        }
        for (const auto& cand : cands) {
            const UniPoly line(std::vector<Rational>{-cand.c, 1});
            BiPoly q;
            const bool divides = cand.in_w ? p.divide_by_w_poly(line, q) : p.divide_by_z_poly(line, q);
            if (!divides) continue;
            p = q;
            if (!cand.at_min) rel = flipped(rel);  // factor is non-positive on the region
            factored.push_back(std::string(cand.in_w ? "w" : "z") + " - " + to_string(cand.c));
            progress = true;
            break;
        }
    }
}

struct Node {
    Box box;
    Matrix b;
    int depth;
    bool inside;
};

}  // namespace

void validate_region(const Region& r) {
    if (const auto* b = std::get_if<Box>(&r)) {
        if (!(b->w1 < b->w2 && b->z1 < b->z2)) throw std::invalid_argument("degenerate box region");
    } else if (const auto* t = std::get_if<Triangle>(&r)) {
        if (orient(t->a, t->b, t->c) == 0) throw std::invalid_argument("degenerate triangle region");
    } else {
        const auto& iv = std::get<WInterval>(r);
        if (!(iv.w1 < iv.w2)) throw std::invalid_argument("degenerate interval region");
    }
}

bool region_contains(const Region& r, const ParamPoint& p) {
    if (const auto* b = std::get_if<Box>(&r)) return b->w1 <= p.w && p.w <= b->w2 && b->z1 <= p.z && p.z <= b->z2;
    if (const auto* t0 = std::get_if<Triangle>(&r)) {
        const Triangle t = ccw(*t0);
        return orient(t.a, t.b, p) >= 0 && orient(t.b, t.c, p) >= 0 && orient(t.c, t.a, p) >= 0;
    }
    const auto& iv = std::get<WInterval>(r);
    return iv.w1 <= p.w && p.w <= iv.w2;
}

std::string describe(const Region& r) {
    auto pt = [](const ParamPoint& p) { return "(" + to_string(p.w) + ", " + to_string(p.z) + ")"; };
    if (const auto* b = std::get_if<Box>(&r))
        return "[" + to_string(b->w1) + ", " + to_string(b->w2) + "] x [" + to_string(b->z1) + ", " + to_string(b->z2) + "]";
    if (const auto* t = std::get_if<Triangle>(&r)) return "triangle " + pt(t->a) + " " + pt(t->b) + " " + pt(t->c);
    const auto& iv = std::get<WInterval>(r);
    return "[" + to_string(iv.w1) + ", " + to_string(iv.w2) + "]";
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::LessEq: return "<= 0";
        case Relation::Less: return "< 0";
        case Relation::GreaterEq: return ">= 0";
        case Relation::Greater: return "> 0";
    }
    return "?";
}

bool holds(Relation r, const Rational& v) {
    switch (r) {
        case Relation::LessEq: return v <= 0;
        case Relation::Less: return v < 0;
        case Relation::GreaterEq: return v >= 0;
        case Relation::Greater: return v > 0;
    }
    return false;
}

std::string to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Proved: return "Proved";
        case CertStatus::Disproved: return "Disproved";
        case CertStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::pair<Rational, Rational> bernstein_range(const BiPoly& p, const Box& box) {
    const int m = std::max(0, p.degree_w()), n = std::max(0, p.degree_z());
    return min_max(bernstein_2d(p, box, m, n));
}

SignCertificate certify_sign(const BiPoly& p0, const Region& region, Relation rel0, CertifyBudget budget) {
    validate_region(region);
    SignCertificate cert;
    cert.relation = rel0;
    cert.region = region;

    if (const auto* iv = std::get_if<WInterval>(&region)) {
        if (p0.degree_z() > 0) throw std::invalid_argument("interval region needs a polynomial in w only");
        SignCertificate u = certify_sign(p0.z_coefficient(0), *iv, rel0, budget);
        return u;
    }

    // Cheap disproof first: region vertices.
    std::vector<ParamPoint> vertices;
    if (const auto* b = std::get_if<Box>(&region)) {
        vertices = {{b->w1, b->z1}, {b->w2, b->z1}, {b->w2, b->z2}, {b->w1, b->z2}};
    } else {
        const auto& t = std::get<Triangle>(region);
        vertices = {t.a, t.b, t.c};
    }
    for (const auto& v : vertices) {
        const Rational val = p0.eval(v.w, v.z);
        if (!holds(rel0, val)) {
            cert.status = CertStatus::Disproved;
            cert.witness = Witness{v, val};
            return cert;
        }
    }

    BiPoly p = p0;
    Relation rel = rel0;
    if (weak(rel)) factor_root_lines(p, rel, region, cert.factored);

    const int m = std::max(0, p.degree_w()), n = std::max(0, p.degree_z());
    const bool is_triangle = std::holds_alternative<Triangle>(region);
    const Triangle tri = is_triangle ? ccw(std::get<Triangle>(region)) : Triangle{};
    const Box root_box = bounding_box(region);

    std::vector<Node> stack;
    stack.push_back({root_box, bernstein_2d(p, root_box, m, n), 0, !is_triangle});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        ++cert.boxes_examined;
        cert.max_depth = std::max(cert.max_depth, node.depth);

        if (!node.inside) {
            const Overlap o = classify(tri, node.box);
            if (o == Overlap::Outside) continue;
            node.inside = o == Overlap::Inside;
        }
        const auto [lo, hi] = min_max(node.b);
        if (range_satisfies(rel, lo, hi)) continue;

        // Corner coefficients are exact values of the cofactor.
        const Box& bx = node.box;
        const ParamPoint corners[] = {{bx.w1, bx.z1}, {bx.w2, bx.z1}, {bx.w1, bx.z2}, {bx.w2, bx.z2}};
        for (const auto& c : corners) {
            if (!region_contains(region, c)) continue;
            const Rational val = p0.eval(c.w, c.z);
            if (!holds(rel0, val)) {
                cert.status = CertStatus::Disproved;
                cert.witness = Witness{c, val};
                return cert;
            }
        }
        if (node.depth >= budget.max_depth || cert.boxes_examined + static_cast<long>(stack.size()) + 2 > budget.max_boxes) {
            cert.status = CertStatus::Inconclusive;
            return cert;
        }

        const Rational ww = bx.w2 - bx.w1, wz = bx.z2 - bx.z1;
        const bool along_w = n == 0 || (m > 0 && ww >= wz);
        Matrix left, right;
        Box lb = bx, rb = bx;
        if (along_w) {
            split_w(node.b, left, right);
            const Rational mid = (bx.w1 + bx.w2) / 2;
            lb.w2 = mid;
            rb.w1 = mid;
        } else {
            split_z(node.b, left, right);
            const Rational mid = (bx.z1 + bx.z2) / 2;
            lb.z2 = mid;
            rb.z1 = mid;
        }
        stack.push_back({rb, std::move(right), node.depth + 1, node.inside});
        stack.push_back({lb, std::move(left), node.depth + 1, node.inside});
    }
    cert.status = CertStatus::Proved;
    return cert;
}

SignCertificate certify_sign(const UniPoly& p0, const WInterval& region, Relation rel0, CertifyBudget budget) {
    validate_region(region);
    SignCertificate cert;
    cert.relation = rel0;
    cert.region = region;

    for (const Rational& x : {region.w1, region.w2}) {
        const Rational val = p0.eval(x);
        if (!holds(rel0, val)) {
            cert.status = CertStatus::Disproved;
            cert.witness = Witness{{x, 0}, val};
            return cert;
        }
    }

    BiPoly as_bi = BiPoly::from_w(p0);
    Relation rel = rel0;
    if (weak(rel)) factor_root_lines(as_bi, rel, region, cert.factored);
    const UniPoly p = as_bi.z_coefficient(0);
    const int n = std::max(0, p.degree());

    struct Piece {
        Rational a, b;
        std::vector<Rational> coeffs;
        int depth;
    };
    std::vector<Piece> stack;
    stack.push_back({region.w1, region.w2, bernstein_1d(p, region.w1, region.w2, n), 0});
    while (!stack.empty()) {
        Piece piece = std::move(stack.back());
        stack.pop_back();
        ++cert.boxes_examined;
        cert.max_depth = std::max(cert.max_depth, piece.depth);
        const auto [lo, hi] = std::minmax_element(piece.coeffs.begin(), piece.coeffs.end());
        if (range_satisfies(rel, *lo, *hi)) continue;
        for (const Rational& x : {piece.a, piece.b}) {
            const Rational val = p0.eval(x);
            if (!holds(rel0, val)) {
                cert.status = CertStatus::Disproved;
                cert.witness = Witness{{x, 0}, val};
                return cert;
            }
        }
        if (piece.depth >= budget.max_depth || cert.boxes_examined + static_cast<long>(stack.size()) + 2 > budget.max_boxes) {
            cert.status = CertStatus::Inconclusive;
            return cert;
        }
        std::vector<Rational> left, right;
        de_casteljau(piece.coeffs, left, right);
        const Rational mid = (piece.a + piece.b) / 2;
        stack.push_back({mid, piece.b, std::move(right), piece.depth + 1});
        stack.push_back({piece.a, mid, std::move(left), piece.depth + 1});
    }
    cert.status = CertStatus::Proved;
    return cert;
}

// ------------------------------------------------------------ root finding

namespace {

int sign_variations(const std::vector<Rational>& b) {
    int count = 0, last = 0;
    for (const auto& x : b) {
        const int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

RootInterval refine(const UniPoly& q, Rational a, Rational b, const Rational& width) {
    int sa = q.sign_at(a);
    while (b - a > width) {
        const Rational mid = (a + b) / 2;
        const int sm = q.sign_at(mid);
        if (sm == 0) return {mid, mid};
        if (sm == sa) {
            a = mid;
        } else {
            b = mid;
        }
    }
    (void)sa;
    return {a, b};
}

void isolate(const UniPoly& q, const Rational& a, const Rational& b, const Rational& width,
             std::vector<RootInterval>& out, int depth) {
    const std::vector<Rational> coeffs = bernstein_1d(q, a, b, q.degree());
    const int v = sign_variations(coeffs);
    if (v == 0) return;
    const bool endpoint_root = q.sign_at(a) == 0 || q.sign_at(b) == 0;
    if (v == 1 && !endpoint_root) {
        out.push_back(refine(q, a, b, width));
        return;
    }
    if (depth > 2000) throw std::runtime_error("root isolation did not converge");
    const Rational mid = (a + b) / 2;
    isolate(q, a, mid, width, out, depth + 1);
    if (q.sign_at(mid) == 0) out.push_back({mid, mid});
    isolate(q, mid, b, width, out, depth + 1);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                             const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
    if (hi < lo) throw std::invalid_argument("root isolation on an empty interval");
    std::vector<RootInterval> out;
    if (p.degree() < 1) return out;
    const UniPoly q = p.squarefree();
    if (lo == hi) {
        if (q.sign_at(lo) == 0) out.push_back({lo, lo});
        return out;
    }
    if (q.sign_at(lo) == 0) out.push_back({lo, lo});
    isolate(q, lo, hi, width, out, 0);
    if (q.sign_at(hi) == 0) out.push_back({hi, hi});
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

std::vector<RootInterval> real_roots(const UniPoly& p, const Rational& width) {
    if (p.degree() < 1) return {};
    Rational bound = 0;
    for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, Rational(abs(p.coeff(i) / p.leading())));
    bound += 1;
    return isolate_real_roots(p, -bound, bound, width);
}

UniPoly resultant_z(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const int m = std::max(0, p.degree_z()), n = std::max(0, q.degree_z());
    auto power = [](const UniPoly& base, int e) {
        UniPoly r(1);
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    };
    if (m == 0) return power(p.z_coefficient(0), n);
    if (n == 0) return power(q.z_coefficient(0), m);

    const int size = m + n;
    std::vector<std::vector<UniPoly>> mat(static_cast<std::size_t>(size), std::vector<UniPoly>(static_cast<std::size_t>(size)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = p.z_coefficient(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = q.z_coefficient(n - i);

    // Fraction-free Bareiss elimination over Q[w].
    int sign = 1;
    UniPoly prev(1);
    for (int k = 0; k + 1 < size; ++k) {
        auto K = static_cast<std::size_t>(k);
        if (mat[K][K].is_zero()) {
            std::size_t r = K + 1;
            while (r < mat.size() && mat[r][K].is_zero()) ++r;
            if (r == mat.size()) return {};
            std::swap(mat[K], mat[r]);
            sign = -sign;
        }
        for (std::size_t i = K + 1; i < mat.size(); ++i) {
            for (std::size_t j = K + 1; j < mat.size(); ++j)
                mat[i][j] = (mat[i][j] * mat[K][K] - mat[i][K] * mat[K][j]).exact_div(prev);
            mat[i][K] = UniPoly();
        }
        prev = mat[K][K];
    }
    const UniPoly det = mat.back().back();
    return sign > 0 ? det : -det;
}

// -------------------------------------------------------- critical points

CriticalPointReport critical_points(const BiPoly& p, const Region& region) {
    validate_region(region);
    if (std::holds_alternative<WInterval>(region)) throw std::invalid_argument("critical points need a 2-D region");
    CriticalPointReport report;

    std::vector<ParamPoint> verts;
    if (const auto* b = std::get_if<Box>(&region)) {
        verts = {{b->w1, b->z1}, {b->w2, b->z1}, {b->w2, b->z2}, {b->w1, b->z2}};
    } else {
        const Triangle t = ccw(std::get<Triangle>(region));
        verts = {t.a, t.b, t.c};
    }

    for (const auto& v : verts) {
        CriticalPoint cp;
        cp.kind = CriticalPoint::Kind::Vertex;
        cp.w = to_double(v.w);
        cp.z = to_double(v.z);
        cp.exact_value = p.eval(v.w, v.z);
        cp.value = to_double(*cp.exact_value);
        cp.where = "vertex (" + to_string(v.w) + ", " + to_string(v.z) + ")";
        report.points.push_back(cp);
    }

    for (std::size_t e = 0; e < verts.size(); ++e) {
        const ParamPoint& a = verts[e];
        const ParamPoint& b = verts[(e + 1) % verts.size()];
        const Rational dw = b.w - a.w, dz = b.z - a.z;
        std::string label;
        if (dz == 0) {
            label = "edge z = " + to_string(a.z);
        } else if (dw == 0) {
            label = "edge w = " + to_string(a.w);
        } else {
            label = "edge z = " + to_string(Rational(dz / dw)) + "*w + " + to_string(Rational(a.z - dz / dw * a.w));
        }
        const UniPoly g = p.along(a.w, dw, a.z, dz).derivative();
        if (g.is_zero()) continue;
        for (const auto& r : isolate_real_roots(g, 0, 1)) {
            if (r.hi <= 0 || r.lo >= 1) continue;
            const Rational t = r.mid();
            const Rational pw = a.w + dw * t, pz = a.z + dz * t;
            CriticalPoint cp;
            cp.kind = CriticalPoint::Kind::Edge;
            cp.w = to_double(pw);
            cp.z = to_double(pz);
            const Rational val = p.eval(pw, pz);
            cp.value = to_double(val);
            if (r.exact()) cp.exact_value = val;
            cp.where = label;
            report.points.push_back(cp);
        }
    }

    const BiPoly pw = p.derivative_w(), pz = p.derivative_z();
    if (!pw.is_zero() && !pz.is_zero()) {
        report.interior_resultant = resultant_z(pw, pz);
        if (!report.interior_resultant.is_zero()) {
            for (const auto& r : real_roots(report.interior_resultant)) report.resultant_roots.push_back(r.approx());
            const Box bb = bounding_box(region);
            double scale = 1;
            for (const auto& [k, c] : pw.terms()) scale = std::max(scale, std::fabs(to_double(c)));
            for (const auto& r : isolate_real_roots(report.interior_resultant, bb.w1, bb.w2)) {
                const Rational w = r.mid();
                const UniPoly zpoly = pz.at_w(w);
                if (zpoly.is_zero()) continue;
                for (const auto& zr : isolate_real_roots(zpoly, bb.z1, bb.z2)) {
                    const ParamPoint pt{w, zr.mid()};
                    if (!region_contains(region, pt)) continue;
                    if (std::fabs(pw.eval(to_double(pt.w), to_double(pt.z))) > 1e-6 * scale) continue;
                    CriticalPoint cp;
                    cp.kind = CriticalPoint::Kind::Interior;
                    cp.w = to_double(pt.w);
                    cp.z = to_double(pt.z);
                    cp.value = to_double(p.eval(pt.w, pt.z));
                    cp.where = "interior";
                    report.points.push_back(cp);
                }
            }
        }
    }

    report.maximum = *std::max_element(report.points.begin(), report.points.end(),
                                       [](const CriticalPoint& x, const CriticalPoint& y) { return x.value < y.value; });
    return report;
}

// --------------------------------------------------- interval certificates

IntervalCertificate certify_interval_sign(const IntervalFunction& f, const Rational& lo, const Rational& hi,
                                          Relation rel, int max_depth, long budget) {
    if (!(lo < hi)) throw std::invalid_argument("degenerate interval region");
    IntervalCertificate cert;
    cert.relation = rel;
    cert.lo = lo;
    cert.hi = hi;

    struct Piece {
        Rational a, b;
        int depth;
    };
    std::vector<Piece> stack{{lo, hi, 0}};
    while (!stack.empty()) {
        const Piece piece = stack.back();
        stack.pop_back();
        ++cert.pieces;
        cert.max_depth = std::max(cert.max_depth, piece.depth);
        const Rational mid = (piece.a + piece.b) / 2;
        try {
            const Interval x = Interval::hull(piece.a, piece.b);
            const IntervalDual whole = f(IntervalDual::variable(x));
            Interval enclosure = whole.v;
            const Interval xm = Interval::enclose(mid);
            const Interval at_mid = f(IntervalDual(xm)).v;
            if (std::isfinite(whole.d.lo) && std::isfinite(whole.d.hi)) {
                const Interval mv = at_mid + whole.d * (x - xm);
                enclosure.lo = std::max(enclosure.lo, mv.lo);
                enclosure.hi = std::min(enclosure.hi, mv.hi);
            }
            if (enclosure.lo <= enclosure.hi && interval_satisfies(rel, enclosure)) continue;
            if (interval_violates(rel, at_mid)) {
                cert.status = CertStatus::Disproved;
                cert.witness = mid;
                return cert;
            }
        } catch (const std::domain_error&) {
            // The enclosure hit a singularity; refine.
        }
        if (piece.depth >= max_depth || cert.pieces + static_cast<long>(stack.size()) + 2 > budget) {
            cert.status = CertStatus::Inconclusive;
            return cert;
        }
        stack.push_back({mid, piece.b, piece.depth + 1});
        stack.push_back({piece.a, mid, piece.depth + 1});
    }
    cert.status = CertStatus::Proved;
    return cert;
}

}  // namespace hexacent
