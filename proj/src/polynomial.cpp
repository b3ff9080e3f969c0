#include "hexacent/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hexacent {

namespace {

std::string coeff_text(const Rational& c) {
    const std::string s = to_string(c);
    return c.get_den() == 1 ? s : "(" + s + ")";
}

void append_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& mono) {
    const Rational mag = abs(c);
    if (first) {
        if (c < 0) os << '-';
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
        os << coeff_text(mag);
    } else if (mag == 1) {
        os << mono;
    } else {
        os << coeff_text(mag) << '*' << mono;
    }
}

std::string power(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

UniPoly::UniPoly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

UniPoly UniPoly::descending(std::initializer_list<Rational> coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    std::reverse(c.begin(), c.end());
    return UniPoly(std::move(c));
}

UniPoly UniPoly::x() { return UniPoly(std::vector<Rational>{0, 1}); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + UniPoly(*it);
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double UniPoly::eval(double x) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
    return r;
}

Interval UniPoly::eval(const Interval& x) const {
    Interval r(0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Interval::enclose(*it);
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x = -x;
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = c_;
    const int dd = d.degree();
    std::vector<Rational> q(std::max(0, degree() - dd + 1));
    for (int i = degree(); i >= dd; --i) {
        const Rational f = r[static_cast<std::size_t>(i)] / d.leading();
        if (f == 0) continue;
        q[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("polynomial does not divide exactly");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    std::vector<Rational> c = c_;
    const Rational lead = c.back();
    for (auto& x : c) x /= lead;
    return UniPoly(std::move(c));
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly UniPoly::squarefree() const {
    if (degree() < 1) return monic();
    return exact_div(gcd(*this, derivative())).monic();
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c != 0) append_term(os, first, c, power(var, i));
    }
    return os.str();
}

// ----------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const Rational& constant) { add_term({0, 0}, constant); }

BiPoly BiPoly::w() { return monomial(1, 1, 0); }
BiPoly BiPoly::z() { return monomial(1, 0, 1); }

BiPoly BiPoly::monomial(const Rational& coeff, int dw, int dz) {
    if (dw < 0 || dz < 0) throw std::invalid_argument("negative exponent");
    BiPoly p;
    p.add_term({dw, dz}, coeff);
    return p;
}

BiPoly BiPoly::from_w(const UniPoly& p) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term({i, 0}, p.coeff(i));
    return r;
}

BiPoly BiPoly::from_z(const UniPoly& p) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term({0, i}, p.coeff(i));
    return r;
}

void BiPoly::add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int BiPoly::degree_w() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree_z() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

Rational BiPoly::coeff(int dw, int dz) const {
    auto it = terms_.find({dw, dz});
    return it == terms_.end() ? Rational(0) : it->second;
}

BiPoly BiPoly::derivative_w() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.add_term({k.first - 1, k.second}, c * k.first);
    return r;
}

BiPoly BiPoly::derivative_z() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.add_term({k.first, k.second - 1}, c * k.second);
    return r;
}

Rational BiPoly::eval(const Rational& w, const Rational& z) const {
    Rational r = 0;
    for (int j = degree_z(); j >= 0; --j) r = r * z + z_coefficient(j).eval(w);
    return r;
}

double BiPoly::eval(double w, double z) const {
    double r = 0;
    for (int j = degree_z(); j >= 0; --j) r = r * z + z_coefficient(j).eval(w);
    return r;
}

Interval BiPoly::eval(const Interval& w, const Interval& z) const {
    Interval r(0.0);
    for (int j = degree_z(); j >= 0; --j) r = r * z + z_coefficient(j).eval(w);
    return r;
}

UniPoly BiPoly::z_coefficient(int j) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_w() + 1)));
    for (const auto& [k, v] : terms_)
        if (k.second == j) c[static_cast<std::size_t>(k.first)] = v;
    return UniPoly(std::move(c));
}

UniPoly BiPoly::at_z(const Rational& value) const {
    UniPoly r;
    for (int j = degree_z(); j >= 0; --j) r = r * UniPoly(value) + z_coefficient(j);
    return r;
}

UniPoly BiPoly::at_w(const Rational& value) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_z() + 1)));
    for (const auto& [k, v] : terms_) {
        Rational p = v;
        for (int i = 0; i < k.first; ++i) p *= value;
        c[static_cast<std::size_t>(k.second)] += p;
    }
    return UniPoly(std::move(c));
}

UniPoly BiPoly::substitute_z(const UniPoly& g) const {
    UniPoly r;
    for (int j = degree_z(); j >= 0; --j) r = r * g + z_coefficient(j);
    return r;
}

UniPoly BiPoly::along(const Rational& w0, const Rational& dw, const Rational& z0, const Rational& dz) const {
    const UniPoly wt(std::vector<Rational>{w0, dw});
    const UniPoly zt(std::vector<Rational>{z0, dz});
    UniPoly r;
    for (int j = degree_z(); j >= 0; --j) r = r * zt + z_coefficient(j).compose(wt);
    return r;
}

BiPoly::Key BiPoly::monomial_content() const {
    if (terms_.empty()) return {0, 0};
    Key k = terms_.begin()->first;
    for (const auto& [t, c] : terms_) {
        k.first = std::min(k.first, t.first);
        k.second = std::min(k.second, t.second);
    }
    return k;
}

BiPoly BiPoly::shift_down(int dw, int dz) const {
    BiPoly r;
    for (const auto& [k, c] : terms_) {
        if (k.first < dw || k.second < dz) throw std::domain_error("monomial does not divide polynomial");
        r.add_term({k.first - dw, k.second - dz}, c);
    }
    return r;
}

bool BiPoly::divide_by_w_poly(const UniPoly& d, BiPoly& quotient) const {
    BiPoly q;
    for (int j = 0; j <= degree_z(); ++j) {
        auto [qj, rj] = z_coefficient(j).divmod(d);
        if (!rj.is_zero()) return false;
        for (int i = 0; i <= qj.degree(); ++i) q.add_term({i, j}, qj.coeff(i));
    }
    quotient = std::move(q);
    return true;
}

bool BiPoly::divide_by_z_poly(const UniPoly& d, BiPoly& quotient) const {
    BiPoly q;
    for (int i = 0; i <= degree_w(); ++i) {
        std::vector<Rational> col(static_cast<std::size_t>(std::max(0, degree_z() + 1)));
        for (const auto& [k, c] : terms_)
            if (k.first == i) col[static_cast<std::size_t>(k.second)] = c;
        auto [qi, ri] = UniPoly(std::move(col)).divmod(d);
        if (!ri.is_zero()) return false;
        for (int j = 0; j <= qi.degree(); ++j) q.add_term({i, j}, qi.coeff(j));
    }
    quotient = std::move(q);
    return true;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

BiPoly operator-(const BiPoly& a) {
    BiPoly r;
    for (const auto& [k, c] : a.terms_) r.add_term(k, -c);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (!a.is_zero() && !b.is_zero() && a.total_degree() + b.total_degree() > BiPoly::kMaxTotalDegree)
        throw std::length_error("bivariate product exceeds total degree " +
                                std::to_string(BiPoly::kMaxTotalDegree));
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    // Highest total degree first, then by w degree.
    std::vector<std::pair<Key, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        const int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
        if (dx != dy) return dx > dy;
        return x.first.second > y.first.second;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : sorted) {
        std::string mono = power("z", k.second);
        const std::string wp = power("w", k.first);
        if (!wp.empty()) mono = mono.empty() ? wp : mono + "*" + wp;
        append_term(os, first, c, mono);
    }
    return os.str();
}

// ------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(BiPoly n, BiPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den = BiPoly(1);
        return;
    }
    const auto kn = num.monomial_content();
    const auto kd = den.monomial_content();
    const int cw = std::min(kn.first, kd.first), cz = std::min(kn.second, kd.second);
    if (cw > 0 || cz > 0) {
        num = num.shift_down(cw, cz);
        den = den.shift_down(cw, cz);
    }
}

Rational RationalFunction::eval(const Rational& w, const Rational& z) const {
    const Rational d = den.eval(w, z);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num.eval(w, z) / d;
}

RationalFunction RationalFunction::derivative_z() const {
    return {num.derivative_z() * den - num * den.derivative_z(), den * den};
}

RationalFunction RationalFunction::derivative_w() const {
    return {num.derivative_w() * den - num * den.derivative_w(), den * den};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den == b.den) return {a.num - b.num, a.den};
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.num, a.den * b.den};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den, a.den * b.num};
}

bool RationalFunction::same_as(const RationalFunction& other) const {
    return num * other.den == other.num * den;
}

}  // namespace hexacent
