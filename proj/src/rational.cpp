#include "hexacent/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hexacent {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("malformed number: '" + std::string(whole) + "'");
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty number");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(trim(s.substr(0, slash)), s);
        std::string_view den_text = trim(s.substr(slash + 1));
        if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
        mpz_class den = parse_integer(den_text, s);
        if (den == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    // decimal: [sign] digits [. digits] [e|E [sign] digits]
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        std::string_view exp_text = s.substr(e + 1);
        if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
        if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
            throw ParseError("malformed exponent: '" + std::string(s) + "'");
        }
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mantissa.substr(0, dot);
        std::string_view fp = mantissa.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
            throw ParseError("malformed number: '" + std::string(s) + "'");
        }
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mantissa)) throw ParseError("malformed number: '" + std::string(s) + "'");
        digits = std::string(mantissa);
    }
    if (digits.empty()) digits = "0";
    mpz_class num(digits, 10);
    const long shift = exponent - frac_len;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational q = shift >= 0 ? Rational(num * scale) : Rational(num, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

double parse_double(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty number");
    if (is_fraction_literal(s)) return parse_rational(s).get_d();
    std::string buf(s);
    char* end = nullptr;
    const double x = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || !std::isfinite(x)) {
        throw ParseError("malformed number: '" + buf + "'");
    }
    return x;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(double x) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

Rational exact_from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite value has no rational form");
    return Rational(x);
}

Rational best_rational(double x, std::int64_t max_den) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite value has no rational form");
    // convergents h/k of the continued fraction of x
    mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
    mpz_class k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 64 && frac > 1e-18; ++iter) {
        const double inv = 1.0 / frac;
        const double a_d = std::floor(inv);
        if (a_d > 9e15) break;
        const mpz_class a = static_cast<long>(a_d);
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        if (k_next > max_den) break;
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
        frac = inv - a_d;
    }
    Rational q(h, k);
    q.canonicalize();
    return q;
}

}  // namespace hexacent
