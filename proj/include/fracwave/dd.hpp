#pragma once

// Double-double arithmetic (~31 significant digits). Used by the series
// kernels where alternating sums cancel far below double precision.

#include <cmath>
#include <cstdint>
#include <limits>

namespace fracwave {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace detail {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace detail

inline dd operator+(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }
inline dd& operator/=(dd& a, dd b) { a = a / b; return a; }

inline dd operator+(dd a, double b) { return a + dd(b); }
inline dd operator+(double a, dd b) { return dd(a) + b; }
inline dd operator-(dd a, double b) { return a - dd(b); }
inline dd operator-(double a, dd b) { return dd(a) - b; }
inline dd operator*(dd a, double b) { return a * dd(b); }
inline dd operator*(double a, dd b) { return dd(a) * b; }
inline dd operator/(dd a, double b) { return a / dd(b); }
inline dd operator/(double a, dd b) { return dd(a) / b; }

inline bool operator<(dd a, dd b)  { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b)  { return b < a; }
inline bool operator<=(dd a, dd b) { return !(b < a); }
inline bool operator>=(dd a, dd b) { return !(a < b); }
inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }

inline dd fabs(dd a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline dd ldexp(dd a, int k) { return {std::ldexp(a.hi, k), std::ldexp(a.lo, k)}; }

namespace ddc {
// frequently used constants, hi/lo split
inline constexpr dd pi      {3.141592653589793,     1.2246467991473532e-16};
inline constexpr dd two_pi  {6.283185307179586,     2.4492935982947064e-16};
inline constexpr dd ln2     {0.6931471805599453,    2.3190468138462996e-17};
inline constexpr dd ln_2pi  {1.8378770664093456,   -7.756588316134483e-17};
} // namespace ddc

// exp(a) for |a| <= ~700
inline dd dd_exp(dd a) {
    if (a.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
    if (a.hi < -745.0) return {0.0, 0.0};
    int k = static_cast<int>(std::llround(a.hi / ddc::ln2.hi));
    dd r = a - dd(static_cast<double>(k)) * ddc::ln2;
    // Taylor on |r| <= 0.35
    dd sum = dd(1.0), term = dd(1.0);
    for (int i = 1; i <= 26; ++i) {
        term = term * r / static_cast<double>(i);
        sum += term;
        if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi)) break;
    }
    return ldexp(sum, k);
}

// log(a), a > 0
inline dd dd_log(dd a) {
    double x0 = std::log(a.hi);
    dd x(x0);
    // Newton: x <- x + a*exp(-x) - 1, twice
    for (int it = 0; it < 2; ++it)
        x = x + a * dd_exp(-x) - dd(1.0);
    return x;
}

// sin(pi * a) with exact zeros at integers
inline dd dd_sinpi(dd a) {
    // reduce a to r in [-0.5, 0.5] with integer part m
    double m = std::round(a.hi);
    dd r = a - dd(m);
    // account for the case where a.lo pushes across the half-integer; good enough
    double sign = (std::fmod(std::fabs(m), 2.0) < 0.5) ? 1.0 : -1.0;
    if (r.hi == 0.0 && r.lo == 0.0) return {0.0, 0.0};
    dd u = ddc::pi * r;
    dd u2 = u * u;
    dd term = u, sum = u;
    for (int i = 1; i <= 20; ++i) {
        term = term * u2 / static_cast<double>((2 * i) * (2 * i + 1));
        term = -term;
        sum += term;
        if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi)) break;
    }
    return sign < 0 ? -sum : sum;
}

} // namespace fracwave
