#pragma once

// Adaptive Gauss-Kronrod (G7,K15) with interval bisection.

#include "fracwave/errors.hpp"

#include <cmath>
#include <vector>

namespace fracwave {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_panels = 20000;
};

namespace detail {

// nodes (abscissa, gauss weight, kronrod weight); node 0 is the center
inline constexpr double kGK15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
double gk15(const F& f, double a, double b, double& err) {
    const double c = 0.5 * (a + b);
    const double m = 0.5 * (b - a);
    double y0 = f(c);
    double g7 = kGK15[0][1] * y0;
    double k15 = kGK15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        double dx = m * kGK15[i][0];
        double yi = f(c + dx) + f(c - dx);
        g7 += kGK15[i][1] * yi;
        k15 += kGK15[i][2] * yi;
    }
    g7 *= m;
    k15 *= m;
    err = std::pow(200.0 * std::fabs(g7 - k15), 1.5);
    return k15;
}

} // namespace detail

// Integrate f over [a, b] to abs_tol. Throws QuadratureBudget when the panel
// budget runs out before the tolerance is met.
template <class F>
double integrate(const F& f, double a, double b, const QuadratureConfig& cfg = {}) {
    if (a == b) return 0.0;
    struct Panel { double a, b, val, err; };
    std::vector<Panel> heap;
    double err0;
    double v0 = detail::gk15(f, a, b, err0);
    heap.push_back({a, b, v0, err0});
    double total_err = err0;
    int used = 1;
    while (total_err > cfg.abs_tol) {
        // split the worst panel
        std::size_t worst = 0;
        for (std::size_t i = 1; i < heap.size(); ++i)
            if (heap[i].err > heap[worst].err) worst = i;
        Panel p = heap[worst];
        if (p.err <= cfg.abs_tol / (2.0 * static_cast<double>(heap.size())))
            break; // worst panel already negligible; error estimate is conservative
        if (used + 2 > cfg.max_panels)
            throw QuadratureBudget("integrate: panel budget exhausted, residual error " +
                                   std::to_string(total_err));
        double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) break; // interval at rounding floor
        double e1, e2;
        double v1 = detail::gk15(f, p.a, mid, e1);
        double v2 = detail::gk15(f, mid, p.b, e2);
        heap[worst] = {p.a, mid, v1, e1};
        heap.push_back({mid, p.b, v2, e2});
        total_err += e1 + e2 - p.err;
        used += 2;
    }
    double sum = 0.0;
    for (const auto& p : heap) sum += p.val;
    return sum;
}

// Integrate with an initial uniform subdivision (for oscillatory integrands
// whose scale is known, e.g. sin(n pi x) factors).
template <class F>
double integrate_panels(const F& f, double a, double b, int min_panels,
                        const QuadratureConfig& cfg = {}) {
    if (a == b) return 0.0;
    if (min_panels < 1) min_panels = 1;
    double sum = 0.0;
    double h = (b - a) / min_panels;
    QuadratureConfig sub = cfg;
    sub.abs_tol = cfg.abs_tol / min_panels;
    for (int i = 0; i < min_panels; ++i)
        sum += integrate(f, a + i * h, a + (i + 1) * h, sub);
    return sum;
}

} // namespace fracwave
