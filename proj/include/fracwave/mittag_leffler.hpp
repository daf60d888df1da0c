#pragma once

// Two-parameter and bivariate Mittag-Leffler functions on the real line.
//
// Evaluation strategy per zone (W = |z|^(1/alpha)):
//   - series in double-double up to W ~ 36 (alternating sums cancel ~W/2.3
//     digits; the extended precision keeps ~15 of them),
//   - beyond that an algebraic asymptotic expansion at optimal truncation,
//     plus the damped-oscillatory residue pair that survives on the negative
//     axis when alpha > 1,
//   - log-space summation for large positive arguments (no cancellation).
//
// The bivariate function is reduced to univariate derivative evaluations,
//   E_{(a,b),rho}(x,y) = sum_m x^m/m! * E^{(m)}_{b, rho+(a-b)m}(y),
// with derivatives obtained from the gamma-shift recurrence
//   y E'_{b,g}(y) = (E_{b,g-1}(y) - (g-1) E_{b,g}(y)) / b.

#include "fracwave/dd.hpp"
#include "fracwave/errors.hpp"

#include <map>
#include <memory>
#include <vector>

namespace fracwave {

struct Ml2Params {
    double alpha;
    double beta;
    void validate() const;
};

struct MlbvParams {
    double alpha;
    double beta;
    double rho;
    void validate() const;
};

struct TruncationPolicy {
    double tol = 1e-14;
    int max_terms = 1200;
    void validate() const;
};

// E_{alpha,beta}(z). Supported range for z < 0 is |z| <= 1e4; beyond it the
// operation reports NonConvergence rather than guessing.
double ml2(const Ml2Params& p, double z, const TruncationPolicy& policy = {});

// E_{(alpha,beta),rho}(x,y), direct total-degree summation of the double
// series with per-degree binomial blocks (extended precision).
double mlbv(const MlbvParams& p, double x, double y, const TruncationPolicy& policy = {});

// Same value through the swapped route E_{(beta,alpha),rho}(y,x).
double mlbv_symmetric(const MlbvParams& p, double x, double y,
                      const TruncationPolicy& policy = {});

// E_{(alpha1-alpha2, alpha1),rho}(-mu t^(alpha1-alpha2), -lambda t^(alpha1)),
// the solution kernel of the damped fractional oscillator.
double kernel_E(double alpha1, double alpha2, double mu, double rho,
                double lambda, double t);

namespace detail {

// E_{beta,gamma}(y) with full zone branching; used by kernel paths without
// the public-range cap. beta in (0, 2].
double ml2_core(double beta, double gamma, double y);

// Cached evaluator of E_{(a,b),rho}(x,y) for repeated calls with varying
// arguments (per-mode kernels). Not thread-safe; cheap to construct.
class MlBivEvaluator {
public:
    MlBivEvaluator(double a, double b, double rho);
    ~MlBivEvaluator();
    MlBivEvaluator(MlBivEvaluator&&) noexcept;
    MlBivEvaluator& operator=(MlBivEvaluator&&) noexcept;
    double operator()(double x, double y);

private:
    struct SeriesTable;
    struct AsymTable;

    double a_, b_, rho_;
    double eval_series_zone(double x, double y);
    double eval_asym_zone(double x, double y);
    const SeriesTable& series_table(int m);
    const AsymTable& asym_table(int m, int r);

    std::map<int, std::unique_ptr<SeriesTable>> series_;
    std::map<std::pair<int, int>, std::unique_ptr<AsymTable>> asym_;
};

} // namespace detail
} // namespace fracwave
