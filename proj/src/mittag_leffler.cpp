#include "fracwave/mittag_leffler.hpp"
#include "fracwave/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace fracwave {

namespace {

constexpr double kSeriesAsymSwitch = 36.0; // on W = |y|^(1/beta), y < 0
constexpr double kPositiveLogSwitch = 30.0;
constexpr double kOverflowW = 700.0;
constexpr double kSupportedNegRange = 1e4; // public ml2, z < 0

double safe_pow_frac(double base, double inv_exp) {
    // |base|^(1/inv_exp... ) -- W helper
    return std::pow(base, inv_exp);
}

// log|1/Gamma(x)| with sign; -inf at poles
double rgamma_log_abs(dd x, int* sign) {
    if (x.hi >= 0.5) {
        *sign = 1;
        return -static_cast<double>(detail::lgamma_dd(x));
    }
    dd s = dd_sinpi(x);
    if (s.hi == 0.0 && s.lo == 0.0) {
        *sign = 0;
        return -std::numeric_limits<double>::infinity();
    }
    *sign = s.hi > 0.0 ? 1 : -1;
    dd lg = detail::lgamma_dd(dd(1.0) - x);
    return static_cast<double>(lg + dd_log(fabs(s)) - dd_log(ddc::pi));
}

// ---------------------------------------------------------------------------
// dd series for E^{(m)}_{beta,gamma}(y) = sum_j ((j+m)!/j!) y^j / Gamma(gamma+beta(m+j))
// ---------------------------------------------------------------------------

struct SeriesAccum {
    dd sum{0.0};
    double max_abs_term = 0.0;
    int terms = 0;
    bool converged = false;
};

SeriesAccum series_deriv_dd(double beta, double gamma, double y, int m,
                            double tol, int max_terms) {
    SeriesAccum acc;
    dd yp(1.0);   // y^j
    dd fac(1.0);  // (j+m)!/j!
    for (int i = 1; i <= m; ++i) fac *= static_cast<double>(i);
    const double jstar = safe_pow_frac(std::fabs(y), 1.0 / beta) / beta + 2.0;
    int decreasing = 0;
    double prev_mag = std::numeric_limits<double>::infinity();
    for (int j = 0; j < max_terms; ++j) {
        dd garg = dd(gamma) + detail::two_prod(beta, static_cast<double>(m + j));
        dd rg = detail::rgamma_dd(garg);
        dd term = fac * yp * rg;
        acc.sum += term;
        ++acc.terms;
        double mag = std::fabs(term.hi);
        acc.max_abs_term = std::max(acc.max_abs_term, mag);
        decreasing = (mag < prev_mag) ? decreasing + 1 : 0;
        prev_mag = mag;
        if (j > jstar && decreasing >= 3 &&
            mag <= tol * std::max(1e-300, std::fabs(acc.sum.hi)) &&
            mag <= 1e-32 * std::max(acc.max_abs_term, 1e-300)) {
            acc.converged = true;
            break;
        }
        yp *= dd(y);
        fac = fac * (static_cast<double>(j + m + 1) / static_cast<double>(j + 1));
        if (std::fabs(yp.hi) > 1e290) break; // power escaping dd range
    }
    return acc;
}

// log-space summation for z > 0 beyond the dd comfort zone (no cancellation)
double series_positive_log(double beta, double gamma, double z, int max_terms) {
    const double lz = std::log(z);
    double lnmax = -std::numeric_limits<double>::infinity();
    double scaled = 0.0;
    const double jstar = safe_pow_frac(z, 1.0 / beta) / beta + 2.0;
    for (int j = 0; j < std::max(max_terms, 20000); ++j) {
        int sg;
        dd garg = dd(gamma) + detail::two_prod(beta, static_cast<double>(j));
        double lt = j * lz + rgamma_log_abs(garg, &sg);
        if (sg == 0) continue;
        if (lt > lnmax) {
            scaled = scaled * std::exp(lnmax - lt) + sg;
            lnmax = lt;
        } else {
            scaled += sg * std::exp(lt - lnmax);
        }
        if (j > jstar && lt < lnmax - 40.0) {
            double r = std::log(std::fabs(scaled)) + lnmax;
            if (r > 709.0) throw OverflowError("ml2: result overflows double");
            return scaled > 0 ? std::exp(r) : -std::exp(r);
        }
    }
    throw NonConvergence("ml2: positive-argument series budget exhausted", scaled);
}

// ---------------------------------------------------------------------------
// asymptotic branch, y < 0 with W = |y|^(1/beta) large:
//   E_{beta,gamma}(y) = osc(beta,gamma,y) - sum_{k>=1} y^{-k}/Gamma(gamma-beta k)
// osc is the residue pair (2/beta) Re[ e^p p^{1-gamma} ], p = W e^{i pi/beta},
// present for beta > 1 (exact at beta = 2).
// ---------------------------------------------------------------------------

double osc_pair(double beta, double gamma, double y) {
    if (beta <= 1.02) return 0.0;
    const double W = safe_pow_frac(-y, 1.0 / beta);
    const double pr = W * std::cos(M_PI / beta);
    if (pr < -700.0) return 0.0;
    std::complex<double> p(pr, W * std::sin(M_PI / beta));
    std::complex<double> w = std::exp(p) * std::pow(p, 1.0 - gamma);
    return (2.0 / beta) * w.real();
}

struct AsymCoeffs {
    std::vector<double> logd; // log|1/Gamma(gamma - beta k)|, k = 1..K
    std::vector<int> sg;
};

AsymCoeffs build_asym_coeffs(double beta, double gamma, int K) {
    AsymCoeffs t;
    t.logd.resize(K + 1, 0.0);
    t.sg.resize(K + 1, 0);
    for (int k = 1; k <= K; ++k) {
        dd arg = dd(gamma) - detail::two_prod(beta, static_cast<double>(k));
        int sg;
        t.logd[k] = rgamma_log_abs(arg, &sg);
        t.sg[k] = sg;
    }
    return t;
}

double asym_algebraic(const AsymCoeffs& t, double y) {
    const double lay = std::log(-y);
    double sum = 0.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < t.logd.size(); ++k) {
        if (t.sg[k] == 0) continue;
        double mag = std::exp(t.logd[k] - static_cast<double>(k) * lay);
        if (mag > prev_mag) break; // optimal truncation reached
        prev_mag = mag;
        double sign = (k % 2 == 0 ? 1.0 : -1.0) * t.sg[k]; // y^{-k} sign for y<0
        sum += sign * mag;
        if (mag < 1e-19 * std::max(1e-300, std::fabs(sum))) break;
    }
    return -sum;
}

constexpr int kAsymK = 64;

double asym_value(double beta, double gamma, double y) {
    AsymCoeffs c = build_asym_coeffs(beta, gamma, kAsymK);
    return asym_algebraic(c, y) + osc_pair(beta, gamma, y);
}

// derivative rows out[0..M]: E^{(m)}_{beta,gamma}(y) from the gamma-shift
// triangle over base values E_{beta,gamma-r}(y) (y large negative)
void derivs_from_values(double beta, double gamma, double y,
                        const std::vector<double>& base, int M, double* out) {
    std::vector<double> prev = base; // row m-1, entries r = 0..M-(m-1)
    out[0] = base[0];
    std::vector<double> cur;
    for (int m = 1; m <= M; ++m) {
        cur.assign(M - m + 1, 0.0);
        for (int r = 0; r <= M - m; ++r) {
            double g = gamma - r;
            cur[r] = (((prev[r + 1] - (g - 1.0) * prev[r]) / beta) -
                      (m - 1) * prev[r]) / y;
        }
        out[m] = cur[0];
        prev = cur;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// parameter validation
// ---------------------------------------------------------------------------

void Ml2Params::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw DomainError("ml2: requires alpha > 0 and finite beta");
}

void MlbvParams::validate() const {
    if (!(alpha > 0.0) || !(beta > 0.0) || !(rho > 0.0))
        throw DomainError("mlbv: requires alpha, beta, rho > 0");
}

void TruncationPolicy::validate() const {
    if (!(tol > 0.0) || !(tol < 1.0))
        throw DomainError("truncation policy: tol must lie in (0,1)");
    if (max_terms < 16)
        throw DomainError("truncation policy: max_terms must be >= 16");
}

// ---------------------------------------------------------------------------
// public univariate
// ---------------------------------------------------------------------------

namespace detail {

double ml2_core(double beta, double gamma, double y) {
    if (y == 0.0) return static_cast<double>(rgamma_dd(dd(gamma)));
    const double W = safe_pow_frac(std::fabs(y), 1.0 / beta);
    if (y > 0.0) {
        if (W > kOverflowW) throw OverflowError("ml2: exponential overflow for this argument");
        if (W <= kPositiveLogSwitch) {
            auto acc = series_deriv_dd(beta, gamma, y, 0, 1e-16, 4000);
            return static_cast<double>(acc.sum);
        }
        return series_positive_log(beta, gamma, y, 20000);
    }
    // y < 0
    if (beta >= 0.98 && beta <= 1.02 && beta != 1.0) {
        if (std::fabs(y) > 70.0)
            throw NonConvergence("ml2: alpha ~ 1 with large negative argument unsupported", 0.0);
        auto acc = series_deriv_dd(beta, gamma, y, 0, 1e-16, 4000);
        return static_cast<double>(acc.sum);
    }
    if (beta == 1.0) {
        // exponential family: E_{1,gamma}(y); series fine to |y| ~ 70
        if (std::fabs(y) > 70.0)
            throw NonConvergence("ml2: alpha = 1 with large negative argument unsupported", 0.0);
        auto acc = series_deriv_dd(beta, gamma, y, 0, 1e-16, 4000);
        return static_cast<double>(acc.sum);
    }
    if (W <= kSeriesAsymSwitch || beta > 2.0) {
        if (beta > 2.0 && W > 45.0)
            throw NonConvergence("ml2: alpha > 2 beyond series range", 0.0);
        auto acc = series_deriv_dd(beta, gamma, y, 0, 1e-16, 4000);
        if (!acc.converged && acc.terms >= 4000)
            throw NonConvergence("ml2: series budget exhausted", std::fabs(acc.sum.hi));
        double result = static_cast<double>(acc.sum);
        if (std::fabs(result) < 1e-26 * acc.max_abs_term)
            throw NonConvergence("ml2: cancellation exhausts extended precision",
                                 std::fabs(result));
        return result;
    }
    return asym_value(beta, gamma, y);
}

} // namespace detail

double ml2(const Ml2Params& p, double z, const TruncationPolicy& policy) {
    p.validate();
    policy.validate();
    if (!std::isfinite(z)) throw DomainError("ml2: non-finite argument");
    if (z < -kSupportedNegRange)
        throw NonConvergence("ml2: negative argument beyond supported range |z| <= 1e4", 0.0);
    if (z == 0.0) return static_cast<double>(detail::rgamma_dd(dd(p.beta)));
    const double W = safe_pow_frac(std::fabs(z), 1.0 / p.alpha);
    if (z > 0.0) {
        if (W > kOverflowW) throw OverflowError("ml2: exponential overflow for this argument");
        if (W <= kPositiveLogSwitch) {
            auto acc = series_deriv_dd(p.alpha, p.beta, z, 0, policy.tol, policy.max_terms);
            if (!acc.converged)
                throw NonConvergence("ml2: series needs a larger term budget",
                                     std::fabs(acc.sum.hi));
            return static_cast<double>(acc.sum);
        }
        return series_positive_log(p.alpha, p.beta, z, policy.max_terms);
    }
    // z < 0: delegate to the zone logic, but respect the caller's budget in
    // the series zone
    if (W <= kSeriesAsymSwitch && !(p.alpha >= 0.98 && p.alpha <= 1.02) && p.alpha <= 2.0) {
        auto acc = series_deriv_dd(p.alpha, p.beta, z, 0, policy.tol, policy.max_terms);
        if (!acc.converged)
            throw NonConvergence("ml2: series needs a larger term budget",
                                 std::fabs(acc.sum.hi));
        double result = static_cast<double>(acc.sum);
        if (std::fabs(result) < 1e-26 * acc.max_abs_term)
            throw NonConvergence("ml2: cancellation exhausts extended precision",
                                 std::fabs(result));
        return result;
    }
    return detail::ml2_core(p.alpha, p.beta, z);
}

// ---------------------------------------------------------------------------
// public bivariate: direct total-degree summation (the brute-force route)
// ---------------------------------------------------------------------------

double mlbv(const MlbvParams& p, double x, double y, const TruncationPolicy& policy) {
    p.validate();
    policy.validate();
    if (!std::isfinite(x) || !std::isfinite(y))
        throw DomainError("mlbv: non-finite argument");
    const int nmax = policy.max_terms;
    std::vector<dd> xp(1, dd(1.0)), yp(1, dd(1.0));
    dd sum(0.0);
    double max_abs_term = 0.0;
    int decreasing = 0;
    double prev_blk = std::numeric_limits<double>::infinity();
    double last_blk = 0.0;
    for (int n = 0; n < nmax; ++n) {
        if (static_cast<int>(xp.size()) <= n) {
            xp.push_back(xp.back() * dd(x));
            yp.push_back(yp.back() * dd(y));
        }
        if (std::fabs(xp.back().hi) > 1e280 || std::fabs(yp.back().hi) > 1e280)
            throw NonConvergence("mlbv: argument powers escape range", last_blk);
        dd blk(0.0);
        dd binom(1.0);
        for (int k = 0; k <= n; ++k) {
            dd garg = dd(p.rho) + detail::two_prod(p.alpha, static_cast<double>(k)) +
                      detail::two_prod(p.beta, static_cast<double>(n - k));
            dd term = binom * xp[static_cast<std::size_t>(k)] *
                      yp[static_cast<std::size_t>(n - k)] * detail::rgamma_dd(garg);
            blk += term;
            max_abs_term = std::max(max_abs_term, std::fabs(term.hi));
            binom = binom * (static_cast<double>(n - k) / static_cast<double>(k + 1));
        }
        sum += blk;
        last_blk = std::fabs(blk.hi);
        decreasing = (last_blk < prev_blk) ? decreasing + 1 : 0;
        prev_blk = last_blk;
        if (n >= 8 && decreasing >= 3 &&
            last_blk <= policy.tol * std::max(1.0, std::fabs(sum.hi)) &&
            last_blk <= 1e-30 * std::max(max_abs_term, 1e-300)) {
            double result = static_cast<double>(sum);
            if (std::fabs(result) < 1e-25 * max_abs_term && max_abs_term > 1e3)
                throw NonConvergence("mlbv: cancellation exhausts extended precision",
                                     last_blk);
            return result;
        }
    }
    throw NonConvergence("mlbv: degree budget exhausted before tail bound met", last_blk);
}

double mlbv_symmetric(const MlbvParams& p, double x, double y,
                      const TruncationPolicy& policy) {
    MlbvParams swapped{p.beta, p.alpha, p.rho};
    return mlbv(swapped, y, x, policy);
}

// ---------------------------------------------------------------------------
// cached bivariate evaluator (x-power expansion)
// ---------------------------------------------------------------------------

namespace detail {

struct MlBivEvaluator::SeriesTable {
    int m = 0;
    double beta = 0.0, gamma = 0.0;
    std::vector<dd> c;
    std::vector<double> logc;

    void extend(int J) {
        std::size_t old = c.size();
        if (old >= static_cast<std::size_t>(J)) return;
        c.resize(static_cast<std::size_t>(J));
        logc.resize(static_cast<std::size_t>(J));
        dd fac(1.0);
        for (int i = 1; i <= m; ++i) fac *= static_cast<double>(i);
        // rebuild factorial ratio up to `old`
        for (std::size_t j = 0; j < old; ++j)
            fac = fac * (static_cast<double>(j + m + 1) / static_cast<double>(j + 1));
        for (std::size_t j = old; j < c.size(); ++j) {
            dd garg = dd(gamma) + two_prod(beta, static_cast<double>(m + static_cast<int>(j)));
            c[j] = fac * rgamma_dd(garg);
            logc[j] = c[j].hi == 0.0 ? -std::numeric_limits<double>::infinity()
                                     : std::log(std::fabs(c[j].hi));
            fac = fac * (static_cast<double>(j + m + 1) / static_cast<double>(j + 1));
        }
    }
};

struct MlBivEvaluator::AsymTable {
    AsymCoeffs coeffs;
    double gamma = 0.0;
};

MlBivEvaluator::MlBivEvaluator(double a, double b, double rho)
    : a_(a), b_(b), rho_(rho) {
    if (!(a > 0.0) || !(b > 0.0) || !(rho > 0.0))
        throw DomainError("MlBivEvaluator: requires a, b, rho > 0");
}

MlBivEvaluator::~MlBivEvaluator() = default;
MlBivEvaluator::MlBivEvaluator(MlBivEvaluator&&) noexcept = default;
MlBivEvaluator& MlBivEvaluator::operator=(MlBivEvaluator&&) noexcept = default;

const MlBivEvaluator::SeriesTable& MlBivEvaluator::series_table(int m) {
    auto it = series_.find(m);
    if (it == series_.end()) {
        auto tab = std::make_unique<SeriesTable>();
        tab->m = m;
        tab->beta = b_;
        tab->gamma = rho_ + (a_ - b_) * m;
        it = series_.emplace(m, std::move(tab)).first;
    }
    return *it->second;
}

const MlBivEvaluator::AsymTable& MlBivEvaluator::asym_table(int m, int r) {
    auto key = std::make_pair(m, r);
    auto it = asym_.find(key);
    if (it == asym_.end()) {
        auto tab = std::make_unique<AsymTable>();
        tab->gamma = rho_ + (a_ - b_) * m - r;
        tab->coeffs = build_asym_coeffs(b_, tab->gamma, kAsymK);
        it = asym_.emplace(key, std::move(tab)).first;
    }
    return *it->second;
}

double MlBivEvaluator::eval_series_zone(double x, double y) {
    dd sum(0.0);
    dd xm(1.0); // x^m / m!
    int quiet = 0;
    double global_max = 0.0;
    for (int m = 0; m <= 192; ++m) {
        auto& tab = const_cast<SeriesTable&>(series_table(m));
        // inner dd series with incremental power (|y| <= 36^b keeps powers in range)
        dd inner(0.0), yp(1.0);
        double maxmag = 0.0;
        double prev = std::numeric_limits<double>::infinity();
        int dec = 0;
        const double jstar = safe_pow_frac(std::fabs(y), 1.0 / b_) / b_ + 2.0;
        for (int j = 0; j < 420; ++j) {
            if (static_cast<std::size_t>(j) >= tab.c.size()) tab.extend(j + 64);
            dd term = tab.c[static_cast<std::size_t>(j)] * yp;
            inner += term;
            double mag = std::fabs(term.hi);
            maxmag = std::max(maxmag, mag);
            dec = (mag < prev) ? dec + 1 : 0;
            prev = mag;
            if (j > jstar && dec >= 3 && mag <= 1e-32 * std::max(maxmag, 1e-300)) break;
            yp *= dd(y);
        }
        dd term_m = xm * inner;
        sum += term_m;
        global_max = std::max(global_max, std::fabs(xm.hi) * maxmag);
        double tm = std::fabs(term_m.hi);
        quiet = (tm <= 1e-16 * std::max(1e-300, std::fabs(sum.hi))) ? quiet + 1 : 0;
        if (m >= 2 && quiet >= 2) break;
        xm = xm * dd(x) / static_cast<double>(m + 1);
    }
    double result = static_cast<double>(sum);
    if (std::fabs(result) < 1e-25 * global_max && global_max > 1e5)
        throw NonConvergence("bivariate kernel: cancellation exhausts extended precision",
                             std::fabs(result));
    return result;
}

double MlBivEvaluator::eval_asym_zone(double x, double y) {
    double sum = 0.0;
    double xm = 1.0; // x^m / m!
    int quiet = 0;
    std::vector<double> base, derivs;
    for (int m = 0; m <= 48; ++m) {
        base.assign(static_cast<std::size_t>(m) + 1, 0.0);
        for (int r = 0; r <= m; ++r) {
            const auto& tab = asym_table(m, r);
            base[static_cast<std::size_t>(r)] =
                asym_algebraic(tab.coeffs, y) + osc_pair(b_, tab.gamma, y);
        }
        derivs.assign(static_cast<std::size_t>(m) + 1, 0.0);
        derivs_from_values(b_, rho_ + (a_ - b_) * m, y, base, m, derivs.data());
        double term_m = xm * derivs[static_cast<std::size_t>(m)];
        sum += term_m;
        double tm = std::fabs(term_m);
        quiet = (tm <= 1e-16 * std::max(1e-300, std::fabs(sum))) ? quiet + 1 : 0;
        if (m >= 2 && quiet >= 2) break;
        xm = xm * x / static_cast<double>(m + 1);
    }
    return sum;
}

double MlBivEvaluator::operator()(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw DomainError("bivariate kernel: non-finite argument");
    if (x == 0.0) return ml2_core(b_, rho_, y);
    if (y == 0.0) return ml2_core(a_, rho_, x);
    const double W = safe_pow_frac(std::fabs(y), 1.0 / b_);
    if (y < 0.0 && W > kSeriesAsymSwitch) return eval_asym_zone(x, y);
    if (y > 0.0 && W > kSeriesAsymSwitch)
        throw NonConvergence("bivariate kernel: large positive second argument unsupported", 0.0);
    return eval_series_zone(x, y);
}

} // namespace detail

double kernel_E(double alpha1, double alpha2, double mu, double rho,
                double lambda, double t) {
    if (!(alpha1 > 1.0 && alpha1 < 2.0) || !(alpha2 > 0.0 && alpha2 < 1.0))
        throw DomainError("kernel_E: requires alpha1 in (1,2), alpha2 in (0,1)");
    if (mu < 0.0 || lambda < 0.0 || !(t > 0.0) || !(rho > 0.0))
        throw DomainError("kernel_E: requires mu, lambda >= 0, rho > 0, t > 0");
    detail::MlBivEvaluator ev(alpha1 - alpha2, alpha1, rho);
    double x = -mu * std::pow(t, alpha1 - alpha2);
    double y = -lambda * std::pow(t, alpha1);
    return ev(x, y);
}

} // namespace fracwave
