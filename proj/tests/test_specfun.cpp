#include "doctest.h"

#include "fracwave/gamma.hpp"
#include "fracwave/mittag_leffler.hpp"
#include "fracwave/errors.hpp"

#include <cmath>

using namespace fracwave;

namespace {
double relerr(double got, double want) {
    return std::fabs(got - want) / std::max(1e-300, std::fabs(want));
}
} // namespace

// Reference values below were produced with a 60-digit arbitrary-precision
// summation (and, for arguments outside any summable range, contour
// inversion of the Laplace representation); both routes were cross-checked
// against an L1/L2 time-stepping solve of the defining fractional ODE.

TEST_CASE("gamma: classic values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(relerr(gamma_fn(0.5), 1.7724538509055160273) < 1e-14);
    CHECK(relerr(gamma_fn(2.5), 1.3293403881791370205) < 1e-14);
    CHECK(relerr(gamma_fn(0.1), 9.513507698668731836292) < 1e-13);
    CHECK(relerr(gamma_fn(26.0), 1.5511210043330985984e+25) < 1e-13);
    CHECK(relerr(gamma_fn(100.3), 3.711481867182725260212e+156) < 1e-13);
    CHECK(relerr(gamma_fn(170.5), 5.562092414559999610706e+305) < 1e-13);
    // reflection zone
    CHECK(relerr(gamma_fn(-0.5), -3.544907701811032054596) < 1e-13);
    CHECK(relerr(gamma_fn(-1.7), 2.513923519065202208666) < 1e-13);
    CHECK(relerr(gamma_fn(-25.3), 9.458294485611181036466e-26) < 1e-12);
}

TEST_CASE("gamma: poles and overflow are signaled") {
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-3.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(172.0), OverflowError);
}

TEST_CASE("gamma: dd internals agree with the double path") {
    for (double x : {0.1, 0.7, 1.0, 3.3, 17.9, 44.0, 121.5}) {
        double lanczos = gamma_fn(x);
        double stirling = static_cast<double>(detail::gamma_dd_signed(dd(x)));
        CHECK(relerr(lanczos, stirling) < 2e-14);
    }
    // entire reciprocal
    CHECK(static_cast<double>(detail::rgamma_dd(dd(0.0))) == 0.0);
    CHECK(static_cast<double>(detail::rgamma_dd(dd(-7.0))) == 0.0);
    CHECK(relerr(static_cast<double>(detail::rgamma_dd(dd(-3.2))),
                 1.451259987681998144391) < 1e-13);
}

TEST_CASE("ml2: classical reductions") {
    // E_{1,1}(z) = e^z
    CHECK(relerr(ml2({1.0, 1.0}, 1.0), 2.718281828459045) < 1e-14);
    for (double z : {-10.0, -3.2, -0.5, 0.25, 4.0, 10.0})
        CHECK(relerr(ml2({1.0, 1.0}, z), std::exp(z)) < 1e-13);
    // E_{2,1}(-z) = cos(sqrt z)
    CHECK(relerr(ml2({2.0, 1.0}, -4.0), std::cos(2.0)) < 1e-14);
    for (double z : {0.3, 2.0, 7.7, 10.0})
        CHECK(relerr(ml2({2.0, 1.0}, -z), std::cos(std::sqrt(z))) < 1e-13);
    // k=0 term only
    CHECK(relerr(ml2({1.5, 2.0}, 0.0), 1.0) < 1e-15);
}

TEST_CASE("ml2: frozen oracle values (series zone)") {
    CHECK(relerr(ml2({0.5, 1.0}, -1.0), 0.4275835761558070044108) < 1e-13);
    CHECK(relerr(ml2({1.5, 2.0}, -3.7), 0.3131497396757102376948) < 1e-13);
    CHECK(relerr(ml2({1.9, 1.0}, -300.0), 0.0707216702485040379506) < 1e-12);
    CHECK(relerr(ml2({1.9, 2.0}, -50.0), 0.07175029080492172691465) < 1e-12);
    CHECK(relerr(ml2({1.25, 1.25}, -100.0), -0.00002659640773826679369686) < 1e-11);
}

TEST_CASE("ml2: frozen oracle values (asymptotic zone)") {
    CHECK(relerr(ml2({1.9, 1.3}, -5000.0), 0.0001225664938550503556688) < 1e-11);
    CHECK(relerr(ml2({1.1, 1.0}, -80.0), -0.001203363649187464745223) < 1e-11);
    CHECK(relerr(ml2({1.5, 1.5}, -200.0), -0.00001057638074470453996656) < 1e-10);
    CHECK(relerr(ml2({0.2, 1.0}, -50.0), 0.01691371014778601992989) < 1e-11);
    CHECK(relerr(ml2({0.8, 2.0}, -100.0), 0.01084589112814625983699) < 1e-11);
    CHECK(relerr(ml2({1.9, 2.0}, -500.0), 0.00409964451193172416295) < 1e-11);
    CHECK(relerr(ml2({1.1, 1.0}, -1e4), -9.359849349315608176601e-6) < 1e-10);
    CHECK(relerr(ml2({1.9, 1.0}, -1e4), -9.451468964358457692713e-6) < 1e-10);
}

TEST_CASE("ml2: recurrence identity E = 1/Gamma(beta) + z E_{a,a+b}") {
    for (double a : {0.2, 0.5, 0.8, 1.1, 1.5, 1.9})
        for (double b : {1.0, 1.5, 2.0})
            for (double z : {-45.0, -9.0, -1.0, -0.01, 0.5, 3.0}) {
                double lhs = ml2({a, b}, z);
                double rhs = 1.0 / gamma_fn(b) + z * ml2({a, a + b}, z);
                CHECK(std::fabs(lhs - rhs) <= 1e-10 * (1.0 + std::fabs(lhs)));
            }
}

TEST_CASE("ml2: seam continuity between series and asymptotic zones") {
    // W = |z|^(1/a) crossing 36
    for (double a : {1.1, 1.25, 1.5, 1.9}) {
        double zc = -std::pow(36.0, a);
        double below = ml2({a, 1.0}, zc * 0.995);
        double above = ml2({a, 1.0}, zc * 1.005);
        CHECK(std::fabs(below - above) < 5e-3 * std::fabs(below) + 1e-14);
        // recurrence identity straddling the seam
        for (double z : {zc * 0.99, zc * 1.01}) {
            double lhs = ml2({a, 1.5}, z);
            double rhs = 1.0 / gamma_fn(1.5) + z * ml2({a, a + 1.5}, z);
            CHECK(std::fabs(lhs - rhs) <= 1e-10);
        }
    }
}

TEST_CASE("ml2: errors") {
    CHECK_THROWS_AS(ml2({-1.0, 1.0}, 0.5), DomainError);
    CHECK_THROWS_AS(ml2({1.5, 1.0}, -2e4), NonConvergence);
    CHECK_THROWS_AS(ml2({0.5, 1.0}, 1e4), OverflowError);
    CHECK_THROWS_AS(ml2({1.0, 1.0}, 1.0, TruncationPolicy{1e-14, 8}), DomainError);
}

TEST_CASE("mlbv: zero-argument reductions (resolved gamma convention)") {
    // x = 0 keeps only the y-chain: E_{beta,rho}(y)
    for (double y : {-4.0, -0.3, 0.7}) {
        double full = mlbv({1.0, 1.5, 2.0}, 0.0, y);
        double uni = ml2({1.5, 2.0}, y);
        CHECK(relerr(full, uni) < 1e-13);
    }
    // y = 0 keeps only the x-chain: E_{alpha,rho}(x)
    for (double x : {-2.5, -0.4, 0.3}) {
        double full = mlbv({1.0, 1.5, 2.0}, x, 0.0);
        double uni = ml2({1.0, 2.0}, x);
        CHECK(relerr(full, uni) < 1e-13);
    }
    // both zero
    CHECK(relerr(mlbv({0.9, 1.3, 1.7}, 0.0, 0.0), 1.0 / gamma_fn(1.7)) < 1e-14);
}

TEST_CASE("mlbv: frozen oracle values") {
    CHECK(relerr(mlbv({1.0, 0.5, 1.0}, -0.3, -0.8), 0.3913230988343615682562) < 1e-13);
    CHECK(relerr(mlbv({1.0, 1.5, 1.0}, -1.0, -M_PI * M_PI),
                 -0.07233466610149024139189) < 1e-12);
    CHECK(relerr(mlbv({1.0, 1.5, 2.0}, -1.0, -M_PI * M_PI),
                 0.05350372728670870186285) < 1e-12);
    CHECK(relerr(mlbv({0.7, 1.9, 2.5}, -1.3, -20.0), 0.03024584866232867345989) < 1e-12);
    CHECK(relerr(mlbv({1.0, 1.5, 1.0}, -1.0, -500.0), -0.0005641735142161997376335) < 1e-11);
}

TEST_CASE("mlbv: symmetry swap is a cross-check path") {
    const MlbvParams p{1.0, 1.5, 1.0};
    double direct = mlbv(p, -0.3, -0.8);
    double swapped = mlbv_symmetric(p, -0.3, -0.8);
    CHECK(std::fabs(direct - swapped) < 1e-12 * (1.0 + std::fabs(direct)));

    // alpha == beta and x == y: exact no-op
    const MlbvParams q{1.2, 1.2, 1.5};
    CHECK(mlbv(q, -0.7, -0.7) == mlbv_symmetric(q, -0.7, -0.7));

    CHECK(relerr(mlbv_symmetric({0.9, 1.3, 1.7}, 0.0, 0.0), 1.0 / gamma_fn(1.7)) < 1e-14);
}

TEST_CASE("kernel_E: reductions and frozen values") {
    // t -> 0+: both arguments vanish
    CHECK(relerr(kernel_E(1.5, 0.5, 1.0, 1.5, M_PI * M_PI, 1e-13),
                 1.0 / gamma_fn(1.5)) < 1e-10);
    // mu = 0 reduces to the univariate function of -lambda t^alpha1
    for (double t : {0.3, 0.9, 1.7}) {
        double lam = M_PI * M_PI;
        double k = kernel_E(1.5, 0.5, 0.0, 1.5, lam, t);
        double uni = ml2({1.5, 1.5}, -lam * std::pow(t, 1.5));
        CHECK(relerr(k, uni) < 1e-12);
    }
    CHECK(relerr(kernel_E(1.5, 0.5, 1.0, 1.5, M_PI * M_PI, 0.7),
                 -0.01840348061270731157037) < 1e-12);
}

TEST_CASE("kernel evaluator agrees with brute-force summation where both work") {
    detail::MlBivEvaluator ev(1.0, 1.5, 2.0);
    for (double y : {-0.5, -9.8696, -120.0, -500.0}) {
        double fast = ev(-1.0, y);
        double brute = mlbv({1.0, 1.5, 2.0}, -1.0, y, TruncationPolicy{1e-15, 3000});
        CHECK(std::fabs(fast - brute) < 1e-12 * (1.0 + std::fabs(brute)));
    }
}

TEST_CASE("kernel evaluator: asymptotic zone frozen values") {
    {
        detail::MlBivEvaluator ev(1.0, 1.5, 1.0);
        CHECK(relerr(ev(-1.0, -2467.0), -0.00011434716722062977) < 1e-10);
    }
    {
        detail::MlBivEvaluator ev(1.7, 1.9, 2.0);
        CHECK(relerr(ev(-2.0, -1200.0), -0.0004426118604026811284543) < 1e-10);
    }
}

TEST_CASE("kernel evaluator: seam continuity in y") {
    detail::MlBivEvaluator ev(1.0, 1.5, 1.0);
    double yc = -std::pow(36.0, 1.5);
    double below = ev(-1.0, yc * 0.99);
    double above = ev(-1.0, yc * 1.01);
    CHECK(std::fabs(below - above) < 2e-2 * std::fabs(below));
}
