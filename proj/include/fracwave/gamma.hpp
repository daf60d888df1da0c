#pragma once

#include "fracwave/dd.hpp"

namespace fracwave {

// Gamma function on the real line, Lanczos approximation with reflection.
// Throws DomainError at nonpositive integers, OverflowError for x > 171.62.
double gamma_fn(double x);

// log|Gamma(x)| and the sign of Gamma(x); defined for x not a nonpositive integer.
double log_gamma_abs(double x, int* sign = nullptr);

namespace detail {

// Extended-precision machinery backing the Mittag-Leffler series.
// lgamma to ~1e-30 relative via Stirling + upward recurrence.
dd lgamma_dd(dd x);            // requires x > 0
dd rgamma_dd(dd x);            // signed 1/Gamma(x), entire: 0 at 0, -1, -2, ...
dd gamma_dd_signed(dd x);      // Gamma(x) for non-pole x (overflow -> inf)

} // namespace detail
} // namespace fracwave
