#pragma once

namespace hdbf {

// Standard normal CDF, via the complementary error function.
double normal_cdf(double x);

// Upper tail P(Z >= x); accurate for large x where 1 - Phi(x) underflows.
double normal_upper_tail(double x);

// Inverse CDF, Wichura's algorithm AS 241 (double precision branch).
double normal_quantile(double prob);

// Upper alpha quantile xi_alpha with Phi(xi_alpha) = 1 - alpha.
double upper_quantile(double alpha);

}  // namespace hdbf
