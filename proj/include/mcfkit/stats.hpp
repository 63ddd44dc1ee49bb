#pragma once

namespace mcfkit {

// Inverse of the standard normal CDF (Wichura's PPND16), accurate to about
// 1e-15 over (0, 1).
double normal_quantile(double p);

// Two-sided critical value for a confidence level in (0, 1). Returns the
// conventional tabled constants at the three standard reporting levels
// (0.90 -> 1.645, 0.95 -> 1.96, 0.99 -> 2.576) and the exact quantile
// elsewhere.
double critical_z(double level);

// Upper-tail probability of the chi-square distribution with one degree of
// freedom, via the complementary error function. Throws on x < 0.
double chi_square_sf(double x);

}  // namespace mcfkit
