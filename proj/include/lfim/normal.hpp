#pragma once

namespace lfim {

// Standard normal quantile function, Wichura's algorithm AS 241 (PPND16),
// accurate to ~1e-15 over (0,1). Throws std::domain_error for p outside (0,1).
double inverse_normal_cdf(double p);

// Standard normal CDF via erfc.
double normal_cdf(double x);

}  // namespace lfim
