#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lfim/contour.hpp"
#include "lfim/models/ising.hpp"

namespace lfim {

// Monte Carlo approximation of the likelihood-based possibility contour for
// models with tractable likelihood, used purely as a comparison oracle. For
// each grid theta it simulates l_draws datasets, computes each dataset's
// relative likelihood at theta (likelihood over its own grid-MLE likelihood),
// and reports the fraction no larger than the observed dataset's.

// Bivariate normal correlation model: closed-form likelihood, grid MLE.
ContourTable likelihood_contour_correlation(
    const std::vector<std::array<double, 2>>& observed_pairs,
    const ParameterGrid& grid, int l_draws, std::uint64_t master_seed,
    unsigned threads = 0, std::uint64_t replicate_index = 0);

// Zero-field Ising on a small graph: exact likelihood through the edge-sum
// density of states; datasets enter only through their edge sum, which is
// sampled exactly from its enumeration-derived distribution.
ContourTable likelihood_contour_ising_zero_field(
    const AdjacencySpec& adj, long observed_edge_sum, const ParameterGrid& grid,
    int l_draws, std::uint64_t master_seed, unsigned threads = 0,
    std::uint64_t replicate_index = 0, const EdgeSumCounts* precomputed = nullptr);

// Log-likelihood of a zero-mean unit-variance bivariate normal sample with
// correlation rho, given sufficient statistics (sum x^2, sum y^2, sum xy).
double correlation_log_likelihood(double rho, double sxx, double syy, double sxy,
                                  long n);

}  // namespace lfim
