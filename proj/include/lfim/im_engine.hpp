#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "lfim/contour.hpp"
#include "lfim/depth.hpp"
#include "lfim/models/model.hpp"
#include "lfim/summary.hpp"

namespace lfim {

// Arbitrary measure callable, used by tests to plug in fixtures (including
// deliberately non-invariant ones).
using MeasureFn =
    std::function<double(const SummarySet& ref, std::span<const double> candidate)>;

// Leave-one-out rank fraction: pools sim with the observed summary, scores
// T_i = Psi(pooled minus i, member i) for all M+1 members, and returns
// #{i : T_i <= T_observed} / (M+1). Ties count inclusively, so the result is
// always a multiple of 1/(M+1) in [1/(M+1), 1]. Measure failures propagate
// with the offending leave-one-out index attached.
double validified_ranking(const SummarySet& sim, const SummaryVector& observed,
                          const ConformityMeasure& measure);
double validified_ranking(const SummarySet& sim, const SummaryVector& observed,
                          const MeasureFn& measure);

// Literal average over all (M+1)! permutations of which element plays the
// observed role. Agrees exactly with validified_ranking for permutation-
// invariant measures; kept as an independent oracle. M <= 5.
double brute_force_permutation_ranking(const SummarySet& sim,
                                       const SummaryVector& observed,
                                       const ConformityMeasure& measure);
double brute_force_permutation_ranking(const SummarySet& sim,
                                       const SummaryVector& observed,
                                       const MeasureFn& measure);

// Evaluates the validified ranking over the grid (M fresh simulations per
// point, stream keyed by grid index and replicate_index) and normalizes by
// the grid supremum. Bit-identical results for any worker count. Simulation
// or measure errors abort with the grid index attached.
ContourTable compute_contour(const GenerativeModel& model,
                             const SummaryVector& observed_summary,
                             const ParameterGrid& grid, int m_draws,
                             const ConformityMeasure& measure,
                             std::uint64_t master_seed, unsigned threads = 0,
                             std::uint64_t replicate_index = 0);

}  // namespace lfim
