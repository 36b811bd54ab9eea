#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lfim/claim.hpp"
#include "lfim/grid.hpp"
#include "lfim/models/model.hpp"

namespace lfim {

// Independent uniform prior over a box, one (lo, hi) interval per coordinate.
struct UniformPrior {
  std::vector<std::pair<double, double>> box;
  ParameterPoint sample(RngStream& stream) const;
};

struct AbcDraw {
  ParameterPoint theta;
  double distance;  // Euclidean distance of the simulated to the observed summary
};

// Rejection-sampler draws: theta from the prior, one simulated summary each,
// Euclidean distance to the observed summary. Draw i uses the stream keyed
// ("abc", grid_index = i, replicate_index). Retention is applied separately.
std::vector<AbcDraw> abc_rejection(const GenerativeModel& model,
                                   const UniformPrior& prior,
                                   const SummaryVector& observed_summary, int draws,
                                   std::uint64_t master_seed,
                                   std::uint64_t replicate_index = 0,
                                   unsigned threads = 0);

// Keeps the keep_fraction closest draws (ties broken by draw index).
std::vector<ParameterPoint> retain_fraction(const std::vector<AbcDraw>& draws,
                                            double keep_fraction);
// Keeps draws with distance <= tolerance.
std::vector<ParameterPoint> retain_within(const std::vector<AbcDraw>& draws,
                                          double tolerance);

// Fraction of retained draws satisfying the claim (the ABC "posterior
// probability" of the claim).
double claim_frequency(const std::vector<ParameterPoint>& retained,
                       const Claim& claim);

}  // namespace lfim
