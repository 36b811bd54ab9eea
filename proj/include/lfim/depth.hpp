#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>

#include "lfim/summary.hpp"

namespace lfim {

enum class MeasureId { mahalanobis, tukey, neg_abs_dev };

MeasureId measure_from_string(std::string_view name);
std::string to_string(MeasureId id);

// Permutation-invariant conformity measure: larger output means the candidate
// sits more centrally within the reference cloud. Evaluation is a pure
// function of (reference set, candidate, options) and is bit-for-bit
// invariant to the order of reference members.
struct ConformityMeasure {
  MeasureId id = MeasureId::mahalanobis;
  double ridge = 0.0;                // mahalanobis: covariance regularizer
  int directions = 512;              // tukey, d >= 3: direction count K
  std::uint64_t direction_seed = 0;  // tukey, d >= 3: direction stream seed

  static constexpr std::size_t kNoSkip = std::numeric_limits<std::size_t>::max();

  double evaluate(const SummarySet& ref, std::span<const double> candidate) const;

  // Leave-one-out form used by the ranking step: evaluates on `pooled` with
  // member `skip` removed. `order` must be canonical_order(pooled); walking it
  // while skipping one index reproduces exactly the canonical accumulation
  // order of the reduced set.
  double evaluate_excluding(const SummarySet& pooled,
                            std::span<const std::uint32_t> order,
                            std::size_t skip,
                            std::span<const double> candidate) const;
};

// Inverse of 1 plus the squared Mahalanobis distance of the candidate to the
// reference mean under the (ridge-regularized) sample covariance, in (0, 1].
// Covariance uses denominator M-1; a singular regularized covariance raises
// degenerate_reference_error.
double mahalanobis_depth(const SummarySet& ref, std::span<const double> candidate,
                         double ridge = 0.0);

// Smallest fraction of reference points in any closed halfspace containing
// the candidate. Exact for d = 1 and d = 2; for d >= 3 minimizes over
// `directions` deterministic pseudo-random unit directions (an upper bound on
// the exact depth). The candidate itself is never counted.
double tukey_depth(const SummarySet& ref, std::span<const double> candidate,
                   int directions = 512, std::uint64_t direction_seed = 0);

// -|candidate - mean(ref)| for univariate summaries.
double neg_abs_deviation(const SummarySet& ref, std::span<const double> candidate);

}  // namespace lfim
