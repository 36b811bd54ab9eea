#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lfim/abc.hpp"
#include "lfim/claim.hpp"
#include "lfim/contour.hpp"
#include "lfim/depth.hpp"
#include "lfim/models/model.hpp"

namespace lfim {

// One-sided DKW band half-width: sqrt(ln(1/(1-confidence)) / (2R)).
double dkw_epsilon(std::size_t r, double confidence);

struct DominanceCheck {
  double alpha = 0;
  double fraction = 0;  // empirical P(sample <= alpha)
  double bound = 0;     // alpha + epsilon
  bool pass = false;
};

// Tests whether the sample ECDF is stochastically no smaller than Unif(0,1):
// passes at alpha iff the empirical fraction <= alpha + dkw_epsilon.
std::vector<DominanceCheck> check_stochastic_dominance(std::span<const double> samples,
                                                       std::span<const double> alphas,
                                                       double confidence);
bool all_pass(const std::vector<DominanceCheck>& checks);

// Feature whose marginal contour is checked at g(truth).
struct MarginalSpec {
  std::string label;
  std::function<double(const ParameterPoint&)> g;
  std::vector<double> edges;
};

// ABC rejection baseline run alongside the replication study (diagnostic).
struct AbcSpec {
  int draws = 0;
  double keep_fraction = 0.01;
  UniformPrior prior;
};

struct ReplicationPlan {
  const GenerativeModel* model = nullptr;
  ParameterGrid grid{{{0.0}}};
  ParameterPoint truth;
  int m_draws = 0;
  ConformityMeasure measure;
  int replicates = 0;
  std::vector<double> alphas;           // dominance grid; default 0.05..0.95
  std::vector<double> coverage_alphas;  // coverage/width rows (optional)
  double confidence = 0.99;
  std::vector<Claim> claims;  // each must be false at the truth
  std::vector<MarginalSpec> marginals;
  std::optional<AbcSpec> abc;  // claim baseline, reported but never gating
  std::uint64_t master_seed = 0;
  unsigned threads = 0;
};

struct CoverageRow {
  double alpha = 0;
  double coverage = 0;
  double bound = 0;  // 1 - alpha - epsilon
  bool pass = false;
  bool width_defined = false;
  double mean_width = 0;  // 1-D grids only
};

struct ClaimCalibration {
  std::string label;
  std::vector<double> one_minus_belief;  // per replicate
  std::vector<DominanceCheck> checks;
  bool pass = false;
};

struct MarginalCalibration {
  std::string label;
  std::vector<double> pi_at_feature;  // marginal contour at g(truth), per replicate
  std::vector<DominanceCheck> checks;
  bool pass = false;
};

struct AbcClaimResult {
  std::string label;
  std::vector<double> one_minus_posterior;  // per replicate
  std::vector<DominanceCheck> checks;
  bool pass = false;  // diagnostic only
};

struct CalibrationReport {
  ParameterPoint truth;  // snapped to the grid
  double snap_distance = 0;
  std::vector<double> pi_at_truth;
  std::vector<DominanceCheck> ecdf_checks;
  bool validity_pass = false;
  std::vector<CoverageRow> coverage;
  std::vector<ClaimCalibration> claim_ecdfs;
  std::vector<MarginalCalibration> marginal_checks;
  std::vector<AbcClaimResult> abc_claims;
  bool pass = false;  // overall verdict (abc_claims excluded)
};

// Runs the replication study: per replicate r, simulates one observed summary
// at the truth (stream purpose "calibration", replicate r), computes the
// contour, and records pi(truth), claim beliefs, marginal values and
// level-set widths. Replicates run concurrently; results are assembled in
// index order and are bit-reproducible under a fixed master seed.
CalibrationReport run_replication(const ReplicationPlan& plan);

// Convenience wrapper returning only the R contour values at the truth.
std::vector<double> validity_ecdf(const ReplicationPlan& plan);

}  // namespace lfim
