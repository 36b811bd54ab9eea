#pragma once

#include <array>
#include <string>
#include <vector>

#include "lfim/models/model.hpp"

namespace lfim {

enum class CorrSummary { sample_corr, sufficient_2d, crossprod_1d };

CorrSummary corr_summary_from_string(std::string_view name);
std::string to_string(CorrSummary s);

// Bivariate normal pairs with zero means, unit variances and unknown
// correlation rho in (-1, 1). Summaries: the Pearson sample correlation
// (d=1), the sufficient pair (sum x^2+y^2, sum xy) (d=2), or the
// cross-product sum alone (d=1).
class CorrelationModel : public GenerativeModel {
 public:
  CorrelationModel(long n, CorrSummary summary);

  std::string id() const override { return "correlation"; }
  std::string summary_name() const override { return to_string(summary_); }
  std::size_t param_dim() const override { return 1; }
  std::size_t summary_dim() const override;
  std::vector<std::string> param_names() const override { return {"rho"}; }
  long sample_size() const override { return n_; }
  void validate_theta(const ParameterPoint& theta) const override;
  SummaryVector simulate_summary(const ParameterPoint& theta,
                                 RngStream& stream) const override;

  // Summary of an observed dataset of (x, y) pairs.
  SummaryVector summarize(const std::vector<std::array<double, 2>>& pairs) const;

 private:
  long n_;
  CorrSummary summary_;
};

}  // namespace lfim
