#pragma once

#include "lfim/models/model.hpp"

namespace lfim {

// One draw of Tulap(0, e^{-1}, 0) noise via its representation
// G1 - G2 + U with G1, G2 iid Geom(1 - e^{-1}) on {0,1,2,...} and
// U ~ Unif(-1/2, 1/2). This choice of scale guarantees 1-DP.
double tulap_sample(RngStream& stream);

// Bernoulli sample of size n observed only through the privatized release
// sum(z_i) + N, N ~ Tulap. theta = success probability in [0, 1]; d = 1.
class DpBernoulliModel : public GenerativeModel {
 public:
  explicit DpBernoulliModel(long n);

  std::string id() const override { return "dp_bernoulli"; }
  std::string summary_name() const override { return "private_sum"; }
  std::size_t param_dim() const override { return 1; }
  std::size_t summary_dim() const override { return 1; }
  std::vector<std::string> param_names() const override { return {"theta"}; }
  long sample_size() const override { return n_; }
  void validate_theta(const ParameterPoint& theta) const override;
  SummaryVector simulate_summary(const ParameterPoint& theta,
                                 RngStream& stream) const override;

  // The observed summary is the privatized release itself.
  SummaryVector summarize(double privatized_release) const;

 private:
  long n_;
};

}  // namespace lfim
