#pragma once

#include <vector>

#include "lfim/models/model.hpp"

namespace lfim {

// Quantile function of the g-and-k distribution with overall-symmetry
// constant c = 0.8:
//   Q(u) = mu + sigma*w*(1 + c*(1-e^{-g w})/(1+e^{-g w}))*(1+w^2)^k,
// with w the standard normal quantile of u. Requires 0 < u < 1, sigma > 0,
// k > -1/2.
double gk_quantile(double u, double mu, double sigma, double g, double k);

// g-and-k samples with mu, sigma held fixed; theta = (g, k). Summary is the
// bivariate (sample skewness, sample excess kurtosis) with central moments
// averaged over n: skew = m3/m2^{3/2}, exkurt = m4/m2^2 - 3.
class GkModel : public GenerativeModel {
 public:
  GkModel(long n, double mu = 0.0, double sigma = 1.0);

  std::string id() const override { return "gk"; }
  std::string summary_name() const override { return "skew_kurt"; }
  std::size_t param_dim() const override { return 2; }
  std::size_t summary_dim() const override { return 2; }
  std::vector<std::string> param_names() const override { return {"g", "k"}; }
  long sample_size() const override { return n_; }
  void validate_theta(const ParameterPoint& theta) const override;
  SummaryVector simulate_summary(const ParameterPoint& theta,
                                 RngStream& stream) const override;

  // (skewness, excess kurtosis) of an observed sample; throws
  // degenerate_summary_error on zero variance.
  SummaryVector summarize(const std::vector<double>& sample) const;

  double mu() const { return mu_; }
  double sigma() const { return sigma_; }

 private:
  long n_;
  double mu_, sigma_;
};

}  // namespace lfim
