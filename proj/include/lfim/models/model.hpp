#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfim/grid.hpp"
#include "lfim/rng.hpp"
#include "lfim/summary.hpp"

namespace lfim {

// Capability to simulate one d-dimensional summary of a size-n dataset from
// P_theta^n. Models are immutable after construction; simulate_summary is a
// deterministic function of (theta, stream state) and may run concurrently
// across grid points and replicates.
class GenerativeModel {
 public:
  virtual ~GenerativeModel() = default;

  virtual std::string id() const = 0;
  virtual std::string summary_name() const = 0;
  virtual std::size_t param_dim() const = 0;
  virtual std::size_t summary_dim() const = 0;
  virtual std::vector<std::string> param_names() const = 0;
  virtual long sample_size() const = 0;

  // Throws std::domain_error when theta is outside the admissible box.
  virtual void validate_theta(const ParameterPoint& theta) const = 0;

  virtual SummaryVector simulate_summary(const ParameterPoint& theta,
                                         RngStream& stream) const = 0;
};

}  // namespace lfim
