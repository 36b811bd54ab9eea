#pragma once

#include <stdexcept>
#include <string>

namespace lfim {

// Reference set cannot support the requested measure, e.g. a singular
// covariance with ridge = 0. Never reported as a silent NaN.
class degenerate_reference_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A simulated sample has no usable summary (e.g. zero sample variance).
class degenerate_summary_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Measure asked to operate outside its domain (e.g. neg_abs_dev with d > 1).
class unsupported_measure_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failure while simulating or ranking; carries the grid/replicate context.
class simulation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid experiment configuration; the message names the offending key.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lfim
