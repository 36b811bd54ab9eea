#pragma once

#include <functional>
#include <string>

#include "lfim/grid.hpp"

namespace lfim {

// A claim about the unknown parameter, evaluable at every grid point. The
// predicate must be pure and total on the grid.
struct Claim {
  std::string label;
  std::function<bool(const ParameterPoint&)> predicate;

  bool holds_at(const ParameterPoint& p) const { return predicate(p); }
};

}  // namespace lfim
