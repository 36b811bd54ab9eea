#pragma once

#include <string>
#include <vector>

#include "lfim/claim.hpp"
#include "lfim/grid.hpp"

namespace lfim {

// Textual comparison over named parameter coordinates. Supported forms, with
// strict inequalities only:
//   "g > 3"        "0.1 < k"       (single comparison)
//   "3 < g < 4"    "4 > g > 3"     (range)
//   "g/k > 10"     "3 < g/k < 40"  (ratio of two coordinates)
// Points where a ratio's denominator is zero are treated as not satisfying
// the claim (they count to the complement) and can be detected via
// defined_at.
class ClaimExpression {
 public:
  // Parses `text` against the coordinate names; throws config_error naming
  // the problem on bad syntax or unknown identifiers.
  static ClaimExpression parse(const std::string& text,
                               const std::vector<std::string>& param_names,
                               std::string label = "");

  const std::string& label() const { return label_; }
  const std::string& text() const { return text_; }

  bool defined_at(const ParameterPoint& p) const;
  bool holds_at(const ParameterPoint& p) const;  // false where undefined

  // Predicate claim for the possibility calculus (undefined -> complement).
  Claim to_claim() const;

 private:
  ClaimExpression() = default;

  std::string label_, text_;
  // value = coords[num] or coords[num]/coords[den]
  int num_ = -1, den_ = -1;  // den < 0: plain coordinate
  double lo_ = 0, hi_ = 0;
  bool has_lo_ = false, has_hi_ = false;
};

}  // namespace lfim
