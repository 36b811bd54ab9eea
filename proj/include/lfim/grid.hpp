#pragma once

#include <cstddef>
#include <vector>

namespace lfim {

// Coordinates of one candidate parameter value.
using ParameterPoint = std::vector<double>;

// Cartesian product of strictly increasing per-dimension axes. Points are
// indexed lexicographically with the last axis varying fastest.
class ParameterGrid {
 public:
  explicit ParameterGrid(std::vector<std::vector<double>> axes);

  // Builds min, min+step, ..., up to max (inclusive when max-min is an
  // integer multiple of step, to fp tolerance).
  static std::vector<double> axis_from_range(double min, double max, double step);

  std::size_t dims() const { return axes_.size(); }
  std::size_t size() const { return size_; }
  const std::vector<double>& axis(std::size_t d) const { return axes_[d]; }

  ParameterPoint point(std::size_t flat) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;
  std::size_t flat_index(const std::vector<std::size_t>& mi) const;

  // Index of the grid point nearest in Euclidean distance (per-axis nearest
  // value; ties resolve to the lower index).
  std::size_t nearest_index(const ParameterPoint& p) const;

  bool operator==(const ParameterGrid& other) const { return axes_ == other.axes_; }

 private:
  std::vector<std::vector<double>> axes_;
  std::size_t size_ = 1;
};

// Cell edges around the values of a 1-D axis: midpoints between neighbors,
// extended half a cell beyond each end. An axis with k values gives k+1 edges.
std::vector<double> axis_cell_edges(const std::vector<double>& axis);

}  // namespace lfim
