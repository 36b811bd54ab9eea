#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lfim/claim.hpp"
#include "lfim/grid.hpp"

namespace lfim {

struct ContourMeta {
  std::string model_id;
  std::string summary;
  std::string measure;
  long m_draws = 0;  // M (or L for the likelihood-based oracle)
  long n = 0;
  std::uint64_t master_seed = 0;
  double sup_delta = 0.0;  // normalization constant: sup of delta over the grid
};

// Possibility contour evaluated on a grid: raw validified values delta and
// normalized values pi = delta / max(delta).
struct ContourTable {
  ParameterGrid grid;
  std::vector<double> delta;
  std::vector<double> pi;
  ContourMeta meta;
};

// Normalizes delta by its grid supremum and records it in meta.
ContourTable make_contour_table(ParameterGrid grid, std::vector<double> delta,
                                ContourMeta meta);

// Indices of grid points with pi > alpha (strict).
std::vector<std::size_t> level_set(const ContourTable& table, double alpha);

// Sum of the grid-cell lengths of level-set points; 1-D grids only.
double level_set_width(const ContourTable& table, double alpha);

// sup of pi over points satisfying the claim; 0 when no grid point does.
double plausibility(const ContourTable& table, const Claim& claim);
// 1 - plausibility of the complement.
double belief(const ContourTable& table, const Claim& claim);

// 1-D contour for a feature g of the parameter: per bin, the max of pi over
// grid points whose g-value lands in the bin. Bins are [e_b, e_{b+1}), the
// last closed on the right. Empty bins are marked missing rather than zero.
// Points where g is non-finite are excluded; finite values outside the edges
// are an error (the bins must cover g's range on the grid).
struct MarginalContour {
  std::vector<double> edges;   // B+1 ascending bin edges
  std::vector<double> value;   // B values (unspecified where !occupied)
  std::vector<bool> occupied;  // false = empty bin (missing)

  // Value of the bin containing phi; throws if that bin is empty or phi is
  // outside the covered range.
  double value_at(double phi) const;
};

MarginalContour marginal_contour(const ContourTable& table,
                                 const std::function<double(const ParameterPoint&)>& g,
                                 const std::vector<double>& edges);

}  // namespace lfim
