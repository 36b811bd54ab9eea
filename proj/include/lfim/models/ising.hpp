#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lfim/models/model.hpp"

namespace lfim {

// Undirected simple graph over node_count sites: either an explicit edge list
// or a rows x cols nearest-neighbor lattice (horizontal/vertical neighbors,
// open boundary).
class AdjacencySpec {
 public:
  static AdjacencySpec lattice(long rows, long cols);
  static AdjacencySpec from_edges(long node_count,
                                  std::vector<std::pair<long, long>> edges);
  // One "i j" pair per line, 0-based, whitespace-separated, '#' comments.
  static AdjacencySpec parse_edge_list(std::istream& in, long node_count);
  // "lattice:RxC" descriptor (also accepts "lattice:RXC").
  static AdjacencySpec parse_descriptor(const std::string& text);

  long node_count() const { return node_count_; }
  const std::vector<std::pair<long, long>>& edges() const { return edges_; }
  const std::vector<std::vector<long>>& neighbors() const { return neighbors_; }
  long max_degree() const { return max_degree_; }
  bool is_lattice() const { return rows_ > 0; }
  long rows() const { return rows_; }
  long cols() const { return cols_; }

 private:
  AdjacencySpec() = default;
  void build_neighbors();

  long node_count_ = 0;
  long rows_ = 0, cols_ = 0;  // set when built from a lattice descriptor
  std::vector<std::pair<long, long>> edges_;
  std::vector<std::vector<long>> neighbors_;
  long max_degree_ = 0;
};

// Single-site Gibbs sampler for P(z) ~ exp((beta/2) z'Az + B sum z). Sites
// update in raster order with conditional P(z_i=+1|rest) =
// 1/(1+exp(-2(beta*m_i + B))), m_i the sum of neighboring spins. The chain
// starts from iid fair spins drawn from `stream` and returns the
// configuration after burn_in + sweeps full sweeps.
std::vector<std::int8_t> ising_gibbs_simulate(double beta, double b_field,
                                              const AdjacencySpec& adj, long sweeps,
                                              long burn_in, RngStream& stream);

long ising_edge_sum(const AdjacencySpec& adj, std::span<const std::int8_t> spins);
long ising_site_sum(std::span<const std::int8_t> spins);

// Full probability table over all 2^node_count configurations, normalized
// probabilities proportional to exp(beta*edge_sum + B*site_sum). Configuration
// c maps bit i to spin +1 when set. Hard cap node_count <= 20.
std::vector<double> ising_exact_enumeration(double beta, double b_field,
                                            const AdjacencySpec& adj);

// Edge-sum density of states: distinct values t of sum_{(i,j) in E} z_i z_j
// and the log of the number of configurations attaining each. Sufficient for
// all zero-field likelihood computations. Same node cap as the enumeration.
struct EdgeSumCounts {
  std::vector<long> value;
  std::vector<double> log_count;
};
EdgeSumCounts ising_edge_sum_counts(const AdjacencySpec& adj);

enum class IsingSummary { edge_sum_1d, edge_and_site_2d };

IsingSummary ising_summary_from_string(std::string_view name);
std::string to_string(IsingSummary s);

// Ising model over a fixed adjacency. Two-parameter form theta = (beta, B),
// or zero-field form theta = (beta) with B fixed at 0. The paper-style
// constraint beta > 0 is enforced unless allow_zero_beta relaxes it to
// beta >= 0. Each simulated dataset runs a fresh Gibbs chain so the M
// summaries are exactly iid.
class IsingModel : public GenerativeModel {
 public:
  IsingModel(AdjacencySpec adj, IsingSummary summary, bool zero_field,
             long sweeps = 1, long burn_in = 200, bool allow_zero_beta = false);

  std::string id() const override { return "ising"; }
  std::string summary_name() const override { return to_string(summary_); }
  std::size_t param_dim() const override { return zero_field_ ? 1 : 2; }
  std::size_t summary_dim() const override {
    return summary_ == IsingSummary::edge_sum_1d ? 1 : 2;
  }
  std::vector<std::string> param_names() const override;
  long sample_size() const override { return adj_.node_count(); }
  void validate_theta(const ParameterPoint& theta) const override;
  SummaryVector simulate_summary(const ParameterPoint& theta,
                                 RngStream& stream) const override;

  SummaryVector summarize(std::span<const std::int8_t> spins) const;

  const AdjacencySpec& adjacency() const { return adj_; }
  long sweeps() const { return sweeps_; }
  long burn_in() const { return burn_in_; }

 private:
  AdjacencySpec adj_;
  IsingSummary summary_;
  bool zero_field_;
  long sweeps_, burn_in_;
  bool allow_zero_beta_;
};

// Odds ratio of one site turning positive given a neighbor does: exp(4 beta).
double odds_ratio_transform(double beta);

}  // namespace lfim
