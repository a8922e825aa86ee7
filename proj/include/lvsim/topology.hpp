#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace lvsim {

struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Static unit-disk network: node placement, one-/two-hop neighborhoods and
// min-hop routing tables. Immutable after construction; safe to share across
// concurrent replications.
class Topology {
 public:
  // Builds adjacency, two-hop sets and routing from explicit positions.
  // Throws TopologyError if the resulting graph is not connected.
  Topology(std::vector<std::array<double, 2>> positions, double width, double height,
           double range, std::uint64_t seed = 0);

  int node_count() const { return n_; }
  double width() const { return width_; }
  double height() const { return height_; }
  double range() const { return range_; }
  std::uint64_t seed() const { return seed_; }
  const std::array<double, 2>& position(int i) const { return positions_[i]; }

  const std::vector<int>& one_hop(int i) const { return one_hop_[i]; }
  const std::vector<int>& two_hop(int i) const { return two_hop_[i]; }

  bool adjacent(int i, int j) const { return adj_[i][j] != 0; }
  // True iff j is in N_i^(2) (one-hop neighbors included, i itself excluded).
  bool within_two_hops(int i, int j) const { return two_hop_mask_[i][j] != 0; }

  // Neighbor of src on a minimum-hop path to dst; ties broken by lowest id.
  // Throws TopologyError when src == dst.
  int next_hop(int src, int dst) const;

  int hop_distance(int i, int j) const { return hop_dist_[i][j]; }

 private:
  int n_ = 0;
  double width_ = 0, height_ = 0, range_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<std::array<double, 2>> positions_;
  std::vector<std::vector<int>> one_hop_, two_hop_;
  std::vector<std::vector<std::uint8_t>> adj_, two_hop_mask_;
  std::vector<std::vector<int>> next_hop_, hop_dist_;
};

// Draws positions i.i.d. uniform over the rectangle, redrawing until the
// unit-disk graph is connected. Deterministic in the seed. Throws
// TopologyError after attempt_limit disconnected draws (infeasible density).
Topology generate_random_topology(int nodes, double width, double height, double range,
                                  std::uint64_t seed, int attempt_limit = 10000);

const std::vector<int>& two_hop_neighborhood(const Topology& topo, int node);

// max_i |N_i^(2)| + 1: frame lengths at least this always admit one slot per node.
int chromatic_upper_bound(const Topology& topo);

// Line format: "n width height range seed" header, then one "id x y" per node.
// Adjacency is recomputed on load; positions are the source of truth.
std::string serialize_topology(const Topology& topo);
Topology parse_topology(const std::string& text);

}  // namespace lvsim
