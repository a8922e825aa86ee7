#include "lvsim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include "lvsim/rng.hpp"

namespace lvsim {

namespace {

bool graph_connected(const std::vector<std::vector<int>>& one_hop) {
  const int n = static_cast<int>(one_hop.size());
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : one_hop[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        queue.push_back(v);
      }
    }
  }
  return count == n;
}

std::vector<std::vector<int>> disk_adjacency(const std::vector<std::array<double, 2>>& pos,
                                             double range) {
  const int n = static_cast<int>(pos.size());
  std::vector<std::vector<int>> one_hop(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = pos[i][0] - pos[j][0];
      const double dy = pos[i][1] - pos[j][1];
      // strict comparison: boundary-equal pairs are not adjacent
      if (dx * dx + dy * dy < range * range) {
        one_hop[i].push_back(j);
        one_hop[j].push_back(i);
      }
    }
  }
  return one_hop;
}

}  // namespace

Topology::Topology(std::vector<std::array<double, 2>> positions, double width, double height,
                   double range, std::uint64_t seed)
    : n_(static_cast<int>(positions.size())),
      width_(width),
      height_(height),
      range_(range),
      seed_(seed),
      positions_(std::move(positions)) {
  if (n_ < 1) throw TopologyError("topology needs at least one node");
  one_hop_ = disk_adjacency(positions_, range_);
  if (!graph_connected(one_hop_)) throw TopologyError("topology is not connected");

  adj_.assign(n_, std::vector<std::uint8_t>(n_, 0));
  for (int i = 0; i < n_; ++i)
    for (int j : one_hop_[i]) adj_[i][j] = 1;

  two_hop_.assign(n_, {});
  two_hop_mask_.assign(n_, std::vector<std::uint8_t>(n_, 0));
  for (int i = 0; i < n_; ++i) {
    std::vector<std::uint8_t>& mask = two_hop_mask_[i];
    for (int j : one_hop_[i]) {
      mask[j] = 1;
      for (int k : one_hop_[j]) mask[k] = 1;
    }
    mask[i] = 0;
    for (int j = 0; j < n_; ++j)
      if (mask[j]) two_hop_[i].push_back(j);
  }

  // BFS from every destination; next hop is the lowest-id neighbor that
  // strictly decreases the hop distance, so routes are loop-free and stable.
  hop_dist_.assign(n_, std::vector<int>(n_, -1));
  next_hop_.assign(n_, std::vector<int>(n_, -1));
  for (int dst = 0; dst < n_; ++dst) {
    std::vector<int>& dist = hop_dist_[dst];
    dist[dst] = 0;
    std::deque<int> queue{dst};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : one_hop_[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int src = 0; src < n_; ++src) {
      if (src == dst) continue;
      for (int v : one_hop_[src]) {  // one_hop is sorted ascending
        if (dist[v] == dist[src] - 1) {
          next_hop_[src][dst] = v;
          break;
        }
      }
    }
  }
}

int Topology::next_hop(int src, int dst) const {
  if (src == dst) throw TopologyError("already at destination");
  return next_hop_[src][dst];
}

Topology generate_random_topology(int nodes, double width, double height, double range,
                                  std::uint64_t seed, int attempt_limit) {
  if (nodes < 2) throw TopologyError("need at least two nodes");
  if (width <= 0 || height <= 0 || range <= 0)
    throw TopologyError("area dimensions and range must be positive");
  Rng rng(derive_stream(seed, "topology"));
  for (int attempt = 0; attempt < attempt_limit; ++attempt) {
    std::vector<std::array<double, 2>> pos(nodes);
    for (auto& p : pos) {
      p[0] = rng.uniform(0.0, width);
      p[1] = rng.uniform(0.0, height);
    }
    if (graph_connected(disk_adjacency(pos, range)))
      return Topology(std::move(pos), width, height, range, seed);
  }
  std::ostringstream msg;
  msg << "no connected topology in " << attempt_limit << " draws (n=" << nodes << ", area "
      << width << "x" << height << ", range " << range << "); density looks infeasible";
  throw TopologyError(msg.str());
}

const std::vector<int>& two_hop_neighborhood(const Topology& topo, int node) {
  return topo.two_hop(node);
}

int chromatic_upper_bound(const Topology& topo) {
  int max_two_hop = 0;
  for (int i = 0; i < topo.node_count(); ++i)
    max_two_hop = std::max(max_two_hop, static_cast<int>(topo.two_hop(i).size()));
  return max_two_hop + 1;
}

std::string serialize_topology(const Topology& topo) {
  std::ostringstream out;
  out.precision(std::numeric_limits<double>::max_digits10);
  out << topo.node_count() << ' ' << topo.width() << ' ' << topo.height() << ' ' << topo.range()
      << ' ' << topo.seed() << '\n';
  for (int i = 0; i < topo.node_count(); ++i)
    out << i << ' ' << topo.position(i)[0] << ' ' << topo.position(i)[1] << '\n';
  return out.str();
}

Topology parse_topology(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  double width = 0, height = 0, range = 0;
  std::uint64_t seed = 0;
  if (!(in >> n >> width >> height >> range >> seed))
    throw TopologyError("bad topology header");
  std::vector<std::array<double, 2>> pos(n);
  for (int k = 0; k < n; ++k) {
    int id = 0;
    double x = 0, y = 0;
    if (!(in >> id >> x >> y) || id != k) throw TopologyError("bad topology node line");
    pos[k] = {x, y};
  }
  return Topology(std::move(pos), width, height, range, seed);
}

}  // namespace lvsim
