#pragma once

#include <cstdint>
#include <vector>

#include "lvsim/schedule.hpp"
#include "lvsim/topology.hpp"

namespace lvsim {

// Per-node control state of the slot-exchange protocol. `control[i]` is the
// signed number of slots node i should gain (>0) or shed (<0) this frame;
// `residual[i]` keeps the rounding error of the control computation, which
// stays in [-0.5, 0.5].
struct ControlState {
  double gamma = 1.0;
  std::vector<std::int64_t> control;
  std::vector<double> residual;

  explicit ControlState(int nodes = 0, double gamma_value = 1.0)
      : gamma(gamma_value), control(nodes, 0), residual(nodes, 0.0) {}
};

// Control law: the rounded weighted average of neighbor load differences,
//   u_i = [ gamma * sum_j (q_i * p_j - q_j * p_i) / (q_i + sum_j q_j) ]
// over the exchange set, with [.] nearest-integer (half away from zero).
// Zero when the node's queue is empty or it has nobody to exchange with.
std::int64_t compute_control(int node, const std::vector<std::int64_t>& queue_next,
                             const std::vector<std::int64_t>& owned, const std::vector<int>& exchange_set,
                             double gamma, double* residual = nullptr);

// Release/request step for one node: an empty queue releases everything
// (returns -released); a backlogged node takes free slots first-fit, at most
// queue_len of them (returns +granted).
std::int64_t release_and_request(int node, Schedule& sched, const Topology& topo,
                                 const std::vector<std::int64_t>& queue_lens);

struct SlotTransfer {
  int slot;
  int from;
  int to;
};

// Balancing step for one node with a positive control: repeatedly pull slots
// from the neighbor with the most negative control, r = min{u_i, u_i - u_j,
// p_prev_j} slots at a time, skipping donors whose slots are all blocked.
// Mutates the schedule and the control state; returns the realized transfers.
std::vector<SlotTransfer> balance(int node, Schedule& sched, const Topology& topo,
                                  ControlState& controls,
                                  const std::vector<std::int64_t>& owned_prev);

}  // namespace lvsim
