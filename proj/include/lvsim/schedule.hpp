#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lvsim/topology.hpp"

namespace lvsim {

struct ScheduleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sentinel load for a node with a backlog but no slots; compares above any
// finite load so max-load scans stay well defined during transients.
inline constexpr std::int64_t kUnboundedLoad = std::numeric_limits<std::int64_t>::max();

// Rounded load: nearest integer of queue/slots with half-up ties,
// i.e. floor(q/p + 0.5). Zero queue means zero load.
std::int64_t node_load(std::int64_t queue_len, std::int64_t slot_count);

// Semi-inverse load: slots/queue, falling back to the slot count itself when
// the queue is empty.
double semi_inverse_load(std::int64_t slot_count, std::int64_t queue_next);

// Per-frame slot ownership. A slot may have several owners as long as no two
// of them are within two hops of each other; every mutator rejects requests
// that would break that.
class Schedule {
 public:
  Schedule(const Topology& topo, int slot_count);

  int slot_count() const { return slot_count_; }
  int node_count() const { return static_cast<int>(owned_.size()); }
  const Topology& topology() const { return *topo_; }

  const std::vector<int>& owners(int slot) const { return owners_[slot]; }
  const std::vector<int>& owned(int node) const { return owned_[node]; }
  std::int64_t owned_count(int node) const { return static_cast<std::int64_t>(owned_[node].size()); }
  bool owns(int node, int slot) const;

  // A slot is free for a node when nobody in N^(2) nor the node itself owns it.
  bool free_for(int node, int slot) const;
  // A transfer is feasible when `from` owns the slot and no other owner
  // conflicts with `to`.
  bool transferable(int slot, int from, int to) const;

  void grant(int node, int slot);
  void release(int node, int slot);
  std::int64_t release_all(int node);
  void transfer(int slot, int from, int to);

 private:
  const Topology* topo_;
  int slot_count_;
  std::vector<std::vector<int>> owners_;  // per slot, sorted
  std::vector<std::vector<int>> owned_;   // per node, sorted
};

// Full-scan check of the two-hop exclusion on every slot.
bool is_conflict_free(const Schedule& sched, const Topology& topo);

// One-hop neighbors that currently own at least one slot transferable to
// `node` without breaking conflict-freedom (the exchange set).
std::vector<int> exchangeable_neighbors(const Schedule& sched, const Topology& topo, int node);

// True iff no node with a backlog could be granted any additional slot.
bool is_maximal(const Schedule& sched, const Topology& topo, const std::vector<std::int64_t>& queue_lens);

// Balance check against the most-loaded node k: every exchange neighbor j
// with at least two slots must satisfy x_k <= x_j / (1 - 1/p_j). Returns the
// violating (k, j) pairs; empty means balanced.
std::vector<std::pair<int, int>> balance_violations(const Schedule& sched, const Topology& topo,
                                                    const std::vector<std::int64_t>& queue_lens);

struct LoadView {
  std::vector<std::int64_t> queue_len;
  std::vector<std::int64_t> slots;
  std::vector<std::int64_t> load;
  std::vector<double> semi_inverse;
};

LoadView make_load_view(const std::vector<std::int64_t>& queue_lens, const Schedule& sched);

}  // namespace lvsim
