#include "lvsim/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace lvsim {

std::int64_t node_load(std::int64_t queue_len, std::int64_t slot_count) {
  if (queue_len == 0) return 0;
  if (slot_count == 0) return kUnboundedLoad;
  const double ratio = static_cast<double>(queue_len) / static_cast<double>(slot_count);
  return static_cast<std::int64_t>(std::floor(ratio + 0.5));
}

double semi_inverse_load(std::int64_t slot_count, std::int64_t queue_next) {
  if (queue_next == 0) return static_cast<double>(slot_count);
  return static_cast<double>(slot_count) / static_cast<double>(queue_next);
}

namespace {

void insert_sorted(std::vector<int>& v, int x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

void erase_sorted(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

}  // namespace

Schedule::Schedule(const Topology& topo, int slot_count)
    : topo_(&topo), slot_count_(slot_count) {
  if (slot_count < 1) throw ScheduleError("frame needs at least one slot");
  owners_.assign(static_cast<std::size_t>(slot_count), {});
  owned_.assign(static_cast<std::size_t>(topo.node_count()), {});
}

bool Schedule::owns(int node, int slot) const {
  const std::vector<int>& v = owners_[slot];
  return std::binary_search(v.begin(), v.end(), node);
}

bool Schedule::free_for(int node, int slot) const {
  for (int o : owners_[slot]) {
    if (o == node || topo_->within_two_hops(node, o)) return false;
  }
  return true;
}

bool Schedule::transferable(int slot, int from, int to) const {
  if (!owns(from, slot)) return false;
  for (int o : owners_[slot]) {
    if (o == from) continue;
    if (o == to || topo_->within_two_hops(to, o)) return false;
  }
  return true;
}

void Schedule::grant(int node, int slot) {
  if (!free_for(node, slot)) throw ScheduleError("grant would conflict");
  insert_sorted(owners_[slot], node);
  insert_sorted(owned_[node], slot);
}

void Schedule::release(int node, int slot) {
  if (!owns(node, slot)) throw ScheduleError("release of a slot the node does not own");
  erase_sorted(owners_[slot], node);
  erase_sorted(owned_[node], slot);
}

std::int64_t Schedule::release_all(int node) {
  const std::int64_t count = owned_count(node);
  for (int slot : owned_[node]) erase_sorted(owners_[slot], node);
  owned_[node].clear();
  return count;
}

void Schedule::transfer(int slot, int from, int to) {
  if (!transferable(slot, from, to)) throw ScheduleError("transfer would conflict");
  erase_sorted(owners_[slot], from);
  erase_sorted(owned_[from], slot);
  insert_sorted(owners_[slot], to);
  insert_sorted(owned_[to], slot);
}

bool is_conflict_free(const Schedule& sched, const Topology& topo) {
  for (int s = 0; s < sched.slot_count(); ++s) {
    const std::vector<int>& own = sched.owners(s);
    for (std::size_t a = 0; a < own.size(); ++a)
      for (std::size_t b = a + 1; b < own.size(); ++b)
        if (topo.within_two_hops(own[a], own[b])) return false;
  }
  return true;
}

std::vector<int> exchangeable_neighbors(const Schedule& sched, const Topology& topo, int node) {
  std::vector<int> result;
  for (int j : topo.one_hop(node)) {
    for (int slot : sched.owned(j)) {
      if (sched.transferable(slot, j, node)) {
        result.push_back(j);
        break;
      }
    }
  }
  return result;
}

bool is_maximal(const Schedule& sched, const Topology& topo,
                const std::vector<std::int64_t>& queue_lens) {
  for (int i = 0; i < topo.node_count(); ++i) {
    if (queue_lens[i] <= 0) continue;
    for (int s = 0; s < sched.slot_count(); ++s)
      if (sched.free_for(i, s)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> balance_violations(const Schedule& sched, const Topology& topo,
                                                    const std::vector<std::int64_t>& queue_lens) {
  const int n = topo.node_count();
  int max_node = 0;
  std::int64_t max_load = -1;
  for (int i = 0; i < n; ++i) {
    const std::int64_t load = node_load(queue_lens[i], sched.owned_count(i));
    if (load > max_load) {
      max_load = load;
      max_node = i;
    }
  }
  std::vector<std::pair<int, int>> violations;
  if (max_load <= 0) return violations;
  for (int j : exchangeable_neighbors(sched, topo, max_node)) {
    const std::int64_t p_j = sched.owned_count(j);
    if (p_j < 2) continue;
    const double x_j = static_cast<double>(node_load(queue_lens[j], p_j));
    const double bound = x_j / (1.0 - 1.0 / static_cast<double>(p_j));
    if (static_cast<double>(max_load) > bound) violations.emplace_back(max_node, j);
  }
  return violations;
}

LoadView make_load_view(const std::vector<std::int64_t>& queue_lens, const Schedule& sched) {
  LoadView view;
  const int n = sched.node_count();
  view.queue_len = queue_lens;
  view.slots.resize(n);
  view.load.resize(n);
  view.semi_inverse.resize(n);
  for (int i = 0; i < n; ++i) {
    view.slots[i] = sched.owned_count(i);
    view.load[i] = node_load(queue_lens[i], view.slots[i]);
    view.semi_inverse[i] = semi_inverse_load(view.slots[i], queue_lens[i]);
  }
  return view;
}

}  // namespace lvsim
