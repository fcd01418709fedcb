#include "rigidpack/flow.hpp"

#include <algorithm>
#include <queue>

namespace rigidpack {

FlowNetwork::FlowNetwork(int nodes) : head_(nodes) {}

int FlowNetwork::add_arc(int from, int to, Count capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, 0});
  head_[from].push_back(id);
  head_[to].push_back(id + 1);
  return id;
}

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(head_.size(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop();
    for (int id : head_[node]) {
      const Arc& arc = arcs_[id];
      if (arc.residual > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[node] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

Count FlowNetwork::push(int node, int sink, Count amount) {
  if (node == sink) return amount;
  for (std::size_t& i = cursor_[node]; i < head_[node].size(); ++i) {
    const int id = head_[node][i];
    Arc& arc = arcs_[id];
    if (arc.residual <= 0 || level_[arc.to] != level_[node] + 1) continue;
    const Count pushed = push(arc.to, sink, std::min(amount, arc.residual));
    if (pushed > 0) {
      arc.residual -= pushed;
      arcs_[id ^ 1].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

Count FlowNetwork::max_flow(int source, int sink, Count limit) {
  Count total = 0;
  while (total < limit && build_levels(source, sink)) {
    cursor_.assign(head_.size(), 0);
    while (total < limit) {
      const Count pushed = push(source, sink, limit - total);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

std::vector<bool> FlowNetwork::source_side(int source) const {
  std::vector<bool> seen(head_.size(), false);
  std::queue<int> queue;
  seen[source] = true;
  queue.push(source);
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop();
    for (int id : head_[node]) {
      const Arc& arc = arcs_[id];
      if (arc.residual > 0 && !seen[arc.to]) {
        seen[arc.to] = true;
        queue.push(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace rigidpack
