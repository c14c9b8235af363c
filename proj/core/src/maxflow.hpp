#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace ksparse::detail {

// Dinic max-flow with double capacities; graphs here are tiny (one node per
// ground element plus source and sink).
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_edge(int from, int to, double capacity) {
    edges_.push_back({to, head_[static_cast<std::size_t>(from)], capacity});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[static_cast<std::size_t>(to)], 0.0});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(edges_.size()) - 1;
  }

  double max_flow(int source, int sink) {
    double flow = 0.0;
    while (build_levels(source, sink)) {
      iter_ = head_;
      while (true) {
        const double pushed = augment(source, sink, std::numeric_limits<double>::infinity());
        if (pushed <= 0.0) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  struct Edge {
    int to;
    int next;
    double capacity;
  };

  bool build_levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    level_[static_cast<std::size_t>(source)] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int e = head_[static_cast<std::size_t>(u)]; e >= 0; e = edges_[static_cast<std::size_t>(e)].next) {
        const Edge& edge = edges_[static_cast<std::size_t>(e)];
        if (edge.capacity > 0.0 && level_[static_cast<std::size_t>(edge.to)] < 0) {
          level_[static_cast<std::size_t>(edge.to)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(edge.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  double augment(int u, int sink, double limit) {
    if (u == sink) return limit;
    for (int& e = iter_[static_cast<std::size_t>(u)]; e >= 0;
         e = edges_[static_cast<std::size_t>(e)].next) {
      Edge& edge = edges_[static_cast<std::size_t>(e)];
      if (edge.capacity <= 0.0 ||
          level_[static_cast<std::size_t>(edge.to)] != level_[static_cast<std::size_t>(u)] + 1)
        continue;
      const double pushed = augment(edge.to, sink, std::min(limit, edge.capacity));
      if (pushed > 0.0) {
        edge.capacity -= pushed;
        edges_[static_cast<std::size_t>(e ^ 1)].capacity += pushed;
        return pushed;
      }
    }
    return 0.0;
  }

  std::vector<int> head_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace ksparse::detail
