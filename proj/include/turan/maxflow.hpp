#pragma once

#include <limits>
#include <vector>

namespace turan {

// Dinic max-flow on small integer networks. Used by the exact min-density
// routine; capacities stay far below the int64 range at desk scale.
class Dinic {
 public:
  explicit Dinic(int n) : n_(n), head_(n, -1) {}

  int add_node() {
    head_.push_back(-1);
    return n_++;
  }

  void add_edge(int u, int v, long long cap) {
    edges_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({u, head_[v], 0});
    head_[v] = static_cast<int>(edges_.size()) - 1;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      long long f;
      while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0)
        flow += f;
    }
    return flow;
  }

  // Source side of a min cut; valid right after max_flow.
  std::vector<char> min_cut_side(int s) {
    std::vector<char> side(n_, 0);
    std::vector<int> stack{s};
    side[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e = head_[v]; e != -1; e = edges_[e].next) {
        if (edges_[e].cap > 0 && !side[edges_[e].to]) {
          side[edges_[e].to] = 1;
          stack.push_back(edges_[e].to);
        }
      }
    }
    return side;
  }

 private:
  struct Edge {
    int to;
    int next;
    long long cap;
  };

  bool bfs(int s, int t) {
    level_.assign(n_, -1);
    std::vector<int> q{s};
    level_[s] = 0;
    for (size_t i = 0; i < q.size(); ++i) {
      int v = q[i];
      for (int e = head_[v]; e != -1; e = edges_[e].next) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] == -1) {
          level_[edges_[e].to] = level_[v] + 1;
          q.push_back(edges_[e].to);
        }
      }
    }
    return level_[t] != -1;
  }

  long long dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (int& e = iter_[v]; e != -1; e = edges_[e].next) {
      Edge& ed = edges_[e];
      if (ed.cap > 0 && level_[ed.to] == level_[v] + 1) {
        long long f = dfs(ed.to, t, std::min(limit, ed.cap));
        if (f > 0) {
          ed.cap -= f;
          edges_[e ^ 1].cap += f;
          return f;
        }
      }
    }
    return 0;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace turan
