#include "posetlab/flow.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace posetlab {

FlowNetwork::FlowNetwork(std::size_t nodes, std::size_t source,
                         std::size_t sink)
    : nodes_(nodes), source_(source), sink_(sink) {
  if (source >= nodes || sink >= nodes) {
    throw FlowError("source or sink out of range");
  }
  if (source == sink) throw FlowError("source and sink must differ");
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to,
                                 Capacity capacity, Cost cost) {
  if (from >= nodes_ || to >= nodes_) throw FlowError("arc endpoint out of range");
  if (capacity < 0) throw FlowError("negative capacity");
  if (to == source_) throw FlowError("arc into the source");
  if (from == sink_) throw FlowError("arc out of the sink");
  arcs_.push_back({from, to, capacity, cost});
  return arcs_.size() - 1;
}

namespace {

constexpr Cost kInfCost = std::numeric_limits<Cost>::max() / 4;

// Paired residual edges: edge e and e ^ 1 are reverses of each other.
struct Residual {
  struct Edge {
    std::size_t to;
    Capacity cap;
    Cost cost;
  };

  explicit Residual(const FlowNetwork& net) : adj(net.node_count()) {
    edges.reserve(2 * net.arcs().size());
    for (const auto& a : net.arcs()) {
      adj[a.from].push_back(edges.size());
      edges.push_back({a.to, a.capacity, a.cost});
      adj[a.to].push_back(edges.size());
      edges.push_back({a.from, 0, -a.cost});
    }
  }

  std::vector<Capacity> arc_flows() const {
    std::vector<Capacity> flow(edges.size() / 2);
    for (std::size_t i = 0; i < flow.size(); ++i) flow[i] = edges[2 * i + 1].cap;
    return flow;
  }

  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> adj;
};

class Dinic {
 public:
  Dinic(Residual& r, std::size_t s, std::size_t t)
      : r_(r), s_(s), t_(t), level_(r.adj.size()), next_(r.adj.size()) {}

  Capacity run() {
    Capacity total = 0;
    while (bfs()) {
      std::fill(next_.begin(), next_.end(), 0);
      while (Capacity pushed = dfs(s_, std::numeric_limits<Capacity>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  std::vector<bool> reachable() {
    bfs();
    std::vector<bool> out(level_.size());
    for (std::size_t v = 0; v < level_.size(); ++v) out[v] = level_[v] >= 0;
    return out;
  }

 private:
  bool bfs() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[s_] = 0;
    queue.push(s_);
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop();
      for (auto e : r_.adj[v]) {
        const auto& edge = r_.edges[e];
        if (edge.cap > 0 && level_[edge.to] < 0) {
          level_[edge.to] = level_[v] + 1;
          queue.push(edge.to);
        }
      }
    }
    return level_[t_] >= 0;
  }

  Capacity dfs(std::size_t v, Capacity limit) {
    if (v == t_) return limit;
    for (auto& i = next_[v]; i < r_.adj[v].size(); ++i) {
      auto e = r_.adj[v][i];
      auto& edge = r_.edges[e];
      if (edge.cap <= 0 || level_[edge.to] != level_[v] + 1) continue;
      if (Capacity pushed = dfs(edge.to, std::min(limit, edge.cap))) {
        edge.cap -= pushed;
        r_.edges[e ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  Residual& r_;
  std::size_t s_, t_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

// Shortest distances from the source over positive-capacity arcs. Uses the
// topological order when the network is acyclic, Bellman-Ford otherwise.
std::vector<Cost> initial_potentials(const Residual& r, std::size_t s) {
  const std::size_t n = r.adj.size();
  std::vector<Cost> dist(n, kInfCost);
  dist[s] = 0;

  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto e : r.adj[v]) {
      if (r.edges[e].cap > 0) ++indegree[r.edges[e].to];
    }
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto e : r.adj[order[i]]) {
      if (r.edges[e].cap > 0 && --indegree[r.edges[e].to] == 0) {
        order.push_back(r.edges[e].to);
      }
    }
  }
  if (order.size() == n) {
    for (auto v : order) {
      if (dist[v] == kInfCost) continue;
      for (auto e : r.adj[v]) {
        const auto& edge = r.edges[e];
        if (edge.cap > 0) dist[edge.to] = std::min(dist[edge.to], dist[v] + edge.cost);
      }
    }
    return dist;
  }

  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] == kInfCost) continue;
      for (auto e : r.adj[v]) {
        const auto& edge = r.edges[e];
        if (edge.cap > 0 && dist[v] + edge.cost < dist[edge.to]) {
          dist[edge.to] = dist[v] + edge.cost;
          changed = true;
        }
      }
    }
    if (!changed) return dist;
  }
  throw FlowError("network has a negative cycle");
}

class SuccessiveShortestPaths {
 public:
  SuccessiveShortestPaths(const FlowNetwork& net)
      : r_(net), s_(net.source()), t_(net.sink()),
        potential_(initial_potentials(r_, s_)) {}

  // Augments until `limit` units are sent, or, when `stop_at_nonnegative`,
  // until the cheapest augmenting path has nonnegative cost.
  MinCostFlowResult run(Capacity limit, bool stop_at_nonnegative) {
    MinCostFlowResult out;
    const std::size_t n = r_.adj.size();
    std::vector<Cost> dist(n);
    std::vector<std::size_t> via(n);
    while (out.value < limit) {
      std::fill(dist.begin(), dist.end(), kInfCost);
      dist[s_] = 0;
      using Item = std::pair<Cost, std::size_t>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      heap.emplace(0, s_);
      while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d != dist[v]) continue;
        for (auto e : r_.adj[v]) {
          const auto& edge = r_.edges[e];
          if (edge.cap <= 0 || potential_[edge.to] == kInfCost) continue;
          Cost nd = d + edge.cost + potential_[v] - potential_[edge.to];
          if (nd < dist[edge.to]) {
            dist[edge.to] = nd;
            via[edge.to] = e;
            heap.emplace(nd, edge.to);
          }
        }
      }
      if (dist[t_] == kInfCost) break;
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] != kInfCost && potential_[v] != kInfCost) potential_[v] += dist[v];
      }
      const Cost path_cost = potential_[t_] - potential_[s_];
      if (stop_at_nonnegative && path_cost >= 0) break;

      Capacity push = limit - out.value;
      for (auto v = t_; v != s_; v = r_.edges[via[v] ^ 1].to) {
        push = std::min(push, r_.edges[via[v]].cap);
      }
      for (auto v = t_; v != s_; v = r_.edges[via[v] ^ 1].to) {
        r_.edges[via[v]].cap -= push;
        r_.edges[via[v] ^ 1].cap += push;
      }
      out.value += push;
      out.cost += push * path_cost;
    }
    out.flow = r_.arc_flows();
    return out;
  }

 private:
  Residual r_;
  std::size_t s_, t_;
  std::vector<Cost> potential_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
  Residual r(net);
  Dinic dinic(r, net.source(), net.sink());
  MaxFlowResult out;
  out.value = dinic.run();
  out.source_side = dinic.reachable();
  out.flow = r.arc_flows();
  return out;
}

MinCostFlowResult min_cost_flow(const FlowNetwork& net, Capacity value) {
  if (value < 0) throw FlowError("negative flow value requested");
  auto out = SuccessiveShortestPaths(net).run(value, false);
  if (out.value < value) {
    throw FlowError("no feasible flow of value " + std::to_string(value) +
                    " (maximum is " + std::to_string(out.value) + ")");
  }
  return out;
}

MinCostFlowResult min_cost_flow_best(const FlowNetwork& net) {
  return SuccessiveShortestPaths(net).run(std::numeric_limits<Capacity>::max(),
                                          true);
}

std::vector<Cost> residual_potentials(const FlowNetwork& net,
                                      const std::vector<Capacity>& flow,
                                      bool free_value) {
  struct Edge {
    std::size_t from, to;
    Cost cost;
  };
  std::vector<Edge> edges;
  Capacity value = 0;
  const auto& arcs = net.arcs();
  if (flow.size() != arcs.size()) throw FlowError("flow size mismatch");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    if (flow[i] < a.capacity) edges.push_back({a.from, a.to, a.cost});
    if (flow[i] > 0) edges.push_back({a.to, a.from, -a.cost});
    if (a.from == net.source()) value += flow[i];
  }
  if (free_value) {
    edges.push_back({net.sink(), net.source(), 0});
    if (value > 0) edges.push_back({net.source(), net.sink(), 0});
  }

  // Bellman-Ford from a virtual root joined to every node at cost 0.
  const std::size_t n = net.node_count();
  std::vector<Cost> dist(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (const auto& e : edges) {
      if (dist[e.from] + e.cost < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.cost;
        changed = true;
      }
    }
    if (!changed) return dist;
  }
  throw FlowError("residual network has a negative cycle");
}

}  // namespace posetlab
