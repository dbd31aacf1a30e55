#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace posetlab {

using Capacity = std::int64_t;
using Cost = std::int64_t;

class FlowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  Capacity capacity = 0;
  Cost cost = 0;
};

/// Directed network with integer capacities and costs. Arcs into the source
/// or out of the sink are rejected.
class FlowNetwork {
 public:
  FlowNetwork(std::size_t nodes, std::size_t source, std::size_t sink);

  std::size_t add_arc(std::size_t from, std::size_t to, Capacity capacity,
                      Cost cost = 0);

  std::size_t node_count() const { return nodes_; }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  std::size_t nodes_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Arc> arcs_;
};

struct MaxFlowResult {
  Capacity value = 0;
  /// Flow on each arc, indexed like FlowNetwork::arcs().
  std::vector<Capacity> flow;
  /// Nodes reachable from the source in the final residual network; the
  /// arcs leaving this set form a minimum cut.
  std::vector<bool> source_side;
};

/// Exact integer maximum flow (Dinic).
MaxFlowResult max_flow(const FlowNetwork& net);

struct MinCostFlowResult {
  Capacity value = 0;
  Cost cost = 0;
  std::vector<Capacity> flow;
};

/// Minimum cost of a flow of exactly `value` units. Negative arc costs are
/// allowed as long as the network has no negative cycle. Throws FlowError if
/// no flow of that value exists.
MinCostFlowResult min_cost_flow(const FlowNetwork& net, Capacity value);

/// Minimum cost over all feasible flow values. The cost of the cheapest
/// augmenting path never decreases, so augmentation stops at the first path
/// of nonnegative cost.
MinCostFlowResult min_cost_flow_best(const FlowNetwork& net);

/// Node potentials with nonnegative reduced cost on every arc of the
/// residual network of `flow`. With `free_value` the residual network also
/// carries an uncapacitated zero-cost sink->source arc (and its reverse when
/// the flow value is positive), so the potentials certify optimality over
/// all flow values. Throws FlowError when the residual network has a
/// negative cycle, i.e. the flow is not optimal.
std::vector<Cost> residual_potentials(const FlowNetwork& net,
                                      const std::vector<Capacity>& flow,
                                      bool free_value);

}  // namespace posetlab
