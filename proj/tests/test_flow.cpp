#include <doctest.h>

#include <limits>
#include <map>
#include <random>

#include "posetlab/flow.hpp"

using namespace posetlab;

namespace {

// Minimum s-t cut by enumerating every node subset containing s but not t.
Capacity min_cut_by_enumeration(const FlowNetwork& net) {
  const std::size_t n = net.node_count();
  Capacity best = std::numeric_limits<Capacity>::max();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!((mask >> net.source()) & 1u) || ((mask >> net.sink()) & 1u)) continue;
    Capacity cut = 0;
    for (const auto& a : net.arcs()) {
      if (((mask >> a.from) & 1u) && !((mask >> a.to) & 1u)) cut += a.capacity;
    }
    best = std::min(best, cut);
  }
  return best;
}

// Cheapest 0/1 flow of each value on a unit-capacity network, by trying
// every arc subset.
std::map<Capacity, Cost> unit_flow_costs(const FlowNetwork& net) {
  std::map<Capacity, Cost> best;
  const auto& arcs = net.arcs();
  for (std::uint32_t mask = 0; mask < (1u << arcs.size()); ++mask) {
    std::vector<Capacity> balance(net.node_count(), 0);
    Cost cost = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (!((mask >> i) & 1u)) continue;
      balance[arcs[i].from] -= 1;
      balance[arcs[i].to] += 1;
      cost += arcs[i].cost;
    }
    bool ok = true;
    for (std::size_t v = 0; v < net.node_count(); ++v) {
      if (v != net.source() && v != net.sink() && balance[v] != 0) ok = false;
    }
    if (!ok) continue;
    const Capacity value = balance[net.sink()];
    auto it = best.find(value);
    if (it == best.end() || cost < it->second) best[value] = cost;
  }
  return best;
}

}  // namespace

TEST_CASE("max flow examples") {
  FlowNetwork single(2, 0, 1);
  single.add_arc(0, 1, 1);
  CHECK(max_flow(single).value == 1);

  FlowNetwork apart(4, 0, 3);
  apart.add_arc(0, 1, 5);
  apart.add_arc(2, 3, 5);
  auto r = max_flow(apart);
  CHECK(r.value == 0);
  CHECK(r.source_side[1]);
  CHECK_FALSE(r.source_side[2]);

  FlowNetwork diamond(4, 0, 3);
  diamond.add_arc(0, 1, 3);
  diamond.add_arc(0, 2, 2);
  diamond.add_arc(1, 3, 2);
  diamond.add_arc(2, 3, 3);
  diamond.add_arc(1, 2, 1);
  CHECK(min_cut_by_enumeration(diamond) == 5);
  CHECK(max_flow(diamond).value == 5);
}

TEST_CASE("network validation") {
  CHECK_THROWS_AS(FlowNetwork(2, 0, 0), FlowError);
  CHECK_THROWS_AS(FlowNetwork(2, 0, 2), FlowError);
  FlowNetwork net(3, 0, 2);
  CHECK_THROWS_AS(net.add_arc(1, 0, 1), FlowError);
  CHECK_THROWS_AS(net.add_arc(2, 1, 1), FlowError);
  CHECK_THROWS_AS(net.add_arc(0, 1, -1), FlowError);
  CHECK_THROWS_AS(net.add_arc(0, 5, 1), FlowError);
}

TEST_CASE("max flow equals min cut on random networks") {
  std::mt19937_64 rng(707);
  std::uniform_int_distribution<std::size_t> nodes(2, 8);
  std::uniform_int_distribution<Capacity> cap(0, 9);
  std::bernoulli_distribution present(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = nodes(rng);
    FlowNetwork net(n, 0, n - 1);
    for (std::size_t u = 0; u + 1 < n; ++u) {
      for (std::size_t v = 1; v < n; ++v) {
        if (u != v && present(rng)) net.add_arc(u, v, cap(rng));
      }
    }
    auto r = max_flow(net);
    CHECK(r.value == min_cut_by_enumeration(net));
    Capacity cut = 0;
    for (const auto& a : net.arcs()) {
      if (r.source_side[a.from] && !r.source_side[a.to]) cut += a.capacity;
    }
    CHECK(cut == r.value);
  }
}

TEST_CASE("min cost flow") {
  // Two parallel routes of cost 1 and 3, capacity 1 each.
  FlowNetwork net(4, 0, 3);
  net.add_arc(0, 1, 1, 1);
  net.add_arc(1, 3, 1, 0);
  net.add_arc(0, 2, 1, 3);
  net.add_arc(2, 3, 1, 0);
  CHECK(min_cost_flow(net, 0).cost == 0);
  CHECK(min_cost_flow(net, 1).cost == 1);
  CHECK(min_cost_flow(net, 2).cost == 4);
  CHECK_THROWS_AS(min_cost_flow(net, 3), FlowError);
  CHECK(min_cost_flow_best(net).cost == 0);

  FlowNetwork negative(4, 0, 3);
  negative.add_arc(0, 1, 1, 2);
  negative.add_arc(1, 3, 1, -5);
  negative.add_arc(0, 2, 1, 1);
  negative.add_arc(2, 3, 1, 0);
  auto best = min_cost_flow_best(negative);
  CHECK(best.cost == -3);
  CHECK(best.value == 1);
}

TEST_CASE("min cost flow matches enumeration on small unit networks") {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<Cost> cost(-4, 4);
  std::bernoulli_distribution present(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    // Acyclic: arcs only go from lower to higher node index.
    const std::size_t n = 5;
    FlowNetwork net(n, 0, n - 1);
    for (std::size_t u = 0; u + 1 < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (present(rng) && net.arcs().size() < 12) net.add_arc(u, v, 1, cost(rng));
      }
    }
    const auto expected = unit_flow_costs(net);
    Cost overall = 0;
    for (const auto& [value, c] : expected) {
      CHECK(min_cost_flow(net, value).cost == c);
      overall = std::min(overall, c);
    }
    auto best = min_cost_flow_best(net);
    CHECK(best.cost == overall);

    auto pot = residual_potentials(net, best.flow, true);
    for (std::size_t i = 0; i < net.arcs().size(); ++i) {
      const auto& a = net.arcs()[i];
      const Cost reduced = a.cost + pot[a.from] - pot[a.to];
      if (best.flow[i] < a.capacity) CHECK(reduced >= 0);
      if (best.flow[i] > 0) CHECK(reduced <= 0);
    }
  }
}
