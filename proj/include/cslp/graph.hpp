#pragma once

#include <queue>
#include <vector>

#include "cslp/energy.hpp"
#include "cslp/instance.hpp"

namespace cslp {

// Indexed adjacency view over the road network. Arc order follows the
// instance file, which keeps every downstream traversal deterministic.
struct Graph {
  int n = 0;
  std::vector<NetworkArc> arcs;          // copy, indexed
  std::vector<int> tail, head;           // arc endpoints as node indexes
  std::vector<std::vector<int>> out;     // arc ids by tail
  std::vector<std::vector<int>> in;      // arc ids by head

  double travel_time(int a) const { return arcs[a].length_km / arcs[a].speed_kmh; }
};

inline Graph build_graph(const Instance& inst) {
  Graph g;
  g.n = static_cast<int>(inst.network.nodes.size());
  g.out.resize(g.n);
  g.in.resize(g.n);
  for (const auto& a : inst.network.arcs) {
    int t = inst.node_index(a.tail), h = inst.node_index(a.head);
    int id = static_cast<int>(g.arcs.size());
    g.arcs.push_back(a);
    g.tail.push_back(t);
    g.head.push_back(h);
    g.out[t].push_back(id);
    g.in[h].push_back(id);
  }
  return g;
}

// Dijkstra with an arbitrary nonnegative arc weight. reverse=true searches the
// transposed graph (distances *to* `source`). Unreachable nodes get +inf.
template <typename WeightFn>
std::vector<double> dijkstra(const Graph& g, int source, WeightFn w, bool reverse = false) {
  std::vector<double> dist(g.n, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[source] = 0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    const auto& adj = reverse ? g.in[u] : g.out[u];
    for (int a : adj) {
      int v = reverse ? g.tail[a] : g.head[a];
      double nd = d + w(a);
      if (nd < dist[v] - 1e-15) {
        dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  return dist;
}

inline std::vector<double> shortest_distance_from(const Graph& g, int source, bool reverse = false) {
  return dijkstra(g, source, [&](int a) { return g.arcs[a].length_km; }, reverse);
}

inline std::vector<double> shortest_time_from(const Graph& g, int source, bool reverse = false) {
  return dijkstra(g, source, [&](int a) { return g.travel_time(a); }, reverse);
}

template <typename P>
std::vector<double> shortest_energy_from(const Graph& g, int source, const P& params, bool reverse = false) {
  return dijkstra(g, source, [&](int a) { return arc_energy(g.arcs[a], params); }, reverse);
}

}  // namespace cslp
