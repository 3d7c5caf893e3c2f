#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "cslp/instance.hpp"
#include "cslp/rng.hpp"

namespace cslp {

// Synthetic instance generator for desk-scale experiments. Families are nested:
// with a fixed seed, growing od_nodes only appends OD pairs, so each smaller
// instance is a strict subset of the next.
struct GeneratorSpec {
  int n_nodes = 12;
  int n_od_nodes = 4;
  int n_stations = 3;
  int n_zones = 2;
  int periods = 4;
  int first_stage_len = 2;
  double budget_per_period = 10.0;  // MNOK
  int max_chargers = 4;             // K_i
  int n_preplanned = 0;             // stations existing at start
  int preplanned_count = 2;         // chargers at each of those
  int n_ferries = 0;
  double base_flow_min = 2.0, base_flow_max = 10.0;
  double capacity_mw_min = 0.4, capacity_mw_max = 2.4;
  double fixed_cost = 2.0, charger_cost = 1.7;  // MNOK, per paper-style defaults
  double box_km = 500.0;                        // side of the placement square
  double road_speed_kmh = 60.0, ferry_speed_kmh = 20.0;
};

namespace detail {

struct Pt {
  double x, y;
};

inline double dist_km(const Pt& a, const Pt& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace detail

inline Instance synth_instance(const GeneratorSpec& spec, std::uint64_t seed) {
  if (spec.n_nodes < 2) throw usage_error("generator needs at least 2 network nodes");
  if (spec.n_od_nodes < 2) throw usage_error("generator needs at least 2 OD nodes");
  if (spec.n_od_nodes > spec.n_nodes)
    throw usage_error("more OD nodes than network nodes (" + std::to_string(spec.n_od_nodes) + " > " +
                      std::to_string(spec.n_nodes) + ")");
  if (spec.n_stations > spec.n_nodes) throw usage_error("more stations than attachable network nodes");
  if (spec.first_stage_len < 1 || spec.first_stage_len >= spec.periods)
    throw usage_error("first stage must be a nonempty strict prefix of the horizon");
  if (spec.n_preplanned > spec.n_stations) throw usage_error("more pre-planned stations than stations");

  Instance inst;
  const int N = spec.n_nodes;
  const int T = spec.periods;

  // node placement + elevations
  auto rng_nodes = Philox::labeled(seed, "synth/nodes");
  auto rng_elev = Philox::labeled(seed, "synth/elev");
  std::vector<detail::Pt> pos(N);
  std::vector<double> elev(N);
  for (int i = 0; i < N; ++i) {
    pos[i] = {rng_nodes.uniform(0, spec.box_km), rng_nodes.uniform(0, spec.box_km)};
    elev[i] = rng_elev.uniform(0, 600.0);
  }
  for (int i = 0; i < N; ++i) {
    NetworkNode n;
    n.id = "n" + std::to_string(i);
    // degrees for display only; geometry lives in the km coordinates
    n.lat = 58.0 + pos[i].y / 111.0;
    n.lon = 5.0 + pos[i].x / 55.0;
    n.kind = NodeKind::Junction;
    inst.network.nodes.push_back(n);
  }

  // roads: nearest-previous-node tree plus shortcut arcs, all bidirectional
  auto rng_arcs = Philox::labeled(seed, "synth/arcs");
  std::set<std::pair<int, int>> edges;
  auto add_road = [&](int a, int b, ArcCategory cat, double speed) {
    if (a == b || edges.count({std::min(a, b), std::max(a, b)})) return false;
    edges.insert({std::min(a, b), std::max(a, b)});
    double len = std::max(1.0, detail::dist_km(pos[a], pos[b]) * 1.2);
    double rough = rng_arcs.uniform(0, 50.0);
    double de = elev[b] - elev[a];
    NetworkArc fwd{inst.network.nodes[a].id, inst.network.nodes[b].id, cat, len, speed,
                   std::max(0.0, de) + rough, std::max(0.0, -de) + rough};
    NetworkArc bwd{inst.network.nodes[b].id, inst.network.nodes[a].id, cat, len, speed,
                   std::max(0.0, -de) + rough, std::max(0.0, de) + rough};
    if (cat == ArcCategory::Ferry) fwd.climb_m = fwd.descent_m = bwd.climb_m = bwd.descent_m = 0;
    inst.network.arcs.push_back(fwd);
    inst.network.arcs.push_back(bwd);
    return true;
  };
  for (int i = 1; i < N; ++i) {
    int best = 0;
    for (int j = 1; j < i; ++j)
      if (detail::dist_km(pos[i], pos[j]) < detail::dist_km(pos[i], pos[best])) best = j;
    add_road(i, best, ArcCategory::Road, spec.road_speed_kmh);
  }
  int extras = N / 2;
  for (int e = 0; e < extras; ++e) {
    int a = static_cast<int>(rng_arcs.uniform_int(N));
    int best = -1;
    for (int j = 0; j < N; ++j) {
      if (j == a || edges.count({std::min(a, j), std::max(a, j)})) continue;
      if (best < 0 || detail::dist_km(pos[a], pos[j]) < detail::dist_km(pos[a], pos[best])) best = j;
    }
    if (best >= 0) add_road(a, best, ArcCategory::Road, spec.road_speed_kmh);
  }
  for (int f = 0; f < spec.n_ferries; ++f) {
    int a = static_cast<int>(rng_arcs.uniform_int(N));
    int b = static_cast<int>(rng_arcs.uniform_int(N));
    add_road(a, b, ArcCategory::Ferry, spec.ferry_speed_kmh);
  }

  // OD nodes drawn sequentially so a larger request extends the smaller one;
  // each new OD node is paired (both directions) with one earlier OD node.
  auto rng_od = Philox::labeled(seed, "synth/od");
  auto rng_flow = Philox::labeled(seed, "synth/flow");
  std::vector<int> od_nodes;
  std::set<int> od_set;
  while (static_cast<int>(od_nodes.size()) < spec.n_od_nodes) {
    int cand = static_cast<int>(rng_od.uniform_int(N));
    if (od_set.insert(cand).second) od_nodes.push_back(cand);
  }
  for (int n : od_nodes) inst.network.nodes[n].kind = NodeKind::OdNode;
  int pair_no = 0;
  for (int k = 1; k < spec.n_od_nodes; ++k) {
    int j = (k == 1) ? 0 : static_cast<int>(rng_od.uniform_int(k));
    double f1 = rng_flow.uniform(spec.base_flow_min, spec.base_flow_max);
    double f2 = rng_flow.uniform(spec.base_flow_min, spec.base_flow_max);
    inst.od_pairs.push_back({"q" + std::to_string(pair_no++), inst.network.nodes[od_nodes[k]].id,
                             inst.network.nodes[od_nodes[j]].id, f1});
    inst.od_pairs.push_back({"q" + std::to_string(pair_no++), inst.network.nodes[od_nodes[j]].id,
                             inst.network.nodes[od_nodes[k]].id, f2});
  }

  // stations: fresh station-nodes attached by short access links
  auto rng_st = Philox::labeled(seed, "synth/stations");
  std::set<int> attached;
  for (int s = 0; s < spec.n_stations; ++s) {
    int at;
    do {
      at = static_cast<int>(rng_st.uniform_int(N));
    } while (attached.count(at));
    attached.insert(at);
    NetworkNode sn;
    sn.id = "s" + std::to_string(s);
    sn.lat = inst.network.nodes[at].lat + 0.01;
    sn.lon = inst.network.nodes[at].lon + 0.01;
    sn.kind = NodeKind::StationNode;
    inst.network.nodes.push_back(sn);
    double access = rng_st.uniform(1.0, 3.0);
    inst.network.arcs.push_back({inst.network.nodes[at].id, sn.id, ArcCategory::Road, access, 50.0, 0, 0});
    inst.network.arcs.push_back({sn.id, inst.network.nodes[at].id, ArcCategory::Road, access, 50.0, 0, 0});

    CandidateStation st;
    st.id = "cs" + std::to_string(s);
    st.node = sn.id;
    st.max_chargers = spec.max_chargers;
    st.fixed_cost.assign(T, spec.fixed_cost);
    st.charger_cost.assign(T, spec.charger_cost);
    st.preplanned.assign(T, 0);
    if (s < spec.n_preplanned) {
      st.exists_at_start = true;
      st.preplanned[0] = std::min(spec.preplanned_count, spec.max_chargers);
      st.fixed_cost.assign(T, 0.0);  // already prepared
    }
    inst.stations.push_back(st);
  }

  inst.build_indexes();

  // power zones: stations join the nearest of n_zones random centers
  auto rng_zones = Philox::labeled(seed, "synth/zones");
  int Z = std::max(1, spec.n_zones);
  std::vector<detail::Pt> centers(Z);
  for (int z = 0; z < Z; ++z)
    centers[z] = {rng_zones.uniform(0, spec.box_km), rng_zones.uniform(0, spec.box_km)};
  for (int z = 0; z < Z; ++z) {
    PowerZone pz;
    pz.id = "r" + std::to_string(z);
    pz.initial_capacity_mw = rng_zones.uniform(spec.capacity_mw_min, spec.capacity_mw_max);
    pz.charger_power_kw = 400.0;
    inst.power_zones.push_back(pz);
  }
  for (int s = 0; s < spec.n_stations; ++s) {
    const auto& nd = inst.network.nodes[inst.node_index(inst.stations[s].node)];
    detail::Pt p{(nd.lon - 5.0) * 55.0, (nd.lat - 58.0) * 111.0};
    int best = 0;
    for (int z = 1; z < Z; ++z)
      if (detail::dist_km(p, centers[z]) < detail::dist_km(p, centers[best])) best = z;
    inst.stations[s].zone = inst.power_zones[best].id;
    inst.power_zones[best].stations.push_back(inst.stations[s].id);
  }

  inst.horizon.num_periods = T;
  inst.horizon.first_stage_len = spec.first_stage_len;
  inst.horizon.budgets.assign(T, spec.budget_per_period);
  inst.horizon.carryover = 1.0;
  for (int t = 0; t < T; ++t) inst.horizon.labels.push_back(std::to_string(2025 + t));

  // vehicle classes: two ranges x depot access; 300 km share declines 90% -> 50%
  auto mk_vehicle = [](std::string id, double range, bool depot) {
    VehicleType v;
    v.id = std::move(id);
    v.range_km = range;
    v.depot_charging = depot;
    v.consumption_kwh_km = 1.5;
    v.weight_t = 30.0;
    v.battery_kwh = range * 1.5;
    v.departure_deduction_km = 30.0;
    v.arrival_reserve_km = 30.0;
    v.initial_soc = depot ? 1.0 : 0.5;
    return v;
  };
  inst.vehicle_types = {mk_vehicle("v300d", 300, true), mk_vehicle("v300n", 300, false),
                        mk_vehicle("v500d", 500, true), mk_vehicle("v500n", 500, false)};
  for (int t = 0; t < T; ++t) {
    double s300 = (T == 1) ? 0.9 : 0.9 + (0.5 - 0.9) * static_cast<double>(t) / (T - 1);
    inst.fleet_mix.push_back({s300 / 2, s300 / 2, (1 - s300) / 2, (1 - s300) / 2});
  }

  validate_instance(inst);
  return inst;
}

}  // namespace cslp
