#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <fstream>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "cslp/energy.hpp"
#include "cslp/graph.hpp"
#include "cslp/instance.hpp"

namespace cslp {

namespace pg {
constexpr double kEps = 1e-9;

// bitset over candidate stations (visit exclusivity)
struct StationMask {
  std::array<std::uint64_t, 4> w{};
  void set(int i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return w[i >> 6] & (std::uint64_t{1} << (i & 63)); }
  bool subset_of(const StationMask& o) const {
    for (int k = 0; k < 4; ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  bool operator==(const StationMask& o) const { return w == o.w; }
};
}  // namespace pg

enum class BreakChoice : std::uint8_t { None = 0, Split = 1, Full = 2 };

struct StationVisit {
  int station = -1;         // candidate-station index
  double charge_kwh = 0;    // drawn so far; final value once closed
  double rating_kw = 400;   // charger rating at this stop
  BreakChoice brk = BreakChoice::None;
};

// One partial route for a fixed (OD pair, vehicle type).
struct PathLabel {
  int node = -1;
  double eff_time = 0;          // driving + ferry + breaks + charging
  double driving_time = 0;
  double time_since_break = 0;
  bool split_credit = false;    // 15-min part already taken
  double battery = 0;           // kWh in pack right now
  double headroom = 0;          // undrawn kWh at the open charge stop
  double overlap_credit_h = 0;  // dwell at the open stop still absorbing charge time
  double pending_rate_kw = 0;   // rating of the open stop
  int stops = 0;
  double distance_km = 0;
  double energy_kwh = 0;        // cumulative consumption
  std::vector<StationVisit> visits;
  std::vector<int> route_arcs;
  pg::StationMask visited;

  bool has_open_stop() const { return !visits.empty() && headroom > 0; }
};

struct Path {
  int od = -1, vehicle = -1;
  std::vector<int> stations;        // visit order, zero-charge visits dropped
  std::vector<double> utilization;  // U_qvhi = charging hours per vehicle
  std::vector<BreakChoice> visit_breaks;
  double distance_km = 0;
  double effective_time_h = 0;
  double energy_kwh = 0;
  double detour_frac = 0;
  std::vector<int> route_arcs;
  int stop_count() const { return static_cast<int>(stations.size()); }
};

// Per-(q,v) generation result. `min_eff_h` is the fastest feasible time before
// the 20% filter; `shortest_km` the pure shortest distance.
struct QvPaths {
  std::vector<Path> paths;
  double shortest_km = kInf;
  double min_eff_h = kInf;
  int fastest_stops = 0;
};

struct PathSet {
  int num_od = 0, num_veh = 0;
  std::vector<QvPaths> by_qv;  // index q * num_veh + v

  const QvPaths& at(int q, int v) const { return by_qv[q * num_veh + v]; }
  QvPaths& at(int q, int v) { return by_qv[q * num_veh + v]; }
};

// ---------------------------------------------------------------------------
// label mechanics

// Advance `lab` over one arc: travel time, mandated breaks at the continuous-
// driving cap (possibly mid-arc), energy draw against pack plus deferred
// headroom. Returns false when the move is infeasible (battery or daily cap).
inline bool advance_over_arc(PathLabel& lab, const NetworkArc& arc, const VehicleType& v,
                             const EnergyParams& p, const Regulations& reg) {
  const double tt = arc.length_km / arc.speed_kmh;
  if (arc.category == ArcCategory::Ferry) {
    lab.eff_time += tt;
    if (reg.ferry_resets_break && tt >= reg.break_duration_h - pg::kEps) {
      lab.time_since_break = 0;
      lab.split_credit = false;
    }
  } else {
    double remaining = tt;
    while (lab.time_since_break + remaining > reg.continuous_driving_cap_h + pg::kEps) {
      const double drive = reg.continuous_driving_cap_h - lab.time_since_break;
      lab.eff_time += drive;
      lab.driving_time += drive;
      remaining -= drive;
      const double owed = lab.split_credit ? reg.split_second_h : reg.break_duration_h;
      lab.eff_time += owed;
      lab.time_since_break = 0;
      lab.split_credit = false;
    }
    lab.eff_time += remaining;
    lab.driving_time += remaining;
    lab.time_since_break += remaining;
    if (lab.driving_time > reg.daily_driving_cap_h + pg::kEps) return false;
  }

  const double e = arc_energy(arc, p);
  lab.energy_kwh += e;
  if (lab.battery >= e - pg::kEps) {
    lab.battery = std::max(0.0, lab.battery - e);
  } else {
    const double need = e - lab.battery;
    if (lab.headroom < need - pg::kEps) return false;
    lab.battery = 0;
    lab.headroom = std::max(0.0, lab.headroom - need);
    lab.visits.back().charge_kwh += need;
    const double dt = need / lab.pending_rate_kw;
    const double extra = std::max(0.0, dt - lab.overlap_credit_h);
    lab.overlap_credit_h = std::max(0.0, lab.overlap_credit_h - dt);
    lab.eff_time += extra;
  }
  lab.distance_km += arc.length_km;
  (void)v;
  return true;
}

// Spec-facing single-label extension (no station decision at the head).
inline std::optional<PathLabel> extend_label(const PathLabel& label, const NetworkArc& arc,
                                             const VehicleType& v, const EnergyParams& p,
                                             const Regulations& reg) {
  PathLabel out = label;
  if (!advance_over_arc(out, arc, v, p, reg)) return std::nullopt;
  return out;
}

// Open a charge stop at the label's current node. Break-and-charge dwell
// overlap: dwell = max(charge time, chosen break), realized via overlap credit.
inline std::optional<PathLabel> open_charge_stop(const PathLabel& label, int station, double rating_kw,
                                                 double usable_kwh, BreakChoice brk,
                                                 const Regulations& reg) {
  if (label.visited.test(station)) return std::nullopt;
  if (label.stops + 1 > reg.max_charging_stops) return std::nullopt;
  if (brk == BreakChoice::Split && (!reg.split_break || label.split_credit)) return std::nullopt;
  PathLabel out = label;
  out.visited.set(station);
  out.stops += 1;
  double dwell = 0;
  if (brk == BreakChoice::Split) {
    dwell = reg.split_first_h;
    out.split_credit = true;
  } else if (brk == BreakChoice::Full) {
    dwell = out.split_credit ? reg.split_second_h : reg.break_duration_h;
    out.time_since_break = 0;
    out.split_credit = false;
  }
  out.eff_time += dwell;
  out.visits.push_back({station, 0.0, rating_kw, brk});
  if (reg.charge_to_full) {
    const double c = std::max(0.0, usable_kwh - out.battery);
    out.visits.back().charge_kwh = c;
    const double dt = c / rating_kw;
    out.eff_time += std::max(0.0, dt - dwell);
    out.overlap_credit_h = std::max(0.0, dwell - dt);
    out.battery = usable_kwh;
    out.headroom = 0;
    out.pending_rate_kw = rating_kw;
  } else {
    out.headroom = std::max(0.0, usable_kwh - out.battery);
    out.overlap_credit_h = dwell;
    out.pending_rate_kw = rating_kw;
  }
  return out;
}

// Reserve top-up at the destination; closes the open stop.
inline bool finalize_at_destination(PathLabel& lab, double reserve_kwh) {
  if (lab.battery < reserve_kwh - pg::kEps) {
    const double need = reserve_kwh - lab.battery;
    if (lab.headroom < need - pg::kEps) return false;
    lab.headroom = std::max(0.0, lab.headroom - need);
    lab.battery = reserve_kwh;
    lab.visits.back().charge_kwh += need;
    const double dt = need / lab.pending_rate_kw;
    lab.eff_time += std::max(0.0, dt - lab.overlap_credit_h);
    lab.overlap_credit_h = std::max(0.0, lab.overlap_credit_h - dt);
  }
  lab.headroom = 0;
  return true;
}

// Spec dominance: the externally documented five-criteria rule. Equal labels
// do not dominate each other.
inline bool dominates(const PathLabel& a, const PathLabel& b) {
  if (a.eff_time > b.eff_time + pg::kEps) return false;
  if (a.driving_time > b.driving_time + pg::kEps) return false;
  if (a.time_since_break > b.time_since_break + pg::kEps) return false;
  if (a.battery < b.battery - pg::kEps) return false;
  if (a.stops > b.stops) return false;
  return a.eff_time < b.eff_time - pg::kEps || a.driving_time < b.driving_time - pg::kEps ||
         a.time_since_break < b.time_since_break - pg::kEps || a.battery > b.battery + pg::kEps ||
         a.stops < b.stops;
}

namespace pg {

inline bool same_sequence(const PathLabel& a, const PathLabel& b) {
  if (a.visits.size() != b.visits.size()) return false;
  for (std::size_t i = 0; i < a.visits.size(); ++i)
    if (a.visits[i].station != b.visits[i].station) return false;
  return true;
}

// Internal pruning rule. Strengthens `dominates` with every payoff-relevant
// resource (deferred headroom, overlap credit, split credit, distance and the
// visited set) so pruning can never drop a station sequence the exhaustive
// enumeration would keep.
inline bool prune_dominates(const PathLabel& a, const PathLabel& b) {
  if (!a.visited.subset_of(b.visited)) return false;
  if (a.eff_time > b.eff_time + kEps) return false;
  if (a.driving_time > b.driving_time + kEps) return false;
  if (a.time_since_break > b.time_since_break + kEps) return false;
  if (a.battery < b.battery - kEps) return false;
  if (a.battery + a.headroom < b.battery + b.headroom - kEps) return false;
  if (a.overlap_credit_h < b.overlap_credit_h - kEps) return false;
  if (a.split_credit < b.split_credit) return false;
  if (a.stops > b.stops) return false;
  if (a.distance_km > b.distance_km + kEps) return false;
  if (a.has_open_stop() && b.has_open_stop() && a.pending_rate_kw < b.pending_rate_kw - kEps) return false;
  // only safe when the pruned label could not reach a distinct surviving path
  const bool proper_subset = !(a.visited == b.visited);
  const bool strictly_faster = a.eff_time < b.eff_time - kEps;
  return proper_subset || strictly_faster || same_sequence(a, b);
}

}  // namespace pg

// Feasibility screen: regulation caps plus shortest-path lower bounds on the
// remaining trip.
struct NodeBounds {
  std::vector<double> time_to_dest;    // h, breaks/charging excluded
  std::vector<double> energy_to_dest;  // kWh, minimum consumption
  std::vector<double> dist_from_origin, dist_to_dest;
};

inline bool is_feasible(const PathLabel& lab, const VehicleType& v, const Regulations& reg,
                        const NodeBounds& bounds, double shortest_km, double reserve_kwh) {
  if (lab.driving_time > reg.daily_driving_cap_h + pg::kEps) return false;
  if (lab.stops > reg.max_charging_stops) return false;
  const double lb_t = bounds.time_to_dest[lab.node];
  if (lab.eff_time + lb_t > reg.max_trip_time_h + pg::kEps) return false;
  if (lab.distance_km + bounds.dist_to_dest[lab.node] >
      (1.0 + reg.detour_distance_factor) * shortest_km + pg::kEps)
    return false;
  if (lab.stops == reg.max_charging_stops) {
    // no further charging possible: pack + open headroom must cover the rest
    if (lab.battery + lab.headroom + pg::kEps < bounds.energy_to_dest[lab.node] + reserve_kwh) return false;
  }
  (void)v;
  return true;
}

// ---------------------------------------------------------------------------
// generation

namespace pg {

struct DestRules {
  double min_eff = kInf;
  int fastest_stops = 0;
};

// Path-level dominance used on the collected destination pool: a subsumes b
// when its station set is contained, it is no slower and has no more stops,
// with a proper subset or strictly better time/stops making it strict.
inline bool path_dominates(const Path& a, const Path& b) {
  if (a.stations.size() > b.stations.size()) return false;
  for (int s : a.stations) {
    bool found = false;
    for (int t : b.stations)
      if (s == t) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  if (a.effective_time_h > b.effective_time_h + kEps) return false;
  const bool proper = a.stations.size() < b.stations.size();
  return proper || a.effective_time_h < b.effective_time_h - kEps;
}

}  // namespace pg

inline QvPaths generate_paths_on(const Instance& inst, const Graph& g, int q_idx, int v_idx) {
  const OdPair& q = inst.od_pairs[q_idx];
  const VehicleType& v = inst.vehicle_types[v_idx];
  const Regulations& reg = inst.regulations;
  QvPaths result;

  const int o = inst.node_index(q.origin), d = inst.node_index(q.destination);
  EnergyParams params = EnergyParams::for_vehicle(v, reg);

  NodeBounds bounds;
  bounds.dist_from_origin = shortest_distance_from(g, o);
  bounds.dist_to_dest = shortest_distance_from(g, d, true);
  bounds.time_to_dest = shortest_time_from(g, d, true);
  bounds.energy_to_dest = shortest_energy_from(g, d, params, true);
  const double shortest = bounds.dist_from_origin[d];
  if (!std::isfinite(shortest)) return result;
  result.shortest_km = shortest;

  const double dist_cap = (1.0 + reg.detour_distance_factor) * shortest + pg::kEps;
  std::vector<char> allowed(g.n, 0);
  for (int n = 0; n < g.n; ++n)
    allowed[n] = (bounds.dist_from_origin[n] + bounds.dist_to_dest[n] <= dist_cap) ? 1 : 0;

  const double usable = v.battery_kwh;
  const double init_battery = v.initial_soc * usable - v.departure_deduction_km * v.consumption_kwh_km;
  const double reserve = v.arrival_reserve_km * v.consumption_kwh_km;
  if (init_battery < -pg::kEps) return result;

  auto station_rating = [&](int s) {
    int z = inst.zone_of_station(s);
    return z >= 0 ? inst.power_zones[z].charger_power_kw : 400.0;
  };

  // arena with lazy deletion
  std::deque<PathLabel> arena;
  std::vector<char> alive;
  std::vector<std::vector<int>> bucket(g.n);
  std::vector<PathLabel> dest_pool;
  using QItem = std::pair<double, int>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;

  auto try_insert = [&](PathLabel&& lab) {
    if (!is_feasible(lab, v, reg, bounds, shortest, reserve)) return;
    auto& B = bucket[lab.node];
    for (int id : B)
      if (alive[id] && pg::prune_dominates(arena[id], lab)) return;
    for (int id : B)
      if (alive[id] && pg::prune_dominates(lab, arena[id])) alive[id] = 0;
    std::erase_if(B, [&](int id) { return !alive[id]; });
    if (lab.node == d) {
      PathLabel fin = lab;  // collected copy; the original keeps extending
      if (finalize_at_destination(fin, reserve) && fin.eff_time <= reg.max_trip_time_h + pg::kEps)
        dest_pool.push_back(std::move(fin));
    }
    int id = static_cast<int>(arena.size());
    arena.push_back(std::move(lab));
    alive.push_back(1);
    B.push_back(id);
    queue.push({arena[id].eff_time, id});
  };

  // seed at the origin (origin may itself host a station)
  {
    PathLabel root;
    root.node = o;
    root.battery = std::max(0.0, init_battery);
    std::vector<PathLabel> seeds{root};
    int s0 = inst.station_at_node(o);
    if (s0 >= 0)
      for (BreakChoice b : {BreakChoice::None, BreakChoice::Split, BreakChoice::Full})
        if (auto c = open_charge_stop(root, s0, station_rating(s0), usable, b, reg)) seeds.push_back(*c);
    for (auto& s : seeds) try_insert(std::move(s));
  }

  while (!queue.empty()) {
    auto [eff, id] = queue.top();
    queue.pop();
    if (!alive[id] || eff > arena[id].eff_time + pg::kEps) continue;
    const PathLabel cur = arena[id];  // copy: arena may reallocate
    for (int a : g.out[cur.node]) {
      const int head = g.head[a];
      if (!allowed[head]) continue;
      PathLabel nxt = cur;
      if (!advance_over_arc(nxt, g.arcs[a], v, params, reg)) continue;
      nxt.node = head;
      nxt.route_arcs.push_back(a);
      const int st = inst.station_at_node(head);
      if (st >= 0 && !nxt.visited.test(st)) {
        for (BreakChoice b : {BreakChoice::None, BreakChoice::Split, BreakChoice::Full})
          if (auto c = open_charge_stop(nxt, st, station_rating(st), usable, b, reg)) try_insert(std::move(*c));
      }
      try_insert(std::move(nxt));
    }
  }

  // destination pool -> paths
  std::vector<Path> pool;
  for (const auto& lab : dest_pool) {
    Path p;
    p.od = q_idx;
    p.vehicle = v_idx;
    for (const auto& vis : lab.visits) {
      if (vis.charge_kwh <= pg::kEps) continue;  // zero-charge visit dropped
      p.stations.push_back(vis.station);
      p.utilization.push_back(vis.charge_kwh / vis.rating_kw);
      p.visit_breaks.push_back(vis.brk);
    }
    p.distance_km = lab.distance_km;
    p.effective_time_h = lab.eff_time;
    p.energy_kwh = lab.energy_kwh;
    p.detour_frac = (lab.distance_km - shortest) / shortest;
    p.route_arcs = lab.route_arcs;
    pool.push_back(std::move(p));
  }

  // canonical per-sequence representative: fastest, then shortest, then first
  std::vector<Path> canon;
  for (auto& p : pool) {
    bool replaced = false, drop = false;
    for (auto& c : canon) {
      if (c.stations == p.stations) {
        if (p.effective_time_h < c.effective_time_h - pg::kEps ||
            (p.effective_time_h < c.effective_time_h + pg::kEps &&
             p.distance_km < c.distance_km - pg::kEps))
          c = p;
        replaced = true;
        drop = true;
        break;
      }
    }
    (void)replaced;
    if (!drop) canon.push_back(std::move(p));
  }

  if (canon.empty()) return result;

  double min_eff = kInf;
  for (const auto& p : canon) min_eff = std::min(min_eff, p.effective_time_h);
  int fastest_stops = INT32_MAX;
  for (const auto& p : canon)
    if (p.effective_time_h <= min_eff + pg::kEps) fastest_stops = std::min(fastest_stops, p.stop_count());
  result.min_eff_h = min_eff;
  result.fastest_stops = fastest_stops;

  // non-dominated among all feasible, then the time/stop/detour filters
  std::vector<Path> kept;
  for (const auto& p : canon) {
    bool dom = false;
    for (const auto& o2 : canon)
      if (&o2 != &p && pg::path_dominates(o2, p)) {
        dom = true;
        break;
      }
    if (dom) continue;
    if (p.effective_time_h > (1.0 + reg.detour_time_factor) * min_eff + pg::kEps) continue;
    if (p.stop_count() > fastest_stops + reg.max_extra_stops) continue;
    if (p.distance_km > (1.0 + reg.detour_distance_factor) * shortest + pg::kEps) continue;
    kept.push_back(p);
  }

  std::sort(kept.begin(), kept.end(), [](const Path& a, const Path& b) {
    if (a.effective_time_h != b.effective_time_h) return a.effective_time_h < b.effective_time_h;
    if (a.distance_km != b.distance_km) return a.distance_km < b.distance_km;
    return a.stations < b.stations;
  });
  result.paths = std::move(kept);
  return result;
}

inline QvPaths generate_paths(const Instance& inst, int q_idx, int v_idx) {
  Graph g = build_graph(inst);
  return generate_paths_on(inst, g, q_idx, v_idx);
}

inline PathSet generate_all_paths(const Instance& inst) {
  Graph g = build_graph(inst);
  PathSet ps;
  ps.num_od = static_cast<int>(inst.od_pairs.size());
  ps.num_veh = static_cast<int>(inst.vehicle_types.size());
  ps.by_qv.resize(static_cast<std::size_t>(ps.num_od) * ps.num_veh);
  for (int q = 0; q < ps.num_od; ++q)
    for (int v = 0; v < ps.num_veh; ++v) ps.at(q, v) = generate_paths_on(inst, g, q, v);
  return ps;
}

// U_qvhi for a single visit: charger-hours consumed per vehicle in the 1 h
// flow unit.
inline double utilization_factor(const StationVisit& visit) {
  return visit.charge_kwh / visit.rating_kw;
}

// ---------------------------------------------------------------------------
// path-set file io

inline json path_set_to_json(const Instance& inst, const PathSet& ps) {
  json j;
  j["od_count"] = ps.num_od;
  j["vehicle_count"] = ps.num_veh;
  json groups = json::array();
  for (int q = 0; q < ps.num_od; ++q)
    for (int v = 0; v < ps.num_veh; ++v) {
      const auto& qp = ps.at(q, v);
      json grp;
      grp["od"] = inst.od_pairs[q].id;
      grp["vehicle"] = inst.vehicle_types[v].id;
      grp["shortest_km"] = std::isfinite(qp.shortest_km) ? qp.shortest_km : -1.0;
      grp["min_eff_h"] = std::isfinite(qp.min_eff_h) ? qp.min_eff_h : -1.0;
      grp["fastest_stops"] = qp.fastest_stops;
      json paths = json::array();
      for (const auto& p : qp.paths) {
        json pj;
        json st = json::array();
        for (int s : p.stations) st.push_back(inst.stations[s].id);
        pj["stations"] = st;
        pj["u"] = p.utilization;
        json brks = json::array();
        for (auto b : p.visit_breaks) brks.push_back(static_cast<int>(b));
        pj["visit_breaks"] = brks;
        pj["distance_km"] = p.distance_km;
        pj["effective_time_h"] = p.effective_time_h;
        pj["energy_kwh"] = p.energy_kwh;
        pj["detour_frac"] = p.detour_frac;
        pj["route_arcs"] = p.route_arcs;
        paths.push_back(std::move(pj));
      }
      grp["paths"] = std::move(paths);
      groups.push_back(std::move(grp));
    }
  j["groups"] = std::move(groups);
  return j;
}

inline PathSet path_set_from_json(const Instance& inst, const json& j) {
  PathSet ps;
  ps.num_od = detail::get_field<int>(j, "od_count", "path set");
  ps.num_veh = detail::get_field<int>(j, "vehicle_count", "path set");
  if (ps.num_od != static_cast<int>(inst.od_pairs.size()) ||
      ps.num_veh != static_cast<int>(inst.vehicle_types.size()))
    throw dimension_error("path set does not match instance od/vehicle counts");
  ps.by_qv.resize(static_cast<std::size_t>(ps.num_od) * ps.num_veh);
  std::map<std::string, int> od_idx, veh_idx;
  for (int q = 0; q < ps.num_od; ++q) od_idx[inst.od_pairs[q].id] = q;
  for (int v = 0; v < ps.num_veh; ++v) veh_idx[inst.vehicle_types[v].id] = v;
  for (const auto& grp : detail::get_field<json>(j, "groups", "path set")) {
    auto oid = detail::get_field<std::string>(grp, "od", "path group");
    auto vid = detail::get_field<std::string>(grp, "vehicle", "path group");
    if (!od_idx.count(oid)) throw dimension_error("path set references unknown od pair " + oid);
    if (!veh_idx.count(vid)) throw dimension_error("path set references unknown vehicle " + vid);
    int q = od_idx[oid], v = veh_idx[vid];
    auto& qp = ps.at(q, v);
    double sk = detail::get_field<double>(grp, "shortest_km", "path group");
    double me = detail::get_field<double>(grp, "min_eff_h", "path group");
    qp.shortest_km = sk < 0 ? kInf : sk;
    qp.min_eff_h = me < 0 ? kInf : me;
    qp.fastest_stops = detail::get_or(grp, "fastest_stops", 0);
    for (const auto& pj : detail::get_field<json>(grp, "paths", "path group")) {
      Path p;
      p.od = q;
      p.vehicle = v;
      for (const auto& sid : detail::get_field<json>(pj, "stations", "path")) {
        int s = inst.station_index(sid.get<std::string>());
        if (s < 0) throw dimension_error("path references unknown station " + sid.get<std::string>());
        p.stations.push_back(s);
      }
      p.utilization = detail::get_field<std::vector<double>>(pj, "u", "path");
      if (p.utilization.size() != p.stations.size())
        throw dimension_error("path U vector does not match its station sequence");
      for (double u : p.utilization)
        if (!(u > 0)) throw validation_error("path utilization must be positive");
      for (const auto& b : detail::get_or(pj, "visit_breaks", std::vector<int>{}))
        p.visit_breaks.push_back(static_cast<BreakChoice>(b));
      p.distance_km = detail::get_field<double>(pj, "distance_km", "path");
      p.effective_time_h = detail::get_field<double>(pj, "effective_time_h", "path");
      p.energy_kwh = detail::get_or(pj, "energy_kwh", 0.0);
      p.detour_frac = detail::get_or(pj, "detour_frac", 0.0);
      p.route_arcs = detail::get_or(pj, "route_arcs", std::vector<int>{});
      qp.paths.push_back(std::move(p));
    }
  }
  return ps;
}

inline void save_path_set(const Instance& inst, const PathSet& ps, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write path file " + path);
  out << path_set_to_json(inst, ps).dump(2) << "\n";
}

inline PathSet load_path_set(const Instance& inst, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open path file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("malformed path file " + path + ": " + e.what());
  }
  return path_set_from_json(inst, j);
}

}  // namespace cslp
