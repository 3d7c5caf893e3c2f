#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cslp/common.hpp"

namespace cslp {

using json = nlohmann::ordered_json;

enum class NodeKind { Junction, OdNode, StationNode };
enum class ArcCategory { Road, Ferry };

struct NetworkNode {
  std::string id;
  double lat = 0, lon = 0;
  NodeKind kind = NodeKind::Junction;
};

struct NetworkArc {
  std::string tail, head;
  ArcCategory category = ArcCategory::Road;
  double length_km = 0;
  double speed_kmh = 0;
  double climb_m = 0;    // total ascent in travel direction
  double descent_m = 0;  // total descent in travel direction
};

struct RoadNetwork {
  std::vector<NetworkNode> nodes;
  std::vector<NetworkArc> arcs;
};

struct OdPair {
  std::string id;
  std::string origin, destination;
  double base_flow = 0;  // total HDVs per hour, exogenous
};

struct VehicleType {
  std::string id;
  double range_km = 0;
  bool depot_charging = false;
  double consumption_kwh_km = 0;  // horizontal coefficient
  double weight_t = 0;
  double battery_kwh = 0;  // usable; derived as range * consumption when absent
  double departure_deduction_km = 0;
  double arrival_reserve_km = 0;
  double initial_soc = 1.0;
};

struct CandidateStation {
  std::string id;
  std::string node;  // attached network node
  std::string zone;
  int max_chargers = 1;                // K_i
  std::vector<double> fixed_cost;      // C^F_it per period
  std::vector<double> charger_cost;    // C^V_it per period
  std::vector<int> preplanned;         // P_it per period
  bool exists_at_start = false;

  int preplanned_total() const {
    int s = 0;
    for (int p : preplanned) s += p;
    return s;
  }
  // T^P_i: the unique period with P_it >= 1, or -1.
  int preplanned_period() const {
    for (std::size_t t = 0; t < preplanned.size(); ++t)
      if (preplanned[t] > 0) return static_cast<int>(t);
    return -1;
  }
};

struct PowerZone {
  std::string id;
  std::vector<std::string> stations;  // N^R_r
  double initial_capacity_mw = 0;
  double charger_power_kw = 400.0;
};

struct PlanningHorizon {
  int num_periods = 0;
  int first_stage_len = 0;
  std::vector<std::string> labels;   // optional year labels
  std::vector<double> budgets;       // B_t, MNOK
  double carryover = 1.0;            // A

  int second_stage_len() const { return num_periods - first_stage_len; }
  bool is_first_stage(int t) const { return t < first_stage_len; }
};

struct Regulations {
  double continuous_driving_cap_h = 4.5;
  double break_duration_h = 0.75;
  bool split_break = true;           // 15+30 split permitted
  double split_first_h = 0.25;
  double split_second_h = 0.5;
  double daily_driving_cap_h = 10.0;
  int max_charging_stops = 4;
  int max_extra_stops = 1;           // vs fastest feasible route
  double detour_time_factor = 0.2;   // effective-time filter
  double detour_distance_factor = 0.3;  // graph-pruning cap
  double max_trip_time_h = 13.0;
  bool ferry_resets_break = false;
  double regen_efficiency = 0.5;
  bool charge_to_full = false;       // sensitivity toggle; default just-enough
};

struct Instance {
  RoadNetwork network;
  std::vector<OdPair> od_pairs;
  std::vector<VehicleType> vehicle_types;
  std::vector<CandidateStation> stations;
  std::vector<PowerZone> power_zones;
  PlanningHorizon horizon;
  std::vector<std::vector<double>> fleet_mix;  // [period][vehicle type]
  Regulations regulations;

  int node_index(const std::string& id) const {
    auto it = node_idx_.find(id);
    return it == node_idx_.end() ? -1 : it->second;
  }
  int station_index(const std::string& id) const {
    auto it = station_idx_.find(id);
    return it == station_idx_.end() ? -1 : it->second;
  }
  int zone_index(const std::string& id) const {
    auto it = zone_idx_.find(id);
    return it == zone_idx_.end() ? -1 : it->second;
  }
  // station index attached to network node, or -1
  int station_at_node(int node) const {
    auto it = station_at_node_.find(node);
    return it == station_at_node_.end() ? -1 : it->second;
  }
  int zone_of_station(int s) const { return station_zone_[s]; }

  void build_indexes();  // defined after validation helpers

 private:
  std::map<std::string, int> node_idx_, station_idx_, zone_idx_;
  std::map<int, int> station_at_node_;
  std::vector<int> station_zone_;
};

inline void Instance::build_indexes() {
  node_idx_.clear();
  station_idx_.clear();
  zone_idx_.clear();
  station_at_node_.clear();
  station_zone_.assign(stations.size(), -1);
  for (std::size_t i = 0; i < network.nodes.size(); ++i) node_idx_[network.nodes[i].id] = static_cast<int>(i);
  for (std::size_t i = 0; i < stations.size(); ++i) station_idx_[stations[i].id] = static_cast<int>(i);
  for (std::size_t i = 0; i < power_zones.size(); ++i) zone_idx_[power_zones[i].id] = static_cast<int>(i);
  for (std::size_t i = 0; i < stations.size(); ++i) {
    int n = node_index(stations[i].node);
    if (n >= 0) station_at_node_[n] = static_cast<int>(i);
    station_zone_[i] = zone_index(stations[i].zone);
  }
}

// ---------------------------------------------------------------------------
// Validation. Throws validation_error naming the first violated invariant.

inline void validate_instance(Instance& inst) {
  const auto& net = inst.network;
  const int T = inst.horizon.num_periods;

  std::set<std::string> node_ids;
  for (const auto& n : net.nodes) {
    if (!node_ids.insert(n.id).second) throw validation_error("duplicate node id " + n.id);
  }
  for (const auto& a : net.arcs) {
    if (!node_ids.count(a.tail)) throw validation_error("unknown node " + a.tail);
    if (!node_ids.count(a.head)) throw validation_error("unknown node " + a.head);
    if (!(a.length_km > 0)) throw validation_error("arc " + a.tail + "->" + a.head + " has non-positive length");
    if (!(a.speed_kmh > 0)) throw validation_error("arc " + a.tail + "->" + a.head + " has non-positive speed");
    if (a.climb_m < 0 || a.descent_m < 0)
      throw validation_error("arc " + a.tail + "->" + a.head + " has negative elevation totals");
  }

  inst.build_indexes();

  // weak connectivity over od-nodes and station-nodes
  {
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) -> std::string {
      auto it = parent.find(x);
      if (it == parent.end() || it->second == x) return x;
      return it->second = find(it->second);
    };
    for (const auto& n : net.nodes) parent[n.id] = n.id;
    for (const auto& a : net.arcs) parent[find(a.tail)] = find(a.head);
    std::string root;
    for (const auto& n : net.nodes) {
      if (n.kind == NodeKind::Junction) continue;
      if (root.empty()) root = find(n.id);
      else if (find(n.id) != root)
        throw validation_error("network not weakly connected over od/station nodes: " + n.id + " is isolated");
    }
  }

  // station nodes need at least one access arc
  {
    std::set<std::string> touched;
    for (const auto& a : net.arcs) {
      touched.insert(a.tail);
      touched.insert(a.head);
    }
    for (const auto& n : net.nodes)
      if (n.kind == NodeKind::StationNode && !touched.count(n.id))
        throw validation_error("station node " + n.id + " has no access arc");
  }

  std::set<std::pair<std::string, std::string>> od_seen;
  std::set<std::string> od_ids;
  for (const auto& q : inst.od_pairs) {
    if (!od_ids.insert(q.id).second) throw validation_error("duplicate od pair id " + q.id);
    if (!node_ids.count(q.origin)) throw validation_error("unknown node " + q.origin);
    if (!node_ids.count(q.destination)) throw validation_error("unknown node " + q.destination);
    if (q.origin == q.destination) throw validation_error("od pair " + q.id + " has origin == destination");
    if (q.base_flow < 0) throw validation_error("od pair " + q.id + " has negative base flow");
    if (!od_seen.insert({q.origin, q.destination}).second)
      throw validation_error("duplicate od pair " + q.origin + "->" + q.destination);
  }

  std::set<std::string> veh_ids;
  for (auto& v : inst.vehicle_types) {
    if (!veh_ids.insert(v.id).second) throw validation_error("duplicate vehicle type id " + v.id);
    if (!(v.range_km > 0)) throw validation_error("vehicle " + v.id + " has non-positive range");
    if (!(v.consumption_kwh_km > 0)) throw validation_error("vehicle " + v.id + " has non-positive consumption");
    if (v.battery_kwh == 0) v.battery_kwh = v.range_km * v.consumption_kwh_km;  // derived field
    if (!(v.battery_kwh > 0)) throw validation_error("vehicle " + v.id + " has non-positive battery");
    if (!(v.initial_soc > 0 && v.initial_soc <= 1))
      throw validation_error("vehicle " + v.id + " initial SOC outside (0,1]");
    if (!(v.departure_deduction_km + v.arrival_reserve_km < v.range_km))
      throw validation_error("vehicle " + v.id + " deduction + reserve >= range");
  }

  if (T <= 0) throw validation_error("horizon has no periods");
  if (inst.horizon.first_stage_len <= 0 || inst.horizon.first_stage_len >= T)
    throw validation_error("both planning stages must be nonempty");
  if (static_cast<int>(inst.horizon.budgets.size()) != T)
    throw validation_error("budgets length does not match period count");
  for (double b : inst.horizon.budgets)
    if (b < 0) throw validation_error("negative budget");
  if (inst.horizon.carryover < 0 || inst.horizon.carryover > 1)
    throw validation_error("carry-over fraction outside [0,1]");

  std::set<std::string> st_ids;
  std::set<std::string> st_nodes;
  for (const auto& s : inst.stations) {
    if (!st_ids.insert(s.id).second) throw validation_error("duplicate station id " + s.id);
    if (!node_ids.count(s.node)) throw validation_error("station " + s.id + " references unknown node " + s.node);
    if (!st_nodes.insert(s.node).second)
      throw validation_error("two candidate stations attached to node " + s.node);
    if (inst.network.nodes[inst.node_index(s.node)].kind != NodeKind::StationNode)
      throw validation_error("station " + s.id + " attached to non-station node " + s.node);
    if (s.max_chargers < 1) throw validation_error("station " + s.id + " has K < 1");
    if (static_cast<int>(s.fixed_cost.size()) != T || static_cast<int>(s.charger_cost.size()) != T ||
        static_cast<int>(s.preplanned.size()) != T)
      throw validation_error("station " + s.id + " cost/preplanned vectors do not match period count");
    for (double c : s.fixed_cost)
      if (c < 0) throw validation_error("station " + s.id + " has negative fixed cost");
    for (double c : s.charger_cost)
      if (c < 0) throw validation_error("station " + s.id + " has negative charger cost");
    int pos_periods = 0, tot = 0;
    for (int p : s.preplanned) {
      if (p < 0) throw validation_error("station " + s.id + " has negative pre-planned count");
      if (p > 0) ++pos_periods;
      tot += p;
    }
    if (pos_periods > 1) throw validation_error("station " + s.id + " has pre-planned chargers in several periods");
    if (tot > s.max_chargers) throw validation_error("station " + s.id + " pre-planned exceeds K");
    if (s.exists_at_start && (tot == 0 || s.preplanned[0] == 0))
      throw validation_error("station " + s.id + " exists at start but has no first-period pre-planned chargers");
    if (inst.zone_index(s.zone) < 0) throw validation_error("station " + s.id + " references unknown zone " + s.zone);
  }

  std::set<std::string> zone_ids;
  std::set<std::string> zoned_stations;
  for (const auto& z : inst.power_zones) {
    if (!zone_ids.insert(z.id).second) throw validation_error("duplicate zone id " + z.id);
    if (z.initial_capacity_mw < 0) throw validation_error("zone " + z.id + " has negative capacity");
    if (!(z.charger_power_kw > 0)) throw validation_error("zone " + z.id + " has non-positive charger rating");
    for (const auto& sid : z.stations) {
      if (!st_ids.count(sid)) throw validation_error("zone " + z.id + " lists unknown station " + sid);
      if (!zoned_stations.insert(sid).second)
        throw validation_error("station " + sid + " listed in more than one zone");
    }
  }
  for (const auto& s : inst.stations) {
    if (!zoned_stations.count(s.id))
      throw validation_error("station " + s.id + " not listed in its zone's member set");
    const auto& z = inst.power_zones[inst.zone_index(s.zone)];
    if (std::find(z.stations.begin(), z.stations.end(), s.id) == z.stations.end())
      throw validation_error("station " + s.id + " zone field disagrees with zone member list");
  }

  if (static_cast<int>(inst.fleet_mix.size()) != T)
    throw validation_error("fleet mix does not cover every period");
  for (int t = 0; t < T; ++t) {
    if (inst.fleet_mix[t].size() != inst.vehicle_types.size())
      throw validation_error("fleet mix row " + std::to_string(t) + " does not match vehicle type count");
    double sum = 0;
    for (double sh : inst.fleet_mix[t]) {
      if (sh < 0) throw validation_error("negative fleet-mix share");
      sum += sh;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw validation_error("fleet mix shares in period " + std::to_string(t) + " do not sum to 1");
  }

  const auto& r = inst.regulations;
  if (!(r.continuous_driving_cap_h > 0 && r.break_duration_h > 0 && r.daily_driving_cap_h > 0 &&
        r.max_charging_stops > 0 && r.detour_time_factor > 0 && r.max_trip_time_h > 0 &&
        r.detour_distance_factor > 0))
    throw validation_error("regulation parameters must be positive");

  inst.build_indexes();
}

// ---------------------------------------------------------------------------
// JSON (de)serialization. Field names are part of the file contract.

inline json instance_to_json(const Instance& inst) {
  json j;
  json nodes = json::array();
  for (const auto& n : inst.network.nodes) {
    nodes.push_back({{"id", n.id},
                     {"lat", n.lat},
                     {"lon", n.lon},
                     {"kind", n.kind == NodeKind::Junction  ? "junction"
                              : n.kind == NodeKind::OdNode ? "od-node"
                                                           : "station-node"}});
  }
  json arcs = json::array();
  for (const auto& a : inst.network.arcs) {
    arcs.push_back({{"tail", a.tail},
                    {"head", a.head},
                    {"category", a.category == ArcCategory::Road ? "road" : "ferry"},
                    {"length_km", a.length_km},
                    {"speed_kmh", a.speed_kmh},
                    {"climb_m", a.climb_m},
                    {"descent_m", a.descent_m}});
  }
  j["network"] = {{"nodes", nodes}, {"arcs", arcs}};

  j["od_pairs"] = json::array();
  for (const auto& q : inst.od_pairs)
    j["od_pairs"].push_back(
        {{"id", q.id}, {"origin", q.origin}, {"destination", q.destination}, {"base_flow", q.base_flow}});

  j["vehicle_types"] = json::array();
  for (const auto& v : inst.vehicle_types)
    j["vehicle_types"].push_back({{"id", v.id},
                                  {"range_km", v.range_km},
                                  {"depot_charging", v.depot_charging},
                                  {"consumption_kwh_per_km", v.consumption_kwh_km},
                                  {"weight_t", v.weight_t},
                                  {"battery_kwh", v.battery_kwh},
                                  {"departure_deduction_km", v.departure_deduction_km},
                                  {"arrival_reserve_km", v.arrival_reserve_km},
                                  {"initial_soc", v.initial_soc}});

  j["stations"] = json::array();
  for (const auto& s : inst.stations)
    j["stations"].push_back({{"id", s.id},
                             {"node", s.node},
                             {"zone", s.zone},
                             {"max_chargers", s.max_chargers},
                             {"fixed_cost", s.fixed_cost},
                             {"charger_cost", s.charger_cost},
                             {"preplanned", s.preplanned},
                             {"exists_at_start", s.exists_at_start}});

  j["power_zones"] = json::array();
  for (const auto& z : inst.power_zones)
    j["power_zones"].push_back({{"id", z.id},
                                {"stations", z.stations},
                                {"initial_capacity_mw", z.initial_capacity_mw},
                                {"charger_power_kw", z.charger_power_kw}});

  j["horizon"] = {{"periods", inst.horizon.num_periods},
                  {"first_stage_len", inst.horizon.first_stage_len},
                  {"labels", inst.horizon.labels},
                  {"budgets", inst.horizon.budgets},
                  {"carryover", inst.horizon.carryover}};
  j["fleet_mix"] = inst.fleet_mix;
  const auto& r = inst.regulations;
  j["regulations"] = {{"continuous_driving_cap_h", r.continuous_driving_cap_h},
                      {"break_duration_h", r.break_duration_h},
                      {"split_break", r.split_break},
                      {"split_first_h", r.split_first_h},
                      {"split_second_h", r.split_second_h},
                      {"daily_driving_cap_h", r.daily_driving_cap_h},
                      {"max_charging_stops", r.max_charging_stops},
                      {"max_extra_stops", r.max_extra_stops},
                      {"detour_time_factor", r.detour_time_factor},
                      {"detour_distance_factor", r.detour_distance_factor},
                      {"max_trip_time_h", r.max_trip_time_h},
                      {"ferry_resets_break", r.ferry_resets_break},
                      {"regen_efficiency", r.regen_efficiency},
                      {"charge_to_full", r.charge_to_full}};
  return j;
}

namespace detail {

template <typename T>
T get_field(const json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key)) throw parse_error("missing field '" + std::string(key) + "' in " + ctx);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw parse_error("bad field '" + std::string(key) + "' in " + ctx + ": " + e.what());
  }
}

template <typename T>
T get_or(const json& j, const char* key, T def) {
  if (!j.contains(key)) return def;
  return j.at(key).get<T>();
}

}  // namespace detail

inline Instance instance_from_json(const json& j) {
  using detail::get_field;
  using detail::get_or;
  Instance inst;
  if (!j.is_object()) throw parse_error("instance file is not an object");

  const json& net = j.contains("network") ? j.at("network") : throw parse_error("missing field 'network'");
  for (const auto& n : get_field<json>(net, "nodes", "network")) {
    NetworkNode nd;
    nd.id = get_field<std::string>(n, "id", "node");
    nd.lat = get_or(n, "lat", 0.0);
    nd.lon = get_or(n, "lon", 0.0);
    auto kind = get_field<std::string>(n, "kind", "node " + nd.id);
    if (kind == "junction") nd.kind = NodeKind::Junction;
    else if (kind == "od-node") nd.kind = NodeKind::OdNode;
    else if (kind == "station-node") nd.kind = NodeKind::StationNode;
    else throw parse_error("unknown node kind '" + kind + "'");
    inst.network.nodes.push_back(std::move(nd));
  }
  for (const auto& a : get_field<json>(net, "arcs", "network")) {
    NetworkArc arc;
    arc.tail = get_field<std::string>(a, "tail", "arc");
    arc.head = get_field<std::string>(a, "head", "arc");
    auto cat = get_field<std::string>(a, "category", "arc");
    if (cat == "road") arc.category = ArcCategory::Road;
    else if (cat == "ferry") arc.category = ArcCategory::Ferry;
    else throw parse_error("unknown arc category '" + cat + "'");
    arc.length_km = get_field<double>(a, "length_km", "arc");
    arc.speed_kmh = get_field<double>(a, "speed_kmh", "arc");
    arc.climb_m = get_or(a, "climb_m", 0.0);
    arc.descent_m = get_or(a, "descent_m", 0.0);
    inst.network.arcs.push_back(std::move(arc));
  }

  for (const auto& q : get_field<json>(j, "od_pairs", "instance")) {
    OdPair od;
    od.id = get_field<std::string>(q, "id", "od pair");
    od.origin = get_field<std::string>(q, "origin", "od pair " + od.id);
    od.destination = get_field<std::string>(q, "destination", "od pair " + od.id);
    od.base_flow = get_field<double>(q, "base_flow", "od pair " + od.id);
    inst.od_pairs.push_back(std::move(od));
  }

  for (const auto& v : get_field<json>(j, "vehicle_types", "instance")) {
    VehicleType vt;
    vt.id = get_field<std::string>(v, "id", "vehicle type");
    vt.range_km = get_field<double>(v, "range_km", "vehicle " + vt.id);
    vt.depot_charging = get_field<bool>(v, "depot_charging", "vehicle " + vt.id);
    vt.consumption_kwh_km = get_field<double>(v, "consumption_kwh_per_km", "vehicle " + vt.id);
    vt.weight_t = get_or(v, "weight_t", 30.0);
    vt.battery_kwh = get_or(v, "battery_kwh", 0.0);
    vt.departure_deduction_km = get_or(v, "departure_deduction_km", 0.0);
    vt.arrival_reserve_km = get_or(v, "arrival_reserve_km", 0.0);
    vt.initial_soc = get_or(v, "initial_soc", 1.0);
    inst.vehicle_types.push_back(std::move(vt));
  }

  for (const auto& s : get_field<json>(j, "stations", "instance")) {
    CandidateStation st;
    st.id = get_field<std::string>(s, "id", "station");
    st.node = get_field<std::string>(s, "node", "station " + st.id);
    st.zone = get_field<std::string>(s, "zone", "station " + st.id);
    st.max_chargers = get_field<int>(s, "max_chargers", "station " + st.id);
    st.fixed_cost = get_field<std::vector<double>>(s, "fixed_cost", "station " + st.id);
    st.charger_cost = get_field<std::vector<double>>(s, "charger_cost", "station " + st.id);
    st.preplanned = get_field<std::vector<int>>(s, "preplanned", "station " + st.id);
    st.exists_at_start = get_or(s, "exists_at_start", false);
    inst.stations.push_back(std::move(st));
  }

  for (const auto& z : get_field<json>(j, "power_zones", "instance")) {
    PowerZone pz;
    pz.id = get_field<std::string>(z, "id", "power zone");
    pz.stations = get_field<std::vector<std::string>>(z, "stations", "zone " + pz.id);
    pz.initial_capacity_mw = get_field<double>(z, "initial_capacity_mw", "zone " + pz.id);
    pz.charger_power_kw = get_or(z, "charger_power_kw", 400.0);
    inst.power_zones.push_back(std::move(pz));
  }

  const json& h = j.contains("horizon") ? j.at("horizon") : throw parse_error("missing field 'horizon'");
  inst.horizon.num_periods = get_field<int>(h, "periods", "horizon");
  inst.horizon.first_stage_len = get_field<int>(h, "first_stage_len", "horizon");
  inst.horizon.labels = get_or(h, "labels", std::vector<std::string>{});
  inst.horizon.budgets = get_field<std::vector<double>>(h, "budgets", "horizon");
  inst.horizon.carryover = get_field<double>(h, "carryover", "horizon");

  inst.fleet_mix = get_field<std::vector<std::vector<double>>>(j, "fleet_mix", "instance");

  if (j.contains("regulations")) {
    const json& r = j.at("regulations");
    auto& reg = inst.regulations;
    reg.continuous_driving_cap_h = get_or(r, "continuous_driving_cap_h", reg.continuous_driving_cap_h);
    reg.break_duration_h = get_or(r, "break_duration_h", reg.break_duration_h);
    reg.split_break = get_or(r, "split_break", reg.split_break);
    reg.split_first_h = get_or(r, "split_first_h", reg.split_first_h);
    reg.split_second_h = get_or(r, "split_second_h", reg.split_second_h);
    reg.daily_driving_cap_h = get_or(r, "daily_driving_cap_h", reg.daily_driving_cap_h);
    reg.max_charging_stops = get_or(r, "max_charging_stops", reg.max_charging_stops);
    reg.max_extra_stops = get_or(r, "max_extra_stops", reg.max_extra_stops);
    reg.detour_time_factor = get_or(r, "detour_time_factor", reg.detour_time_factor);
    reg.detour_distance_factor = get_or(r, "detour_distance_factor", reg.detour_distance_factor);
    reg.max_trip_time_h = get_or(r, "max_trip_time_h", reg.max_trip_time_h);
    reg.ferry_resets_break = get_or(r, "ferry_resets_break", reg.ferry_resets_break);
    reg.regen_efficiency = get_or(r, "regen_efficiency", reg.regen_efficiency);
    reg.charge_to_full = get_or(r, "charge_to_full", reg.charge_to_full);
  }

  validate_instance(inst);
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open instance file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("malformed instance file " + path + ": " + e.what());
  }
  return instance_from_json(j);
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write instance file " + path);
  out << instance_to_json(inst).dump(2) << "\n";
}

// Canonical semantic equality (ordering-insensitive), used by round-trip tests.
inline bool instances_equal(const Instance& a, const Instance& b) {
  json ja = instance_to_json(a), jb = instance_to_json(b);
  auto sort_by_id = [](json& arr) {
    std::sort(arr.begin(), arr.end(),
              [](const json& x, const json& y) { return x.at("id").get<std::string>() < y.at("id").get<std::string>(); });
  };
  for (auto* j : {&ja, &jb}) {
    sort_by_id((*j)["network"]["nodes"]);
    auto& arcs = (*j)["network"]["arcs"];
    std::sort(arcs.begin(), arcs.end(), [](const json& x, const json& y) {
      return std::tie(x.at("tail").get_ref<const std::string&>(), x.at("head").get_ref<const std::string&>(),
                      x.at("length_km").get_ref<const double&>()) <
             std::tie(y.at("tail").get_ref<const std::string&>(), y.at("head").get_ref<const std::string&>(),
                      y.at("length_km").get_ref<const double&>());
    });
    sort_by_id((*j)["od_pairs"]);
    sort_by_id((*j)["vehicle_types"]);
    sort_by_id((*j)["stations"]);
    sort_by_id((*j)["power_zones"]);
  }
  return ja == jb;
}

}  // namespace cslp
