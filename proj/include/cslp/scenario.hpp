#pragma once

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "cslp/instance.hpp"
#include "cslp/rng.hpp"

namespace cslp {

// Per-period envelope for the BEHDV adoption share e(t,s) ~ U[e_min, e_max].
struct AdoptionEnvelope {
  std::vector<double> e_min, e_max;  // size = num periods

  static AdoptionEnvelope default_for(int periods) {
    // synthetic ramp; the paper's envelopes come from external forecasts
    AdoptionEnvelope env;
    for (int t = 0; t < periods; ++t) {
      env.e_min.push_back(0.05 + 0.03 * t);
      env.e_max.push_back(0.10 + 0.08 * t);
    }
    return env;
  }

  void check(int periods) const {
    if (static_cast<int>(e_min.size()) != periods || static_cast<int>(e_max.size()) != periods)
      throw validation_error("adoption envelope does not cover every period");
    for (int t = 0; t < periods; ++t)
      if (!(0 <= e_min[t] && e_min[t] <= e_max[t] && e_max[t] <= 1))
        throw validation_error("adoption envelope violated at period " + std::to_string(t));
  }

  double mid(int t) const { return 0.5 * (e_min[t] + e_max[t]); }
};

inline double fleet_share(int v, int t, const std::vector<std::vector<double>>& mix) {
  return mix.at(t).at(v);
}

// BEHDV flow for (q,v,t) at adoption share e.
inline double demand(const OdPair& q, int v, int t, double e,
                     const std::vector<std::vector<double>>& mix) {
  return q.base_flow * e * fleet_share(v, t, mix);
}

// Absolute charger limit of a zone in period t given per-year MW increments
// (increments[i] lands between period i and i+1). Applies to decision chargers;
// pre-planned chargers have pre-approved capacity and are not counted.
inline int zone_limit(const PowerZone& zone, int t, const std::vector<double>& increments) {
  double cap = zone.initial_capacity_mw;
  for (int i = 0; i < t && i < static_cast<int>(increments.size()); ++i) cap += increments[i];
  const double per_charger_mw = zone.charger_power_kw / 1000.0;
  return static_cast<int>(std::floor(cap / per_charger_mw + 1e-9));
}

struct Scenario {
  double prob = 0;
  std::vector<double> adoption;                    // e(t,s), t in T2
  std::vector<std::vector<double>> capacity_mw;    // [zone][t2]
  std::vector<std::vector<int>> limits;            // L^s_rt, absolute
  std::vector<std::vector<std::vector<double>>> demand;  // F^s [q][v][t2]
};

struct ScenarioSet {
  std::uint64_t seed = 0;
  int count = 0;
  AdoptionEnvelope envelope;
  double grid_inc_min = 0.0, grid_inc_max = 1.0;  // MW/yr
  int t1 = 0, t2 = 0;
  // deterministic first stage
  std::vector<std::vector<std::vector<double>>> demand1;  // F~ [q][v][t1]
  std::vector<std::vector<double>> capacity1_mw;          // [zone][t1]
  std::vector<std::vector<int>> limits1;                  // L~ [zone][t1]
  std::vector<Scenario> scenarios;

  double total_second_stage_demand(int s) const {
    double tot = 0;
    for (const auto& qv : scenarios[s].demand)
      for (const auto& vt : qv)
        for (double f : vt) tot += f;
    return tot;
  }
  double expected_total_demand() const {
    double tot = 0;
    for (const auto& qv : demand1)
      for (const auto& vt : qv)
        for (double f : vt) tot += f;
    for (int s = 0; s < count; ++s) tot += scenarios[s].prob * total_second_stage_demand(s);
    return tot;
  }
};

inline ScenarioSet build_scenarios(const Instance& inst, int count, std::uint64_t seed,
                                   const AdoptionEnvelope& envelope, double grid_inc_min = 0.0,
                                   double grid_inc_max = 1.0) {
  if (count < 1) throw usage_error("scenario count must be >= 1");
  if (grid_inc_min < 0 || grid_inc_max < grid_inc_min)
    throw usage_error("grid increments must be nonnegative with min <= max");
  const int T = inst.horizon.num_periods;
  const int T1 = inst.horizon.first_stage_len;
  const int T2 = T - T1;
  envelope.check(T);

  ScenarioSet set;
  set.seed = seed;
  set.count = count;
  set.envelope = envelope;
  set.grid_inc_min = grid_inc_min;
  set.grid_inc_max = grid_inc_max;
  set.t1 = T1;
  set.t2 = T2;

  const int Q = static_cast<int>(inst.od_pairs.size());
  const int V = static_cast<int>(inst.vehicle_types.size());
  const int R = static_cast<int>(inst.power_zones.size());

  // first stage: near-term demand and grid are treated as known; the neutral
  // realization is the envelope midpoint and expected increments
  const double inc_mid = 0.5 * (grid_inc_min + grid_inc_max);
  set.demand1.assign(Q, std::vector<std::vector<double>>(V, std::vector<double>(T1, 0.0)));
  for (int q = 0; q < Q; ++q)
    for (int v = 0; v < V; ++v)
      for (int t = 0; t < T1; ++t)
        set.demand1[q][v][t] = demand(inst.od_pairs[q], v, t, envelope.mid(t), inst.fleet_mix);
  set.capacity1_mw.assign(R, std::vector<double>(T1, 0.0));
  set.limits1.assign(R, std::vector<int>(T1, 0));
  std::vector<double> mid_inc(std::max(0, T - 1), inc_mid);
  for (int r = 0; r < R; ++r)
    for (int t = 0; t < T1; ++t) {
      double cap = inst.power_zones[r].initial_capacity_mw;
      for (int i = 0; i < t; ++i) cap += mid_inc[i];
      set.capacity1_mw[r][t] = cap;
      set.limits1[r][t] = zone_limit(inst.power_zones[r], t, mid_inc);
    }

  // independent streams for the two uncertainty sources
  auto rng_adopt = Philox::labeled(seed, "scenario/adoption");
  auto rng_grid = Philox::labeled(seed, "scenario/grid");

  for (int s = 0; s < count; ++s) {
    Scenario sc;
    sc.prob = 1.0 / count;
    for (int t = 0; t < T2; ++t)
      sc.adoption.push_back(rng_adopt.uniform(envelope.e_min[T1 + t], envelope.e_max[T1 + t]));
    sc.capacity_mw.assign(R, std::vector<double>(T2, 0.0));
    sc.limits.assign(R, std::vector<int>(T2, 0));
    for (int r = 0; r < R; ++r) {
      // increments: deterministic through T1, scenario draws afterwards
      std::vector<double> inc(mid_inc.begin(), mid_inc.end());
      for (int t = 0; t < T2; ++t) {
        int year = T1 - 1 + t;  // transition into period T1+t
        if (year >= 0 && year < static_cast<int>(inc.size()))
          inc[year] = rng_grid.uniform(grid_inc_min, grid_inc_max);
      }
      for (int t = 0; t < T2; ++t) {
        double cap = inst.power_zones[r].initial_capacity_mw;
        for (int i = 0; i < T1 + t; ++i) cap += inc[i];
        sc.capacity_mw[r][t] = cap;
        sc.limits[r][t] = zone_limit(inst.power_zones[r], T1 + t, inc);
      }
    }
    sc.demand.assign(Q, std::vector<std::vector<double>>(V, std::vector<double>(T2, 0.0)));
    for (int q = 0; q < Q; ++q)
      for (int v = 0; v < V; ++v)
        for (int t = 0; t < T2; ++t)
          sc.demand[q][v][t] = demand(inst.od_pairs[q], v, T1 + t, sc.adoption[t], inst.fleet_mix);
    set.scenarios.push_back(std::move(sc));
  }
  return set;
}

// Probability-weighted mean scenario; integral charger limits are rounded
// down (a fractional charger cannot be connected).
inline ScenarioSet expected_value_scenario(const ScenarioSet& in) {
  if (in.count < 1) throw usage_error("empty scenario set");
  ScenarioSet out = in;
  out.count = 1;
  Scenario ev;
  ev.prob = 1.0;
  const auto& first = in.scenarios[0];
  ev.adoption.assign(first.adoption.size(), 0.0);
  ev.capacity_mw.assign(first.capacity_mw.size(),
                        std::vector<double>(in.t2, 0.0));
  std::vector<std::vector<double>> mean_limits(first.limits.size(), std::vector<double>(in.t2, 0.0));
  ev.demand.assign(first.demand.size(),
                   std::vector<std::vector<double>>(first.demand.empty() ? 0 : first.demand[0].size(),
                                                    std::vector<double>(in.t2, 0.0)));
  for (const auto& sc : in.scenarios) {
    for (std::size_t t = 0; t < sc.adoption.size(); ++t) ev.adoption[t] += sc.prob * sc.adoption[t];
    for (std::size_t r = 0; r < sc.capacity_mw.size(); ++r)
      for (int t = 0; t < in.t2; ++t) {
        ev.capacity_mw[r][t] += sc.prob * sc.capacity_mw[r][t];
        mean_limits[r][t] += sc.prob * sc.limits[r][t];
      }
    for (std::size_t q = 0; q < sc.demand.size(); ++q)
      for (std::size_t v = 0; v < sc.demand[q].size(); ++v)
        for (int t = 0; t < in.t2; ++t) ev.demand[q][v][t] += sc.prob * sc.demand[q][v][t];
  }
  ev.limits.assign(mean_limits.size(), std::vector<int>(in.t2, 0));
  for (std::size_t r = 0; r < mean_limits.size(); ++r)
    for (int t = 0; t < in.t2; ++t)
      ev.limits[r][t] = static_cast<int>(std::floor(mean_limits[r][t] + 1e-9));
  out.scenarios = {std::move(ev)};
  return out;
}

// ---------------------------------------------------------------------------
// file io

inline json scenario_set_to_json(const ScenarioSet& set) {
  json j;
  j["seed"] = set.seed;
  j["count"] = set.count;
  j["envelope"] = {{"e_min", set.envelope.e_min}, {"e_max", set.envelope.e_max}};
  j["grid_increment_mw"] = {{"min", set.grid_inc_min}, {"max", set.grid_inc_max}};
  j["first_stage_len"] = set.t1;
  j["second_stage_len"] = set.t2;
  j["first_stage"] = {{"demand", set.demand1}, {"capacity_mw", set.capacity1_mw}, {"limits", set.limits1}};
  json arr = json::array();
  for (const auto& sc : set.scenarios)
    arr.push_back({{"prob", sc.prob},
                   {"adoption", sc.adoption},
                   {"capacity_mw", sc.capacity_mw},
                   {"limits", sc.limits},
                   {"demand", sc.demand}});
  j["scenarios"] = std::move(arr);
  return j;
}

inline ScenarioSet scenario_set_from_json(const json& j) {
  using detail::get_field;
  ScenarioSet set;
  set.seed = get_field<std::uint64_t>(j, "seed", "scenario set");
  set.count = get_field<int>(j, "count", "scenario set");
  const json& env = get_field<json>(j, "envelope", "scenario set");
  set.envelope.e_min = get_field<std::vector<double>>(env, "e_min", "envelope");
  set.envelope.e_max = get_field<std::vector<double>>(env, "e_max", "envelope");
  const json& gi = get_field<json>(j, "grid_increment_mw", "scenario set");
  set.grid_inc_min = get_field<double>(gi, "min", "grid increment");
  set.grid_inc_max = get_field<double>(gi, "max", "grid increment");
  set.t1 = get_field<int>(j, "first_stage_len", "scenario set");
  set.t2 = get_field<int>(j, "second_stage_len", "scenario set");
  const json& fs = get_field<json>(j, "first_stage", "scenario set");
  set.demand1 = get_field<std::vector<std::vector<std::vector<double>>>>(fs, "demand", "first stage");
  set.capacity1_mw = get_field<std::vector<std::vector<double>>>(fs, "capacity_mw", "first stage");
  set.limits1 = get_field<std::vector<std::vector<int>>>(fs, "limits", "first stage");
  for (const auto& sj : get_field<json>(j, "scenarios", "scenario set")) {
    Scenario sc;
    sc.prob = get_field<double>(sj, "prob", "scenario");
    sc.adoption = get_field<std::vector<double>>(sj, "adoption", "scenario");
    sc.capacity_mw = get_field<std::vector<std::vector<double>>>(sj, "capacity_mw", "scenario");
    sc.limits = get_field<std::vector<std::vector<int>>>(sj, "limits", "scenario");
    sc.demand = get_field<std::vector<std::vector<std::vector<double>>>>(sj, "demand", "scenario");
    set.scenarios.push_back(std::move(sc));
  }
  if (static_cast<int>(set.scenarios.size()) != set.count)
    throw validation_error("scenario count disagrees with scenario list");
  double psum = 0;
  for (const auto& sc : set.scenarios) psum += sc.prob;
  if (std::abs(psum - 1.0) > 1e-12) throw validation_error("scenario probabilities do not sum to 1");
  return set;
}

inline void save_scenario_set(const ScenarioSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write scenario file " + path);
  out << scenario_set_to_json(set).dump(2) << "\n";
}

inline ScenarioSet load_scenario_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open scenario file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("malformed scenario file " + path + ": " + e.what());
  }
  return scenario_set_from_json(j);
}

}  // namespace cslp
