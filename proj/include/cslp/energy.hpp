#pragma once

#include <algorithm>

#include "cslp/instance.hpp"

namespace cslp {

// Per-arc energy model: horizontal consumption plus gravitational lift on
// climbs, partially recovered on descents. Ferry legs consume nothing.
struct EnergyParams {
  double horizontal_kwh_km = 1.5;
  double vehicle_mass_t = 30.0;
  double gravity = 9.81;            // m/s^2
  double regen_efficiency = 0.5;    // fraction recovered on descents
  double charger_rating_kw = 400.0;

  static EnergyParams for_vehicle(const VehicleType& v, const Regulations& reg,
                                  double rating_kw = 400.0) {
    EnergyParams p;
    p.horizontal_kwh_km = v.consumption_kwh_km;
    p.vehicle_mass_t = v.weight_t;
    p.regen_efficiency = reg.regen_efficiency;
    p.charger_rating_kw = rating_kw;
    return p;
  }
};

// kWh to traverse one arc. Net energy is floored at 0 so descents cannot turn
// an arc into a source (negative arcs would poison label dominance).
inline double arc_energy(const NetworkArc& arc, const EnergyParams& p) {
  if (arc.category == ArcCategory::Ferry) return 0.0;
  const double mass_kg = p.vehicle_mass_t * 1000.0;
  const double lift = mass_kg * p.gravity * arc.climb_m / 3.6e6;    // J -> kWh
  const double regen = p.regen_efficiency * mass_kg * p.gravity * arc.descent_m / 3.6e6;
  return std::max(0.0, p.horizontal_kwh_km * arc.length_km + lift - regen);
}

// Hours to transfer `energy_kwh` at constant rated power.
inline double charge_duration(double energy_kwh, const EnergyParams& p) {
  return energy_kwh / p.charger_rating_kw;
}

}  // namespace cslp
