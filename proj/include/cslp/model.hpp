#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "cslp/common.hpp"

namespace cslp {

enum class VarKind { Continuous, Integer, Binary };
enum class Sense { LE, GE, EQ };

struct LinTerm {
  int var;
  double coef;
};

struct Constraint {
  std::string name;
  std::vector<LinTerm> terms;
  Sense sense = Sense::LE;
  double rhs = 0;
};

struct Variable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  double lb = 0, ub = kInf;
};

// Solver-agnostic model container. Objective sense is always maximize; names
// double as marker tags linking variables back to model symbols.
struct LinearModel {
  std::vector<Variable> vars;
  std::vector<Constraint> cons;
  std::vector<double> obj;

  int add_var(std::string name, VarKind kind, double lb, double ub, double obj_coef = 0) {
    vars.push_back({std::move(name), kind, lb, ub});
    obj.push_back(obj_coef);
    return static_cast<int>(vars.size()) - 1;
  }

  int add_con(std::string name, std::vector<LinTerm> terms, Sense sense, double rhs) {
    for (const auto& t : terms)
      if (t.var < 0 || t.var >= static_cast<int>(vars.size()))
        throw dimension_error("constraint " + name + " references undeclared variable");
    cons.push_back({std::move(name), std::move(terms), sense, rhs});
    return static_cast<int>(cons.size()) - 1;
  }

  bool has_integers() const {
    for (const auto& v : vars)
      if (v.kind != VarKind::Continuous) return true;
    return false;
  }

  int num_vars() const { return static_cast<int>(vars.size()); }
  int num_cons() const { return static_cast<int>(cons.size()); }

  double eval_obj(const std::vector<double>& x) const {
    double s = 0;
    for (int j = 0; j < num_vars(); ++j) s += obj[j] * x[j];
    return s;
  }

  // LP-format text export for external debugging.
  void write_lp(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write LP file " + path);
    out << "\\ exported model\nMaximize\n obj:";
    for (int j = 0; j < num_vars(); ++j)
      if (obj[j] != 0) out << (obj[j] >= 0 ? " + " : " - ") << std::abs(obj[j]) << " " << vars[j].name;
    out << "\nSubject To\n";
    for (const auto& c : cons) {
      out << " " << c.name << ":";
      for (const auto& t : c.terms)
        out << (t.coef >= 0 ? " + " : " - ") << std::abs(t.coef) << " " << vars[t.var].name;
      out << (c.sense == Sense::LE ? " <= " : c.sense == Sense::GE ? " >= " : " = ") << c.rhs << "\n";
    }
    out << "Bounds\n";
    for (const auto& v : vars) {
      out << " " << v.lb << " <= " << v.name;
      if (std::isfinite(v.ub)) out << " <= " << v.ub;
      out << "\n";
    }
    out << "General\n";
    for (const auto& v : vars)
      if (v.kind != VarKind::Continuous) out << " " << v.name << "\n";
    out << "End\n";
  }
};

enum class SolveStatus { Optimal, FeasibleWithGap, Infeasible, Unbounded, Limit };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::FeasibleWithGap: return "feasible-with-gap";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::Limit: return "limit";
  }
  return "?";
}

struct SolveResult {
  SolveStatus status = SolveStatus::Limit;
  std::vector<double> x;
  std::vector<double> duals;  // per constraint; populated for LP solves only
  bool has_duals = false;
  double objective = -kInf;
  double bound = kInf;  // best upper bound (maximization)
  double wall_time_s = 0;
  long nodes = 0;
};

struct SolveLimits {
  double time_limit_s = kInf;
  long node_limit = std::numeric_limits<long>::max();
  double rel_gap = 1e-4;
};

struct Tolerances {
  double feasibility = 1e-6;
  double integrality = 1e-6;
};

}  // namespace cslp
