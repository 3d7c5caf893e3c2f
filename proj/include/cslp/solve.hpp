#pragma once

#include <chrono>
#include <cmath>
#include <queue>
#include <vector>

#include "cslp/model.hpp"
#include "cslp/simplex.hpp"

namespace cslp {

inline double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

namespace bb {

struct Node {
  int parent = -1;
  int var = -1;        // bound changed relative to parent
  double lb = 0, ub = 0;
  double bound = kInf; // parent LP value
  long id = 0;
};

struct NodeOrder {
  const std::vector<Node>* arena;
  bool operator()(int a, int b) const {
    const Node& na = (*arena)[a];
    const Node& nb = (*arena)[b];
    if (na.bound != nb.bound) return na.bound < nb.bound;  // max-heap on bound
    return na.id > nb.id;                                  // FIFO among ties
  }
};

}  // namespace bb

// LP or MIP solve behind the oracle contract. MIPs run a best-bound
// branch-and-bound with most-fractional branching (lowest index on ties);
// everything is deterministic for a fixed model.
inline SolveResult solve(const LinearModel& model, SolverOracle& oracle, const SolveLimits& limits = {},
                         const Tolerances& tol = {}) {
  const double t0 = now_seconds();
  if (!model.has_integers()) {
    SolveResult r = oracle.solve_lp(model);
    r.wall_time_s = now_seconds() - t0;
    return r;
  }

  std::vector<int> int_vars;
  for (int j = 0; j < model.num_vars(); ++j)
    if (model.vars[j].kind != VarKind::Continuous) int_vars.push_back(j);

  LinearModel work = model;  // bounds mutated per node
  std::vector<double> base_lb(model.num_vars()), base_ub(model.num_vars());
  for (int j = 0; j < model.num_vars(); ++j) {
    base_lb[j] = model.vars[j].lb;
    base_ub[j] = model.vars[j].ub;
  }

  std::vector<bb::Node> arena;
  bb::NodeOrder order{&arena};
  std::priority_queue<int, std::vector<int>, bb::NodeOrder> open(order);
  arena.push_back({});  // root: no bound change
  open.push(0);

  SolveResult best;
  best.objective = -kInf;
  double ub_global = kInf;
  long nodes_done = 0;
  bool hit_limit = false;

  auto apply_bounds = [&](int node) {
    for (int j = 0; j < work.num_vars(); ++j) {
      work.vars[j].lb = base_lb[j];
      work.vars[j].ub = base_ub[j];
    }
    for (int cur = node; cur > 0; cur = arena[cur].parent) {
      const auto& nd = arena[cur];
      work.vars[nd.var].lb = std::max(work.vars[nd.var].lb, nd.lb);
      work.vars[nd.var].ub = std::min(work.vars[nd.var].ub, nd.ub);
    }
  };

  auto gap_closed = [&](double ub) {
    if (best.objective <= -kInf) return false;
    return ub - best.objective <= limits.rel_gap * std::max(1e-10, std::abs(ub)) + 1e-9;
  };

  while (!open.empty()) {
    if (now_seconds() - t0 > limits.time_limit_s || nodes_done >= limits.node_limit) {
      hit_limit = true;
      break;
    }
    int ni = open.top();
    open.pop();
    ub_global = arena[ni].bound;
    if (gap_closed(ub_global)) break;
    if (best.objective > -kInf && ub_global <= best.objective + 1e-9 * (1 + std::abs(best.objective))) break;

    apply_bounds(ni);
    SolveResult lp = oracle.solve_lp(work);
    ++nodes_done;
    if (lp.status == SolveStatus::Infeasible) continue;
    if (lp.status == SolveStatus::Unbounded) {
      best.status = SolveStatus::Unbounded;
      best.bound = kInf;
      best.wall_time_s = now_seconds() - t0;
      return best;
    }
    if (lp.status != SolveStatus::Optimal) throw solver_error("node LP did not solve to optimality");
    if (best.objective > -kInf && lp.objective <= best.objective + 1e-9 * (1 + std::abs(best.objective)))
      continue;

    // most fractional integer variable
    int branch_var = -1;
    double best_frac = tol.integrality;
    for (int j : int_vars) {
      double v = lp.x[j];
      double frac = std::min(v - std::floor(v), std::ceil(v) - v);
      if (frac > best_frac + 1e-12) {
        best_frac = frac;
        branch_var = j;
      }
    }
    if (branch_var < 0) {
      // integral: snap and accept
      for (int j : int_vars) lp.x[j] = std::round(lp.x[j]);
      if (lp.objective > best.objective) {
        best = lp;
        best.has_duals = false;
        best.duals.clear();
      }
      continue;
    }
    double v = lp.x[branch_var];
    long id1 = static_cast<long>(arena.size());
    arena.push_back({ni, branch_var, -kInf, std::floor(v), lp.objective, id1});
    open.push(static_cast<int>(id1));
    long id2 = static_cast<long>(arena.size());
    arena.push_back({ni, branch_var, std::ceil(v), kInf, lp.objective, id2});
    open.push(static_cast<int>(id2));
  }

  if (open.empty() && !hit_limit) ub_global = best.objective;

  best.nodes = nodes_done;
  best.wall_time_s = now_seconds() - t0;
  best.bound = std::max(ub_global, best.objective);
  if (best.objective <= -kInf) {
    best.status = hit_limit ? SolveStatus::Limit : SolveStatus::Infeasible;
    return best;
  }
  if (hit_limit)
    best.status = SolveStatus::Limit;
  else if (best.bound - best.objective <= 1e-9 * (1 + std::abs(best.bound)))
    best.status = SolveStatus::Optimal;
  else
    best.status = SolveStatus::FeasibleWithGap;
  return best;
}

}  // namespace cslp
