#pragma once

#include <cmath>
#include <vector>

#include "cslp/model.hpp"

namespace cslp {

// Dense bounded-variable primal simplex with a composite (artificial-free)
// phase 1. Sized for the desk-scale LPs this toolkit produces; every pivot
// choice is index-tie-broken so repeated solves are bit-identical.
//
// Duals follow the maximization convention: <= rows get y >= 0, >= rows get
// y <= 0, equalities are free, and strong duality holds at optimality.
class Simplex {
 public:
  struct Options {
    double feas_tol = 1e-7;
    double opt_tol = 1e-7;
    long max_iters = 200000;
  };

  explicit Simplex(Options opt = {}) : opt_(opt) {}

  SolveResult solve(const LinearModel& model) {
    init(model);
    SolveResult res;
    // phase 1: drive basic bound violations to zero
    if (!run(true)) {
      res.status = iter_limit_ ? SolveStatus::Limit : SolveStatus::Infeasible;
      return res;
    }
    // phase 2: optimize
    if (!run(false)) {
      if (iter_limit_) {
        res.status = SolveStatus::Limit;
        return res;
      }
      res.status = SolveStatus::Unbounded;
      res.bound = kInf;
      return res;
    }
    res.status = SolveStatus::Optimal;
    res.x.assign(x_.begin(), x_.begin() + n_);
    res.duals = compute_duals();
    res.has_duals = true;
    res.objective = 0;
    for (int j = 0; j < n_; ++j) res.objective += c_[j] * x_[j];
    res.bound = res.objective;
    return res;
  }

 private:
  enum VStat : char { Basic, AtLower, AtUpper, FreeNB };

  Options opt_;
  int n_ = 0, m_ = 0, ncols_ = 0;
  std::vector<double> c_, lb_, ub_, x_;
  std::vector<double> tab_;  // m x ncols, row-major: B^{-1}[A | I]
  std::vector<double> rhs_;  // original b
  std::vector<int> basis_;   // column basic in each row
  std::vector<VStat> stat_;
  bool iter_limit_ = false;
  long iters_ = 0;
  long degen_streak_ = 0;

  double& T(int i, int j) { return tab_[static_cast<std::size_t>(i) * ncols_ + j]; }
  double Tv(int i, int j) const { return tab_[static_cast<std::size_t>(i) * ncols_ + j]; }

  void init(const LinearModel& model) {
    n_ = model.num_vars();
    m_ = model.num_cons();
    ncols_ = n_ + m_;
    c_.assign(ncols_, 0.0);
    lb_.assign(ncols_, 0.0);
    ub_.assign(ncols_, kInf);
    for (int j = 0; j < n_; ++j) {
      c_[j] = model.obj[j];
      lb_[j] = model.vars[j].lb;
      ub_[j] = model.vars[j].ub;
    }
    for (int i = 0; i < m_; ++i) {
      int s = n_ + i;
      switch (model.cons[i].sense) {
        case Sense::LE: lb_[s] = 0, ub_[s] = kInf; break;
        case Sense::GE: lb_[s] = -kInf, ub_[s] = 0; break;
        case Sense::EQ: lb_[s] = 0, ub_[s] = 0; break;
      }
    }
    tab_.assign(static_cast<std::size_t>(m_) * ncols_, 0.0);
    rhs_.assign(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (const auto& t : model.cons[i].terms) T(i, t.var) += t.coef;
      T(i, n_ + i) = 1.0;
      rhs_[i] = model.cons[i].rhs;
    }
    basis_.resize(m_);
    stat_.assign(ncols_, AtLower);
    x_.assign(ncols_, 0.0);
    for (int j = 0; j < ncols_; ++j) {
      if (std::isfinite(lb_[j])) {
        stat_[j] = AtLower;
        x_[j] = lb_[j];
      } else if (std::isfinite(ub_[j])) {
        stat_[j] = AtUpper;
        x_[j] = ub_[j];
      } else {
        stat_[j] = FreeNB;
        x_[j] = 0.0;
      }
    }
    for (int i = 0; i < m_; ++i) {
      basis_[i] = n_ + i;
      stat_[n_ + i] = Basic;
    }
    refresh_basics();
    iter_limit_ = false;
    iters_ = 0;
    degen_streak_ = 0;
  }

  // x_B = B^{-1} b - sum_j nonbasic T[:,j] x_j
  void refresh_basics() {
    std::vector<double> v(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      double s = 0;
      for (int k = 0; k < m_; ++k) s += Tv(i, n_ + k) * rhs_[k];
      v[i] = s;
    }
    for (int j = 0; j < ncols_; ++j) {
      if (stat_[j] == Basic || x_[j] == 0.0) continue;
      for (int i = 0; i < m_; ++i) v[i] -= Tv(i, j) * x_[j];
    }
    for (int i = 0; i < m_; ++i) x_[basis_[i]] = v[i];
  }

  double infeasibility() const {
    double f = 0;
    for (int i = 0; i < m_; ++i) {
      double v = x_[basis_[i]];
      if (v < lb_[basis_[i]] - opt_.feas_tol) f += lb_[basis_[i]] - v;
      if (v > ub_[basis_[i]] + opt_.feas_tol) f += v - ub_[basis_[i]];
    }
    return f;
  }

  // phase1: minimize infeasibility; phase2: maximize c'x.
  // Returns true on success (feasible / optimal), false on failure.
  bool run(bool phase1) {
    std::vector<double> price(m_);
    for (;; ++iters_) {
      if (iters_ > opt_.max_iters) {
        iter_limit_ = true;
        return false;
      }
      if ((iters_ & 63) == 63) refresh_basics();

      if (phase1 && infeasibility() <= opt_.feas_tol) return true;

      // price vector: phase1 uses the infeasibility gradient, phase2 c_B
      for (int i = 0; i < m_; ++i) {
        int bj = basis_[i];
        if (phase1) {
          double v = x_[bj];
          price[i] = (v < lb_[bj] - opt_.feas_tol) ? -1.0 : (v > ub_[bj] + opt_.feas_tol) ? 1.0 : 0.0;
        } else {
          price[i] = c_[bj];
        }
      }

      const bool bland = degen_streak_ > 200;
      int enter = -1, dir = 0;
      double best = 0;
      for (int j = 0; j < ncols_; ++j) {
        if (stat_[j] == Basic) continue;
        if (lb_[j] == ub_[j]) continue;  // fixed
        double d = 0;
        for (int i = 0; i < m_; ++i) d += price[i] * Tv(i, j);
        if (!phase1) d = c_[j] - d;  // reduced cost
        else d = -d;                 // phase1: df/dx_j = sigma^T(-T_j)
        // increasing x_j changes objective by +d (phase2) or f by +d (phase1)
        double gain = 0;
        int jdir = 0;
        if ((stat_[j] == AtLower || stat_[j] == FreeNB)) {
          double g = phase1 ? -d : d;  // want f down / obj up
          if (g > opt_.opt_tol && g > gain) {
            gain = g;
            jdir = +1;
          }
        }
        if ((stat_[j] == AtUpper || stat_[j] == FreeNB)) {
          double g = phase1 ? d : -d;
          if (g > opt_.opt_tol && g > gain) {
            gain = g;
            jdir = -1;
          }
        }
        if (jdir != 0) {
          if (bland) {
            enter = j;
            dir = jdir;
            break;
          }
          if (gain > best + 1e-12) {
            best = gain;
            enter = j;
            dir = jdir;
          }
        }
      }
      if (enter < 0) {
        if (phase1) return infeasibility() <= opt_.feas_tol;
        return true;  // optimal
      }

      // ratio test
      double theta = kInf;
      int leave_row = -1;
      double leave_pivot = 0;
      int leave_to = 0;  // -1: leaves to its lb; +1: to its ub
      // entering's own range (bound flip)
      if (std::isfinite(lb_[enter]) && std::isfinite(ub_[enter])) theta = ub_[enter] - lb_[enter];
      for (int i = 0; i < m_; ++i) {
        double alpha = Tv(i, enter) * dir;  // x_Bi moves by -alpha * step
        if (std::abs(alpha) < 1e-11) continue;
        int bj = basis_[i];
        double v = x_[bj];
        double ti = kInf;
        int to = 0;
        if (phase1 && v < lb_[bj] - opt_.feas_tol) {
          // infeasible below: blocks only when rising to its lower bound
          if (alpha < 0) {
            ti = (lb_[bj] - v) / (-alpha);
            to = -1;
          }
        } else if (phase1 && v > ub_[bj] + opt_.feas_tol) {
          if (alpha > 0) {
            ti = (v - ub_[bj]) / alpha;
            to = +1;
          }
        } else {
          if (alpha > 0 && std::isfinite(lb_[bj])) {
            ti = (v - lb_[bj]) / alpha;
            to = -1;
          } else if (alpha < 0 && std::isfinite(ub_[bj])) {
            ti = (ub_[bj] - v) / (-alpha);
            to = +1;
          }
        }
        if (ti < -1e-12) ti = 0;
        if (to == 0 || !std::isfinite(ti)) continue;
        bool take = false;
        if (ti < theta - 1e-9) {
          take = true;  // strictly earlier block
        } else if (leave_row >= 0 && ti <= theta + 1e-9) {
          // tie: Bland wants the lowest basis index, otherwise the largest pivot
          take = bland ? basis_[i] < basis_[leave_row]
                       : std::abs(alpha) > std::abs(leave_pivot) + 1e-12;
        }
        if (take) {
          theta = std::max(0.0, std::min(theta, ti));
          leave_row = i;
          leave_pivot = alpha;
          leave_to = to;
        }
      }

      if (!std::isfinite(theta)) {
        if (phase1) return false;  // cannot happen with consistent pricing
        return false;              // unbounded
      }

      degen_streak_ = (theta <= 1e-10) ? degen_streak_ + 1 : 0;

      if (leave_row < 0) {
        // bound flip
        x_[enter] = (dir > 0) ? ub_[enter] : lb_[enter];
        stat_[enter] = (dir > 0) ? AtUpper : AtLower;
        update_basics(enter, dir, theta);
        continue;
      }

      // move entering, update basics, pivot
      x_[enter] += dir * theta;
      update_basics(enter, dir, theta);
      int leave_col = basis_[leave_row];
      // snap leaving variable onto the bound it reached
      x_[leave_col] = (leave_to > 0) ? ub_[leave_col] : lb_[leave_col];
      stat_[leave_col] = (leave_to > 0) ? AtUpper : AtLower;
      if (lb_[leave_col] == ub_[leave_col]) stat_[leave_col] = AtLower;
      pivot(leave_row, enter);
      basis_[leave_row] = enter;
      stat_[enter] = Basic;
    }
  }

  void update_basics(int enter, int dir, double theta) {
    if (theta == 0) return;
    for (int i = 0; i < m_; ++i) {
      double alpha = Tv(i, enter) * dir;
      if (alpha != 0) x_[basis_[i]] -= alpha * theta;
    }
  }

  void pivot(int r, int q) {
    double piv = T(r, q);
    double inv = 1.0 / piv;
    for (int j = 0; j < ncols_; ++j) T(r, j) *= inv;
    T(r, q) = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double f = T(i, q);
      if (f == 0) continue;
      for (int j = 0; j < ncols_; ++j) T(i, j) -= f * T(r, j);
      T(i, q) = 0.0;
    }
  }

  std::vector<double> compute_duals() {
    // y = c_B^T B^{-1}; B^{-1} sits in the slack columns
    std::vector<double> y(m_, 0.0);
    for (int k = 0; k < m_; ++k) {
      double cb = c_[basis_[k]];
      if (cb == 0) continue;
      for (int i = 0; i < m_; ++i) y[i] += cb * Tv(k, n_ + i);
    }
    return y;
  }
};

// Backend contract: LP with duals required, MIP optional (branch-and-bound in
// solve.hpp covers it for any backend that does LPs).
struct SolverOracle {
  virtual ~SolverOracle() = default;
  virtual SolveResult solve_lp(const LinearModel& model) = 0;
  virtual const char* name() const = 0;
};

struct SimplexOracle final : SolverOracle {
  Simplex::Options options;
  SolveResult solve_lp(const LinearModel& model) override {
    Simplex s(options);
    return s.solve(model);
  }
  const char* name() const override { return "simplex"; }
};

}  // namespace cslp
