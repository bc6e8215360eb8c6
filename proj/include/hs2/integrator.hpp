#pragma once

// Method-of-lines pseudospectral integrator for the weak form of the system
// and for its zero-mean restricted variant. Independent of the closed-form
// solutions, so the two can validate each other.

#include <vector>

#include "hs2/geodesics.hpp"

namespace hs2 {

struct IntegratorConfig {
  double dt = 5e-4;
  double t_end = 1.0;
  bool dealias = true;
  int record_every = 1;
  /// Integration stops once sup|u_x| exceeds this (or turns non-finite).
  double blowup_threshold = 1e6;
  bool restricted = false;

  void validate() const;
};

struct StepLog {
  double t;
  double energy;  // c(t)^2 = 1/4 int (u_x^2 + rho^2)
  double mean_rho;
  double sup_ux;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<TangentVector> states;
  std::vector<StepLog> log;
  /// True if the run stopped early because sup|u_x| crossed the threshold.
  bool halted = false;
  /// Last time whose state passed the threshold check.
  double last_stable_time = 0.0;
};

/// u_t = -u u_x - 1/2 A^{-1} d_x (u_x^2 + rho^2), rho_t = -(rho u)_x.
TangentVector rhs(const TangentVector& state, bool dealias = true);
/// Same with rho replaced by its zero-mean projection; the returned rho_t has
/// zero mean.
TangentVector rhs_restricted(const TangentVector& state, bool dealias = true);

double energy(const TangentVector& state, bool restricted = false);

Trajectory integrate(const InitialData& d, const IntegratorConfig& cfg);

}  // namespace hs2
