#pragma once
// Trajectory-level verification: the certified decay/gain inequality along a
// run, decay-rate fits, grid-refinement studies, the viscosity sweep of the
// interior-damped gains, and the fluid/string equivalence check.

#include <functional>
#include <string>
#include <vector>

#include "wavelab/certificates.hpp"
#include "wavelab/functionals.hpp"
#include "wavelab/model.hpp"
#include "wavelab/solver.hpp"

namespace wavelab {

struct IssCheckReport {
  bool pass = false;
  bool truncated = false;   // the trajectory aborted early
  double slack = 0.0;       // 10 (h^2 + dt^2) (1 + LHS(0)), added to the bound
  double lhs0 = 0.0;
  double sup_f = 0.0;       // running suprema at the final sample
  double sup_d = 0.0;
  double margin_min = 0.0;  // min over samples of bound + slack - LHS
  std::size_t margin_argmin = 0;
  // per-sample series, aligned with the trajectory's states
  std::vector<double> t, lhs, rhs, margin, V, E, Phi, W;
};

// Verifies LHS(t_n) <= G e^{-omega t_n} LHS(0) + gains * running sups + slack
// at every recorded sample. Variant A runs against a theorem-1 certificate;
// other variants must match the certificate's variant.
IssCheckReport check_iss(ModelVariant variant, const PhysicalParams& p, const Trajectory& traj,
                         const IssCertificate& cert);

struct DecayFit {
  double fitted_rate = 0.0;
  double certified_rate = 0.0;
  double ratio = 0.0;         // fitted / certified
  double residual_rms = 0.0;
  std::size_t samples = 0;
  bool finite_time = false;   // series fell below 1e-10 of its start
  bool valid_fit = false;     // at least 10 usable samples
  bool meets_certified = false;
};

// Log-linear least squares on the tail half of the series, truncated where
// the values vanish (finite-time decay).
DecayFit fit_decay(const std::vector<double>& t, const std::vector<double>& v,
                   double certified_rate);

struct ConvergenceCase {
  ModelVariant variant = ModelVariant::B;
  PhysicalParams params;
  InitialSpec init;
  // optional; resampled on each grid. Null means no disturbance.
  std::function<DisturbanceSpec(const Grid&)> disturbance;
  double courant = 1.0;
  double T = 1.0;
};

struct OrderRow {
  int N = 0;
  double h = 0.0;
  double err = 0.0;    // distance to the restricted finest solution at T
  double order = 0.0;  // vs the previous row; 0 for the first row
};

struct OrderTable {
  std::vector<OrderRow> rows;   // one per grid except the finest
  double observed_order = 0.0;  // least squares slope of log err vs log h
  bool exact = false;           // every error at rounding level
  int N_reference = 0;
};

// Self-convergence against the finest grid in N_list (ascending, each
// dividing the last, at least three entries).
OrderTable convergence_study(const ConvergenceCase& c, const std::vector<int>& N_list);

struct SigmaSweepRow {
  double sigma = 0.0;
  double omega = 0.0;
  double gamma = 0.0;
  double M = 0.0;
  double C1 = 0.0;
};

struct SigmaSweepReport {
  std::vector<SigmaSweepRow> rows;       // sigma strictly decreasing
  bool gamma_increasing = false;         // strictly, as sigma drops
  bool omega_decreasing = false;         // strictly, as sigma drops
  double gamma_ratio = 0.0;              // last gamma over first gamma
};

SigmaSweepReport sigma_sweep(const PhysicalParams& base, const std::vector<double>& sigmas,
                             double r);

struct EquivalenceRow {
  int N = 0;
  double discrepancy = 0.0;  // max over time of ||v - w||_2
};

struct EquivalenceReport {
  ThermoacousticParams params;
  double T = 0.0;
  std::vector<EquivalenceRow> rows;
  std::vector<double> ratios;            // discrepancy drop between rows
  std::vector<double> expected_factors;  // (h_coarse / h_fine)^2 per pair
};

// Runs the fluid system and its string twin (mu = 0) from matched initial
// data and measures how far the fluid velocity drifts from u_t.
EquivalenceReport thermoacoustic_equivalence(const ThermoacousticParams& p,
                                             const InitialSpec& init,
                                             const std::vector<int>& N_list, double courant,
                                             double T);

std::string to_json(const IssCheckReport& r, const IssCertificate& cert);
std::string to_json(const DecayFit& r);
std::string to_json(const OrderTable& r);
std::string to_json(const SigmaSweepReport& r);
std::string to_json(const EquivalenceReport& r);

}  // namespace wavelab
