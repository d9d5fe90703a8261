#pragma once
// Implicit trapezoidal time stepping for the string variants and the
// thermoacoustic system. Each stepper assembles the banded step operator
// once per (variant, parameters, grid, dt) and reuses the factorization
// across steps.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "wavelab/grid.hpp"
#include "wavelab/model.hpp"

namespace wavelab {

struct StringState {
  double t = 0.0;
  std::vector<double> u;
  std::vector<double> w;      // u_t
  std::vector<double> theta;  // empty for variants A and B
};

struct ThermoState {
  double t = 0.0;
  std::vector<double> rho;
  std::vector<double> v;
  std::vector<double> theta;
};

struct Trajectory {
  ModelVariant variant = ModelVariant::A;
  Grid grid{8};
  double dt = 0.0;
  double time_remainder = 0.0;  // |T - steps * dt|
  std::vector<StringState> states;
  // disturbance record, aligned with states: ||f(t_n)||_2 and |d(t_n)|
  std::vector<double> f_l2;
  std::vector<double> d_abs;
  bool aborted = false;
  std::size_t last_healthy = 0;
  std::string abort_reason;
};

struct ThermoTrajectory {
  Grid grid{8};
  double dt = 0.0;
  double time_remainder = 0.0;
  std::vector<ThermoState> states;
  bool aborted = false;
  std::size_t last_healthy = 0;
  std::string abort_reason;
};

// dt giving the requested Courant number at wave speed c
double default_dt(const Grid& g, double c, double courant = 1.0);

class StringStepper {
 public:
  StringStepper(ModelVariant variant, const PhysicalParams& p, const Grid& g, double dt);
  ~StringStepper();
  StringStepper(StringStepper&&) noexcept;
  StringStepper& operator=(StringStepper&&) noexcept;

  // advances by dt; the disturbance is sampled at both endpoints of the step
  StringState step(const StringState& s, const DisturbanceSpec& dist) const;

  const Grid& grid() const;
  double dt() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

class ThermoStepper {
 public:
  ThermoStepper(const ThermoacousticParams& p, const Grid& g, double dt);
  ~ThermoStepper();
  ThermoStepper(ThermoStepper&&) noexcept;
  ThermoStepper& operator=(ThermoStepper&&) noexcept;

  // momentum_source feeds the velocity equation; pass a Zero signal for the
  // plain system
  ThermoState step(const ThermoState& s, const SpaceTimeSignal& momentum_source) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// single step without a reusable stepper
StringState step(ModelVariant variant, const PhysicalParams& p, const Grid& g,
                 const StringState& s, const DisturbanceSpec& dist, double dt);

// Integrates to T = round(T/dt) steps of size dt. A non-finite state aborts
// the run; the trajectory keeps every healthy state and records the abort.
Trajectory run(ModelVariant variant, const PhysicalParams& p, const Grid& g,
               const InitialData& init, const DisturbanceSpec& dist, double dt, double T);

ThermoTrajectory run_thermo(const ThermoacousticParams& p, const Grid& g,
                            const ThermoInitialData& init, double dt, double T,
                            const SpaceTimeSignal& momentum_source = {});

}  // namespace wavelab
