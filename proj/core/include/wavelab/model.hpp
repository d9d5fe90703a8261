#pragma once
// Problem descriptions: model variants, physical parameters, disturbance
// signals, initial data and its presets, and the validation pass that
// collects every violation instead of stopping at the first.

#include <string>
#include <vector>

#include "wavelab/grid.hpp"

namespace wavelab {

// String models share the boundary conditions u(t,0) = 0 and
// u_x(t,1) = -a u_t(t,1) + d(t) and differ in the retained damping terms:
//   A  plain wave equation, boundary damper only, no inputs
//   B  distributed viscous damping -mu u_t, inputs f and d
//   C  viscous damping plus a heat field coupled through -b theta_x,
//      inputs f and d
//   D  viscous and thermal damping plus interior viscosity sigma u_xxt,
//      input f only
// Thermoacoustic is the first-order (rho, v, theta) fluid system whose
// velocity matches u_t of variant D with mu = 0.
enum class ModelVariant { A, B, C, D, Thermoacoustic };

const char* variant_name(ModelVariant v);

struct PhysicalParams {
  double a = 1.0;       // boundary damper gain
  double c = 1.0;       // wave speed
  double mu = 0.0;      // distributed viscous damping
  double b = 1.0;       // pressure-temperature coupling
  double k = 1.0;       // heat diffusivity
  double lambda = 1.0;  // strain-rate source in the heat equation
  double sigma = 0.0;   // interior (strain-rate) viscosity
};

struct ThermoacousticParams {
  double a = 1.0;  // boundary damper gain on the velocity
  double c = 1.0;  // sound speed
  double gamma_fluid = 1.4;
  double b = 1.0;
  double k = 1.0;
  double lambda = 1.0;
  double sigma = 0.5;
};

// ---------------------------------------------------------------------------
// signals

enum class TimeSignalKind { Zero, Constant, Sinusoid, Pulse, ExpDecay, Tabulated };

struct TimeSignal {
  TimeSignalKind kind = TimeSignalKind::Zero;
  double amplitude = 0.0;
  double frequency = 0.0;  // cycles per unit time
  double phase = 0.0;
  double rate = 0.0;       // decay rate of ExpDecay
  // optional support window; outside it the signal is 0 (Tabulated ignores it)
  double support_begin = 0.0;
  double support_end = 0.0;
  bool windowed = false;
  // Tabulated: piecewise-linear samples; evaluation outside the covered time
  // range is an error
  std::vector<double> times;
  std::vector<double> values;
};

TimeSignal zero_signal();
TimeSignal constant_signal(double value);
TimeSignal sinusoid_signal(double amplitude, double frequency, double phase = 0.0);
TimeSignal pulse_signal(double amplitude, double t_begin, double t_end);
TimeSignal exp_decay_signal(double amplitude, double rate);
TimeSignal tabulated_signal(std::vector<double> times, std::vector<double> values);

double eval(const TimeSignal& s, double t);
bool is_zero(const TimeSignal& s);

struct SpaceTimeSignal {
  enum class Kind { Zero, Separable, Tabulated };
  Kind kind = Kind::Zero;
  // Separable: g(t) * profile[i] with one profile sample per grid node
  TimeSignal g;
  std::vector<double> profile;
  // Tabulated: nodal frames linearly interpolated in time
  std::vector<double> times;
  std::vector<std::vector<double>> frames;
};

bool is_zero(const SpaceTimeSignal& f);

struct DisturbanceSpec {
  SpaceTimeSignal f;  // distributed force in the momentum equation
  TimeSignal d;       // boundary-slope disturbance
};

struct DisturbanceSample {
  std::vector<double> f_nodes;
  double d_value = 0.0;
};

// deterministic: equal inputs give bit-identical samples
DisturbanceSample eval_disturbance(const DisturbanceSpec& spec, double t, const Grid& g);

// ---------------------------------------------------------------------------
// initial data

struct InitialData {
  std::vector<double> u0;
  std::vector<double> w0;      // u_t at t = 0
  std::vector<double> theta0;  // empty for variants A and B
};

struct ThermoInitialData {
  std::vector<double> rho0;
  std::vector<double> v0;
  std::vector<double> theta0;
};

struct ProfileSpec {
  enum class Kind { Zero, Sine, QuarterSine, Gaussian, Polynomial, Samples };
  Kind kind = Kind::Zero;
  double amplitude = 1.0;
  int mode = 1;            // Sine: sin(mode pi x); QuarterSine: sin((2 mode - 1) pi x / 2)
  double center = 0.5;     // Gaussian
  double width = 0.1;      // Gaussian
  std::vector<double> coefficients;  // Polynomial, ascending powers
  std::vector<double> samples;       // Samples, one per node
};

std::vector<double> sample_profile(const ProfileSpec& p, const Grid& g);

struct InitialSpec {
  ProfileSpec u0;
  ProfileSpec w0;
  ProfileSpec theta0;
};

// Samples profiles on the grid. Analytic kinds get the constrained nodes
// pinned exactly (u0, w0 at x=0; theta0 at both ends); Samples data is taken
// verbatim so that validation can flag it.
InitialData make_initial_data(const InitialSpec& spec, ModelVariant variant, const Grid& g);

// v0 = w0, rho0 = -gamma_fluid * u0_x, shared theta0
ThermoInitialData thermo_initial_from_string(const InitialData& init,
                                             const ThermoacousticParams& p,
                                             const Grid& g);

// ---------------------------------------------------------------------------
// validation

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

ValidationReport validate(ModelVariant variant, const PhysicalParams& p,
                          const DisturbanceSpec& dist, const InitialData& init,
                          const Grid& g);

ValidationReport validate(const ThermoacousticParams& p, const ThermoInitialData& init,
                          const Grid& g);

}  // namespace wavelab
