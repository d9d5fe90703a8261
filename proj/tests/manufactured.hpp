#pragma once
// Closed-form decaying solutions used to verify the steppers against exact
// fields. Both cases decay like e^{-t} with profiles chosen so that every
// boundary condition holds with the stated disturbances.

#include <wavelab/grid.hpp>
#include <wavelab/model.hpp>

#include <cmath>
#include <numbers>
#include <vector>

namespace manufactured {

// Viscously damped string: u = e^{-t} sin(pi x / 2) with a distributed force
// and the matching boundary disturbance d = -a e^{-t}.
struct ViscousString {
  wavelab::PhysicalParams p;  // uses a, c, mu

  double u(double t, double x) const {
    return std::exp(-t) * std::sin(0.5 * std::numbers::pi * x);
  }
  double w(double t, double x) const { return -u(t, x); }

  wavelab::InitialData initial(const wavelab::Grid& g) const {
    wavelab::InitialData init;
    init.u0.resize(g.nodes());
    init.w0.resize(g.nodes());
    for (int i = 0; i <= g.N; ++i) {
      init.u0[i] = u(0.0, g.x(i));
      init.w0[i] = w(0.0, g.x(i));
    }
    return init;
  }

  wavelab::DisturbanceSpec disturbance(const wavelab::Grid& g) const {
    const double pi = std::numbers::pi;
    const double scale = 1.0 + 0.25 * p.c * p.c * pi * pi - p.mu;
    wavelab::DisturbanceSpec dist;
    dist.f.kind = wavelab::SpaceTimeSignal::Kind::Separable;
    dist.f.g = wavelab::exp_decay_signal(1.0, 1.0);
    dist.f.profile.resize(g.nodes());
    for (int i = 0; i <= g.N; ++i)
      dist.f.profile[i] = scale * std::sin(0.5 * pi * g.x(i));
    dist.d = wavelab::exp_decay_signal(-p.a, 1.0);
    return dist;
  }
};

// Thermal Kelvin-Voigt string: u = e^{-t} (x + x^2 + beta x^3) with the cubic
// coefficient fixed by the damped-end condition so that d = 0, and the heat
// profile solving k psi'' + psi = -lambda p' with zero endpoint values.
struct ThermalKelvinVoigt {
  wavelab::PhysicalParams p;  // uses a, c, mu, b, k, lambda, sigma; needs a != 3

  double beta() const { return (2.0 * p.a - 3.0) / (3.0 - p.a); }
  double poly(double x) const { return x + x * x + beta() * x * x * x; }
  double poly_d1(double x) const { return 1.0 + 2.0 * x + 3.0 * beta() * x * x; }
  double poly_d2(double x) const { return 2.0 + 6.0 * beta() * x; }

  double psi(double x) const {
    const double bet = beta();
    const double a2 = -3.0 * bet * p.lambda;
    const double a1 = -2.0 * p.lambda;
    const double a0 = -p.lambda - 2.0 * p.k * a2;
    const double rk = 1.0 / std::sqrt(p.k);
    const double c1 = -a0;
    const double pp1 = a0 + a1 + a2;
    const double c2 = -(pp1 + c1 * std::cos(rk)) / std::sin(rk);
    return a0 + a1 * x + a2 * x * x + c1 * std::cos(rk * x) + c2 * std::sin(rk * x);
  }
  double psi_d1(double x) const {
    const double bet = beta();
    const double a2 = -3.0 * bet * p.lambda;
    const double a1 = -2.0 * p.lambda;
    const double a0 = -p.lambda - 2.0 * p.k * a2;
    const double rk = 1.0 / std::sqrt(p.k);
    const double c1 = -a0;
    const double pp1 = a0 + a1 + a2;
    const double c2 = -(pp1 + c1 * std::cos(rk)) / std::sin(rk);
    return a1 + 2.0 * a2 * x - c1 * rk * std::sin(rk * x) + c2 * rk * std::cos(rk * x);
  }

  double u(double t, double x) const { return std::exp(-t) * poly(x); }
  double w(double t, double x) const { return -u(t, x); }
  double theta(double t, double x) const { return std::exp(-t) * psi(x); }

  wavelab::InitialData initial(const wavelab::Grid& g) const {
    wavelab::InitialData init;
    init.u0.resize(g.nodes());
    init.w0.resize(g.nodes());
    init.theta0.resize(g.nodes());
    for (int i = 0; i <= g.N; ++i) {
      init.u0[i] = u(0.0, g.x(i));
      init.w0[i] = w(0.0, g.x(i));
      init.theta0[i] = theta(0.0, g.x(i));
    }
    return init;
  }

  // f = e^{-t} [ (1 - mu) p + (sigma - c^2) p'' + b psi' ], d = 0
  wavelab::DisturbanceSpec disturbance(const wavelab::Grid& g) const {
    wavelab::DisturbanceSpec dist;
    dist.f.kind = wavelab::SpaceTimeSignal::Kind::Separable;
    dist.f.g = wavelab::exp_decay_signal(1.0, 1.0);
    dist.f.profile.resize(g.nodes());
    for (int i = 0; i <= g.N; ++i) {
      const double x = g.x(i);
      dist.f.profile[i] = (1.0 - p.mu) * poly(x) +
                          (p.sigma - p.c * p.c) * poly_d2(x) + p.b * psi_d1(x);
    }
    return dist;
  }

  // Matching fluid fields: v = -e^{-t} p, rho = -gamma e^{-t} p', theta as
  // above; only the momentum equation needs a source.
  wavelab::ThermoInitialData thermo_initial(const wavelab::ThermoacousticParams& tp,
                                            const wavelab::Grid& g) const {
    wavelab::ThermoInitialData init;
    init.rho0.resize(g.nodes());
    init.v0.resize(g.nodes());
    init.theta0.resize(g.nodes());
    for (int i = 0; i <= g.N; ++i) {
      const double x = g.x(i);
      init.rho0[i] = -tp.gamma_fluid * poly_d1(x);
      init.v0[i] = -poly(x);
      init.theta0[i] = psi(x);
    }
    return init;
  }

  double rho_exact(const wavelab::ThermoacousticParams& tp, double t, double x) const {
    return -tp.gamma_fluid * std::exp(-t) * poly_d1(x);
  }
  double v_exact(double t, double x) const { return -std::exp(-t) * poly(x); }

  // s_v = e^{-t} [ p - (c^2 - sigma) p'' + b psi' ]
  wavelab::SpaceTimeSignal momentum_source(const wavelab::ThermoacousticParams& tp,
                                           const wavelab::Grid& g) const {
    wavelab::SpaceTimeSignal s;
    s.kind = wavelab::SpaceTimeSignal::Kind::Separable;
    s.g = wavelab::exp_decay_signal(1.0, 1.0);
    s.profile.resize(g.nodes());
    for (int i = 0; i <= g.N; ++i) {
      const double x = g.x(i);
      s.profile[i] =
          poly(x) - (tp.c * tp.c - tp.sigma) * poly_d2(x) + tp.b * psi_d1(x);
    }
    return s;
  }
};

}  // namespace manufactured
