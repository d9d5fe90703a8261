#include "wavelab/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "banded.hpp"

namespace wavelab {

double default_dt(const Grid& g, double c, double courant) {
  if (!(c > 0.0) || !(courant > 0.0))
    throw std::invalid_argument("default_dt: c and courant must be positive");
  return courant * g.h / c;
}

namespace {

bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

// Shared trapezoidal-step core: holds A = M - dt/2 L factored, B = M + dt/2 L
// with the constraint rows zeroed so their right-hand side stays 0.
struct StepCore {
  int n = 0;
  BandMat B;
  BandLU lu;

  StepCore(int n_, int band) : n(n_), B(n_, band, band) {}

  void finish(BandMat& A, const std::vector<int>& constraint_rows) {
    for (int r : constraint_rows) {
      A.clear_row(r);
      A.at(r, r) = 1.0;
      B.clear_row(r);
    }
    lu.factor(A);
  }

  // y1 = A^{-1} (B y0 + rhs_extra)
  void advance(const std::vector<double>& y0, std::vector<double>& rhs_extra) const {
    std::vector<double> rhs(n);
    B.matvec(y0, rhs);
    for (int i = 0; i < n; ++i) rhs_extra[i] += rhs[i];
    lu.solve(rhs_extra);
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// string stepper

struct StringStepper::Impl {
  ModelVariant variant;
  PhysicalParams p;
  Grid g;
  double dt;
  bool thermal;
  int nvar;  // unknowns per node
  StepCore core;

  Impl(ModelVariant variant_, const PhysicalParams& p_, const Grid& g_, double dt_)
      : variant(variant_),
        p(p_),
        g(g_),
        dt(dt_),
        thermal(variant_ == ModelVariant::C || variant_ == ModelVariant::D),
        nvar(thermal ? 3 : 2),
        core(nvar * g_.nodes(), 2 * nvar - 1) {
    if (variant_ == ModelVariant::Thermoacoustic)
      throw std::invalid_argument("StringStepper: use ThermoStepper for the fluid system");
    if (!(dt_ > 0.0) || !std::isfinite(dt_))
      throw std::invalid_argument("StringStepper: dt must be positive and finite");
    assemble();
  }

  int iu(int i) const { return nvar * i; }
  int iw(int i) const { return nvar * i + 1; }
  int ith(int i) const { return nvar * i + 2; }

  void assemble() {
    const int N = g.N;
    const double h = g.h;
    const double c2 = p.c * p.c;
    const double mu = variant == ModelVariant::A ? 0.0 : p.mu;
    const double sig = variant == ModelVariant::D ? p.sigma : 0.0;
    const int band = 2 * nvar - 1;

    BandMat A(core.n, band, band);
    auto addL = [&](int i, int j, double v) {
      A.add(i, j, -0.5 * dt * v);
      core.B.add(i, j, 0.5 * dt * v);
    };
    auto addM = [&](int i, double v) {
      A.add(i, i, v);
      core.B.add(i, i, v);
    };

    // mass: identity, except the damper row of variant D where the interior
    // viscosity ghost contributes 2 a sigma / h
    for (int i = 0; i < core.n; ++i) addM(i, 1.0);
    if (sig != 0.0) addM(iw(N), 2.0 * p.a * sig / h);

    // u_t = w
    for (int i = 1; i <= N; ++i) addL(iu(i), iw(i), 1.0);

    // momentum rows
    const double invh2 = 1.0 / (h * h);
    const double inv2h = 1.0 / (2.0 * h);
    for (int i = 1; i < N; ++i) {
      const int r = iw(i);
      addL(r, iu(i - 1), c2 * invh2);
      addL(r, iu(i), -2.0 * c2 * invh2);
      addL(r, iu(i + 1), c2 * invh2);
      if (sig != 0.0) {
        addL(r, iw(i - 1), sig * invh2);
        addL(r, iw(i), -2.0 * sig * invh2);
        addL(r, iw(i + 1), sig * invh2);
      }
      if (mu != 0.0) addL(r, iw(i), -mu);
      if (thermal) {
        addL(r, ith(i + 1), -p.b * inv2h);
        addL(r, ith(i - 1), p.b * inv2h);
      }
    }
    {
      // damper row: ghost nodes eliminated against u_x(1) = -a w(1) + d and,
      // for the interior viscosity, its time derivative
      const int r = iw(N);
      addL(r, iu(N - 1), 2.0 * c2 * invh2);
      addL(r, iu(N), -2.0 * c2 * invh2);
      addL(r, iw(N), -2.0 * p.a * c2 / h);
      if (sig != 0.0) {
        addL(r, iw(N - 1), 2.0 * sig * invh2);
        addL(r, iw(N), -2.0 * sig * invh2);
      }
      if (mu != 0.0) addL(r, iw(N), -mu);
      if (thermal) {
        addL(r, ith(N - 2), -p.b * inv2h);
        addL(r, ith(N - 1), 4.0 * p.b * inv2h);
        addL(r, ith(N), -3.0 * p.b * inv2h);
      }
    }

    // heat rows
    if (thermal) {
      for (int i = 1; i < N; ++i) {
        const int r = ith(i);
        addL(r, ith(i - 1), p.k * invh2);
        addL(r, ith(i), -2.0 * p.k * invh2);
        addL(r, ith(i + 1), p.k * invh2);
        addL(r, iw(i + 1), -p.lambda * inv2h);
        addL(r, iw(i - 1), p.lambda * inv2h);
      }
    }

    std::vector<int> constraints = {iu(0), iw(0)};
    if (thermal) {
      constraints.push_back(ith(0));
      constraints.push_back(ith(N));
    }
    core.finish(A, constraints);
  }

  void pack(const StringState& s, std::vector<double>& y) const {
    const int n = g.nodes();
    y.resize(core.n);
    for (int i = 0; i < n; ++i) {
      y[iu(i)] = s.u[i];
      y[iw(i)] = s.w[i];
      if (thermal) y[ith(i)] = s.theta[i];
    }
  }

  void add_source(double t, const DisturbanceSpec& dist, double scale,
                  std::vector<double>& rhs) const {
    auto sample = eval_disturbance(dist, t, g);
    const int N = g.N;
    for (int i = 1; i <= N; ++i) rhs[iw(i)] += scale * sample.f_nodes[i];
    rhs[iw(N)] += scale * 2.0 * p.c * p.c / g.h * sample.d_value;
  }

  StringState do_step(const StringState& s, const DisturbanceSpec& dist) const {
    const int n = g.nodes();
    if (static_cast<int>(s.u.size()) != n || static_cast<int>(s.w.size()) != n ||
        (thermal && static_cast<int>(s.theta.size()) != n) || (!thermal && !s.theta.empty()))
      throw std::invalid_argument("StringStepper::step: state shape does not match variant/grid");

    std::vector<double> y;
    pack(s, y);
    std::vector<double> extra(core.n, 0.0);
    add_source(s.t, dist, 0.5 * dt, extra);
    add_source(s.t + dt, dist, 0.5 * dt, extra);
    for (int r : {iu(0), iw(0)}) extra[r] = 0.0;
    if (thermal) extra[ith(0)] = extra[ith(g.N)] = 0.0;
    core.advance(y, extra);

    StringState out;
    out.t = s.t + dt;
    out.u.resize(n);
    out.w.resize(n);
    if (thermal) out.theta.resize(n);
    for (int i = 0; i < n; ++i) {
      out.u[i] = extra[iu(i)];
      out.w[i] = extra[iw(i)];
      if (thermal) out.theta[i] = extra[ith(i)];
    }
    return out;
  }
};

StringStepper::StringStepper(ModelVariant variant, const PhysicalParams& p, const Grid& g,
                             double dt)
    : impl_(std::make_unique<Impl>(variant, p, g, dt)) {}
StringStepper::~StringStepper() = default;
StringStepper::StringStepper(StringStepper&&) noexcept = default;
StringStepper& StringStepper::operator=(StringStepper&&) noexcept = default;

StringState StringStepper::step(const StringState& s, const DisturbanceSpec& dist) const {
  return impl_->do_step(s, dist);
}
const Grid& StringStepper::grid() const { return impl_->g; }
double StringStepper::dt() const { return impl_->dt; }

// ---------------------------------------------------------------------------
// thermoacoustic stepper

struct ThermoStepper::Impl {
  ThermoacousticParams p;
  Grid g;
  double dt;
  StepCore core;

  static constexpr int nvar = 3;
  int ir(int i) const { return nvar * i; }
  int iv(int i) const { return nvar * i + 1; }
  int ith(int i) const { return nvar * i + 2; }

  Impl(const ThermoacousticParams& p_, const Grid& g_, double dt_)
      : p(p_), g(g_), dt(dt_), core(nvar * g_.nodes(), 2 * nvar + 1) {
    if (!(dt_ > 0.0) || !std::isfinite(dt_))
      throw std::invalid_argument("ThermoStepper: dt must be positive and finite");
    assemble();
  }

  void assemble() {
    const int N = g.N;
    const double h = g.h;
    const double invh2 = 1.0 / (h * h);
    const double inv2h = 1.0 / (2.0 * h);
    const double pg = p.c * p.c / p.gamma_fluid;
    const int band = 2 * nvar + 1;

    BandMat A(core.n, band, band);
    auto addL = [&](int i, int j, double v) {
      A.add(i, j, -0.5 * dt * v);
      core.B.add(i, j, 0.5 * dt * v);
    };
    auto addM = [&](int i, double v) {
      A.add(i, i, v);
      core.B.add(i, i, v);
    };

    for (int i = 0; i < core.n; ++i) addM(i, 1.0);
    addM(iv(N), 2.0 * p.a * p.sigma / h);

    // mass rows: rho_t = -gamma v_x at every node, one-sided at the ends
    addL(ir(0), iv(0), 3.0 * p.gamma_fluid * inv2h);
    addL(ir(0), iv(1), -4.0 * p.gamma_fluid * inv2h);
    addL(ir(0), iv(2), p.gamma_fluid * inv2h);
    for (int i = 1; i < N; ++i) {
      addL(ir(i), iv(i + 1), -p.gamma_fluid * inv2h);
      addL(ir(i), iv(i - 1), p.gamma_fluid * inv2h);
    }
    addL(ir(N), iv(N), -3.0 * p.gamma_fluid * inv2h);
    addL(ir(N), iv(N - 1), 4.0 * p.gamma_fluid * inv2h);
    addL(ir(N), iv(N - 2), -p.gamma_fluid * inv2h);

    // momentum rows
    for (int i = 1; i < N; ++i) {
      const int r = iv(i);
      addL(r, ir(i + 1), -pg * inv2h);
      addL(r, ir(i - 1), pg * inv2h);
      addL(r, ith(i + 1), -p.b * inv2h);
      addL(r, ith(i - 1), p.b * inv2h);
      addL(r, iv(i - 1), p.sigma * invh2);
      addL(r, iv(i), -2.0 * p.sigma * invh2);
      addL(r, iv(i + 1), p.sigma * invh2);
    }
    {
      // damper row: viscous ghost eliminated against v_x(1) = -a v_t(1)
      const int r = iv(N);
      addL(r, ir(N), -3.0 * pg * inv2h);
      addL(r, ir(N - 1), 4.0 * pg * inv2h);
      addL(r, ir(N - 2), -pg * inv2h);
      addL(r, ith(N), -3.0 * p.b * inv2h);
      addL(r, ith(N - 1), 4.0 * p.b * inv2h);
      addL(r, ith(N - 2), -p.b * inv2h);
      addL(r, iv(N - 1), 2.0 * p.sigma * invh2);
      addL(r, iv(N), -2.0 * p.sigma * invh2);
    }

    // heat rows
    for (int i = 1; i < N; ++i) {
      const int r = ith(i);
      addL(r, ith(i - 1), p.k * invh2);
      addL(r, ith(i), -2.0 * p.k * invh2);
      addL(r, ith(i + 1), p.k * invh2);
      addL(r, iv(i + 1), -p.lambda * inv2h);
      addL(r, iv(i - 1), p.lambda * inv2h);
    }

    core.finish(A, {iv(0), ith(0), ith(N)});
  }

  ThermoState do_step(const ThermoState& s, const SpaceTimeSignal& source) const {
    const int n = g.nodes();
    if (static_cast<int>(s.rho.size()) != n || static_cast<int>(s.v.size()) != n ||
        static_cast<int>(s.theta.size()) != n)
      throw std::invalid_argument("ThermoStepper::step: state shape does not match grid");

    std::vector<double> y(core.n);
    for (int i = 0; i < n; ++i) {
      y[ir(i)] = s.rho[i];
      y[iv(i)] = s.v[i];
      y[ith(i)] = s.theta[i];
    }
    std::vector<double> extra(core.n, 0.0);
    if (source.kind != SpaceTimeSignal::Kind::Zero) {
      DisturbanceSpec wrap;
      wrap.f = source;
      auto s0 = eval_disturbance(wrap, s.t, g);
      auto s1 = eval_disturbance(wrap, s.t + dt, g);
      for (int i = 1; i <= g.N; ++i)
        extra[iv(i)] = 0.5 * dt * (s0.f_nodes[i] + s1.f_nodes[i]);
    }
    extra[iv(0)] = extra[ith(0)] = extra[ith(g.N)] = 0.0;
    core.advance(y, extra);

    ThermoState out;
    out.t = s.t + dt;
    out.rho.resize(n);
    out.v.resize(n);
    out.theta.resize(n);
    for (int i = 0; i < n; ++i) {
      out.rho[i] = extra[ir(i)];
      out.v[i] = extra[iv(i)];
      out.theta[i] = extra[ith(i)];
    }
    return out;
  }
};

ThermoStepper::ThermoStepper(const ThermoacousticParams& p, const Grid& g, double dt)
    : impl_(std::make_unique<Impl>(p, g, dt)) {}
ThermoStepper::~ThermoStepper() = default;
ThermoStepper::ThermoStepper(ThermoStepper&&) noexcept = default;
ThermoStepper& ThermoStepper::operator=(ThermoStepper&&) noexcept = default;

ThermoState ThermoStepper::step(const ThermoState& s, const SpaceTimeSignal& source) const {
  return impl_->do_step(s, source);
}

// ---------------------------------------------------------------------------
// drivers

StringState step(ModelVariant variant, const PhysicalParams& p, const Grid& g,
                 const StringState& s, const DisturbanceSpec& dist, double dt) {
  return StringStepper(variant, p, g, dt).step(s, dist);
}

namespace {

std::size_t step_count(double T, double dt, double& remainder) {
  if (!(T >= 0.0)) throw std::invalid_argument("run: T must be non-negative");
  auto steps = static_cast<std::size_t>(std::llround(T / dt));
  remainder = std::abs(T - static_cast<double>(steps) * dt);
  return steps;
}

}  // namespace

Trajectory run(ModelVariant variant, const PhysicalParams& p, const Grid& g,
               const InitialData& init, const DisturbanceSpec& dist, double dt, double T) {
  StringStepper st(variant, p, g, dt);
  const bool thermal = variant == ModelVariant::C || variant == ModelVariant::D;

  Trajectory traj;
  traj.variant = variant;
  traj.grid = g;
  traj.dt = dt;
  const std::size_t steps = step_count(T, dt, traj.time_remainder);

  StringState cur;
  cur.t = 0.0;
  cur.u = init.u0;
  cur.w = init.w0;
  if (thermal) cur.theta = init.theta0;

  traj.states.reserve(steps + 1);
  auto record = [&](const StringState& s) {
    auto sample = eval_disturbance(dist, s.t, g);
    traj.f_l2.push_back(l2_norm(g, sample.f_nodes));
    traj.d_abs.push_back(std::abs(sample.d_value));
    traj.states.push_back(s);
  };
  record(cur);

  for (std::size_t n = 0; n < steps; ++n) {
    StringState next = st.step(traj.states.back(), dist);
    if (!all_finite(next.u) || !all_finite(next.w) || !all_finite(next.theta)) {
      traj.aborted = true;
      traj.last_healthy = traj.states.size() - 1;
      traj.abort_reason = "non-finite state after step " + std::to_string(n + 1) + " (t=" +
                          std::to_string(next.t) + ")";
      return traj;
    }
    record(next);
  }
  traj.last_healthy = traj.states.size() - 1;
  return traj;
}

ThermoTrajectory run_thermo(const ThermoacousticParams& p, const Grid& g,
                            const ThermoInitialData& init, double dt, double T,
                            const SpaceTimeSignal& momentum_source) {
  ThermoStepper st(p, g, dt);

  ThermoTrajectory traj;
  traj.grid = g;
  traj.dt = dt;
  const std::size_t steps = step_count(T, dt, traj.time_remainder);

  ThermoState cur;
  cur.t = 0.0;
  cur.rho = init.rho0;
  cur.v = init.v0;
  cur.theta = init.theta0;

  traj.states.reserve(steps + 1);
  traj.states.push_back(cur);
  for (std::size_t n = 0; n < steps; ++n) {
    ThermoState next = st.step(traj.states.back(), momentum_source);
    if (!all_finite(next.rho) || !all_finite(next.v) || !all_finite(next.theta)) {
      traj.aborted = true;
      traj.last_healthy = traj.states.size() - 1;
      traj.abort_reason = "non-finite state after step " + std::to_string(n + 1) + " (t=" +
                          std::to_string(next.t) + ")";
      return traj;
    }
    traj.states.push_back(next);
  }
  traj.last_healthy = traj.states.size() - 1;
  return traj;
}

}  // namespace wavelab
