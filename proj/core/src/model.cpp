#include "wavelab/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wavelab {

const char* variant_name(ModelVariant v) {
  switch (v) {
    case ModelVariant::A: return "A";
    case ModelVariant::B: return "B";
    case ModelVariant::C: return "C";
    case ModelVariant::D: return "D";
    case ModelVariant::Thermoacoustic: return "thermoacoustic";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// time signals

TimeSignal zero_signal() { return {}; }

TimeSignal constant_signal(double value) {
  TimeSignal s;
  s.kind = TimeSignalKind::Constant;
  s.amplitude = value;
  return s;
}

TimeSignal sinusoid_signal(double amplitude, double frequency, double phase) {
  TimeSignal s;
  s.kind = TimeSignalKind::Sinusoid;
  s.amplitude = amplitude;
  s.frequency = frequency;
  s.phase = phase;
  return s;
}

TimeSignal pulse_signal(double amplitude, double t_begin, double t_end) {
  TimeSignal s;
  s.kind = TimeSignalKind::Pulse;
  s.amplitude = amplitude;
  s.support_begin = t_begin;
  s.support_end = t_end;
  s.windowed = true;
  return s;
}

TimeSignal exp_decay_signal(double amplitude, double rate) {
  TimeSignal s;
  s.kind = TimeSignalKind::ExpDecay;
  s.amplitude = amplitude;
  s.rate = rate;
  return s;
}

TimeSignal tabulated_signal(std::vector<double> times, std::vector<double> values) {
  TimeSignal s;
  s.kind = TimeSignalKind::Tabulated;
  s.times = std::move(times);
  s.values = std::move(values);
  return s;
}

namespace {

double interp_table(const std::vector<double>& times, const std::vector<double>& values,
                    double t, const char* what) {
  if (times.empty() || times.size() != values.size())
    throw std::invalid_argument(std::string(what) + ": malformed table");
  if (t < times.front() || t > times.back())
    throw std::out_of_range(std::string(what) + ": t=" + std::to_string(t) +
                            " outside tabulated range [" + std::to_string(times.front()) +
                            ", " + std::to_string(times.back()) + "]");
  auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return values.front();
  std::size_t j = static_cast<std::size_t>(it - times.begin());
  double t0 = times[j - 1], t1 = times[j];
  double a = (t - t0) / (t1 - t0);
  return values[j - 1] * (1.0 - a) + values[j] * a;
}

}  // namespace

double eval(const TimeSignal& s, double t) {
  if (s.kind == TimeSignalKind::Tabulated)
    return interp_table(s.times, s.values, t, "TimeSignal");
  if (s.windowed && (t < s.support_begin || t > s.support_end)) return 0.0;
  switch (s.kind) {
    case TimeSignalKind::Zero: return 0.0;
    case TimeSignalKind::Constant: return s.amplitude;
    case TimeSignalKind::Sinusoid:
      return s.amplitude * std::sin(2.0 * std::numbers::pi * s.frequency * t + s.phase);
    case TimeSignalKind::Pulse: return s.amplitude;
    case TimeSignalKind::ExpDecay: return s.amplitude * std::exp(-s.rate * t);
    case TimeSignalKind::Tabulated: break;
  }
  return 0.0;
}

bool is_zero(const TimeSignal& s) {
  switch (s.kind) {
    case TimeSignalKind::Zero: return true;
    case TimeSignalKind::Tabulated:
      return std::all_of(s.values.begin(), s.values.end(), [](double v) { return v == 0.0; });
    default: return s.amplitude == 0.0;
  }
}

bool is_zero(const SpaceTimeSignal& f) {
  switch (f.kind) {
    case SpaceTimeSignal::Kind::Zero: return true;
    case SpaceTimeSignal::Kind::Separable:
      return is_zero(f.g) ||
             std::all_of(f.profile.begin(), f.profile.end(), [](double v) { return v == 0.0; });
    case SpaceTimeSignal::Kind::Tabulated:
      return std::all_of(f.frames.begin(), f.frames.end(), [](const std::vector<double>& fr) {
        return std::all_of(fr.begin(), fr.end(), [](double v) { return v == 0.0; });
      });
  }
  return false;
}

DisturbanceSample eval_disturbance(const DisturbanceSpec& spec, double t, const Grid& g) {
  DisturbanceSample out;
  out.d_value = eval(spec.d, t);
  const int n = g.nodes();
  out.f_nodes.assign(n, 0.0);
  switch (spec.f.kind) {
    case SpaceTimeSignal::Kind::Zero: break;
    case SpaceTimeSignal::Kind::Separable: {
      if (static_cast<int>(spec.f.profile.size()) != n)
        throw std::invalid_argument("eval_disturbance: profile length does not match grid");
      const double gt = eval(spec.f.g, t);
      for (int i = 0; i < n; ++i) out.f_nodes[i] = gt * spec.f.profile[i];
      break;
    }
    case SpaceTimeSignal::Kind::Tabulated: {
      const auto& times = spec.f.times;
      if (times.empty() || times.size() != spec.f.frames.size())
        throw std::invalid_argument("eval_disturbance: malformed frame table");
      if (t < times.front() || t > times.back())
        throw std::out_of_range("eval_disturbance: t outside tabulated range");
      auto it = std::lower_bound(times.begin(), times.end(), t);
      std::size_t j = it == times.begin() ? 1 : static_cast<std::size_t>(it - times.begin());
      if (j >= times.size()) j = times.size() - 1;
      const auto& f0 = spec.f.frames[j - 1];
      const auto& f1 = spec.f.frames[j];
      if (static_cast<int>(f0.size()) != n || static_cast<int>(f1.size()) != n)
        throw std::invalid_argument("eval_disturbance: frame length does not match grid");
      double a = (t - times[j - 1]) / (times[j] - times[j - 1]);
      for (int i = 0; i < n; ++i) out.f_nodes[i] = f0[i] * (1.0 - a) + f1[i] * a;
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// initial data

std::vector<double> sample_profile(const ProfileSpec& p, const Grid& g) {
  const int n = g.nodes();
  std::vector<double> v(n, 0.0);
  const double pi = std::numbers::pi;
  switch (p.kind) {
    case ProfileSpec::Kind::Zero: break;
    case ProfileSpec::Kind::Sine:
      for (int i = 0; i < n; ++i) v[i] = p.amplitude * std::sin(p.mode * pi * g.x(i));
      break;
    case ProfileSpec::Kind::QuarterSine:
      for (int i = 0; i < n; ++i)
        v[i] = p.amplitude * std::sin((2 * p.mode - 1) * pi * g.x(i) / 2.0);
      break;
    case ProfileSpec::Kind::Gaussian:
      if (p.width <= 0.0) throw std::invalid_argument("sample_profile: width must be positive");
      for (int i = 0; i < n; ++i) {
        double z = (g.x(i) - p.center) / p.width;
        v[i] = p.amplitude * std::exp(-z * z);
      }
      break;
    case ProfileSpec::Kind::Polynomial:
      for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = p.coefficients.size(); j-- > 0;)
          acc = acc * g.x(i) + p.coefficients[j];
        v[i] = p.amplitude * acc;
      }
      break;
    case ProfileSpec::Kind::Samples:
      if (static_cast<int>(p.samples.size()) != n)
        throw std::invalid_argument("sample_profile: sample count does not match grid");
      v = p.samples;
      break;
  }
  return v;
}

namespace {
bool analytic(const ProfileSpec& p) { return p.kind != ProfileSpec::Kind::Samples; }
}  // namespace

InitialData make_initial_data(const InitialSpec& spec, ModelVariant variant, const Grid& g) {
  InitialData out;
  out.u0 = sample_profile(spec.u0, g);
  out.w0 = sample_profile(spec.w0, g);
  if (analytic(spec.u0)) out.u0.front() = 0.0;
  if (analytic(spec.w0)) out.w0.front() = 0.0;
  if (variant == ModelVariant::C || variant == ModelVariant::D ||
      variant == ModelVariant::Thermoacoustic) {
    out.theta0 = sample_profile(spec.theta0, g);
    if (analytic(spec.theta0)) {
      out.theta0.front() = 0.0;
      out.theta0.back() = 0.0;
    }
  }
  return out;
}

ThermoInitialData thermo_initial_from_string(const InitialData& init,
                                             const ThermoacousticParams& p, const Grid& g) {
  ThermoInitialData out;
  out.v0 = init.w0;
  auto ux = first_diff(g, init.u0);
  out.rho0.resize(ux.size());
  for (std::size_t i = 0; i < ux.size(); ++i) out.rho0[i] = -p.gamma_fluid * ux[i];
  out.theta0 = init.theta0;
  if (out.theta0.empty()) out.theta0.assign(g.nodes(), 0.0);
  return out;
}

// ---------------------------------------------------------------------------
// validation

namespace {

void check_finite(const std::vector<double>& v, const char* what, ValidationReport& r) {
  for (double x : v)
    if (!std::isfinite(x)) {
      r.violations.push_back(std::string(what) + " contains a non-finite value");
      return;
    }
}

void check_len(const std::vector<double>& v, int n, const char* what, ValidationReport& r) {
  if (static_cast<int>(v.size()) != n)
    r.violations.push_back(std::string(what) + " has " + std::to_string(v.size()) +
                           " samples, expected " + std::to_string(n));
}

void check_positive(double v, const char* name, ValidationReport& r) {
  if (!(v > 0.0) || !std::isfinite(v))
    r.violations.push_back(std::string(name) + " must be positive and finite");
}

void check_signal_shape(const TimeSignal& s, const char* what, ValidationReport& r) {
  if (s.kind == TimeSignalKind::Tabulated) {
    if (s.times.empty() || s.times.size() != s.values.size()) {
      r.violations.push_back(std::string(what) + ": tabulated signal needs matching, non-empty times and values");
      return;
    }
    for (std::size_t i = 1; i < s.times.size(); ++i)
      if (!(s.times[i] > s.times[i - 1])) {
        r.violations.push_back(std::string(what) + ": tabulated times must increase strictly");
        return;
      }
  }
  if (s.windowed && !(s.support_end > s.support_begin))
    r.violations.push_back(std::string(what) + ": support window is empty");
}

void check_f_shape(const SpaceTimeSignal& f, const Grid& g, ValidationReport& r) {
  switch (f.kind) {
    case SpaceTimeSignal::Kind::Zero: break;
    case SpaceTimeSignal::Kind::Separable:
      check_signal_shape(f.g, "f.time", r);
      check_len(f.profile, g.nodes(), "f.profile", r);
      break;
    case SpaceTimeSignal::Kind::Tabulated: {
      if (f.times.empty() || f.times.size() != f.frames.size()) {
        r.violations.push_back("f: tabulated signal needs matching, non-empty times and frames");
        break;
      }
      for (std::size_t i = 1; i < f.times.size(); ++i)
        if (!(f.times[i] > f.times[i - 1])) {
          r.violations.push_back("f: tabulated times must increase strictly");
          break;
        }
      for (const auto& fr : f.frames) check_len(fr, g.nodes(), "f.frame", r);
      break;
    }
  }
}

}  // namespace

ValidationReport validate(ModelVariant variant, const PhysicalParams& p,
                          const DisturbanceSpec& dist, const InitialData& init,
                          const Grid& g) {
  ValidationReport r;
  if (variant == ModelVariant::Thermoacoustic) {
    r.violations.push_back("use the thermoacoustic overload for the fluid system");
    r.ok = false;
    return r;
  }

  check_positive(p.a, "a", r);
  check_positive(p.c, "c", r);
  if (!(p.mu >= 0.0) || !std::isfinite(p.mu))
    r.violations.push_back("mu must be non-negative and finite");

  const bool thermal = variant == ModelVariant::C || variant == ModelVariant::D;
  if (variant == ModelVariant::A && p.mu != 0.0)
    r.violations.push_back("variant A has no distributed damping; mu must be 0");
  if (thermal) {
    check_positive(p.b, "b", r);
    check_positive(p.k, "k", r);
    check_positive(p.lambda, "lambda", r);
  }
  if (variant == ModelVariant::D) check_positive(p.sigma, "sigma", r);

  check_signal_shape(dist.d, "d", r);
  check_f_shape(dist.f, g, r);
  if (variant == ModelVariant::A) {
    if (!is_zero(dist.f)) r.violations.push_back("variant A takes no distributed force");
    if (!is_zero(dist.d)) r.violations.push_back("variant A takes no boundary disturbance");
  }
  if (variant == ModelVariant::D && !is_zero(dist.d))
    r.violations.push_back("variant D admits no boundary disturbance");

  check_len(init.u0, g.nodes(), "u0", r);
  check_len(init.w0, g.nodes(), "w0", r);
  check_finite(init.u0, "u0", r);
  check_finite(init.w0, "w0", r);
  if (thermal) {
    check_len(init.theta0, g.nodes(), "theta0", r);
    check_finite(init.theta0, "theta0", r);
  } else if (!init.theta0.empty()) {
    r.violations.push_back("theta0 must be empty for variants without a heat field");
  }

  if (static_cast<int>(init.u0.size()) == g.nodes()) {
    if (init.u0.front() != 0.0) r.violations.push_back("u0 must vanish at x=0");
    if (init.w0.size() == init.u0.size() && init.w0.front() != 0.0)
      r.violations.push_back("w0 must vanish at x=0");
    // slope compatibility at x=1 is only a warning: the solver enforces the
    // boundary condition from the first step onward
    if (init.w0.size() == init.u0.size()) {
      double d0 = 0.0;
      bool have_d0 = true;
      try {
        d0 = eval(dist.d, 0.0);
      } catch (const std::out_of_range&) {
        have_d0 = false;
        r.warnings.push_back("d is not defined at t=0; slope compatibility unchecked");
      }
      if (have_d0) {
        auto ux = first_diff(g, init.u0);
        double mismatch = std::abs(ux.back() + p.a * init.w0.back() - d0);
        double scale = 1.0;
        for (double v : ux) scale = std::max(scale, std::abs(v));
        if (mismatch > 10.0 * g.h * g.h * scale)
          r.warnings.push_back("initial slope at x=1 does not satisfy the damper relation (mismatch " +
                               std::to_string(mismatch) + ")");
      }
    }
  }
  if (thermal && static_cast<int>(init.theta0.size()) == g.nodes()) {
    if (init.theta0.front() != 0.0 || init.theta0.back() != 0.0)
      r.violations.push_back("theta0 must vanish at both ends");
  }

  r.ok = r.violations.empty();
  return r;
}

ValidationReport validate(const ThermoacousticParams& p, const ThermoInitialData& init,
                          const Grid& g) {
  ValidationReport r;
  check_positive(p.a, "a", r);
  check_positive(p.c, "c", r);
  check_positive(p.gamma_fluid, "gamma_fluid", r);
  check_positive(p.b, "b", r);
  check_positive(p.k, "k", r);
  check_positive(p.lambda, "lambda", r);
  check_positive(p.sigma, "sigma", r);

  check_len(init.rho0, g.nodes(), "rho0", r);
  check_len(init.v0, g.nodes(), "v0", r);
  check_len(init.theta0, g.nodes(), "theta0", r);
  check_finite(init.rho0, "rho0", r);
  check_finite(init.v0, "v0", r);
  check_finite(init.theta0, "theta0", r);

  if (static_cast<int>(init.v0.size()) == g.nodes() && init.v0.front() != 0.0)
    r.violations.push_back("v0 must vanish at x=0");
  if (static_cast<int>(init.theta0.size()) == g.nodes() &&
      (init.theta0.front() != 0.0 || init.theta0.back() != 0.0))
    r.violations.push_back("theta0 must vanish at both ends");

  r.ok = r.violations.empty();
  return r;
}

}  // namespace wavelab
