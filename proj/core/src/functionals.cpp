#include "wavelab/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelab {

namespace {

bool is_thermal(ModelVariant v) { return v == ModelVariant::C || v == ModelVariant::D; }

void check_state(ModelVariant variant, const Grid& g, const StringState& s, const char* what) {
  const int n = g.nodes();
  if (static_cast<int>(s.u.size()) != n || static_cast<int>(s.w.size()) != n)
    throw std::invalid_argument(std::string(what) + ": state length does not match grid");
  if (is_thermal(variant)) {
    if (static_cast<int>(s.theta.size()) != n)
      throw std::invalid_argument(std::string(what) + ": variant needs a heat field");
  } else if (!s.theta.empty()) {
    throw std::invalid_argument(std::string(what) + ": variant carries no heat field");
  }
}

struct EnergyParts {
  double kinetic, potential, thermal, boundary;
  double total() const { return kinetic + potential + thermal + boundary; }
};

EnergyParts energy_parts(ModelVariant variant, const PhysicalParams& p, const Grid& g,
                         const StringState& s) {
  EnergyParts parts{0.0, 0.0, 0.0, 0.0};
  parts.kinetic = 0.5 * inner(g, s.w, s.w);
  auto ux = first_diff(g, s.u);
  parts.potential = 0.5 * p.c * p.c * inner(g, ux, ux);
  if (is_thermal(variant)) parts.thermal = p.b / (2.0 * p.lambda) * inner(g, s.theta, s.theta);
  if (variant == ModelVariant::D)
    parts.boundary = 0.5 * p.a * p.sigma * s.w.back() * s.w.back();
  return parts;
}

struct PhiParts {
  double forward, backward, boundary;
  double total() const { return forward + backward + boundary; }
};

PhiParts phi_parts(ModelVariant variant, const PhysicalParams& p, const Grid& g,
                   const StringState& s, double r) {
  PhiParts parts{0.0, 0.0, 0.0};
  auto ux = first_diff(g, s.u);
  const int n = g.nodes();
  std::vector<double> fwd(n), bwd(n);
  for (int i = 0; i < n; ++i) {
    const double x = g.x(i);
    const double plus = s.w[i] + p.c * ux[i];
    const double minus = s.w[i] - p.c * ux[i];
    fwd[i] = std::exp(r * x) * plus * plus;
    bwd[i] = std::exp(-r * x) * minus * minus;
  }
  parts.forward = 0.5 * trapezoid(g, fwd);
  parts.backward = 0.5 * trapezoid(g, bwd);
  if (variant == ModelVariant::D) {
    const double B = p.a * p.sigma *
                     (std::exp(r) * (1.0 - p.a * p.c) + std::exp(-r) * (1.0 + p.a * p.c));
    parts.boundary = 0.5 * B * s.w.back() * s.w.back();
  }
  return parts;
}

double kv_parts(const PhysicalParams& p, const Grid& g, const StringState& s) {
  auto uxx = second_diff(g, s.u, -p.a * s.w.back());
  const int n = g.nodes();
  std::vector<double> m(n);
  for (int i = 0; i < n; ++i) {
    const double d = s.w[i] - p.sigma * uxx[i];
    m[i] = d * d;
  }
  return 0.5 * trapezoid(g, m);
}

}  // namespace

double energy(ModelVariant variant, const PhysicalParams& p, const Grid& g,
              const StringState& s) {
  check_state(variant, g, s, "energy");
  return energy_parts(variant, p, g, s).total();
}

double phi(ModelVariant variant, const PhysicalParams& p, const Grid& g, const StringState& s,
           double r) {
  check_state(variant, g, s, "phi");
  return phi_parts(variant, p, g, s, r).total();
}

double kv_mismatch(const PhysicalParams& p, const Grid& g, const StringState& s) {
  check_state(ModelVariant::D, g, s, "kv_mismatch");
  return kv_parts(p, g, s);
}

FunctionalValue lyapunov(const Grid& g, const StringState& s, const IssCertificate& cert) {
  check_state(cert.variant, g, s, "lyapunov");

  FunctionalValue out;
  auto ep = energy_parts(cert.variant, cert.params, g, s);
  out.kinetic = ep.kinetic;
  out.potential = ep.potential;
  out.thermal = ep.thermal;
  out.boundary_kinetic = ep.boundary;
  out.E = ep.total();

  auto pp = phi_parts(cert.variant, cert.params, g, s, cert.r);
  out.phi_forward = pp.forward;
  out.phi_backward = pp.backward;
  out.phi_boundary = pp.boundary;
  out.Phi = pp.total();

  out.V = out.Phi + cert.M * out.E;
  if (cert.theorem == 3) {
    out.W = kv_parts(cert.params, g, s);
    out.V += cert.R * out.W;
  }

  // V is equivalent to the squared state norm, so anything below rounding
  // noise signals an inconsistent certificate
  const double scale = std::abs(out.Phi) + cert.M * std::abs(out.E) + 1.0;
  if (out.V < -1e-12 * scale)
    throw std::logic_error("lyapunov: V came out negative");
  return out;
}

StateNorms state_norms(ModelVariant variant, const PhysicalParams& p, const Grid& g,
                       const StringState& s) {
  check_state(variant, g, s, "state_norms");
  StateNorms out;
  out.w_l2 = l2_norm(g, s.w);
  auto ux = first_diff(g, s.u);
  out.ux_l2 = l2_norm(g, ux);
  if (is_thermal(variant)) out.theta_l2 = l2_norm(g, s.theta);
  double sq = out.w_l2 * out.w_l2 + out.ux_l2 * out.ux_l2 + out.theta_l2 * out.theta_l2;
  if (variant == ModelVariant::D) {
    auto uxx = second_diff(g, s.u, -p.a * s.w.back());
    out.uxx_l2 = l2_norm(g, uxx);
    out.w_right_abs = std::abs(s.w.back());
    sq += out.uxx_l2 * out.uxx_l2 + out.w_right_abs * out.w_right_abs;
  }
  out.lhs = std::sqrt(sq);
  return out;
}

}  // namespace wavelab
