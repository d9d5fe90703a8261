#include "wavelab/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cert_obj.hpp"
#include "jsonw.hpp"

namespace wavelab {

namespace {

int argmax(const std::vector<double>& v) {
  return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}
int argmin(const std::vector<double>& v) {
  return static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string("certificate: ") + name +
                                " must be positive and finite");
}

void require_base(const PhysicalParams& p, double r) {
  require_positive(p.a, "a");
  require_positive(p.c, "c");
  require_positive(r, "r");
  if (!(p.mu >= 0.0) || !std::isfinite(p.mu))
    throw std::invalid_argument("certificate: mu must be non-negative and finite");
}

void require_thermal(const PhysicalParams& p) {
  require_positive(p.b, "b");
  require_positive(p.k, "k");
  require_positive(p.lambda, "lambda");
}

double boundary_candidate(double a, double c, double r) {
  double p = 1.0 - a * c, q = 1.0 + a * c;
  return (2.0 / (a * c)) * (std::exp(r) * p * p - std::exp(-r) * q * q);
}

}  // namespace

IssCertificate thm1_certificate(const PhysicalParams& p, double r) {
  require_base(p, r);
  const double a = p.a, c = p.c, mu = p.mu;

  IssCertificate out;
  out.theorem = 1;
  out.variant = ModelVariant::B;
  out.params = p;
  out.r = r;

  std::vector<double> cands = {2.0 * (1.0 + mu) * std::cosh(r) / (c * r),
                               boundary_candidate(a, c, r)};
  out.M_branch = {argmax(cands), cands};
  const double M = *std::max_element(cands.begin(), cands.end());
  out.M = M;

  out.omega = c * r * std::exp(-r) / (4.0 * (M + 2.0 * std::exp(-r)));
  out.K1 = (2.0 * (1.0 + mu) + M * M) * std::cosh(r) / (2.0 * out.omega * c * r);
  const double edge = std::cosh(r) - a * c * std::sinh(r);
  out.K2 = (c * c / (2.0 * out.omega)) *
           (M / (2.0 * a) + 4.0 * edge * edge / (a * M) + c * std::sinh(r));

  const double cmin = std::min(1.0, c * c);
  const double cmax = std::max(1.0, c * c);
  out.G = std::sqrt((M + 2.0 * std::exp(r)) / (M + 2.0 * std::exp(-r))) * std::sqrt(cmax / cmin);
  out.gamma1 = std::sqrt(2.0 * out.K1 / ((M + 2.0 * std::exp(-r)) * cmin));
  out.gamma2 = out.gamma1 * std::sqrt(out.K2 / out.K1);
  return out;
}

IssCertificate thm2_certificate(const PhysicalParams& p, double r) {
  require_base(p, r);
  require_thermal(p);
  const double a = p.a, c = p.c, mu = p.mu, b = p.b, k = p.k, lam = p.lambda;

  IssCertificate out;
  out.theorem = 2;
  out.variant = ModelVariant::C;
  out.params = p;
  out.r = r;

  out.coupling_factor = std::max(1.0, 2.0 * lam / k);
  std::vector<double> cands = {
      out.coupling_factor * (2.0 * (1.0 + b + mu) / (c * r)) * std::cosh(r),
      boundary_candidate(a, c, r)};
  out.M_branch = {argmax(cands), cands};
  const double M = *std::max_element(cands.begin(), cands.end());
  out.M = M;

  const double pi = std::numbers::pi;
  std::vector<double> om_cands = {c * r / (2.0 * (2.0 + M * std::exp(r))), k * pi * pi};
  out.omega_branch = {argmin(om_cands), om_cands};
  out.omega = *std::min_element(om_cands.begin(), om_cands.end()) / 2.0;

  out.K1 = (2.0 * (1.0 + b + mu) + M * M) * std::cosh(r) / (2.0 * out.omega * c * r);
  const double edge = std::cosh(r) - a * c * std::sinh(r);
  out.K2 = (c * c / (2.0 * out.omega)) *
           (M / (2.0 * a) + 4.0 * edge * edge / (a * M) + c * std::sinh(r));

  const double cmin = std::min(1.0, c * c);
  const double cmax = std::max(1.0, c * c);
  std::vector<double> mlo_cands = {cmin * (M / 2.0 + std::exp(-r)), b * M / (2.0 * lam)};
  std::vector<double> mhi_cands = {cmax * (M / 2.0 + std::exp(r)), b * M / (2.0 * lam)};
  out.m_lo_branch = {argmin(mlo_cands), mlo_cands};
  out.m_hi_branch = {argmax(mhi_cands), mhi_cands};
  out.m_lo = *std::min_element(mlo_cands.begin(), mlo_cands.end());
  out.m_hi = *std::max_element(mhi_cands.begin(), mhi_cands.end());

  out.G = std::sqrt(out.m_hi / out.m_lo);
  out.gamma1 = std::sqrt(out.K1 / out.m_lo);
  out.gamma2 = std::sqrt(out.K2 / out.m_lo);
  return out;
}

IssCertificate thm3_certificate(const PhysicalParams& p, double r) {
  require_base(p, r);
  require_thermal(p);
  require_positive(p.sigma, "sigma");
  const double a = p.a, c = p.c, mu = p.mu, b = p.b, k = p.k, lam = p.lambda, sg = p.sigma;
  const double c2 = c * c;

  IssCertificate out;
  out.theorem = 3;
  out.variant = ModelVariant::D;
  out.params = p;
  out.r = r;

  out.Q = (c2 + (1.0 + b) * sg) / (2.0 * sg) +
          sg * c2 * (1.0 + b) / (2.0 * (c2 + (1.0 + mu + b) * sg));
  out.R = c * r / (8.0 * out.Q * std::cosh(r));
  out.B = a * sg * (std::exp(r) * (1.0 - a * c) + std::exp(-r) * (1.0 + a * c));

  const double bulk = 2.0 * (1.0 + mu + b + sg * r) * std::cosh(r);
  const double sh = std::sinh(r);
  std::vector<double> m_cands = {
      bulk / c + 4.0 * sh * sh / (c * out.R),
      (1.0 + mu + b) * sg * out.R / (2.0 * c2) + bulk / (c * r),
      (2.0 * lam / k) *
          (bulk / (c * r) + ((sg + 1.0) / (2.0 * sg * c2)) * (c2 + (1.0 + mu + b) * sg) * out.R),
      (1.0 / (a * c)) * (std::exp(r) * (1.0 - a * c) * (1.0 - a * c) -
                         std::exp(-r) * (1.0 + a * c) * (1.0 + a * c)),
      out.R - 2.0 * std::exp(-r),
      -out.B / (a * sg)};
  out.M_branch = {argmax(m_cands), m_cands};
  // the bulk bound is always positive, so the 1% headroom also clears the two
  // strict bounds
  const double M = 1.01 * *std::max_element(m_cands.begin(), m_cands.end());
  out.M = M;
  out.M_margins.resize(m_cands.size());
  for (std::size_t i = 0; i < m_cands.size(); ++i) out.M_margins[i] = M - m_cands[i];

  std::vector<double> c1_cands = {(M - out.R) / 2.0 + std::exp(-r),
                                  c2 * (M / 2.0 + std::exp(-r)),
                                  b * M / (2.0 * lam),
                                  (a * sg * M + out.B) / 2.0,
                                  out.R * sg * sg / 4.0};
  std::vector<double> c2_cands = {M / 2.0 + std::exp(r) + out.R,
                                  c2 * (M / 2.0 + std::exp(r)),
                                  b * M / (2.0 * lam),
                                  (a * sg * M + out.B) / 2.0,
                                  out.R * sg * sg};
  out.C1_branch = {argmin(c1_cands), c1_cands};
  out.C2_branch = {argmax(c2_cands), c2_cands};
  out.C1 = *std::min_element(c1_cands.begin(), c1_cands.end());
  out.C2 = *std::max_element(c2_cands.begin(), c2_cands.end());

  out.K = ((sg + 1.0) / (2.0 * sg * c2)) * (c2 + (1.0 + mu + b) * sg) * out.R + bulk / (c * r) +
          M * M / (4.0 * out.Q * out.R);

  const double pi = std::numbers::pi;
  std::vector<double> phi_cands = {c * r * std::exp(-r) / 8.0,
                                   c * c2 * r * std::exp(-r) / 8.0,
                                   a * c2 * M / 2.0,
                                   sg * c2 * out.R / 4.0,
                                   b * k * M * pi * pi / (2.0 * lam)};
  out.phi_branch = {argmin(phi_cands), phi_cands};
  out.phi_rate = *std::min_element(phi_cands.begin(), phi_cands.end());
  out.omega = out.phi_rate / (2.0 * out.C2);

  out.G = std::sqrt(out.C2 / out.C1);
  out.gamma = std::sqrt(out.K / (2.0 * out.omega * out.C1));
  return out;
}

IssCertificate make_certificate(ModelVariant variant, const PhysicalParams& p, double r) {
  switch (variant) {
    case ModelVariant::A: {
      // the undamped variant reuses the viscous certificate at mu = 0
      if (p.mu != 0.0)
        throw std::invalid_argument("make_certificate: variant A requires mu = 0");
      return thm1_certificate(p, r);
    }
    case ModelVariant::B: return thm1_certificate(p, r);
    case ModelVariant::C: return thm2_certificate(p, r);
    case ModelVariant::D: return thm3_certificate(p, r);
    case ModelVariant::Thermoacoustic: break;
  }
  throw std::invalid_argument("make_certificate: no certificate for the fluid system");
}

// ---------------------------------------------------------------------------
// weight optimization

OptimizeResult optimize_r(int theorem, const PhysicalParams& p, double r_lo, double r_hi,
                          RObjective objective) {
  if (theorem < 1 || theorem > 3)
    throw std::invalid_argument("optimize_r: theorem must be 1, 2, or 3");
  if (!(r_lo > 0.0)) throw std::invalid_argument("optimize_r: r_lo must be positive");
  if (!(r_hi >= r_lo)) throw std::invalid_argument("optimize_r: empty search range");

  auto make = [&](double r) {
    switch (theorem) {
      case 1: return thm1_certificate(p, r);
      case 2: return thm2_certificate(p, r);
      default: return thm3_certificate(p, r);
    }
  };
  // score to minimize
  auto score = [&](const IssCertificate& cert) {
    if (objective == RObjective::MaximizeOmega) return -cert.omega;
    return theorem == 3 ? cert.gamma : cert.gamma1;
  };

  int evals = 0;
  auto eval_at = [&](double r) {
    ++evals;
    return score(make(r));
  };

  const double step = 1e-3;
  double best_r = r_lo;
  double best_s = eval_at(r_lo);
  for (int i = 1;; ++i) {
    double r = r_lo + i * step;
    bool last = r >= r_hi;
    if (last) r = r_hi;
    double s = eval_at(r);
    if (s < best_s) {
      best_s = s;
      best_r = r;
    }
    if (last) break;
  }

  // local refinement around the best grid point; ties keep the left interval
  // so equal scores resolve to the smaller r
  double lo = std::max(r_lo, best_r - step);
  double hi = std::min(r_hi, best_r + step);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = eval_at(x1), f2 = eval_at(x2);
  for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = eval_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = eval_at(x2);
    }
  }
  double r_mid = 0.5 * (lo + hi);
  double s_mid = eval_at(r_mid);
  if (s_mid < best_s) {
    best_s = s_mid;
    best_r = r_mid;
  }

  OptimizeResult out;
  out.best = make(best_r);
  out.r = best_r;
  out.evaluations = evals;
  out.at_boundary = (best_r - r_lo) < step || (r_hi - best_r) < step;
  return out;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

std::string branch_json(const Branch& b) {
  jsonw::Obj o;
  o.put("active", b.active);
  o.put_raw("candidates", jsonw::arr(b.candidates));
  return o.str();
}

}  // namespace

namespace detail {

jsonw::Obj certificate_obj(const IssCertificate& cert) {
  jsonw::Obj inputs;
  inputs.put("a", cert.params.a)
      .put("c", cert.params.c)
      .put("mu", cert.params.mu);
  if (cert.theorem >= 2)
    inputs.put("b", cert.params.b).put("k", cert.params.k).put("lambda", cert.params.lambda);
  if (cert.theorem == 3) inputs.put("sigma", cert.params.sigma);
  inputs.put("r", cert.r);

  jsonw::Obj constants;
  jsonw::Obj branches;
  switch (cert.theorem) {
    case 1:
      constants.put("M", cert.M)
          .put("omega", cert.omega)
          .put("K1", cert.K1)
          .put("K2", cert.K2)
          .put("G", cert.G)
          .put("gamma1", cert.gamma1)
          .put("gamma2", cert.gamma2);
      branches.put_raw("M", branch_json(cert.M_branch));
      break;
    case 2:
      constants.put("M", cert.M)
          .put("coupling_factor", cert.coupling_factor)
          .put("omega", cert.omega)
          .put("K1", cert.K1)
          .put("K2", cert.K2)
          .put("m_lo", cert.m_lo)
          .put("m_hi", cert.m_hi)
          .put("G", cert.G)
          .put("gamma1", cert.gamma1)
          .put("gamma2", cert.gamma2);
      branches.put_raw("M", branch_json(cert.M_branch));
      branches.put_raw("omega", branch_json(cert.omega_branch));
      branches.put_raw("m_lo", branch_json(cert.m_lo_branch));
      branches.put_raw("m_hi", branch_json(cert.m_hi_branch));
      break;
    case 3:
      constants.put("Q", cert.Q)
          .put("R", cert.R)
          .put("B", cert.B)
          .put("M", cert.M)
          .put("C1", cert.C1)
          .put("C2", cert.C2)
          .put("K", cert.K)
          .put("phi", cert.phi_rate)
          .put("omega", cert.omega)
          .put("G", cert.G)
          .put("gamma", cert.gamma);
      branches.put_raw("M", branch_json(cert.M_branch));
      branches.put_raw("C1", branch_json(cert.C1_branch));
      branches.put_raw("C2", branch_json(cert.C2_branch));
      branches.put_raw("phi", branch_json(cert.phi_branch));
      break;
    default: throw std::logic_error("to_json: certificate has no theorem tag");
  }

  jsonw::Obj top;
  top.put("theorem", cert.theorem);
  top.put("variant", variant_name(cert.variant));
  top.put_raw("inputs", inputs.str());
  top.put_raw("constants", constants.str());
  top.put_raw("branches", branches.str());
  if (cert.theorem == 3) top.put_raw("M_margins", jsonw::arr(cert.M_margins));
  return top;
}

}  // namespace detail

std::string to_json(const IssCertificate& cert) {
  return detail::certificate_obj(cert).pretty();
}

}  // namespace wavelab
