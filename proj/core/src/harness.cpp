#include "wavelab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cert_obj.hpp"
#include "jsonw.hpp"

namespace wavelab {

namespace {

// shared slack scale for quantities that are exact up to discretization error
constexpr double kSlackFactor = 10.0;

void check_cert_match(ModelVariant variant, const IssCertificate& cert, const char* what) {
  const bool ok = cert.variant == variant ||
                  (variant == ModelVariant::A && cert.theorem == 1);
  if (!ok)
    throw std::invalid_argument(std::string(what) +
                                ": certificate does not cover this variant");
}

}  // namespace

IssCheckReport check_iss(ModelVariant variant, const PhysicalParams& p, const Trajectory& traj,
                         const IssCertificate& cert) {
  check_cert_match(variant, cert, "check_iss");
  if (traj.states.empty()) throw std::invalid_argument("check_iss: empty trajectory");
  if (traj.f_l2.size() != traj.states.size() || traj.d_abs.size() != traj.states.size())
    throw std::invalid_argument("check_iss: disturbance record does not match states");

  const Grid& g = traj.grid;
  IssCheckReport rep;
  rep.truncated = traj.aborted;

  const std::size_t n = traj.states.size();
  rep.t.reserve(n);
  rep.lhs.reserve(n);
  rep.rhs.reserve(n);
  rep.margin.reserve(n);
  rep.V.reserve(n);
  rep.E.reserve(n);
  rep.Phi.reserve(n);
  rep.W.reserve(n);

  rep.lhs0 = state_norms(variant, p, g, traj.states.front()).lhs;
  rep.slack = kSlackFactor * (g.h * g.h + traj.dt * traj.dt) * (1.0 + rep.lhs0);

  const double gain_f = cert.theorem == 3 ? cert.gamma : cert.gamma1;
  const double gain_d = cert.theorem == 3 ? 0.0 : cert.gamma2;

  double sup_f = 0.0, sup_d = 0.0;
  double margin_min = std::numeric_limits<double>::infinity();
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const StringState& s = traj.states[i];
    sup_f = std::max(sup_f, traj.f_l2[i]);
    sup_d = std::max(sup_d, traj.d_abs[i]);

    const double lhs = state_norms(variant, p, g, s).lhs;
    const double rhs = cert.G * std::exp(-cert.omega * s.t) * rep.lhs0 + gain_f * sup_f +
                       gain_d * sup_d;
    const double margin = rhs + rep.slack - lhs;
    if (margin < margin_min) {
      margin_min = margin;
      argmin = i;
    }

    auto fv = lyapunov(g, s, cert);
    rep.t.push_back(s.t);
    rep.lhs.push_back(lhs);
    rep.rhs.push_back(rhs);
    rep.margin.push_back(margin);
    rep.V.push_back(fv.V);
    rep.E.push_back(fv.E);
    rep.Phi.push_back(fv.Phi);
    rep.W.push_back(fv.W);
  }
  rep.sup_f = sup_f;
  rep.sup_d = sup_d;
  rep.margin_min = margin_min;
  rep.margin_argmin = argmin;
  rep.pass = margin_min >= 0.0 && !rep.truncated;
  return rep;
}

DecayFit fit_decay(const std::vector<double>& t, const std::vector<double>& v,
                   double certified_rate) {
  if (t.size() != v.size() || t.size() < 2)
    throw std::invalid_argument("fit_decay: need matching series with at least 2 samples");

  DecayFit out;
  out.certified_rate = certified_rate;
  out.fitted_rate = std::numeric_limits<double>::quiet_NaN();
  out.ratio = std::numeric_limits<double>::quiet_NaN();

  const double threshold = 1e-10 * v.front();
  std::size_t cutoff = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > threshold)) {
      cutoff = i;
      out.finite_time = true;
      break;
    }
  }

  const std::size_t start = t.size() / 2;
  if (cutoff > start) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const std::size_t m = cutoff - start;
    for (std::size_t i = start; i < cutoff; ++i) {
      const double x = t[i], y = std::log(v[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    if (denom > 0.0) {
      const double slope = (m * sxy - sx * sy) / denom;
      const double icept = (sy - slope * sx) / m;
      out.fitted_rate = -slope;
      out.samples = m;
      out.valid_fit = m >= 10;
      double rss = 0.0;
      for (std::size_t i = start; i < cutoff; ++i) {
        const double res = std::log(v[i]) - (icept + slope * t[i]);
        rss += res * res;
      }
      out.residual_rms = std::sqrt(rss / m);
      if (certified_rate != 0.0) out.ratio = out.fitted_rate / certified_rate;
    }
  }
  out.meets_certified =
      out.finite_time || (out.valid_fit && out.fitted_rate >= 0.95 * certified_rate);
  return out;
}

OrderTable convergence_study(const ConvergenceCase& c, const std::vector<int>& N_list) {
  if (N_list.size() < 3)
    throw std::invalid_argument("convergence_study: need at least three grids");
  for (std::size_t i = 1; i < N_list.size(); ++i)
    if (N_list[i] <= N_list[i - 1])
      throw std::invalid_argument("convergence_study: grids must be strictly ascending");
  const int N_ref = N_list.back();
  for (int N : N_list)
    if (N_ref % N != 0)
      throw std::invalid_argument("convergence_study: every grid must divide the finest one");

  const bool thermal = c.variant == ModelVariant::C || c.variant == ModelVariant::D;

  struct Solved {
    Grid grid;
    StringState final;
  };
  std::vector<Solved> solved;
  solved.reserve(N_list.size());
  for (int N : N_list) {
    Grid g(N);
    const double dt = default_dt(g, c.params.c, c.courant);
    const double steps = std::round(c.T / dt);
    if (std::abs(c.T - steps * dt) > 1e-9 * std::max(1.0, c.T))
      throw std::invalid_argument("convergence_study: T is not a whole number of steps on N=" +
                                  std::to_string(N));
    InitialData init = make_initial_data(c.init, c.variant, g);
    DisturbanceSpec dist = c.disturbance ? c.disturbance(g) : DisturbanceSpec{};
    Trajectory traj = run(c.variant, c.params, g, init, dist, dt, c.T);
    if (traj.aborted)
      throw std::runtime_error("convergence_study: run aborted on N=" + std::to_string(N));
    solved.push_back({g, traj.states.back()});
  }

  const Solved& ref = solved.back();
  OrderTable table;
  table.N_reference = N_ref;

  double ref_scale = 0.0;
  for (double x : ref.final.u) ref_scale = std::max(ref_scale, std::abs(x));
  for (double x : ref.final.w) ref_scale = std::max(ref_scale, std::abs(x));

  for (std::size_t s = 0; s + 1 < solved.size(); ++s) {
    const Grid& g = solved[s].grid;
    const int stride = N_ref / g.N;
    auto restrict_err = [&](const std::vector<double>& coarse,
                            const std::vector<double>& fine) {
      std::vector<double> diff(coarse.size());
      for (int i = 0; i <= g.N; ++i) diff[i] = coarse[i] - fine[static_cast<std::size_t>(i) * stride];
      return inner(g, diff, diff);
    };
    double err2 = restrict_err(solved[s].final.u, ref.final.u) +
                  restrict_err(solved[s].final.w, ref.final.w);
    if (thermal) err2 += restrict_err(solved[s].final.theta, ref.final.theta);

    OrderRow row;
    row.N = g.N;
    row.h = g.h;
    row.err = std::sqrt(err2);
    table.rows.push_back(row);
  }

  table.exact = true;
  for (const auto& row : table.rows)
    if (row.err > 1e-13 * (1.0 + ref_scale)) table.exact = false;

  if (!table.exact) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const std::size_t m = table.rows.size();
    for (auto& row : table.rows) {
      const double x = std::log(row.h), y = std::log(row.err);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    table.observed_order = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    for (std::size_t s = 1; s < table.rows.size(); ++s)
      table.rows[s].order = std::log(table.rows[s - 1].err / table.rows[s].err) /
                            std::log(table.rows[s - 1].h / table.rows[s].h);
  }
  return table;
}

SigmaSweepReport sigma_sweep(const PhysicalParams& base, const std::vector<double>& sigmas,
                             double r) {
  if (sigmas.size() < 2) throw std::invalid_argument("sigma_sweep: need at least two viscosities");
  for (std::size_t i = 1; i < sigmas.size(); ++i)
    if (!(sigmas[i] < sigmas[i - 1]))
      throw std::invalid_argument("sigma_sweep: viscosities must decrease strictly");

  SigmaSweepReport rep;
  rep.gamma_increasing = true;
  rep.omega_decreasing = true;
  for (double s : sigmas) {
    PhysicalParams p = base;
    p.sigma = s;
    IssCertificate cert = thm3_certificate(p, r);
    SigmaSweepRow row{s, cert.omega, cert.gamma, cert.M, cert.C1};
    if (!rep.rows.empty()) {
      if (!(row.gamma > rep.rows.back().gamma)) rep.gamma_increasing = false;
      if (!(row.omega < rep.rows.back().omega)) rep.omega_decreasing = false;
    }
    rep.rows.push_back(row);
  }
  rep.gamma_ratio = rep.rows.back().gamma / rep.rows.front().gamma;
  return rep;
}

EquivalenceReport thermoacoustic_equivalence(const ThermoacousticParams& p,
                                             const InitialSpec& init,
                                             const std::vector<int>& N_list, double courant,
                                             double T) {
  if (N_list.empty()) throw std::invalid_argument("thermoacoustic_equivalence: no grids");

  PhysicalParams twin;
  twin.a = p.a;
  twin.c = p.c;
  twin.mu = 0.0;
  twin.b = p.b;
  twin.k = p.k;
  twin.lambda = p.lambda;
  twin.sigma = p.sigma;

  EquivalenceReport rep;
  rep.params = p;
  rep.T = T;
  for (int N : N_list) {
    Grid g(N);
    const double dt = default_dt(g, p.c, courant);
    InitialData sinit = make_initial_data(init, ModelVariant::D, g);
    ThermoInitialData tinit = thermo_initial_from_string(sinit, p, g);

    auto sv = validate(ModelVariant::D, twin, {}, sinit, g);
    auto tv = validate(p, tinit, g);
    if (!sv.ok || !tv.ok) {
      std::string msg = "thermoacoustic_equivalence: invalid setup:";
      for (const auto& m : sv.violations) msg += " " + m + ";";
      for (const auto& m : tv.violations) msg += " " + m + ";";
      throw std::invalid_argument(msg);
    }

    Trajectory straj = run(ModelVariant::D, twin, g, sinit, {}, dt, T);
    ThermoTrajectory ttraj = run_thermo(p, g, tinit, dt, T);
    if (straj.aborted || ttraj.aborted)
      throw std::runtime_error("thermoacoustic_equivalence: run aborted on N=" +
                               std::to_string(N));

    double worst = 0.0;
    const std::size_t n = std::min(straj.states.size(), ttraj.states.size());
    std::vector<double> diff(g.nodes());
    for (std::size_t s = 0; s < n; ++s) {
      for (int i = 0; i < g.nodes(); ++i)
        diff[i] = ttraj.states[s].v[i] - straj.states[s].w[i];
      worst = std::max(worst, l2_norm(g, diff));
    }
    rep.rows.push_back({N, worst});
  }

  for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    rep.ratios.push_back(rep.rows[i].discrepancy / rep.rows[i + 1].discrepancy);
    const double hc = 1.0 / rep.rows[i].N, hf = 1.0 / rep.rows[i + 1].N;
    rep.expected_factors.push_back((hc / hf) * (hc / hf));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// serialization

std::string to_json(const IssCheckReport& r, const IssCertificate& cert) {
  jsonw::Obj o;
  o.put("pass", r.pass)
      .put("truncated", r.truncated)
      .put("samples", r.t.size())
      .put("lhs0", r.lhs0)
      .put("slack", r.slack)
      .put("sup_f", r.sup_f)
      .put("sup_d", r.sup_d)
      .put("margin_min", r.margin_min)
      .put("margin_argmin", r.margin_argmin);
  if (!r.t.empty()) o.put("margin_argmin_t", r.t[r.margin_argmin]);
  o.put_raw("certificate", detail::certificate_obj(cert).str());
  return o.pretty();
}

std::string to_json(const DecayFit& r) {
  jsonw::Obj o;
  o.put("fitted_rate", r.fitted_rate)
      .put("certified_rate", r.certified_rate)
      .put("ratio", r.ratio)
      .put("residual_rms", r.residual_rms)
      .put("samples", r.samples)
      .put("finite_time", r.finite_time)
      .put("valid_fit", r.valid_fit)
      .put("meets_certified", r.meets_certified);
  return o.pretty();
}

std::string to_json(const OrderTable& r) {
  std::vector<std::string> rows;
  for (const auto& row : r.rows) {
    jsonw::Obj o;
    o.put("N", row.N).put("h", row.h).put("err", row.err).put("order", row.order);
    rows.push_back(o.str());
  }
  jsonw::Obj o;
  o.put("N_reference", r.N_reference)
      .put_raw("rows", jsonw::arr_raw(rows))
      .put("observed_order", r.observed_order)
      .put("exact", r.exact);
  return o.pretty();
}

std::string to_json(const SigmaSweepReport& r) {
  std::vector<std::string> rows;
  for (const auto& row : r.rows) {
    jsonw::Obj o;
    o.put("sigma", row.sigma)
        .put("omega", row.omega)
        .put("gamma", row.gamma)
        .put("M", row.M)
        .put("C1", row.C1);
    rows.push_back(o.str());
  }
  jsonw::Obj o;
  o.put_raw("rows", jsonw::arr_raw(rows))
      .put("gamma_increasing", r.gamma_increasing)
      .put("omega_decreasing", r.omega_decreasing)
      .put("gamma_ratio", r.gamma_ratio);
  return o.pretty();
}

std::string to_json(const EquivalenceReport& r) {
  std::vector<std::string> rows;
  for (const auto& row : r.rows) {
    jsonw::Obj o;
    o.put("N", row.N).put("discrepancy", row.discrepancy);
    rows.push_back(o.str());
  }
  jsonw::Obj params;
  params.put("a", r.params.a)
      .put("c", r.params.c)
      .put("gamma_fluid", r.params.gamma_fluid)
      .put("b", r.params.b)
      .put("k", r.params.k)
      .put("lambda", r.params.lambda)
      .put("sigma", r.params.sigma)
      .put("mu_twin", 0.0);
  jsonw::Obj o;
  o.put_raw("params", params.str())
      .put("T", r.T)
      .put_raw("rows", jsonw::arr_raw(rows))
      .put_raw("ratios", jsonw::arr(r.ratios))
      .put_raw("expected_factors", jsonw::arr(r.expected_factors));
  return o.pretty();
}

}  // namespace wavelab
