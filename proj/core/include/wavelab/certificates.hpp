#pragma once
// Closed-form exponential-decay certificates for the damped string variants.
// Every constant is computed from the physical parameters and the weight r
// alone; branch choices (which candidate won each max/min) are recorded so a
// certificate can be audited and recomputed.

#include <string>
#include <vector>

#include "wavelab/model.hpp"

namespace wavelab {

struct Branch {
  int active = 0;                  // index of the winning candidate
  std::vector<double> candidates;  // in a fixed, documented order
};

struct IssCertificate {
  int theorem = 0;  // 1 = variant B, 2 = variant C, 3 = variant D
  ModelVariant variant = ModelVariant::B;
  PhysicalParams params;
  double r = 1.0;

  // common constants (entries unused by a theorem stay 0)
  double M = 0.0;
  double omega = 0.0;      // decay rate: V(t) <= V(0) exp(-2 omega t) + ...
  double G = 0.0;          // overshoot factor of the norm estimate
  double K1 = 0.0, K2 = 0.0;       // disturbance terms in the V inequality
  double gamma1 = 0.0, gamma2 = 0.0;  // input gains (f and d)

  // theorem 2 extras
  double coupling_factor = 0.0;
  double m_lo = 0.0, m_hi = 0.0;  // norm-equivalence bounds for V

  // theorem 3 extras
  double Q = 0.0, R = 0.0, B = 0.0;
  double C1 = 0.0, C2 = 0.0;  // norm-equivalence bounds for V
  double K = 0.0;             // single force gain term
  double phi_rate = 0.0;      // numerator of omega before dividing by 2 C2
  double gamma = 0.0;         // single input gain

  // branch records; see certificates.cpp for the candidate orders
  Branch M_branch;
  Branch omega_branch;
  Branch m_lo_branch, m_hi_branch;
  Branch C1_branch, C2_branch, phi_branch;
  std::vector<double> M_margins;  // theorem 3: M minus each lower bound
};

// r must be positive; parameter positivity follows the variant's rules
IssCertificate thm1_certificate(const PhysicalParams& p, double r);
IssCertificate thm2_certificate(const PhysicalParams& p, double r);
IssCertificate thm3_certificate(const PhysicalParams& p, double r);

IssCertificate make_certificate(ModelVariant variant, const PhysicalParams& p, double r);

enum class RObjective { MaximizeOmega, MinimizeGamma1 };

struct OptimizeResult {
  IssCertificate best;
  double r = 0.0;
  bool at_boundary = false;  // the optimum sits at an end of the search range
  int evaluations = 0;
};

// grid scan at resolution 1e-3 over [r_lo, r_hi] followed by a local golden
// section refinement; ties resolve to the smaller r
OptimizeResult optimize_r(int theorem, const PhysicalParams& p, double r_lo, double r_hi,
                          RObjective objective);

// stable key order and 17 significant digits; equal certificates serialize
// byte-identically
std::string to_json(const IssCertificate& cert);

}  // namespace wavelab
