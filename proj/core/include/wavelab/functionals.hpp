#pragma once
// Discrete energy, the weighted Riemann-invariant functional, the
// strain-rate mismatch term, and the certified Lyapunov combination, all
// evaluated with trapezoid quadrature on the shared difference stencils.

#include "wavelab/certificates.hpp"
#include "wavelab/grid.hpp"
#include "wavelab/model.hpp"
#include "wavelab/solver.hpp"

namespace wavelab {

// E = 1/2 ||w||^2 + c^2/2 ||u_x||^2, plus b/(2 lambda) ||theta||^2 for the
// thermal variants and a sigma/2 w(1)^2 for variant D
double energy(ModelVariant variant, const PhysicalParams& p, const Grid& g,
              const StringState& s);

// Phi = 1/2 int e^{rx} (w + c u_x)^2 + 1/2 int e^{-rx} (w - c u_x)^2, plus a
// boundary kinetic term for variant D
double phi(ModelVariant variant, const PhysicalParams& p, const Grid& g,
           const StringState& s, double r);

// W = 1/2 ||w - sigma u_xx||^2 with the damper-consistent slope closure
double kv_mismatch(const PhysicalParams& p, const Grid& g, const StringState& s);

struct FunctionalValue {
  double E = 0.0, Phi = 0.0, W = 0.0, V = 0.0;
  double kinetic = 0.0, potential = 0.0, thermal = 0.0, boundary_kinetic = 0.0;
  double phi_forward = 0.0, phi_backward = 0.0, phi_boundary = 0.0;
};

// V = Phi + M E (theorems 1 and 2) or Phi + R W + M E (theorem 3); throws if
// the state shape does not match the certificate's variant or if V comes out
// negative beyond rounding
FunctionalValue lyapunov(const Grid& g, const StringState& s, const IssCertificate& cert);

struct StateNorms {
  double w_l2 = 0.0;
  double ux_l2 = 0.0;
  double theta_l2 = 0.0;
  double uxx_l2 = 0.0;
  double w_right_abs = 0.0;
  double lhs = 0.0;  // the variant's certified norm combination
};

StateNorms state_norms(ModelVariant variant, const PhysicalParams& p, const Grid& g,
                       const StringState& s);

}  // namespace wavelab
