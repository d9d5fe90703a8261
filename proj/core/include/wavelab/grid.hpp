#pragma once
// Uniform grid on [0,1] plus the shared finite-difference and quadrature
// kernels: trapezoid integrals, a second-order first difference, and a
// three-point second difference whose x=0 row is the pinned-end constraint
// and whose x=1 row eliminates the ghost node against a prescribed slope.

#include <vector>

namespace wavelab {

struct Grid {
  int N = 0;
  double h = 0.0;

  // at least 8 cells; throws std::invalid_argument otherwise
  explicit Grid(int n);

  int nodes() const { return N + 1; }
  double x(int i) const { return h * i; }
};

double trapezoid(const Grid& g, const std::vector<double>& v);
double inner(const Grid& g, const std::vector<double>& u, const std::vector<double>& v);
double l2_norm(const Grid& g, const std::vector<double>& v);

// central differences in the interior, one-sided second-order stencils at
// both ends
std::vector<double> first_diff(const Grid& g, const std::vector<double>& v);

// three-point second difference; row 0 evaluates to 0 (pinned end), row N
// uses a ghost node eliminated against the boundary slope ux_right
std::vector<double> second_diff(const Grid& g, const std::vector<double>& v,
                                double ux_right);

}  // namespace wavelab
