#include "wavelab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelab {

namespace {
void require_len(const Grid& g, const std::vector<double>& v, const char* what) {
  if (static_cast<int>(v.size()) != g.nodes())
    throw std::invalid_argument(std::string(what) + ": field length does not match grid");
}
}  // namespace

Grid::Grid(int n) : N(n), h(1.0 / n) {
  if (n < 8) throw std::invalid_argument("Grid: need at least 8 cells");
}

double trapezoid(const Grid& g, const std::vector<double>& v) {
  require_len(g, v, "trapezoid");
  double s = 0.5 * (v.front() + v.back());
  for (int i = 1; i < g.N; ++i) s += v[i];
  return s * g.h;
}

double inner(const Grid& g, const std::vector<double>& u, const std::vector<double>& v) {
  require_len(g, u, "inner");
  require_len(g, v, "inner");
  double s = 0.5 * (u.front() * v.front() + u.back() * v.back());
  for (int i = 1; i < g.N; ++i) s += u[i] * v[i];
  return s * g.h;
}

double l2_norm(const Grid& g, const std::vector<double>& v) {
  return std::sqrt(inner(g, v, v));
}

std::vector<double> first_diff(const Grid& g, const std::vector<double>& v) {
  require_len(g, v, "first_diff");
  const int N = g.N;
  const double inv2h = 1.0 / (2.0 * g.h);
  std::vector<double> d(v.size());
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) * inv2h;
  for (int i = 1; i < N; ++i) d[i] = (v[i + 1] - v[i - 1]) * inv2h;
  d[N] = (3.0 * v[N] - 4.0 * v[N - 1] + v[N - 2]) * inv2h;
  return d;
}

std::vector<double> second_diff(const Grid& g, const std::vector<double>& v,
                                double ux_right) {
  require_len(g, v, "second_diff");
  const int N = g.N;
  const double invh2 = 1.0 / (g.h * g.h);
  std::vector<double> d(v.size());
  d[0] = 0.0;
  for (int i = 1; i < N; ++i) d[i] = (v[i - 1] - 2.0 * v[i] + v[i + 1]) * invh2;
  d[N] = (2.0 * v[N - 1] - 2.0 * v[N] + 2.0 * g.h * ux_right) * invh2;
  return d;
}

}  // namespace wavelab
