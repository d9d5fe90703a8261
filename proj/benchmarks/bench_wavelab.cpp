#include <benchmark/benchmark.h>

#include <wavelab/certificates.hpp>
#include <wavelab/functionals.hpp>
#include <wavelab/model.hpp>
#include <wavelab/solver.hpp>

#include <cmath>
#include <numbers>

namespace {

wavelab::PhysicalParams bench_params(wavelab::ModelVariant v) {
  wavelab::PhysicalParams p;
  p.a = 1.0;
  p.c = 1.0;
  p.mu = (v == wavelab::ModelVariant::A) ? 0.0 : 0.5;
  p.sigma = (v == wavelab::ModelVariant::D) ? 0.5 : 0.0;
  return p;
}

wavelab::StringState bench_state(wavelab::ModelVariant v, const wavelab::Grid& g) {
  wavelab::StringState s;
  s.t = 0.0;
  s.u.resize(g.nodes());
  s.w.resize(g.nodes());
  const bool thermal = v == wavelab::ModelVariant::C || v == wavelab::ModelVariant::D;
  if (thermal) s.theta.resize(g.nodes());
  for (int i = 0; i <= g.N; ++i) {
    const double x = g.x(i);
    s.u[i] = std::sin(0.5 * std::numbers::pi * x);
    s.w[i] = -0.3 * std::sin(std::numbers::pi * x);
    if (thermal) s.theta[i] = 0.2 * std::sin(2.0 * std::numbers::pi * x);
  }
  return s;
}

void bm_step(benchmark::State& state, wavelab::ModelVariant v) {
  const wavelab::Grid g(static_cast<int>(state.range(0)));
  const auto p = bench_params(v);
  wavelab::StringStepper stepper(v, p, g, wavelab::default_dt(g, p.c));
  auto s = bench_state(v, g);
  const wavelab::DisturbanceSpec dist;
  for (auto _ : state) {
    s = stepper.step(s, dist);
    benchmark::DoNotOptimize(s.u.data());
  }
}

void bm_energy(benchmark::State& state) {
  const wavelab::Grid g(static_cast<int>(state.range(0)));
  const auto v = wavelab::ModelVariant::D;
  const auto p = bench_params(v);
  const auto s = bench_state(v, g);
  for (auto _ : state) {
    auto f = wavelab::energy(v, p, g, s);
    benchmark::DoNotOptimize(f);
  }
}

void bm_certificate(benchmark::State& state) {
  wavelab::PhysicalParams p;
  p.mu = 0.5;
  p.sigma = 0.5;
  for (auto _ : state) {
    auto cert = wavelab::thm3_certificate(p, 1.0);
    benchmark::DoNotOptimize(cert.omega);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_step, model_a, wavelab::ModelVariant::A)->Arg(128)->Arg(512);
BENCHMARK_CAPTURE(bm_step, model_b, wavelab::ModelVariant::B)->Arg(128)->Arg(512);
BENCHMARK_CAPTURE(bm_step, model_c, wavelab::ModelVariant::C)->Arg(128)->Arg(512);
BENCHMARK_CAPTURE(bm_step, model_d, wavelab::ModelVariant::D)->Arg(128)->Arg(512);
BENCHMARK(bm_energy)->Arg(256);
BENCHMARK(bm_certificate);

BENCHMARK_MAIN();
