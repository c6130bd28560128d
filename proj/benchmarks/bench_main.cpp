#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "jetspec/jetspec.hpp"

using namespace jetspec;

namespace {

JordanSpec<Complex> float_spec(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  JordanSpec<Complex> spec;
  for (int left = n; left > 0;) {
    const int len = std::min(left, 3);
    spec.blocks.push_back({"", std::polar(0.8 * std::abs(unit(rng)), std::numbers::pi * unit(rng)), len});
    left -= len;
  }
  FloatMatrix p = FloatMatrix::identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) p(i, j) = Complex(0.3 * unit(rng), 0.3 * unit(rng));
  spec.transform = p;
  return spec;
}

JordanSpec<GaussRational> exact_spec(int n) {
  JordanSpec<GaussRational> spec;
  const GaussRational values[] = {GaussRational(mpq_class(1, 2), mpq_class(1, 3)), GaussRational(mpq_class(-1, 4), 0)};
  for (int left = n, i = 0; left > 0; ++i) {
    const int len = std::min(left, 2 + i % 3);
    spec.blocks.push_back({"", values[i % 2], len});
    left -= len;
  }
  ExactMatrix p = ExactMatrix::identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) p(i, j) = GaussRational((i + 2 * j) % 5 - 2);
  spec.transform = p;
  return spec;
}

std::vector<Complex> coefficients(int degree) {
  std::vector<Complex> c;
  for (int i = 0; i <= degree; ++i) c.push_back(Complex(1.0 / (i + 1), 0.5 - 0.1 * i));
  return c;
}

void BM_JetOf(benchmark::State& state) {
  const auto f = HoloFunction<Complex>::compose(HoloFunction<Complex>::exp(HoloFunction<Complex>::identity()),
                                                HoloFunction<Complex>::blaschke({{Complex(0.3, 0.2), 2}}));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jet_of(f, Complex(0.1, -0.2), n));
}
BENCHMARK(BM_JetOf)->Arg(2)->Arg(8)->Arg(32);

void BM_ApplyJet(benchmark::State& state) {
  const auto spec = float_spec(static_cast<int>(state.range(0)), 1);
  const auto f = HoloFunction<Complex>::polynomial(coefficients(8));
  for (auto _ : state) benchmark::DoNotOptimize(apply_function_jet(f, spec));
}
BENCHMARK(BM_ApplyJet)->Arg(4)->Arg(12);

void BM_ApplyContour(benchmark::State& state) {
  const FloatMatrix a = build_matrix(float_spec(8, 2));
  const auto f = HoloFunction<Complex>::polynomial(coefficients(8));
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apply_function_contour(f, a, nodes));
}
BENCHMARK(BM_ApplyContour)->Arg(256)->Arg(1024);

void BM_ExactSpectrum(benchmark::State& state) {
  const ExactMatrix a = build_matrix(exact_spec(static_cast<int>(state.range(0))));
  const std::vector<GaussRational> values{GaussRational(mpq_class(1, 2), mpq_class(1, 3)), GaussRational(mpq_class(-1, 4), 0)};
  for (auto _ : state) benchmark::DoNotOptimize(spectrum<GaussRational>(a, values));
}
BENCHMARK(BM_ExactSpectrum)->Arg(6)->Arg(12);

void BM_FloatSpectrum(benchmark::State& state) {
  const FloatMatrix a = build_matrix(float_spec(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(a));
}
BENCHMARK(BM_FloatSpectrum)->Arg(6)->Arg(12);

void BM_Aberth(benchmark::State& state) {
  const auto c = characteristic_polynomial(build_matrix(float_spec(static_cast<int>(state.range(0)), 4)));
  for (auto _ : state) benchmark::DoNotOptimize(aberth_roots(c));
}
BENCHMARK(BM_Aberth)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
