#include <doctest.h>

#include "support/oracles.hpp"

using namespace jetspec;

namespace {

using F = HoloFunction<Complex>;
using E = HoloFunction<GaussRational>;

GaussRational q(long p, long d, long r = 0, long s = 1) { return {mpq_class(p, d), mpq_class(r, s)}; }

FloatMatrix diag(std::initializer_list<Complex> d) {
  FloatMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (Complex x : d) m(i, i) = x, ++i;
  return m;
}

JordanSpec<Complex> random_float_spec(oracle::Random& rng, int max_dim, double radius) {
  JordanSpec<Complex> spec;
  for (int len : rng.partition(rng.integer(1, max_dim), 4)) spec.blocks.push_back({"", rng.in_disk(radius), len});
  spec.transform = rng.well_conditioned(spec.dimension(), 0.3);
  return spec;
}

std::vector<Complex> random_coeffs(oracle::Random& rng, int degree) {
  std::vector<Complex> c;
  for (int i = 0; i <= degree; ++i) c.push_back(Complex(rng.real(-1, 1), rng.real(-1, 1)));
  return c;
}

}  // namespace

TEST_SUITE("calculus") {

TEST_CASE("jet calculus examples") {
  oracle::Random rng(113);
  const auto spec = random_float_spec(rng, 6, 0.8);
  CHECK(frobenius_distance(apply_function_jet(F::identity(), spec), build_matrix(spec)) < 1e-14);

  JordanSpec<GaussRational> nil{{{"", GaussRational(0), 3}}, std::nullopt};
  ExactMatrix n2(3, 3);
  n2(0, 2) = GaussRational(1);
  CHECK(apply_function_jet(E::polynomial({GaussRational(0), GaussRational(0), GaussRational(1)}), nil) == n2);
}

TEST_CASE("blaschke cube on a length-4 block") {
  const GaussRational lambda = q(1, 2, 1, 4);
  JordanSpec<GaussRational> spec{{{"", lambda, 4}}, std::nullopt};
  const ExactMatrix image = apply_function_jet(E::blaschke({{lambda, 3}}), spec);
  const GaussRational one_minus = GaussRational(1) - GaussRational(lambda.norm(), 0);
  ExactMatrix expected(4, 4);
  expected(0, 3) = GaussRational(1) / (one_minus * one_minus * one_minus);
  CHECK(image == expected);
}

TEST_CASE("jet calculus equals explicit power sums, exact") {
  oracle::Random rng(127);
  for (int t = 0; t < 30; ++t) {
    JordanSpec<GaussRational> spec;
    for (int len : rng.partition(rng.integer(1, 7), 4)) spec.blocks.push_back({"", rng.gauss_in_disk(0.9), len});
    spec.transform = rng.unimodular(spec.dimension());
    std::vector<GaussRational> c;
    for (int i = 0, d = rng.integer(0, 6); i <= d; ++i) c.push_back(rng.gauss(3, 4));
    CHECK(apply_function_jet(E::polynomial(c), spec) == oracle::power_sum(c, build_matrix(spec)));
  }
}

TEST_CASE("jet calculus commutes with similarity, exact") {
  oracle::Random rng(151);
  for (int t = 0; t < 20; ++t) {
    JordanSpec<GaussRational> spec;
    for (int len : rng.partition(rng.integer(1, 6), 3)) spec.blocks.push_back({"", rng.gauss_in_disk(0.9), len});
    const E f = E::blaschke({{spec.blocks[0].value, rng.integer(1, 3)}}, q(3, 5, 4, 5));
    const ExactMatrix p = rng.unimodular(spec.dimension(), 3);
    JordanSpec<GaussRational> moved = spec;
    moved.transform = p;
    CHECK(apply_function_jet(f, moved) == p * apply_function_jet(f, spec) * mat_inverse(p));
  }
}

TEST_CASE("jet calculus rejects poles at eigenvalues") {
  JordanSpec<GaussRational> spec{{{"", q(1, 2), 2}}, std::nullopt};
  CHECK_THROWS_AS(apply_function_jet(E::rational({GaussRational(1)}, {q(-1, 2), GaussRational(1)}), spec), PoleError);
}

TEST_CASE("contour calculus examples") {
  const FloatMatrix d = diag({0.1, 0.2});
  CHECK(frobenius_distance(apply_function_contour(F::identity(), d, 256), d) <= 1e-12);
  CHECK(frobenius_distance(apply_function_contour(F::polynomial({0.0, 0.0, 1.0}), d, 256), diag({0.01, 0.04})) <=
        1e-10);

  JordanSpec<Complex> nil{{{"", 0.0, 4}}, std::nullopt};
  const F sq = F::polynomial({0.0, 0.0, 1.0});
  CHECK(frobenius_distance(apply_function_contour(sq, build_matrix(nil), 512), apply_function_jet(sq, nil)) <= 1e-9);
}

TEST_CASE("contour radius avoids singularities") {
  const FloatMatrix d = diag({0.1, 0.2});
  CHECK(contour_radius(F::identity(), d) == doctest::Approx(0.6));
  const F near_pole = F::rational({1.0}, {1.0, -1.0 / 0.5});
  CHECK(contour_radius(near_pole, d) == doctest::Approx(0.35));
  CHECK(frobenius_distance(apply_function_contour(near_pole, d, 512), diag({1.0 / 0.8, 1.0 / 0.6})) < 1e-10);
}

TEST_CASE("contour calculus errors") {
  const FloatMatrix d = diag({0.1, 0.5});
  const F pole_between = F::rational({1.0}, {1.0, -1.0 / 0.3});
  CHECK_THROWS_AS(apply_function_contour(pole_between, d, 256), ContourError);
  CHECK_THROWS_AS(apply_function_contour(F::identity(), diag({1.2}), 256), ContourError);
  CHECK_THROWS_AS(apply_function_contour(F::identity(), d, 256, 0.3), ContourError);
}

TEST_CASE("jet and contour calculus agree") {
  oracle::Random rng(131);
  for (int t = 0; t < 20; ++t) {
    const auto spec = random_float_spec(rng, 8, 0.8);
    const F f = F::polynomial(random_coeffs(rng, rng.integer(0, 8)));
    CHECK(frobenius_distance(apply_function_jet(f, spec), apply_function_contour(f, build_matrix(spec), 1024)) <=
          1e-8);
  }
}

TEST_CASE("wavelet transform examples") {
  CHECK(std::abs(wavelet_transform(F::constant(1.0), DiskPoint<Complex>(Complex(0.3, 0.6)), 256) - 1.0) <= 1e-12);
  CHECK(std::abs(wavelet_transform(F::polynomial({0.0, 0.0, 0.0, 1.0}), DiskPoint<Complex>(0.3), 256) - 0.027) <=
        1e-10);
  CHECK(std::abs(wavelet_transform(F::rational({1.0}, {1.0, -0.5}), DiskPoint<Complex>(0.1), 256) - 1.0 / 0.95) <=
        1e-10);
}

TEST_CASE("wavelet transform converges geometrically") {
  const F f = F::rational({1.0}, {1.0, -1.0 / 1.05});
  const DiskPoint<Complex> u(0.5);
  const double e256 = std::abs(wavelet_transform(f, u, 256) - f(u.value()));
  const double e512 = std::abs(wavelet_transform(f, u, 512) - f(u.value()));
  CHECK(e512 * 10.0 <= e256);
}

TEST_CASE("wavelet matrix transform") {
  oracle::Random rng(137);
  const auto spec = random_float_spec(rng, 5, 0.7);
  const FloatMatrix a = build_matrix(spec);
  const F sq = F::polynomial({0.0, 0.0, 1.0});
  const FloatMatrix e = FloatMatrix::identity(a.dim());
  CHECK(frobenius_distance(wavelet_transform_matrix(sq, GroupElement<Complex>::identity(), a, e, 512),
                           apply_function_contour(sq, a, 512)) <= 1e-12);

  JordanSpec<Complex> nil{{{"", 0.0, 3}}, std::nullopt};
  const FloatMatrix n = build_matrix(nil);
  const FloatMatrix root{{0.0}, {0.0}, {1.0}};
  const FloatMatrix column = wavelet_transform_matrix(F::identity(), GroupElement<Complex>::identity(), n, root, 256);
  CHECK(frobenius_distance(column, n * root) <= 1e-12);

  // At g != e the pairing equals R(g, a) f(g^-1 . a) m, the right side of the intertwining relation.
  std::mt19937_64 engine(137);
  const auto g = random_group_element(engine, 0.4);
  const F f = F::polynomial(random_coeffs(rng, 4));
  const FloatMatrix a_small = a * Complex(0.5);
  const FloatMatrix lhs = wavelet_transform_matrix(f, g, a_small, e, 1024);
  CHECK(frobenius_distance(lhs, intertwine_sides(f, g, a_small).rhs) <= 1e-9);
}

TEST_CASE("intertwining examples") {
  oracle::Random rng(139);
  std::mt19937_64 engine(139);
  const auto spec = random_float_spec(rng, 5, 0.5);
  const FloatMatrix a = build_matrix(spec);
  const F f = F::polynomial(random_coeffs(rng, 5));
  CHECK(intertwine_check(f, GroupElement<Complex>::identity(), a) <= 1e-12);
  const auto g = random_group_element(engine, 0.5);
  const auto sides = intertwine_sides(F::constant(1.0), g, a);
  CHECK(frobenius_distance(sides.rhs, resolvent(g, a)) <= 1e-12);
  CHECK(sides.defect <= 1e-10);
  for (int t = 0; t < 10; ++t) {
    const auto h = random_group_element(engine, 0.5);
    CHECK(intertwine_check(F::polynomial(random_coeffs(rng, 6)), h, a) <= 1e-8);
  }
}

}  // TEST_SUITE
