#include <doctest.h>

#include <numbers>

#include "support/oracles.hpp"

using namespace jetspec;

namespace {

const double sqrt2 = std::numbers::sqrt2;

FloatMatrix random_contraction(oracle::Random& rng, std::size_t n, double radius) {
  JordanSpec<Complex> spec;
  for (int len : rng.partition(static_cast<int>(n), 3)) spec.blocks.push_back({"", rng.in_disk(radius), len});
  spec.transform = rng.well_conditioned(n, 0.3);
  return build_matrix(spec);
}

double distance(const GroupElement<Complex>& a, const GroupElement<Complex>& b) {
  return std::abs(a.alpha() - b.alpha()) + std::abs(a.beta() - b.beta());
}

FloatMatrix nil2() { return FloatMatrix{{0.0, 1.0}, {0.0, 0.0}}; }

}  // namespace

TEST_SUITE("moebius") {

TEST_CASE("group element validation") {
  CHECK_NOTHROW(GroupElement<Complex>(sqrt2, 1.0));
  CHECK_THROWS_AS(GroupElement<Complex>(1.0, 1.0), PreconditionViolation);
  CHECK_NOTHROW(GroupElement<GaussRational>(GaussRational(mpq_class(5, 4), 0), GaussRational(mpq_class(3, 4), 0)));
  CHECK_THROWS_AS(GroupElement<GaussRational>(GaussRational(2), GaussRational(1)), PreconditionViolation);
}

TEST_CASE("compose examples") {
  const GroupElement<Complex> g(sqrt2, 1.0);
  CHECK(distance(compose(g, GroupElement<Complex>::identity()), g) < 1e-15);
  CHECK(distance(compose(g, g.inverse()), GroupElement<Complex>::identity()) < 1e-15);
  const auto g2 = compose(g, g);
  CHECK(std::abs(g2.alpha() - 3.0) < 1e-14);
  CHECK(std::abs(g2.beta() - 2.0 * sqrt2) < 1e-14);
}

TEST_CASE("exact compose stays on the hyperboloid") {
  const GroupElement<GaussRational> g(GaussRational(mpq_class(5, 4), 0), GaussRational(0, mpq_class(3, 4)));
  const GroupElement<GaussRational> h(GaussRational(mpq_class(13, 12), 0), GaussRational(mpq_class(5, 12), 0));
  const auto gh = compose(g, h);
  CHECK(gh.determinant_defect() == 0.0);
  CHECK_NOTHROW(GroupElement<GaussRational>(gh.alpha(), gh.beta()));
}

TEST_CASE("decompose examples") {
  auto kd = decompose(GroupElement<Complex>::identity());
  CHECK(kd.omega == 0.0);
  CHECK(std::abs(kd.u) == 0.0);

  kd = decompose(GroupElement<Complex>(sqrt2, 1.0));
  CHECK(std::abs(kd.omega) < 1e-15);
  CHECK(std::abs(kd.u - 1.0 / sqrt2) < 1e-15);

  kd = decompose(GroupElement<Complex>(Complex(0.0, sqrt2), 1.0));
  CHECK(std::abs(kd.omega - std::numbers::pi / 2.0) < 1e-15);
  CHECK(std::abs(kd.u - Complex(0.0, -1.0 / sqrt2)) < 1e-15);
}

TEST_CASE("decompose and reassemble round trip") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_group_element(rng, 0.95);
    CHECK(distance(reassemble(decompose(g)), g) <= 1e-12 * std::abs(g.alpha()));
  }
}

TEST_CASE("random group elements respect the bound") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_group_element(rng, 0.5);
    CHECK(std::abs(decompose(g).u) <= 0.5 + 1e-15);
    CHECK(g.determinant_defect() <= 1e-12);
  }
}

TEST_CASE("mobius_disk examples") {
  const DiskPoint<Complex> z(Complex(0.3, -0.4));
  CHECK(mobius_disk(GroupElement<Complex>::identity(), z).value() == z.value());
  const Complex u(0.4, 0.2);
  CHECK(std::abs(mobius_disk(reassemble(0.0, u), DiskPoint<Complex>(u)).value()) < 1e-15);
  CHECK_THROWS_AS(DiskPoint<Complex>(Complex(1.0, 0.0)), PreconditionViolation);
}

TEST_CASE("mobius_disk action law and disk preservation") {
  std::mt19937_64 engine(61);
  oracle::Random rng(61);
  for (int t = 0; t < 100; ++t) {
    const auto g1 = random_group_element(engine), g2 = random_group_element(engine);
    const DiskPoint<Complex> z(rng.in_disk(0.99));
    const Complex lhs = mobius_disk(compose(g1, g2), z).value();
    const Complex rhs = mobius_disk(g2, mobius_disk(g1, z)).value();
    CHECK(std::abs(lhs - rhs) <= 1e-10);
    CHECK(std::abs(lhs) < 1.0);
  }
}

TEST_CASE("mobius_algebra examples") {
  oracle::Random rng(67);
  const FloatMatrix a = random_contraction(rng, 4, 0.8);
  CHECK(frobenius_distance(mobius_algebra(GroupElement<Complex>::identity(), a), a) < 1e-14);

  const GroupElement<Complex> g(sqrt2, 1.0);
  const FloatMatrix image = mobius_algebra(g, FloatMatrix::zero(3));
  CHECK(frobenius_distance(image, FloatMatrix::identity(3) * Complex(-1.0 / sqrt2)) < 1e-15);

  const GroupElement<GaussRational> ge(GaussRational(mpq_class(5, 4), 0), GaussRational(mpq_class(3, 4), 0));
  CHECK(mobius_algebra(ge, ExactMatrix::zero(2)) == ExactMatrix::identity(2) * GaussRational(mpq_class(-3, 5), 0));
}

TEST_CASE("mobius_algebra on a diagonal matrix is the scalar map") {
  std::mt19937_64 engine(71);
  oracle::Random rng(71);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_group_element(engine);
    FloatMatrix d(3, 3);
    for (std::size_t i = 0; i < 3; ++i) d(i, i) = rng.in_disk(0.9);
    const FloatMatrix image = mobius_algebra(g, d);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(std::abs(image(i, i) - mobius_disk(g, DiskPoint<Complex>(d(i, i))).value()) < 1e-12);
  }
}

TEST_CASE("eigenvalues move by the disk map") {
  std::mt19937_64 engine(73);
  oracle::Random rng(73);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_group_element(engine, 0.6);
    std::vector<Complex> lambdas;
    JordanSpec<Complex> spec;
    for (int i = 0; i < 3; ++i) {
      lambdas.push_back(Complex(0.25 * i - 0.3, 0.2 * i - 0.1));
      spec.blocks.push_back({"", lambdas.back(), 1});
    }
    spec.transform = rng.well_conditioned(3, 0.3);
    const auto moved = find_eigenvalues(mobius_algebra(g, build_matrix(spec)));
    for (const Complex l : lambdas) {
      const Complex image = mobius_disk(g, DiskPoint<Complex>(l)).value();
      double best = 1.0;
      for (const auto& cl : moved) best = std::min(best, std::abs(cl.value - image));
      CHECK(best < 1e-9);
    }
  }
}

TEST_CASE("mobius_algebra needs spectrum inside the disk") {
  CHECK_THROWS_AS(mobius_algebra(GroupElement<Complex>(sqrt2, 1.0), FloatMatrix::identity(2)), PreconditionViolation);
  CHECK_THROWS_AS(mobius_algebra(GroupElement<GaussRational>::identity(), ExactMatrix::identity(2)),
                  PreconditionViolation);
}

TEST_CASE("left action law") {
  std::mt19937_64 engine(79);
  oracle::Random rng(79);
  for (int t = 0; t < 50; ++t) {
    const auto g1 = random_group_element(engine, 0.7), g2 = random_group_element(engine, 0.7);
    const FloatMatrix a = random_contraction(rng, 4, 0.7);
    CHECK(frobenius_distance(act(g1, act(g2, a)), act(compose(g1, g2), a)) <= 1e-10);
  }
}

TEST_CASE("resolvent examples") {
  const FloatMatrix a = nil2();
  CHECK(frobenius_distance(resolvent(GroupElement<Complex>::identity(), a), FloatMatrix::identity(2)) < 1e-15);
  const FloatMatrix expected = (FloatMatrix::identity(2) + nil2() * Complex(1.0 / sqrt2)) * Complex(1.0 / sqrt2);
  CHECK(frobenius_distance(resolvent(GroupElement<Complex>(sqrt2, 1.0), a), expected) < 1e-15);
}

TEST_CASE("resolvent cocycle") {
  std::mt19937_64 engine(83);
  oracle::Random rng(83);
  for (int t = 0; t < 50; ++t) {
    const auto g1 = random_group_element(engine, 0.7), g2 = random_group_element(engine, 0.7);
    const FloatMatrix a = random_contraction(rng, 4, 0.7);
    const FloatMatrix lhs = resolvent(g1, a) * resolvent(g2, mobius_algebra(g1, a));
    CHECK(frobenius_distance(lhs, resolvent(compose(g1, g2), a)) <= 1e-10);
  }
}

TEST_CASE("exact cocycle") {
  const GroupElement<GaussRational> g1(GaussRational(mpq_class(5, 4), 0), GaussRational(0, mpq_class(3, 4)));
  const GroupElement<GaussRational> g2(GaussRational(mpq_class(13, 12), 0), GaussRational(mpq_class(-5, 12), 0));
  JordanSpec<GaussRational> spec{{{"", GaussRational(mpq_class(1, 3), mpq_class(1, 5)), 2}, {"", GaussRational(0), 1}},
                                 std::nullopt};
  const ExactMatrix a = build_matrix(spec);
  CHECK(resolvent(g1, a) * resolvent(g2, mobius_algebra(g1, a)) == resolvent(compose(g1, g2), a));
}

TEST_CASE("rho_a examples and representation law") {
  const AlgebraFunction<Complex> square = [](const FloatMatrix& b) { return b * b + b * Complex(0.5); };
  const FloatMatrix m{{1.0, 2.0}, {0.0, -1.0}};
  const AlgebraFunction<Complex> constant = [m](const FloatMatrix&) { return m; };
  const FloatMatrix b{{0.2, 0.3}, {0.0, -0.1}};

  CHECK(frobenius_distance(rho_a_apply(GroupElement<Complex>::identity(), square, b), square(b)) < 1e-15);
  const GroupElement<Complex> g(sqrt2, Complex(0.5, 0.5) / std::abs(Complex(0.5, 0.5)));
  CHECK(frobenius_distance(rho_a_apply(g, constant, b), resolvent(g, b) * m) < 1e-15);

  std::mt19937_64 engine(89);
  for (int t = 0; t < 30; ++t) {
    const auto g1 = random_group_element(engine, 0.6), g2 = random_group_element(engine, 0.6);
    const FloatMatrix lhs = rho_a(compose(g1, g2), square)(b);
    const FloatMatrix rhs = rho_a(g1, rho_a(g2, square))(b);
    CHECK(frobenius_distance(lhs, rhs) <= 1e-10);
  }
}

TEST_CASE("coherent state examples") {
  const FloatMatrix e = FloatMatrix::identity(2);
  CHECK(frobenius_distance(coherent_state(DiskPoint<Complex>(0.5), FloatMatrix::zero(2), e), e * Complex(2.0)) < 1e-15);
  const Complex u(0.3, 0.4);
  const FloatMatrix expected = e * (1.0 / u) + nil2() * (1.0 / (u * u));
  CHECK(frobenius_distance(coherent_state(DiskPoint<Complex>(u), nil2(), e), expected) < 1e-14);
  CHECK_THROWS_AS(coherent_state(DiskPoint<Complex>(0.0), nil2(), e), SingularMatrix);

  const FloatMatrix column{{0.0}, {1.0}};
  const FloatMatrix v = coherent_state(DiskPoint<Complex>(u), nil2(), column);
  CHECK(v.cols() == 1);
  CHECK(std::abs(v(0, 0) - 1.0 / (u * u)) < 1e-14);
}

}  // TEST_SUITE
