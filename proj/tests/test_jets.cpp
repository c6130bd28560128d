#include <doctest.h>

#include "support/oracles.hpp"

using namespace jetspec;

namespace {

using F = HoloFunction<Complex>;
using E = HoloFunction<GaussRational>;

GaussRational q(long p, long d, long r = 0, long s = 1) { return {mpq_class(p, d), mpq_class(r, s)}; }

bool close(const Jet<Complex>& a, const std::vector<Complex>& d, double tol) {
  if (a.derivatives().size() != d.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (std::abs(a.derivatives()[i] - d[i]) > tol) return false;
  return true;
}

Jet<Complex> random_jet(oracle::Random& rng, Complex base, int n) {
  std::vector<Complex> d;
  for (int i = 0; i <= n; ++i) d.push_back(Complex(rng.real(-1, 1), rng.real(-1, 1)));
  return Jet<Complex>(base, d);
}

F random_polynomial(oracle::Random& rng, int degree) {
  std::vector<Complex> c;
  for (int i = 0; i <= degree; ++i) c.push_back(Complex(rng.real(-1, 1), rng.real(-1, 1)));
  return F::polynomial(c);
}

}  // namespace

TEST_SUITE("jets") {

TEST_CASE("jet_of examples") {
  CHECK(close(jet_of(F::polynomial({0.0, 0.0, 1.0}), Complex(0.0), 3), {0.0, 0.0, 2.0, 0.0}, 0.0));
  CHECK(close(jet_of(F::rational({1.0}, {1.0, -1.0}), Complex(0.0), 3), {1.0, 1.0, 2.0, 6.0}, 1e-14));

  const GaussRational lambda = q(1, 2, 1, 3);
  const auto jb = jet_of(E::blaschke({{lambda, 1}}), lambda, 1);
  CHECK(jb.derivatives()[0] == GaussRational(0));
  CHECK(jb.derivatives()[1] == GaussRational(1) / (GaussRational(1) - GaussRational(lambda.norm(), 0)));
}

TEST_CASE("jet_of rejects poles") {
  CHECK_THROWS_AS(jet_of(F::rational({1.0}, {1.0, -1.0}), Complex(1.0), 2), PoleError);
  CHECK_THROWS_AS(jet_of(E::rational({GaussRational(1)}, {GaussRational(0), GaussRational(1)}), GaussRational(0), 1),
                  PoleError);
}

TEST_CASE("jet_of agrees with finite differences") {
  oracle::Random rng(97);
  const std::vector<F> functions{
      random_polynomial(rng, 5),
      F::rational({1.0, 0.5}, {1.0, Complex(-0.4, 0.3)}),
      F::blaschke({{Complex(0.3, 0.2), 2}, {Complex(-0.5, 0.1), 1}}, Complex(0.0, 1.0)),
      F::exp(F::polynomial({0.0, Complex(0.5, 0.5)})),
      F::log(F::polynomial({2.0, -1.0})),
      F::compose(F::exp(F::identity()), F::blaschke({{Complex(0.1, 0.0), 1}})),
  };
  for (const auto& f : functions) {
    for (int t = 0; t < 5; ++t) {
      const Complex z = rng.in_disk(0.5);
      const auto fd = oracle::finite_differences([&](Complex w) { return f(w); }, z, 1e-3);
      const auto jet = jet_of(f, z, 3);
      for (int j = 0; j <= 3; ++j) {
        const double scale = std::max(1.0, std::abs(jet.derivatives()[j]));
        CHECK(std::abs(jet.derivatives()[j] - fd[j]) <= 1e-5 * scale);
      }
    }
  }
}

TEST_CASE("jet_mul examples") {
  const Complex z(0.0);
  const auto f = jet_of(F::rational({1.0}, {1.0, -1.0}), z, 4);
  CHECK(close(jet_mul(jet_of(F::constant(1.0), z, 4), f), f.derivatives(), 0.0));
  CHECK(close(jet_mul(jet_of(F::identity(), z, 2), jet_of(F::identity(), z, 2)), {0.0, 0.0, 2.0}, 0.0));
  const auto ex = jet_of(F::exp(F::identity()), z, 4);
  CHECK(close(jet_mul(ex, ex), {1.0, 2.0, 4.0, 8.0, 16.0}, 1e-13));
  CHECK_THROWS_AS(jet_mul(ex, jet_of(F::identity(), Complex(0.5), 4)), PreconditionViolation);
  CHECK_THROWS_AS(jet_mul(ex, jet_of(F::identity(), z, 3)), PreconditionViolation);
}

TEST_CASE("jet_compose examples") {
  const Complex z(0.0);
  const auto inner = jet_of(F::polynomial({0.0, 2.0}), z, 3);
  CHECK(close(jet_compose(jet_of(F::identity(), Complex(0.0), 3), inner), inner.derivatives(), 0.0));
  CHECK(close(jet_compose(jet_of(F::exp(F::identity()), Complex(0.0), 3), inner), {1.0, 2.0, 4.0, 8.0}, 1e-13));
  const auto sq = jet_of(F::polynomial({0.0, 0.0, 1.0}), z, 4);
  CHECK(close(jet_compose(sq, sq), {0.0, 0.0, 0.0, 0.0, 24.0}, 0.0));
  CHECK_THROWS_AS(jet_compose(sq, jet_of(F::constant(0.5), z, 4)), PreconditionViolation);
}

TEST_CASE("jet ring axioms at a fixed base") {
  oracle::Random rng(101);
  for (int t = 0; t < 50; ++t) {
    const Complex base = rng.in_disk(0.8);
    const int n = rng.integer(0, 5);
    const auto a = random_jet(rng, base, n), b = random_jet(rng, base, n), c = random_jet(rng, base, n);
    CHECK(approx_equal(jet_mul(a, b), jet_mul(b, a), 1e-13));
    CHECK(approx_equal(jet_mul(jet_mul(a, b), c), jet_mul(a, jet_mul(b, c)), 1e-12));
    CHECK(approx_equal(jet_mul(a, jet_add(b, c)), jet_add(jet_mul(a, b), jet_mul(a, c)), 1e-12));
  }
}

TEST_CASE("jet composition is associative and matches the composed function") {
  oracle::Random rng(103);
  for (int t = 0; t < 30; ++t) {
    const F f = random_polynomial(rng, 3), g = random_polynomial(rng, 3), h = random_polynomial(rng, 3);
    const Complex z = rng.in_disk(0.5);
    const int n = 4;
    const auto jh = jet_of(h, z, n);
    const auto jg = jet_of(g, jh.value(), n);
    const auto jf = jet_of(f, jg.value(), n);
    const auto left = jet_compose(jet_compose(jf, jg), jh);
    const auto right = jet_compose(jf, jet_compose(jg, jh));
    CHECK(approx_equal(left, right, 1e-10));
    CHECK(approx_equal(left, jet_of(F::compose(f, F::compose(g, h)), z, n), 1e-10));
  }
}

TEST_CASE("exact jets stay exact") {
  const GaussRational lambda = q(1, 3, -1, 4);
  const E cube = E::blaschke({{lambda, 3}});
  const auto j = jet_of(cube, lambda, 4);
  CHECK(j.derivatives()[0] == GaussRational(0));
  CHECK(j.derivatives()[1] == GaussRational(0));
  CHECK(j.derivatives()[2] == GaussRational(0));
  const GaussRational expected = GaussRational(6) / ((GaussRational(1) - GaussRational(lambda.norm(), 0)) *
                                                     (GaussRational(1) - GaussRational(lambda.norm(), 0)) *
                                                     (GaussRational(1) - GaussRational(lambda.norm(), 0)));
  CHECK(j.derivatives()[3] == expected);
}

TEST_CASE("rho1_prolonged examples") {
  oracle::Random rng(107);
  const auto jf = random_jet(rng, Complex(0.2, 0.1), 3);
  CHECK(approx_equal(rho1_prolonged(GroupElement<Complex>::identity(), jf), jf, 1e-15));

  std::mt19937_64 engine(107);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_group_element(engine, 0.6);
    const F f = random_polynomial(rng, 4);
    const Complex w = rng.in_disk(0.6);
    const int n = rng.integer(0, 4);
    const auto lifted = rho1_prolonged(g, jet_of(f, w, n));
    CHECK(std::abs(mobius_disk(g, DiskPoint<Complex>(lifted.base())).value() - w) < 1e-12);
    CHECK(approx_equal(lifted, jet_of(rho1(g, f), lifted.base(), n), 1e-10));
  }
}

TEST_CASE("rho1_prolonged representation law") {
  std::mt19937_64 engine(109);
  oracle::Random rng(109);
  for (int t = 0; t < 50; ++t) {
    const auto g1 = random_group_element(engine, 0.6), g2 = random_group_element(engine, 0.6);
    const auto jf = random_jet(rng, rng.in_disk(0.6), rng.integer(0, 4));
    const auto lhs = rho1_prolonged(compose(g1, g2), jf);
    const auto rhs = rho1_prolonged(g1, rho1_prolonged(g2, jf));
    CHECK(std::abs(lhs.base() - rhs.base()) < 1e-12);
    CHECK(approx_equal(lhs, rhs, 1e-10));
  }
}

TEST_CASE("degree_of_zero examples") {
  CHECK(degree_of_zero(F::identity(), Complex(0.3, 0.2), 4) == 1);
  CHECK(degree_of_zero(F::polynomial({0.0, 0.0, 1.0}), Complex(0.0), 4) == 2);
  const GaussRational lambda = q(-1, 2, 1, 3);
  CHECK(degree_of_zero(E::blaschke({{lambda, 3}}), lambda, 6) == 3);
  CHECK_THROWS_AS(degree_of_zero(E::constant(GaussRational(2)), lambda, 5), DegreeExceedsOrder);
  try {
    (void)degree_of_zero(E::polynomial({GaussRational(0), GaussRational(0), GaussRational(0), GaussRational(1)}),
                         GaussRational(0), 2);
    FAIL("expected DegreeExceedsOrder");
  } catch (const DegreeExceedsOrder& e) {
    CHECK(e.n_max() == 2);
  }
}

}  // TEST_SUITE
