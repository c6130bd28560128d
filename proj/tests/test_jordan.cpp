#include <doctest.h>

#include "support/oracles.hpp"

using namespace jetspec;

namespace {

GaussRational q(long p, long d, long r = 0, long s = 1) { return {mpq_class(p, d), mpq_class(r, s)}; }

JordanSpec<GaussRational> random_spec(oracle::Random& rng, int max_dim) {
  JordanSpec<GaussRational> spec;
  const int distinct = rng.integer(1, 3);
  int remaining = max_dim;
  for (int e = 0; e < distinct && remaining > 0; ++e) {
    const GaussRational lambda = rng.gauss_in_disk(0.95);
    bool fresh = true;
    for (const auto& b : spec.blocks) fresh = fresh && !(b.value == lambda);
    if (!fresh) continue;
    for (int len : rng.partition(rng.integer(1, std::min(remaining, 6)), 4)) {
      spec.blocks.push_back({"", lambda, len});
      remaining -= len;
    }
  }
  return spec;
}

std::vector<GaussRational> distinct_values(const JordanSpec<GaussRational>& spec) {
  std::vector<GaussRational> out;
  for (const auto& b : spec.blocks)
    if (std::find(out.begin(), out.end(), b.value) == out.end()) out.push_back(b.value);
  return out;
}

}  // namespace

TEST_SUITE("jordan") {

TEST_CASE("build_matrix examples") {
  JordanSpec<GaussRational> nil{{{"", GaussRational(0), 2}}, std::nullopt};
  CHECK(build_matrix(nil) == ExactMatrix{{GaussRational(0), GaussRational(1)}, {GaussRational(0), GaussRational(0)}});

  JordanSpec<GaussRational> conj{{{"", GaussRational(5), 1}}, ExactMatrix{{GaussRational(2)}}};
  CHECK(build_matrix(conj) == ExactMatrix{{GaussRational(5)}});

  const FloatMatrix ten = build_matrix(oracle::reference_spec());
  REQUIRE(ten.dim() == 10);
  const auto blocks = oracle::reference_blocks();
  CHECK(ten(0, 0) == blocks[0].first);
  CHECK(ten(0, 1) == Complex(1.0));
  CHECK(ten(2, 3) == Complex(0.0));  // boundary between J3 and J4
  CHECK(ten(3, 3) == blocks[1].first);
  CHECK(ten(7, 7) == blocks[2].first);
  CHECK(ten(8, 9) == Complex(1.0));
}

TEST_CASE("build_matrix rejects bad specs") {
  JordanSpec<GaussRational> zero_len{{{"", GaussRational(0), 0}}, std::nullopt};
  CHECK_THROWS_AS(build_matrix(zero_len), PreconditionViolation);
  JordanSpec<GaussRational> wrong_p{{{"", GaussRational(0), 2}}, ExactMatrix::identity(3)};
  CHECK_THROWS_AS(build_matrix(wrong_p), PreconditionViolation);
  JordanSpec<GaussRational> singular_p{{{"", GaussRational(0), 2}}, ExactMatrix::zero(2)};
  CHECK_THROWS_AS(build_matrix(singular_p), SingularMatrix);
}

TEST_CASE("weyr sequence examples") {
  CHECK(weyr_sequence(jordan_block(GaussRational(0), 3), GaussRational(0)) == std::vector<std::size_t>{1, 1, 1});
  JordanSpec<GaussRational> two{{{"", GaussRational(0), 3}, {"", GaussRational(0), 1}}, std::nullopt};
  CHECK(weyr_sequence(build_matrix(two), GaussRational(0)) == std::vector<std::size_t>{2, 1, 1});
  CHECK(weyr_sequence(jordan_block(GaussRational(5), 2), GaussRational(0)).empty());
}

TEST_CASE("segre and weyr are conjugate") {
  CHECK(segre_from_weyr({2, 1, 1}) == std::vector<int>{3, 1});
  CHECK(weyr_from_segre({3, 1}) == std::vector<std::size_t>{2, 1, 1});
  oracle::Random rng(41);
  for (int t = 0; t < 100; ++t) {
    const auto segre = rng.partition(rng.integer(1, 12), 6);
    CHECK(segre_from_weyr(weyr_from_segre(segre)) == segre);
  }
}

TEST_CASE("spectrum of the reference example, float dense") {
  const auto s = spectrum(build_matrix(oracle::reference_spec()));
  CHECK(s.total_order() == 10);
  REQUIRE(s.points.size() == 4);
  for (const auto& [lambda, k] : oracle::reference_blocks()) {
    int found = 0;
    for (const auto& p : s.points)
      if (std::abs(p.lambda - lambda) < 1e-9) found = p.k;
    CHECK(found == k);
  }
}

TEST_CASE("spectrum of the diagonal comparison matrix") {
  JordanSpec<Complex> diag;
  for (const auto& [lambda, k] : oracle::reference_blocks()) diag.blocks.push_back({"", lambda, 1});
  const auto s = spectrum(build_matrix(diag));
  CHECK(s.points.size() == 4);
  CHECK(oracle::k_profile(s) == std::multiset<int>{1, 1, 1, 1});
}

TEST_CASE("spectrum of zero") {
  const auto s = spectrum<GaussRational>(ExactMatrix::zero(3), std::vector<GaussRational>{GaussRational(0)});
  CHECK(oracle::signature(s) == std::multiset<std::pair<std::string, int>>{{"0", 1}, {"0", 1}, {"0", 1}});
  CHECK(spectrum(FloatMatrix::zero(3)).points.size() == 3);
}

TEST_CASE("exact spectrum needs eigenvalues") {
  CHECK_THROWS_AS(spectrum(ExactMatrix::zero(2)), PreconditionViolation);
  // A missing eigenvalue leaves dimensions unaccounted for.
  CHECK_THROWS_AS(spectrum<GaussRational>(jordan_block(GaussRational(1), 2), std::vector<GaussRational>{GaussRational(0)}),
                  NumericError);
}

TEST_CASE("find_eigenvalues examples") {
  const auto nil = find_eigenvalues(FloatMatrix{{0.0, 1.0}, {0.0, 0.0}});
  REQUIRE(nil.size() == 1);
  CHECK(nil[0].multiplicity == 2);
  CHECK(std::abs(nil[0].value) < 1e-12);

  const auto d = find_eigenvalues(FloatMatrix{{0.1, 0.0}, {0.0, 0.2}});
  REQUIRE(d.size() == 2);
  CHECK(d[0].multiplicity + d[1].multiplicity == 2);

  const auto ten = find_eigenvalues(build_matrix(oracle::reference_spec()));
  REQUIRE(ten.size() == 4);
  for (const auto& [lambda, k] : oracle::reference_blocks()) {
    int mult = 0;
    for (const auto& cl : ten)
      if (std::abs(cl.value - lambda) < 1e-9) mult = cl.multiplicity;
    CHECK(mult == k);
  }
}

TEST_CASE("structural spectrum keeps labels and irrational values") {
  const auto s = structural_spectrum(oracle::reference_spec());
  REQUIRE(s.points.size() == 4);
  CHECK(s.points[0].label == "l1");
  CHECK(s.points[0].k == 3);
  CHECK(s.points[1].label == "l2");
  CHECK(s.points[1].k == 4);
  CHECK(s.points[2].label == "l4");
  CHECK(s.points[3].label == "l3");
}

TEST_CASE("spectrum recovers a random spec, exact") {
  oracle::Random rng(43);
  for (int t = 0; t < 60; ++t) {
    auto spec = random_spec(rng, 10);
    spec.transform = rng.unimodular(spec.dimension());
    const ExactMatrix a = build_matrix(spec);
    const auto s = spectrum<GaussRational>(a, distinct_values(spec));
    std::multiset<std::pair<std::string, int>> expected;
    for (const auto& b : spec.blocks) expected.insert({b.value.to_string(), b.length});
    CHECK(oracle::signature(s) == expected);
    for (const GaussRational& lambda : distinct_values(spec)) {
      std::vector<int> lengths;
      for (const auto& p : s.points)
        if (p.lambda == lambda) lengths.push_back(p.k);
      std::sort(lengths.rbegin(), lengths.rend());
      CHECK(lengths == oracle::block_lengths(a, lambda));
    }
  }
}

TEST_CASE("similarity invariance, exact") {
  oracle::Random rng(47);
  for (int t = 0; t < 40; ++t) {
    const auto spec = random_spec(rng, 8);
    const ExactMatrix a = build_matrix(spec);
    const ExactMatrix p = rng.unimodular(a.dim(), 3);
    const ExactMatrix b = p * a * mat_inverse(p);
    CHECK(oracle::signature(spectrum<GaussRational>(b, distinct_values(spec))) == oracle::signature(spectrum<GaussRational>(a, distinct_values(spec))));
  }
}

TEST_CASE("canonical order") {
  Spectrum<GaussRational> s;
  s.points = {{q(1, 4), 1, ""}, {q(1, 2), 1, ""}, {q(0, 1, 1, 2), 2, ""}, {q(1, 2), 3, ""}};
  canonical_order(s);
  CHECK(s.points[0].lambda == q(1, 2));
  CHECK(s.points[0].k == 3);
  CHECK(s.points[1].k == 1);
  CHECK(s.points[2].lambda == q(0, 1, 1, 2));
  CHECK(s.points[3].lambda == q(1, 4));
}

TEST_CASE("same_multiset ignores order and labels") {
  Spectrum<Complex> a, b;
  a.points = {{0.5, 2, "x"}, {0.25, 1, "y"}};
  b.points = {{0.25, 1, ""}, {0.5 + 1e-14, 2, ""}};
  CHECK(same_multiset(a, b));
  b.points[0].k = 2;
  CHECK_FALSE(same_multiset(a, b));
}

}  // TEST_SUITE
