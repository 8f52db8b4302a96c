#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <groupoidlab/haar.hpp>

using namespace gl;

namespace {

GroupoidPtr sample_groupoid(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0:
      return pair_groupoid(2 + static_cast<int>(rng() % 3));
    case 1:
      return disjoint_union(cyclic_group(2 + static_cast<int>(rng() % 5)),
                            pair_groupoid(2));
    case 2:
      return group_bundle({{"p", cyclic_group(2)}, {"q", symmetric_group_s3()}});
    default:
      return action_groupoid(cyclic_group(2), {"a", "b", "c"},
                             {{0, 1, 2}, {1, 0, 2}});
  }
}

Rational random_rational(std::mt19937_64& rng) {
  auto q = 1 + static_cast<long>(rng() % 8);
  auto p = 1 + static_cast<long>(rng() % (4 * q));
  Rational out(p, q);
  out.canonicalize();
  return out;
}

}  // namespace

TEST_CASE("counting weights form a Haar system on every constructor") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto h = counting_haar(sample_groupoid(rng));
    CHECK(check_haar(h).ok);
  }
}

TEST_CASE("unit-weight systems are Haar and every Haar system arises so") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto g = sample_groupoid(rng);
    std::map<int, Rational> c;
    for (int u : g->units()) {
      c[u] = random_rational(rng);
    }
    auto h = haar_from_unit_weights(g, c);
    CHECK(check_haar(h).ok);
    // left invariance forces weight(x) = c(d(x))
    for (int x = 0; x < g->size(); ++x) {
      CHECK(h.weight(x) == c.at(g->source(x)));
    }
  }
}

TEST_CASE("a corrupted system fails with a named witness") {
  auto g = pair_groupoid(3);
  auto weights = counting_haar(g).weights();
  weights[static_cast<size_t>(g->index(pair_label("1", "2")))] = Rational(2);
  auto report = check_haar(g, weights);
  CHECK_FALSE(report.ok);
  REQUIRE_FALSE(report.violations.empty());
  CHECK(report.violations.front().find("(1,2)") != std::string::npos);

  weights[static_cast<size_t>(g->index(pair_label("1", "2")))] = Rational(0);
  CHECK_FALSE(check_haar(g, weights).ok);
  CHECK_THROWS_WITH_AS(HaarSystem(g, weights),
                       doctest::Contains("NotAHaarSystem"), Error);
}

TEST_CASE("nonpositive unit weights are rejected") {
  auto g = cyclic_group(2);
  CHECK_THROWS_WITH_AS(haar_from_unit_weights(g, {{0, Rational(0)}}),
                       doctest::Contains("NonPositiveWeight"), Error);
}

TEST_CASE("decomposition round-trips the weights exactly") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    auto g = sample_groupoid(rng);
    std::map<int, Rational> c;
    for (int u : g->units()) {
      c[u] = random_rational(rng);
    }
    auto h = haar_from_unit_weights(g, c);
    auto parts = decompose_haar(h);
    auto rebuilt = haar_from_decomposition(g, parts.beta_tilde);
    CHECK(rebuilt.same_system(h));
    for (auto const& b : parts.beta) {
      CHECK(b == 1);
    }
    for (auto const& [x, v] : parts.delta.value) {
      CHECK(g->range(x) == g->source(x));
      CHECK(v == 1);
    }
  }
}

TEST_CASE("unit measures validate their entries") {
  auto g = pair_groupoid(2);
  CHECK_THROWS_WITH_AS(
      UnitMeasure(g, {{g->index(pair_label("1", "2")), Rational(1)}}),
      doctest::Contains("NotAUnit"), Error);
  CHECK_THROWS_WITH_AS(
      UnitMeasure(g, {{g->index(pair_label("1", "1")), Rational(-1)}}),
      doctest::Contains("NegativeMeasure"), Error);
  CHECK_THROWS_WITH_AS(UnitMeasure(g, {}), doctest::Contains("ZeroMeasure"),
                       Error);
}

TEST_CASE("quasi-invariance is support saturation") {
  auto g = disjoint_union(pair_groupoid(2), cyclic_group(2));
  auto h = counting_haar(g);
  int u1 = g->index(pair_label("1", "1"));
  int u2 = g->index(pair_label("2", "2"));
  int u3 = g->index("0");
  // measure living on one point of a two-point orbit is not quasi-invariant
  CHECK_FALSE(check_quasi_invariance(h, UnitMeasure(g, {{u1, Rational(1)}})));
  // a full orbit is
  auto mu = UnitMeasure(g, {{u1, Rational(1)}, {u2, Rational(2)}});
  CHECK(check_quasi_invariance(h, mu));
  // at finite scale, saturation = equality of null sets of λ^μ and its inverse
  auto forward = induced_measure(h, mu);
  auto backward = inverse_measure(g, forward);
  for (size_t i = 0; i < forward.size(); ++i) {
    CHECK((sgn(forward[i]) > 0) == (sgn(backward[i]) > 0));
  }
  // the isolated group orbit may be dropped entirely
  CHECK(check_quasi_invariance(h, UnitMeasure(g, {{u3, Rational(1)}})));
  CHECK_THROWS_WITH_AS(modular_function(h, UnitMeasure(g, {{u1, Rational(1)}})),
                       doctest::Contains("NotQuasiInvariant"), Error);
}

TEST_CASE("modular function of the two-point pair groupoid fixture") {
  auto g = pair_groupoid(2);
  auto h = counting_haar(g);
  auto mu = UnitMeasure(g, {{g->index(pair_label("1", "1")), Rational(1, 4)},
                            {g->index(pair_label("2", "2")), Rational(3, 4)}});
  auto delta = modular_function(h, mu);
  CHECK(delta.at(g->index(pair_label("1", "2"))) == Rational(1, 3));
  CHECK(delta.at(g->index(pair_label("2", "1"))) == Rational(3));
  CHECK(delta.at(g->index(pair_label("1", "1"))) == 1);
  // independent oracle: Δ(x) = μ(r(x))w(x) / (μ(d(x))w(x⁻¹)) pointwise
  for (auto const& [x, value] : delta.value) {
    CHECK(value == Rational(mu.weight(g->range(x)) * h.weight(x)) /
                       Rational(mu.weight(g->source(x)) *
                                h.weight(g->inverse(x))));
  }
}

TEST_CASE("modular functions are exact cocycles on random systems") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    auto g = sample_groupoid(rng);
    std::map<int, Rational> c;
    std::map<int, Rational> masses;
    for (int u : g->units()) {
      c[u] = random_rational(rng);
      masses[u] = random_rational(rng);
    }
    auto h = haar_from_unit_weights(g, c);
    auto mu = UnitMeasure(g, masses);
    auto delta = modular_function(h, mu);  // multiplicativity checked inside
    for (auto const& [x, value] : delta.value) {
      CHECK(value * delta.at(g->inverse(x)) == 1);
    }
    for (int u : g->units()) {
      CHECK(delta.at(u) == 1);
    }
  }
}
