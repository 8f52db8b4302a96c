#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <groupoidlab/spectra.hpp>
#include <groupoidlab/verify.hpp>

#include "eig_oracle.h"

using namespace gl;

TEST_CASE("jacobi matches a closed-form 2x2 spectrum") {
  CMatrix m(2);
  m.at(0, 0) = 2.0;
  m.at(0, 1) = Complex(0.0, 1.0);
  m.at(1, 0) = Complex(0.0, -1.0);
  m.at(1, 1) = 2.0;
  auto eigs = hermitian_eigenvalues(m);
  CHECK(eigs[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eigs[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("jacobi agrees with the bisection oracle") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + static_cast<int>(rng() % 12);
    auto m = oracle::random_hermitian(rng, n);
    auto fast = hermitian_eigenvalues(m);
    auto slow = oracle::eigenvalues(m);
    REQUIRE(fast.size() == slow.size());
    for (size_t k = 0; k < fast.size(); ++k) {
      CHECK(std::abs(fast[k] - slow[k]) <= 1e-8);
    }
  }
}

TEST_CASE("operator norms respect the weighted inner product") {
  WeightedHilbertSpace space;
  space.basis = {0, 1};
  space.weights = {Rational(1), Rational(4)};
  CMatrix m(2);
  m.at(0, 1) = 1.0;  // shifts the heavy basis vector onto the light one
  CHECK(operator_norm(m, space) == doctest::Approx(0.5).epsilon(1e-12));
  CMatrix id(2);
  id.at(0, 0) = 1.0;
  id.at(1, 1) = 1.0;
  CHECK(operator_norm(id, space) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("regular representation of Z/2 gives the classic norms") {
  auto haar = counting_haar(cyclic_group(2));
  auto g = haar.groupoid();
  auto plus = AlgebraElement::delta(haar, g->index("0"));
  plus.set(g->index("1"), Complex(1.0, 0.0));
  auto minus = AlgebraElement::delta(haar, g->index("0"));
  minus.set(g->index("1"), Complex(-1.0, 0.0));
  // oracle: π(δ_0 ± δ_1) = [[1, ±1], [±1, 1]] with eigenvalues {0, 2}
  CHECK(reduced_norm(plus) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(reduced_norm(minus) == doctest::Approx(2.0).epsilon(1e-12));
  auto l = identity_morphism(haar);
  auto pi = pi_matrix(l, g->index("0"), plus);
  REQUIRE(pi.n == 2);
  for (auto const& v : pi.a) {
    CHECK(std::abs(v - Complex(1.0, 0.0)) <= 1e-15);
  }
}

TEST_CASE("point masses in pair groupoids are partial isometries") {
  for (int n : {2, 3, 5}) {
    auto haar = counting_haar(pair_groupoid(n));
    auto f = AlgebraElement::delta(
        haar, haar.groupoid()->index(pair_label("1", "2")));
    CHECK(reduced_norm(f) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pi is a *-homomorphism bounded by the I-norm") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    auto haar = random_haar(random_groupoid(rng), rng);
    for (auto const& h : morphism_zoo(haar, rng)) {
      auto f = random_element(haar, rng);
      auto g = random_element(haar, rng);
      for (int t : h.target()->units()) {
        auto checks = check_rep_homomorphism(h, t, f, g);
        CHECK(checks.multiplicativity_residual <= kResidualTol);
        CHECK(checks.adjoint_residual <= kResidualTol);
        CHECK(checks.i_norm_slack <= kResidualTol);
      }
    }
  }
}

TEST_CASE("representations compose along morphism chains") {
  Rng rng(37);
  std::uniform_real_distribution<double> coefficient(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    auto haar = random_haar(random_groupoid(rng), rng);
    auto h = h_mu_trivial_morphism(haar,
                                   random_full_measure(haar.groupoid(), rng));
    auto k = h_mu_trivial_morphism(h.target_haar(),
                                   random_full_measure(h.target(), rng));
    auto f = random_element(haar, rng);
    auto xi = random_element(h.target_haar(), rng);
    for (int s : k.target()->units()) {
      auto space = WeightedHilbertSpace::source_fiber(k.target_haar(), s);
      std::vector<Complex> vec(static_cast<size_t>(space.dim()));
      for (auto& v : vec) {
        v = Complex(coefficient(rng), coefficient(rng));
      }
      CHECK(check_functoriality(h, k, f, xi, vec, s) <= kResidualTol);
    }
  }
}

TEST_CASE("the trivial representation of a group is the coefficient sum") {
  auto haar = counting_haar(symmetric_group_s3());
  auto g = haar.groupoid();
  auto mu = UnitMeasure(g, {{g->units()[0], Rational(1)}});
  AlgebraElement f(haar);
  Complex total;
  Rng rng(41);
  std::uniform_real_distribution<double> coefficient(-1.0, 1.0);
  for (int x = 0; x < g->size(); ++x) {
    Complex c(coefficient(rng), coefficient(rng));
    f.set(x, c);
    total += c;
  }
  auto rep = trivial_representation_matrix(haar, mu, f);
  REQUIRE(rep.matrix.n == 1);
  CHECK(std::abs(rep.matrix.at(0, 0) - total) <= 1e-12);
  CHECK(trivial_rep_norm(haar, mu, f) ==
        doctest::Approx(std::abs(total)).epsilon(1e-12));
}

TEST_CASE("norm under h_mu equals the trivial-representation norm") {
  Rng rng(43);
  for (int i = 0; i < 15; ++i) {
    auto haar = random_haar(random_groupoid(rng), rng);
    auto mu = random_full_measure(haar.groupoid(), rng);
    auto h = h_mu_trivial_morphism(haar, mu);
    auto f = random_element(haar, rng);
    CHECK(std::abs(norm_h(h, f) - trivial_rep_norm(haar, mu, f)) <= kNormTol);
  }
}

TEST_CASE("norm sandwich holds over the morphism zoo") {
  Rng rng(47);
  for (int i = 0; i < 15; ++i) {
    auto haar = random_haar(random_groupoid(rng), rng);
    auto f = random_element(haar, rng);
    auto report = check_norm_sandwich(
        haar, f, morphism_zoo(haar, rng),
        {random_full_measure(haar.groupoid(), rng)});
    CHECK(report.ok);
    CHECK(report.reduced <= report.i_norm + kNormTol);
  }
}

TEST_CASE("positive pair-groupoid elements saturate the II norm") {
  // for f ≥ 0 on a pair groupoid with full μ, ‖II_μ(f)‖ = ‖f‖_red
  auto haar = counting_haar(pair_groupoid(3));
  auto g = haar.groupoid();
  auto mu = UnitMeasure(g, [&] {
    std::map<int, Rational> masses;
    for (int u : g->units()) {
      masses[u] = Rational(1);
    }
    return masses;
  }());
  Rng rng(53);
  std::uniform_real_distribution<double> coefficient(0.0, 2.0);
  AlgebraElement f(haar);
  for (int x = 0; x < g->size(); ++x) {
    f.set(x, Complex(coefficient(rng), 0.0));
  }
  CHECK(std::abs(trivial_rep_norm(haar, mu, f) - reduced_norm(f)) <= kNormTol);
  CHECK(ii_norm(haar, mu, f) ==
        doctest::Approx(trivial_rep_norm(haar, mu, f)).epsilon(1e-12));
}

TEST_CASE("the c-star identity holds for the reduced norm") {
  Rng rng(59);
  for (int i = 0; i < 15; ++i) {
    auto haar = random_haar(random_groupoid(rng), rng);
    auto f = random_element(haar, rng);
    double n = reduced_norm(f);
    double nn = reduced_norm(convolve(involution(f), f));
    CHECK(std::abs(nn - n * n) <= kNormTol * std::max(1.0, n * n));
  }
}
