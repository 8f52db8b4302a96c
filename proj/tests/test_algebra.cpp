#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <groupoidlab/algebra.hpp>
#include <groupoidlab/verify.hpp>

using namespace gl;

namespace {

constexpr double kTol = 1e-9;

}  // namespace

TEST_CASE("point masses convolve like the composition table") {
  auto g = pair_groupoid(3);
  auto haar = counting_haar(g);
  for (int x = 0; x < g->size(); ++x) {
    for (int y = 0; y < g->size(); ++y) {
      auto product = convolve(AlgebraElement::delta(haar, x),
                              AlgebraElement::delta(haar, y));
      if (g->composable(x, y)) {
        // counting weights: δ_x ∗ δ_y = δ_{xy}
        CHECK(max_abs_diff(product,
                           AlgebraElement::delta(haar, g->compose(x, y))) ==
              0.0);
      } else {
        CHECK(product.coeff().empty());
      }
    }
  }
}

TEST_CASE("the unit indicator is a two-sided identity for counting weights") {
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    auto haar = counting_haar(random_groupoid(rng));
    auto one = AlgebraElement::unit_indicator(haar);
    auto f = random_element(haar, rng);
    CHECK(max_abs_diff(convolve(f, one), f) <= kTol);
    CHECK(max_abs_diff(convolve(one, f), f) <= kTol);
  }
}

TEST_CASE("convolution is associative and involution reverses products") {
  Rng rng(5);
  for (int i = 0; i < 25; ++i) {
    auto haar = random_haar(random_groupoid(rng), rng);
    auto f = random_element(haar, rng);
    auto g = random_element(haar, rng);
    auto h = random_element(haar, rng);
    CHECK(max_abs_diff(convolve(convolve(f, g), h),
                       convolve(f, convolve(g, h))) <= kTol);
    CHECK(max_abs_diff(involution(convolve(f, g)),
                       convolve(involution(g), involution(f))) <= kTol);
    CHECK(max_abs_diff(involution(involution(f)), f) == 0.0);
  }
}

TEST_CASE("the I-norm is a *-algebra norm") {
  Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    auto haar = random_haar(random_groupoid(rng), rng);
    auto f = random_element(haar, rng);
    auto g = random_element(haar, rng);
    CHECK(i_norm(involution(f)) == doctest::Approx(i_norm(f)).epsilon(1e-12));
    CHECK(i_norm(convolve(f, g)) <= i_norm(f) * i_norm(g) + kTol);
    auto sum = f;
    sum += g;
    CHECK(i_norm(sum) <= i_norm(f) + i_norm(g) + kTol);
  }
}

TEST_CASE("i_norm of a point mass under counting weights is one") {
  auto haar = counting_haar(pair_groupoid(4));
  for (int x = 0; x < haar.groupoid()->size(); ++x) {
    CHECK(i_norm(AlgebraElement::delta(haar, x)) == 1.0);
  }
}

TEST_CASE("elements of different algebras do not mix") {
  auto a = counting_haar(cyclic_group(2));
  auto b = counting_haar(cyclic_group(3));
  CHECK_THROWS_WITH_AS(convolve(AlgebraElement::delta(a, 0),
                                AlgebraElement::delta(b, 0)),
                       doctest::Contains("AlgebraMismatch"), Error);
}

TEST_CASE("module maps satisfy the hermitian identity") {
  Rng rng(11);
  for (int i = 0; i < 15; ++i) {
    auto haar = random_haar(random_groupoid(rng), rng);
    for (auto const& h : morphism_zoo(haar, rng)) {
      auto f = random_element(haar, rng);
      auto xi1 = random_element(h.target_haar(), rng);
      auto xi2 = random_element(h.target_haar(), rng);
      CHECK(check_hermitian_identity(h, f, xi1, xi2) <= kTol);
    }
  }
}

TEST_CASE("module maps compose along morphism chains") {
  Rng rng(13);
  for (int i = 0; i < 15; ++i) {
    auto haar = random_haar(random_groupoid(rng), rng);
    auto h = h_mu_trivial_morphism(haar, random_full_measure(haar.groupoid(), rng));
    auto k = h_mu_trivial_morphism(
        h.target_haar(), random_full_measure(h.target(), rng));
    auto f = random_element(haar, rng);
    auto xi1 = random_element(h.target_haar(), rng);
    auto xi2 = random_element(k.target_haar(), rng);
    CHECK(check_intertwining(h, k, f, xi1, xi2) <= kTol);
  }
}

TEST_CASE("module-map translates of point masses span the target algebra") {
  Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    auto haar = random_haar(random_groupoid(rng), rng);
    for (auto const& h : morphism_zoo(haar, rng)) {
      CHECK(span_check(h));
    }
  }
}

TEST_CASE("module maps reject elements from a foreign algebra") {
  auto haar = counting_haar(cyclic_group(2));
  auto other = counting_haar(cyclic_group(3));
  auto l = identity_morphism(haar);
  CHECK_THROWS_WITH_AS(h_hat_apply(l, AlgebraElement::delta(other, 0),
                                   AlgebraElement::delta(haar, 0)),
                       doctest::Contains("MorphismMismatch"), Error);
}
