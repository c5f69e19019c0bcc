#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elasto/curves.hpp"
#include "support.hpp"

using namespace elasto;
using elasto::testing::Rng;

TEST_CASE("wave_curve_sigma") {
  const Params p(1.0);
  CHECK(wave_curve_sigma({0, 0}, WaveFamily::One, 1.0, p) == 1.0);
  CHECK(wave_curve_sigma({0, 0}, WaveFamily::Two, 1.0, p) == -1.0);
  CHECK(wave_curve_sigma({3, -2}, WaveFamily::One, 3.0, p) == -2.0);
  CHECK(wave_curve_sigma({3, -2}, WaveFamily::Two, 3.0, p) == -2.0);
}

TEST_CASE("classify examples") {
  const Params p(1.0);
  auto c = classify({0, 0}, {2, 2}, p);
  CHECK(c.label == RegionLabel::OnR1);
  CHECK(c.distances.d1 == 0.0);

  c = classify({0, 0}, {0, 2}, p);
  CHECK(c.label == RegionLabel::Gamma4);
  CHECK(c.distances.d1 == 2.0);
  CHECK(c.distances.d2 == 2.0);

  c = classify({2, 0}, {0, 0}, p);
  CHECK(c.label == RegionLabel::Gamma3);
  CHECK(c.distances.d1 == 2.0);
  CHECK(c.distances.d2 == -2.0);

  CHECK(classify({1.5, -3}, {1.5, -3}, p).label == RegionLabel::Coincident);
  CHECK(classify({0, 0}, {-1, -1}, p).label == RegionLabel::OnS1);
  CHECK(classify({0, 0}, {2, -2}, p).label == RegionLabel::OnR2);
  CHECK(classify({0, 0}, {-1, 1}, p).label == RegionLabel::OnS2);
  CHECK_THROWS_AS(classify({0, 0}, {1, 1}, p, -1.0), validation_error);
}

TEST_CASE("region sign pattern agrees with the brute-force connection types") {
  // The label must name the pair of wave types actually needed: intersect the
  // 1-curve through the base with the 2-curve through the query by a linear
  // solve and read off u* > u_b (1-rarefaction) and u_q > u* (2-rarefaction).
  Rng rng(101);
  int seen[9] = {};
  for (int n = 0; n < 10000; ++n) {
    const double k = testing::random_k(rng);
    const Params p(k);
    const State b = testing::random_state(rng, 5, 5);
    const State q = testing::random_state(rng, 5, 5);
    const auto c = classify(b, q, p);
    const State star = testing::brute_force_intersection(b, q, k);
    const bool rare1 = star.u > b.u;
    const bool rare2 = q.u > star.u;
    RegionLabel expected;
    if (rare1 && rare2) expected = RegionLabel::Gamma1;
    else if (!rare1 && rare2) expected = RegionLabel::Gamma2;
    else if (!rare1 && !rare2) expected = RegionLabel::Gamma3;
    else expected = RegionLabel::Gamma4;
    REQUIRE(c.label == expected);
    ++seen[static_cast<int>(c.label)];
  }
  for (int g = 5; g < 9; ++g) CHECK(seen[g] > 1000);
}

TEST_CASE("classify is translation invariant") {
  Rng rng(5);
  for (int n = 0; n < 2000; ++n) {
    const Params p(testing::random_k(rng));
    const State b = testing::random_state(rng, 3, 3);
    const State q = testing::random_state(rng, 3, 3);
    const double du = testing::uniform(rng, -2, 2), ds = testing::uniform(rng, -2, 2);
    const auto c0 = classify(b, q, p);
    const auto c1 = classify({b.u + du, b.sigma + ds}, {q.u + du, q.sigma + ds}, p);
    CHECK(c0.label == c1.label);
  }
}

TEST_CASE("states built on a wave curve classify onto it") {
  Rng rng(9);
  for (int n = 0; n < 5000; ++n) {
    const Params p(testing::random_k(rng));
    const State b = testing::random_state(rng, 5, 5);
    const double du = testing::uniform(rng, 0.01, 3.0);
    const bool up = n % 2 == 0;
    const double u = up ? b.u + du : b.u - du;
    const State q1{u, wave_curve_sigma(b, WaveFamily::One, u, p)};
    const State q2{u, wave_curve_sigma(b, WaveFamily::Two, u, p)};
    CHECK(classify(b, q1, p).label == (up ? RegionLabel::OnR1 : RegionLabel::OnS1));
    CHECK(classify(b, q2, p).label == (up ? RegionLabel::OnR2 : RegionLabel::OnS2));
  }
}

TEST_CASE("on-curve detection wins; zero strength is coincident") {
  const Params p(2.0);
  const State b{1.0, 1.0};
  // Off the 1-curve by less than the tolerance.
  const State q{2.0, 1.0 + 2.0 + 1e-14};
  CHECK(classify(b, q, p).label == RegionLabel::OnR1);
  CHECK(classify(b, q, p, 0.0).label == RegionLabel::Gamma4);
  CHECK(classify(b, {1.0, 1.0 + 1e-15}, p).label == RegionLabel::Coincident);
}

TEST_CASE("exhaustive Gamma labels away from the curves") {
  Rng rng(13);
  for (int n = 0; n < 5000; ++n) {
    const Params p(testing::random_k(rng));
    const State b = testing::random_state(rng, 5, 5);
    const State q = testing::random_state(rng, 5, 5);
    const auto c = classify(b, q, p);
    const int idx = static_cast<int>(c.label);
    CHECK(idx >= static_cast<int>(RegionLabel::Gamma1));
  }
}

TEST_CASE("intermediate state examples") {
  const Params p(1.0);
  CHECK(intermediate_state({0, 0}, {0, 2}, p) == State{1, 1});
  // The brute-force solve puts this one at (1, -1).
  const State s = intermediate_state({2, 0}, {0, 0}, p);
  CHECK(s == State{1, -1});
  CHECK(testing::brute_force_intersection({2, 0}, {0, 0}, 1.0) == State{1, -1});
  CHECK(intermediate_state({0.3, -7.25}, {0.3, -7.25}, p) == State{0.3, -7.25});
}

TEST_CASE("intermediate state lies on both curves and matches the linear solve") {
  Rng rng(17);
  for (int n = 0; n < 10000; ++n) {
    const double k = testing::random_k(rng);
    const Params p(k);
    const State b = testing::random_state(rng, 10, 10);
    const State t = testing::random_state(rng, 10, 10);
    const State s = intermediate_state(b, t, p);
    const double scale = std::max(state_scale(b, t, p), state_scale(s, s, p));
    CHECK(std::abs(s.sigma - wave_curve_sigma(b, WaveFamily::One, s.u, p)) <= 1e-12 * scale);
    CHECK(std::abs(s.sigma - wave_curve_sigma(t, WaveFamily::Two, s.u, p)) <= 1e-12 * scale);
    const State bf = testing::brute_force_intersection(b, t, k);
    CHECK(std::abs(s.sigma - bf.sigma) <= 1e-12 * scale);
    CHECK(k * std::abs(s.u - bf.u) <= 1e-12 * scale);
  }
}
