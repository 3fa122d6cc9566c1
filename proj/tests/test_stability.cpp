#include <gtest/gtest.h>

#include <random>

#include "battery.hpp"
#include "oracles.hpp"
#include "stablerep/stability.hpp"
#include "stablerep/stable_states.hpp"

using namespace stablerep;

namespace {

StateFunction table(const CanonicalStateSpec& spec, int level) { return StateView::of(spec).tabulate(level); }

const CanonicalStateSpec& sign_head_spec() {
  static const CanonicalStateSpec spec =
      CanonicalStateSpec::make(2, Partition({1, 1}), ThomaParams::make({0.5, 0.5}, {}));
  return spec;
}

}  // namespace

TEST(AdOrbit, Examples) {
  const StateFunction f = table(sign_head_spec(), 4);
  const StateFunction moved = ad_orbit_state(f, Permutation::transposition(2, 3));
  EXPECT_EQ(f(Permutation::transposition(1, 2)), Complex(-1.0));
  EXPECT_EQ(moved(Permutation::transposition(1, 2)), Complex(0.0));

  EXPECT_EQ(ad_orbit_state(f, Permutation{}).max_abs_difference(f), 0.0);
  const StateFunction central = StateView::of(ThomaParams::make({0.6}, {0.3})).tabulate(4);
  for (const auto& t : SymmetricGroup::of(4).elements()) EXPECT_EQ(ad_orbit_state(central, t).max_abs_difference(central), 0.0);
  EXPECT_THROW(ad_orbit_state(f, Permutation::transposition(4, 5)), std::invalid_argument);
}

TEST(AdOrbit, InvolutionAndInvariants) {
  std::mt19937_64 rng(31);
  const auto& group = SymmetricGroup::of(4);
  for (const auto& spec : battery::specs()) {
    const StateFunction f = table(spec, 4);
    for (int trial = 0; trial < 4; ++trial) {
      const Permutation t = group.element(rng() % group.order());
      const StateFunction g = ad_orbit_state(f, t);
      EXPECT_EQ(ad_orbit_state(g, t.inverse()).max_abs_difference(f), 0.0);
      EXPECT_TRUE(is_positive_definite(g).positive);
      EXPECT_NEAR(dual_norm(g), 1.0, 1e-9);
    }
  }
}

TEST(RhoDistance, Basics) {
  StateFunction trivial(2);
  trivial.set(Permutation{}, 1.0);
  trivial.set(Permutation::transposition(1, 2), 1.0);
  // difference (0, -1) on S_2: both blocks have modulus 1 -> 1/2 + 1/2
  EXPECT_NEAR(rho_distance(StateFunction::delta_identity(2), trivial, 2), 1.0, 1e-12);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const StateFunction a = oracle::random_state(4, rng), b = oracle::random_state(4, rng),
                        c = oracle::random_state(4, rng);
    EXPECT_EQ(rho_distance(a, a, 4), 0.0);
    EXPECT_NEAR(rho_distance(a, b, 4), rho_distance(b, a, 4), 1e-12);
    EXPECT_LE(rho_distance(a, c, 4), rho_distance(a, b, 4) + rho_distance(b, c, 4) + 1e-9);
    for (int K = 1; K <= 4; ++K) EXPECT_LE(rho_distance(a, b, K - 1), rho_distance(a, b, K) + 1e-15);
  }
  EXPECT_THROW(rho_distance(trivial, trivial, 3), std::invalid_argument);
}

TEST(StabilityProfile, Examples) {
  const StabilityProfile p = stability_profile(table(sign_head_spec(), 6), 4, 4);
  ASSERT_EQ(p.points.size(), 5u);
  EXPECT_EQ(p.level, 4);
  EXPECT_GT(p.points[1].defect, 0.0);
  EXPECT_EQ(p.points[1].witness, Permutation::transposition(2, 3));
  for (int m = 2; m <= 4; ++m) EXPECT_EQ(p.points[m].defect, 0.0) << m;

  const StabilityProfile thoma = stability_profile(StateView::of(ThomaParams::make({0.5}, {0.2})).tabulate(6), 4, 4);
  for (const auto& pt : thoma.points) {
    EXPECT_EQ(pt.defect, 0.0);
    EXPECT_TRUE(pt.witness.is_identity());
  }
  EXPECT_THROW(stability_profile(table(sign_head_spec(), 5), 4, 4), std::invalid_argument);
  EXPECT_THROW(stability_profile(table(sign_head_spec(), 5), 6, 2), std::invalid_argument);
}

TEST(StabilityProfile, VanishesExactlyFromCentralDepth) {
  for (const auto& spec : battery::specs()) {
    const StateFunction f = table(spec, 6);
    const StabilityProfile p = stability_profile(f, 4, 4);
    const auto depth = central_depth(f);
    ASSERT_TRUE(depth);
    int first_zero = 0;
    for (const auto& pt : p.points) {
      EXPECT_GE(pt.defect, 0.0);
      if (pt.defect != 0.0) first_zero = pt.m + 1;
    }
    for (const auto& pt : p.points)
      if (pt.m >= spec.n) { EXPECT_EQ(pt.defect, 0.0) << spec.params.to_string() << " m=" << pt.m; }
    EXPECT_EQ(first_zero, *depth);
    EXPECT_EQ(first_zero, spec.n);
  }
}

TEST(StabilityProfile, GeneratorProbesBoundTheExhaustiveSweep) {
  ProbeOptions exhaustive;
  exhaustive.exhaustive = true;
  int missed = 0;
  for (const auto& spec : battery::specs()) {
    const StateFunction f = table(spec, 5);
    const StabilityProfile gen = stability_profile(f, 3, 3), all = stability_profile(f, 3, 3, exhaustive);
    for (std::size_t m = 0; m < gen.points.size(); ++m) {
      const int mm = gen.points[m].m;
      EXPECT_LE(gen.points[m].defect, all.points[m].defect + 1e-12);
      if (mm >= spec.n) EXPECT_EQ(all.points[m].defect, 0.0);
      if (mm < spec.n) EXPECT_GT(all.points[m].defect, 0.0);
      missed += mm < spec.n - 1 && gen.points[m].defect == 0.0;
    }
  }
  // the two probes sit inside the central head for m + 3 <= n and miss the
  // defect there
  EXPECT_GT(missed, 0);
}

TEST(CentralityDefect, Examples) {
  for (const auto& spec : battery::specs()) EXPECT_EQ(centrality_defect(table(spec, 6), spec.n, 6), 0.0);
  EXPECT_GT(centrality_defect(table(sign_head_spec(), 5), 0, 5), 0.0);
  EXPECT_EQ(centrality_defect(StateFunction::delta_identity(5), 2, 5), 0.0);
  EXPECT_EQ(centrality_defect(StateFunction::delta_identity(5), 0, 5), 0.0);
  EXPECT_THROW(centrality_defect(StateFunction::delta_identity(5), 4, 5), std::invalid_argument);

  ProbeOptions exhaustive;
  exhaustive.exhaustive = true;
  EXPECT_EQ(centrality_defect(table(sign_head_spec(), 5), 2, 5, exhaustive), 0.0);
  EXPECT_GT(centrality_defect(table(sign_head_spec(), 5), 1, 5, exhaustive), 0.0);
}
