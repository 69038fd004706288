#include <gtest/gtest.h>

#include <functional>

#include "quivkit/lweight.hpp"

namespace quivkit {
namespace {

LWeight w(Vertex i, int p, std::int64_t c = 1) { return LatticeElement::basis(i, p, c); }

struct A2 {
  CartanDatum d = CartanDatum::from_label("A2");
  Quiver q = parse_orientation(d, "1>2");
  RootSystem roots{d};
  ARQuiver arq{q, roots, {1, 0}};
};

TEST(LRoot, Examples) {
  A2 a;
  EXPECT_EQ(l_root(a.d, 0, 0), w(0, 1) + w(0, -1) - w(1, 0));
  const auto a1 = CartanDatum::from_label("A1");
  EXPECT_EQ(l_root(a1, 0, 0), w(0, 1) + w(0, -1));
  for (const auto& label : {"A2", "D4", "E6"}) {
    const auto d = CartanDatum::from_label(label);
    for (Vertex i = 0; i < d.rank(); ++i) {
      WeightVector expected{Basis::kAlpha, std::vector<std::int64_t>(d.rank(), 0)};
      expected.coords[i] = 1;
      EXPECT_EQ(cl(d, l_root(d, i, 5)), to_omega(d, expected));
    }
  }
}

TEST(Deg, Examples) {
  A2 a;
  EXPECT_EQ(deg(a.arq, w(1, 0)), (Root{1, 1}));
  EXPECT_EQ(deg(a.arq, LWeight()), (Root{0, 0}));
  EXPECT_EQ(deg(a.arq, l_root(a.d, 0, 0)), (Root{0, 0}));
  EXPECT_THROW(deg(a.arq, w(1, 2)), std::invalid_argument);
}

TEST(LDominance, Examples) {
  A2 a;
  const LWeight lam = w(0, 1) + w(0, -1);
  EXPECT_EQ(l_dominance_leq(a.d, lam, lam), LRootCombination());
  const auto nu = l_dominance_leq(a.d, w(1, 0), lam);
  ASSERT_TRUE(nu.has_value());
  EXPECT_EQ(*nu, LRootCombination(LatticeElement::basis(0, 0)));
  EXPECT_FALSE(l_dominance_leq(a.d, w(0, 1), w(0, -1)));
  EXPECT_FALSE(l_dominance_leq(a.d, w(0, -1), w(0, 1)));
}

TEST(LDominance, SolverRoundTrip) {
  // Random l-root combinations re-expand and solve back exactly.
  for (const auto& label : {"A3", "D4", "E6"}) {
    const auto d = CartanDatum::from_label(label);
    std::uint64_t state = 12345;
    auto next = [&state] {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return static_cast<int>(state >> 33);
    };
    for (int trial = 0; trial < 200; ++trial) {
      LRootCombination nu;
      for (int k = 0; k < 4; ++k) {
        nu.add({next() % d.rank(), next() % 7 - 3}, next() % 5 - 2);
      }
      const LWeight lam = expand(d, nu);
      const auto back = solve_l_roots(d, lam);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, nu);
      EXPECT_EQ(l_dominance_leq(d, LWeight(), lam).has_value(), nu.is_nonnegative());
    }
  }
}

TEST(LDominance, NotInRootLattice) {
  A2 a;
  EXPECT_FALSE(solve_l_roots(a.d, w(0, 3)).has_value());
}

// Every integer combination of l-roots on the window with entries in
// {-1, 0, 1}: its expansion lies in lP_Q exactly when the support is in
// J-hat_Q.
TEST(Window, BruteForce) {
  for (const auto& [label, orient] : std::vector<std::pair<std::string, std::string>>{
           {"A2", "1>2"}, {"A3", "1>2,3>2"}, {"A3", "1>2,2>3"}}) {
    const Quiver q = parse_orientation(CartanDatum::from_label(label), orient);
    const RootSystem roots(q.datum());
    const ARQuiver arq(q, roots, q.height_function());
    std::vector<ARVertex> unknowns;
    for (int p = arq.min_p() + 1; p < arq.max_p(); ++p) {
      for (Vertex i = 0; i < q.rank(); ++i) unknowns.push_back({i, p});
    }
    ASSERT_LE(unknowns.size(), 12u);
    LRootCombination nu;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == unknowns.size()) {
        EXPECT_EQ(in_lp_q(arq, expand(q.datum(), nu)), in_lq_q(arq, nu)) << label;
        return;
      }
      for (int c : {-1, 0, 1}) {
        LRootCombination saved = nu;
        nu.add(unknowns[k], c);
        rec(k + 1);
        nu = saved;
      }
    };
    rec(0);
    EXPECT_TRUE(lrootq_window_check(arq));
  }
}

TEST(Window, AllInstances) {
  for (const auto& label : ade_labels(8)) {
    const auto d = CartanDatum::from_label(label);
    auto quivers = d.rank() <= 5 ? Quiver::all_orientations(d) : std::vector<Quiver>{Quiver::standard(d)};
    for (const auto& q : quivers) {
      const RootSystem roots(d);
      EXPECT_TRUE(lrootq_window_check(ARQuiver(q, roots, q.height_function()))) << label;
    }
  }
}

TEST(DominantWeights, CountMatchesA2) {
  A2 a;
  EXPECT_EQ(dominant_lweights_of_degree(a.arq, {1, 1}).size(), 2u);
  EXPECT_EQ(dominant_lweights_of_degree(a.arq, {2, 2}).size(), 3u);
  EXPECT_EQ(dominant_lweights_of_degree(a.arq, {0, 0}), std::vector<LWeight>{LWeight()});
}

TEST(Duals, Involutive) {
  const RootSystem roots(CartanDatum::from_label("A4"));
  const LWeight lam = w(0, 1) + w(2, -3, 2);
  EXPECT_EQ(dual_left(roots, dual_right(roots, lam)), lam);
  EXPECT_EQ(dual_right(roots, w(0, 1)), w(3, 1 - 5));
}

TEST(IHatZ, Parity) {
  const HeightFunction xi{1, 0};
  EXPECT_TRUE(in_i_hat_z(xi, {0, 3}));
  EXPECT_FALSE(in_i_hat_z(xi, {0, 0}));
  EXPECT_TRUE(in_i_hat_z(xi, {1, -2}));
}

}  // namespace
}  // namespace quivkit
