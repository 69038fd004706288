#include <gtest/gtest.h>

#include <set>

#include "quivkit/rootsys.hpp"

namespace quivkit {
namespace {

WeightVector alpha(std::vector<std::int64_t> c) { return {Basis::kAlpha, std::move(c)}; }
WeightVector omega(std::vector<std::int64_t> c) { return {Basis::kOmega, std::move(c)}; }

TEST(CartanDatum, Matrices) {
  EXPECT_EQ(CartanDatum::from_label("A2").cartan_matrix(),
            (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
  EXPECT_EQ(CartanDatum::from_label("A1").cartan_matrix(), (std::vector<std::vector<int>>{{2}}));
  const auto d4 = CartanDatum::from_label("D4");
  EXPECT_EQ(d4.cartan_matrix()[1], (std::vector<int>{-1, 2, -1, -1}));
}

TEST(CartanDatum, BadLabels) {
  for (const char* bad : {"", "A0", "D3", "E5", "E9", "F4", "A", "Ax"}) {
    EXPECT_THROW(CartanDatum::from_label(bad), std::invalid_argument) << bad;
  }
}

TEST(SimpleReflection, Examples) {
  const auto a2 = CartanDatum::from_label("A2");
  EXPECT_EQ(simple_reflection(a2, 0, alpha({1, 0})), alpha({-1, 0}));
  EXPECT_EQ(simple_reflection(a2, 1, alpha({1, 0})), alpha({1, 1}));
  EXPECT_EQ(simple_reflection(a2, 0, omega({0, 1})), omega({0, 1}));
  EXPECT_THROW(simple_reflection(a2, 2, alpha({1, 0})), std::out_of_range);
}

TEST(SimpleReflection, Involution) {
  for (const auto& label : ade_labels(8)) {
    const auto d = CartanDatum::from_label(label);
    for (Vertex i = 0; i < d.rank(); ++i) {
      for (Vertex j = 0; j < d.rank(); ++j) {
        std::vector<std::int64_t> c(d.rank(), 0);
        c[j] = 1;
        c[(j + 1) % d.rank()] -= 3;
        for (auto w : {alpha(c), omega(c)}) {
          EXPECT_EQ(simple_reflection(d, i, simple_reflection(d, i, w)), w);
        }
      }
    }
  }
}

TEST(RootSystem, PositiveRoots) {
  const RootSystem a2(CartanDatum::from_label("A2"));
  EXPECT_EQ(a2.positive_roots(), (std::vector<Root>{{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(RootSystem(CartanDatum::from_label("A1")).positive_roots(), (std::vector<Root>{{1}}));
  EXPECT_EQ(RootSystem(CartanDatum::from_label("D4")).num_positive(), 12);
}

// Closure of the simple roots under the s_i, computed directly on vectors.
std::set<Root> brute_force_roots(const CartanDatum& d) {
  std::set<Root> all, frontier;
  for (Vertex i = 0; i < d.rank(); ++i) {
    Root r(d.rank(), 0);
    r[i] = 1;
    frontier.insert(r);
  }
  while (!frontier.empty()) {
    std::set<Root> next;
    for (const auto& r : frontier) {
      if (!all.insert(r).second) continue;
      for (Vertex i = 0; i < d.rank(); ++i) {
        int pair = 0;
        for (Vertex j = 0; j < d.rank(); ++j) pair += d.cartan(i, j) * r[j];
        Root s = r;
        s[i] -= pair;
        if (!all.count(s)) next.insert(s);
      }
    }
    frontier = next;
  }
  std::set<Root> positive;
  for (const auto& r : all) {
    if (is_nonnegative(r)) positive.insert(r);
  }
  return positive;
}

TEST(RootSystem, InvariantsAllTypes) {
  const std::map<std::string, int> coxeter{{"A1", 2}, {"A5", 6}, {"D4", 6}, {"D6", 10},
                                           {"E6", 12}, {"E7", 18}, {"E8", 30}};
  for (const auto& label : ade_labels(8)) {
    const auto d = CartanDatum::from_label(label);
    const RootSystem rs(d);
    const std::set<Root> expected = brute_force_roots(d);
    EXPECT_EQ(std::set<Root>(rs.positive_roots().begin(), rs.positive_roots().end()), expected)
        << label;
    EXPECT_EQ(2 * rs.num_positive(), d.rank() * rs.coxeter_number()) << label;
    if (coxeter.count(label)) EXPECT_EQ(rs.coxeter_number(), coxeter.at(label)) << label;
    // w0 sends R+ to -R+.
    const auto w0 = rs.element(rs.longest_element());
    EXPECT_EQ(rs.longest_element().size(), static_cast<std::size_t>(rs.num_positive()));
    EXPECT_TRUE(rs.is_reduced(rs.longest_element()));
    for (int a = 0; a < rs.num_positive(); ++a) {
      EXPECT_FALSE(rs.is_positive_index(w0[a])) << label;
    }
    for (Vertex i = 0; i < d.rank(); ++i) {
      EXPECT_EQ(rs.star(rs.star(i)), i);
      for (Vertex j = 0; j < d.rank(); ++j) {
        EXPECT_EQ(d.cartan(rs.star(i), rs.star(j)), d.cartan(i, j));
      }
    }
  }
}

TEST(RootSystem, Star) {
  const RootSystem a2(CartanDatum::from_label("A2"));
  EXPECT_EQ(a2.star(0), 1);
  EXPECT_EQ(a2.coxeter_number(), 3);
  const RootSystem d4(CartanDatum::from_label("D4"));
  for (Vertex i = 0; i < 4; ++i) EXPECT_EQ(d4.star(i), i);
  const RootSystem e6(CartanDatum::from_label("E6"));
  EXPECT_NE(e6.star(0), 0);
}

TEST(Dominance, Examples) {
  const auto a2 = CartanDatum::from_label("A2");
  const auto lam = alpha({1, -1});
  EXPECT_TRUE(dominance_leq(a2, lam, lam));
  EXPECT_TRUE(dominance_leq(a2, alpha({0, 0}), alpha({1, 1})));
  EXPECT_FALSE(dominance_leq(a2, alpha({1, 0}), alpha({0, 1})));
  EXPECT_FALSE(dominance_leq(a2, alpha({0, 1}), alpha({1, 0})));
  // omega_1 <= omega_1 + alpha_1 = 3 omega_1 - omega_2.
  EXPECT_TRUE(dominance_leq(a2, omega({1, 0}), omega({3, -1})));
}

TEST(Dominance, PartialOrderOnRoots) {
  for (const auto& label : ade_labels(6)) {
    const auto d = CartanDatum::from_label(label);
    const RootSystem rs(d);
    std::vector<WeightVector> ws;
    for (int a = 0; a < 2 * rs.num_positive(); ++a) {
      const Root v = rs.root_vector(a);
      ws.push_back(alpha(std::vector<std::int64_t>(v.begin(), v.end())));
    }
    for (const auto& x : ws) {
      for (const auto& y : ws) {
        if (!(x == y)) EXPECT_FALSE(dominance_leq(d, x, y) && dominance_leq(d, y, x));
      }
    }
  }
}

TEST(Weights, OmegaAlphaRoundTrip) {
  const auto d = CartanDatum::from_label("D5");
  const auto w = alpha({1, 2, -1, 0, 3});
  WeightVector back;
  ASSERT_TRUE(to_alpha(d, to_omega(d, w), &back));
  EXPECT_EQ(back, w);
  // omega_1 of A2 is (2 alpha_1 + alpha_2) / 3, not in the root lattice.
  EXPECT_FALSE(to_alpha(CartanDatum::from_label("A2"), omega({1, 0}), &back));
  EXPECT_EQ(pairing(d, w, 0), 2 * 1 - 2);
}

}  // namespace
}  // namespace quivkit
