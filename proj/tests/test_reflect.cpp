#include <gtest/gtest.h>

#include "quivkit/reflect.hpp"
#include "quivkit/verify.hpp"

namespace quivkit {
namespace {

struct A2 {
  Quiver q = parse_orientation(CartanDatum::from_label("A2"), "1>2");
  RootSystem roots{q.datum()};
  ARQuiver arq{q, roots, {1, 0}};
  KostantPartition kp(std::vector<std::pair<Root, int>> parts) const {
    KostantPartition m{std::vector<int>(roots.num_positive(), 0), Root(2, 0)};
    for (auto& [r, c] : parts) {
      m.mult[roots.positive_index(r)] += c;
      for (int j = 0; j < 2; ++j) m.beta[j] += c * r[j];
    }
    return m;
  }
};

TEST(ReflectedHeight, Examples) {
  A2 a;
  EXPECT_EQ(reflected_height(a.q, {1, 0}, 1), (HeightFunction{1, 2}));
  EXPECT_THROW(reflected_height(a.q, {1, 0}, 0), std::invalid_argument);
  for (const auto& label : ade_labels(5)) {
    for (const auto& q : Quiver::all_orientations(CartanDatum::from_label(label))) {
      const HeightFunction xi = q.height_function();
      for (Vertex i : q.sinks()) {
        const HeightFunction xi2 = reflected_height(q, xi, i);
        EXPECT_TRUE(q.reflected(i).is_height_function(xi2));
        for (Vertex j = 0; j < q.rank(); ++j) {
          if (j != i) EXPECT_EQ(xi2[j], xi[j]);
        }
      }
    }
  }
}

TEST(SiOnKp, Examples) {
  A2 a;
  EXPECT_EQ(s_i_on_kp(a.roots, a.kp({{{1, 1}, 1}}), 1), a.kp({{{1, 0}, 1}}));
  EXPECT_EQ(s_i_on_kp(a.roots, a.kp({}), 1), a.kp({}));
  EXPECT_EQ(s_i_on_kp(a.roots, a.kp({{{1, 0}, 2}}), 1), a.kp({{{1, 1}, 2}}));
  EXPECT_THROW(s_i_on_kp(a.roots, a.kp({{{0, 1}, 1}}), 1), std::invalid_argument);
  const auto m = a.kp({{{1, 0}, 1}, {{1, 1}, 3}});
  EXPECT_EQ(s_i_on_kp(a.roots, s_i_on_kp(a.roots, m, 1), 1), m);
}

TEST(FCompat, A2Example) {
  A2 a;
  const FCompatReport r = check_f_compat(a.arq, {1, 1}, 1);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.beta_reflected, (Root{1, 0}));
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].lhs, LWeight(LatticeElement::basis(1, 0)));
  // s_2 alpha_2 = -alpha_2 leaves Q+.
  EXPECT_THROW(check_f_compat(a.arq, {0, 1}, 1), std::invalid_argument);
  // beta = alpha_1 + 2 alpha_2: every partition uses alpha_2, a vacuous pass.
  EXPECT_TRUE(truncated_kp(HomTable(a.q, a.roots), {1, 2}, 1, Side::kSink).partitions.empty());
}

TEST(TruncatedKp, LowerSets) {
  const Quiver q = parse_orientation(CartanDatum::from_label("A3"), "1>2,3>2");
  const RootSystem roots(q.datum());
  const HomTable table(q, roots);
  const auto t = truncated_kp(table, {1, 1, 1}, 1, Side::kSink);
  EXPECT_TRUE(t.lower_set);
  for (const auto& m : t.partitions) EXPECT_EQ(m.mult[roots.positive_index({0, 1, 0})], 0);
  EXPECT_EQ(t.partitions.size(), 3u);
}

TEST(PhiCompat, AllSinksRankFive) {
  for (const auto& label : ade_labels(5)) {
    for (const auto& q : Quiver::all_orientations(CartanDatum::from_label(label))) {
      const RootSystem roots(q.datum());
      const ARQuiver arq(q, roots, q.height_function());
      for (Vertex i : q.sinks()) EXPECT_TRUE(phi_compat(arq, i)) << label;
    }
  }
}

}  // namespace
}  // namespace quivkit
