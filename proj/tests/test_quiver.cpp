#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "quivkit/quiver.hpp"

namespace quivkit {
namespace {

Quiver make(const std::string& type, const std::string& orientation) {
  return parse_orientation(CartanDatum::from_label(type), orientation);
}

TEST(Quiver, SourcesAndSinks) {
  const Quiver a2 = make("A2", "1>2");
  EXPECT_EQ(a2.sources(), std::vector<Vertex>{0});
  EXPECT_EQ(a2.sinks(), std::vector<Vertex>{1});
  const Quiver a1 = Quiver::standard(CartanDatum::from_label("A1"));
  EXPECT_EQ(a1.sources(), std::vector<Vertex>{0});
  EXPECT_EQ(a1.sinks(), std::vector<Vertex>{0});
  const Quiver d4 = make("D4", "1>2,3>2,4>2");
  EXPECT_EQ(d4.sinks(), std::vector<Vertex>{1});
}

TEST(Quiver, Reflect) {
  const Quiver a2 = make("A2", "1>2");
  EXPECT_EQ(a2.reflected(0), make("A2", "2>1"));
  EXPECT_EQ(a2.reflected(0).reflected(0), a2);
  EXPECT_EQ(make("A3", "1>2,3>2").reflected(1), make("A3", "2>1,2>3"));
}

TEST(Quiver, ParseErrors) {
  const auto a3 = CartanDatum::from_label("A3");
  EXPECT_THROW(parse_orientation(a3, "1>3,2>3"), std::invalid_argument);  // 1-3 is no edge
  EXPECT_THROW(parse_orientation(a3, "1>2"), std::invalid_argument);      // edge 2-3 missing
  EXPECT_THROW(parse_orientation(a3, "1>2,2>1,2>3"), std::invalid_argument);
  EXPECT_THROW(parse_orientation(a3, "1-2,2>3"), std::invalid_argument);
  EXPECT_THROW(parse_orientation(a3, "1>2,2>9"), std::invalid_argument);
  EXPECT_EQ(parse_orientation(a3, "2<1, 3>2"), parse_orientation(a3, "1>2,3>2"));
}

TEST(Quiver, OrientationCount) {
  for (const auto& label : ade_labels(6)) {
    const auto d = CartanDatum::from_label(label);
    const auto all = Quiver::all_orientations(d);
    EXPECT_EQ(all.size(), std::size_t{1} << (d.rank() - 1)) << label;
    for (const auto& q : all) EXPECT_EQ(parse_orientation(d, orientation_string(q)), q);
  }
}

TEST(Quiver, HeightFunctionUniqueUpToConstant) {
  for (const auto& label : ade_labels(5)) {
    for (const auto& q : Quiver::all_orientations(CartanDatum::from_label(label))) {
      const HeightFunction xi = q.height_function();
      ASSERT_TRUE(q.is_height_function(xi));
      for (auto [s, t] : q.arrows()) EXPECT_EQ(xi[t], xi[s] - 1);
      HeightFunction shifted = xi;
      for (int& h : shifted) h += 7;
      EXPECT_TRUE(q.is_height_function(shifted));
      HeightFunction broken = xi;
      broken[0] += 2;
      if (q.rank() > 1) EXPECT_FALSE(q.is_height_function(broken));
    }
  }
}

TEST(Coxeter, Examples) {
  const auto a2 = CartanDatum::from_label("A2");
  const RootSystem roots(a2);
  const Quiver q = make("A2", "1>2");
  EXPECT_EQ(coxeter_element(q), (WeylWord{0, 1}));
  // tau(alpha_1) = s1 s2 alpha_1 = alpha_2.
  const auto tau = roots.element(coxeter_element(q));
  EXPECT_EQ(roots.root_vector(tau[roots.positive_index({1, 0})]), (Root{0, 1}));
}

TEST(Coxeter, IndependentOfNumberingAndOrderH) {
  for (const auto& label : ade_labels(5)) {
    const auto d = CartanDatum::from_label(label);
    const RootSystem roots(d);
    for (const auto& q : Quiver::all_orientations(d)) {
      std::vector<Vertex> order = q.adapted_numbering();
      const auto c = roots.element(coxeter_element(q, order));
      EXPECT_EQ(roots.order(c), roots.coxeter_number());
      // Any other topological order gives the same element.
      std::vector<Vertex> perm(d.rank());
      std::iota(perm.begin(), perm.end(), 0);
      int others = 0;
      do {
        bool topological = true;
        for (auto [s, t] : q.arrows()) {
          if (std::find(perm.begin(), perm.end(), s) > std::find(perm.begin(), perm.end(), t)) {
            topological = false;
          }
        }
        if (!topological) continue;
        ++others;
        EXPECT_EQ(roots.element(coxeter_element(q, perm)), c);
      } while (std::next_permutation(perm.begin(), perm.end()) && others < 6);
    }
  }
}

TEST(AdaptedWord, Examples) {
  const Quiver a2 = make("A2", "1>2");
  const RootSystem roots(a2.datum());
  const AdaptedWord w = adapted_w0(a2, roots);
  EXPECT_EQ(w.word, (WeylWord{0, 1, 0}));
  std::vector<Root> gammas;
  for (int g : w.gammas) gammas.push_back(roots.root(g));
  EXPECT_EQ(gammas, (std::vector<Root>{{1, 0}, {1, 1}, {0, 1}}));

  const Quiver a1 = Quiver::standard(CartanDatum::from_label("A1"));
  EXPECT_EQ(adapted_w0(a1, RootSystem(a1.datum())).word, WeylWord{0});
  const Quiver a3 = Quiver::standard(CartanDatum::from_label("A3"));
  EXPECT_EQ(adapted_w0(a3, RootSystem(a3.datum())).word.size(), 6u);
}

TEST(AdaptedWord, AllOrientations) {
  for (const auto& label : ade_labels(5)) {
    const auto d = CartanDatum::from_label(label);
    const RootSystem roots(d);
    for (const auto& q : Quiver::all_orientations(d)) {
      const AdaptedWord w = adapted_w0(q, roots);
      EXPECT_EQ(static_cast<int>(w.word.size()), roots.num_positive());
      EXPECT_TRUE(is_adapted(q, w.word));
      EXPECT_TRUE(roots.is_reduced(w.word));
      const std::set<int> seen(w.gammas.begin(), w.gammas.end());
      EXPECT_EQ(static_cast<int>(seen.size()), roots.num_positive()) << orientation_string(q);
    }
  }
}

TEST(AdaptedWord, IsAdaptedRejects) {
  const Quiver a2 = make("A2", "1>2");
  EXPECT_FALSE(is_adapted(a2, {1}));
  EXPECT_TRUE(is_adapted(a2, {0, 1}));
  EXPECT_FALSE(is_adapted(a2, {5}));
}

}  // namespace
}  // namespace quivkit
