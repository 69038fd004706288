#include <gtest/gtest.h>

#include "oracles/orbit_closure.hpp"
#include "quivkit/repmod.hpp"
#include "quivkit/verify.hpp"

namespace quivkit {
namespace {

struct A2 {
  Quiver q = parse_orientation(CartanDatum::from_label("A2"), "1>2");
  RootSystem roots{q.datum()};
  ARQuiver arq{q, roots, {1, 0}};
  HomTable table{q, roots};
  int idx(const Root& r) const { return roots.positive_index(r); }
  KostantPartition kp(std::vector<std::pair<Root, int>> parts) const {
    KostantPartition m{std::vector<int>(roots.num_positive(), 0), Root(2, 0)};
    for (auto& [r, c] : parts) {
      m.mult[idx(r)] += c;
      for (int j = 0; j < 2; ++j) m.beta[j] += c * r[j];
    }
    return m;
  }
};

Matrix mat(std::size_t r, std::size_t c, std::vector<long> v) {
  Matrix m(r, c);
  for (std::size_t k = 0; k < v.size(); ++k) m(k / c, k % c) = v[k];
  return m;
}

TEST(Indecomposable, Examples) {
  A2 a;
  const QuiverRep s1 = indecomposable(a.q, a.roots, a.idx({1, 0}));
  EXPECT_EQ(s1.dims(), (std::vector<int>{1, 0}));
  EXPECT_TRUE(s1.map({0, 1}).is_zero());
  const QuiverRep p1 = indecomposable(a.q, a.roots, a.idx({1, 1}));
  EXPECT_EQ(p1.dims(), (std::vector<int>{1, 1}));
  EXPECT_EQ(p1.map({0, 1}).rows(), 1u);
  EXPECT_NE(p1.map({0, 1})(0, 0), 0);
}

TEST(Indecomposable, EndIsOneDimensional) {
  for (const auto& label : ade_labels(6)) {
    const auto d = CartanDatum::from_label(label);
    const RootSystem roots(d);
    auto quivers = d.rank() <= 4 ? Quiver::all_orientations(d) : std::vector<Quiver>{Quiver::standard(d)};
    for (const auto& q : quivers) {
      for (int a = 0; a < roots.num_positive(); ++a) {
        const QuiverRep m = indecomposable(q, roots, a);
        EXPECT_EQ(m.dims(), roots.root(a));
        EXPECT_EQ(hom_dim(q, m, m), 1) << label << " " << root_to_string(roots.root(a));
        EXPECT_EQ(ext1_dim(q, m, m), 0);
      }
    }
  }
}

TEST(Hom, Examples) {
  A2 a;
  EXPECT_EQ(a.table.hom(a.idx({0, 1}), a.idx({1, 1})), 1);
  EXPECT_EQ(a.table.hom(a.idx({1, 1}), a.idx({0, 1})), 0);
  // Hand-built: the map 1 -> 1 with matrix [2] is isomorphic to P(1).
  QuiverRep m(a.q, {1, 1});
  m.set_map({0, 1}, mat(1, 1, {2}));
  EXPECT_EQ(hom_dim(a.q, m, a.table.module(a.idx({1, 1}))), 1);
  EXPECT_EQ(hom_dim(a.q, m, m), 1);
  EXPECT_THROW(m.set_map({0, 1}, mat(2, 1, {1, 1})), std::invalid_argument);
  EXPECT_THROW(m.set_map({1, 0}, mat(1, 1, {1})), std::invalid_argument);
}

TEST(Hom, EndOfSumCountsSummands) {
  A2 a;
  const auto m = a.kp({{{1, 0}, 2}, {{0, 1}, 1}});
  const QuiverRep rep = direct_sum(a.q, a.roots, m);
  EXPECT_GE(hom_dim(a.q, rep, rep), 3);
  EXPECT_EQ(hom_dim(a.q, rep, rep), a.table.hom(m, m));
}

TEST(Ext, EulerIdentityOnSums) {
  // Independent elimination routes for hom and ext on non-indecomposables.
  for (const auto& q : Quiver::all_orientations(CartanDatum::from_label("D4"))) {
    const RootSystem roots(q.datum());
    const HomTable table(q, roots);
    for (const auto& beta : std::vector<Root>{{1, 2, 1, 1}, {1, 1, 1, 0}, {0, 2, 1, 1}}) {
      for (const auto& m : enumerate_kp(roots, beta)) {
        const QuiverRep rep = direct_sum(q, roots, m);
        for (int g = 0; g < roots.num_positive(); ++g) {
          const int ext = ext1_dim(q, table.module(g), rep);
          EXPECT_GE(ext, 0);
          EXPECT_EQ(hom_dim(q, table.module(g), rep) - ext, euler_form(q, roots.root(g), beta));
        }
      }
    }
  }
}

TEST(KostantPartitions, Counts) {
  A2 a;
  EXPECT_EQ(enumerate_kp(a.roots, {1, 1}).size(), 2u);
  EXPECT_EQ(enumerate_kp(a.roots, {1, 0}).size(), 1u);
  EXPECT_EQ(enumerate_kp(a.roots, {2, 2}).size(), 3u);
  EXPECT_EQ(enumerate_kp(a.roots, {0, 0}).size(), 1u);
  // A3, beta = highest root: the classical count is 4.
  const RootSystem a3(CartanDatum::from_label("A3"));
  EXPECT_EQ(enumerate_kp(a3, {1, 1, 1}).size(), 4u);
}

TEST(KpLeq, Examples) {
  A2 a;
  const auto dense = a.kp({{{1, 1}, 1}});
  const auto split = a.kp({{{1, 0}, 1}, {{0, 1}, 1}});
  EXPECT_TRUE(a.table.kp_leq(dense, dense));
  EXPECT_TRUE(a.table.kp_leq(dense, split));
  EXPECT_FALSE(a.table.kp_leq(split, dense));
  EXPECT_THROW(a.table.kp_leq(dense, a.kp({{{1, 0}, 1}})), std::invalid_argument);
  EXPECT_EQ(a.table.orbit_dim(dense), 1);
  EXPECT_EQ(a.table.orbit_dim(split), 0);
  EXPECT_EQ(a.table.self_ext(dense), 0);
}

TEST(FBijection, Examples) {
  A2 a;
  EXPECT_EQ(f_bijection(a.arq, a.kp({{{1, 1}, 1}})), LWeight(LatticeElement::basis(1, 0)));
  EXPECT_EQ(f_bijection(a.arq, a.kp({{{1, 0}, 1}, {{0, 1}, 1}})),
            LWeight(LatticeElement::basis(0, 1) + LatticeElement::basis(0, -1)));
  EXPECT_EQ(f_bijection(a.arq, a.kp({})), LWeight());
  const auto m = a.kp({{{1, 0}, 3}, {{1, 1}, 2}});
  EXPECT_EQ(f_inverse(a.arq, f_bijection(a.arq, m)), m);
}

TEST(Hasse, Covers) {
  // 0 < 1 < 3, 0 < 2 < 3.
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (int k = 0; k < 4; ++k) leq[k][k] = leq[0][k] = leq[k][3] = true;
  EXPECT_EQ(hasse_covers(leq), (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

TEST(OrbitClosureOracle, A2) {
  A2 a;
  const auto r = oracle::orbit_closure_check(a.table, {1, 1});
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.partitions, 2);
  EXPECT_EQ(r.orbits_hit, 2);
}

TEST(OrbitClosureOracle, RankAtMostFour) {
  int betas = 0;
  for (const auto& label : ade_labels(4)) {
    for (const auto& q : Quiver::all_orientations(CartanDatum::from_label(label))) {
      const RootSystem roots(q.datum());
      const HomTable table(q, roots);
      for (const auto& beta : betas_up_to(q.rank(), 6)) {
        if (rep_space_dim(q, beta) > 4) continue;
        ++betas;
        const auto r = oracle::orbit_closure_check(table, beta);
        EXPECT_TRUE(r.agree) << label << " [" << orientation_string(q) << "] beta="
                             << root_to_string(beta) << ": "
                             << (r.mismatches.empty() ? "" : r.mismatches.front());
      }
    }
  }
  EXPECT_GT(betas, 100);
}

}  // namespace
}  // namespace quivkit
