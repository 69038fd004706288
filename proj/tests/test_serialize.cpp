#include <gtest/gtest.h>

#include <thread>

#include "quivkit/serialize.hpp"
#include "quivkit/verify.hpp"

namespace quivkit {
namespace {

struct A2 {
  Quiver q = parse_orientation(CartanDatum::from_label("A2"), "1>2");
  RootSystem roots{q.datum()};
  ARQuiver arq{q, roots, {1, 0}};
};

TEST(Parse, IntList) {
  EXPECT_EQ(parse_int_list("1, 2,-3"), (std::vector<int>{1, 2, -3}));
  EXPECT_THROW(parse_int_list("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_int_list("1,x"), std::invalid_argument);
  EXPECT_THROW(parse_int_list("1.5"), std::invalid_argument);
}

TEST(Parse, LWeight) {
  const LWeight lam = parse_lweight("1,1; 1,-1;2,0,-1");
  EXPECT_EQ(lam, LWeight(LatticeElement::basis(0, 1) + LatticeElement::basis(0, -1) -
                         LatticeElement::basis(1, 0)));
  EXPECT_EQ(lweight_json(lam).dump(), "[[1,-1,1],[1,1,1],[2,0,-1]]");
  EXPECT_THROW(parse_lweight("1"), std::invalid_argument);
  EXPECT_EQ(parse_lweight(""), LWeight());
}

TEST(Json, QuiverA2) {
  A2 a;
  const Json j = quiver_json(a.arq);
  EXPECT_EQ(j["type"], "A2");
  EXPECT_EQ(j["orientation"], "1>2");
  EXPECT_EQ(j["height"].dump(), "[1,0]");
  EXPECT_EQ(j["phi"][0].dump(), R"({"root":[0,1],"i":1,"p":-1})");
  EXPECT_EQ(j["j_hat_q"].dump(), "[[1,0]]");
  EXPECT_EQ(j["gamma_q"]["arrows"].size(), 2u);
}

TEST(Json, KostantPartition) {
  A2 a;
  const auto kp = enumerate_kp(a.roots, {1, 1});
  EXPECT_EQ(kp_json(a.roots, kp[0]).dump() + kp_json(a.roots, kp[1]).dump(),
            "[[[1,1],1]][[[0,1],1],[[1,0],1]]");
  EXPECT_EQ(kp_string(a.roots, kp[0]), "{(1,1)}");
}

TEST(Dot, GammaQ) {
  A2 a;
  const std::string dot = gamma_q_dot(a.arq);
  EXPECT_NE(dot.find("\"1,-1\" -> \"2,0\""), std::string::npos);
  EXPECT_NE(dot.find("\"2,0\" -> \"1,1\""), std::string::npos);
  EXPECT_NE(dot.find("(1,1)\\n(1,0)"), std::string::npos);
  EXPECT_EQ(hasse_dot("P", {"a", "b"}, {{0, 1}}),
            "digraph \"P\" {\n  rankdir=BT;\n  node [shape=plaintext];\n  n0 [label=\"a\"];\n"
            "  n1 [label=\"b\"];\n  n0 -> n1;\n}\n");
}

TEST(Verify, BetasUpTo) {
  EXPECT_EQ(betas_up_to(2, 2), (std::vector<Root>{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}));
  EXPECT_EQ(betas_up_to(3, 6).size(), 83u);
}

TEST(Verify, ParallelForCoversAll) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t k) { hits[k] += 1; });
  EXPECT_EQ(std::count(hits.begin(), hits.end(), 1), 1000);
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(Verify, SuiteQuivers) {
  VerifyOptions o;
  o.types = {"A3"};
  EXPECT_EQ(suite_quivers(o, 8, -1).size(), 1u);
  o.all_orientations = true;
  EXPECT_EQ(suite_quivers(o, 8, -1).size(), 4u);
  o.beta = Root{1, 1};
  EXPECT_THROW(suite_quivers(o, 8, -1), std::invalid_argument);
  VerifyOptions d;
  EXPECT_EQ(suite_quivers(d, 8, 5).size(), 64u);
  EXPECT_THROW(run_suite("nope", d), std::invalid_argument);
}

TEST(Verify, SmallSuitesPass) {
  VerifyOptions o;
  o.types = {"D4"};
  o.max_height = 3;
  o.samples = 20;
  o.max_degree = 4;
  o.max_m = 3;
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite(name, o);
    EXPECT_TRUE(r.pass()) << report_text(r);
    EXPECT_FALSE(r.cases.empty()) << name;
  }
}

TEST(Verify, OrderIndependentOfThreads) {
  VerifyOptions o;
  o.max_rank = 5;
  o.threads = 1;
  const std::string serial = report_json(run_suite("mesh", o)).dump();
  o.threads = 4;
  EXPECT_EQ(report_json(run_suite("mesh", o)).dump(), serial);
}

}  // namespace
}  // namespace quivkit
