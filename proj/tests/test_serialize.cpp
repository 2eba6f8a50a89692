#include "support.hpp"
#include "idag/selftest.hpp"

namespace idag {
namespace {

using test::fails_with;

TEST(Json, FieldNamesAndDefaults) {
  std::vector<EdgeSpec> edges{{Endpoint::in(0), Endpoint::node("p"), 2}, {Endpoint::node("p"), Endpoint::out(0)}};
  Idag d = make_idag(1, 1, {{"p", "x"}}, edges, Weights::Nat);
  EXPECT_EQ(to_json(d).dump(),
            R"({"mode":"nat","inputs":1,"outputs":1,"nodes":[{"id":"p","label":"x"}],)"
            R"("edges":[{"src":{"in":0},"dst":{"node":"p"},"w":2},{"src":{"node":"p"},"dst":{"out":0}}]})");
}

TEST(Json, DefaultsWhenParsing) {
  Idag d = idag_from_json_text(R"({"inputs":1,"outputs":1,"nodes":[{"id":"p"}],
      "edges":[{"src":{"in":0},"dst":{"node":"p"}},{"src":{"node":"p"},"dst":{"out":0}}]})");
  EXPECT_EQ(d.weights(), Weights::Bool);
  EXPECT_EQ(d.node(0).label, kDefaultLabel);
  EXPECT_EQ(canonical_form(d), canonical_form(free_generator_image(Expression::node(), {})));
}

TEST(Json, RoundTrip) {
  Rng rng(107);
  for (int c = 0; c < 200; ++c) {
    Idag d = random_idag({2, 3, 5, 0.4, c % 2 ? Weights::Int : Weights::Nat, {"x", kDefaultLabel}}, rng);
    std::string text = to_json(d).dump();
    Idag back = idag_from_json_text(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(to_json(back).dump(), text);
  }
}

TEST(Json, Errors) {
  EXPECT_TRUE(fails_with(ErrorKind::BadInput, [] { idag_from_json_text("{"); }));
  EXPECT_TRUE(fails_with(ErrorKind::BadInput, [] { idag_from_json_text(R"({"inputs":1})"); }));
  EXPECT_TRUE(fails_with(ErrorKind::BadInput, [] { idag_from_json_text(R"({"mode":"real","inputs":0,"outputs":0})"); }));
  EXPECT_TRUE(fails_with(ErrorKind::BadEndpoint, [] {
    idag_from_json_text(R"({"inputs":1,"outputs":1,"edges":[{"src":{"out":0},"dst":{"out":0}}]})");
  }));
  EXPECT_TRUE(fails_with(ErrorKind::CycleDetected, [] {
    idag_from_json_text(R"({"inputs":0,"outputs":0,"nodes":[{"id":"p"}],"edges":[{"src":{"node":"p"},"dst":{"node":"p"}}]})");
  }));
}

TEST(Json, MatrixAndReport) {
  EXPECT_EQ(to_json(Matrix(Weights::Nat, 2, 2, {1, 2, 3, 4})).dump(), "[[1,2],[3,4]]");
  EqReport r = equal_mod_theory(parse("delta ; nabla"), parse("id(1)"), TheoryMode{});
  json j = to_json(r);
  EXPECT_EQ(j["equal"], true);
  EXPECT_EQ(j["lhs"], to_json(identity(1)));
  EXPECT_EQ(j["rhs"], to_json(identity(1)));
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t hits = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++hits;
  return hits;
}

TEST(Dot, TwoThreeSample) {
  std::string dot = to_dot(selftest::samples::two_three());
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("rankdir=LR"), std::string::npos);
  EXPECT_EQ(count(dot, "rank=source"), 1u);
  EXPECT_EQ(count(dot, "rank=sink"), 1u);
  EXPECT_EQ(count(dot, "shape=point"), 5u);  // 2 inputs + 3 outputs
  EXPECT_EQ(count(dot, "shape=circle"), 2u);
  EXPECT_NE(dot.find("label=\"k\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"l\""), std::string::npos);
  EXPECT_EQ(count(dot, "->") - count(dot, "style=invis"), 6u);
  EXPECT_EQ(count(dot, "[label=\"1\"]"), 0u);
}

TEST(Dot, WeightLabels) {
  std::vector<EdgeSpec> edges{{Endpoint::in(0), Endpoint::out(0), -2}};
  std::string dot = to_dot(make_idag(1, 1, {}, edges, Weights::Int));
  EXPECT_NE(dot.find("in0 -> out0 [label=\"-2\"]"), std::string::npos);
}

}  // namespace
}  // namespace idag
