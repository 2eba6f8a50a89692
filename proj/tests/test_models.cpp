#include "support.hpp"

namespace idag {
namespace {

using test::fails_with;
using test::named_edges;
using Names = std::set<std::pair<std::string, std::string>>;

TEST(MatrixModel, Examples) {
  MatrixModel nat{Weights::Nat, {}};
  EXPECT_EQ(eval(parse("delta ; nabla"), nat), Matrix(Weights::Nat, 1, 1, {2}));
  EXPECT_EQ(eval(parse("nabla ; delta"), nat), Matrix(Weights::Nat, 2, 2, {1, 1, 1, 1}));
  MatrixModel integer{Weights::Int, {}};
  EXPECT_EQ(eval(parse("delta ; (anti * id(1)) ; nabla"), integer), Matrix(Weights::Int, 1, 1, {0}));
  EXPECT_EQ(eval(parse("eps ; eta"), integer), Matrix(Weights::Int, 1, 1, {0}));
  MatrixModel boolean{Weights::Bool, {}};
  EXPECT_EQ(eval(parse("delta ; nabla"), boolean), Matrix::identity(Weights::Bool, 1));
}

TEST(MatrixModel, LambdaImages) {
  MatrixModel m{Weights::Int, {{"x", 3}, {"y", -2}}};
  EXPECT_EQ(eval(parse("node[x] ; node[y] ; node[z]"), m), Matrix(Weights::Int, 1, 1, {-6}));
}

TEST(FreeModel, GeneratorImages) {
  TheoryMode mode;
  EXPECT_EQ(named_edges(free_generator_image(Expression::delta(), mode)), (Names{{"in0", "out0"}, {"in0", "out1"}}));
  EXPECT_EQ(named_edges(free_generator_image(Expression::nabla(), mode)), (Names{{"in0", "out0"}, {"in1", "out0"}}));
  EXPECT_TRUE(free_generator_image(Expression::eta(), mode).edges().empty());
  EXPECT_TRUE(free_generator_image(Expression::eps(), mode).edges().empty());
  Idag node = free_generator_image(Expression::node(), mode);
  ASSERT_EQ(node.node_count(), 1u);
  EXPECT_EQ(node.node(0).label, kDefaultLabel);
  EXPECT_EQ(named_edges(node), (Names{{"in0", node.node(0).id}, {node.node(0).id, "out0"}}));

  TheoryMode integer{Weights::Int, std::nullopt, false, false};
  Idag anti = free_generator_image(Expression::anti(), integer);
  EXPECT_EQ(anti.weight(Vertex::in(0), Vertex::out(0)), -1);
  EXPECT_TRUE(fails_with(ErrorKind::UnsupportedGenerator, [] { free_generator_image(Expression::anti(), {}); }));
  TheoryMode labelled{Weights::Bool, std::set<std::string>{"x"}, false, false};
  EXPECT_TRUE(fails_with(ErrorKind::UnsupportedGenerator,
                         [&] { free_generator_image(Expression::node("y"), labelled); }));
}

TEST(LoopsModel, Examples) {
  LoopsMorphism xy = loops_eval(parse("node[x] ; node[y]"));
  EXPECT_EQ(xy.perm, (std::vector<std::size_t>{0}));
  EXPECT_EQ(xy.words, (std::vector<Word>{{"y", "x"}}));

  LoopsMorphism swap = loops_eval(parse("sym(1,1)"));
  EXPECT_EQ(swap.perm, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(swap.words, (std::vector<Word>{{}, {}}));

  LoopsMorphism m = loops_eval(parse("(node[x] * id(1)) ; sym(1,1)"));
  EXPECT_EQ(m.perm, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(m.words, (std::vector<Word>{{"x"}, {}}));

  EXPECT_TRUE(fails_with(ErrorKind::UnsupportedGenerator, [] { loops_eval(parse("delta ; nabla")); }));
  EXPECT_TRUE(fails_with(ErrorKind::UnsupportedGenerator,
                         [] { loops_eval(parse("node[q]"), std::set<std::string>{"x"}); }));
}

/// Follows the unique path from input i of a disjoint-paths idag, reading
/// labels in the order they are met, and returns (output, word read last-first).
std::pair<std::size_t, Word> follow(const Idag& d, std::size_t i) {
  Vertex at = Vertex::in(i);
  Word met;
  for (;;) {
    std::optional<Vertex> next;
    for (const auto& [e, w] : d.edges())
      if (e.first == at) next = e.second;
    if (!next) throw std::logic_error("path stops");
    if (next->is_out()) return {next->index, Word(met.rbegin(), met.rend())};
    met.push_back(d.node(next->index).label);
    at = *next;
  }
}

TEST(LoopsModel, AgreesWithFreeModelPaths) {
  Rng rng(61);
  RandomExpressionParams p;
  p.bialgebra = false;
  p.labels = {"x", "y", "z"};
  for (int c = 0; c < 300; ++c) {
    std::size_t n = 1 + c % 4;
    Expression e = random_expression(n, p, rng);
    LoopsMorphism loops = loops_eval(e);
    Idag free = eval(e, FreeModel{});
    for (std::size_t i = 0; i < n; ++i) {
      auto [out, word] = follow(free, i);
      EXPECT_EQ(out, loops.perm[i]) << print(e);
      EXPECT_EQ(word, loops.words[i]) << print(e);
    }
  }
}

TEST(Models, PropLawsOnRandomExpressions) {
  Rng rng(67);
  RandomExpressionParams p;
  p.antipode = true;
  p.labels = {"x", "y"};
  TheoryMode mode{Weights::Int, std::nullopt, false, false};
  FreeModel free{mode, {}};
  MatrixModel matrix{Weights::Int, {{"x", 2}, {"y", -1}}};
  for (int c = 0; c < 200; ++c) {
    Expression a = random_expression(2, p, rng);
    Expression b = random_expression(arity_of(a).out, p, rng);
    Expression e = random_expression(arity_of(b).out, p, rng);
    Expression left = Expression::seq(Expression::seq(a, b), e);
    Expression right = Expression::seq(a, Expression::seq(b, e));
    EXPECT_EQ(canonical_form(eval(left, free)), canonical_form(eval(right, free)));
    EXPECT_EQ(eval(left, matrix), eval(right, matrix));

    Expression unit = Expression::seq(Expression::seq(Expression::id(2), a), Expression::id(arity_of(a).out));
    EXPECT_EQ(canonical_form(eval(unit, free)), canonical_form(eval(a, free)));

    // interchange: (a ; b) * (f ; g) = (a * f) ; (b * g)
    Expression f = random_expression(1, p, rng);
    Expression g = random_expression(arity_of(f).out, p, rng);
    Expression lhs = Expression::ten(Expression::seq(a, b), Expression::seq(f, g));
    Expression rhs = Expression::seq(Expression::ten(a, f), Expression::ten(b, g));
    EXPECT_EQ(canonical_form(eval(lhs, free)), canonical_form(eval(rhs, free)));
    EXPECT_EQ(eval(lhs, matrix), eval(rhs, matrix));

    // naturality of sym: (a * f) ; sym = sym ; (f * a)
    const Arity aa = arity_of(a), fa = arity_of(f);
    Expression nat_l = Expression::seq(Expression::ten(a, f), Expression::sym(aa.out, fa.out));
    Expression nat_r = Expression::seq(Expression::sym(aa.in, fa.in), Expression::ten(f, a));
    EXPECT_EQ(canonical_form(eval(nat_l, free)), canonical_form(eval(nat_r, free)));
    EXPECT_EQ(eval(nat_l, matrix), eval(nat_r, matrix));
  }
}

TEST(Models, BooleanMatrixIsReachabilityOfFreeImage) {
  Rng rng(71);
  RandomExpressionParams p;
  for (int c = 0; c < 300; ++c) {
    Expression e = random_expression(c % 4, p, rng);
    Idag closed = transitive_closure(eval(e, FreeModel{}));
    EXPECT_EQ(eval(e, MatrixModel{Weights::Bool, {}}), interface_matrix(closed)) << print(e);
  }
}

TEST(Models, VariantDispatch) {
  Model m = MatrixModel{Weights::Nat, {}};
  Morphism r = eval(parse("delta ; nabla"), m);
  ASSERT_TRUE(std::holds_alternative<Matrix>(r));
  EXPECT_EQ(std::get<Matrix>(r), Matrix(Weights::Nat, 1, 1, {2}));
  EXPECT_TRUE(fails_with(ErrorKind::UnsupportedGenerator, [] { eval(parse("anti"), MatrixModel{Weights::Nat, {}}); }));
}

}  // namespace
}  // namespace idag
