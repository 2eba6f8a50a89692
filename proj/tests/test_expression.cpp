#include "support.hpp"

namespace idag {
namespace {

using test::fails_with;
using K = Expression::Kind;

TEST(Arity, Generators) {
  EXPECT_EQ(arity_of(Expression::eta()), (Arity{0, 1}));
  EXPECT_EQ(arity_of(Expression::nabla()), (Arity{2, 1}));
  EXPECT_EQ(arity_of(Expression::eps()), (Arity{1, 0}));
  EXPECT_EQ(arity_of(Expression::delta()), (Arity{1, 2}));
  EXPECT_EQ(arity_of(Expression::node("x")), (Arity{1, 1}));
  EXPECT_EQ(arity_of(Expression::anti()), (Arity{1, 1}));
  EXPECT_EQ(arity_of(Expression::id(4)), (Arity{4, 4}));
  EXPECT_EQ(arity_of(Expression::sym(2, 3)), (Arity{5, 5}));
  EXPECT_EQ(arity_of(Expression::seq(Expression::delta(), Expression::nabla())), (Arity{1, 1}));
  EXPECT_EQ(arity_of(Expression::ten(Expression::delta(), Expression::eta())), (Arity{1, 3}));
  EXPECT_TRUE(fails_with(ErrorKind::TypeMismatch, [] { arity_of(Expression::seq(Expression::nabla(), Expression::nabla())); }));
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse("delta ; nabla"), Expression::seq(Expression::delta(), Expression::nabla()));
  EXPECT_EQ(parse("(node[x] * id(1)) ; sym(1,1)"),
            Expression::seq(Expression::ten(Expression::node("x"), Expression::id(1)), Expression::sym(1, 1)));
  Expression hopf = parse("delta ; (anti * id(1)) ; nabla");
  ASSERT_TRUE(hopf.is(K::Seq));
  EXPECT_TRUE(hopf.lhs().is(K::Seq));  // left-associated
  EXPECT_TRUE(hopf.rhs().is(K::Nabla));
  EXPECT_EQ(arity_of(hopf), (Arity{1, 1}));
  EXPECT_EQ(parse("node"), Expression::node(kDefaultLabel));
  EXPECT_EQ(parse("  eta*eta ;nabla "), parse("(eta * eta) ; nabla"));
}

TEST(Parse, Errors) {
  try {
    parse("delta ;\n  nabla )");
    FAIL() << "expected SyntaxError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_NE(std::string(e.what()).find("2:9"), std::string::npos) << e.what();
  }
  EXPECT_TRUE(fails_with(ErrorKind::SyntaxError, [] { parse("id(x)"); }));
  EXPECT_TRUE(fails_with(ErrorKind::SyntaxError, [] { parse("frobnicate"); }));
  EXPECT_TRUE(fails_with(ErrorKind::SyntaxError, [] { parse(""); }));
  EXPECT_TRUE(fails_with(ErrorKind::TypeMismatch, [] { parse("nabla ; nabla"); }));
}

TEST(Print, Examples) {
  EXPECT_EQ(print(Expression::seq(Expression::delta(), Expression::nabla())), "delta ; nabla");
  EXPECT_EQ(print(Expression::ten(Expression::id(2), Expression::eta())), "id(2) * eta");
  EXPECT_EQ(print(parse("delta ; (anti * id(1)) ; nabla")), "delta ; anti * id(1) ; nabla");
  EXPECT_EQ(print(parse("delta ; (nabla ; delta)")), "delta ; (nabla ; delta)");
  EXPECT_EQ(print(parse("id(1) * (id(1) * id(1))")), "id(1) * (id(1) * id(1))");
  EXPECT_EQ(print(Expression::node("x")), "node[x]");
  EXPECT_EQ(print(Expression::node()), "node");
}

TEST(Print, RoundTripOnRandomAsts) {
  Rng rng(53);
  RandomExpressionParams p;
  p.max_depth = 8;
  p.antipode = true;
  p.labels = {kDefaultLabel, "x", "long_label"};
  for (int c = 0; c < 1000; ++c) {
    Expression e = random_expression(c % 4, p, rng);
    std::string text = print(e);
    ASSERT_EQ(parse(text), e) << text;
    EXPECT_EQ(print(parse(text)), text);
  }
}

TEST(ExpandSymmetry, Examples) {
  EXPECT_EQ(expand_symmetry(1, 1), Expression::sym(1, 1));
  EXPECT_EQ(expand_symmetry(3, 0), Expression::id(3));
  std::vector<std::size_t> perm{1, 2, 0};
  EXPECT_EQ(canonical_form(eval(expand_symmetry(2, 1), FreeModel{})), from_permutation(perm));
}

bool only_basic_symmetries(const Expression& e) {
  switch (e.kind()) {
    case K::Sym: return e.n() == 1 && e.m() == 1;
    case K::Id: return true;
    case K::Seq:
    case K::Ten: return only_basic_symmetries(e.lhs()) && only_basic_symmetries(e.rhs());
    default: return false;
  }
}

TEST(ExpandSymmetry, MatchesBlockSymmetryInModels) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t m = 0; n + m <= 6; ++m) {
      Expression e = expand_symmetry(n, m);
      EXPECT_TRUE(only_basic_symmetries(e)) << print(e);
      EXPECT_EQ(arity_of(e), (Arity{n + m, n + m}));
      EXPECT_EQ(eval(e, FreeModel{}), symmetry(n, m));
      EXPECT_EQ(eval(e, MatrixModel{}), Matrix::symmetry(Weights::Nat, n, m));
    }
}

TEST(MapNodes, ReplacesEveryNode) {
  Expression e = parse("node[x] ; delta ; node[y] * node[x]");
  Expression r = map_nodes(e, [](const std::string& l) { return Expression::node(l + l); });
  EXPECT_EQ(print(r), "node[xx] ; delta ; node[yy] * node[xx]");
}

}  // namespace
}  // namespace idag
