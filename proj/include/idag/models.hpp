#pragma once

// Functorial semantics: evaluation of expressions by structural induction
// into a model supplying images of the generators together with identity,
// symmetry, composition and tensor.
//
//   FreeModel   - idags over the mode's weights (the free PROP)
//   MatrixModel - matrices over a semiring, nodes sent to chosen 1x1 matrices
//   LoopsModel  - bijections with label words (node/id/sym only)

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>

#include "idag/canonical.hpp"
#include "idag/error.hpp"
#include "idag/expression.hpp"
#include "idag/graph.hpp"
#include "idag/loops.hpp"
#include "idag/matrix.hpp"

namespace idag {

namespace detail {

[[noreturn]] inline void unsupported(std::string_view model, const Expression& g, std::string_view why = {}) {
  std::string msg = std::string(model) + " model does not support '" + print(g) + "'";
  if (!why.empty()) msg += " (" + std::string(why) + ")";
  throw Error(ErrorKind::UnsupportedGenerator, msg);
}

}  // namespace detail

/// Image of a single generator in the free idag model.
inline Idag free_generator_image(const Expression& g, const TheoryMode& mode) {
  using K = Expression::Kind;
  const Weights w = mode.weights;
  switch (g.kind()) {
    case K::Eta: return Idag(w, 0, 1, {}, {});
    case K::Eps: return Idag(w, 1, 0, {}, {});
    case K::Nabla: return Idag(w, 2, 1, {}, {{{Vertex::in(0), Vertex::out(0)}, 1}, {{Vertex::in(1), Vertex::out(0)}, 1}});
    case K::Delta: return Idag(w, 1, 2, {}, {{{Vertex::in(0), Vertex::out(0)}, 1}, {{Vertex::in(0), Vertex::out(1)}, 1}});
    case K::Node:
      if (!mode.allows_label(g.label())) detail::unsupported("free", g, "label not in the label set");
      return Idag(w, 1, 1, {Node{"n", g.label()}},
                  {{{Vertex::in(0), Vertex::node(0)}, 1}, {{Vertex::node(0), Vertex::out(0)}, 1}});
    case K::Anti:
      if (!mode.antipode_enabled()) detail::unsupported("free", g, "antipode requires int mode");
      return Idag(w, 1, 1, {}, {{{Vertex::in(0), Vertex::out(0)}, -1}});
    case K::Id: return identity(g.n(), w);
    case K::Sym: return symmetry(g.n(), g.m(), w);
    case K::Seq:
    case K::Ten: break;
  }
  throw Error(ErrorKind::BadInput, "free_generator_image expects an atomic expression");
}

struct FreeModel {
  using Morphism = Idag;
  static constexpr std::string_view name = "free";

  TheoryMode mode;
  /// Replacement images for selected generators (used to inject faults).
  std::map<Expression::Kind, Idag> overrides;

  Idag identity(std::size_t n) const { return idag::identity(n, mode.weights); }
  Idag generator(const Expression& g) const {
    if (auto it = overrides.find(g.kind()); it != overrides.end()) return it->second;
    return free_generator_image(g, mode);
  }
  Idag compose(const Idag& then, const Idag& first) const { return concat(then, first); }
  Idag tensor(const Idag& top, const Idag& bottom) const { return juxt(top, bottom); }
  Idag relation(const Matrix& m) const { return to_idag(change_weights(m, mode.weights)); }
  Idag node(const std::string& label) const { return generator(Expression::node(label)); }
  bool equal(const Idag& a, const Idag& b) const { return canonical_form(a) == canonical_form(b); }
};

struct MatrixModel {
  using Morphism = Matrix;
  static constexpr std::string_view name = "matrix";

  Weights weights = Weights::Nat;
  /// 1x1 image of node[label]; labels not listed map to the identity.
  std::map<std::string, Weight> lambda;

  Matrix identity(std::size_t n) const { return Matrix::identity(weights, n); }
  Matrix generator(const Expression& g) const {
    using K = Expression::Kind;
    switch (g.kind()) {
      case K::Eta: return Matrix(weights, 0, 1);
      case K::Eps: return Matrix(weights, 1, 0);
      case K::Nabla: return Matrix(weights, 2, 1, {1, 1});
      case K::Delta: return Matrix(weights, 1, 2, {1, 1});
      case K::Node: return node(g.label());
      case K::Anti:
        if (weights != Weights::Int) detail::unsupported(name, g, "antipode requires int weights");
        return Matrix(weights, 1, 1, {-1});
      case K::Id: return Matrix::identity(weights, g.n());
      case K::Sym: return Matrix::symmetry(weights, g.n(), g.m());
      default: break;
    }
    throw Error(ErrorKind::BadInput, "matrix generator expects an atomic expression");
  }
  Matrix compose(const Matrix& then, const Matrix& first) const { return idag::compose(then, first); }
  Matrix tensor(const Matrix& top, const Matrix& bottom) const { return idag::tensor(top, bottom); }
  Matrix relation(const Matrix& m) const { return change_weights(m, weights); }
  Matrix node(const std::string& label) const {
    auto it = lambda.find(label);
    return Matrix(weights, 1, 1, {it == lambda.end() ? 1 : it->second});
  }
  bool equal(const Matrix& a, const Matrix& b) const { return a == b; }
};

struct LoopsModel {
  using Morphism = LoopsMorphism;
  static constexpr std::string_view name = "loops";

  std::optional<std::set<std::string>> labels;

  LoopsMorphism identity(std::size_t n) const { return LoopsMorphism::identity(n); }
  LoopsMorphism generator(const Expression& g) const {
    using K = Expression::Kind;
    switch (g.kind()) {
      case K::Node: return node(g.label());
      case K::Id: return LoopsMorphism::identity(g.n());
      case K::Sym: return LoopsMorphism::symmetry(g.n(), g.m());
      default: detail::unsupported(name, g);
    }
  }
  LoopsMorphism compose(const LoopsMorphism& then, const LoopsMorphism& first) const {
    return idag::compose(then, first);
  }
  LoopsMorphism tensor(const LoopsMorphism& top, const LoopsMorphism& bottom) const {
    return idag::tensor(top, bottom);
  }
  LoopsMorphism relation(const Matrix& m) const {
    if (m.in_arity() != m.out_arity()) throw Error(ErrorKind::UnsupportedGenerator, "loops model needs a bijection");
    LoopsMorphism r = LoopsMorphism::identity(m.in_arity());
    for (std::size_t i = 0; i < m.in_arity(); ++i) {
      std::size_t hits = 0;
      for (std::size_t j = 0; j < m.out_arity(); ++j) {
        if (m(i, j) == 0) continue;
        if (m(i, j) != 1) throw Error(ErrorKind::UnsupportedGenerator, "loops model needs a bijection");
        r.perm[i] = j;
        ++hits;
      }
      if (hits != 1) throw Error(ErrorKind::UnsupportedGenerator, "loops model needs a bijection");
    }
    for (std::size_t j = 0; j < m.out_arity(); ++j) {
      std::size_t hits = 0;
      for (std::size_t i = 0; i < m.in_arity(); ++i) hits += m(i, j) != 0;
      if (hits != 1) throw Error(ErrorKind::UnsupportedGenerator, "loops model needs a bijection");
    }
    return r;
  }
  LoopsMorphism node(const std::string& label) const {
    if (labels && !labels->count(label))
      throw Error(ErrorKind::UnsupportedGenerator, "label '" + label + "' not in the label set");
    return LoopsMorphism::node(label);
  }
  bool equal(const LoopsMorphism& a, const LoopsMorphism& b) const { return a == b; }
};

namespace detail {

template <typename M>
typename M::Morphism eval_unchecked(const Expression& e, const M& model) {
  using K = Expression::Kind;
  switch (e.kind()) {
    case K::Seq: return model.compose(eval_unchecked(e.rhs(), model), eval_unchecked(e.lhs(), model));
    case K::Ten: return model.tensor(eval_unchecked(e.lhs(), model), eval_unchecked(e.rhs(), model));
    default: return model.generator(e);
  }
}

}  // namespace detail

/// Evaluates a well-typed expression: Seq goes to composition, Ten to tensor.
template <typename M>
typename M::Morphism eval(const Expression& e, const M& model) {
  arity_of(e);
  return detail::eval_unchecked(e, model);
}

inline LoopsMorphism loops_eval(const Expression& e, std::optional<std::set<std::string>> labels = std::nullopt) {
  return eval(e, LoopsModel{std::move(labels)});
}

using Model = std::variant<FreeModel, MatrixModel, LoopsModel>;
using Morphism = std::variant<Idag, Matrix, LoopsMorphism>;

inline Morphism eval(const Expression& e, const Model& model) {
  return std::visit([&](const auto& m) -> Morphism { return eval(e, m); }, model);
}

}  // namespace idag
