#pragma once

// Seeded generators of idags, matrices and expressions for the CLI and the
// property suites. Every generator is deterministic for a fixed engine state.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "idag/expression.hpp"
#include "idag/graph.hpp"
#include "idag/matrix.hpp"

namespace idag {

using Rng = std::mt19937_64;

struct RandomIdagParams {
  std::size_t inputs = 2;
  std::size_t outputs = 2;
  std::size_t nodes = 4;
  double edge_prob = 0.4;
  Weights weights = Weights::Bool;
  /// Labels drawn uniformly; empty means the default label only.
  std::vector<std::string> labels;
};

namespace detail {

inline Weight random_weight(Weights w, Rng& rng) {
  switch (w) {
    case Weights::Bool: return 1;
    case Weights::Nat: return std::uniform_int_distribution<Weight>(1, 3)(rng);
    case Weights::Int: {
      Weight v = std::uniform_int_distribution<Weight>(1, 6)(rng);
      return v <= 3 ? -v : v - 3;
    }
  }
  return 1;
}

}  // namespace detail

/// Draws a node order first, then includes every edge compatible with it
/// independently with probability edge_prob. Valid by construction.
inline Idag random_idag(const RandomIdagParams& p, Rng& rng) {
  std::vector<std::size_t> order(p.nodes);
  for (std::size_t k = 0; k < p.nodes; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Node> nodes;
  for (std::size_t k = 0; k < p.nodes; ++k) {
    std::string label = kDefaultLabel;
    if (!p.labels.empty())
      label = p.labels[std::uniform_int_distribution<std::size_t>(0, p.labels.size() - 1)(rng)];
    nodes.push_back({"n" + std::to_string(k), std::move(label)});
  }

  std::bernoulli_distribution coin(std::clamp(p.edge_prob, 0.0, 1.0));
  EdgeMap edges;
  auto maybe_add = [&](Vertex src, Vertex dst) {
    if (coin(rng)) edges.emplace(Edge{src, dst}, detail::random_weight(p.weights, rng));
  };
  for (std::size_t i = 0; i < p.inputs; ++i) {
    for (std::size_t j = 0; j < p.outputs; ++j) maybe_add(Vertex::in(i), Vertex::out(j));
    for (std::size_t k = 0; k < p.nodes; ++k) maybe_add(Vertex::in(i), Vertex::node(order[k]));
  }
  for (std::size_t a = 0; a < p.nodes; ++a) {
    for (std::size_t j = 0; j < p.outputs; ++j) maybe_add(Vertex::node(order[a]), Vertex::out(j));
    for (std::size_t b = a + 1; b < p.nodes; ++b) maybe_add(Vertex::node(order[a]), Vertex::node(order[b]));
  }
  return Idag(p.weights, p.inputs, p.outputs, std::move(nodes), std::move(edges));
}

/// Entries uniform in [-max_abs, max_abs] (Int), [0, max_abs] (Nat) or {0,1}.
inline Matrix random_matrix(Weights w, std::size_t rows, std::size_t cols, Weight max_abs, Rng& rng) {
  Weight lo = w == Weights::Int ? -max_abs : 0;
  Weight hi = w == Weights::Bool ? 1 : max_abs;
  std::uniform_int_distribution<Weight> dist(lo, hi);
  std::vector<Weight> data(rows * cols);
  for (auto& v : data) v = dist(rng);
  return Matrix(w, rows, cols, std::move(data));
}

/// Same idag with its node sequence shuffled and ids replaced.
inline Idag shuffled_copy(const Idag& d, Rng& rng, const std::string& prefix = "m") {
  std::vector<std::size_t> order(d.node_count());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);
  Idag moved = reorder_nodes(d, order);
  std::vector<std::string> ids(order.size());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = prefix + std::to_string(k);
  return rename_nodes(moved, ids);
}

struct RandomExpressionParams {
  std::size_t max_depth = 4;
  std::size_t max_width = 5;
  bool antipode = false;
  bool bialgebra = true;  // eta, nabla, eps, delta
  std::vector<std::string> labels{kDefaultLabel};
};

namespace detail {

inline Expression random_atoms(std::size_t inputs, const RandomExpressionParams& p, Rng& rng) {
  // Covers exactly `inputs` wires with a tensor of atoms, plus at most one eta.
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n)(rng); };
  std::optional<Expression> acc;
  auto append = [&](Expression atom) {
    acc = acc ? Expression::ten(std::move(*acc), std::move(atom)) : std::move(atom);
  };
  bool eta_left = p.bialgebra;
  std::size_t left = inputs;
  while (left > 0) {
    std::vector<Expression> options;
    options.push_back(Expression::id(1 + pick(std::min<std::size_t>(left, 2) - 1)));
    if (!p.labels.empty()) options.push_back(Expression::node(p.labels[pick(p.labels.size() - 1)]));
    if (p.bialgebra) {
      options.push_back(Expression::delta());
      options.push_back(Expression::eps());
      if (left >= 2) options.push_back(Expression::nabla());
      if (eta_left) options.push_back(Expression::eta());
    }
    if (p.antipode) options.push_back(Expression::anti());
    if (left >= 2) options.push_back(Expression::sym(1, 1));
    if (left >= 3) options.push_back(Expression::sym(1 + pick(left - 3), 1));
    Expression atom = options[pick(options.size() - 1)];
    if (atom.is(Expression::Kind::Eta)) eta_left = false;
    left -= arity_of(atom).in;
    append(std::move(atom));
  }
  if (eta_left && pick(3) == 0) append(Expression::eta());
  return acc ? std::move(*acc) : Expression::id(0);
}

inline Expression random_from(std::size_t inputs, std::size_t depth, const RandomExpressionParams& p, Rng& rng) {
  auto roll = std::uniform_int_distribution<int>(0, 3)(rng);
  if (depth == 0 || roll == 0) return random_atoms(inputs, p, rng);
  if (roll == 1 && inputs >= 2) {
    std::size_t split = std::uniform_int_distribution<std::size_t>(1, inputs - 1)(rng);
    return Expression::ten(random_from(split, depth - 1, p, rng), random_from(inputs - split, depth - 1, p, rng));
  }
  Expression first = random_from(inputs, depth - 1, p, rng);
  std::size_t mid = arity_of(first).out;
  if (mid > p.max_width) {
    // Narrow the wires back down before going on.
    Expression narrow = Expression::id(0);
    for (std::size_t k = 0; k + 1 < mid; k += 2) narrow = beside(std::move(narrow), Expression::nabla());
    if (mid % 2) narrow = beside(std::move(narrow), Expression::id(1));
    return Expression::seq(std::move(first), std::move(narrow));
  }
  return Expression::seq(std::move(first), random_from(mid, depth - 1, p, rng));
}

}  // namespace detail

/// Random well-typed expression with `inputs` inputs.
inline Expression random_expression(std::size_t inputs, const RandomExpressionParams& p, Rng& rng) {
  return detail::random_from(inputs, p.max_depth, p, rng);
}

}  // namespace idag
