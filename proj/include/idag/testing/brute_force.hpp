#pragma once

// Exhaustive reference implementations for checking the fast paths. They
// share nothing with the code under test beyond the Idag and Matrix types.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "idag/graph.hpp"
#include "idag/matrix.hpp"

namespace idag::testing {

/// Tries every node bijection.
inline std::optional<std::vector<std::size_t>> brute_force_isomorphism(const Idag& a, const Idag& b) {
  if (a.weights() != b.weights() || a.in_arity() != b.in_arity() || a.out_arity() != b.out_arity() ||
      a.node_count() != b.node_count() || a.edges().size() != b.edges().size())
    return std::nullopt;
  std::vector<std::size_t> perm(a.node_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t p = 0; ok && p < perm.size(); ++p) ok = a.node(p).label == b.node(perm[p]).label;
    for (auto it = a.edges().begin(); ok && it != a.edges().end(); ++it) {
      auto map = [&](Vertex v) { return v.is_node() ? Vertex::node(perm[v.index]) : v; };
      ok = b.weight(map(it->first.first), map(it->first.second)) == it->second;
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

/// Every permutation of the nodes that respects the node -> node edges, in
/// lexicographic order.
inline std::vector<std::vector<std::size_t>> brute_force_sortings(const Idag& d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(d.node_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> rank(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) rank[perm[k]] = k;
    bool ok = true;
    for (const auto& [e, w] : d.edges())
      if (e.first.is_node() && e.second.is_node() && rank[e.first.index] > rank[e.second.index]) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Floyd-Warshall reachability over all vertices: In i is vertex i, node p
/// is n_in + p, Out j is n_in + N + j. Returns the closed bool idag's edge set
/// restricted to pairs joined by a path through at least one internal node,
/// united with the original edges.
inline std::set<Edge> closure_edges(const Idag& d) {
  const std::size_t n_in = d.in_arity(), size = d.node_count(), n_out = d.out_arity();
  const std::size_t total = n_in + size + n_out;
  auto index = [&](Vertex v) {
    return v.is_in() ? v.index : v.is_node() ? n_in + v.index : n_in + size + v.index;
  };
  auto vertex = [&](std::size_t x) {
    if (x < n_in) return Vertex::in(x);
    if (x < n_in + size) return Vertex::node(x - n_in);
    return Vertex::out(x - n_in - size);
  };
  // path[x][y]: a path of length >= 1 exists; inner[x][y]: one through a node.
  std::vector<std::vector<bool>> path(total, std::vector<bool>(total, false));
  for (const auto& [e, w] : d.edges()) path[index(e.first)][index(e.second)] = true;
  for (std::size_t k = n_in; k < n_in + size; ++k)
    for (std::size_t x = 0; x < total; ++x)
      for (std::size_t y = 0; y < total; ++y)
        if (path[x][k] && path[k][y]) path[x][y] = true;
  std::set<Edge> out;
  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t y = 0; y < total; ++y)
      if (path[x][y]) out.insert({vertex(x), vertex(y)});
  return out;
}

/// Schoolbook product over the semiring, written independently of compose().
inline Matrix naive_product(const Matrix& first, const Matrix& then) {
  const Weights w = first.weights();
  std::vector<Weight> data(first.in_arity() * then.out_arity(), 0);
  for (std::size_t i = 0; i < first.in_arity(); ++i)
    for (std::size_t j = 0; j < then.out_arity(); ++j) {
      Weight sum = 0;
      for (std::size_t k = 0; k < first.out_arity(); ++k) sum += first(i, k) * then(k, j);
      data[i * then.out_arity() + j] = w == Weights::Bool ? (sum != 0 ? 1 : 0) : sum;
    }
  return Matrix(w, first.in_arity(), then.out_arity(), std::move(data));
}

}  // namespace idag::testing
