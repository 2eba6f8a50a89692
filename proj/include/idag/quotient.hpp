#pragma once

#include <cstddef>
#include <vector>

#include "idag/error.hpp"
#include "idag/graph.hpp"

namespace idag {

namespace detail {

inline void require_bool(const Idag& d, const char* op) {
  if (d.weights() != Weights::Bool) throw Error(ErrorKind::ModeMismatch, std::string(op) + " requires bool mode");
}

}  // namespace detail

/// Drops the listed nodes together with their incident edges. Remaining
/// nodes keep their relative order and ids.
inline Idag remove_nodes(const Idag& d, const std::vector<bool>& drop) {
  std::vector<std::size_t> where(d.node_count(), 0);
  std::vector<Node> nodes;
  for (std::size_t p = 0; p < d.node_count(); ++p) {
    if (drop[p]) continue;
    where[p] = nodes.size();
    nodes.push_back(d.node(p));
  }
  EdgeMap edges;
  for (const auto& [e, w] : d.edges()) {
    if ((e.first.is_node() && drop[e.first.index]) || (e.second.is_node() && drop[e.second.index])) continue;
    auto move = [&](Vertex v) { return v.is_node() ? Vertex::node(where[v.index]) : v; };
    edges.emplace(Edge{move(e.first), move(e.second)}, w);
  }
  return Idag(d.weights(), d.in_arity(), d.out_arity(), std::move(nodes), std::move(edges));
}

/// Nodes with no incoming or no outgoing edges.
inline std::vector<bool> dangling_nodes(const Idag& d) {
  std::vector<bool> has_in(d.node_count(), false), has_out(d.node_count(), false);
  for (const auto& [e, w] : d.edges()) {
    if (e.first.is_node()) has_out[e.first.index] = true;
    if (e.second.is_node()) has_in[e.second.index] = true;
  }
  std::vector<bool> dangling(d.node_count());
  for (std::size_t p = 0; p < d.node_count(); ++p) dangling[p] = !has_in[p] || !has_out[p];
  return dangling;
}

/// Adds (x, y) whenever x -> n1 -> ... -> nk -> y with k >= 1 internal nodes.
inline Idag transitive_closure(const Idag& d) {
  detail::require_bool(d, "transitive_closure");
  const std::size_t n = d.node_count();
  auto succ = d.node_successors();
  std::vector<std::vector<std::size_t>> to_out(n);
  for (const auto& [e, w] : d.edges())
    if (e.first.is_node() && e.second.is_out()) to_out[e.first.index].push_back(e.second.index);

  // reach[p] = nodes reachable from p in >= 0 node steps.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<std::size_t> stack{p};
    reach[p][p] = true;
    while (!stack.empty()) {
      auto q = stack.back();
      stack.pop_back();
      for (auto r : succ[q])
        if (!reach[p][r]) {
          reach[p][r] = true;
          stack.push_back(r);
        }
    }
  }

  EdgeMap edges = d.edges();
  for (const auto& [e, w] : d.edges()) {
    if (!e.second.is_node()) continue;
    const auto& from = reach[e.second.index];
    for (std::size_t q = 0; q < n; ++q) {
      if (!from[q]) continue;
      for (auto r : succ[q]) edges.emplace(Edge{e.first, Vertex::node(r)}, 1);
      for (auto j : to_out[q]) edges.emplace(Edge{e.first, Vertex::out(j)}, 1);
    }
  }
  return Idag(d.weights(), d.in_arity(), d.out_arity(), d.nodes(), std::move(edges));
}

/// Repeatedly deletes internal nodes lacking in-edges or out-edges.
inline Idag prune_dangling(const Idag& d) {
  detail::require_bool(d, "prune_dangling");
  Idag current = d;
  while (true) {
    auto dangling = dangling_nodes(current);
    bool any = false;
    for (bool b : dangling) any = any || b;
    if (!any) return current;
    current = remove_nodes(current, dangling);
  }
}

/// True iff every source (input or node) has exactly one outgoing edge.
inline bool is_forest(const Idag& d) {
  detail::require_bool(d, "is_forest");
  std::vector<std::size_t> input_out(d.in_arity(), 0), node_out(d.node_count(), 0);
  for (const auto& [e, w] : d.edges()) {
    if (e.first.is_in())
      ++input_out[e.first.index];
    else
      ++node_out[e.first.index];
  }
  for (auto c : input_out)
    if (c != 1) return false;
  for (auto c : node_out)
    if (c != 1) return false;
  return true;
}

}  // namespace idag
