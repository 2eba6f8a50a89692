#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "idag/error.hpp"
#include "idag/weights.hpp"

namespace idag {

/// Label carried by nodes of the single-node theory.
inline const std::string kDefaultLabel = "•";

/// An endpoint of an edge. Sources live in In+Node, targets in Out+Node.
/// `index` is the interface position for In/Out and the position in the
/// owning idag's node sequence for Node.
struct Vertex {
  enum class Kind : std::uint8_t { In = 0, Node = 1, Out = 2 };

  Kind kind = Kind::In;
  std::size_t index = 0;

  static constexpr Vertex in(std::size_t i) { return {Kind::In, i}; }
  static constexpr Vertex out(std::size_t j) { return {Kind::Out, j}; }
  static constexpr Vertex node(std::size_t p) { return {Kind::Node, p}; }

  constexpr bool is_in() const { return kind == Kind::In; }
  constexpr bool is_out() const { return kind == Kind::Out; }
  constexpr bool is_node() const { return kind == Kind::Node; }

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Node {
  std::string id;
  std::string label = kDefaultLabel;

  friend bool operator==(const Node&, const Node&) = default;
};

using Edge = std::pair<Vertex, Vertex>;
using EdgeMap = std::map<Edge, Weight>;

/// Edge endpoint as written by a user: interface ports by index, internal
/// nodes by id.
struct Endpoint {
  Vertex::Kind kind = Vertex::Kind::In;
  std::size_t index = 0;
  std::string id;

  static Endpoint in(std::size_t i) { return {Vertex::Kind::In, i, {}}; }
  static Endpoint out(std::size_t j) { return {Vertex::Kind::Out, j, {}}; }
  static Endpoint node(std::string id) { return {Vertex::Kind::Node, 0, std::move(id)}; }
};

struct EdgeSpec {
  Endpoint src;
  Endpoint dst;
  Weight w = 1;
};

/// A finite interfaced dag over ordinal interfaces, with edges weighted in a
/// commutative semiring. Values are immutable once built; every constructor
/// path validates the invariants.
class Idag {
 public:
  Idag() = default;

  Idag(Weights weights, std::size_t n_in, std::size_t n_out, std::vector<Node> nodes, EdgeMap edges)
      : weights_(weights), n_in_(n_in), n_out_(n_out), nodes_(std::move(nodes)), edges_(std::move(edges)) {
    validate();
  }

  Weights weights() const { return weights_; }
  std::size_t in_arity() const { return n_in_; }
  std::size_t out_arity() const { return n_out_; }
  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::size_t p) const { return nodes_.at(p); }
  const EdgeMap& edges() const { return edges_; }

  Weight weight(Vertex src, Vertex dst) const {
    auto it = edges_.find({src, dst});
    return it == edges_.end() ? 0 : it->second;
  }

  std::optional<std::size_t> find_node(std::string_view id) const {
    for (std::size_t p = 0; p < nodes_.size(); ++p)
      if (nodes_[p].id == id) return p;
    return std::nullopt;
  }

  /// Node -> node successor lists (support of the edge relation).
  std::vector<std::vector<std::size_t>> node_successors() const {
    std::vector<std::vector<std::size_t>> succ(nodes_.size());
    for (const auto& [e, w] : edges_)
      if (e.first.is_node() && e.second.is_node()) succ[e.first.index].push_back(e.second.index);
    return succ;
  }

  /// Throws on the first violated invariant.
  void validate() const {
    std::unordered_set<std::string> ids;
    for (const auto& n : nodes_)
      if (!ids.insert(n.id).second) throw Error(ErrorKind::DuplicateNodeId, "node id '" + n.id + "' repeated");

    for (const auto& [e, w] : edges_) {
      const auto& [src, dst] = e;
      if (src.is_out()) throw Error(ErrorKind::BadEndpoint, "edge source is an output");
      if (dst.is_in()) throw Error(ErrorKind::BadEndpoint, "edge target is an input");
      check_range(src);
      check_range(dst);
      if (w == 0) throw Error(ErrorKind::ZeroWeight, "stored edge weight is zero");
      if (w < 0 && weights_ != Weights::Int)
        throw Error(ErrorKind::AntipodeWeight, "negative weight outside int mode");
      if (weights_ == Weights::Bool && w != 1)
        throw Error(ErrorKind::BadInput, "bool-mode edge weight must be 1");
    }

    // Kahn's algorithm on the Node -> Node support.
    auto succ = node_successors();
    std::vector<std::size_t> indegree(nodes_.size(), 0);
    for (const auto& s : succ)
      for (auto q : s) ++indegree[q];
    std::vector<std::size_t> ready;
    for (std::size_t p = 0; p < nodes_.size(); ++p)
      if (indegree[p] == 0) ready.push_back(p);
    std::size_t seen = 0;
    while (!ready.empty()) {
      auto p = ready.back();
      ready.pop_back();
      ++seen;
      for (auto q : succ[p])
        if (--indegree[q] == 0) ready.push_back(q);
    }
    if (seen != nodes_.size()) throw Error(ErrorKind::CycleDetected, "internal nodes contain a cycle");
  }

  /// Structural equality: same arities, weights, node sequence and edges.
  friend bool operator==(const Idag&, const Idag&) = default;

 private:
  void check_range(Vertex v) const {
    std::size_t bound = v.is_in() ? n_in_ : v.is_out() ? n_out_ : nodes_.size();
    if (v.index >= bound) throw Error(ErrorKind::BadEndpoint, "endpoint index " + std::to_string(v.index) + " out of range");
  }

  Weights weights_ = Weights::Bool;
  std::size_t n_in_ = 0;
  std::size_t n_out_ = 0;
  std::vector<Node> nodes_;
  EdgeMap edges_;
};

/// Builds an idag from user-facing data, resolving node ids.
inline Idag make_idag(std::size_t n_in, std::size_t n_out, std::vector<Node> nodes, std::span<const EdgeSpec> edges,
                      Weights weights = Weights::Bool) {
  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t p = 0; p < nodes.size(); ++p)
    if (!by_id.emplace(nodes[p].id, p).second)
      throw Error(ErrorKind::DuplicateNodeId, "node id '" + nodes[p].id + "' repeated");

  auto resolve = [&](const Endpoint& ep) -> Vertex {
    if (ep.kind != Vertex::Kind::Node) return {ep.kind, ep.index};
    auto it = by_id.find(ep.id);
    if (it == by_id.end()) throw Error(ErrorKind::BadEndpoint, "unknown node id '" + ep.id + "'");
    return Vertex::node(it->second);
  };

  EdgeMap map;
  for (const auto& e : edges) {
    if (e.w == 0) throw Error(ErrorKind::ZeroWeight, "edge declared with weight 0");
    if (!map.emplace(Edge{resolve(e.src), resolve(e.dst)}, e.w).second)
      throw Error(ErrorKind::BadInput, "edge declared twice");
  }
  return Idag(weights, n_in, n_out, std::move(nodes), std::move(map));
}

inline Idag identity(std::size_t n, Weights weights = Weights::Bool) {
  EdgeMap edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace(Edge{Vertex::in(i), Vertex::out(i)}, 1);
  return Idag(weights, n, n, {}, std::move(edges));
}

/// Input i is wired to output perm[i].
inline Idag from_permutation(std::span<const std::size_t> perm, Weights weights = Weights::Bool) {
  const std::size_t n = perm.size();
  std::vector<bool> hit(n, false);
  for (auto p : perm) {
    if (p >= n || hit[p]) throw Error(ErrorKind::NotBijective, "not a permutation of 0.." + std::to_string(n));
    hit[p] = true;
  }
  EdgeMap edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace(Edge{Vertex::in(i), Vertex::out(perm[i])}, 1);
  return Idag(weights, n, n, {}, std::move(edges));
}

/// The block symmetry sigma_{n,m}: (n+m) -> (m+n).
inline Idag symmetry(std::size_t n, std::size_t m, Weights weights = Weights::Bool) {
  std::vector<std::size_t> perm(n + m);
  for (std::size_t i = 0; i < n; ++i) perm[i] = m + i;
  for (std::size_t i = 0; i < m; ++i) perm[n + i] = i;
  return from_permutation(perm, weights);
}

namespace detail {

/// Disjoint union of node sequences. Ids of `first` are kept; colliding ids
/// of `second` get the smallest free ".k" suffix.
inline std::vector<Node> union_nodes(const std::vector<Node>& first, const std::vector<Node>& second) {
  std::unordered_set<std::string> used;
  for (const auto& n : first) used.insert(n.id);
  std::unordered_set<std::string> first_ids = used;
  for (const auto& n : second) used.insert(n.id);

  std::vector<Node> out = first;
  out.reserve(first.size() + second.size());
  for (const auto& n : second) {
    Node copy = n;
    if (first_ids.count(n.id)) {
      for (std::size_t k = 1;; ++k) {
        std::string candidate = n.id + "." + std::to_string(k);
        if (!used.count(candidate)) {
          copy.id = candidate;
          used.insert(candidate);
          break;
        }
      }
    }
    out.push_back(std::move(copy));
  }
  return out;
}

inline void accumulate(EdgeMap& edges, Weights w, Edge e, Weight value) {
  if (value == 0) return;
  auto [it, inserted] = edges.emplace(e, value);
  if (!inserted) {
    it->second = semiring::add(w, it->second, value);
    if (it->second == 0) edges.erase(it);
  }
}

}  // namespace detail

/// Sequential composition: `first` (I -> M) followed by `then` (M -> O).
/// The result's node sequence is first's nodes then then's nodes.
inline Idag concat(const Idag& then, const Idag& first) {
  if (then.weights() != first.weights()) throw Error(ErrorKind::ModeMismatch, "concat of idags over different weights");
  if (first.out_arity() != then.in_arity())
    throw Error(ErrorKind::InterfaceMismatch, "concat: coarity " + std::to_string(first.out_arity()) +
                                                  " does not match arity " + std::to_string(then.in_arity()));
  const Weights w = first.weights();
  const std::size_t shift = first.node_count();
  auto lift = [shift](Vertex v) { return v.is_node() ? Vertex::node(v.index + shift) : v; };

  // Edges of `then` leaving each of its inputs.
  std::vector<std::vector<std::pair<Vertex, Weight>>> fan_out(then.in_arity());
  EdgeMap edges;
  for (const auto& [e, weight] : then.edges()) {
    if (e.first.is_in())
      fan_out[e.first.index].emplace_back(lift(e.second), weight);
    else
      edges.emplace(Edge{lift(e.first), lift(e.second)}, weight);
  }
  for (const auto& [e, weight] : first.edges()) {
    if (e.second.is_node()) {
      detail::accumulate(edges, w, e, weight);
      continue;
    }
    for (const auto& [target, w2] : fan_out[e.second.index])
      detail::accumulate(edges, w, Edge{e.first, target}, semiring::mul(w, weight, w2));
  }
  return Idag(w, first.in_arity(), then.out_arity(), detail::union_nodes(first.nodes(), then.nodes()), std::move(edges));
}

/// Juxtaposition: `left` above `right`.
inline Idag juxt(const Idag& left, const Idag& right) {
  if (left.weights() != right.weights()) throw Error(ErrorKind::ModeMismatch, "juxt of idags over different weights");
  const std::size_t shift_nodes = left.node_count();
  const std::size_t shift_in = left.in_arity();
  const std::size_t shift_out = left.out_arity();
  auto lift = [&](Vertex v) {
    switch (v.kind) {
      case Vertex::Kind::In: return Vertex::in(v.index + shift_in);
      case Vertex::Kind::Out: return Vertex::out(v.index + shift_out);
      case Vertex::Kind::Node: return Vertex::node(v.index + shift_nodes);
    }
    return v;
  };
  EdgeMap edges = left.edges();
  for (const auto& [e, weight] : right.edges()) edges.emplace(Edge{lift(e.first), lift(e.second)}, weight);
  return Idag(left.weights(), left.in_arity() + right.in_arity(), left.out_arity() + right.out_arity(),
              detail::union_nodes(left.nodes(), right.nodes()), std::move(edges));
}

/// Rebuilds `d` with its node sequence permuted: new position k holds old
/// node order[k].
inline Idag reorder_nodes(const Idag& d, std::span<const std::size_t> order) {
  if (order.size() != d.node_count()) throw Error(ErrorKind::NotBijective, "node order has wrong length");
  std::vector<std::size_t> where(d.node_count(), d.node_count());
  std::vector<Node> nodes;
  nodes.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= d.node_count() || where[order[k]] != d.node_count())
      throw Error(ErrorKind::NotBijective, "node order is not a permutation");
    where[order[k]] = k;
    nodes.push_back(d.node(order[k]));
  }
  auto move = [&](Vertex v) { return v.is_node() ? Vertex::node(where[v.index]) : v; };
  EdgeMap edges;
  for (const auto& [e, w] : d.edges()) edges.emplace(Edge{move(e.first), move(e.second)}, w);
  return Idag(d.weights(), d.in_arity(), d.out_arity(), std::move(nodes), std::move(edges));
}

/// Same idag with node ids replaced (position-wise).
inline Idag rename_nodes(const Idag& d, std::span<const std::string> ids) {
  if (ids.size() != d.node_count()) throw Error(ErrorKind::BadInput, "rename: wrong number of ids");
  std::vector<Node> nodes = d.nodes();
  for (std::size_t p = 0; p < nodes.size(); ++p) nodes[p].id = ids[p];
  return Idag(d.weights(), d.in_arity(), d.out_arity(), std::move(nodes), d.edges());
}

/// Which theory expressions are interpreted in: the weight semiring selects
/// degenerate bialgebras (Bool), bialgebras (Nat) or Hopf algebras (Int);
/// quotients add the transitive and no-dangling equations (Bool only).
struct TheoryMode {
  Weights weights = Weights::Bool;
  std::optional<std::set<std::string>> labels;  // nullopt: any label
  bool transitive = false;
  bool no_dangling = false;

  bool antipode_enabled() const { return weights == Weights::Int; }
  bool has_quotients() const { return transitive || no_dangling; }

  bool allows_label(const std::string& label) const { return !labels || labels->count(label) != 0; }

  void validate() const {
    if (has_quotients() && weights != Weights::Bool)
      throw Error(ErrorKind::ModeMismatch, "quotients are only available in bool mode");
  }
};

}  // namespace idag
