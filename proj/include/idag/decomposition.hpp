#pragma once

// Topological sortings and the layered decomposition they induce:
//
//   D = L_N ; (id(n+N-1) * node) ; L_{N-1} ; ... ; (id(n) * node) ; L_0   (read right to left)
//
// where layer k < N is the relation (n+k) -> (n+k+1) that keeps every wire
// and feeds the new node sigma_k from the inputs and earlier nodes, and the
// final layer routes inputs and nodes to the outputs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "idag/error.hpp"
#include "idag/expression.hpp"
#include "idag/graph.hpp"
#include "idag/matrix.hpp"
#include "idag/models.hpp"

namespace idag {

/// order[k] is the node (index into the idag's node sequence) placed k-th.
struct TopSort {
  std::vector<std::size_t> order;
  friend bool operator==(const TopSort&, const TopSort&) = default;
};

inline bool is_topological_sorting(const Idag& d, const TopSort& s) {
  const std::size_t n = d.node_count();
  if (s.order.size() != n) return false;
  std::vector<std::size_t> rank(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (s.order[k] >= n || rank[s.order[k]] != n) return false;
    rank[s.order[k]] = k;
  }
  for (const auto& [e, w] : d.edges())
    if (e.first.is_node() && e.second.is_node() && rank[e.first.index] >= rank[e.second.index]) return false;
  return true;
}

inline void require_sorting(const Idag& d, const TopSort& s) {
  if (!is_topological_sorting(d, s))
    throw Error(ErrorKind::NotATopologicalSorting, "ordering is not a topological sorting of the idag");
}

/// Lazily enumerates the linear extensions of the node order in
/// lexicographic order of node positions. The first one is the default
/// sorting.
class LinearExtensions {
 public:
  explicit LinearExtensions(const Idag& d)
      : succ_(d.node_successors()), indegree_(d.node_count(), 0), placed_(d.node_count(), false) {
    for (const auto& s : succ_)
      for (auto q : s) ++indegree_[q];
  }

  std::optional<TopSort> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      descend();
      return TopSort{order_};
    }
    while (!frames_.empty()) {
      Frame& f = frames_.back();
      unplace();
      if (++f.pos < f.options.size()) {
        place(f.options[f.pos]);
        descend();
        return TopSort{order_};
      }
      frames_.pop_back();
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  struct Frame {
    std::vector<std::size_t> options;
    std::size_t pos = 0;
  };

  void place(std::size_t v) {
    order_.push_back(v);
    placed_[v] = true;
    for (auto q : succ_[v]) --indegree_[q];
  }

  void unplace() {
    auto v = order_.back();
    order_.pop_back();
    placed_[v] = false;
    for (auto q : succ_[v]) ++indegree_[q];
  }

  void descend() {
    while (order_.size() < succ_.size()) {
      Frame f;
      for (std::size_t v = 0; v < succ_.size(); ++v)
        if (!placed_[v] && indegree_[v] == 0) f.options.push_back(v);
      frames_.push_back(std::move(f));
      place(frames_.back().options.front());
    }
  }

  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::size_t> indegree_;
  std::vector<bool> placed_;
  std::vector<std::size_t> order_;
  std::vector<Frame> frames_;
  bool started_ = false;
  bool done_ = false;
};

inline LinearExtensions topological_sortings(const Idag& d) { return LinearExtensions(d); }

inline TopSort default_sorting(const Idag& d) { return *LinearExtensions(d).next(); }

/// At most `limit` sortings, in enumeration order.
inline std::vector<TopSort> collect_sortings(const Idag& d, std::size_t limit = SIZE_MAX) {
  std::vector<TopSort> out;
  LinearExtensions it(d);
  while (out.size() < limit) {
    auto s = it.next();
    if (!s) break;
    out.push_back(std::move(*s));
  }
  return out;
}

inline constexpr std::size_t kMaxCountableNodes = 20;

namespace detail {

class ExtensionCounter {
 public:
  explicit ExtensionCounter(const Idag& d) : n_(d.node_count()), preds_(n_, 0), memo_(std::size_t{1} << n_, 0) {
    if (n_ > kMaxCountableNodes)
      throw Error(ErrorKind::IndexOutOfRange, "linear extension counting supports at most 20 nodes");
    for (const auto& [e, w] : d.edges())
      if (e.first.is_node() && e.second.is_node()) preds_[e.second.index] |= std::uint32_t{1} << e.first.index;
  }

  /// Number of ways to finish once the nodes in `placed` are placed.
  std::uint64_t completions(std::uint32_t placed) {
    if (placed == full()) return 1;
    auto& slot = memo_[placed];
    if (slot != 0) return slot;
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < n_; ++v)
      if (available(placed, v)) total += completions(placed | (std::uint32_t{1} << v));
    slot = total;
    return total;
  }

  bool available(std::uint32_t placed, std::size_t v) const {
    return !(placed >> v & 1U) && (preds_[v] & ~placed) == 0;
  }

  std::size_t size() const { return n_; }

 private:
  std::uint32_t full() const { return n_ == 32 ? ~0U : (std::uint32_t{1} << n_) - 1; }

  std::size_t n_;
  std::vector<std::uint32_t> preds_;
  std::vector<std::uint64_t> memo_;
};

}  // namespace detail

inline std::uint64_t count_topological_sortings(const Idag& d) {
  return detail::ExtensionCounter(d).completions(0);
}

/// Uniformly random topological sorting (by linear-extension counting).
template <typename Rng>
TopSort sample_topological_sorting(const Idag& d, Rng& rng) {
  detail::ExtensionCounter counter(d);
  std::uint32_t placed = 0;
  TopSort s;
  for (std::size_t k = 0; k < counter.size(); ++k) {
    std::uint64_t total = counter.completions(placed);
    std::uint64_t pick = std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
    for (std::size_t v = 0; v < counter.size(); ++v) {
      if (!counter.available(placed, v)) continue;
      std::uint64_t c = counter.completions(placed | (std::uint32_t{1} << v));
      if (pick < c) {
        s.order.push_back(v);
        placed |= std::uint32_t{1} << v;
        break;
      }
      pick -= c;
    }
  }
  return s;
}

/// Up to `count` sortings: all of them when there are at most `count`,
/// otherwise `count` uniform samples.
template <typename Rng>
std::vector<TopSort> sortings_for_testing(const Idag& d, std::size_t count, Rng& rng) {
  auto first = collect_sortings(d, count + 1);
  if (first.size() <= count) return first;
  std::vector<TopSort> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(sample_topological_sorting(d, rng));
  return out;
}

// ---------------------------------------------------------------------------
// Layers

/// Layer k of the decomposition along `s`; k == node_count() is the final
/// layer into the outputs.
inline Matrix layer(const Idag& d, const TopSort& s, std::size_t k) {
  require_sorting(d, s);
  const std::size_t n = d.in_arity();
  const std::size_t size = d.node_count();
  if (k > size) throw Error(ErrorKind::IndexOutOfRange, "layer index " + std::to_string(k) + " out of range");

  if (k == size) {
    Matrix m(d.weights(), n + size, d.out_arity());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d.out_arity(); ++j) m.at(i, j) = d.weight(Vertex::in(i), Vertex::out(j));
    for (std::size_t l = 0; l < size; ++l)
      for (std::size_t j = 0; j < d.out_arity(); ++j)
        m.at(n + l, j) = d.weight(Vertex::node(s.order[l]), Vertex::out(j));
    return m;
  }

  Matrix m(d.weights(), n + k, n + k + 1);
  for (std::size_t i = 0; i < n + k; ++i) m.at(i, i) = 1;
  const Vertex target = Vertex::node(s.order[k]);
  for (std::size_t i = 0; i < n; ++i) m.at(i, n + k) = d.weight(Vertex::in(i), target);
  for (std::size_t l = 0; l < k; ++l) m.at(n + l, n + k) = d.weight(Vertex::node(s.order[l]), target);
  return m;
}

// ---------------------------------------------------------------------------
// Relations as generator expressions

namespace detail {

inline Expression fan(std::size_t copies) {
  if (copies == 0) return Expression::eps();
  if (copies == 1) return Expression::id(1);
  return then(Expression::delta(), beside(Expression::id(1), fan(copies - 1)));
}

inline Expression merge(std::size_t inputs) {
  if (inputs == 0) return Expression::eta();
  if (inputs == 1) return Expression::id(1);
  return then(beside(merge(inputs - 1), Expression::id(1)), Expression::nabla());
}

/// Wire i goes to position target[i]; built from block symmetries.
inline Expression permutation_expression(const std::vector<std::size_t>& target) {
  const std::size_t k = target.size();
  std::vector<std::size_t> current = target;  // current[q]: destination of the wire now at q
  Expression e = Expression::id(k);
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t q = p;
    while (current[q] != p) ++q;
    if (q == p) continue;
    Expression step = beside(beside(Expression::id(p), Expression::sym(q - p, 1)), Expression::id(k - q - 1));
    e = then(std::move(e), std::move(step));
    std::rotate(current.begin() + static_cast<std::ptrdiff_t>(p), current.begin() + static_cast<std::ptrdiff_t>(q),
                current.begin() + static_cast<std::ptrdiff_t>(q + 1));
  }
  return e;
}

}  // namespace detail

/// Generator form of a matrix: per-input delta fans, anti on negative
/// copies, a routing permutation (source-major to target-major) and
/// per-output nabla merges.
inline Expression encode_relation(const Matrix& f) {
  const std::size_t rows = f.in_arity();
  const std::size_t cols = f.out_arity();

  struct Copy {
    std::size_t src, dst, index;
    bool negative;
  };
  std::vector<Copy> copies;
  std::vector<std::size_t> fan_size(rows, 0), merge_size(cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Weight v = f(i, j);
      const auto count = static_cast<std::size_t>(v < 0 ? -v : v);
      for (std::size_t c = 0; c < count; ++c) copies.push_back({i, j, c, v < 0});
      fan_size[i] += count;
      merge_size[j] += count;
    }

  Expression fans = Expression::id(0);
  for (auto r : fan_size) fans = beside(std::move(fans), detail::fan(r));

  Expression signs = Expression::id(0);
  for (const auto& c : copies) signs = beside(std::move(signs), c.negative ? Expression::anti() : Expression::id(1));

  std::vector<std::size_t> by_target(copies.size());
  for (std::size_t s = 0; s < copies.size(); ++s) by_target[s] = s;
  std::stable_sort(by_target.begin(), by_target.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(copies[a].dst, copies[a].src, copies[a].index) <
           std::tie(copies[b].dst, copies[b].src, copies[b].index);
  });
  std::vector<std::size_t> target(copies.size());
  for (std::size_t t = 0; t < by_target.size(); ++t) target[by_target[t]] = t;

  Expression merges = Expression::id(0);
  for (auto c : merge_size) merges = beside(std::move(merges), detail::merge(c));

  Expression e = then(then(std::move(fans), std::move(signs)), detail::permutation_expression(target));
  return then(std::move(e), std::move(merges));
}

/// Canonical decomposition of d along s.
inline Expression decompose(const Idag& d, const TopSort& s) {
  require_sorting(d, s);
  const std::size_t n = d.in_arity();
  Expression e = encode_relation(layer(d, s, 0));
  for (std::size_t k = 0; k < d.node_count(); ++k) {
    e = then(std::move(e), beside(Expression::id(n + k), Expression::node(d.node(s.order[k]).label)));
    e = then(std::move(e), encode_relation(layer(d, s, k + 1)));
  }
  return e;
}

/// Sorting-parameterised interpretation: layers interpreted as relations in
/// the model, interleaved with id * lambda.
template <typename M>
typename M::Morphism interpret(const Idag& d, const TopSort& s, const M& model) {
  require_sorting(d, s);
  const std::size_t n = d.in_arity();
  auto acc = model.relation(layer(d, s, 0));
  for (std::size_t k = 0; k < d.node_count(); ++k) {
    acc = model.compose(model.tensor(model.identity(n + k), model.node(d.node(s.order[k]).label)), acc);
    acc = model.compose(model.relation(layer(d, s, k + 1)), acc);
  }
  return acc;
}

inline Morphism interpret(const Idag& d, const TopSort& s, const Model& model) {
  return std::visit([&](const auto& m) -> Morphism { return interpret(d, s, m); }, model);
}

// ---------------------------------------------------------------------------
// Adjacent transpositions of sortings

struct TranspositionReport {
  /// holds[k] is identity (k+1): equal early layers; the swapped pair of
  /// layers; later layers commute with the swap; the final layer absorbs
  /// it; lambda slides across layer i+1 (checked in the model).
  std::array<bool, 5> holds{};

  bool all() const { return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; }); }
};

namespace detail {

/// id(before) * sym(1,1) * id(after)
inline Matrix swap_matrix(Weights w, std::size_t before, std::size_t after) {
  return tensor(tensor(Matrix::identity(w, before), Matrix::symmetry(w, 1, 1)), Matrix::identity(w, after));
}

}  // namespace detail

/// Checks the five transposition identities for sortings s and t that
/// differ by swapping positions i and i+1.
template <typename M>
TranspositionReport transposition_identities(const Idag& d, const TopSort& s, const TopSort& t, std::size_t i,
                                             const M& model) {
  require_sorting(d, s);
  require_sorting(d, t);
  const std::size_t size = d.node_count();
  bool adjacent = i + 1 < size && s.order[i] == t.order[i + 1] && s.order[i + 1] == t.order[i];
  for (std::size_t k = 0; adjacent && k < size; ++k)
    if (k != i && k != i + 1 && s.order[k] != t.order[k]) adjacent = false;
  if (!adjacent)
    throw Error(ErrorKind::NotAdjacentTransposition, "sortings do not differ by the transposition at " + std::to_string(i));

  const Weights w = d.weights();
  const std::size_t n = d.in_arity();
  TranspositionReport report;

  report.holds[0] = true;
  for (std::size_t j = 0; j < i; ++j) report.holds[0] = report.holds[0] && layer(d, s, j) == layer(d, t, j);

  {
    Matrix lhs = compose(layer(d, s, i + 1), layer(d, s, i));
    Matrix rhs = compose(detail::swap_matrix(w, n + i, 0), compose(layer(d, t, i + 1), layer(d, t, i)));
    report.holds[1] = lhs == rhs;
  }

  report.holds[2] = true;
  for (std::size_t j = i + 2; j < size; ++j) {
    Matrix lhs = compose(layer(d, s, j), detail::swap_matrix(w, n + i, j - i - 2));
    Matrix rhs = compose(detail::swap_matrix(w, n + i, j - i - 1), layer(d, t, j));
    report.holds[2] = report.holds[2] && lhs == rhs;
  }

  report.holds[3] = compose(layer(d, s, size), detail::swap_matrix(w, n + i, size - i - 2)) == layer(d, t, size);

  report.holds[4] = true;
  for (const TopSort* tau : {&s, &t}) {
    auto lambda = model.node(d.node(tau->order[i]).label);
    auto rel = model.relation(layer(d, *tau, i + 1));
    auto lhs = model.compose(rel, model.tensor(model.identity(n + i), lambda));
    auto rhs = model.compose(model.tensor(model.tensor(model.identity(n + i), lambda), model.identity(1)), rel);
    report.holds[4] = report.holds[4] && model.equal(lhs, rhs);
  }
  return report;
}

}  // namespace idag
