#pragma once

// Canonical labelling of idags: isomorphic idags (node bijections fixing the
// interfaces pointwise and preserving labels and weighted edges) map to the
// identical canonical value.
//
// Equitable partition refinement on labels and weighted in/out profiles,
// then an individualise-and-refine search for the lexicographically minimal
// edge code. Interchangeable nodes (same label, same weighted neighbourhood)
// are individualised only once per cell.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "idag/error.hpp"
#include "idag/graph.hpp"

namespace idag {

inline constexpr std::size_t kCanonicalSearchBudget = 1'000'000;

namespace detail {

class Canonicalizer {
 public:
  Canonicalizer(const Idag& d, std::size_t budget) : d_(d), budget_(budget), n_(d.node_count()) {
    in_nodes_.resize(n_);
    out_nodes_.resize(n_);
    in_ports_.resize(n_);
    out_ports_.resize(n_);
    for (const auto& [e, w] : d.edges()) {
      const auto& [src, dst] = e;
      if (src.is_node() && dst.is_node()) {
        out_nodes_[src.index].emplace_back(dst.index, w);
        in_nodes_[dst.index].emplace_back(src.index, w);
      } else if (src.is_in() && dst.is_node()) {
        in_ports_[dst.index].emplace_back(src.index, w);
      } else if (src.is_node() && dst.is_out()) {
        out_ports_[src.index].emplace_back(dst.index, w);
      }
    }
    for (std::size_t p = 0; p < n_; ++p) {
      std::sort(in_ports_[p].begin(), in_ports_[p].end());
      std::sort(out_ports_[p].begin(), out_ports_[p].end());
    }
    compute_twins();
  }

  /// position[p] = canonical index of node p.
  std::vector<std::size_t> run() {
    std::vector<std::size_t> cells = initial_partition();
    refine(cells);
    search(cells);
    return best_position_;
  }

 private:
  using Profile = std::vector<std::pair<std::size_t, Weight>>;

  template <typename Key>
  static std::vector<std::size_t> dense_rank(const std::vector<Key>& keys) {
    std::vector<std::size_t> order(keys.size());
    for (std::size_t p = 0; p < order.size(); ++p) order[p] = p;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<std::size_t> rank(keys.size(), 0);
    std::size_t r = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k > 0 && keys[order[k - 1]] < keys[order[k]]) ++r;
      rank[order[k]] = r;
    }
    return rank;
  }

  static std::size_t cell_count(const std::vector<std::size_t>& cells) {
    return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
  }

  std::vector<std::size_t> initial_partition() const {
    using Key = std::tuple<std::string, Profile, Profile>;
    std::vector<Key> keys;
    keys.reserve(n_);
    for (std::size_t p = 0; p < n_; ++p) keys.emplace_back(d_.node(p).label, in_ports_[p], out_ports_[p]);
    return dense_rank(keys);
  }

  void refine(std::vector<std::size_t>& cells) const {
    using Key = std::tuple<std::size_t, Profile, Profile>;
    std::size_t count = cell_count(cells);
    while (true) {
      std::vector<Key> keys;
      keys.reserve(n_);
      for (std::size_t p = 0; p < n_; ++p) {
        Profile in, out;
        for (auto [q, w] : in_nodes_[p]) in.emplace_back(cells[q], w);
        for (auto [q, w] : out_nodes_[p]) out.emplace_back(cells[q], w);
        std::sort(in.begin(), in.end());
        std::sort(out.begin(), out.end());
        keys.emplace_back(cells[p], std::move(in), std::move(out));
      }
      cells = dense_rank(keys);
      std::size_t next = cell_count(cells);
      if (next == count) return;
      count = next;
    }
  }

  void search(const std::vector<std::size_t>& cells) {
    if (++steps_ > budget_)
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "canonical labelling exceeded " + std::to_string(budget_) + " search steps");
    const std::size_t count = cell_count(cells);
    if (count == n_) {
      consider_leaf(cells);
      return;
    }
    // First non-singleton cell.
    std::vector<std::size_t> size(count, 0);
    for (auto c : cells) ++size[c];
    std::size_t target = 0;
    while (size[target] == 1) ++target;

    std::vector<bool> tried_class(n_, false);
    for (std::size_t v = 0; v < n_; ++v) {
      if (cells[v] != target || tried_class[twin_[v]]) continue;
      tried_class[twin_[v]] = true;
      std::vector<std::pair<std::size_t, int>> keys(n_);
      for (std::size_t p = 0; p < n_; ++p) keys[p] = {cells[p], p == v ? 0 : 1};
      auto next = dense_rank(keys);
      refine(next);
      search(next);
    }
  }

  void consider_leaf(const std::vector<std::size_t>& position) {
    const std::size_t n_in = d_.in_arity();
    const std::size_t n_out = d_.out_arity();
    std::vector<std::tuple<std::size_t, std::size_t, Weight>> code;
    code.reserve(d_.edges().size());
    for (const auto& [e, w] : d_.edges()) {
      std::size_t s = e.first.is_in() ? e.first.index : n_in + position[e.first.index];
      std::size_t t = e.second.is_out() ? e.second.index : n_out + position[e.second.index];
      code.emplace_back(s, t, w);
    }
    std::sort(code.begin(), code.end());
    if (!have_best_ || code < best_code_) {
      have_best_ = true;
      best_code_ = std::move(code);
      best_position_ = position;
    }
  }

  void compute_twins() {
    // Twins: same label and identical weighted neighbourhoods.
    using Key = std::tuple<std::string, Profile, Profile, Profile, Profile>;
    std::map<Key, std::size_t> classes;
    twin_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) {
      Profile in = in_nodes_[p], out = out_nodes_[p];
      std::sort(in.begin(), in.end());
      std::sort(out.begin(), out.end());
      Key key{d_.node(p).label, in_ports_[p], out_ports_[p], std::move(in), std::move(out)};
      auto [it, inserted] = classes.emplace(std::move(key), p);
      twin_[p] = it->second;
    }
  }

  const Idag& d_;
  std::size_t budget_;
  std::size_t n_;
  std::size_t steps_ = 0;
  std::vector<Profile> in_nodes_, out_nodes_, in_ports_, out_ports_;
  std::vector<std::size_t> twin_;
  bool have_best_ = false;
  std::vector<std::tuple<std::size_t, std::size_t, Weight>> best_code_;
  std::vector<std::size_t> best_position_;
};

}  // namespace detail

/// position[p] is the canonical index of node p.
inline std::vector<std::size_t> canonical_labeling(const Idag& d, std::size_t budget = kCanonicalSearchBudget) {
  if (d.node_count() == 0) return {};
  return detail::Canonicalizer(d, budget).run();
}

/// Representative of d's isomorphism class: nodes renamed "0".."N-1" in
/// canonical order.
inline Idag canonical_form(const Idag& d, std::size_t budget = kCanonicalSearchBudget) {
  auto position = canonical_labeling(d, budget);
  std::vector<std::size_t> order(d.node_count());
  for (std::size_t p = 0; p < position.size(); ++p) order[position[p]] = p;
  Idag sorted = reorder_nodes(d, order);
  std::vector<std::string> ids(d.node_count());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = std::to_string(k);
  return rename_nodes(sorted, ids);
}

/// Witness w with w[p] = node of `b` matched to node p of `a`, if any.
inline std::optional<std::vector<std::size_t>> is_isomorphic(const Idag& a, const Idag& b,
                                                             std::size_t budget = kCanonicalSearchBudget) {
  if (a.weights() != b.weights() || a.in_arity() != b.in_arity() || a.out_arity() != b.out_arity() ||
      a.node_count() != b.node_count() || a.edges().size() != b.edges().size())
    return std::nullopt;
  auto pa = canonical_labeling(a, budget);
  auto pb = canonical_labeling(b, budget);
  std::vector<std::size_t> order_a(pa.size()), order_b(pb.size());
  for (std::size_t p = 0; p < pa.size(); ++p) order_a[pa[p]] = p;
  for (std::size_t p = 0; p < pb.size(); ++p) order_b[pb[p]] = p;
  Idag ca = reorder_nodes(a, order_a);
  Idag cb = reorder_nodes(b, order_b);
  if (ca.edges() != cb.edges()) return std::nullopt;
  for (std::size_t k = 0; k < ca.node_count(); ++k)
    if (ca.node(k).label != cb.node(k).label) return std::nullopt;
  std::vector<std::size_t> witness(pa.size());
  for (std::size_t p = 0; p < pa.size(); ++p) witness[p] = order_b[pa[p]];
  return witness;
}

}  // namespace idag
