#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "idag/error.hpp"

namespace idag {

using Word = std::vector<std::string>;

/// Morphism n -> n of the free PROP on labelled nodes: a bijection plus one
/// word of labels per input. Input i is routed to output perm[i].
struct LoopsMorphism {
  std::vector<std::size_t> perm;
  std::vector<Word> words;

  std::size_t size() const { return perm.size(); }

  static LoopsMorphism identity(std::size_t n) {
    LoopsMorphism m;
    m.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.perm[i] = i;
    m.words.assign(n, Word{});
    return m;
  }

  static LoopsMorphism symmetry(std::size_t n, std::size_t k) {
    LoopsMorphism m = identity(n + k);
    for (std::size_t i = 0; i < n; ++i) m.perm[i] = k + i;
    for (std::size_t i = 0; i < k; ++i) m.perm[n + i] = i;
    return m;
  }

  static LoopsMorphism node(std::string label) { return {{0}, {Word{std::move(label)}}}; }

  friend bool operator==(const LoopsMorphism&, const LoopsMorphism&) = default;
};

/// (tau, w) . (sigma, v) = (tau . sigma, (w_{sigma(i)} . v_i)_i).
inline LoopsMorphism compose(const LoopsMorphism& then, const LoopsMorphism& first) {
  if (then.size() != first.size()) throw Error(ErrorKind::InterfaceMismatch, "loops morphisms of different size");
  LoopsMorphism r;
  r.perm.resize(first.size());
  r.words.resize(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    const std::size_t mid = first.perm[i];
    r.perm[i] = then.perm[mid];
    r.words[i] = then.words[mid];
    r.words[i].insert(r.words[i].end(), first.words[i].begin(), first.words[i].end());
  }
  return r;
}

inline LoopsMorphism tensor(const LoopsMorphism& top, const LoopsMorphism& bottom) {
  LoopsMorphism r = top;
  const std::size_t shift = top.size();
  for (std::size_t i = 0; i < bottom.size(); ++i) {
    r.perm.push_back(bottom.perm[i] + shift);
    r.words.push_back(bottom.words[i]);
  }
  return r;
}

}  // namespace idag
