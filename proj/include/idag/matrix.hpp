#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "idag/error.hpp"
#include "idag/graph.hpp"
#include "idag/weights.hpp"

namespace idag {

/// A morphism n -> m of the matrix PROP over a weight semiring: entry (i, j)
/// is the weight from input i to output j. Composition is the matrix product,
/// tensor is the block-diagonal sum.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Weights weights, std::size_t n_in, std::size_t n_out)
      : weights_(weights), n_in_(n_in), n_out_(n_out), data_(n_in * n_out, 0) {}

  Matrix(Weights weights, std::size_t n_in, std::size_t n_out, std::vector<Weight> row_major)
      : weights_(weights), n_in_(n_in), n_out_(n_out), data_(std::move(row_major)) {
    if (data_.size() != n_in_ * n_out_) throw Error(ErrorKind::BadInput, "matrix data has wrong size");
    for (auto v : data_)
      if (!semiring::contains(weights_, v))
        throw Error(ErrorKind::AntipodeWeight, "entry " + std::to_string(v) + " outside the semiring");
  }

  static Matrix identity(Weights w, std::size_t n) {
    Matrix m(w, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// Input i goes to output perm[i].
  static Matrix permutation(Weights w, std::span<const std::size_t> perm) {
    Matrix m(w, perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) m.at(i, perm[i]) = 1;
    return m;
  }

  static Matrix symmetry(Weights w, std::size_t n, std::size_t m) {
    std::vector<std::size_t> perm(n + m);
    for (std::size_t i = 0; i < n; ++i) perm[i] = m + i;
    for (std::size_t i = 0; i < m; ++i) perm[n + i] = i;
    return permutation(w, perm);
  }

  Weights weights() const { return weights_; }
  std::size_t in_arity() const { return n_in_; }
  std::size_t out_arity() const { return n_out_; }
  const std::vector<Weight>& data() const { return data_; }

  Weight operator()(std::size_t i, std::size_t j) const { return data_[i * n_out_ + j]; }
  Weight& at(std::size_t i, std::size_t j) { return data_[i * n_out_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Weights weights_ = Weights::Bool;
  std::size_t n_in_ = 0;
  std::size_t n_out_ = 0;
  std::vector<Weight> data_;
};

/// `first` followed by `then` (the product first * then).
inline Matrix compose(const Matrix& then, const Matrix& first) {
  if (then.weights() != first.weights()) throw Error(ErrorKind::ModeMismatch, "matrix weights differ");
  if (first.out_arity() != then.in_arity()) throw Error(ErrorKind::InterfaceMismatch, "matrix shapes do not compose");
  const Weights w = first.weights();
  Matrix r(w, first.in_arity(), then.out_arity());
  for (std::size_t i = 0; i < first.in_arity(); ++i)
    for (std::size_t k = 0; k < first.out_arity(); ++k) {
      Weight a = first(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < then.out_arity(); ++j)
        r.at(i, j) = semiring::add(w, r(i, j), semiring::mul(w, a, then(k, j)));
    }
  return r;
}

inline Matrix tensor(const Matrix& top, const Matrix& bottom) {
  if (top.weights() != bottom.weights()) throw Error(ErrorKind::ModeMismatch, "matrix weights differ");
  Matrix r(top.weights(), top.in_arity() + bottom.in_arity(), top.out_arity() + bottom.out_arity());
  for (std::size_t i = 0; i < top.in_arity(); ++i)
    for (std::size_t j = 0; j < top.out_arity(); ++j) r.at(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.in_arity(); ++i)
    for (std::size_t j = 0; j < bottom.out_arity(); ++j)
      r.at(top.in_arity() + i, top.out_arity() + j) = bottom(i, j);
  return r;
}

/// Reinterprets integer entries in another semiring (n -> n * 1).
inline Matrix change_weights(const Matrix& m, Weights target) {
  std::vector<Weight> data;
  data.reserve(m.data().size());
  for (auto v : m.data()) data.push_back(semiring::embed(target, v));
  return Matrix(target, m.in_arity(), m.out_arity(), std::move(data));
}

/// Node-free idag with the matrix's nonzero entries as In -> Out edges.
inline Idag to_idag(const Matrix& m) {
  EdgeMap edges;
  for (std::size_t i = 0; i < m.in_arity(); ++i)
    for (std::size_t j = 0; j < m.out_arity(); ++j)
      if (m(i, j) != 0) edges.emplace(Edge{Vertex::in(i), Vertex::out(j)}, m(i, j));
  return Idag(m.weights(), m.in_arity(), m.out_arity(), {}, std::move(edges));
}

/// Interface-to-interface weights of an idag (In -> Out edges only).
inline Matrix interface_matrix(const Idag& d) {
  Matrix m(d.weights(), d.in_arity(), d.out_arity());
  for (const auto& [e, w] : d.edges())
    if (e.first.is_in() && e.second.is_out()) m.at(e.first.index, e.second.index) = w;
  return m;
}

}  // namespace idag
