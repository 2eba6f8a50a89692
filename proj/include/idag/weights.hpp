#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "idag/error.hpp"

namespace idag {

using Weight = std::int64_t;

/// The commutative semiring an idag's edges are weighted over.
///   Bool - {0,1} with 1+1=1 (degenerate commutative bialgebras: relations)
///   Nat  - non-negative integers (commutative bialgebras)
///   Int  - integers (commutative Hopf algebras)
enum class Weights { Bool, Nat, Int };

namespace semiring {

constexpr Weight zero(Weights) { return 0; }
constexpr Weight one(Weights) { return 1; }

constexpr Weight add(Weights w, Weight a, Weight b) {
  if (w == Weights::Bool) return (a != 0 || b != 0) ? 1 : 0;
  return a + b;
}

constexpr Weight mul(Weights w, Weight a, Weight b) {
  if (w == Weights::Bool) return (a != 0 && b != 0) ? 1 : 0;
  return a * b;
}

constexpr bool is_zero(Weights, Weight a) { return a == 0; }

/// True iff `a` is an element of the carrier.
constexpr bool contains(Weights w, Weight a) {
  switch (w) {
    case Weights::Bool: return a == 0 || a == 1;
    case Weights::Nat: return a >= 0;
    case Weights::Int: return true;
  }
  return false;
}

/// Image of the integer `a` under the unique semiring map from the integers
/// (only defined on non-negative values outside Int).
inline Weight embed(Weights w, Weight a) {
  if (a < 0 && w != Weights::Int)
    throw Error(ErrorKind::AntipodeWeight, "negative weight " + std::to_string(a) + " outside int mode");
  if (w == Weights::Bool) return a != 0 ? 1 : 0;
  return a;
}

}  // namespace semiring

inline std::string_view to_string(Weights w) {
  switch (w) {
    case Weights::Bool: return "bool";
    case Weights::Nat: return "nat";
    case Weights::Int: return "int";
  }
  return "?";
}

inline std::optional<Weights> parse_weights(std::string_view text) {
  if (text == "bool") return Weights::Bool;
  if (text == "nat") return Weights::Nat;
  if (text == "int") return Weights::Int;
  return std::nullopt;
}

}  // namespace idag
