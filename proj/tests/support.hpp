#pragma once

#include <functional>
#include <set>
#include <string>
#include <utility>

#include <gtest/gtest.h>

#include "idag/idag.hpp"

namespace idag::test {

/// Edge set as readable names: "in0", "out1" or the node id.
inline std::set<std::pair<std::string, std::string>> named_edges(const Idag& d) {
  auto name = [&](Vertex v) {
    if (v.is_in()) return "in" + std::to_string(v.index);
    if (v.is_out()) return "out" + std::to_string(v.index);
    return d.node(v.index).id;
  };
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [e, w] : d.edges()) out.insert({name(e.first), name(e.second)});
  return out;
}

inline ::testing::AssertionResult fails_with(ErrorKind kind, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.kind() == kind) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "raised " << e.what();
  }
  return ::testing::AssertionFailure() << "no error raised, expected " << to_string(kind);
}

}  // namespace idag::test
