#pragma once

// JSON and Graphviz forms of idags, matrices and equality reports.
//
// Idag JSON:
//   {"mode":"bool|nat|int","inputs":N,"outputs":M,
//    "nodes":[{"id":string,"label":string}],
//    "edges":[{"src":{"in":i}|{"node":id},"dst":{"out":j}|{"node":id},"w":integer}]}
// "w" defaults to 1 and "label" to the bullet label. Nodes are written in
// sequence order and edges in lexicographic (source, target) order.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "idag/equivalence.hpp"
#include "idag/error.hpp"
#include "idag/graph.hpp"
#include "idag/matrix.hpp"

namespace idag {

using json = nlohmann::ordered_json;

namespace detail {

inline json endpoint_json(const Idag& d, Vertex v) {
  json j = json::object();
  switch (v.kind) {
    case Vertex::Kind::In: j["in"] = v.index; break;
    case Vertex::Kind::Out: j["out"] = v.index; break;
    case Vertex::Kind::Node: j["node"] = d.node(v.index).id; break;
  }
  return j;
}

inline Endpoint endpoint_from_json(const json& j, bool source) {
  if (!j.is_object() || j.size() != 1) throw Error(ErrorKind::BadInput, "edge endpoint must be a one-key object");
  const char* port = source ? "in" : "out";
  if (j.contains("node")) {
    if (!j["node"].is_string()) throw Error(ErrorKind::BadInput, "node reference must be a string");
    return Endpoint::node(j["node"].get<std::string>());
  }
  if (j.contains(port)) {
    if (!j[port].is_number_unsigned()) throw Error(ErrorKind::BadInput, std::string(port) + " index must be a natural");
    auto i = j[port].get<std::size_t>();
    return source ? Endpoint::in(i) : Endpoint::out(i);
  }
  if (j.contains(source ? "out" : "in"))
    throw Error(ErrorKind::BadEndpoint, source ? "edge source is an output" : "edge target is an input");
  throw Error(ErrorKind::BadInput, "unknown endpoint " + j.dump());
}

}  // namespace detail

inline json to_json(const Idag& d) {
  json j;
  j["mode"] = std::string(to_string(d.weights()));
  j["inputs"] = d.in_arity();
  j["outputs"] = d.out_arity();
  j["nodes"] = json::array();
  for (const auto& n : d.nodes()) j["nodes"].push_back({{"id", n.id}, {"label", n.label}});
  j["edges"] = json::array();
  for (const auto& [e, w] : d.edges()) {
    json edge;
    edge["src"] = detail::endpoint_json(d, e.first);
    edge["dst"] = detail::endpoint_json(d, e.second);
    if (w != 1) edge["w"] = w;
    j["edges"].push_back(std::move(edge));
  }
  return j;
}

inline Idag idag_from_json(const json& j) {
  try {
    Weights w = Weights::Bool;
    if (j.contains("mode")) {
      auto parsed = parse_weights(j.at("mode").get<std::string>());
      if (!parsed) throw Error(ErrorKind::BadInput, "unknown mode " + j.at("mode").dump());
      w = *parsed;
    }
    auto n_in = j.at("inputs").get<std::size_t>();
    auto n_out = j.at("outputs").get<std::size_t>();
    std::vector<Node> nodes;
    for (const auto& n : j.value("nodes", json::array())) {
      Node node{n.at("id").get<std::string>(), n.value("label", kDefaultLabel)};
      nodes.push_back(std::move(node));
    }
    std::vector<EdgeSpec> edges;
    for (const auto& e : j.value("edges", json::array()))
      edges.push_back({detail::endpoint_from_json(e.at("src"), true), detail::endpoint_from_json(e.at("dst"), false),
                       e.value("w", Weight{1})});
    return make_idag(n_in, n_out, std::move(nodes), edges, w);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::BadInput, std::string("malformed idag json: ") + ex.what());
  }
}

inline Idag idag_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::BadInput, std::string("invalid json: ") + ex.what());
  }
  return idag_from_json(j);
}

/// Row-major integer array.
inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.in_arity(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.out_arity(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const EqReport& r) {
  json j;
  j["equal"] = r.equal;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  return j;
}

/// Graphviz text: inputs ranked on the left, outputs on the right, internal
/// nodes as circles, weights other than 1 as edge labels.
inline std::string to_dot(const Idag& d, const std::string& name = "idag") {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  auto vertex_name = [&](Vertex v) {
    switch (v.kind) {
      case Vertex::Kind::In: return "in" + std::to_string(v.index);
      case Vertex::Kind::Out: return "out" + std::to_string(v.index);
      case Vertex::Kind::Node: return "n" + std::to_string(v.index);
    }
    return std::string();
  };

  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  os << "  rankdir=LR;\n";
  os << "  subgraph inputs {\n    rank=source;\n";
  for (std::size_t i = 0; i < d.in_arity(); ++i)
    os << "    in" << i << " [shape=point, xlabel=\"" << i << "\"];\n";
  for (std::size_t i = 1; i < d.in_arity(); ++i) os << "    in" << i - 1 << " -> in" << i << " [style=invis];\n";
  os << "  }\n";
  os << "  subgraph outputs {\n    rank=sink;\n";
  for (std::size_t j = 0; j < d.out_arity(); ++j)
    os << "    out" << j << " [shape=point, xlabel=\"" << j << "\"];\n";
  for (std::size_t j = 1; j < d.out_arity(); ++j) os << "    out" << j - 1 << " -> out" << j << " [style=invis];\n";
  os << "  }\n";
  for (std::size_t p = 0; p < d.node_count(); ++p) {
    const auto& n = d.node(p);
    std::string text = n.label == kDefaultLabel ? n.id : n.id + ":" + n.label;
    os << "  n" << p << " [shape=circle, label=" << quote(text) << "];\n";
  }
  for (const auto& [e, w] : d.edges()) {
    os << "  " << vertex_name(e.first) << " -> " << vertex_name(e.second);
    if (w != 1) os << " [label=\"" << w << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace idag
