#pragma once

// Equality of expressions modulo the theory selected by a TheoryMode,
// decided by evaluating into the free idag model and comparing canonical
// forms. Quotient equations are applied as post-normalisations.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idag/canonical.hpp"
#include "idag/error.hpp"
#include "idag/expression.hpp"
#include "idag/graph.hpp"
#include "idag/models.hpp"
#include "idag/quotient.hpp"

namespace idag {

/// Applies the mode's quotient passes. With both active: prune, close,
/// prune, ... until nothing changes.
inline Idag apply_quotients(const Idag& d, const TheoryMode& mode) {
  mode.validate();
  if (!mode.has_quotients()) return d;
  Idag current = d;
  while (true) {
    Idag next = current;
    if (mode.no_dangling) next = prune_dangling(next);
    if (mode.transitive) next = transitive_closure(next);
    if (mode.no_dangling) next = prune_dangling(next);
    if (next == current) return current;
    current = std::move(next);
  }
}

inline Idag normalize_idag(const Idag& d, const TheoryMode& mode) {
  if (d.weights() != mode.weights) throw Error(ErrorKind::ModeMismatch, "idag weights differ from the mode");
  return canonical_form(apply_quotients(d, mode));
}

/// Canonical idag of e in the free model of the mode's theory.
inline Idag normalize(const Expression& e, const TheoryMode& mode) {
  mode.validate();
  return normalize_idag(eval(e, FreeModel{mode, {}}), mode);
}

/// Cheap isomorphism invariants; unequal invariants imply unequal normal forms.
struct Invariants {
  std::size_t nodes = 0;
  std::map<std::string, std::size_t> per_label;
  Weight into_outputs = 0;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

inline Invariants invariants_of(const Idag& d) {
  Invariants inv;
  inv.nodes = d.node_count();
  for (const auto& n : d.nodes()) ++inv.per_label[n.label];
  for (const auto& [e, w] : d.edges())
    if (e.second.is_out()) inv.into_outputs += w;
  return inv;
}

struct EqReport {
  bool equal = false;
  Idag lhs;  // canonical
  Idag rhs;  // canonical
  /// Node bijection from the left normal form's source idag to the right's.
  std::optional<std::vector<std::size_t>> witness;
};

/// Decides e1 = e2 in the theory. Differently typed sides are an error.
inline EqReport equal_mod_theory(const Expression& e1, const Expression& e2, const TheoryMode& mode) {
  mode.validate();
  const Arity a1 = arity_of(e1);
  const Arity a2 = arity_of(e2);
  if (a1 != a2)
    throw Error(ErrorKind::ArityMismatch, "sides have types " + to_string(a1) + " and " + to_string(a2));
  FreeModel model{mode, {}};
  Idag d1 = apply_quotients(eval(e1, model), mode);
  Idag d2 = apply_quotients(eval(e2, model), mode);

  EqReport report;
  report.lhs = canonical_form(d1);
  report.rhs = canonical_form(d2);
  if (invariants_of(d1) == invariants_of(d2)) {
    report.equal = report.lhs == report.rhs;
    if (report.equal) report.witness = is_isomorphic(d1, d2);
  }
  return report;
}

}  // namespace idag
