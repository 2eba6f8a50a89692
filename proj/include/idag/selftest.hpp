#pragma once

// Property and example suites shared by `idag selftest` (reduced scale) and
// the acceptance binary (full scale). Each suite seeds its own engine from
// the run seed, so transcripts are reproducible.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "idag/idag.hpp"
#include "idag/testing/brute_force.hpp"

namespace idag::selftest {

/// Faults that can be injected into the free model's generator images.
enum class Mutant {
  None,
  SwapMergeCopy,    // nabla and delta images exchanged
  MergeDropsInput,  // nabla forgets its second input
};

struct Options {
  std::uint64_t seed = 1;
  /// Multiplies every suite's case count.
  double scale = 1.0;
  Mutant mutant = Mutant::None;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0.0;

  bool passed() const { return cases > 0 && failures == 0; }
};

// ---------------------------------------------------------------------------
// A (2,3)-idag and a (3,1)-idag used as worked examples, and their
// concatenation.

namespace samples {

inline Idag two_three() {
  std::vector<EdgeSpec> edges{
      {Endpoint::in(0), Endpoint::out(1)},       {Endpoint::in(0), Endpoint::node("k")},
      {Endpoint::in(1), Endpoint::node("k")},    {Endpoint::node("k"), Endpoint::out(1)},
      {Endpoint::node("k"), Endpoint::out(2)},   {Endpoint::node("l"), Endpoint::out(2)},
  };
  return make_idag(2, 3, {{"k"}, {"l"}}, edges);
}

inline Idag three_one() {
  std::vector<EdgeSpec> edges{
      {Endpoint::in(0), Endpoint::node("a")},      {Endpoint::in(0), Endpoint::node("b")},
      {Endpoint::in(1), Endpoint::node("a")},      {Endpoint::in(2), Endpoint::node("a")},
      {Endpoint::in(2), Endpoint::node("c")},      {Endpoint::node("a"), Endpoint::node("b")},
      {Endpoint::node("a"), Endpoint::node("d")},  {Endpoint::node("b"), Endpoint::out(0)},
      {Endpoint::node("c"), Endpoint::node("d")},  {Endpoint::node("d"), Endpoint::out(0)},
  };
  return make_idag(3, 1, {{"a"}, {"b"}, {"c"}, {"d"}}, edges);
}

inline Idag concatenated() {
  std::vector<EdgeSpec> edges{
      {Endpoint::in(0), Endpoint::node("a")},      {Endpoint::in(0), Endpoint::node("k")},
      {Endpoint::in(1), Endpoint::node("k")},      {Endpoint::node("k"), Endpoint::node("a")},
      {Endpoint::node("k"), Endpoint::node("c")},  {Endpoint::node("l"), Endpoint::node("a")},
      {Endpoint::node("l"), Endpoint::node("c")},  {Endpoint::node("a"), Endpoint::node("b")},
      {Endpoint::node("a"), Endpoint::node("d")},  {Endpoint::node("b"), Endpoint::out(0)},
      {Endpoint::node("c"), Endpoint::node("d")},  {Endpoint::node("d"), Endpoint::out(0)},
  };
  return make_idag(2, 1, {{"k"}, {"l"}, {"a"}, {"b"}, {"c"}, {"d"}}, edges);
}

}  // namespace samples

// ---------------------------------------------------------------------------
// Presentation equations, each with the weight systems whose theory
// contains it. All listed sides must be equal.

struct Axiom {
  std::string name;
  std::vector<std::string> sides;
  std::vector<Weights> modes;
};

inline const std::vector<Axiom>& axioms() {
  static const std::vector<Weights> all{Weights::Bool, Weights::Nat, Weights::Int};
  static const std::vector<Axiom> table{
      {"monoid unit", {"(eta * id(1)) ; nabla", "id(1)", "(id(1) * eta) ; nabla"}, all},
      {"monoid associativity", {"(nabla * id(1)) ; nabla", "(id(1) * nabla) ; nabla"}, all},
      {"monoid commutativity", {"sym(1,1) ; nabla", "nabla"}, all},
      {"comonoid counit", {"delta ; (eps * id(1))", "id(1)", "delta ; (id(1) * eps)"}, all},
      {"comonoid coassociativity", {"delta ; (delta * id(1))", "delta ; (id(1) * delta)"}, all},
      {"comonoid cocommutativity", {"delta ; sym(1,1)", "delta"}, all},
      {"bialgebra unit-counit", {"eta ; eps", "id(0)"}, all},
      {"bialgebra counit-multiplication", {"nabla ; eps", "eps * eps"}, all},
      {"bialgebra comultiplication-unit", {"eta ; delta", "eta * eta"}, all},
      {"bialgebra exchange", {"nabla ; delta", "(delta * delta) ; (id(1) * sym(1,1) * id(1)) ; (nabla * nabla)"}, all},
      {"degeneracy", {"delta ; nabla", "id(1)"}, {Weights::Bool}},
      {"antipode unit", {"eta ; anti", "eta"}, {Weights::Int}},
      {"antipode multiplication", {"(anti * anti) ; nabla", "nabla ; anti"}, {Weights::Int}},
      {"antipode counit", {"anti ; eps", "eps"}, {Weights::Int}},
      {"antipode comultiplication", {"delta ; (anti * anti)", "anti ; delta"}, {Weights::Int}},
      {"antipode inverse",
       {"delta ; (anti * id(1)) ; nabla", "eps ; eta", "delta ; (id(1) * anti) ; nabla"},
       {Weights::Int}},
  };
  return table;
}

// ---------------------------------------------------------------------------

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

  /// `run` returns an empty string on success, else a description.
  void check(const std::function<std::string()>& run) {
    ++result_.cases;
    std::string why;
    try {
      why = run();
    } catch (const std::exception& ex) {
      why = std::string("exception: ") + ex.what();
    }
    if (why.empty()) return;
    if (result_.failures++ == 0) result_.first_failure = why;
  }

  SuiteResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

 private:
  SuiteResult result_;
  std::chrono::steady_clock::time_point start_;
};

inline std::size_t scaled(std::size_t base, const Options& o) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(base) * o.scale)));
}

inline Rng suite_rng(const Options& o, std::uint64_t suite) { return Rng(o.seed * 1000003ULL + suite); }

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Weights random_weights(Rng& rng) {
  static constexpr Weights kinds[] = {Weights::Bool, Weights::Nat, Weights::Int};
  return kinds[uniform(rng, 0, 2)];
}

inline std::string show(const Idag& d) { return to_json(d).dump(); }

inline std::string show(const TopSort& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.order.size(); ++k) out += (k ? "," : "") + std::to_string(s.order[k]);
  return out + "]";
}

inline FreeModel free_model(Weights w, const Options& o) {
  FreeModel model{TheoryMode{w, std::nullopt, false, false}, {}};
  if (o.mutant == Mutant::SwapMergeCopy) {
    model.overrides.emplace(Expression::Kind::Nabla, free_generator_image(Expression::delta(), model.mode));
    model.overrides.emplace(Expression::Kind::Delta, free_generator_image(Expression::nabla(), model.mode));
  } else if (o.mutant == Mutant::MergeDropsInput) {
    std::vector<EdgeSpec> edges{{Endpoint::in(0), Endpoint::out(0)}};
    model.overrides.emplace(Expression::Kind::Nabla, make_idag(2, 1, {}, edges, w));
  }
  return model;
}

inline MatrixModel random_matrix_model(Weights w, const std::vector<std::string>& labels, Rng& rng) {
  MatrixModel m{w, {}};
  Weight lo = w == Weights::Int ? -3 : 0;
  Weight hi = w == Weights::Bool ? 1 : 3;
  for (const auto& l : labels) m.lambda[l] = std::uniform_int_distribution<Weight>(lo, hi)(rng);
  return m;
}

inline const std::vector<std::string>& test_labels() {
  static const std::vector<std::string> labels{"x", "y", "z"};
  return labels;
}

/// sigma then tau, for the concatenation/juxtaposition of their idags.
inline TopSort stack(const TopSort& first, const TopSort& second) {
  TopSort s = first;
  for (auto v : second.order) s.order.push_back(v + first.order.size());
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline SuiteResult sample_composite(const Options&) {
  detail::Recorder rec("sample composite");
  const Idag left = samples::two_three();
  const Idag right = samples::three_one();
  const Idag expected = samples::concatenated();
  rec.check([&]() -> std::string {
    Idag composite = concat(right, left);
    std::string got = to_json(canonical_form(composite)).dump();
    std::string want = to_json(canonical_form(expected)).dump();
    if (got != want) return "canonical json differs:\n  got  " + got + "\n  want " + want;
    if (composite.edges().size() != 12) return "expected 12 edges, got " + std::to_string(composite.edges().size());
    if (composite != expected) return "node ids or order differ: " + detail::show(composite);
    return {};
  });
  return rec.finish();
}

inline SuiteResult axiom_suite(const Options& o) {
  detail::Recorder rec("axiom suite");
  for (const auto& axiom : axioms()) {
    rec.check([&]() -> std::string {
      std::vector<Expression> sides;
      for (const auto& text : axiom.sides) sides.push_back(parse(text));
      for (Weights w : axiom.modes) {
        try {
          FreeModel free = detail::free_model(w, o);
          MatrixModel matrix{w, {}};
          Idag first = canonical_form(eval(sides[0], free));
          Matrix first_m = eval(sides[0], matrix);
          for (std::size_t k = 1; k < sides.size(); ++k) {
            Idag other = canonical_form(eval(sides[k], free));
            if (other != first)
              return axiom.name + " [" + std::string(to_string(w)) + "]: " + axiom.sides[0] + " = " + axiom.sides[k] +
                     "\n  lhs " + detail::show(first) + "\n  rhs " + detail::show(other);
            if (eval(sides[k], matrix) != first_m)
              return axiom.name + " [" + std::string(to_string(w)) + "]: matrix images differ";
            if (o.mutant == Mutant::None) {
              TheoryMode mode{w, std::nullopt, false, false};
              if (!equal_mod_theory(sides[0], sides[k], mode).equal)
                return axiom.name + " [" + std::string(to_string(w)) + "]: equal_mod_theory disagrees";
            }
          }
        } catch (const Error& ex) {
          return axiom.name + " [" + std::string(to_string(w)) + "]: " + ex.what();
        }
      }
      return {};
    });
  }
  return rec.finish();
}

inline SuiteResult sort_invariance(const Options& o) {
  detail::Recorder rec("topological-sort invariance");
  Rng rng = detail::suite_rng(o, 3);
  const auto& labels = detail::test_labels();
  for (std::size_t c = 0, total = detail::scaled(1000, o); c < total; ++c) {
    RandomIdagParams p{detail::uniform(rng, 0, 5), detail::uniform(rng, 0, 5), detail::uniform(rng, 0, 7), 0.4,
                       Weights::Bool, labels};
    Idag d = random_idag(p, rng);
    auto sortings = sortings_for_testing(d, 20, rng);
    FreeModel free = detail::free_model(Weights::Bool, o);
    MatrixModel nat = detail::random_matrix_model(Weights::Nat, labels, rng);
    MatrixModel integer = detail::random_matrix_model(Weights::Int, labels, rng);
    rec.check([&]() -> std::string {
      const Idag reference = canonical_form(d);
      const Matrix nat_ref = interpret(d, sortings.front(), nat);
      const Matrix int_ref = interpret(d, sortings.front(), integer);
      for (const auto& s : sortings) {
        if (canonical_form(interpret(d, s, free)) != reference)
          return "free model differs for sorting " + detail::show(s) + " of " + detail::show(d);
        if (interpret(d, s, nat) != nat_ref) return "nat matrix differs for sorting " + detail::show(s) + " of " + detail::show(d);
        if (interpret(d, s, integer) != int_ref)
          return "int matrix differs for sorting " + detail::show(s) + " of " + detail::show(d);
      }
      return {};
    });
  }
  return rec.finish();
}

inline SuiteResult transposition_lemma(const Options& o) {
  detail::Recorder rec("transposition identities");
  Rng rng = detail::suite_rng(o, 4);
  const auto& labels = detail::test_labels();
  for (std::size_t c = 0, total = detail::scaled(500, o); c < total; ++c) {
    Idag d;
    TopSort s;
    std::vector<std::size_t> swappable;
    while (swappable.empty()) {
      RandomIdagParams p{detail::uniform(rng, 0, 4), detail::uniform(rng, 0, 4), detail::uniform(rng, 2, 7), 0.4,
                         detail::random_weights(rng), labels};
      d = random_idag(p, rng);
      s = sample_topological_sorting(d, rng);
      for (std::size_t i = 0; i + 1 < s.order.size(); ++i)
        if (d.weight(Vertex::node(s.order[i]), Vertex::node(s.order[i + 1])) == 0) swappable.push_back(i);
    }
    const std::size_t i = swappable[detail::uniform(rng, 0, swappable.size() - 1)];
    TopSort t = s;
    std::swap(t.order[i], t.order[i + 1]);
    MatrixModel matrix = detail::random_matrix_model(Weights::Int, labels, rng);
    FreeModel free = detail::free_model(d.weights(), o);
    rec.check([&]() -> std::string {
      for (auto report : {transposition_identities(d, s, t, i, matrix), transposition_identities(d, s, t, i, free)})
        for (std::size_t k = 0; k < 5; ++k)
          if (!report.holds[k])
            return "identity " + std::to_string(k + 1) + " fails at i=" + std::to_string(i) + " for sorting " +
                   detail::show(s) + " of " + detail::show(d);
      return {};
    });
  }
  return rec.finish();
}

inline SuiteResult compositionality(const Options& o) {
  detail::Recorder rec("compositionality");
  Rng rng = detail::suite_rng(o, 5);
  const auto& labels = detail::test_labels();
  const std::size_t total = detail::scaled(500, o);
  for (std::size_t round = 0; round < 2 * total; ++round) {
    const bool sequential = round < total;
    Weights w = detail::random_weights(rng);
    std::size_t n = detail::uniform(rng, 0, 4), m = detail::uniform(rng, 0, 4), l = detail::uniform(rng, 0, 4);
    Idag d = random_idag({n, m, detail::uniform(rng, 0, 4), 0.4, w, labels}, rng);
    Idag e = random_idag({sequential ? m : detail::uniform(rng, 0, 4), l, detail::uniform(rng, 0, 4), 0.4, w, labels}, rng);
    TopSort sd = sample_topological_sorting(d, rng);
    TopSort se = sample_topological_sorting(e, rng);
    FreeModel free = detail::free_model(w, o);
    MatrixModel matrix = detail::random_matrix_model(w, labels, rng);
    rec.check([&]() -> std::string {
      const TopSort both = detail::stack(sd, se);
      if (sequential) {
        Idag whole = concat(e, d);
        Idag lhs = interpret(whole, both, free);
        Idag rhs = concat(interpret(e, se, free), interpret(d, sd, free));
        if (canonical_form(lhs) != canonical_form(rhs)) return "concat: free model differs for " + detail::show(whole);
        if (interpret(whole, both, matrix) != compose(interpret(e, se, matrix), interpret(d, sd, matrix)))
          return "concat: matrix model differs for " + detail::show(whole);
      } else {
        Idag whole = juxt(d, e);
        Idag lhs = interpret(whole, both, free);
        Idag rhs = juxt(interpret(d, sd, free), interpret(e, se, free));
        if (canonical_form(lhs) != canonical_form(rhs)) return "juxt: free model differs for " + detail::show(whole);
        if (interpret(whole, both, matrix) != tensor(interpret(d, sd, matrix), interpret(e, se, matrix)))
          return "juxt: matrix model differs for " + detail::show(whole);
      }
      return {};
    });
  }
  return rec.finish();
}

inline SuiteResult freeness_round_trip(const Options& o) {
  detail::Recorder rec("freeness round-trip");
  Rng rng = detail::suite_rng(o, 6);
  const auto& labels = detail::test_labels();
  for (std::size_t c = 0, total = detail::scaled(1000, o); c < total; ++c) {
    Weights w = detail::random_weights(rng);
    Idag d = random_idag({detail::uniform(rng, 0, 4), detail::uniform(rng, 0, 4), detail::uniform(rng, 0, 6), 0.4, w,
                          labels},
                         rng);
    TopSort random_sort = sample_topological_sorting(d, rng);
    MatrixModel matrix = detail::random_matrix_model(Weights::Int, labels, rng);
    FreeModel free = detail::free_model(w, o);
    rec.check([&]() -> std::string {
      const Idag reference = canonical_form(d);
      for (const TopSort& s : {default_sorting(d), random_sort}) {
        Expression e = decompose(d, s);
        if (canonical_form(eval(e, free)) != reference)
          return "decomposition along " + detail::show(s) + " does not evaluate back to " + detail::show(d) +
                 "\n  expression " + print(e);
        if (eval(e, matrix) != interpret(d, s, matrix))
          return "matrix evaluation of the decomposition differs from interpret for " + detail::show(d);
      }
      return {};
    });
  }
  return rec.finish();
}

namespace detail {

inline std::vector<Idag> isomorphism_pool(const Options& o) {
  Rng rng = suite_rng(o, 7);
  const std::vector<std::string> labels{"x", "y"};
  std::vector<Idag> pool;
  const std::size_t total = scaled(200, o);
  // (2,2)-idags with 4 to 6 nodes, shuffled copies of them, and near misses
  // with one node relabelled or one edge moved to the other output.
  while (pool.size() < total) {
    if (pool.empty() || detail::uniform(rng, 0, 9) < 5) {
      Weights w = detail::uniform(rng, 0, 6) == 0 ? Weights::Nat : Weights::Bool;
      pool.push_back(random_idag({2, 2, detail::uniform(rng, 4, 6), 0.3, w, labels}, rng));
      continue;
    }
    Idag copy = shuffled_copy(pool[detail::uniform(rng, 0, pool.size() - 1)], rng);
    std::vector<Node> nodes = copy.nodes();
    EdgeMap edges = copy.edges();
    switch (detail::uniform(rng, 0, 2)) {
      case 0: break;  // isomorphic copy
      case 1: {       // relabel one node
        auto& n = nodes[detail::uniform(rng, 0, nodes.size() - 1)];
        n.label = n.label == labels[0] ? labels[1] : labels[0];
        break;
      }
      default: {  // move one edge to the other output
        std::vector<Edge> movable;
        for (const auto& [e, w] : edges)
          if (e.second.is_out() && !edges.count({e.first, Vertex::out(1 - e.second.index)})) movable.push_back(e);
        if (movable.empty()) break;
        Edge e = movable[detail::uniform(rng, 0, movable.size() - 1)];
        Weight w = edges.at(e);
        edges.erase(e);
        edges.emplace(Edge{e.first, Vertex::out(1 - e.second.index)}, w);
      }
    }
    pool.emplace_back(copy.weights(), copy.in_arity(), copy.out_arity(), std::move(nodes), std::move(edges));
  }
  return pool;
}

}  // namespace detail

inline SuiteResult isomorphism_oracle(const Options& o) {
  detail::Recorder rec("isomorphism oracle agreement");
  const std::vector<Idag> pool = detail::isomorphism_pool(o);
  std::vector<Idag> canonical;
  for (const auto& d : pool) canonical.push_back(canonical_form(d));
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a; b < pool.size(); ++b)
      rec.check([&]() -> std::string {
        bool oracle = testing::brute_force_isomorphism(pool[a], pool[b]).has_value();
        bool fast = canonical[a] == canonical[b];
        bool witness = is_isomorphic(pool[a], pool[b]).has_value();
        if (oracle != fast || oracle != witness)
          return "disagreement on\n  " + detail::show(pool[a]) + "\n  " + detail::show(pool[b]);
        return {};
      });
  return rec.finish();
}

inline SuiteResult matrix_agreement(const Options& o) {
  detail::Recorder rec("matrix-PROP agreement");
  Rng rng = detail::suite_rng(o, 8);
  for (std::size_t c = 0, total = detail::scaled(500, o); c < total; ++c) {
    Weights w = detail::random_weights(rng);
    std::size_t rows = detail::uniform(rng, 0, 6), mid = detail::uniform(rng, 0, 6), cols = detail::uniform(rng, 0, 6);
    Matrix a = random_matrix(w, rows, mid, 4, rng);
    Matrix b = random_matrix(w, mid, cols, 4, rng);
    rec.check([&]() -> std::string {
      Matrix product = testing::naive_product(a, b);
      if (concat(to_idag(b), to_idag(a)) != to_idag(product)) return "concat differs from the matrix product";
      if (compose(b, a) != product) return "compose differs from the schoolbook product";
      for (const Matrix* m : {&a, &b}) {
        Expression e = encode_relation(*m);
        if (eval(e, MatrixModel{w, {}}) != *m) return "encode_relation does not invert: " + print(e);
        if (canonical_form(eval(e, detail::free_model(w, o))) != to_idag(*m))
          return "encode_relation differs in the free model: " + print(e);
      }
      return {};
    });
  }
  return rec.finish();
}

inline SuiteResult conclusion_variants(const Options& o) {
  detail::Recorder rec("quotient and antipode variants");
  Rng rng = detail::suite_rng(o, 9);
  const std::vector<std::string> labels{"x", "y"};
  const std::size_t total = detail::scaled(200, o);

  // Transitive quotient: every node replaced by its bypassed form.
  for (std::size_t c = 0; c < total; ++c) {
    Idag d = random_idag({detail::uniform(rng, 0, 3), detail::uniform(rng, 0, 3), detail::uniform(rng, 0, 6), 0.4,
                          Weights::Bool, labels},
                         rng);
    rec.check([&]() -> std::string {
      Expression e = map_nodes(decompose(d, default_sorting(d)), [](const std::string& label) {
        return then(then(Expression::delta(), beside(Expression::node(label), Expression::id(1))), Expression::nabla());
      });
      Idag closed = transitive_closure(d);
      std::set<Edge> oracle = testing::closure_edges(d);
      std::set<Edge> got;
      for (const auto& [edge, w] : closed.edges()) got.insert(edge);
      if (got != oracle) return "transitive_closure disagrees with reachability for " + detail::show(d);
      if (canonical_form(eval(e, detail::free_model(Weights::Bool, o))) != canonical_form(closed))
        return "bypassed decomposition does not normalise to the closure of " + detail::show(d);
      return {};
    });
  }

  // Antipode law in the integer matrix model and the free int model.
  rec.check([&]() -> std::string {
    Expression law = parse("delta ; (anti * id(1)) ; nabla");
    if (eval(law, MatrixModel{Weights::Int, {}}) != Matrix(Weights::Int, 1, 1, {0}))
      return "antipode law does not give the zero matrix";
    if (canonical_form(eval(law, detail::free_model(Weights::Int, o))) !=
        canonical_form(eval(parse("eps ; eta"), detail::free_model(Weights::Int, o))))
      return "antipode law does not normalise to eps ; eta";
    return {};
  });

  // Pruning dangling nodes in any order reaches the same normal form.
  for (std::size_t c = 0; c < total; ++c) {
    Idag d = random_idag({detail::uniform(rng, 0, 3), detail::uniform(rng, 0, 3), detail::uniform(rng, 0, 7), 0.3,
                          Weights::Bool, labels},
                         rng);
    std::vector<std::uint64_t> seeds;
    for (int k = 0; k < 5; ++k) seeds.push_back(rng());
    rec.check([&]() -> std::string {
      const Idag reference = canonical_form(prune_dangling(d));
      for (auto seed : seeds) {
        Rng order(seed);
        Idag current = d;
        while (true) {
          auto dangling = dangling_nodes(current);
          std::vector<std::size_t> candidates;
          for (std::size_t p = 0; p < dangling.size(); ++p)
            if (dangling[p]) candidates.push_back(p);
          if (candidates.empty()) break;
          std::vector<bool> drop(current.node_count(), false);
          drop[candidates[detail::uniform(order, 0, candidates.size() - 1)]] = true;
          current = remove_nodes(current, drop);
        }
        if (canonical_form(current) != reference) return "pruning order matters for " + detail::show(d);
      }
      return {};
    });
  }
  return rec.finish();
}

inline SuiteResult parse_print_round_trip(const Options& o) {
  detail::Recorder rec("parse/print round-trip");
  Rng rng = detail::suite_rng(o, 10);
  RandomExpressionParams params;
  params.max_depth = 8;
  params.antipode = true;
  params.labels = {kDefaultLabel, "x", "y"};
  for (std::size_t c = 0, total = detail::scaled(1000, o); c < total; ++c) {
    Expression e = random_expression(detail::uniform(rng, 0, 3), params, rng);
    rec.check([&]() -> std::string {
      std::string text = print(e);
      Expression back = parse(text);
      if (!(back == e)) return "parse(print(e)) != e for " + text;
      if (print(back) != text) return "print is not stable for " + text;
      return {};
    });
  }
  return rec.finish();
}

/// Every suite, in the order the acceptance binary reports them.
inline std::vector<SuiteResult> run_all(const Options& o) {
  return {sample_composite(o), axiom_suite(o),        sort_invariance(o),
          transposition_lemma(o), compositionality(o),   freeness_round_trip(o),
          isomorphism_oracle(o),  matrix_agreement(o),   conclusion_variants(o),
          parse_print_round_trip(o)};
}

}  // namespace idag::selftest
