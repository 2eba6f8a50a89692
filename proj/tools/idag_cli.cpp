// idag: command-line front end for the idag library.
//
// Exit codes: eq returns 0 (equal), 1 (unequal) or 2 (error); every other
// command returns 0 on success and 2 on error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "idag/idag.hpp"
#include "idag/selftest.hpp"

namespace {

using namespace idag;

constexpr int kExitError = 2;

struct Config {
  std::string mode = "bool";
  std::vector<std::string> quotients;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string sorting = "default";
};

TheoryMode theory_mode(const Config& cfg) {
  auto w = parse_weights(cfg.mode);
  if (!w) throw Error(ErrorKind::BadInput, "unknown mode '" + cfg.mode + "'");
  TheoryMode mode{*w, std::nullopt, false, false};
  for (const auto& q : cfg.quotients) {
    if (q == "transitive")
      mode.transitive = true;
    else if (q == "nodangling")
      mode.no_dangling = true;
    else
      throw Error(ErrorKind::BadInput, "unknown quotient '" + q + "'");
  }
  mode.validate();
  return mode;
}

std::string read_argument(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw Error(ErrorKind::BadInput, "cannot read " + arg.substr(1));
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  return arg;
}

bool looks_like_json(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

Expression read_expression(const std::string& arg, const TheoryMode& mode) {
  Expression e = parse(read_argument(arg));
  if (contains(e, Expression::Kind::Anti) && !mode.antipode_enabled())
    throw Error(ErrorKind::UnsupportedGenerator, "anti is only available with --mode int");
  return e;
}

/// An idag given as JSON, or an expression evaluated in the free model.
Idag read_idag(const std::string& arg, const TheoryMode& mode) {
  std::string text = read_argument(arg);
  if (looks_like_json(text)) return idag_from_json_text(text);
  Expression e = parse(text);
  if (contains(e, Expression::Kind::Anti) && !mode.antipode_enabled())
    throw Error(ErrorKind::UnsupportedGenerator, "anti is only available with --mode int");
  return eval(e, FreeModel{mode, {}});
}

std::string text_form(const Idag& d) {
  std::ostringstream os;
  os << to_string(d.weights()) << " (" << d.in_arity() << "," << d.out_arity() << ")\n";
  for (const auto& n : d.nodes()) os << "node (" << n.id << ") " << n.label << "\n";
  auto name = [&](Vertex v) {
    if (v.is_in()) return "in" + std::to_string(v.index);
    if (v.is_out()) return "out" + std::to_string(v.index);
    return "(" + d.node(v.index).id + ")";
  };
  for (const auto& [e, w] : d.edges()) {
    os << name(e.first) << " -> " << name(e.second);
    if (w != 1) os << " [" << w << "]";
    os << "\n";
  }
  return os.str();
}

void emit(const Idag& d, const Config& cfg) {
  if (cfg.format == "dot")
    std::cout << to_dot(d);
  else if (cfg.format == "text")
    std::cout << text_form(d);
  else
    std::cout << to_json(d).dump(2) << "\n";
}

TopSort choose_sorting(const Idag& d, const Config& cfg) {
  const std::string& spec = cfg.sorting;
  if (spec == "default") return default_sorting(d);
  if (spec == "random") {
    Rng rng(cfg.seed);
    return sample_topological_sorting(d, rng);
  }
  std::string digits = spec.rfind("index:", 0) == 0 ? spec.substr(6) : spec;
  std::size_t k = 0;
  try {
    std::size_t used = 0;
    k = std::stoull(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(spec);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::BadInput, "bad --sorting '" + spec + "' (default, random, K or index:K)");
  }
  auto sortings = topological_sortings(d);
  for (std::size_t i = 0; auto s = sortings.next(); ++i)
    if (i == k) return *s;
  throw Error(ErrorKind::IndexOutOfRange, "the idag has fewer than " + std::to_string(k + 1) + " topological sortings");
}

int cmd_eq(const std::string& a, const std::string& b, const Config& cfg) {
  TheoryMode mode = theory_mode(cfg);
  EqReport r = equal_mod_theory(read_expression(a, mode), read_expression(b, mode), mode);
  if (cfg.format == "text") {
    std::cout << (r.equal ? "equal" : "not equal") << "\n";
    if (!r.equal) std::cout << "lhs:\n" << text_form(r.lhs) << "rhs:\n" << text_form(r.rhs);
  } else if (cfg.format == "dot") {
    std::cout << to_dot(r.lhs, "lhs") << to_dot(r.rhs, "rhs");
  } else {
    std::cout << to_json(r).dump(2) << "\n";
  }
  return r.equal ? 0 : 1;
}

int cmd_decompose(const std::string& a, const Config& cfg) {
  TheoryMode mode = theory_mode(cfg);
  Idag d = read_idag(a, mode);
  TopSort s = choose_sorting(d, cfg);
  Expression e = decompose(d, s);
  if (cfg.format == "json") {
    json j;
    j["expression"] = print(e);
    j["sorting"] = json::array();
    for (auto p : s.order) j["sorting"].push_back(d.node(p).id);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << print(e) << "\n";
  }
  return 0;
}

int cmd_selftest(const Config& cfg, double scale, const std::string& mutant) {
  selftest::Options o;
  o.seed = cfg.seed;
  o.scale = scale;
  if (mutant == "swap")
    o.mutant = selftest::Mutant::SwapMergeCopy;
  else if (mutant == "drop")
    o.mutant = selftest::Mutant::MergeDropsInput;
  else if (!mutant.empty())
    throw Error(ErrorKind::BadInput, "unknown mutant '" + mutant + "' (swap or drop)");

  bool ok = true;
  for (const auto& r : selftest::run_all(o)) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases - r.failures << "/" << r.cases
              << " cases\n";
    if (!r.passed() && ok) std::cout << "  first failure: " << r.first_failure << "\n";
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interfaced dags: compose, normalise, decompose and compare"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--mode", cfg.mode, "weight system: bool, nat or int")->check(CLI::IsMember({"bool", "nat", "int"}));
  app.add_option("--quotient", cfg.quotients, "quotient equation (repeatable): transitive, nodangling")
      ->check(CLI::IsMember({"transitive", "nodangling"}));
  app.add_option("--format", cfg.format, "output format: json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--sorting", cfg.sorting, "topological sorting: default, random, K or index:K");

  std::string a, b;
  int status = 0;
  auto run = [&](auto&& body) {
    return [&, body] { status = body(); };
  };

  auto* eq = app.add_subcommand("eq", "decide equality of two expressions; exit 0 equal, 1 unequal");
  eq->add_option("lhs", a, "expression, @file or -")->required();
  eq->add_option("rhs", b, "expression, @file or -")->required();
  eq->callback(run([&] { return cmd_eq(a, b, cfg); }));

  auto* normalize_cmd = app.add_subcommand("normalize", "canonical form of an expression or idag");
  normalize_cmd->add_option("input", a, "expression, idag JSON, @file or -")->required();
  normalize_cmd->callback(run([&] {
    TheoryMode mode = theory_mode(cfg);
    Idag d = read_idag(a, mode);
    mode.weights = d.weights();
    mode.validate();
    emit(normalize_idag(d, mode), cfg);
    return 0;
  }));

  auto* decompose_cmd = app.add_subcommand("decompose", "expression for an idag along a topological sorting");
  decompose_cmd->add_option("input", a, "idag JSON, expression, @file or -")->required();
  decompose_cmd->callback(run([&] { return cmd_decompose(a, cfg); }));

  auto* compose_cmd = app.add_subcommand("compose", "A then B");
  compose_cmd->add_option("first", a)->required();
  compose_cmd->add_option("second", b)->required();
  compose_cmd->callback(run([&] {
    TheoryMode mode = theory_mode(cfg);
    emit(concat(read_idag(b, mode), read_idag(a, mode)), cfg);
    return 0;
  }));

  auto* tensor_cmd = app.add_subcommand("tensor", "A beside B (A on top)");
  tensor_cmd->add_option("top", a)->required();
  tensor_cmd->add_option("bottom", b)->required();
  tensor_cmd->callback(run([&] {
    TheoryMode mode = theory_mode(cfg);
    emit(juxt(read_idag(a, mode), read_idag(b, mode)), cfg);
    return 0;
  }));

  auto* closure_cmd = app.add_subcommand("closure", "transitive closure through internal nodes (bool)");
  closure_cmd->add_option("input", a)->required();
  closure_cmd->callback(run([&] {
    emit(transitive_closure(read_idag(a, theory_mode(cfg))), cfg);
    return 0;
  }));

  auto* prune_cmd = app.add_subcommand("prune", "remove dangling nodes (bool)");
  prune_cmd->add_option("input", a)->required();
  prune_cmd->callback(run([&] {
    emit(prune_dangling(read_idag(a, theory_mode(cfg))), cfg);
    return 0;
  }));

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering");
  dot_cmd->add_option("input", a)->required();
  dot_cmd->callback(run([&] {
    std::cout << to_dot(read_idag(a, theory_mode(cfg)));
    return 0;
  }));

  RandomIdagParams params;
  std::string labels;
  auto* random_cmd = app.add_subcommand("random", "seeded random idag");
  random_cmd->add_option("--inputs", params.inputs)->capture_default_str();
  random_cmd->add_option("--outputs", params.outputs)->capture_default_str();
  random_cmd->add_option("--nodes", params.nodes)->capture_default_str();
  random_cmd->add_option("--edge-prob", params.edge_prob)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  random_cmd->add_option("--labels", labels, "comma-separated node labels");
  random_cmd->callback(run([&] {
    params.weights = theory_mode(cfg).weights;
    std::stringstream ss(labels);
    for (std::string l; std::getline(ss, l, ',');)
      if (!l.empty()) params.labels.push_back(l);
    Rng rng(cfg.seed);
    emit(random_idag(params, rng), cfg);
    return 0;
  }));

  double scale = 0.25;
  std::string mutant;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the property suites; exit 0 iff all pass");
  selftest_cmd->add_option("--scale", scale, "fraction of the full case counts")->capture_default_str();
  selftest_cmd->add_option("--mutant", mutant, "inject a fault into the free model: swap or drop");
  selftest_cmd->callback(run([&] { return cmd_selftest(cfg, scale, mutant); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "idag: error: " << e.what() << "\n";
    return kExitError;
  }
  return status;
}
