#pragma once

// Generator expressions of the symmetric monoidal term language: the
// bialgebra generators, labelled nodes, the antipode, identities, block
// symmetries, sequential composition and tensor.
//
// Concrete syntax (";" is diagrammatic: "e1 ; e2" runs e1 first):
//   expr := seq
//   seq  := ten (";" ten)*
//   ten  := atom ("*" atom)*
//   atom := "eta" | "nabla" | "eps" | "delta" | "anti"
//         | "node" ("[" ident "]")? | "id" "(" nat ")"
//         | "sym" "(" nat "," nat ")" | "(" expr ")"

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idag/error.hpp"
#include "idag/graph.hpp"

namespace idag {

struct Arity {
  std::size_t in = 0;
  std::size_t out = 0;
  friend bool operator==(const Arity&, const Arity&) = default;
};

inline std::string to_string(Arity a) { return "(" + std::to_string(a.in) + "," + std::to_string(a.out) + ")"; }

class Expression {
 public:
  enum class Kind { Eta, Nabla, Eps, Delta, Node, Anti, Id, Sym, Seq, Ten };

  static Expression eta() { return Expression(Kind::Eta); }
  static Expression nabla() { return Expression(Kind::Nabla); }
  static Expression eps() { return Expression(Kind::Eps); }
  static Expression delta() { return Expression(Kind::Delta); }
  static Expression anti() { return Expression(Kind::Anti); }
  static Expression node(std::string label = kDefaultLabel) {
    Expression e(Kind::Node);
    e.label_ = std::move(label);
    return e;
  }
  static Expression id(std::size_t n) {
    Expression e(Kind::Id);
    e.n_ = n;
    return e;
  }
  static Expression sym(std::size_t n, std::size_t m) {
    Expression e(Kind::Sym);
    e.n_ = n;
    e.m_ = m;
    return e;
  }
  /// `first` then `then` (then . first).
  static Expression seq(Expression first, Expression then) {
    Expression e(Kind::Seq);
    e.a_ = std::make_shared<const Expression>(std::move(first));
    e.b_ = std::make_shared<const Expression>(std::move(then));
    return e;
  }
  static Expression ten(Expression left, Expression right) {
    Expression e(Kind::Ten);
    e.a_ = std::make_shared<const Expression>(std::move(left));
    e.b_ = std::make_shared<const Expression>(std::move(right));
    return e;
  }

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  const std::string& label() const { return label_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  /// Seq: the stage run first; Ten: the upper factor.
  const Expression& lhs() const { return *a_; }
  /// Seq: the stage run second; Ten: the lower factor.
  const Expression& rhs() const { return *b_; }

  friend bool operator==(const Expression& x, const Expression& y) {
    if (x.kind_ != y.kind_ || x.label_ != y.label_ || x.n_ != y.n_ || x.m_ != y.m_) return false;
    if (x.kind_ != Kind::Seq && x.kind_ != Kind::Ten) return true;
    return *x.a_ == *y.a_ && *x.b_ == *y.b_;
  }

 private:
  explicit Expression(Kind k) : kind_(k) {}

  Kind kind_;
  std::string label_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::shared_ptr<const Expression> a_, b_;
};

inline std::string_view generator_name(Expression::Kind k) {
  using K = Expression::Kind;
  switch (k) {
    case K::Eta: return "eta";
    case K::Nabla: return "nabla";
    case K::Eps: return "eps";
    case K::Delta: return "delta";
    case K::Node: return "node";
    case K::Anti: return "anti";
    case K::Id: return "id";
    case K::Sym: return "sym";
    case K::Seq: return "seq";
    case K::Ten: return "ten";
  }
  return "?";
}

namespace detail {

inline Arity arity_at(const Expression& e, std::size_t& position) {
  using K = Expression::Kind;
  const std::size_t here = position++;
  switch (e.kind()) {
    case K::Eta: return {0, 1};
    case K::Nabla: return {2, 1};
    case K::Eps: return {1, 0};
    case K::Delta: return {1, 2};
    case K::Node:
    case K::Anti: return {1, 1};
    case K::Id: return {e.n(), e.n()};
    case K::Sym: return {e.n() + e.m(), e.n() + e.m()};
    case K::Seq: {
      Arity a = arity_at(e.lhs(), position);
      Arity b = arity_at(e.rhs(), position);
      if (a.out != b.in)
        throw Error(ErrorKind::TypeMismatch, "at term " + std::to_string(here) + ": expected arity " +
                                                 std::to_string(a.out) + ", found " + std::to_string(b.in));
      return {a.in, b.out};
    }
    case K::Ten: {
      Arity a = arity_at(e.lhs(), position);
      Arity b = arity_at(e.rhs(), position);
      return {a.in + b.in, a.out + b.out};
    }
  }
  return {};
}

}  // namespace detail

/// (arity, coarity). Throws TypeMismatch naming the pre-order index of the
/// first ill-typed sequential composition.
inline Arity arity_of(const Expression& e) {
  std::size_t position = 0;
  return detail::arity_at(e, position);
}

/// True if any subterm has kind k.
inline bool contains(const Expression& e, Expression::Kind k) {
  if (e.kind() == k) return true;
  if (e.is(Expression::Kind::Seq) || e.is(Expression::Kind::Ten)) return contains(e.lhs(), k) || contains(e.rhs(), k);
  return false;
}

// ---------------------------------------------------------------------------
// Printing

inline std::string print(const Expression& e) {
  using K = Expression::Kind;
  auto wrap = [](const Expression& x, bool parens) { return parens ? "(" + print(x) + ")" : print(x); };
  switch (e.kind()) {
    case K::Eta:
    case K::Nabla:
    case K::Eps:
    case K::Delta:
    case K::Anti: return std::string(generator_name(e.kind()));
    case K::Node: return e.label() == kDefaultLabel ? "node" : "node[" + e.label() + "]";
    case K::Id: return "id(" + std::to_string(e.n()) + ")";
    case K::Sym: return "sym(" + std::to_string(e.n()) + "," + std::to_string(e.m()) + ")";
    case K::Seq: return print(e.lhs()) + " ; " + wrap(e.rhs(), e.rhs().is(K::Seq));
    case K::Ten:
      return wrap(e.lhs(), e.lhs().is(K::Seq)) + " * " + wrap(e.rhs(), e.rhs().is(K::Seq) || e.rhs().is(K::Ten));
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    auto [e, a] = parse_seq();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  struct Typed {
    Expression expr;
    Arity arity;
  };

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message, ErrorKind::SyntaxError); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message, ErrorKind kind) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_char(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '.' || c == '\'' || c == '-' || u >= 0x80;
  }

  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t natural() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    if (pos_ - start > 9) fail_at(start, "number too large", ErrorKind::SyntaxError);
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Typed parse_seq() {
    Typed acc = parse_ten();
    while (true) {
      skip_space();
      std::size_t at = pos_;
      if (!accept(';')) return acc;
      Typed next = parse_ten();
      if (acc.arity.out != next.arity.in)
        fail_at(at, "expected arity " + std::to_string(acc.arity.out) + ", found " + std::to_string(next.arity.in),
                ErrorKind::TypeMismatch);
      acc = {Expression::seq(std::move(acc.expr), std::move(next.expr)), {acc.arity.in, next.arity.out}};
    }
  }

  Typed parse_ten() {
    Typed acc = parse_atom();
    while (accept('*')) {
      Typed next = parse_atom();
      acc = {Expression::ten(std::move(acc.expr), std::move(next.expr)),
             {acc.arity.in + next.arity.in, acc.arity.out + next.arity.out}};
    }
    return acc;
  }

  Typed parse_atom() {
    if (accept('(')) {
      Typed inner = parse_seq();
      expect(')');
      return inner;
    }
    skip_space();
    std::size_t at = pos_;
    std::string w = word();
    if (w == "eta") return {Expression::eta(), {0, 1}};
    if (w == "nabla") return {Expression::nabla(), {2, 1}};
    if (w == "eps") return {Expression::eps(), {1, 0}};
    if (w == "delta") return {Expression::delta(), {1, 2}};
    if (w == "anti") return {Expression::anti(), {1, 1}};
    if (w == "node") {
      if (!accept('[')) return {Expression::node(), {1, 1}};
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      if (start == pos_) fail("expected a label");
      std::string label(text_.substr(start, pos_ - start));
      expect(']');
      return {Expression::node(std::move(label)), {1, 1}};
    }
    if (w == "id") {
      expect('(');
      std::size_t n = natural();
      expect(')');
      return {Expression::id(n), {n, n}};
    }
    if (w == "sym") {
      expect('(');
      std::size_t n = natural();
      expect(',');
      std::size_t m = natural();
      expect(')');
      return {Expression::sym(n, m), {n + m, n + m}};
    }
    if (w.empty()) {
      if (pos_ >= text_.size()) fail("unexpected end of input");
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    fail_at(at, "unknown generator '" + w + "'", ErrorKind::SyntaxError);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and type-checks. Errors carry "line:column".
inline Expression parse(std::string_view text) { return detail::Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Builders that drop identities, used when synthesising expressions.

inline Expression then(Expression first, Expression second) {
  if (first.is(Expression::Kind::Id)) return second;
  if (second.is(Expression::Kind::Id)) return first;
  return Expression::seq(std::move(first), std::move(second));
}

inline Expression beside(Expression top, Expression bottom) {
  using K = Expression::Kind;
  if (top.is(K::Id) && top.n() == 0) return bottom;
  if (bottom.is(K::Id) && bottom.n() == 0) return top;
  if (top.is(K::Id) && bottom.is(K::Id)) return Expression::id(top.n() + bottom.n());
  // Keep runs of identities merged: (x * id(a)) * id(b) = x * id(a+b).
  if (bottom.is(K::Id) && top.is(K::Ten) && top.rhs().is(K::Id))
    return Expression::ten(top.lhs(), Expression::id(top.rhs().n() + bottom.n()));
  return Expression::ten(std::move(top), std::move(bottom));
}

/// Replaces every node[label] by f(label) (which must have type 1 -> 1).
template <typename F>
Expression map_nodes(const Expression& e, F&& f) {
  using K = Expression::Kind;
  switch (e.kind()) {
    case K::Node: return f(e.label());
    case K::Seq: return Expression::seq(map_nodes(e.lhs(), f), map_nodes(e.rhs(), f));
    case K::Ten: return Expression::ten(map_nodes(e.lhs(), f), map_nodes(e.rhs(), f));
    default: return e;
  }
}

/// Sym(n, m) written with sym(1,1), identities, tensor and sequencing only.
inline Expression expand_symmetry(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) return Expression::id(n + m);
  if (n == 1 && m == 1) return Expression::sym(1, 1);
  if (n == 1) {
    // x y1..ym -> y1 x y2..ym -> y1..ym x
    return then(beside(Expression::sym(1, 1), Expression::id(m - 1)),
                beside(Expression::id(1), expand_symmetry(1, m - 1)));
  }
  // x1..xn y -> x1..x(n-1) y.. xn -> y.. x1..xn
  return then(beside(Expression::id(n - 1), expand_symmetry(1, m)),
              beside(expand_symmetry(n - 1, m), Expression::id(1)));
}

}  // namespace idag
