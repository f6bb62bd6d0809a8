#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace normalcone::script {

/// Source position, 1-based.
struct Position {
  int line = 1;
  int column = 1;
  bool operator==(const Position&) const = default;
};

enum class DiagnosticKind { Lex, Parse, Semantic };
std::string to_string(DiagnosticKind k);

struct Diagnostic {
  DiagnosticKind kind = DiagnosticKind::Parse;
  Position pos;
  std::string message;
  std::vector<std::string> expected;  ///< sorted token descriptions, parse errors only
  /// "line:col: kind error: message (expected ...)".
  std::string to_string() const;
};

class ScriptError : public std::runtime_error {
 public:
  explicit ScriptError(Diagnostic d);
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

/// Polynomial expression tree. Positions are ignored by ==.
struct Expr {
  enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Number;
  std::string text;  ///< Number: decimal digits without leading zeros; Variable: name
  unsigned exponent = 0;
  std::vector<Expr> args;
  Position pos;

  bool operator==(const Expr& o) const {
    return kind == o.kind && text == o.text && exponent == o.exponent && args == o.args;
  }
};

struct OrderSpec {
  std::string name;                   ///< lex, deglex, degrevlex, weighted
  std::vector<long> weights;          ///< weighted only
  std::vector<std::string> priority;  ///< optional variable priority
  Position pos;
  bool operator==(const OrderSpec& o) const {
    return name == o.name && weights == o.weights && priority == o.priority;
  }
};

struct RingDecl {
  std::string name;
  long characteristic = 0;  ///< 0 for Q
  std::vector<std::string> vars;
  std::vector<Expr> relations;
  std::optional<long> trunc;
  Position pos;
  bool operator==(const RingDecl& o) const {
    return name == o.name && characteristic == o.characteristic && vars == o.vars && relations == o.relations &&
           trunc == o.trunc;
  }
};

/// `ideal I = m;`, `ideal I = (f, g);` or `ideal I = f;` (a sequence name).
struct IdealDecl {
  std::string name;
  bool maximal = false;
  std::optional<std::string> ref;
  std::vector<Expr> gens;
  Position pos;
  bool operator==(const IdealDecl& o) const {
    return name == o.name && maximal == o.maximal && ref == o.ref && gens == o.gens;
  }
};

struct SeqDecl {
  std::string name;
  std::vector<Expr> elems;
  Position pos;
  bool operator==(const SeqDecl& o) const { return name == o.name && elems == o.elems; }
};

struct OrderDecl {
  std::string name;
  OrderSpec spec;
  Position pos;
  bool operator==(const OrderDecl& o) const { return name == o.name && spec == o.spec; }
};

/// adic(J) | order(spec) | weighted(w...) | table((..), (..), ...), optional cap.
struct FiltrationDecl {
  std::string name;
  std::string kind;
  std::string ideal;  ///< adic
  OrderSpec order;    ///< order
  std::vector<long> weights;
  std::vector<std::vector<Expr>> levels;
  std::optional<long> cap;
  Position pos;
  bool operator==(const FiltrationDecl& o) const {
    return name == o.name && kind == o.kind && ideal == o.ideal && order == o.order && weights == o.weights &&
           levels == o.levels && cap == o.cap;
  }
};

struct Range {
  long lo = 0;
  long hi = 0;
  bool operator==(const Range&) const = default;
};

/// Command argument value: integer, identifier, range lo..hi, order
/// spec with weights or priority, or a parenthesized polynomial list.
struct Value {
  std::variant<long, std::string, Range, OrderSpec, std::vector<Expr>> v;
  Position pos;
  bool operator==(const Value& o) const { return v == o.v; }
};

struct Command {
  std::string name;
  std::vector<Value> positional;
  std::vector<std::pair<std::string, Value>> keywords;
  Position pos;
  bool operator==(const Command& o) const {
    return name == o.name && positional == o.positional && keywords == o.keywords;
  }
};

using Statement = std::variant<RingDecl, IdealDecl, SeqDecl, OrderDecl, FiltrationDecl, Command>;

struct SessionScript {
  std::vector<Statement> statements;
  bool operator==(const SessionScript& o) const { return statements == o.statements; }
};

/// Parses a script. Throws ScriptError (lex or parse) with a position.
SessionScript parse(std::string_view text);

/// Canonical text; parse(pretty_print(s)) == s.
std::string pretty_print(const SessionScript& s);
std::string pretty_print(const Expr& e);
std::string pretty_print(const OrderSpec& o);

/// FNV-1a 64-bit hash of the bytes, as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

}  // namespace normalcone::script
