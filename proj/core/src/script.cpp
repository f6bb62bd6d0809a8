#include "normalcone/script.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <set>

namespace normalcone::script {

std::string to_string(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::Lex: return "lex";
    case DiagnosticKind::Parse: return "parse";
    case DiagnosticKind::Semantic: return "semantic";
  }
  return "?";
}

std::string Diagnostic::to_string() const {
  std::string s = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + script::to_string(kind) +
                  " error: " + message;
  if (!expected.empty()) {
    s += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
    s += ")";
  }
  return s;
}

ScriptError::ScriptError(Diagnostic d) : std::runtime_error(d.to_string()), diag_(std::move(d)) {}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

constexpr int kMaxDepth = 200;
constexpr unsigned kMaxExponent = 10000;
constexpr long kMaxInt = 1'000'000'000'000L;

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  Position pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::Ident: return "identifier '" + t.text + "'";
    case Token::Kind::Int: return "number " + t.text;
    case Token::Kind::Punct: return "'" + t.text + "'";
    case Token::Kind::End: return "end of input";
  }
  return "?";
}

[[noreturn]] void fail(DiagnosticKind kind, Position pos, std::string message, std::vector<std::string> expected = {}) {
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  throw ScriptError(Diagnostic{kind, pos, std::move(message), std::move(expected)});
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Position pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    const Position start = pos;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      if (j - i > 64) fail(DiagnosticKind::Lex, start, "identifier longer than 64 characters");
      out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j - i > 4096) fail(DiagnosticKind::Lex, start, "numeral longer than 4096 digits");
      std::string digits(src.substr(i, j - i));
      const auto nz = digits.find_first_not_of('0');
      digits = nz == std::string::npos ? "0" : digits.substr(nz);
      out.push_back({Token::Kind::Int, digits, start});
      advance(j - i);
      continue;
    }
    if (c == '.' && i + 1 < src.size() && src[i + 1] == '.') {
      out.push_back({Token::Kind::Punct, "..", start});
      advance(2);
      continue;
    }
    if (std::string_view("=;,()[]+-*/^").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, static_cast<char>(c)), start});
      advance(1);
      continue;
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "0x%02x", c);
    fail(DiagnosticKind::Lex, start,
         c >= 0x80 ? std::string("non-ASCII byte ") + buf + " outside a comment"
                   : std::string("unexpected character ") + (std::isprint(c) ? "'" + std::string(1, static_cast<char>(c)) + "'" : buf));
  }
  out.push_back({Token::Kind::End, "", pos});
  return out;
}

const std::vector<std::string> kExprStart{"'('", "'-'", "identifier", "number"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SessionScript script() {
    SessionScript s;
    while (peek().kind != Token::Kind::End) s.statements.push_back(statement());
    return s;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(p_ + k, toks_.size() - 1)]; }
  bool is_punct(const char* t, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Punct && peek(k).text == t;
  }
  bool is_ident(const char* t) const { return peek().kind == Token::Kind::Ident && peek().text == t; }

  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    fail(DiagnosticKind::Parse, peek().pos, "unexpected " + describe(peek()), std::move(expected));
  }

  Token take() { return toks_[std::min(p_++, toks_.size() - 1)]; }

  void expect(const char* punct) {
    if (!is_punct(punct)) unexpected({std::string("'") + punct + "'"});
    take();
  }

  std::string ident(const char* what = "identifier") {
    if (peek().kind != Token::Kind::Ident) unexpected({what});
    return take().text;
  }

  long integer() {
    if (peek().kind != Token::Kind::Int) unexpected({"number"});
    const Token t = take();
    if (t.text.size() > 13 || std::stol(t.text) > kMaxInt)
      fail(DiagnosticKind::Parse, t.pos, "integer " + t.text.substr(0, 20) + " is too large");
    return std::stol(t.text);
  }

  void keyword(const char* kw) {
    if (!is_ident(kw)) unexpected({std::string("'") + kw + "'"});
    take();
  }

  Statement statement() {
    if (peek().kind == Token::Kind::Ident) {
      const std::string& k = peek().text;
      if (k == "ring") return ring();
      if (k == "ideal") return ideal();
      if (k == "seq") return seq();
      if (k == "order") return order_decl();
      if (k == "filtration") return filtration();
      if (k == "cmd") return command();
    }
    unexpected({"'cmd'", "'filtration'", "'ideal'", "'order'", "'ring'", "'seq'"});
  }

  RingDecl ring() {
    RingDecl r;
    r.pos = take().pos;
    r.name = ident("ring name");
    expect("=");
    if (is_ident("Q") || is_ident("QQ")) {
      take();
    } else if (is_ident("GF")) {
      take();
      expect("(");
      r.characteristic = integer();
      expect(")");
    } else {
      unexpected({"'GF'", "'Q'"});
    }
    expect("[");
    r.vars.push_back(ident("variable name"));
    while (is_punct(",")) {
      take();
      r.vars.push_back(ident("variable name"));
    }
    expect("]");
    if (is_punct("/")) {
      take();
      r.relations = expr_list();
    }
    if (is_ident("trunc")) {
      take();
      r.trunc = integer();
    }
    if (!is_punct(";")) unexpected({"';'", "'/'", "'trunc'"});
    take();
    return r;
  }

  IdealDecl ideal() {
    IdealDecl d;
    d.pos = take().pos;
    d.name = ident("ideal name");
    expect("=");
    if (is_ident("m")) {
      take();
      d.maximal = true;
    } else if (peek().kind == Token::Kind::Ident) {
      d.ref = take().text;
    } else if (is_punct("(")) {
      d.gens = expr_list();
    } else {
      unexpected({"'('", "'m'", "sequence name"});
    }
    expect(";");
    return d;
  }

  SeqDecl seq() {
    SeqDecl d;
    d.pos = take().pos;
    d.name = ident("sequence name");
    expect("=");
    d.elems = expr_list();
    expect(";");
    return d;
  }

  OrderSpec order_spec() {
    OrderSpec o;
    o.pos = peek().pos;
    o.name = ident("order name");
    if (is_punct("(")) {
      take();
      o.weights = int_list_tail();
    }
    if (is_punct("[")) {
      take();
      o.priority.push_back(ident("variable name"));
      while (is_punct(",")) {
        take();
        o.priority.push_back(ident("variable name"));
      }
      expect("]");
    }
    return o;
  }

  /// After '(': INT {, INT} ')'.
  std::vector<long> int_list_tail() {
    std::vector<long> v{integer()};
    while (is_punct(",")) {
      take();
      v.push_back(integer());
    }
    expect(")");
    return v;
  }

  OrderDecl order_decl() {
    OrderDecl d;
    d.pos = take().pos;
    d.name = ident("order name");
    expect("=");
    d.spec = order_spec();
    expect(";");
    return d;
  }

  FiltrationDecl filtration() {
    FiltrationDecl d;
    d.pos = take().pos;
    d.name = ident("filtration name");
    expect("=");
    const Token k = peek();
    d.kind = ident("filtration kind");
    if (d.kind == "adic") {
      expect("(");
      d.ideal = ident("ideal name");
      expect(")");
    } else if (d.kind == "order") {
      expect("(");
      d.order = order_spec();
      expect(")");
    } else if (d.kind == "weighted") {
      expect("(");
      d.weights = int_list_tail();
    } else if (d.kind == "table") {
      expect("(");
      d.levels.push_back(expr_list());
      while (is_punct(",")) {
        take();
        d.levels.push_back(expr_list());
      }
      expect(")");
    } else {
      fail(DiagnosticKind::Parse, k.pos, "unknown filtration kind '" + d.kind + "'",
           {"'adic'", "'order'", "'table'", "'weighted'"});
    }
    if (is_ident("cap")) {
      take();
      d.cap = integer();
    }
    if (!is_punct(";")) unexpected({"';'", "'cap'"});
    take();
    return d;
  }

  Value value() {
    Value v;
    v.pos = peek().pos;
    if (peek().kind == Token::Kind::Int) {
      const long lo = integer();
      if (is_punct("..")) {
        take();
        v.v = Range{lo, integer()};
      } else {
        v.v = lo;
      }
    } else if (peek().kind == Token::Kind::Ident) {
      if (is_punct("(", 1) || is_punct("[", 1))
        v.v = order_spec();
      else
        v.v = take().text;
    } else if (is_punct("(")) {
      v.v = expr_list();
    } else {
      unexpected({"'('", "identifier", "number"});
    }
    return v;
  }

  Command command() {
    Command c;
    c.pos = take().pos;
    c.name = ident("command name");
    while (!is_punct(";")) {
      if (peek().kind == Token::Kind::End) unexpected({"';'", "argument"});
      if (peek().kind == Token::Kind::Ident && is_punct("=", 1)) {
        std::string key = take().text;
        take();
        c.keywords.emplace_back(std::move(key), value());
      } else {
        c.positional.push_back(value());
      }
    }
    take();
    return c;
  }

  /// '(' [expr {',' expr}] ')'.
  std::vector<Expr> expr_list() {
    expect("(");
    std::vector<Expr> v;
    if (is_punct(")")) {
      take();
      return v;
    }
    v.push_back(expr(0));
    while (is_punct(",")) {
      take();
      v.push_back(expr(0));
    }
    if (!is_punct(")")) unexpected({"')'", "','", "'*'", "'+'", "'-'", "'/'", "'^'"});
    take();
    return v;
  }

  void enter(int depth) const {
    if (depth > kMaxDepth) fail(DiagnosticKind::Parse, peek().pos, "expression nested too deeply");
  }

  Expr expr(int depth) {
    enter(depth);
    Expr l = term(depth + 1);
    while (is_punct("+") || is_punct("-")) {
      const Token op = take();
      Expr r = term(depth + 1);
      Expr e;
      e.kind = op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      e.pos = op.pos;
      e.args = {std::move(l), std::move(r)};
      l = std::move(e);
    }
    return l;
  }

  Expr term(int depth) {
    enter(depth);
    Expr l = unary(depth + 1);
    while (is_punct("*") || is_punct("/")) {
      const Token op = take();
      Expr r = unary(depth + 1);
      Expr e;
      e.kind = op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div;
      e.pos = op.pos;
      e.args = {std::move(l), std::move(r)};
      l = std::move(e);
    }
    return l;
  }

  Expr unary(int depth) {
    enter(depth);
    if (is_punct("-")) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.pos = take().pos;
      e.args.push_back(unary(depth + 1));
      return e;
    }
    return power(depth + 1);
  }

  Expr power(int depth) {
    Expr base = primary(depth + 1);
    if (!is_punct("^")) return base;
    const Token op = take();
    if (peek().kind != Token::Kind::Int) unexpected({"number"});
    const Token t = take();
    if (t.text.size() > 6 || std::stoul(t.text) > kMaxExponent)
      fail(DiagnosticKind::Parse, t.pos, "exponent " + t.text.substr(0, 20) + " exceeds " + std::to_string(kMaxExponent));
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.pos = op.pos;
    e.exponent = static_cast<unsigned>(std::stoul(t.text));
    e.args.push_back(std::move(base));
    return e;
  }

  Expr primary(int depth) {
    enter(depth);
    Expr e;
    e.pos = peek().pos;
    if (peek().kind == Token::Kind::Int) {
      e.kind = Expr::Kind::Number;
      e.text = take().text;
      return e;
    }
    if (peek().kind == Token::Kind::Ident) {
      e.kind = Expr::Kind::Variable;
      e.text = take().text;
      return e;
    }
    if (is_punct("(")) {
      take();
      Expr inner = expr(depth + 1);
      if (!is_punct(")")) unexpected({"')'", "'*'", "'+'", "'-'", "'/'", "'^'"});
      take();
      return inner;
    }
    unexpected(kExprStart);
  }

  std::vector<Token> toks_;
  std::size_t p_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

void print(const Expr& e, int need, std::string& out) {
  const bool paren = precedence(e) < need;
  if (paren) out += '(';
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Variable: out += e.text; break;
    case Expr::Kind::Neg:
      out += '-';
      print(e.args[0], 3, out);
      break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      print(e.args[0], 1, out);
      out += e.kind == Expr::Kind::Add ? " + " : " - ";
      print(e.args[1], 2, out);
      break;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      print(e.args[0], 2, out);
      out += e.kind == Expr::Kind::Mul ? "*" : "/";
      print(e.args[1], 3, out);
      break;
    case Expr::Kind::Pow:
      print(e.args[0], 5, out);
      out += "^" + std::to_string(e.exponent);
      break;
  }
  if (paren) out += ')';
}

std::string list(const std::vector<Expr>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + pretty_print(v[i]);
  return s + ")";
}

std::string ints(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string value_text(const Value& v) {
  struct V {
    std::string operator()(long x) const { return std::to_string(x); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const Range& r) const { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }
    std::string operator()(const OrderSpec& o) const { return pretty_print(o); }
    std::string operator()(const std::vector<Expr>& e) const { return list(e); }
  };
  return std::visit(V{}, v.v);
}

}  // namespace

SessionScript parse(std::string_view text) { return Parser(lex(text)).script(); }

std::string pretty_print(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

std::string pretty_print(const OrderSpec& o) {
  std::string s = o.name;
  if (!o.weights.empty()) s += ints(o.weights);
  if (!o.priority.empty()) {
    s += "[";
    for (std::size_t i = 0; i < o.priority.size(); ++i) s += (i ? "," : "") + o.priority[i];
    s += "]";
  }
  return s;
}

std::string pretty_print(const SessionScript& s) {
  std::string out;
  for (const auto& st : s.statements) {
    if (auto* r = std::get_if<RingDecl>(&st)) {
      out += "ring " + r->name + " = " + (r->characteristic ? "GF(" + std::to_string(r->characteristic) + ")" : "Q") +
             "[";
      for (std::size_t i = 0; i < r->vars.size(); ++i) out += (i ? "," : "") + r->vars[i];
      out += "]";
      if (!r->relations.empty()) out += " / " + list(r->relations);
      if (r->trunc) out += " trunc " + std::to_string(*r->trunc);
    } else if (auto* d = std::get_if<IdealDecl>(&st)) {
      out += "ideal " + d->name + " = " + (d->maximal ? "m" : d->ref ? *d->ref : list(d->gens));
    } else if (auto* q = std::get_if<SeqDecl>(&st)) {
      out += "seq " + q->name + " = " + list(q->elems);
    } else if (auto* o = std::get_if<OrderDecl>(&st)) {
      out += "order " + o->name + " = " + pretty_print(o->spec);
    } else if (auto* f = std::get_if<FiltrationDecl>(&st)) {
      out += "filtration " + f->name + " = " + f->kind + "(";
      if (f->kind == "adic") out += f->ideal;
      if (f->kind == "order") out += pretty_print(f->order);
      if (f->kind == "weighted") {
        const auto w = ints(f->weights);
        out += w.substr(1, w.size() - 2);
      }
      if (f->kind == "table")
        for (std::size_t i = 0; i < f->levels.size(); ++i) out += (i ? ", " : "") + list(f->levels[i]);
      out += ")";
      if (f->cap) out += " cap " + std::to_string(*f->cap);
    } else if (auto* c = std::get_if<Command>(&st)) {
      out += "cmd " + c->name;
      for (const auto& v : c->positional) out += " " + value_text(v);
      for (const auto& [k, v] : c->keywords) out += " " + k + "=" + value_text(v);
    }
    out += ";\n";
  }
  return out;
}

}  // namespace normalcone::script
