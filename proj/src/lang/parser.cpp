#include "elgot/lang/parser.hpp"

#include <cctype>
#include <set>
#include <utility>
#include <vector>

namespace elgot::lang {

namespace {

enum class Tok {
  Ident, Number,
  KwVar, KwSkip, KwIf, KwThen, KwElse, KwFi, KwWhile, KwDo, KwOd,
  KwAnd, KwOr, KwNot, KwTrue, KwFalse,
  Assign, Semi, Colon, LParen, RParen,
  Plus, Minus, Star, Lt, Le, Eq,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  long number = 0;
  SourceLoc loc;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto loc = [&]() { return SourceLoc{line, col}; };
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
    SourceLoc l = loc();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string digits = text.substr(i, j - i);
      advance(j - i);
      out.push_back(Token{Tok::Number, digits, std::stol(digits), l});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word = text.substr(i, j - i);
      advance(j - i);
      Tok k = Tok::Ident;
      if (word == "var") k = Tok::KwVar;
      else if (word == "skip") k = Tok::KwSkip;
      else if (word == "if") k = Tok::KwIf;
      else if (word == "then") k = Tok::KwThen;
      else if (word == "else") k = Tok::KwElse;
      else if (word == "fi") k = Tok::KwFi;
      else if (word == "while") k = Tok::KwWhile;
      else if (word == "do") k = Tok::KwDo;
      else if (word == "od") k = Tok::KwOd;
      else if (word == "and") k = Tok::KwAnd;
      else if (word == "or") k = Tok::KwOr;
      else if (word == "not") k = Tok::KwNot;
      else if (word == "true") k = Tok::KwTrue;
      else if (word == "false") k = Tok::KwFalse;
      out.push_back(Token{k, word, 0, l});
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < text.size() && text[i + 1] == b;
    };
    if (two(':', '=')) { advance(2); out.push_back(Token{Tok::Assign, ":=", 0, l}); continue; }
    if (two('<', '=')) { advance(2); out.push_back(Token{Tok::Le, "<=", 0, l}); continue; }
    Tok k;
    switch (c) {
      case ';': k = Tok::Semi; break;
      case ':': k = Tok::Colon; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '<': k = Tok::Lt; break;
      case '=': k = Tok::Eq; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", l);
    }
    advance(1);
    out.push_back(Token{k, std::string(1, c), 0, l});
  }
  out.push_back(Token{Tok::End, "<end of input>", 0, loc()});
  return out;
}

enum class Type { Int, Bool };

Type type_of(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::IntLit:
    case Expr::Kind::Var: return Type::Int;
    case Expr::Kind::BoolLit:
    case Expr::Kind::Not: return Type::Bool;
    case Expr::Kind::Binary:
      switch (e.op) {
        case BinOp::Add:
        case BinOp::Sub:
        case BinOp::Mul: return Type::Int;
        default: return Type::Bool;
      }
  }
  return Type::Int;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program parse_program() {
    Program p;
    std::set<std::string> seen;
    while (at(Tok::KwVar)) {
      Token kw = next();
      Token name = expect(Tok::Ident, "variable name");
      expect(Tok::Colon, "':'");
      Token width = expect(Tok::Number, "bit-width");
      if (width.number < 1 || width.number > 62)
        throw SyntaxError("bit-width must be between 1 and 62", width.loc);
      expect(Tok::Semi, "';'");
      if (!seen.insert(name.text).second)
        throw SyntaxError("duplicate declaration of '" + name.text + "'", name.loc);
      p.decls.push_back(Decl{name.text, static_cast<int>(width.number), kw.loc});
      declared_.insert(name.text);
    }
    p.body = parse_seq(/*allow_empty=*/true);
    expect(Tok::End, "end of program");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token next() { return toks_[pos_++]; }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) throw SyntaxError("expected " + what + ", found '" + peek().text + "'", peek().loc);
    return next();
  }

  bool at_stmt_start() const {
    switch (peek().kind) {
      case Tok::KwSkip:
      case Tok::KwIf:
      case Tok::KwWhile:
      case Tok::Ident: return true;
      default: return false;
    }
  }

  // stmt (';' stmt)* with tolerated trailing ';'. Null when empty (allowed
  // only at top level: the empty program).
  StmtPtr parse_seq(bool allow_empty) {
    if (!at_stmt_start()) {
      if (allow_empty) return nullptr;
      throw SyntaxError("expected a statement, found '" + peek().text + "'", peek().loc);
    }
    StmtPtr acc = parse_stmt();
    while (at(Tok::Semi)) {
      Token semi = next();
      if (!at_stmt_start()) break;  // trailing ';'
      StmtPtr rhs = parse_stmt();
      acc = Stmt::seq(acc, rhs, semi.loc);
    }
    return acc;
  }

  StmtPtr parse_stmt() {
    Token t = peek();
    switch (t.kind) {
      case Tok::KwSkip:
        next();
        return Stmt::skip(t.loc);
      case Tok::Ident: {
        next();
        if (!declared_.count(t.text)) throw UndeclaredVariable(t.text, t.loc);
        expect(Tok::Assign, "':='");
        ExprPtr e = parse_expr();
        if (type_of(*e) != Type::Int)
          throw TypeError("assignment to '" + t.text + "' needs an integer expression", e->loc);
        return Stmt::assign(t.text, e, t.loc);
      }
      case Tok::KwIf: {
        next();
        ExprPtr c = parse_guard();
        expect(Tok::KwThen, "'then'");
        StmtPtr then_branch = parse_seq(false);
        expect(Tok::KwElse, "'else'");
        StmtPtr else_branch = parse_seq(false);
        expect(Tok::KwFi, "'fi'");
        return Stmt::if_(c, then_branch, else_branch, t.loc);
      }
      case Tok::KwWhile: {
        next();
        ExprPtr c = parse_guard();
        expect(Tok::KwDo, "'do'");
        StmtPtr body = parse_seq(false);
        expect(Tok::KwOd, "'od'");
        return Stmt::while_(c, body, t.loc);
      }
      default:
        throw SyntaxError("expected a statement, found '" + t.text + "'", t.loc);
    }
  }

  ExprPtr parse_guard() {
    ExprPtr c = parse_expr();
    if (type_of(*c) != Type::Bool)
      throw TypeError("guard must be a boolean expression", c->loc);
    return c;
  }

  // Precedence (loosest first): or, and, not, comparison, additive,
  // multiplicative, atom.
  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr e = parse_and();
    while (at(Tok::KwOr)) {
      Token op = next();
      ExprPtr rhs = parse_and();
      require_bool(e, op.loc, "'or'");
      require_bool(rhs, op.loc, "'or'");
      e = Expr::binary(BinOp::Or, e, rhs, op.loc);
    }
    return e;
  }

  ExprPtr parse_and() {
    ExprPtr e = parse_not();
    while (at(Tok::KwAnd)) {
      Token op = next();
      ExprPtr rhs = parse_not();
      require_bool(e, op.loc, "'and'");
      require_bool(rhs, op.loc, "'and'");
      e = Expr::binary(BinOp::And, e, rhs, op.loc);
    }
    return e;
  }

  ExprPtr parse_not() {
    if (at(Tok::KwNot)) {
      Token op = next();
      ExprPtr e = parse_not();
      require_bool(e, op.loc, "'not'");
      return Expr::negate(e, op.loc);
    }
    return parse_cmp();
  }

  ExprPtr parse_cmp() {
    ExprPtr e = parse_add();
    if (at(Tok::Lt) || at(Tok::Le) || at(Tok::Eq)) {
      Token op = next();
      ExprPtr rhs = parse_add();
      require_int(e, op.loc, "comparison");
      require_int(rhs, op.loc, "comparison");
      BinOp b = op.kind == Tok::Lt ? BinOp::Lt : op.kind == Tok::Le ? BinOp::Le : BinOp::Eq;
      e = Expr::binary(b, e, rhs, op.loc);
    }
    return e;
  }

  ExprPtr parse_add() {
    ExprPtr e = parse_mul();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Token op = next();
      ExprPtr rhs = parse_mul();
      require_int(e, op.loc, "arithmetic");
      require_int(rhs, op.loc, "arithmetic");
      e = Expr::binary(op.kind == Tok::Plus ? BinOp::Add : BinOp::Sub, e, rhs, op.loc);
    }
    return e;
  }

  ExprPtr parse_mul() {
    ExprPtr e = parse_atom();
    while (at(Tok::Star)) {
      Token op = next();
      ExprPtr rhs = parse_atom();
      require_int(e, op.loc, "arithmetic");
      require_int(rhs, op.loc, "arithmetic");
      e = Expr::binary(BinOp::Mul, e, rhs, op.loc);
    }
    return e;
  }

  ExprPtr parse_atom() {
    Token t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return Expr::int_lit(t.number, t.loc);
      case Tok::KwTrue:
        next();
        return Expr::bool_lit(true, t.loc);
      case Tok::KwFalse:
        next();
        return Expr::bool_lit(false, t.loc);
      case Tok::Ident:
        next();
        if (!declared_.count(t.text)) throw UndeclaredVariable(t.text, t.loc);
        return Expr::variable(t.text, t.loc);
      case Tok::LParen: {
        next();
        ExprPtr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        throw SyntaxError("expected an expression, found '" + t.text + "'", t.loc);
    }
  }

  void require_bool(const ExprPtr& e, SourceLoc loc, const std::string& ctx) {
    if (type_of(*e) != Type::Bool) throw TypeError(ctx + " needs boolean operands", loc);
  }
  void require_int(const ExprPtr& e, SourceLoc loc, const std::string& ctx) {
    if (type_of(*e) != Type::Int) throw TypeError(ctx + " needs integer operands", loc);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::set<std::string> declared_;
};

}  // namespace

Program parse(const std::string& text) {
  return Parser(lex(text)).parse_program();
}

}  // namespace elgot::lang
