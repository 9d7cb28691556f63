#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace elgot::lang {

struct SourceLoc {
  int line = 0;
  int col = 0;
};

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& what, SourceLoc loc)
      : std::runtime_error("syntax error at " + std::to_string(loc.line) + ":" +
                           std::to_string(loc.col) + ": " + what),
        loc(loc) {}
  SourceLoc loc;
};

struct UndeclaredVariable : std::runtime_error {
  UndeclaredVariable(const std::string& name, SourceLoc loc)
      : std::runtime_error("undeclared variable '" + name + "' at " + std::to_string(loc.line) +
                           ":" + std::to_string(loc.col)),
        name(name),
        loc(loc) {}
  std::string name;
  SourceLoc loc;
};

struct TypeError : std::runtime_error {
  TypeError(const std::string& what, SourceLoc loc)
      : std::runtime_error("type error at " + std::to_string(loc.line) + ":" +
                           std::to_string(loc.col) + ": " + what),
        loc(loc) {}
  SourceLoc loc;
};

enum class BinOp { Add, Sub, Mul, Lt, Le, Eq, And, Or };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { IntLit, BoolLit, Var, Not, Binary };
  Kind kind;
  long value = 0;        // IntLit payload; BoolLit uses 0/1
  std::string var;       // Var payload
  BinOp op = BinOp::Add; // Binary payload
  ExprPtr lhs, rhs;      // Binary children; Not uses lhs only
  SourceLoc loc;

  static ExprPtr int_lit(long v, SourceLoc l) {
    return std::make_shared<Expr>(Expr{Kind::IntLit, v, "", BinOp::Add, nullptr, nullptr, l});
  }
  static ExprPtr bool_lit(bool v, SourceLoc l) {
    return std::make_shared<Expr>(Expr{Kind::BoolLit, v ? 1 : 0, "", BinOp::Add, nullptr, nullptr, l});
  }
  static ExprPtr variable(std::string name, SourceLoc l) {
    return std::make_shared<Expr>(Expr{Kind::Var, 0, std::move(name), BinOp::Add, nullptr, nullptr, l});
  }
  static ExprPtr negate(ExprPtr e, SourceLoc l) {
    return std::make_shared<Expr>(Expr{Kind::Not, 0, "", BinOp::Add, std::move(e), nullptr, l});
  }
  static ExprPtr binary(BinOp op, ExprPtr a, ExprPtr b, SourceLoc l) {
    return std::make_shared<Expr>(Expr{Kind::Binary, 0, "", op, std::move(a), std::move(b), l});
  }
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
  enum class Kind { Skip, Assign, Seq, If, While };
  Kind kind;
  std::string var;  // Assign target
  ExprPtr expr;     // Assign rhs / If / While condition
  StmtPtr a, b;     // Seq halves; If branches; While body in a
  SourceLoc loc;

  static StmtPtr skip(SourceLoc l) {
    return std::make_shared<Stmt>(Stmt{Kind::Skip, "", nullptr, nullptr, nullptr, l});
  }
  static StmtPtr assign(std::string v, ExprPtr e, SourceLoc l) {
    return std::make_shared<Stmt>(Stmt{Kind::Assign, std::move(v), std::move(e), nullptr, nullptr, l});
  }
  static StmtPtr seq(StmtPtr x, StmtPtr y, SourceLoc l) {
    return std::make_shared<Stmt>(Stmt{Kind::Seq, "", nullptr, std::move(x), std::move(y), l});
  }
  static StmtPtr if_(ExprPtr c, StmtPtr t, StmtPtr e, SourceLoc l) {
    return std::make_shared<Stmt>(Stmt{Kind::If, "", std::move(c), std::move(t), std::move(e), l});
  }
  static StmtPtr while_(ExprPtr c, StmtPtr body, SourceLoc l) {
    return std::make_shared<Stmt>(Stmt{Kind::While, "", std::move(c), std::move(body), nullptr, l});
  }
};

struct Decl {
  std::string name;
  int width;  // bit-width k; values live in [0, 2^k)
  SourceLoc loc;
};

struct Program {
  std::vector<Decl> decls;
  StmtPtr body;  // null for the empty program
};

/// Machine states map declared variables to values modulo 2^width. An ordered
/// map keeps printing and state hashing deterministic.
using Store = std::map<std::string, long>;

Store initial_store(const Program& p);

enum class TraceStatus { Converged, Diverged, FuelExhausted };

struct TraceEntry {
  long step;       // strictly increasing from 0
  SourceLoc loc;   // location of the statement or guard executed at this step
  Store store;     // snapshot after the step
};

struct Trace {
  std::vector<TraceEntry> entries;
  TraceStatus status = TraceStatus::FuelExhausted;
  std::optional<Store> final_store;  // engaged iff status == Converged
};

std::string pretty(const Expr& e);
std::string pretty(const Stmt& s);
std::string pretty(const Program& p);
std::string pretty(const Store& s);

}  // namespace elgot::lang
