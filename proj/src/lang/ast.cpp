#include "elgot/lang/ast.hpp"

#include <sstream>

namespace elgot::lang {

Store initial_store(const Program& p) {
  Store s;
  for (const auto& d : p.decls) s[d.name] = 0;
  return s;
}

namespace {

const char* op_text(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Eq: return "=";
    case BinOp::And: return "and";
    case BinOp::Or: return "or";
  }
  return "?";
}

// Fully parenthesized output: trivially stable under re-parsing.
void print_expr(std::ostream& os, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::IntLit: os << e.value; break;
    case Expr::Kind::BoolLit: os << (e.value ? "true" : "false"); break;
    case Expr::Kind::Var: os << e.var; break;
    case Expr::Kind::Not:
      os << "not ";
      print_expr(os, *e.lhs);
      break;
    case Expr::Kind::Binary:
      os << "(";
      print_expr(os, *e.lhs);
      os << " " << op_text(e.op) << " ";
      print_expr(os, *e.rhs);
      os << ")";
      break;
  }
}

void print_stmt(std::ostream& os, const Stmt& s) {
  switch (s.kind) {
    case Stmt::Kind::Skip: os << "skip"; break;
    case Stmt::Kind::Assign:
      os << s.var << " := ";
      print_expr(os, *s.expr);
      break;
    case Stmt::Kind::Seq:
      print_stmt(os, *s.a);
      os << "; ";
      print_stmt(os, *s.b);
      break;
    case Stmt::Kind::If:
      os << "if ";
      print_expr(os, *s.expr);
      os << " then ";
      print_stmt(os, *s.a);
      os << " else ";
      print_stmt(os, *s.b);
      os << " fi";
      break;
    case Stmt::Kind::While:
      os << "while ";
      print_expr(os, *s.expr);
      os << " do ";
      print_stmt(os, *s.a);
      os << " od";
      break;
  }
}

}  // namespace

std::string pretty(const Expr& e) {
  std::ostringstream os;
  print_expr(os, e);
  return os.str();
}

std::string pretty(const Stmt& s) {
  std::ostringstream os;
  print_stmt(os, s);
  return os.str();
}

std::string pretty(const Program& p) {
  std::ostringstream os;
  for (const auto& d : p.decls) os << "var " << d.name << ":" << d.width << "; ";
  if (p.body) print_stmt(os, *p.body);
  std::string out = os.str();
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string pretty(const Store& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : s) {
    if (!first) os << ", ";
    os << k << " = " << v;
    first = false;
  }
  return os.str();
}

}  // namespace elgot::lang
