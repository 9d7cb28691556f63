#include "elgot/lang/eval.hpp"

#include <set>
#include <utility>
#include <vector>

namespace elgot::lang {

namespace {

// Statement compilation threads the "next node" continuation; Seq emits no
// node of its own, so sequencing costs no machine steps.
int compile_stmt(const Stmt& s, int next, ControlGraph& g) {
  switch (s.kind) {
    case Stmt::Kind::Skip:
      g.nodes.push_back(ControlNode{ControlNode::Kind::Skip, "", nullptr, next, 0, s.loc});
      return static_cast<int>(g.nodes.size()) - 1;
    case Stmt::Kind::Assign:
      g.nodes.push_back(ControlNode{ControlNode::Kind::Assign, s.var, s.expr, next, 0, s.loc});
      return static_cast<int>(g.nodes.size()) - 1;
    case Stmt::Kind::Seq: {
      int eb = compile_stmt(*s.b, next, g);
      return compile_stmt(*s.a, eb, g);
    }
    case Stmt::Kind::If: {
      int et = compile_stmt(*s.a, next, g);
      int ee = compile_stmt(*s.b, next, g);
      g.nodes.push_back(ControlNode{ControlNode::Kind::Guard, "", s.expr, et, ee, s.expr->loc});
      return static_cast<int>(g.nodes.size()) - 1;
    }
    case Stmt::Kind::While: {
      g.nodes.push_back(ControlNode{ControlNode::Kind::Guard, "", s.expr, 0, next, s.expr->loc});
      int guard = static_cast<int>(g.nodes.size()) - 1;
      int body = compile_stmt(*s.a, guard, g);
      g.nodes[static_cast<size_t>(guard)].next = body;
      return guard;
    }
  }
  return 0;
}

struct MState {
  int pc;
  Store store;
};

long mask_value(long v, long mask) {
  return static_cast<long>(static_cast<unsigned long long>(v) &
                           static_cast<unsigned long long>(mask));
}

// One machine step at a non-Done node: execute it and return the next state.
MState exec_node(const ControlGraph& g, const MState& m) {
  const ControlNode& n = g.nodes[static_cast<size_t>(m.pc)];
  switch (n.kind) {
    case ControlNode::Kind::Skip:
      return MState{n.next, m.store};
    case ControlNode::Kind::Assign: {
      Store s = m.store;
      s[n.var] = mask_value(eval_expr(*n.expr, m.store), g.masks.at(n.var));
      return MState{n.next, std::move(s)};
    }
    case ControlNode::Kind::Guard:
      return MState{eval_expr(*n.expr, m.store) != 0 ? n.next : n.next_false, m.store};
    case ControlNode::Kind::Done:
      return m;  // unreachable; Done is handled by callers
  }
  return m;
}

bool is_done(const ControlGraph& g, int pc) {
  return g.nodes[static_cast<size_t>(pc)].kind == ControlNode::Kind::Done;
}

std::vector<long> store_key(const Store& s) {
  std::vector<long> key;
  key.reserve(s.size());
  for (const auto& [k, v] : s) key.push_back(v);
  return key;
}

}  // namespace

ControlGraph compile(const Program& p) {
  ControlGraph g;
  g.nodes.push_back(ControlNode{});  // node 0: Done
  for (const auto& d : p.decls) g.masks[d.name] = (1L << d.width) - 1;
  g.entry = p.body ? compile_stmt(*p.body, 0, g) : 0;
  return g;
}

long eval_expr(const Expr& e, const Store& s) {
  switch (e.kind) {
    case Expr::Kind::IntLit:
    case Expr::Kind::BoolLit: return e.value;
    case Expr::Kind::Var: return s.at(e.var);
    case Expr::Kind::Not: return eval_expr(*e.lhs, s) == 0 ? 1 : 0;
    case Expr::Kind::Binary: {
      long a = eval_expr(*e.lhs, s);
      long b = eval_expr(*e.rhs, s);
      switch (e.op) {
        case BinOp::Add: return a + b;
        case BinOp::Sub: return a - b;
        case BinOp::Mul: return a * b;
        case BinOp::Lt: return a < b ? 1 : 0;
        case BinOp::Le: return a <= b ? 1 : 0;
        case BinOp::Eq: return a == b ? 1 : 0;
        case BinOp::And: return (a != 0 && b != 0) ? 1 : 0;
        case BinOp::Or: return (a != 0 || b != 0) ? 1 : 0;
      }
    }
  }
  return 0;
}

Delay<Store> eval_intensional(const Program& p, const Store& s0) {
  auto g = std::make_shared<const ControlGraph>(compile(p));
  return coit(
      [g](const MState& m) {
        if (is_done(*g, m.pc)) return Either<Store, MState>::left(m.store);
        return Either<Store, MState>::right(exec_node(*g, m));
      },
      MState{g->entry, s0});
}

Partial<Store> eval_extensional(const Program& p, const Store& s0) {
  ControlGraph g = compile(p);
  std::set<std::pair<int, std::vector<long>>> visited;
  MState m{g.entry, s0};
  for (;;) {
    if (is_done(g, m.pc)) return Partial<Store>::value(m.store);
    if (!visited.insert({m.pc, store_key(m.store)}).second) return Partial<Store>::bottom();
    m = exec_node(g, m);
  }
}

Trace trace(const Program& p, const Store& s0, long fuel, bool detect_cycles) {
  ControlGraph g = compile(p);
  std::set<std::pair<int, std::vector<long>>> visited;
  Trace t;
  MState m{g.entry, s0};
  for (long k = 0; k < fuel; ++k) {
    if (is_done(g, m.pc)) {
      t.status = TraceStatus::Converged;
      t.final_store = m.store;
      return t;
    }
    if (detect_cycles && !visited.insert({m.pc, store_key(m.store)}).second) {
      t.status = TraceStatus::Diverged;
      return t;
    }
    SourceLoc loc = g.nodes[static_cast<size_t>(m.pc)].loc;
    m = exec_node(g, m);
    t.entries.push_back(TraceEntry{k, loc, m.store});
  }
  if (is_done(g, m.pc)) {
    t.status = TraceStatus::Converged;
    t.final_store = m.store;
  } else if (detect_cycles && visited.count({m.pc, store_key(m.store)})) {
    t.status = TraceStatus::Diverged;
  } else {
    t.status = TraceStatus::FuelExhausted;
  }
  return t;
}

QuotientRep<Store> machine_certificate(const Program& p, const Store& s0) {
  ControlGraph g = compile(p);
  // The machine is deterministic, so the reachable set is the trajectory up
  // to Done or the first revisit; index states in visit order.
  std::map<std::pair<int, std::vector<long>>, int> index;
  std::vector<MState> states;
  MState m{g.entry, s0};
  for (;;) {
    auto key = std::make_pair(m.pc, store_key(m.store));
    if (index.count(key)) break;
    index[key] = static_cast<int>(states.size());
    states.push_back(m);
    if (is_done(g, m.pc)) break;
    m = exec_node(g, m);
  }
  LoopBody<Store> body{static_cast<int>(states.size()), {}};
  for (const auto& st : states) {
    if (is_done(g, st.pc)) {
      body.body.push_back(Either<Store, int>::left(st.store));
    } else {
      MState succ = exec_node(g, st);
      body.body.push_back(
          Either<Store, int>::right(index.at({succ.pc, store_key(succ.store)})));
    }
  }
  return QuotientRep<Store>{FiniteMachine<Store>{std::move(body), 0}};
}

namespace {

StmtPtr unroll_stmt(const StmtPtr& s) {
  switch (s->kind) {
    case Stmt::Kind::Skip:
    case Stmt::Kind::Assign: return s;
    case Stmt::Kind::Seq: return Stmt::seq(unroll_stmt(s->a), unroll_stmt(s->b), s->loc);
    case Stmt::Kind::If:
      return Stmt::if_(s->expr, unroll_stmt(s->a), unroll_stmt(s->b), s->loc);
    case Stmt::Kind::While: {
      StmtPtr body = unroll_stmt(s->a);
      StmtPtr residual = Stmt::while_(s->expr, body, s->loc);
      return Stmt::if_(s->expr, Stmt::seq(body, residual, s->loc), Stmt::skip(s->loc), s->loc);
    }
  }
  return s;
}

}  // namespace

Program unroll_once(const Program& p) {
  Program out;
  out.decls = p.decls;
  out.body = p.body ? unroll_stmt(p.body) : nullptr;
  return out;
}

}  // namespace elgot::lang
