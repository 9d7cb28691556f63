#pragma once

#include <string>
#include <vector>

#include "elgot/delay.hpp"
#include "elgot/kleisli.hpp"
#include "elgot/lang/ast.hpp"
#include "elgot/partial.hpp"

namespace elgot::lang {

/// Flat control graph: machine state is (node index, store). Node 0 is the
/// terminal Done node. The step convention — one machine step per executed
/// assignment, skip, or guard evaluation; sequencing and Done are free — is
/// frozen by golden tests.
struct ControlNode {
  enum class Kind { Done, Skip, Assign, Guard };
  Kind kind = Kind::Done;
  std::string var;     // Assign target
  ExprPtr expr;        // Assign rhs / Guard condition
  int next = 0;        // successor (Guard: taken when true)
  int next_false = 0;  // Guard: successor when false
  SourceLoc loc;
};

struct ControlGraph {
  std::vector<ControlNode> nodes;  // nodes[0] is Done
  int entry = 0;
  std::map<std::string, long> masks;  // per-variable 2^width - 1
};

ControlGraph compile(const Program& p);

/// Total expression evaluation over int64 intermediates; booleans are 0/1.
/// Values are reduced modulo 2^width only on assignment.
long eval_expr(const Expr& e, const Store& s);

/// Intensional semantics: the coinductively unfolded step machine. Loops are
/// the iteration of the guard-plus-body control graph; step counts follow the
/// convention above.
Delay<Store> eval_intensional(const Program& p, const Store& s0);

/// Extensional semantics: exact value-or-divergence, decided by cycle
/// detection over the finite (node, store) space. Agrees with
/// collapse_finite of eval_intensional.
Partial<Store> eval_extensional(const Program& p, const Store& s0);

/// First min(fuel, total) machine steps with store snapshots. Reports
/// Diverged (instead of FuelExhausted) only when detect_cycles is set and a
/// state repeats within the fuel window.
Trace trace(const Program& p, const Store& s0, long fuel, bool detect_cycles = false);

/// Enumerates the (node, store) states reachable from s0 and packages the
/// run as a finite machine over integer state codes, suitable for
/// certificate-exact collapse.
QuotientRep<Store> machine_certificate(const Program& p, const Store& s0);

/// Fixpoint-law transform: every while(e, b) becomes
/// if e then (b; while(e, b)) else skip fi, recursively. Extensionally
/// equivalent; intensionally each introduced `if` costs one extra skip step
/// each time its guard evaluates false.
Program unroll_once(const Program& p);

}  // namespace elgot::lang
