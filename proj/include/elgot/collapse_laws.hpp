#pragma once

#include <string>
#include <vector>

#include "elgot/algebra.hpp"
#include "elgot/finset.hpp"
#include "elgot/kleisli.hpp"
#include "elgot/lang/eval.hpp"
#include "elgot/lang/generator.hpp"
#include "elgot/report.hpp"

namespace elgot {

namespace detail {

inline std::string describe_partial(const Partial<int>& p) {
  return p.defined() ? std::to_string(p.get()) : std::string("_");
}

/// Lifts a machine over raw values to one over Partial values (outputs
/// become eta outputs), the carrier exact_collapse_algebra acts on.
inline FiniteMachine<Partial<int>> lift_machine(const FiniteMachine<int>& m) {
  LoopBody<Partial<int>> body{m.steps.num_states, {}};
  for (const auto& e : m.steps.body)
    body.body.push_back(e.is_left() ? Either<Partial<int>, int>::left(eta(e.left()))
                                    : Either<Partial<int>, int>::right(e.right()));
  return FiniteMachine<Partial<int>>{std::move(body), m.start};
}

/// All total coalgebra tables over n states and va output values: codes
/// 0..va-1 are outputs, va.. are next states.
inline std::vector<LoopBody<int>> all_machines(int n, int va, long cap = work_budget()) {
  std::vector<LoopBody<int>> out;
  FunSpace space(n, va + n, cap);
  std::vector<int> t;
  while (space.next(t)) {
    LoopBody<int> body{n, {}};
    for (int v : t)
      body.body.push_back(v < va ? Either<int, int>::left(v) : Either<int, int>::right(v - va));
    out.push_back(std::move(body));
  }
  return out;
}

/// Sequencing on certificates: after machine m outputs a, continue as
/// f(a). Output resolution is immediate, matching bind on delay machines.
inline FiniteMachine<int> bind_certificate(const FiniteMachine<int>& m,
                                           const std::vector<FiniteMachine<int>>& f) {
  int n = m.steps.num_states;
  std::vector<int> offset;  // state offsets of each f(a) block
  int total = n;
  for (const auto& fm : f) {
    offset.push_back(total);
    total += fm.steps.num_states;
  }
  auto relocate = [&](const FiniteMachine<int>& block, int off,
                      const Either<int, int>& e) -> Either<int, int> {
    (void)block;
    return e.is_left() ? e : Either<int, int>::right(e.right() + off);
  };
  LoopBody<int> body{total, {}};
  for (const auto& e : m.steps.body) {
    if (e.is_left()) {
      const auto& fm = f[static_cast<size_t>(e.left())];
      int off = offset[static_cast<size_t>(e.left())];
      body.body.push_back(relocate(fm, off, fm.steps.at(fm.start)));
    } else {
      body.body.push_back(e);
    }
  }
  for (size_t a = 0; a < f.size(); ++a)
    for (const auto& e : f[a].steps.body)
      body.body.push_back(relocate(f[a], offset[a], e));
  return FiniteMachine<int>{std::move(body), m.start};
}

}  // namespace detail

/// Collapse coherence: the certificate-exact collapse agrees with the
/// fuel-at-pigeonhole collapse and with visited-set iteration on every
/// finite machine; it ignores postponement; and it is a monad morphism
/// (unit and Kleisli extension) on representative instances. The while
/// corpus cross-checks eval_extensional against collapse of the
/// intensional machine's certificate.
inline LawReport check_collapse_coherence(int max_states, int max_values, int num_programs) {
  LawReport report;
  report.suite = "collapse";

  for (int va = 0; va <= max_values; ++va) {
    for (int n = 1; n <= max_states; ++n) {
      for (const auto& body : detail::all_machines(n, va)) {
        for (int s = 0; s < n; ++s) {
          FiniteMachine<int> m{body, s};
          std::string inst = "n=" + std::to_string(n) + " va=" + std::to_string(va) +
                             " s=" + std::to_string(s);
          Partial<int> exact = collapse_finite(QuotientRep<int>{m});
          // Pigeonhole: n states either converge within n steps or never.
          auto fuel = collapse_fuel(machine_to_delay(body, s), n);
          Partial<int> via_fuel =
              fuel.is_determined() ? *fuel.determined : Partial<int>::bottom();
          report.tally(exact == via_fuel, "finite-vs-fuel", inst,
                       detail::describe_partial(exact), detail::describe_partial(via_fuel));
          Partial<int> via_search = exact_collapse_algebra<int>()(
              detail::lift_machine(m));
          report.tally(exact == via_search, "finite-vs-search", inst,
                       detail::describe_partial(exact), detail::describe_partial(via_search));
          Partial<int> shifted = collapse_finite(QuotientRep<int>{machine_later(m)});
          report.tally(exact == shifted, "later-coherence", inst);
        }
      }
    }
  }

  // Monad morphism, unit: collapsing "now x" is eta x.
  for (int x = 0; x < 3; ++x) {
    Partial<int> r = collapse_finite(QuotientRep<int>{machine_now(x)});
    report.tally(r == eta(x), "morphism-unit", "x=" + std::to_string(x));
  }

  // Monad morphism, Kleisli extension: collapse(bind cert) =
  // bind(collapse m, collapse . f), with f drawn from representative
  // continuation machines for each output value in {0, 1}.
  std::vector<FiniteMachine<int>> continuations = {
      machine_now(0),
      machine_now(1),
      machine_later(machine_now(0)),
      FiniteMachine<int>{LoopBody<int>{1, {Either<int, int>::right(0)}}, 0},  // diverges
      FiniteMachine<int>{LoopBody<int>{2, {Either<int, int>::right(1), Either<int, int>::left(1)}}, 0},
  };
  for (int n = 1; n <= max_states; ++n) {
    for (const auto& body : detail::all_machines(n, 2)) {
      for (size_t c1 = 0; c1 < continuations.size(); ++c1) {
        for (size_t c2 = 0; c2 < continuations.size(); ++c2) {
          std::vector<FiniteMachine<int>> f = {continuations[c1], continuations[c2]};
          FiniteMachine<int> m{body, 0};
          Partial<int> lhs = collapse_finite(QuotientRep<int>{detail::bind_certificate(m, f)});
          Partial<int> rhs = bind(collapse_finite(QuotientRep<int>{m}), [&](int a) {
            return collapse_finite(QuotientRep<int>{f[static_cast<size_t>(a)]});
          });
          report.tally(lhs == rhs, "morphism-bind",
                       "n=" + std::to_string(n) + " c=" + std::to_string(c1) + "," +
                           std::to_string(c2),
                       detail::describe_partial(lhs), detail::describe_partial(rhs));
        }
      }
    }
  }

  // While-language corpus: exact semantics = collapse of the intensional
  // machine's reachable-state certificate.
  for (int seed = 0; seed < num_programs; ++seed) {
    lang::Program p = lang::generate_program(static_cast<std::uint32_t>(seed));
    lang::Store s0 = lang::initial_store(p);
    Partial<lang::Store> ext = lang::eval_extensional(p, s0);
    Partial<lang::Store> col = collapse_finite(lang::machine_certificate(p, s0));
    report.tally(ext == col, "program-agreement", "seed=" + std::to_string(seed));
  }
  return report;
}

}  // namespace elgot
