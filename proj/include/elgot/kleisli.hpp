#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "elgot/delay.hpp"
#include "elgot/errors.hpp"
#include "elgot/finset.hpp"
#include "elgot/loop.hpp"
#include "elgot/partial.hpp"
#include "elgot/report.hpp"

namespace elgot {

/// A finite Kleisli morphism X -> K Y, as a total table over element codes
/// 0..dom-1 with results in Partial over codes 0..cod-1.
struct Kleisli {
  int dom = 0;
  int cod = 0;
  std::vector<Partial<int>> table;

  const Partial<int>& at(int x) const { return table[static_cast<size_t>(x)]; }

  static Kleisli identity(int n) {
    Kleisli k{n, n, {}};
    for (int i = 0; i < n; ++i) k.table.push_back(eta(i));
    return k;
  }

  static Kleisli bottom_map(int dom, int cod) {
    Kleisli k{dom, cod, {}};
    for (int i = 0; i < dom; ++i) k.table.push_back(Partial<int>::bottom());
    return k;
  }

  friend bool operator==(const Kleisli& a, const Kleisli& b) {
    return a.dom == b.dom && a.cod == b.cod && a.table == b.table;
  }
};

/// Kleisli composition g . f (g after f).
inline Kleisli compose(const Kleisli& g, const Kleisli& f) {
  if (f.cod != g.dom) throw DomainMismatch("compose: codomain/domain mismatch");
  Kleisli r{f.dom, g.cod, {}};
  for (int x = 0; x < f.dom; ++x)
    r.table.push_back(bind(f.at(x), [&](int y) { return g.at(y); }));
  return r;
}

/// Domain of definiteness: x maps to x where f is defined, to bottom where
/// it is not. Computed as (K fst) . tau . <id, f>.
inline Kleisli dom_of(const Kleisli& f) {
  Kleisli r{f.dom, f.dom, {}};
  for (int x = 0; x < f.dom; ++x)
    r.table.push_back(map(strength(x, f.at(x)), [](const std::pair<int, int>& p) { return p.first; }));
  return r;
}

/// f restricted to the domain of g: f* . dom g.
inline Kleisli restrict(const Kleisli& f, const Kleisli& g) {
  if (f.dom != g.dom) throw DomainMismatch("restrict: shared domain required");
  return compose(f, dom_of(g));
}

/// The restriction order: f below g iff f = g restricted to dom f.
inline bool leq(const Kleisli& f, const Kleisli& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw DomainMismatch("leq: shared domain and codomain required");
  for (int x = 0; x < f.dom; ++x)
    if (!leq(f.at(x), g.at(x))) return false;
  return true;
}

/// Exact least-fixpoint iteration on the maybe backend: follows the loop,
/// returns the first exit payload, and bottom on a state revisit. A visited
/// hash set detects cycles (the oracle in finset uses a plain list instead).
template <class X>
Partial<X> iterate_partial(const LoopBody<Partial<X>>& loop, int s0) {
  std::unordered_set<int> visited;
  int s = s0;
  for (;;) {
    const auto& step = loop.at(s);
    if (step.is_left()) return step.left();
    if (!visited.insert(s).second) return Partial<X>::bottom();
    s = step.right();
  }
}

/// Fuel-indexed approximant, by primitive recursion on the counter: at fuel
/// zero the result is bottom, otherwise the counter decrements before the
/// body's transition is taken.
template <class X>
Partial<X> bounded_iterate(const LoopBody<Partial<X>>& loop, int s0, long n) {
  int s = s0;
  for (long i = 0; i < n; ++i) {
    const auto& step = loop.at(s);
    if (step.is_left()) return step.left();
    s = step.right();
  }
  loop.at(s);  // still validates the final state
  return Partial<X>::bottom();
}

/// Verifies the bounded chain against the exact iterate: each approximant is
/// below the iterate, the chain is monotone, and it stabilizes at |S|+1.
template <class X>
LawReport kleene_check(const LoopBody<Partial<X>>& loop, int s0) {
  LawReport report;
  report.suite = "kleene";
  const long top = loop.num_states + 1;
  Partial<X> full = iterate_partial(loop, s0);
  Partial<X> prev = Partial<X>::bottom();
  for (long n = 0; n <= top; ++n) {
    Partial<X> approx = bounded_iterate(loop, s0, n);
    report.tally(leq(approx, full), "bounded-below-full", "n=" + std::to_string(n));
    report.tally(leq(prev, approx), "chain-monotone", "n=" + std::to_string(n));
    prev = approx;
  }
  report.tally(prev == full, "stabilization", "n=" + std::to_string(top));
  return report;
}

/// Three-valued outcome of collapsing a delay computation: either an exact
/// partial value, or unknown with the fuel-advanced residual.
template <class X>
struct ThreeValuedResult {
  std::optional<Partial<X>> determined;
  std::optional<Delay<X>> residual;

  bool is_determined() const { return determined.has_value(); }
};

/// Fuel-bounded extensional collapse. Never returns a determined bottom:
/// fuel cannot witness divergence.
template <class X>
ThreeValuedResult<X> collapse_fuel(const Delay<X>& d, long fuel) {
  auto obs = run_for(d, fuel);
  ThreeValuedResult<X> r;
  if (obs.converged())
    r.determined = eta(*obs.value);
  else
    r.residual = obs.residual;
  return r;
}

/// The delay machine presented by a finite coalgebra table.
template <class X>
Delay<X> machine_to_delay(const LoopBody<X>& steps, int start) {
  return coit([steps](int s) { return steps.at(s); }, start);
}

/// A delay computation together with a finite-state certificate: the
/// underlying machine plus the finite coalgebra it unfolds from.
template <class X>
struct QuotientRep {
  FiniteMachine<X> certificate;

  Delay<X> underlying() const { return machine_to_delay(certificate.steps, certificate.start); }
};

/// Certificate-exact extensional collapse: value iff the machine converges
/// (within |certificate| steps, by pigeonhole), bottom iff a state repeats
/// without convergence.
template <class X>
Partial<X> collapse_finite(const QuotientRep<X>& q) {
  const auto& m = q.certificate;
  std::unordered_set<int> visited;
  int s = m.start;
  for (;;) {
    if (s < 0 || s >= m.steps.num_states)
      throw InvalidCertificate("reachable state " + std::to_string(s) +
                               " escapes certificate of size " + std::to_string(m.steps.num_states));
    const auto& step = m.steps.body[static_cast<size_t>(s)];
    if (step.is_left()) return Partial<X>::value(step.left());
    if (!visited.insert(s).second) return Partial<X>::bottom();
    s = step.right();
  }
}

// ---------------------------------------------------------------------------
// Exhaustive law suites over finite Kleisli tables.
// ---------------------------------------------------------------------------

namespace detail {

/// All Kleisli tables dom -> K cod.
inline std::vector<Kleisli> all_kleisli(int dom, int cod, long cap = work_budget()) {
  FunSpace space(dom, cod + 1, cap);  // code 0 = bottom, 1..cod = values
  std::vector<Kleisli> out;
  std::vector<int> t;
  while (space.next(t)) {
    Kleisli k{dom, cod, {}};
    for (int v : t) k.table.push_back(v == 0 ? Partial<int>::bottom() : eta(v - 1));
    out.push_back(std::move(k));
  }
  return out;
}

/// All loop bodies S -> A + S for the given carrier value list.
template <class A>
std::vector<LoopBody<A>> all_loop_bodies(const std::vector<A>& carrier, int num_states,
                                         long cap = work_budget()) {
  const int exits = static_cast<int>(carrier.size());
  FunSpace space(num_states, exits + num_states, cap);
  std::vector<LoopBody<A>> out;
  std::vector<int> t;
  while (space.next(t)) {
    LoopBody<A> body{num_states, {}};
    for (int code : t) {
      if (code < exits)
        body.body.push_back(Either<A, int>::left(carrier[static_cast<size_t>(code)]));
      else
        body.body.push_back(Either<A, int>::right(code - exits));
    }
    out.push_back(std::move(body));
  }
  return out;
}

inline std::string describe(const Kleisli& f) {
  std::string s = "[";
  for (int x = 0; x < f.dom; ++x) {
    if (x) s += ",";
    s += f.at(x).defined() ? std::to_string(f.at(x).get()) : "_";
  }
  return s + "]";
}

}  // namespace detail

/// RST1-RST4 plus the coproduct-domain and (K eta) f = Kf . dom f laws,
/// exhaustively over all tables at the given sizes.
inline LawReport check_restriction_axioms(int max_size, int max_size_rst13 = 0) {
  LawReport report;
  report.suite = "restriction";
  auto run_sizes = [&report](int nx, int ny, int nz, bool full) {
    auto fs = detail::all_kleisli(nx, ny);
    auto gs = detail::all_kleisli(nx, nz);
    auto hs = detail::all_kleisli(ny, nz);
    std::string sz = std::to_string(nx) + "," + std::to_string(ny) + "," + std::to_string(nz);
    for (const auto& f : fs) {
      // RST1: f* . dom f = f
      report.tally(compose(f, dom_of(f)) == f, "RST1", sz + " f=" + detail::describe(f));
      if (full) {
        // (K eta) f = Kf . dom f, with nested partial values.
        bool ok = true;
        Kleisli df = dom_of(f);
        for (int x = 0; x < nx && ok; ++x) {
          auto lhs = map(f.at(x), [](int y) { return eta(y); });
          auto rhs = bind(df.at(x), [&](int x2) { return eta(f.at(x2)); });
          ok = lhs == rhs;
        }
        report.tally(ok, "dom-eta", sz + " f=" + detail::describe(f));
      }
      for (const auto& g : gs) {
        std::string inst = sz + " f=" + detail::describe(f) + " g=" + detail::describe(g);
        // RST3: dom(g* . dom f) = (dom g)* . dom f
        report.tally(dom_of(compose(g, dom_of(f))) == compose(dom_of(g), dom_of(f)), "RST3", inst);
        if (full) {
          // RST2: dom f and dom g commute
          report.tally(compose(dom_of(f), dom_of(g)) == compose(dom_of(g), dom_of(f)), "RST2", inst);
        }
      }
      if (full) {
        for (const auto& h : hs) {
          std::string inst = sz + " f=" + detail::describe(f) + " h=" + detail::describe(h);
          // RST4: (dom h)* . f = f* . dom(h* . f)
          report.tally(compose(dom_of(h), f) == compose(f, dom_of(compose(h, f))), "RST4", inst);
        }
      }
    }
    if (full) {
      // dom [f,g] = [(K inl) dom f, (K inr) dom g] over the coproduct domain.
      auto fsz = detail::all_kleisli(nx, nz);
      auto gsz = detail::all_kleisli(ny, nz);
      for (const auto& f : fsz) {
        for (const auto& g : gsz) {
          Kleisli copair{nx + ny, nz, {}};
          for (int x = 0; x < nx; ++x) copair.table.push_back(f.at(x));
          for (int y = 0; y < ny; ++y) copair.table.push_back(g.at(y));
          Kleisli lhs = dom_of(copair);
          Kleisli rhs{nx + ny, nx + ny, {}};
          Kleisli df = dom_of(f);
          Kleisli dg = dom_of(g);
          for (int x = 0; x < nx; ++x) rhs.table.push_back(map(df.at(x), [](int v) { return v; }));
          for (int y = 0; y < ny; ++y) rhs.table.push_back(map(dg.at(y), [nx](int v) { return v + nx; }));
          report.tally(lhs == rhs, "dom-sum",
                       sz + " f=" + detail::describe(f) + " g=" + detail::describe(g));
        }
      }
    }
  };
  for (int nx = 0; nx <= max_size; ++nx)
    for (int ny = 0; ny <= max_size; ++ny)
      for (int nz = 0; nz <= max_size; ++nz) run_sizes(nx, ny, nz, true);
  for (int n = max_size + 1; n <= max_size_rst13; ++n) run_sizes(n, n, n, false);
  return report;
}

/// The equational lifting law tau . Delta = K<eta, id>, commutativity of the
/// two strength orders, copyability, and weak discardability.
inline LawReport check_equational_lifting(int max_size) {
  LawReport report;
  report.suite = "lifting";
  auto elems = [](int n) {
    std::vector<Partial<int>> v = {Partial<int>::bottom()};
    for (int i = 0; i < n; ++i) v.push_back(eta(i));
    return v;
  };
  for (int n = 0; n <= max_size; ++n) {
    for (const auto& t : elems(n)) {
      std::string inst = "n=" + std::to_string(n) + " t=" + (t.defined() ? std::to_string(t.get()) : "_");
      // Eq: tau(Delta t) = K<eta, id> t in K(KX x X).
      auto lhs = strength(t, t);
      auto rhs = map(t, [](int x) { return std::pair<Partial<int>, int>(eta(x), x); });
      report.tally(lhs == rhs, "lifting-eq", inst);
      // Copyable: hat-tau* tau Delta = K Delta.
      auto copy_lhs = elgot::bind(strength(t, t), [](const std::pair<Partial<int>, int>& p) {
        return costrength(p.first, p.second);
      });
      auto copy_rhs = map(t, [](int x) { return std::pair<int, int>(x, x); });
      report.tally(copy_lhs == copy_rhs, "copyable", inst);
    }
    // Commutativity on pairs drawn from K(n) x K(n).
    for (const auto& a : elems(n)) {
      for (const auto& b : elems(n)) {
        auto seq1 = elgot::bind(strength(a, b), [](const std::pair<Partial<int>, int>& p) {
          return costrength(p.first, p.second);
        });
        auto seq2 = elgot::bind(costrength(a, b), [](const std::pair<int, Partial<int>>& p) {
          return strength(p.first, p.second);
        });
        report.tally(seq1 == seq2, "commutativity", "n=" + std::to_string(n));
      }
    }
    // Weakly discardable: (K fst) hat-tau* tau <f, g> below f.
    for (const auto& f : detail::all_kleisli(n, n)) {
      for (const auto& g : detail::all_kleisli(n, n)) {
        Kleisli both{n, n, {}};
        for (int x = 0; x < n; ++x) {
          auto paired = elgot::bind(strength(f.at(x), g.at(x)), [](const std::pair<Partial<int>, int>& p) {
            return costrength(p.first, p.second);
          });
          both.table.push_back(map(paired, [](const std::pair<int, int>& p) { return p.first; }));
        }
        report.tally(leq(both, f), "weakly-discardable",
                     "n=" + std::to_string(n) + " f=" + detail::describe(f) + " g=" + detail::describe(g));
      }
    }
  }
  return report;
}

}  // namespace elgot
