#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "elgot/delay.hpp"
#include "elgot/either.hpp"
#include "elgot/errors.hpp"
#include "elgot/finset.hpp"
#include "elgot/kleisli.hpp"
#include "elgot/loop.hpp"
#include "elgot/partial.hpp"
#include "elgot/report.hpp"

namespace elgot {

/// A carrier equipped with an iteration operator for finite loop bodies.
/// The Fixpoint and Uniformity laws are checked by the suites below, never
/// assumed.
template <class A>
struct IterAlgebra {
  std::function<A(const LoopBody<A>&, int)> iterate;
};

/// The divergence constant: iteration of the one-state pure cycle.
template <class A>
A algebra_bottom(const IterAlgebra<A>& alg) {
  LoopBody<A> cycle{1, {Either<A, int>::right(0)}};
  return alg.iterate(cycle, 0);
}

/// The maybe-backend algebra on Partial values.
template <class X>
IterAlgebra<Partial<X>> partial_algebra() {
  IterAlgebra<Partial<X>> alg;
  alg.iterate = [](const LoopBody<Partial<X>>& loop, int s0) { return iterate_partial(loop, s0); };
  return alg;
}

/// A D-algebra candidate, taking finitely presented delay machines over the
/// carrier to carrier values.
template <class A>
using SearchAlgebra = std::function<A(const FiniteMachine<A>&)>;

/// Exact collapse on the maybe backend: run to the pigeonhole bound, then
/// declare divergence. Deliberately step-bounded rather than visited-set
/// based, so comparisons against the iterate are meaningful.
template <class X>
SearchAlgebra<Partial<X>> exact_collapse_algebra() {
  return [](const FiniteMachine<Partial<X>>& m) {
    int s = m.start;
    for (int i = 0; i <= m.steps.num_states; ++i) {
      const auto& step = m.steps.at(s);
      if (step.is_left()) return step.left();
      s = step.right();
    }
    return Partial<X>::bottom();
  };
}

template <class A>
FiniteMachine<A> machine_now(A value) {
  return FiniteMachine<A>{LoopBody<A>{1, {Either<A, int>::left(std::move(value))}}, 0};
}

/// Prepends one postponement state to a finite machine presentation.
template <class A>
FiniteMachine<A> machine_later(const FiniteMachine<A>& m) {
  LoopBody<A> steps{m.steps.num_states + 1, {}};
  steps.body.push_back(Either<A, int>::right(m.start + 1));
  for (const auto& e : m.steps.body)
    steps.body.push_back(e.is_left() ? e : Either<A, int>::right(e.right() + 1));
  return FiniteMachine<A>{std::move(steps), 0};
}

/// One direction of the search-algebra correspondence: the recovered
/// iteration feeds coit of the loop body to the algebra. The two
/// search-algebra equations are probed first on the supplied values and
/// machines.
template <class A>
IterAlgebra<A> search_algebra_to_iter(SearchAlgebra<A> a, const std::vector<A>& probe_values,
                                      const std::vector<FiniteMachine<A>>& probe_machines) {
  for (const A& v : probe_values)
    if (!(a(machine_now(v)) == v)) throw NotSearchAlgebra("a . now != id on a probe value");
  for (const auto& m : probe_machines)
    if (!(a(machine_later(m)) == a(m))) throw NotSearchAlgebra("a . later != a on a probe machine");
  IterAlgebra<A> alg;
  alg.iterate = [a](const LoopBody<A>& loop, int s0) {
    loop.at(s0);
    return a(FiniteMachine<A>{loop, s0});
  };
  return alg;
}

/// The inverse direction: the algebra map is iteration of the machine's own
/// coalgebra table (out, on finite presentations).
template <class A>
SearchAlgebra<A> iter_to_search_algebra(const IterAlgebra<A>& alg) {
  return [alg](const FiniteMachine<A>& m) { return alg.iterate(m.steps, m.start); };
}

/// Componentwise product algebra: iterate each projection of the body.
template <class A, class B>
IterAlgebra<std::pair<A, B>> product_algebra(IterAlgebra<A> alg_a, IterAlgebra<B> alg_b) {
  IterAlgebra<std::pair<A, B>> alg;
  alg.iterate = [alg_a, alg_b](const LoopBody<std::pair<A, B>>& loop, int s0) {
    LoopBody<A> left{loop.num_states, {}};
    LoopBody<B> right{loop.num_states, {}};
    for (const auto& e : loop.body) {
      if (e.is_left()) {
        left.body.push_back(Either<A, int>::left(e.left().first));
        right.body.push_back(Either<B, int>::left(e.left().second));
      } else {
        left.body.push_back(Either<A, int>::right(e.right()));
        right.body.push_back(Either<B, int>::right(e.right()));
      }
    }
    return std::pair<A, B>(alg_a.iterate(left, s0), alg_b.iterate(right, s0));
  };
  return alg;
}

/// Exponential algebra on tables X -> A (X finite of the given size):
/// pointwise iteration of the instantiated body.
template <class A>
IterAlgebra<std::vector<A>> exponential_algebra(IterAlgebra<A> alg_a, int exponent_size) {
  IterAlgebra<std::vector<A>> alg;
  alg.iterate = [alg_a, exponent_size](const LoopBody<std::vector<A>>& loop, int s0) {
    std::vector<A> result;
    result.reserve(static_cast<size_t>(exponent_size));
    for (int x = 0; x < exponent_size; ++x) {
      LoopBody<A> at_x{loop.num_states, {}};
      for (const auto& e : loop.body) {
        if (e.is_left())
          at_x.body.push_back(Either<A, int>::left(e.left()[static_cast<size_t>(x)]));
        else
          at_x.body.push_back(Either<A, int>::right(e.right()));
      }
      result.push_back(alg_a.iterate(at_x, s0));
    }
    return result;
  };
  return alg;
}

namespace detail {

template <class A>
std::string describe_body(const LoopBody<A>& f, const std::function<std::string(const A&)>& show) {
  std::string s = "[";
  for (int i = 0; i < f.num_states; ++i) {
    if (i) s += ",";
    const auto& e = f.at(i);
    s += e.is_left() ? show(e.left()) : ("s" + std::to_string(e.right()));
  }
  return s + "]";
}

}  // namespace detail

/// Exhaustive Fixpoint / Uniformity / Folding / Compositionality checks over
/// all loop bodies up to the given state-space size.
template <class A>
LawReport check_elgot_laws(const IterAlgebra<A>& alg, const std::vector<A>& carrier, int max_states,
                           std::function<std::string(const A&)> show) {
  LawReport report;
  report.suite = "elgot-algebra";
  using Step = Either<A, int>;

  for (int ns = 1; ns <= max_states; ++ns) {
    auto bodies = detail::all_loop_bodies(carrier, ns);
    for (const auto& f : bodies) {
      std::string fd = detail::describe_body(f, show);
      // Fixpoint: f-dagger = [id, f-dagger] . f at every start state.
      for (int s = 0; s < ns; ++s) {
        A lhs = alg.iterate(f, s);
        const auto& e = f.at(s);
        A rhs = e.is_left() ? e.left() : alg.iterate(f, e.right());
        report.tally(lhs == rhs, "fixpoint", "S=" + std::to_string(ns) + " f=" + fd + " s=" + std::to_string(s),
                     show(lhs), show(rhs));
      }
    }
  }

  // Uniformity: (id+h) f = g h  implies  f-dagger = g-dagger . h.
  for (int ns = 1; ns <= max_states; ++ns) {
    for (int ms = 1; ms <= max_states; ++ms) {
      auto fs = detail::all_loop_bodies(carrier, ns);
      auto gs = detail::all_loop_bodies(carrier, ms);
      FunSpace hspace(ns, ms);
      std::vector<int> h;
      hspace.reset();
      while (hspace.next(h)) {
        for (const auto& f : fs) {
          for (const auto& g : gs) {
            bool premise = true;
            for (int s = 0; s < ns && premise; ++s) {
              const auto& fe = f.at(s);
              const auto& ge = g.at(h[static_cast<size_t>(s)]);
              if (fe.is_left())
                premise = ge.is_left() && fe.left() == ge.left();
              else
                premise = ge.is_right() && h[static_cast<size_t>(fe.right())] == ge.right();
            }
            if (!premise) continue;  // vacuous instance
            bool ok = true;
            for (int s = 0; s < ns && ok; ++s)
              ok = alg.iterate(f, s) == alg.iterate(g, h[static_cast<size_t>(s)]);
            report.tally(ok, "uniformity",
                         "S=" + std::to_string(ns) + "->" + std::to_string(ms) + " f=" +
                             detail::describe_body(f, show) + " g=" + detail::describe_body(g, show));
          }
        }
      }
    }
  }

  // Folding: (f-dagger + h)-dagger = [(id+inl) f, inr h]-dagger on X+Y.
  // Compositionality: ((f-dagger + id) h)-dagger = g-dagger . inr with the
  // combined body g on X+Y.
  for (int nx = 1; nx <= max_states; ++nx) {
    for (int ny = 1; ny <= max_states; ++ny) {
      auto fs = detail::all_loop_bodies(carrier, nx);
      FunSpace hspace(ny, nx + ny);
      std::vector<int> h;
      for (const auto& f : fs) {
        std::string fd = detail::describe_body(f, show);
        hspace.reset();
        while (hspace.next(h)) {
          auto h_at = [&](int y) {  // h : Y -> X + Y
            int c = h[static_cast<size_t>(y)];
            return c < nx ? Either<int, int>::left(c) : Either<int, int>::right(c - nx);
          };
          {
            // Folding. States of both sides: 0..nx-1 ~ inl X, nx..nx+ny-1 ~ inr Y.
            LoopBody<A> lhs{nx + ny, {}};
            for (int x = 0; x < nx; ++x) lhs.body.push_back(Step::left(alg.iterate(f, x)));
            for (int y = 0; y < ny; ++y) {
              auto hy = h_at(y);
              lhs.body.push_back(Step::right(hy.is_left() ? hy.left() : nx + hy.right()));
            }
            LoopBody<A> rhs{nx + ny, {}};
            for (int x = 0; x < nx; ++x) {
              const auto& fe = f.at(x);
              rhs.body.push_back(fe.is_left() ? fe : Step::right(fe.right()));
            }
            for (int y = 0; y < ny; ++y) {
              auto hy = h_at(y);
              rhs.body.push_back(Step::right(hy.is_left() ? hy.left() : nx + hy.right()));
            }
            bool ok = true;
            for (int s = 0; s < nx + ny && ok; ++s) ok = alg.iterate(lhs, s) == alg.iterate(rhs, s);
            report.tally(ok, "folding", "X=" + std::to_string(nx) + " Y=" + std::to_string(ny) + " f=" + fd);
          }
          {
            // Compositionality, unguarded form.
            LoopBody<A> lhs{ny, {}};  // ((f-dagger + id) h) over Y
            for (int y = 0; y < ny; ++y) {
              auto hy = h_at(y);
              if (hy.is_left())
                lhs.body.push_back(Step::left(alg.iterate(f, hy.left())));
              else
                lhs.body.push_back(Step::right(hy.right()));
            }
            LoopBody<A> combined{nx + ny, {}};  // g over X+Y
            auto f_entry = [&](int x) {
              const auto& fe = f.at(x);
              return fe.is_left() ? fe : Step::right(fe.right());
            };
            for (int x = 0; x < nx; ++x) combined.body.push_back(f_entry(x));
            for (int y = 0; y < ny; ++y) {
              auto hy = h_at(y);
              combined.body.push_back(hy.is_left() ? f_entry(hy.left()) : Step::right(nx + hy.right()));
            }
            bool ok = true;
            for (int y = 0; y < ny && ok; ++y) ok = alg.iterate(lhs, y) == alg.iterate(combined, nx + y);
            report.tally(ok, "compositionality",
                         "X=" + std::to_string(nx) + " Y=" + std::to_string(ny) + " f=" + fd);
          }
        }
      }
    }
  }
  return report;
}

/// The loop-splitting law for products: iterating into A x B and
/// postcomposing h equals precomputing the A component and rerunning the
/// loop over the A x Z state space.
template <class X>
LawReport check_loop_splitting(int max_states) {
  LawReport report;
  report.suite = "loop-splitting";
  using A = Partial<int>;
  std::vector<A> carrier_a = {A::bottom(), eta(0)};
  std::vector<std::pair<A, A>> carrier_ab;
  for (const auto& a : carrier_a)
    for (const auto& b : carrier_a) carrier_ab.push_back({a, b});
  auto alg_a = partial_algebra<int>();
  auto alg_ab = product_algebra(alg_a, alg_a);
  auto alg_c = partial_algebra<int>();
  std::vector<A> carrier_c = {A::bottom(), eta(0), eta(1)};
  const int nab = static_cast<int>(carrier_ab.size());

  for (int nz = 1; nz <= max_states; ++nz) {
    auto fs = detail::all_loop_bodies(carrier_ab, nz);
    FunSpace hspace(nab, static_cast<int>(carrier_c.size()));
    std::vector<int> h;
    for (const auto& f : fs) {
      hspace.reset();
      while (hspace.next(h)) {
        auto h_at = [&](const std::pair<A, A>& v) {
          for (int i = 0; i < nab; ++i)
            if (carrier_ab[static_cast<size_t>(i)] == v)
              return carrier_c[static_cast<size_t>(h[static_cast<size_t>(i)])];
          throw UnknownState("value outside product carrier");
        };
        bool ok = true;
        for (int z0 = 0; z0 < nz && ok; ++z0) {
          // Left side: ((h + id) f)-dagger in C.
          LoopBody<Partial<int>> lhs{nz, {}};
          for (const auto& e : f.body)
            lhs.body.push_back(e.is_left() ? Either<A, int>::left(h_at(e.left()))
                                           : Either<A, int>::right(e.right()));
          A left = alg_c.iterate(lhs, z0);

          // Right side: precompute the A component, then loop over A x Z.
          LoopBody<A> fst_body{nz, {}};
          for (const auto& e : f.body)
            fst_body.body.push_back(e.is_left() ? Either<A, int>::left(e.left().first)
                                                : Either<A, int>::right(e.right()));
          A pre = alg_a.iterate(fst_body, z0);
          int pre_idx = -1;
          for (int i = 0; i < static_cast<int>(carrier_a.size()); ++i)
            if (carrier_a[static_cast<size_t>(i)] == pre) pre_idx = i;
          const int na = static_cast<int>(carrier_a.size());
          LoopBody<A> second{na * nz, {}};  // state (ia, z) coded ia * nz + z
          for (int ia = 0; ia < na; ++ia) {
            for (int z = 0; z < nz; ++z) {
              const auto& e = f.at(z);
              if (e.is_left())
                second.body.push_back(Either<A, int>::left(
                    h_at({carrier_a[static_cast<size_t>(ia)], e.left().second})));
              else
                second.body.push_back(Either<A, int>::right(ia * nz + e.right()));
            }
          }
          A right = alg_c.iterate(second, pre_idx * nz + z0);
          ok = left == right;
        }
        report.tally(ok, "loop-splitting", "Z=" + std::to_string(nz));
      }
    }
  }
  return report;
}

}  // namespace elgot
