#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "elgot/finset.hpp"
#include "elgot/kleisli.hpp"
#include "elgot/loop.hpp"
#include "elgot/partial.hpp"
#include "elgot/report.hpp"

namespace elgot {

/// A finite body X -> K(Y + X) for the full iteration operator: a total
/// table over states 0..num_states-1, whose defined results code either an
/// output (0..num_outputs-1) or a continuation state.
struct ElgotBody {
  int num_states = 0;
  int num_outputs = 0;
  std::vector<Partial<int>> body;  // Value v: v < num_outputs ? exit v : state v - num_outputs

  const Partial<int>& at(int x) const {
    if (x < 0 || x >= num_states)
      throw UnknownState("elgot state " + std::to_string(x) + " outside declared set of size " +
                         std::to_string(num_states));
    return body[static_cast<size_t>(x)];
  }
};

/// Least fixpoint of g |-> [eta, g]* . f, computed exactly by
/// path-following with cycle detection. Bottom on a body bottom or a state
/// revisit.
inline Partial<int> elgot_iterate(const ElgotBody& f, int x0) {
  std::unordered_set<int> visited;
  int x = x0;
  for (;;) {
    const auto& step = f.at(x);
    if (!step.defined()) return Partial<int>::bottom();
    if (step.get() < f.num_outputs) return eta(step.get());
    if (!visited.insert(x).second) return Partial<int>::bottom();
    x = step.get() - f.num_outputs;
  }
}

/// Fuel-indexed approximant of the full operator, instantiating the bounded
/// iteration recursion in the Kleisli category.
inline Partial<int> bounded_elgot(const ElgotBody& f, int x0, long n) {
  int x = x0;
  for (long i = 0; i < n; ++i) {
    const auto& step = f.at(x);
    if (!step.defined()) return Partial<int>::bottom();
    if (step.get() < f.num_outputs) return eta(step.get());
    x = step.get() - f.num_outputs;
  }
  f.at(x);
  return Partial<int>::bottom();
}

namespace detail {

inline std::vector<ElgotBody> all_elgot_bodies(int num_states, int num_outputs,
                                               long cap = work_budget()) {
  FunSpace space(num_states, 1 + num_outputs + num_states, cap);
  std::vector<ElgotBody> out;
  std::vector<int> t;
  while (space.next(t)) {
    ElgotBody f{num_states, num_outputs, {}};
    for (int code : t)
      f.body.push_back(code == 0 ? Partial<int>::bottom() : eta(code - 1));
    out.push_back(std::move(f));
  }
  return out;
}

inline std::string describe(const ElgotBody& f) {
  std::string s = "[";
  for (int x = 0; x < f.num_states; ++x) {
    if (x) s += ",";
    const auto& e = f.at(x);
    if (!e.defined())
      s += "_";
    else if (e.get() < f.num_outputs)
      s += "y" + std::to_string(e.get());
    else
      s += "x" + std::to_string(e.get() - f.num_outputs);
  }
  return s + "]";
}

}  // namespace detail

/// Fixpoint, Naturality, Codiagonal, Uniformity and Strength, exhaustively
/// at the given sizes; Fixpoint and Uniformity additionally up to
/// `extra_size`.
inline LawReport check_elgot_monad_axioms(int max_size, int extra_size = 0) {
  LawReport report;
  report.suite = "elgot-monad";

  auto check_fixpoint = [&report](int nx, int ny) {
    for (const auto& f : detail::all_elgot_bodies(nx, ny)) {
      for (int x = 0; x < nx; ++x) {
        Partial<int> lhs = elgot_iterate(f, x);
        Partial<int> rhs = bind(f.at(x), [&](int v) {
          return v < ny ? eta(v) : elgot_iterate(f, v - ny);
        });
        report.tally(lhs == rhs, "fixpoint",
                     "X=" + std::to_string(nx) + " Y=" + std::to_string(ny) + " f=" + detail::describe(f));
      }
    }
  };

  auto check_uniformity = [&report](int nx, int ny, int nz) {
    auto fs = detail::all_elgot_bodies(nx, ny);
    auto gs = detail::all_elgot_bodies(nz, ny);
    FunSpace hspace(nz, nx);
    std::vector<int> h;
    for (const auto& f : fs) {
      for (const auto& g : gs) {
        hspace.reset();
        while (hspace.next(h)) {
          bool premise = true;
          for (int z = 0; z < nz && premise; ++z) {
            // f(h z) must equal K(id + h)(g z).
            Partial<int> mapped = map(g.at(z), [&](int v) {
              return v < ny ? v : ny + h[static_cast<size_t>(v - ny)];
            });
            premise = f.at(h[static_cast<size_t>(z)]) == mapped;
          }
          if (!premise) continue;
          bool ok = true;
          for (int z = 0; z < nz && ok; ++z)
            ok = elgot_iterate(f, h[static_cast<size_t>(z)]) == elgot_iterate(g, z);
          report.tally(ok, "uniformity",
                       "X=" + std::to_string(nx) + " Z=" + std::to_string(nz) + " f=" +
                           detail::describe(f) + " g=" + detail::describe(g));
        }
      }
    }
  };

  for (int nx = 1; nx <= max_size; ++nx)
    for (int ny = 0; ny <= max_size; ++ny) check_fixpoint(nx, ny);
  for (int n = max_size + 1; n <= extra_size; ++n) check_fixpoint(n, n);

  // Naturality: g* . f-ddagger = ([(K inl) g, eta inr]* f)-ddagger.
  for (int nx = 1; nx <= max_size; ++nx) {
    for (int ny = 0; ny <= max_size; ++ny) {
      for (int nz = 0; nz <= max_size; ++nz) {
        auto gs = detail::all_kleisli(ny, nz);
        for (const auto& f : detail::all_elgot_bodies(nx, ny)) {
          for (const auto& g : gs) {
            ElgotBody rebased{nx, nz, {}};
            for (int x = 0; x < nx; ++x) {
              rebased.body.push_back(bind(f.at(x), [&](int v) {
                if (v < ny) return g.at(v);
                return eta(nz + (v - ny));
              }));
            }
            bool ok = true;
            for (int x = 0; x < nx && ok; ++x) {
              Partial<int> lhs = bind(elgot_iterate(f, x), [&](int y) { return g.at(y); });
              ok = lhs == elgot_iterate(rebased, x);
            }
            report.tally(ok, "naturality",
                         "X=" + std::to_string(nx) + " Y=" + std::to_string(ny) + " Z=" +
                             std::to_string(nz) + " f=" + detail::describe(f));
          }
        }
      }
    }
  }

  // Codiagonal: (K[id, inr] f)-ddagger = f-ddagger-ddagger for
  // f : X -> K((Y + X) + X).
  for (int nx = 1; nx <= max_size; ++nx) {
    for (int ny = 0; ny <= max_size; ++ny) {
      // Sum coding: 0..ny-1 outputs, ny..ny+nx-1 inner states, then outer states.
      for (const auto& raw : detail::all_elgot_bodies(nx, ny + nx)) {
        // raw's "outputs" of size ny+nx are the inner sum Y+X; reinterpret the
        // continuation slot as the outer X summand.
        ElgotBody merged{nx, ny, {}};  // K[id, inr] f
        for (int x = 0; x < nx; ++x) {
          merged.body.push_back(map(raw.at(x), [&](int v) {
            // Exits and inner states keep their codes; the outer X summand is
            // folded onto the inner one.
            return v < ny + nx ? v : v - nx;
          }));
        }
        // Inner iteration first: treat Y+X (ny+nx codes) as outputs.
        ElgotBody outer{nx, ny, {}};
        for (int x = 0; x < nx; ++x) {
          Partial<int> inner = elgot_iterate(raw, x);
          outer.body.push_back(inner);  // codes already in Y + X layout
        }
        bool ok = true;
        for (int x = 0; x < nx && ok; ++x)
          ok = elgot_iterate(merged, x) == elgot_iterate(outer, x);
        report.tally(ok, "codiagonal",
                     "X=" + std::to_string(nx) + " Y=" + std::to_string(ny) + " f=" + detail::describe(raw));
      }
    }
  }

  for (int nx = 1; nx <= max_size; ++nx)
    for (int ny = 0; ny <= max_size; ++ny)
      for (int nz = 1; nz <= max_size; ++nz) check_uniformity(nx, ny, nz);
  for (int n = max_size + 1; n <= extra_size; ++n) check_uniformity(n, n, n);

  // Strength: tau (id x f-ddagger) = ((K dstr) tau (id x f))-ddagger with a
  // finite context W; pairs are coded w * k + v.
  for (int nw = 1; nw <= max_size; ++nw) {
    for (int nx = 1; nx <= max_size; ++nx) {
      for (int ny = 0; ny <= max_size; ++ny) {
        for (const auto& f : detail::all_elgot_bodies(nx, ny)) {
          ElgotBody lifted{nw * nx, nw * ny, {}};
          for (int w = 0; w < nw; ++w) {
            for (int x = 0; x < nx; ++x) {
              lifted.body.push_back(map(f.at(x), [&](int v) {
                return v < ny ? w * ny + v : nw * ny + w * nx + (v - ny);
              }));
            }
          }
          bool ok = true;
          for (int w = 0; w < nw && ok; ++w) {
            for (int x = 0; x < nx && ok; ++x) {
              Partial<int> lhs = map(elgot_iterate(f, x), [&](int y) { return w * ny + y; });
              ok = lhs == elgot_iterate(lifted, w * nx + x);
            }
          }
          report.tally(ok, "strength",
                       "W=" + std::to_string(nw) + " X=" + std::to_string(nx) + " f=" + detail::describe(f));
        }
      }
    }
  }

  return report;
}

/// For operators with Fixpoint + Uniformity: f-ddagger equals iterating f
/// restricted to the domain of its own iterate.
inline LawReport check_iterate_dom_law(int max_size) {
  LawReport report;
  report.suite = "iterate-dom";
  for (int nx = 1; nx <= max_size; ++nx) {
    for (int ny = 0; ny <= max_size; ++ny) {
      for (const auto& f : detail::all_elgot_bodies(nx, ny)) {
        ElgotBody restricted{nx, ny, {}};
        for (int x = 0; x < nx; ++x)
          restricted.body.push_back(elgot_iterate(f, x).defined() ? f.at(x) : Partial<int>::bottom());
        bool ok = true;
        for (int x = 0; x < nx && ok; ++x)
          ok = elgot_iterate(f, x) == elgot_iterate(restricted, x);
        report.tally(ok, "iterate-dom",
                     "X=" + std::to_string(nx) + " Y=" + std::to_string(ny) + " f=" + detail::describe(f));
      }
    }
  }
  return report;
}

/// Rearranges a pre-Elgot loop body Z -> KX + Z into the full operator's
/// shape Z -> K(X + Z).
inline ElgotBody rearrange_loop(const LoopBody<Partial<int>>& loop, int num_outputs) {
  ElgotBody f{loop.num_states, num_outputs, {}};
  for (const auto& e : loop.body) {
    if (e.is_left())
      f.body.push_back(e.left());  // bottom stays bottom; values are exits
    else
      f.body.push_back(eta(num_outputs + e.right()));
  }
  return f;
}

/// Helper for the rearrangement agreement: runs the full operator on the
/// rearranged body, producing a nested partial (the loop's exits are already
/// K-values).
inline Partial<Partial<int>> elgot_iterate_nested(const LoopBody<Partial<int>>& loop, int num_values,
                                                  int s0) {
  // Exits carry K-values; code them as outputs 0..num_values (0 = bottom).
  ElgotBody f{loop.num_states, num_values + 1, {}};
  for (const auto& e : loop.body) {
    if (e.is_left())
      f.body.push_back(eta(e.left().defined() ? e.left().get() + 1 : 0));
    else
      f.body.push_back(eta(num_values + 1 + e.right()));
  }
  Partial<int> r = elgot_iterate(f, s0);
  if (!r.defined()) return Partial<Partial<int>>::bottom();
  return eta(r.get() == 0 ? Partial<int>::bottom() : eta(r.get() - 1));
}

/// The Kleene/leastness suite: bounded chains, stabilization at |S|+1, the
/// three-way oracle agreement, leastness over enumerated pre-fixpoints, and
/// the pre-Elgot compatibility law.
inline LawReport check_kleene_suite(int max_states, int max_values, int leastness_max) {
  LawReport report;
  report.suite = "kleene";
  for (int nv = 0; nv <= max_values; ++nv) {
    std::vector<Partial<int>> carrier = {Partial<int>::bottom()};
    for (int v = 0; v < nv; ++v) carrier.push_back(eta(v));
    for (int ns = 1; ns <= max_states; ++ns) {
      auto bodies = detail::all_loop_bodies(carrier, ns);
      for (const auto& loop : bodies) {
        for (int s0 = 0; s0 < ns; ++s0) {
          LawReport chain = kleene_check(loop, s0);
          report.merge(chain);
          // Oracle agreement, three ways.
          Partial<int> via_iterate = iterate_partial(loop, s0);
          Partial<int> via_oracle = oracle_iterate(loop, s0);
          Partial<int> via_elgot = mu(elgot_iterate_nested(loop, nv, s0));
          report.tally(via_iterate == via_oracle, "oracle-agreement",
                       "S=" + std::to_string(ns) + " s0=" + std::to_string(s0));
          report.tally(via_iterate == via_elgot, "rearrangement-agreement",
                       "S=" + std::to_string(ns) + " s0=" + std::to_string(s0));
        }
        // Leastness over all candidate tables g : S -> KX.
        if (ns <= leastness_max && nv <= leastness_max) {
          for (const auto& g : detail::all_kleisli(ns, nv)) {
            bool prefix = true;
            for (int s = 0; s < ns && prefix; ++s) {
              const auto& e = loop.at(s);
              Partial<int> applied = e.is_left() ? e.left() : g.at(e.right());
              prefix = leq(applied, g.at(s));
            }
            if (!prefix) continue;
            bool ok = true;
            for (int s = 0; s < ns && ok; ++s) ok = leq(iterate_partial(loop, s), g.at(s));
            report.tally(ok, "leastness", "S=" + std::to_string(ns) + " g=" + detail::describe(g));
          }
        }
      }
      // Pre-Elgot law: h* . f-dagger = ((h* + id) f)-dagger.
      if (ns <= leastness_max + 1 && nv <= max_values) {
        for (const auto& loop : bodies) {
          for (const auto& h : detail::all_kleisli(nv, nv)) {
            LoopBody<Partial<int>> pushed{ns, {}};
            for (const auto& e : loop.body) {
              if (e.is_left())
                pushed.body.push_back(
                    Either<Partial<int>, int>::left(bind(e.left(), [&](int x) { return h.at(x); })));
              else
                pushed.body.push_back(e);
            }
            bool ok = true;
            for (int s = 0; s < ns && ok; ++s) {
              Partial<int> lhs = bind(iterate_partial(loop, s), [&](int x) { return h.at(x); });
              ok = lhs == iterate_partial(pushed, s);
            }
            report.tally(ok, "pre-elgot", "S=" + std::to_string(ns) + " h=" + detail::describe(h));
          }
        }
      }
    }
  }
  return report;
}

/// Bounded-operator suite: approximants below the full iterate, chains
/// monotone, stabilization at |X|+1.
inline LawReport check_bounded_elgot(int max_size) {
  LawReport report;
  report.suite = "bounded-elgot";
  for (int nx = 1; nx <= max_size; ++nx) {
    for (int ny = 0; ny <= max_size; ++ny) {
      for (const auto& f : detail::all_elgot_bodies(nx, ny)) {
        for (int x0 = 0; x0 < nx; ++x0) {
          Partial<int> full = elgot_iterate(f, x0);
          Partial<int> prev = Partial<int>::bottom();
          for (long n = 0; n <= nx + 1; ++n) {
            Partial<int> approx = bounded_elgot(f, x0, n);
            report.tally(leq(approx, full), "bounded-below-full",
                         "X=" + std::to_string(nx) + " n=" + std::to_string(n));
            report.tally(leq(prev, approx), "chain-monotone",
                         "X=" + std::to_string(nx) + " n=" + std::to_string(n));
            prev = approx;
          }
          report.tally(prev == full, "stabilization", "X=" + std::to_string(nx) + " f=" + detail::describe(f));
        }
      }
    }
  }
  return report;
}

}  // namespace elgot
