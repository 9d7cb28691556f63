#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "elgot/delay.hpp"
#include "elgot/report.hpp"

namespace elgot {

/// A machine that never converges.
template <class X>
Delay<X> bottom_delay() {
  return coit([](int s) { return Either<X, int>::right(s); }, 0);
}

namespace detail {

/// Random delay value: converges to a small int within ~12 steps, or
/// diverges (about one in eight).
inline Delay<int> random_delay(std::mt19937& rng) {
  if (rng() % 8 == 0) return bottom_delay<int>();
  int steps = static_cast<int>(rng() % 13);
  int value = static_cast<int>(rng() % 10);
  return iota(value, steps);
}

/// Random Kleisli map int -> D int, pinned by a few drawn parameters.
inline std::function<Delay<int>(int)> random_delay_fun(std::mt19937& rng) {
  long a = static_cast<long>(rng() % 7);
  long b = static_cast<long>(rng() % 7);
  long k = static_cast<long>(rng() % 6);
  bool partial = rng() % 4 == 0;
  long hole = static_cast<long>(rng() % 10);
  return [a, b, k, partial, hole](int x) {
    if (partial && x == hole) return bottom_delay<int>();
    return iota(static_cast<int>((a * x + b) % 10), (x + k) % 6);
  };
}

}  // namespace detail

/// Randomized delay-monad laws, checked as depth-bounded strong
/// bisimilarity: the monad laws, the out-characterizations of now/later,
/// later-commutation with bind/strength, and commutativity (sequencing in
/// either order converges at the same summed step count).
///
/// A comparison failing outright counts as a failure; depth exhaustion on
/// both sides (Unknown) does not.
inline LawReport check_delay_laws(unsigned seed, int num_machines, long depth) {
  LawReport report;
  report.suite = "delay";
  std::mt19937 rng(seed);
  auto ok = [](ThreeValued t) { return t != ThreeValued::False; };
  for (int i = 0; i < num_machines; ++i) {
    std::string inst = "seed=" + std::to_string(seed) + " machine=" + std::to_string(i);
    Delay<int> d = detail::random_delay(rng);
    Delay<int> d2 = detail::random_delay(rng);
    auto f = detail::random_delay_fun(rng);
    auto g = detail::random_delay_fun(rng);
    int x = static_cast<int>(rng() % 10);

    report.tally(ok(bisim_strong_fuel(bind(now(x), f), f(x), depth)), "left-unit", inst);
    report.tally(ok(bisim_strong_fuel(bind(d, [](int v) { return now(v); }), d, depth)),
                 "right-unit", inst);
    report.tally(ok(bisim_strong_fuel(bind(bind(d, f), g),
                                      bind(d, [f, g](int v) { return bind(f(v), g); }), depth)),
                 "associativity", inst);

    // out-characterizations: a machine is (strongly) its own one-step
    // unfolding, re-wrapped with now/later.
    auto o = d.out();
    if (o.is_left())
      report.tally(ok(bisim_strong_fuel(d, now(o.left()), depth)), "out-now", inst);
    else
      report.tally(ok(bisim_strong_fuel(d, later(o.right()), depth)), "out-later", inst);

    // later-commutation.
    report.tally(ok(bisim_strong_fuel(bind(later(d), f), later(bind(d, f)), depth)),
                 "later-bind", inst);
    report.tally(ok(bisim_strong_fuel(strength(x, later(d)), later(strength(x, d)), depth)),
                 "later-strength", inst);
    report.tally(ok(bisim_strong_fuel(mu(later(now(d))), later(d), depth)), "later-mu", inst);

    // Commutativity: both sequencing orders take steps(d) + steps(d2).
    auto seq1 = bind(d, [d2](int v) { return map(d2, [v](int w) { return std::pair<int, int>(v, w); }); });
    auto seq2 = bind(d2, [d](int w) { return map(d, [w](int v) { return std::pair<int, int>(v, w); }); });
    report.tally(ok(bisim_strong_fuel(seq1, seq2, depth)), "commutativity", inst);

    // Strength preserves step counts exactly.
    auto obs_d = run_for(d, depth);
    auto obs_s = run_for(strength(x, d), depth);
    bool strength_ok = obs_d.converged() == obs_s.converged() &&
                       (!obs_d.converged() || (obs_d.steps == obs_s.steps &&
                                               obs_s.value->second == *obs_d.value));
    report.tally(strength_ok, "strength-steps", inst);

    // Section-retraction (pairing with projections then retracting is the
    // identity up to strong bisimilarity).
    auto paired = map(d, [](int v) { return std::pair<int, int>(v, v + 1); });
    auto fst_m = map(paired, [](const std::pair<int, int>& p) { return p.first; });
    auto snd_m = map(paired, [](const std::pair<int, int>& p) { return p.second; });
    report.tally(ok(bisim_strong_fuel(pair_retract(fst_m, snd_m), paired, depth)),
                 "pair-retraction", inst);
    (void)d2;
  }
  return report;
}

}  // namespace elgot
