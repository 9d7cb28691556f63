#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <type_traits>
#include <utility>

#include "elgot/either.hpp"

namespace elgot {

/// Three-valued answer for fuel-bounded semidecisions. Exact deciders never
/// produce Unknown.
enum class ThreeValued { True, False, Unknown };

/// A delay computation: an immutable step machine over X + (next machine).
/// The seed state lives inside the step closure; observing the machine never
/// mutates it, so values can be shared freely across threads.
///
/// Composite machines (bind, strength, race, ...) carry composite states as
/// captured sub-machines; every step function is pure and total.
template <class X>
class Delay {
 public:
  using value_type = X;
  using Out = Either<X, Delay<X>>;

  static Delay from_step(std::function<Out()> step) {
    return Delay(std::make_shared<const Node>(Node{std::move(step)}));
  }

  /// One observation of the final-coalgebra structure: either the value or
  /// the machine advanced by exactly one step.
  Out out() const { return node_->step(); }

 private:
  struct Node {
    std::function<Out()> step;
  };
  explicit Delay(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Fuel-bounded view of a delay computation: either it converged within the
/// supplied fuel (steps <= fuel), or the fuel-advanced residual machine.
template <class X>
struct Observation {
  std::optional<X> value;              // engaged iff converged
  long steps = 0;                      // convergence step, meaningful iff converged
  std::optional<Delay<X>> residual;    // engaged iff still running

  bool converged() const { return value.has_value(); }
};

inline constexpr long kDefaultFuel = 1000;

template <class X>
Delay<X> now(X x) {
  return Delay<X>::from_step([x]() { return Delay<X>::Out::left(x); });
}

template <class X>
Delay<X> later(Delay<X> d) {
  return Delay<X>::from_step([d]() { return Delay<X>::Out::right(d); });
}

/// Coiteration: the unique machine with out(coit f y) = (id + coit f)(f y).
template <class Y, class F>
auto coit(F f, Y seed) -> Delay<typename std::invoke_result_t<F, Y>::left_type> {
  using E = std::invoke_result_t<F, Y>;
  using X = typename E::left_type;
  return Delay<X>::from_step([f, seed]() -> typename Delay<X>::Out {
    E r = f(seed);
    if (r.is_left()) return Delay<X>::Out::left(r.left());
    return Delay<X>::Out::right(coit(f, r.right()));
  });
}

/// later^n(now(x)).
template <class X>
Delay<X> iota(X x, long n) {
  Delay<X> d = now(std::move(x));
  for (long i = 0; i < n; ++i) d = later(d);
  return d;
}

/// Kleisli lifting: out(bind(d, f)) = [out . f, inr . bind(-, f)](out d).
template <class X, class F>
auto bind(Delay<X> d, F f) -> std::invoke_result_t<F, X> {
  using DY = std::invoke_result_t<F, X>;
  using Y = typename DY::value_type;
  return Delay<Y>::from_step([d, f]() -> typename Delay<Y>::Out {
    auto o = d.out();
    if (o.is_left()) return f(o.left()).out();
    return Delay<Y>::Out::right(bind(o.right(), f));
  });
}

template <class X, class F>
auto map(Delay<X> d, F f) {
  using Y = std::invoke_result_t<F, X>;
  return bind(std::move(d), [f](const X& x) { return now<Y>(f(x)); });
}

template <class X>
Delay<X> mu(Delay<Delay<X>> dd) {
  return bind(std::move(dd), [](const Delay<X>& d) { return d; });
}

/// Strength: pairs a plain value with a running computation, preserving the
/// step count exactly.
template <class X, class Y>
Delay<std::pair<X, Y>> strength(X x, Delay<Y> d) {
  using P = std::pair<X, Y>;
  return Delay<P>::from_step([x, d]() -> typename Delay<P>::Out {
    auto o = d.out();
    if (o.is_left()) return Delay<P>::Out::left(P(x, o.left()));
    return Delay<P>::Out::right(strength(x, o.right()));
  });
}

template <class X, class Y>
Delay<std::pair<X, Y>> costrength(Delay<X> d, Y y) {
  using P = std::pair<X, Y>;
  return Delay<P>::from_step([d, y]() -> typename Delay<P>::Out {
    auto o = d.out();
    if (o.is_left()) return Delay<P>::Out::left(P(o.left(), y));
    return Delay<P>::Out::right(costrength(o.right(), y));
  });
}

/// Lockstep race. Both machines advance one step per emitted step; the race
/// converges at min(steps d1, steps d2). On a simultaneous finish the Left
/// injection (d1's value, paired with d2's current residual) wins.
template <class X, class Y>
auto race(Delay<X> d1, Delay<Y> d2)
    -> Delay<Either<std::pair<X, Delay<Y>>, std::pair<Delay<X>, Y>>> {
  using R = Either<std::pair<X, Delay<Y>>, std::pair<Delay<X>, Y>>;
  return Delay<R>::from_step([d1, d2]() -> typename Delay<R>::Out {
    auto o1 = d1.out();
    if (o1.is_left())
      return Delay<R>::Out::left(R::left(std::pair<X, Delay<Y>>(o1.left(), d2)));
    auto o2 = d2.out();
    if (o2.is_left())
      return Delay<R>::Out::left(R::right(std::pair<Delay<X>, Y>(d1, o2.left())));
    return Delay<R>::Out::right(race(o1.right(), o2.right()));
  });
}

/// Observe up to `fuel` advancing steps.
template <class X>
Observation<X> run_for(const Delay<X>& d, long fuel) {
  Delay<X> cur = d;
  for (long k = 0;; ++k) {
    auto o = cur.out();
    if (o.is_left()) {
      Observation<X> obs;
      obs.value = o.left();
      obs.steps = k;
      return obs;
    }
    if (k == fuel) break;
    cur = o.right();
  }
  Observation<X> obs;
  obs.residual = cur;
  return obs;
}

/// Depth-bounded strong bisimilarity: True on convergence to equal values at
/// the same step, False on any mismatch within the fuel, Unknown otherwise.
template <class X>
ThreeValued bisim_strong_fuel(Delay<X> d1, Delay<X> d2, long fuel) {
  for (long k = 0; k <= fuel; ++k) {
    auto o1 = d1.out();
    auto o2 = d2.out();
    if (o1.is_left() && o2.is_left())
      return o1.left() == o2.left() ? ThreeValued::True : ThreeValued::False;
    if (o1.is_left() != o2.is_left()) return ThreeValued::False;
    d1 = o1.right();
    d2 = o2.right();
  }
  return ThreeValued::Unknown;
}

/// Depth-bounded weak bisimilarity: step counts are ignored. Fuel can never
/// witness divergence, so a one-sided timeout yields Unknown.
template <class X>
ThreeValued bisim_weak_fuel(const Delay<X>& d1, const Delay<X>& d2, long fuel) {
  auto o1 = run_for(d1, fuel);
  auto o2 = run_for(d2, fuel);
  if (o1.converged() && o2.converged())
    return *o1.value == *o2.value ? ThreeValued::True : ThreeValued::False;
  return ThreeValued::Unknown;
}

/// Contracts delays two-for-one: a machine converging at step k is mapped to
/// one converging at step ceil(k/2). This is the loop that undoes the step
/// doubling of sequencing map-fst with map-snd of a shared machine.
template <class X>
Delay<X> halve_delays(Delay<X> d) {
  return Delay<X>::from_step([d]() -> typename Delay<X>::Out {
    auto o = d.out();
    if (o.is_left()) return Delay<X>::Out::left(o.left());
    auto o2 = o.right().out();
    if (o2.is_left()) return Delay<X>::Out::right(now(o2.left()));
    return Delay<X>::Out::right(halve_delays(o2.right()));
  });
}

/// Retraction for the section <map fst, map snd> : D(X x Y) -> DX x DY.
/// Sequences the two machines (strength then costrength under bind, summing
/// the step counts) and halves the resulting delays; on machines that arise
/// as projections of one machine this is the identity up to strong
/// bisimilarity.
template <class X, class Y>
Delay<std::pair<X, Y>> pair_retract(Delay<X> d1, Delay<Y> d2) {
  auto seq = elgot::bind(strength(d1, d2), [](const std::pair<Delay<X>, Y>& p) {
    return costrength(p.first, p.second);
  });
  return halve_delays(seq);
}

}  // namespace elgot
