#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "elgot/delay.hpp"
#include "elgot/delay_laws.hpp"

using namespace elgot;

TEST_CASE("now converges immediately") {
  auto obs = run_for(now(5), 100);
  CHECK(obs.converged());
  CHECK(*obs.value == 5);
  CHECK(obs.steps == 0);

  auto o = now(std::string("a")).out();
  CHECK(o.is_left());
  CHECK(o.left() == "a");
}

TEST_CASE("later postpones by exactly one step") {
  auto obs = run_for(later(now(7)), 1);
  CHECK(obs.converged());
  CHECK(obs.steps == 1);

  auto obs2 = run_for(later(later(now(7))), 1);
  CHECK(!obs2.converged());
  CHECK(obs2.residual.has_value());

  auto o = later(now(3)).out();
  CHECK(o.is_right());
  auto inner = run_for(o.right(), 0);
  CHECK(inner.converged());
  CHECK(*inner.value == 3);
}

TEST_CASE("coit countdown and constant injections") {
  auto countdown = coit(
      [](int k) {
        if (k == 0) return Either<std::string, int>::left("done");
        return Either<std::string, int>::right(k - 1);
      },
      3);
  auto obs = run_for(countdown, 10);
  CHECK(obs.converged());
  CHECK(*obs.value == "done");
  CHECK(obs.steps == 3);

  auto immediate = coit([](int y) { return Either<int, int>::left(y); }, 9);
  CHECK(bisim_strong_fuel(immediate, now(9), 10) == ThreeValued::True);

  auto never = coit([](int y) { return Either<int, int>::right(y); }, 0);
  CHECK(!run_for(never, 1000).converged());
}

TEST_CASE("out of coit agrees with one application of the step function") {
  auto f = [](int k) {
    if (k == 0) return Either<int, int>::left(42);
    return Either<int, int>::right(k - 1);
  };
  auto o = coit(f, 2).out();
  CHECK(o.is_right());  // f(2) = Right 1
  auto o0 = coit(f, 0).out();
  CHECK(o0.is_left());
  CHECK(o0.left() == 42);
}

TEST_CASE("bind adds step counts") {
  auto d = iota(2, 2);
  auto r = bind(d, [](int x) { return later(now(x + 1)); });
  auto obs = run_for(r, 10);
  CHECK(obs.converged());
  CHECK(*obs.value == 3);
  CHECK(obs.steps == 3);
}

TEST_CASE("strength preserves step counts and pairs values") {
  auto obs = run_for(strength(1, later(now(2))), 10);
  CHECK(obs.converged());
  CHECK(obs.value->first == 1);
  CHECK(obs.value->second == 2);
  CHECK(obs.steps == 1);

  CHECK(bisim_strong_fuel(strength(4, now(5)), now(std::pair<int, int>(4, 5)), 10) ==
        ThreeValued::True);
  auto d = iota(2, 3);
  CHECK(bisim_strong_fuel(strength(1, later(d)), later(strength(1, d)), 10) ==
        ThreeValued::True);
}

TEST_CASE("iota is iterated later") {
  CHECK(bisim_strong_fuel(iota(8, 0), now(8), 5) == ThreeValued::True);
  auto obs = run_for(iota(8, 2), 2);
  CHECK(obs.converged());
  CHECK(obs.steps == 2);
}

TEST_CASE("race is lockstep with left-biased ties") {
  auto r1 = run_for(race(now(1), later(now(2))), 5);
  CHECK(r1.converged());
  CHECK(r1.steps == 0);
  CHECK(r1.value->is_left());
  CHECK(r1.value->left().first == 1);
  // The losing arm is handed back unadvanced.
  auto residual = run_for(r1.value->left().second, 5);
  CHECK(residual.steps == 1);
  CHECK(*residual.value == 2);

  auto r2 = run_for(race(later(now(1)), now(2)), 5);
  CHECK(r2.converged());
  CHECK(r2.steps == 0);
  CHECK(r2.value->is_right());
  CHECK(r2.value->right().second == 2);

  auto r3 = run_for(race(now(1), now(2)), 5);
  CHECK(r3.value->is_left());  // simultaneous: Left wins

  // Step exactness: converges at min of the arms.
  for (long k1 = 0; k1 <= 6; ++k1) {
    for (long k2 = 0; k2 <= 6; ++k2) {
      auto obs = run_for(race(iota(1, k1), iota(2, k2)), 20);
      REQUIRE(obs.converged());
      CHECK(obs.steps == std::min(k1, k2));
    }
  }
}

TEST_CASE("run_for residual is the fuel-advanced machine") {
  auto obs = run_for(iota(7, 3), 2);
  CHECK(!obs.converged());
  auto rest = run_for(*obs.residual, 10);
  CHECK(rest.converged());
  CHECK(rest.steps == 1);

  CHECK(!run_for(coit([](int y) { return Either<int, int>::right(y); }, 0), 1000000)
             .converged());
}

TEST_CASE("bisimilarity testers") {
  CHECK(bisim_weak_fuel(now(3), later(now(3)), 1) == ThreeValued::True);
  CHECK(bisim_weak_fuel(now(1), now(2), 0) == ThreeValued::False);
  CHECK(bisim_weak_fuel(now(1), bottom_delay<int>(), 50) == ThreeValued::Unknown);

  CHECK(bisim_strong_fuel(now(3), later(now(3)), 10) == ThreeValued::False);
  CHECK(bisim_strong_fuel(iota(3, 4), iota(3, 4), 10) == ThreeValued::True);
  CHECK(bisim_strong_fuel(bottom_delay<int>(), bottom_delay<int>(), 10) ==
        ThreeValued::Unknown);
}

TEST_CASE("halving undoes the step doubling of paired projections") {
  for (long k = 0; k <= 9; ++k) {
    auto paired = map(iota(3, k), [](int v) { return std::pair<int, int>(v, v + 1); });
    auto fst_m = map(paired, [](const std::pair<int, int>& p) { return p.first; });
    auto snd_m = map(paired, [](const std::pair<int, int>& p) { return p.second; });
    CHECK(bisim_strong_fuel(pair_retract(fst_m, snd_m), paired, 50) == ThreeValued::True);
  }
  // Unequal delays land at ceil((k1 + k2) / 2).
  auto obs = run_for(pair_retract(iota(1, 2), iota(2, 5)), 50);
  CHECK(obs.converged());
  CHECK(obs.steps == 4);  // ceil(7/2)
}

TEST_CASE("randomized law suite at depth 50 on 200 machines") {
  auto report = check_delay_laws(12345, 200, 50);
  CHECK(report.passed());
  CHECK(report.instances >= 200 * 10);
}

TEST_CASE("mu flattens") {
  auto dd = later(now(iota(4, 2)));
  auto obs = run_for(mu(dd), 10);
  CHECK(obs.converged());
  CHECK(*obs.value == 4);
  CHECK(obs.steps == 3);
}
