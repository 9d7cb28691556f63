#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elgot/elgot_monad.hpp"

using namespace elgot;

TEST_CASE("elgot_iterate basics") {
  // f(x) = Value(Left 0): immediate exit.
  ElgotBody exit0{1, 1, {eta(0)}};
  CHECK(elgot_iterate(exit0, 0) == eta(0));

  // f(x) = Value(Right x): one-state cycle.
  ElgotBody cycle{1, 1, {eta(1)}};  // code 1 = state 0
  CHECK(elgot_iterate(cycle, 0) == Partial<int>::bottom());

  // Body bottom: the body itself diverges.
  ElgotBody body_bottom{1, 1, {Partial<int>::bottom()}};
  CHECK(elgot_iterate(body_bottom, 0) == Partial<int>::bottom());

  CHECK_THROWS_AS(elgot_iterate(exit0, 4), UnknownState);
}

TEST_CASE("rearrangement: pre-Elgot iterate = elgot iterate of [Tinl, eta inr] f") {
  const std::vector<Partial<int>> carrier = {Partial<int>::bottom(), eta(0), eta(1)};
  for (int ns = 1; ns <= 3; ++ns) {
    for (const auto& loop : detail::all_loop_bodies(carrier, ns)) {
      for (int s = 0; s < ns; ++s) {
        Partial<int> direct = iterate_partial(loop, s);
        Partial<int> via_nested = mu(elgot_iterate_nested(loop, 2, s));
        CHECK(direct == via_nested);
      }
    }
  }
}

TEST_CASE("elgot monad axioms at sizes <= 2, fixpoint/uniformity at 3") {
  auto report = check_elgot_monad_axioms(2, 3);
  CHECK(report.passed());
  CHECK(report.instances > 0);
}

TEST_CASE("codiagonal on a body never using the inner summand reduces to fixpoint") {
  // Body into (Y+X)+X that never emits the outer X summand behaves as its
  // merged image.
  // 2 outputs grouped as Y={0}, inner X={0}: outputs 0..1 of the raw body.
  ElgotBody raw{1, 2, {eta(0)}};
  ElgotBody merged{1, 1, {eta(0)}};
  CHECK(elgot_iterate(merged, 0) == eta(0));
  CHECK(elgot_iterate(raw, 0) == eta(0));
}

TEST_CASE("a non-least fixpoint operator is rejected") {
  // "Iterate" that invents the value 0 on cycles instead of bottom: it still
  // satisfies the fixpoint equation pointwise on pure cycles mapped through
  // [eta, g]* f, but it is not below the least fixpoint.
  auto broken = [](const ElgotBody& f, int x0) {
    Partial<int> least = elgot_iterate(f, x0);
    return least.defined() ? least : eta(0);
  };
  ElgotBody cycle{1, 1, {eta(1)}};  // pure self-loop
  Partial<int> least = elgot_iterate(cycle, 0);
  Partial<int> fake = broken(cycle, 0);
  CHECK(least == Partial<int>::bottom());
  CHECK(fake == eta(0));
  CHECK(leq(least, fake));
  CHECK(!leq(fake, least));  // not least: strictly above

  // Uniformity rejects it: merge the 2-cycle into the 1-cycle via h. The
  // broken operator is "uniform" only if results transport along h; check
  // the transported instance that fails for an operator that distinguishes
  // cycles by an invented exit.
  ElgotBody cycle2{2, 1, {eta(2), eta(1)}};  // 0 -> state 1 -> state 0
  CHECK(elgot_iterate(cycle2, 0) == Partial<int>::bottom());
  CHECK(broken(cycle2, 0) == eta(0));  // invented value leaks through both
}

TEST_CASE("bounded elgot approximants") {
  ElgotBody two_hop{3, 1, {eta(2), eta(3), eta(0)}};  // 0 -> s1 -> s2 -> exit 0
  CHECK(bounded_elgot(two_hop, 0, 0) == Partial<int>::bottom());
  CHECK(bounded_elgot(two_hop, 0, 2) == Partial<int>::bottom());
  CHECK(bounded_elgot(two_hop, 0, 3) == eta(0));
  // Stabilization at |X|+1 equals the full operator.
  CHECK(bounded_elgot(two_hop, 0, 4) == elgot_iterate(two_hop, 0));

  auto report = check_bounded_elgot(3);
  CHECK(report.passed());
}

TEST_CASE("kleene suite: oracle agreement, leastness, pre-elgot law") {
  auto report = check_kleene_suite(4, 2, 2);
  CHECK(report.passed());
  CHECK(report.instances > 0);
}

TEST_CASE("iterate-dom law (Lemma-style restriction of the body)") {
  auto report = check_iterate_dom_law(2);
  CHECK(report.passed());
}
