#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elgot/finset.hpp"
#include "elgot/kleisli.hpp"

using namespace elgot;

TEST_CASE("function-space enumeration counts match |cod|^|dom|") {
  CHECK(enumerate_functions(FinSet{2}, FinSet{3}).size() == 9);
  CHECK(enumerate_functions(FinSet{0}, FinSet{7}).size() == 1);
  CHECK(enumerate_functions(FinSet{3}, FinSet{5}).size() == 125);
}

TEST_CASE("enumeration is duplicate-free and deterministic") {
  auto all1 = enumerate_functions(FinSet{3}, FinSet{3});
  auto all2 = enumerate_functions(FinSet{3}, FinSet{3});
  CHECK(all1 == all2);
  for (size_t i = 0; i < all1.size(); ++i)
    for (size_t j = i + 1; j < all1.size(); ++j) CHECK(all1[i] != all1[j]);
}

TEST_CASE("FunSpace cursor restarts") {
  FunSpace space(2, 2);
  std::vector<int> t;
  int n = 0;
  while (space.next(t)) ++n;
  CHECK(n == 4);
  space.reset();
  n = 0;
  while (space.next(t)) ++n;
  CHECK(n == 4);
}

TEST_CASE("SizeLimit enforces the work budget") {
  CHECK_THROWS_AS(FunSpace(30, 10, 1000), SizeLimit);
}

TEST_CASE("oracle_iterate basics") {
  LoopBody<Partial<int>> two_hop{2, {Either<Partial<int>, int>::right(1),
                                     Either<Partial<int>, int>::left(eta(7))}};
  CHECK(oracle_iterate(two_hop, 0) == eta(7));

  LoopBody<Partial<int>> self_loop{1, {Either<Partial<int>, int>::right(0)}};
  CHECK(oracle_iterate(self_loop, 0) == Partial<int>::bottom());

  CHECK_THROWS_AS(oracle_iterate(self_loop, 3), UnknownState);
}

TEST_CASE("oracle agrees with iterate_partial and bounded stabilization on all |S| <= 4 bodies") {
  const std::vector<Partial<int>> carrier = {Partial<int>::bottom(), eta(0), eta(1)};
  for (int ns = 1; ns <= 4; ++ns) {
    for (const auto& body : detail::all_loop_bodies(carrier, ns)) {
      for (int s = 0; s < ns; ++s) {
        Partial<int> o = oracle_iterate(body, s);
        CHECK(o == iterate_partial(body, s));
        CHECK(o == bounded_iterate(body, s, ns + 1));
      }
    }
  }
}

TEST_CASE("distributivity isomorphisms round-trip") {
  using E = Either<int, int>;
  auto d = dstr(3, E::left(4));
  CHECK(d.is_left());
  CHECK(d.left() == std::pair<int, int>(3, 4));
  auto l = dstl(E::right(5), 6);
  CHECK(l.is_right());
  CHECK(l.right() == std::pair<int, int>(5, 6));

  for (int x = 0; x < 3; ++x) {
    for (int v = 0; v < 3; ++v) {
      CHECK(dstr_inv(dstr<int, int, int>(x, E::left(v))) ==
            std::pair<int, E>(x, E::left(v)));
      CHECK(dstr_inv(dstr<int, int, int>(x, E::right(v))) ==
            std::pair<int, E>(x, E::right(v)));
      CHECK(dstl_inv(dstl<int, int, int>(E::left(v), x)) ==
            std::pair<E, int>(E::left(v), x));
      CHECK(dstl_inv(dstl<int, int, int>(E::right(v), x)) ==
            std::pair<E, int>(E::right(v), x));
    }
  }
}

TEST_CASE("work budget has a sane default") {
  CHECK(work_budget() >= 1000);
}
