#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "elgot/either.hpp"
#include "elgot/errors.hpp"
#include "elgot/loop.hpp"
#include "elgot/partial.hpp"

namespace elgot {

/// Global instance cap for exhaustive enumerations, overridable via the
/// ELGOT_ITER_BUDGET environment variable.
inline long work_budget() {
  static const long budget = [] {
    if (const char* env = std::getenv("ELGOT_ITER_BUDGET")) {
      long v = std::atol(env);
      if (v > 0) return v;
    }
    return 1000000L;
  }();
  return budget;
}

/// A finite enumerable set, element codes 0..size-1 in stable order.
struct FinSet {
  int size = 0;
  std::vector<int> elements() const {
    std::vector<int> e(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) e[static_cast<size_t>(i)] = i;
    return e;
  }
};

/// Restartable stream over all |cod|^|dom| total tables dom -> cod, in
/// odometer order (last slot varies fastest). Each consumer holds an
/// independent cursor.
class FunSpace {
 public:
  FunSpace(int dom, int cod, long cap = work_budget()) : dom_(dom), cod_(cod) {
    long n = 1;
    for (int i = 0; i < dom_; ++i) {
      n *= cod_;
      if (n > cap)
        throw SizeLimit("function space " + std::to_string(cod_) + "^" + std::to_string(dom_) +
                        " exceeds budget " + std::to_string(cap));
    }
    count_ = n;
    reset();
  }

  long count() const { return count_; }

  void reset() {
    table_.assign(static_cast<size_t>(dom_), 0);
    fresh_ = true;
    exhausted_ = (cod_ == 0 && dom_ > 0);
  }

  /// Advances the cursor; returns false once the space is exhausted.
  bool next(std::vector<int>& out) {
    if (exhausted_) return false;
    if (fresh_) {
      fresh_ = false;
      out = table_;
      return true;
    }
    for (int i = dom_ - 1; i >= 0; --i) {
      auto& slot = table_[static_cast<size_t>(i)];
      if (++slot < cod_) {
        out = table_;
        return true;
      }
      slot = 0;
    }
    exhausted_ = true;
    return false;
  }

 private:
  int dom_, cod_;
  long count_ = 0;
  std::vector<int> table_;
  bool fresh_ = true;
  bool exhausted_ = false;
};

inline std::vector<std::vector<int>> enumerate_functions(const FinSet& dom, const FinSet& cod,
                                                         long cap = work_budget()) {
  FunSpace space(dom.size, cod.size, cap);
  std::vector<std::vector<int>> all;
  all.reserve(static_cast<size_t>(space.count()));
  std::vector<int> t;
  while (space.next(t)) all.push_back(t);
  return all;
}

/// Brute-force iteration oracle. Deliberately a second implementation with a
/// different control structure than the library's iterate: the visited
/// sequence is an explicit list scanned linearly.
template <class X>
Partial<X> oracle_iterate(const LoopBody<Partial<X>>& loop, int s0) {
  std::vector<int> visited;
  int s = s0;
  for (;;) {
    const auto& step = loop.at(s);
    if (step.is_left()) return step.left();
    for (int seen : visited)
      if (seen == s) return Partial<X>::bottom();
    visited.push_back(s);
    s = step.right();
  }
}

// Canonical distributivity isomorphisms on finite carriers.

template <class X, class Y, class Z>
Either<std::pair<X, Y>, std::pair<X, Z>> dstr(const X& x, const Either<Y, Z>& e) {
  using R = Either<std::pair<X, Y>, std::pair<X, Z>>;
  if (e.is_left()) return R::left(std::pair<X, Y>(x, e.left()));
  return R::right(std::pair<X, Z>(x, e.right()));
}

template <class X, class Y, class Z>
std::pair<X, Either<Y, Z>> dstr_inv(const Either<std::pair<X, Y>, std::pair<X, Z>>& e) {
  using E = Either<Y, Z>;
  if (e.is_left()) return {e.left().first, E::left(e.left().second)};
  return {e.right().first, E::right(e.right().second)};
}

template <class X, class Y, class Z>
Either<std::pair<X, Z>, std::pair<Y, Z>> dstl(const Either<X, Y>& e, const Z& z) {
  using R = Either<std::pair<X, Z>, std::pair<Y, Z>>;
  if (e.is_left()) return R::left(std::pair<X, Z>(e.left(), z));
  return R::right(std::pair<Y, Z>(e.right(), z));
}

template <class X, class Y, class Z>
std::pair<Either<X, Y>, Z> dstl_inv(const Either<std::pair<X, Z>, std::pair<Y, Z>>& e) {
  using E = Either<X, Y>;
  if (e.is_left()) return {E::left(e.left().first), e.left().second};
  return {E::right(e.right().first), e.right().second};
}

}  // namespace elgot
