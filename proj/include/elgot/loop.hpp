#pragma once

#include <string>
#include <vector>

#include "elgot/either.hpp"
#include "elgot/errors.hpp"

namespace elgot {

/// A finite loop body: a total table S -> A + S over states 0..num_states-1.
/// Right targets must again lie in the declared state set; this is validated
/// lazily, when a transition is actually taken.
template <class A>
struct LoopBody {
  int num_states = 0;
  std::vector<Either<A, int>> body;  // indexed by state

  const Either<A, int>& at(int s) const {
    if (s < 0 || s >= num_states || static_cast<int>(body.size()) != num_states)
      throw UnknownState("loop state " + std::to_string(s) + " outside declared set of size " +
                         std::to_string(num_states));
    return body[static_cast<size_t>(s)];
  }
};

/// A finite presentation of a delay machine over X: the same shape as a loop
/// body, plus a start state. Doubles as the finite-state certificate for
/// exact extensional collapse.
template <class X>
struct FiniteMachine {
  LoopBody<X> steps;
  int start = 0;
};

}  // namespace elgot
