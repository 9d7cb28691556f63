#pragma once

#include <cstdint>

#include "elgot/lang/ast.hpp"

namespace elgot::lang {

struct GenParams {
  int max_depth = 4;  // statement nesting bound
  int max_vars = 3;
  int max_width = 4;
};

/// Deterministic random program: same seed, same program. Guards are drawn
/// from comparisons; bodies mix skip/assign/seq/if/while within the depth
/// bound. Programs may diverge; state spaces stay small enough for exact
/// extensional evaluation.
Program generate_program(std::uint32_t seed, const GenParams& params = {});

}  // namespace elgot::lang
