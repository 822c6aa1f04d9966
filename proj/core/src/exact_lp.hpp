#pragma once

#include "sgdraw/rational.hpp"

#include <optional>
#include <vector>

namespace sgdraw::detail {

// maximize c.x subject to A x <= b, x >= 0, with every b_i >= 0 so the slack
// basis is feasible. Dense tableau, Bland's rule, exact arithmetic.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpSolution {
  Rational objective;
  std::vector<Rational> x;
};

// None when the objective is unbounded.
std::optional<LpSolution> maximize(const LinearProgram& lp);

}  // namespace sgdraw::detail
