#pragma once

#include "sgdraw/drawing.hpp"
#include "sgdraw/signed_graph.hpp"

#include <optional>
#include <stdexcept>

namespace sgdraw {

class InvalidInputDrawing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Returns the exact value of d when that is already valid. Otherwise rounds
// every coordinate to the nearest multiple of 2^-depth, for depth =
// start_depth, start_depth + 1, ..., max_depth, and returns the first
// rounding that is exactly valid. Throws InvalidInputDrawing when d is not
// valid in floating point to begin with.
std::optional<Drawing> rationalize(const SignedGraph& g, const FloatDrawing& d,
                                   int start_depth = 0, int max_depth = 64);

// Scales by the LCM of all denominators and translates each axis so that its
// minimum is 0. Throws InvalidInputDrawing when d is not exactly valid.
Drawing integerize(const SignedGraph& g, const Drawing& d);

}  // namespace sgdraw
