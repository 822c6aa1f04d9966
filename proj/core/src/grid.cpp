#include "sgdraw/grid.hpp"

#include "sgdraw/validity.hpp"

#include <algorithm>
#include <cmath>

namespace sgdraw {

std::optional<Drawing> rationalize(const SignedGraph& g, const FloatDrawing& d,
                                   int start_depth, int max_depth) {
  if (!is_valid(g, d)) {
    throw InvalidInputDrawing("floating drawing is not valid");
  }
  std::vector<Rational> exact;
  exact.reserve(d.coordinates().size());
  for (double x : d.coordinates()) {
    if (!std::isfinite(x)) throw InvalidInputDrawing("non-finite coordinate");
    exact.emplace_back(x);  // every finite double is a dyadic rational
  }
  Drawing cast(d.dim(), exact);
  if (is_valid(g, cast)) return cast;
  for (int depth = start_depth; depth <= max_depth; ++depth) {
    std::vector<Rational> rounded;
    rounded.reserve(exact.size());
    for (const Rational& x : exact) rounded.push_back(round_dyadic(x, depth));
    Drawing candidate(d.dim(), std::move(rounded));
    if (is_valid(g, candidate)) return candidate;
  }
  return std::nullopt;
}

Drawing integerize(const SignedGraph& g, const Drawing& d) {
  if (!is_valid(g, d)) {
    throw InvalidInputDrawing("drawing is not valid");
  }
  mpz_class lcm = 1;
  for (const Rational& x : d.coordinates()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Rational> out;
  out.reserve(d.coordinates().size());
  for (const Rational& x : d.coordinates()) out.push_back(x * lcm);

  const int dim = d.dim();
  const std::size_t points = static_cast<std::size_t>(d.size());
  for (int axis = 0; axis < dim; ++axis) {
    if (points == 0) break;
    Rational lo = out[static_cast<std::size_t>(axis)];
    for (std::size_t p = 1; p < points; ++p) {
      lo = std::min(lo, out[p * dim + axis]);
    }
    for (std::size_t p = 0; p < points; ++p) out[p * dim + axis] -= lo;
  }
  return Drawing(dim, std::move(out));
}

}  // namespace sgdraw
