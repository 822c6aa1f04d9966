#include "sgdraw/construction.hpp"

#include "exact_lp.hpp"
#include "sgdraw/validity.hpp"

#include <cassert>
#include <limits>

namespace sgdraw {

ConditionsNotMet::ConditionsNotMet(const ConditionViolation& v)
    : std::logic_error("ordering violates the order conditions at vertex " +
                       std::to_string(v.i)),
      violation_(v) {}

UnrealizableOrdering::UnrealizableOrdering()
    : std::runtime_error("no valid drawing realizes this ordering") {}

namespace {

Drawing from_ranked(const OrderContext& ctx, const std::vector<Rational>& u) {
  std::vector<Rational> pos(u.size());
  for (int r = 0; r < ctx.size(); ++r) pos[ctx.at(r)] = u[r] - u[0];
  return Drawing::line(std::move(pos));
}

std::optional<Drawing> lp_construction(
    const OrderContext& ctx, const std::vector<ExtremalNeighbors>& ext) {
  const int n = ctx.size();
  const std::size_t vars = static_cast<std::size_t>(n) + 1;
  const std::size_t t = vars - 1;
  detail::LinearProgram lp;
  auto add_row = [&](std::vector<Rational> row, Rational rhs) {
    lp.a.push_back(std::move(row));
    lp.b.push_back(std::move(rhs));
  };

  for (int r = 0; r + 1 < n; ++r) {
    std::vector<Rational> row(vars);
    row[r] = 1;
    row[r + 1] = -1;
    row[t] = 1;
    add_row(std::move(row), 0);
  }
  for (int r = 0; r < n; ++r) {
    const ExtremalNeighbors& e = ext[r];
    if (e.l_minus >= 0 && e.r_plus > r) {
      std::vector<Rational> row(vars);
      row[e.r_plus] += 1;
      row[e.l_minus] += 1;
      row[r] -= 2;
      row[t] = 1;
      add_row(std::move(row), 0);
    }
    if (e.r_minus < n && e.l_plus < r) {
      std::vector<Rational> row(vars);
      row[r] += 2;
      row[e.r_minus] -= 1;
      row[e.l_plus] -= 1;
      row[t] = 1;
      add_row(std::move(row), 0);
    }
  }
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<Rational> row(vars);
    row[v] = 1;
    add_row(std::move(row), 1);
  }
  lp.c.assign(vars, Rational(0));
  lp.c[t] = 1;

  auto sol = detail::maximize(lp);
  if (!sol || sgn(sol->objective) <= 0) return std::nullopt;
  sol->x.pop_back();
  return from_ranked(ctx, sol->x);
}

bool passes(const OrderContext& ctx) { return !conditions_check(ctx); }

}  // namespace

std::optional<Drawing> midpoint_construction(const OrderContext& ctx) {
  const int n = ctx.size();
  if (n == 0) return Drawing::line({});
  std::vector<ExtremalNeighbors> ext = extremal_table(ctx);

  // bounds[r] collects strict lower/upper bounds created by earlier ranks
  std::vector<std::optional<Rational>> lower(static_cast<std::size_t>(n));
  std::vector<std::optional<Rational>> upper(static_cast<std::size_t>(n));
  std::vector<Rational> u(static_cast<std::size_t>(n));

  for (int r = 0; r < n; ++r) {
    if (r == 0) {
      u[0] = 0;
    } else {
      Rational lo = u[r - 1];
      if (lower[r] && *lower[r] > lo) lo = *lower[r];
      if (upper[r]) {
        if (!(lo < *upper[r])) return std::nullopt;
        u[r] = (lo + *upper[r]) / 2;
      } else {
        u[r] = lo + 1;
      }
    }
    const ExtremalNeighbors& e = ext[r];
    if (e.r_minus < n && e.r_minus > r) {
      Rational b = 2 * u[r] - u[e.l_plus];
      if (!lower[e.r_minus] || b > *lower[e.r_minus]) lower[e.r_minus] = b;
    }
    if (e.l_minus >= 0 && e.r_plus > r) {
      Rational b = 2 * u[r] - u[e.l_minus];
      if (!upper[e.r_plus] || b < *upper[e.r_plus]) upper[e.r_plus] = b;
    }
  }
  return from_ranked(ctx, u);
}

std::optional<Drawing> threshold_construction(const OrderContext& ctx) {
  const SignedGraph& g = ctx.graph();
  const int n = ctx.size();
  if (!g.is_complete()) return std::nullopt;
  if (n == 0) return Drawing::line({});

  std::vector<int> rp(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) rp[r] = extremal_neighbors(ctx, ctx.at(r)).r_plus;

  struct Arc {
    int from;
    int to;
    long long weight;
  };
  long long k = n;
  for (int attempt = 0; attempt < 8; ++attempt, k *= 2) {
    // x_to - x_from <= weight
    std::vector<Arc> arcs;
    arcs.reserve(3 * static_cast<std::size_t>(n));
    for (int r = n - 2; r >= 0; --r) arcs.push_back({r + 1, r, -1});
    for (int r = 0; r < n; ++r) {
      if (rp[r] > r) arcs.push_back({r, rp[r], k});
      if (rp[r] + 1 < n) arcs.push_back({rp[r] + 1, r, -(k + 1)});
    }
    std::vector<long long> x(static_cast<std::size_t>(n), 0);
    bool changed = true;
    for (int pass = 0; pass <= n && changed; ++pass) {
      changed = false;
      for (const Arc& a : arcs) {
        if (x[a.from] + a.weight < x[a.to]) {
          x[a.to] = x[a.from] + a.weight;
          changed = true;
        }
      }
    }
    if (changed) continue;  // negative cycle: threshold too small

    std::vector<Rational> u(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) u[r] = Rational(static_cast<long>(x[r]));
    return from_ranked(ctx, u);
  }
  return std::nullopt;
}

namespace {

// ctx is known to pass (i)/(ii)
std::optional<Drawing> realize_checked(const OrderContext& ctx) {
  if (ctx.graph().is_complete()) {
    if (auto d = threshold_construction(ctx)) {
      assert(is_valid(ctx.graph(), *d));
      return d;
    }
  }
  if (auto d = midpoint_construction(ctx); d && is_valid(ctx.graph(), *d)) {
    return d;
  }
  auto d = lp_construction(ctx, extremal_table(ctx));
  if (d && !is_valid(ctx.graph(), *d)) {
    throw std::logic_error("exact placement produced an invalid drawing");
  }
  return d;
}

}  // namespace

std::optional<Drawing> realize_ordering(const OrderContext& ctx) {
  if (!passes(ctx)) return std::nullopt;
  return realize_checked(ctx);
}

Drawing construct_drawing(const OrderContext& ctx) {
  if (auto v = conditions_check(ctx)) throw ConditionsNotMet(*v);
  auto d = realize_checked(ctx);
  if (!d) throw UnrealizableOrdering();
  return *std::move(d);
}

}  // namespace sgdraw
