#include "sgdraw/decide.hpp"

#include "sgdraw/balance.hpp"
#include "sgdraw/chordal.hpp"
#include "sgdraw/construction.hpp"

#include <string>

namespace sgdraw {

NotCompleteGraph::NotCompleteGraph(Edge missing)
    : std::invalid_argument("graph is not complete: pair " +
                            std::to_string(missing.u) + "-" +
                            std::to_string(missing.v) +
                            " has no edge; use the oracle instead"),
      missing_(missing) {}

DecisionResult decide_with_oracle(const SignedGraph& g,
                                  const OracleOptions& options) {
  OracleResult r = decide_line_bruteforce(g, options);
  DecisionResult out;
  out.method = Method::kOracle;
  out.verdict = r.verdict;
  if (r.verdict == Verdict::kDrawable) {
    out.certificate = Certificate{*r.ordering, *r.drawing};
  } else {
    out.witness = SearchExhausted{r.orderings_tested};
  }
  return out;
}

DecisionResult decide_complete(const SignedGraph& g) {
  if (auto missing = g.first_missing_pair()) throw NotCompleteGraph(*missing);
  if (g.num_vertices() <= 4) return decide_with_oracle(g);

  SimpleGraph plus = positive_graph(g);
  DecisionResult out;
  out.method = Method::kCompletePipeline;

  ChordalityResult chordal = is_chordal_with_peo(plus);
  if (!chordal.chordal()) {
    out.witness = ChordlessCycle{std::move(chordal.cycle)};
    return out;
  }

  VertexOrdering ordering(unit_interval_ordering(plus));
  OrderContext ctx(g, ordering);
  if (auto violation = conditions_check(ctx)) {
    out.witness = *violation;
    return out;
  }
  out.verdict = Verdict::kDrawable;
  out.certificate = Certificate{ordering, construct_drawing(ctx)};
  return out;
}

}  // namespace sgdraw
