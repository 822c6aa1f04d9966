#include "cli.hpp"

#include "sgdraw/balance.hpp"
#include "sgdraw/decide.hpp"
#include "sgdraw/graph_io.hpp"
#include "sgdraw/grid.hpp"
#include "sgdraw/oracle.hpp"
#include "sgdraw/patterns.hpp"
#include "sgdraw/random_graphs.hpp"
#include "sgdraw/validity.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sgdraw::cli {
namespace {

// Thrown for anything that should end in exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Reader>
auto load(const std::string& path, Reader reader) {
  if (path == "-") return reader(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return reader(in);
}

SignedGraph load_graph(const std::string& path) {
  return load(path, [](std::istream& in) { return read_graph(in); });
}

Drawing load_drawing(const std::string& path) {
  return load(path, [](std::istream& in) { return read_drawing(in); });
}

void print_ordering(std::ostream& out, const VertexOrdering& o) {
  out << "ordering:";
  for (Vertex v : o.order()) out << ' ' << v;
  out << '\n';
}

const char* side_name(Side s) { return s == Side::kLeft ? "left" : "right"; }

void print_witness(std::ostream& out, const Witness& w) {
  if (const auto* c = std::get_if<ChordlessCycle>(&w)) {
    out << "witness: chordless cycle in G+:";
    for (Vertex v : c->vertices) out << ' ' << v;
    out << '\n';
  } else if (const auto* v = std::get_if<ConditionViolation>(&w)) {
    out << "witness: vertex " << v->i << " has negative neighbour " << v->j
        << " and positive neighbour " << v->j_prime << " beyond it on the "
        << side_name(v->side) << '\n';
  } else if (const auto* s = std::get_if<SearchExhausted>(&w)) {
    out << "witness: search exhausted after " << s->orderings_tested
        << " orderings\n";
  }
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const NotCompleteGraph& e) {
    err << "error: " << e.what() << '\n';
  } catch (const OracleTooLarge& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SearchLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace

int cmd_decide(const DecideOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SignedGraph g = load_graph(opt.input);
    DecideMode mode = opt.mode;
    if (mode == DecideMode::kAuto) {
      mode = g.is_complete() ? DecideMode::kComplete : DecideMode::kOracle;
    }
    if (mode == DecideMode::kComplete && opt.limit) {
      throw UsageError("--limit only applies to --oracle");
    }

    DecisionResult r;
    if (mode == DecideMode::kComplete) {
      r = decide_complete(g);
    } else {
      OracleOptions o;
      o.limit = opt.limit;
      r = decide_with_oracle(g, o);
    }

    if (r.drawable()) {
      out << "drawable ("
          << (r.method == Method::kOracle ? "oracle" : "complete pipeline")
          << ")\n";
      print_ordering(out, r.certificate->ordering);
      write_drawing(out, r.certificate->drawing);
      return kExitPositive;
    }
    if (const auto* s = std::get_if<SearchExhausted>(&r.witness)) {
      out << "not drawable, " << s->orderings_tested << " orderings tested\n";
    } else {
      out << "not drawable\n";
      print_witness(out, r.witness);
    }
    return kExitNegative;
  });
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SignedGraph g = load_graph(opt.graph);
    Drawing d = load_drawing(opt.drawing);
    if (d.size() != g.num_vertices()) {
      throw UsageError("drawing has " + std::to_string(d.size()) +
                       " vertices, graph has " +
                       std::to_string(g.num_vertices()));
    }

    auto report_on = [&](const auto& report, auto fmt) {
      if (report.valid) {
        out << "valid\n";
        return kExitPositive;
      }
      out << "invalid: " << report.coincident.size() << " coincident pair(s), "
          << report.violations.size() << " violation(s)\n";
      for (const Edge& e : report.coincident) {
        out << "coincident: " << e.u << ' ' << e.v << '\n';
      }
      for (const auto& v : report.violations) {
        out << v.i << ": pos " << v.j << " at d²=" << fmt(v.d2_positive)
            << " vs neg " << v.k << " at d²=" << fmt(v.d2_negative) << '\n';
      }
      return kExitNegative;
    };

    if (opt.exact) {
      return report_on(check_valid(g, d),
                       [](const Rational& q) { return to_string(q); });
    }
    return report_on(check_valid(g, to_float(d)), [](double x) {
      std::ostringstream s;
      s.precision(17);
      s << x;
      return s.str();
    });
  });
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    PatternId p = parse_pattern(opt.pattern);
    SignedGraph g = generate(p);
    if (opt.output.empty()) {
      if (opt.dot) throw UsageError("--dot needs an output path (-o)");
      write_graph(out, g);
      return kExitPositive;
    }
    std::filesystem::path path(opt.output);
    {
      std::ofstream f(path);
      if (!f) throw UsageError("cannot write '" + opt.output + "'");
      f << "# " << to_string(p) << '\n';
      write_graph(f, g);
    }
    out << "wrote " << path.string() << '\n';
    if (opt.dot) {
      std::filesystem::path dot_path = path;
      dot_path.replace_extension(".dot");
      std::ofstream f(dot_path);
      if (!f) throw UsageError("cannot write '" + dot_path.string() + "'");
      write_dot(f, g, to_string(p));
      out << "wrote " << dot_path.string() << '\n';
    }
    return kExitPositive;
  });
}

int cmd_classify(const std::string& input, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    SignedGraph g = load_graph(input);
    const bool balanced = is_balanced(g).has_value();
    std::optional<Clustering> clusters = is_clusterizable(g);
    out << "balanced: " << (balanced ? "yes" : "no") << '\n';
    out << "clusterizable: " << (clusters ? "yes" : "no") << '\n';

    std::optional<Drawing> drawing;
    std::string method;
    if (g.is_complete()) {
      DecisionResult r = decide_complete(g);
      method = r.method == Method::kOracle ? "oracle" : "complete pipeline";
      if (r.drawable()) drawing = r.certificate->drawing;
    } else if (g.num_vertices() <= default_oracle_max_vertices()) {
      OracleResult r = decide_line_bruteforce(g);
      method = "oracle";
      if (r.drawing) drawing = r.drawing;
    } else if (clusters) {
      method = "cluster layout";
      drawing = cluster_drawing(g, *clusters);
    } else {
      out << "drawable: unknown (too many vertices for the oracle)\n";
      return kExitUsage;
    }
    out << "drawable: " << (drawing ? "yes" : "no") << " (" << method << ")\n";

    if (balanced && !clusters) {
      err << "inconsistent: balanced but not clusterizable\n";
      return kExitInconsistent;
    }
    if (clusters && !drawing) {
      err << "inconsistent: clusterizable but not drawable\n";
      return kExitInconsistent;
    }
    if (!drawing) return kExitNegative;
    out << "certificate:\n";
    write_drawing(out, integerize(g, *drawing));
    return kExitPositive;
  });
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.family != "unit" && opt.family != "uniform") {
      throw UsageError("unknown family '" + opt.family + "'");
    }
    if (opt.trials < 0) throw UsageError("trials must be >= 0");
    Rng rng(opt.seed);
    out << "n,trial,micros\n";
    for (int n : opt.sizes) {
      if (n < 0) throw UsageError("sizes must be >= 0");
      for (int t = 0; t < opt.trials; ++t) {
        SignedGraph g = opt.family == "unit"
                            ? random_unit_interval_complete(n, rng)
                            : random_complete(n, 0.5, rng);
        auto start = std::chrono::steady_clock::now();
        DecisionResult r = decide_complete(g);
        auto stop = std::chrono::steady_clock::now();
        (void)r;
        out << n << ',' << t << ','
            << std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
                   .count()
            << '\n';
      }
    }
    return kExitPositive;
  });
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Valid drawings of signed graphs"};
  app.require_subcommand(1);

  DecideOptions decide;
  bool complete = false;
  bool oracle = false;
  std::uint64_t limit = 0;
  auto* dec = app.add_subcommand("decide", "decide line drawability");
  dec->add_option("input", decide.input, "graph file ('-' for stdin)")->required();
  auto* complete_flag = dec->add_flag("--complete", complete, "complete-graph pipeline");
  auto* oracle_flag = dec->add_flag("--oracle", oracle, "exhaustive ordering search");
  complete_flag->excludes(oracle_flag);
  auto* limit_opt = dec->add_option("--limit", limit, "maximum search nodes for --oracle");

  CheckOptions check;
  bool exact = false;
  bool floating = false;
  auto* chk = app.add_subcommand("check", "verify a drawing");
  chk->add_option("graph", check.graph, "graph file")->required();
  chk->add_option("drawing", check.drawing, "drawing file")->required();
  auto* exact_flag = chk->add_flag("--exact", exact, "exact rational arithmetic (default)");
  chk->add_flag("--float", floating, "double precision, strict comparisons")
      ->excludes(exact_flag);

  GenOptions gen;
  auto* gn = app.add_subcommand("gen", "generate a named graph");
  gn->add_option("pattern", gen.pattern,
                 "f1:n,k | f2:n | f3:n | f4:n | neg-triangle | neg-cluster | cycle-k:n,k")
      ->required();
  gn->add_option("-o,--output", gen.output, "graph file to write");
  gn->add_flag("--dot", gen.dot, "also write <output stem>.dot");

  std::string classify_input;
  auto* cls = app.add_subcommand("classify", "balanced / clusterizable / drawable");
  cls->add_option("input", classify_input, "graph file")->required();

  BenchOptions bench;
  auto* bn = app.add_subcommand("bench", "time the complete-graph decider");
  bn->add_option("--sizes", bench.sizes, "comma-separated vertex counts")->delimiter(',');
  bn->add_option("--trials", bench.trials, "instances per size");
  bn->add_option("--seed", bench.seed, "generator seed");
  bn->add_option("--family", bench.family, "unit (drawable) or uniform")
      ->check(CLI::IsMember({"unit", "uniform"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPositive;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPositive;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (dec->parsed()) {
    if (complete) decide.mode = DecideMode::kComplete;
    if (oracle) decide.mode = DecideMode::kOracle;
    if (limit_opt->count() > 0) decide.limit = limit;
    return cmd_decide(decide, out, err);
  }
  if (chk->parsed()) {
    check.exact = !floating;
    return cmd_check(check, out, err);
  }
  if (gn->parsed()) return cmd_gen(gen, out, err);
  if (cls->parsed()) return cmd_classify(classify_input, out, err);
  if (bn->parsed()) return cmd_bench(bench, out, err);
  return kExitUsage;
}

}  // namespace sgdraw::cli
