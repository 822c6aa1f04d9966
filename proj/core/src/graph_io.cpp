#include "sgdraw/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace sgdraw {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : message),
      line_(line) {}

namespace {

// Splits the next non-blank, non-comment line into tokens.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      std::istringstream ss(raw);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(std::move(t));
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

int to_int(const std::string& token, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
  }
  return value;
}

}  // namespace

SignedGraph read_graph(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError(0, "empty graph file");
  if (tok.size() != 2 || tok[0] != "sg") {
    throw ParseError(reader.line(), "expected header 'sg <n>'");
  }
  const int n = to_int(tok[1], reader.line(), "vertex count");
  if (n < 0) throw ParseError(reader.line(), "negative vertex count");

  std::vector<Edge> pos;
  std::vector<Edge> neg;
  std::unordered_set<std::uint64_t> seen;
  while (reader.next(tok)) {
    const int line = reader.line();
    if (tok.size() != 3) throw ParseError(line, "expected '<u> <v> <+|->'");
    int u = to_int(tok[0], line, "vertex");
    int v = to_int(tok[1], line, "vertex");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(line, "vertex out of range 0.." + std::to_string(n - 1));
    }
    if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
    if (tok[2] != "+" && tok[2] != "-") {
      throw ParseError(line, "sign must be '+' or '-', got '" + tok[2] + "'");
    }
    Edge e(u, v);
    if (!seen.insert(static_cast<std::uint64_t>(e.u) << 32 | static_cast<std::uint32_t>(e.v)).second) {
      throw ParseError(line, "duplicate pair " + std::to_string(e.u) + " " +
                                 std::to_string(e.v));
    }
    (tok[2] == "+" ? pos : neg).emplace_back(u, v);
  }
  try {
    return SignedGraph(n, std::move(pos), std::move(neg));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

SignedGraph read_graph_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

Drawing read_drawing(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError(0, "empty drawing file");
  if (tok.size() != 3 || tok[0] != "draw") {
    throw ParseError(reader.line(), "expected header 'draw <n> <dim>'");
  }
  const int n = to_int(tok[1], reader.line(), "vertex count");
  const int dim = to_int(tok[2], reader.line(), "dimension");
  if (n < 0) throw ParseError(reader.line(), "negative vertex count");
  if (dim < 1) throw ParseError(reader.line(), "dimension must be >= 1");

  std::vector<Rational> coords(static_cast<std::size_t>(n) * dim);
  std::vector<char> have(static_cast<std::size_t>(n), 0);
  int count = 0;
  while (reader.next(tok)) {
    const int line = reader.line();
    if (static_cast<int>(tok.size()) != dim + 1) {
      throw ParseError(line, "expected a vertex and " + std::to_string(dim) +
                                 " coordinate(s)");
    }
    int v = to_int(tok[0], line, "vertex");
    if (v < 0 || v >= n) throw ParseError(line, "vertex out of range");
    if (have[v]) throw ParseError(line, "vertex " + std::to_string(v) + " listed twice");
    have[v] = 1;
    ++count;
    for (int t = 0; t < dim; ++t) {
      try {
        coords[static_cast<std::size_t>(v) * dim + t] = parse_rational(tok[t + 1]);
      } catch (const std::invalid_argument&) {
        throw ParseError(line, "bad coordinate '" + tok[t + 1] + "'");
      }
    }
  }
  if (count != n) {
    throw ParseError(0, "drawing lists " + std::to_string(count) + " of " +
                            std::to_string(n) + " vertices");
  }
  return Drawing(dim, std::move(coords));
}

Drawing read_drawing_string(const std::string& text) {
  std::istringstream in(text);
  return read_drawing(in);
}

void write_graph(std::ostream& out, const SignedGraph& g) {
  out << "sg " << g.num_vertices() << '\n';
  for (const Edge& e : g.positive_edges()) out << e.u << ' ' << e.v << " +\n";
  for (const Edge& e : g.negative_edges()) out << e.u << ' ' << e.v << " -\n";
}

std::string graph_to_string(const SignedGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_drawing(std::ostream& out, const Drawing& d) {
  out << "draw " << d.size() << ' ' << d.dim() << '\n';
  for (Vertex v = 0; v < d.size(); ++v) {
    out << v;
    for (const Rational& x : d.point(v)) out << ' ' << to_string(x);
    out << '\n';
  }
}

std::string drawing_to_string(const Drawing& d) {
  std::ostringstream out;
  write_drawing(out, d);
  return out.str();
}

void write_dot(std::ostream& out, const SignedGraph& g, const std::string& name) {
  out << "graph \"" << name << "\" {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.positive_edges()) {
    out << "  " << e.u << " -- " << e.v << " [style=solid];\n";
  }
  for (const Edge& e : g.negative_edges()) {
    out << "  " << e.u << " -- " << e.v << " [style=dashed];\n";
  }
  out << "}\n";
}

}  // namespace sgdraw
