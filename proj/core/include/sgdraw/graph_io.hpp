#pragma once

#include "sgdraw/drawing.hpp"
#include "sgdraw/signed_graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sgdraw {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  // 1-based; 0 when the problem is not tied to a line (e.g. early EOF).
  int line() const { return line_; }

 private:
  int line_;
};

// Graph file:
//   sg <n>
//   <u> <v> <+|->      one line per edge
// Drawing file:
//   draw <n> <dim>
//   <v> <c1> ... <cdim>   one line per vertex, each coordinate an integer,
//                          a decimal or p/q
// Blank lines and '#' comments are ignored in both.
SignedGraph read_graph(std::istream& in);
SignedGraph read_graph_string(const std::string& text);
Drawing read_drawing(std::istream& in);
Drawing read_drawing_string(const std::string& text);

void write_graph(std::ostream& out, const SignedGraph& g);
std::string graph_to_string(const SignedGraph& g);
void write_drawing(std::ostream& out, const Drawing& d);
std::string drawing_to_string(const Drawing& d);

// Positive edges solid, negative edges dashed.
void write_dot(std::ostream& out, const SignedGraph& g,
               const std::string& name = "G");

}  // namespace sgdraw
