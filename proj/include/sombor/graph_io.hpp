#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  /// 1-based input line, 0 when not tied to a line.
  int line() const { return line_; }

 private:
  int line_;
};

/// graph6: N(n) followed by the upper triangle in column order
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, each byte
/// biased by 63, zero padded.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Edge-list block: "n m" then m lines "u v", 0-indexed.
std::string to_edge_list(const Graph& g);

enum class InputFormat { kGraph6, kEdgeList };

/// Reads every graph in the stream. graph6 input is one graph per line
/// (blank lines and a ">>graph6<<" header are ignored); edge-list input is a
/// sequence of blocks. '#' starts a comment in edge-list files. Errors carry
/// the offending line number.
std::vector<Graph> read_graphs(std::istream& in, InputFormat format);

}  // namespace sombor
