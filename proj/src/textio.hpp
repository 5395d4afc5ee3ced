#pragma once

#include <stdexcept>
#include <string>

#include "digraph.hpp"

// Bit-exact text serialization: line 1 is the decimal order p, followed by p
// lines of exactly p characters from {0,1}; character j of matrix line i is
// 1 iff arc i->j. Trailing newline required, no other whitespace.

namespace dgc {

struct ParseError : std::runtime_error {
  int line;  // 1-based
  int col;   // 1-based, 0 when the whole line is at fault
  ParseError(int line, int col, const std::string& what);
};

Digraph decode(const std::string& text);
std::string encode(const Digraph& d);

// DOT export: one node line per vertex (v0..v{p-1}), each opposite arc pair
// as a single dir=both edge, each simple arc as a directed edge.
std::string to_dot(const Digraph& d);

}  // namespace dgc
