#include "textio.hpp"

#include <sstream>

namespace dgc {

namespace {

std::string pos_msg(int line, int col, const std::string& what) {
  std::ostringstream os;
  os << "line " << line;
  if (col > 0) os << ", col " << col;
  os << ": " << what;
  return os.str();
}

}  // namespace

ParseError::ParseError(int line, int col, const std::string& what)
    : std::runtime_error(pos_msg(line, col, what)), line(line), col(col) {}

Digraph decode(const std::string& text) {
  std::size_t pos = 0;
  auto next_line = [&](int lineno) -> std::string {
    if (pos >= text.size())
      throw ParseError(lineno, 0, "unexpected end of input");
    auto nl = text.find('\n', pos);
    if (nl == std::string::npos)
      throw ParseError(lineno, 0, "missing trailing newline");
    std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    return line;
  };

  std::string header = next_line(1);
  if (header.empty() || header.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(1, 1, "order must be a decimal integer");
  long p_long = std::stol(header);
  if (p_long < 1 || p_long > kMaxOrder)
    throw ParseError(1, 1, "order out of range [1," +
                                std::to_string(kMaxOrder) + "]");
  int p = static_cast<int>(p_long);

  std::vector<VSet> rows(p, 0);
  for (int i = 0; i < p; ++i) {
    std::string line = next_line(i + 2);
    if (static_cast<int>(line.size()) != p)
      throw ParseError(i + 2, 0, "expected exactly " + std::to_string(p) +
                                     " characters, got " +
                                     std::to_string(line.size()));
    for (int j = 0; j < p; ++j) {
      char c = line[j];
      if (c != '0' && c != '1')
        throw ParseError(i + 2, j + 1, std::string("illegal character '") + c +
                                           "', expected 0 or 1");
      if (c == '1') {
        if (i == j)
          throw ParseError(i + 2, j + 1, "loop bit set on the diagonal");
        rows[i] |= bit(j);
      }
    }
  }
  if (pos != text.size())
    throw ParseError(p + 2, 0, "trailing content after matrix");
  return Digraph::from_rows(p, std::move(rows));
}

std::string encode(const Digraph& d) {
  int p = d.order();
  std::string out = std::to_string(p);
  out.push_back('\n');
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) out.push_back(d.arc(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::string to_dot(const Digraph& d) {
  int p = d.order();
  std::ostringstream os;
  os << "digraph D {\n";
  for (int i = 0; i < p; ++i) os << "  v" << i << ";\n";
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      bool fwd = d.arc(i, j), bwd = d.arc(j, i);
      if (fwd && bwd)
        os << "  v" << i << " -> v" << j << " [dir=both];\n";
      else if (fwd)
        os << "  v" << i << " -> v" << j << ";\n";
      else if (bwd)
        os << "  v" << j << " -> v" << i << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace dgc
