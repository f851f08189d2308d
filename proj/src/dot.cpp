#include "snalab/dot.hpp"

#include <sstream>

namespace snalab {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const FiniteLattice& l, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (int i = 0; i < l.size(); ++i) os << "  " << quoted(l.name(i)) << ";\n";
  for (auto [lo, hi] : l.covers())
    os << "  " << quoted(l.name(lo)) << " -> " << quoted(l.name(hi)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace snalab
