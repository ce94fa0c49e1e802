#include "noncyc/graph_io.hpp"

#include <sstream>

#include "noncyc/error.hpp"

namespace noncyc {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const SimpleGraph& g, const std::string& graph_name) {
  std::ostringstream out;
  out << "graph \"" << escape(graph_name) << "\" {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (v < g.labels().size()) out << " [label=\"" << escape(g.labels()[v]) << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_graph6(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    throw Error("graph6 supports at most 258047 vertices");
  }
  // Upper triangle, column by column, six bits per byte, big-endian.
  int bits = 0, acc = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(acc + 63);
        bits = acc = 0;
      }
    }
  if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + 63);
  return out;
}

SimpleGraph from_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw ParseError("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
  std::size_t pos = 0, n = 0;
  if (s[0] != 126) {
    n = static_cast<std::size_t>(s[0] - 63);
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw ParseError("unsupported graph6 size header");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(s[k] - 63);
    pos = 4;
  }
  const std::size_t nbits = n * (n - (n ? 1 : 0)) / 2;
  if (s.size() - pos != (nbits + 5) / 6) throw ParseError("graph6 body has the wrong length");
  SimpleGraph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

}  // namespace noncyc
