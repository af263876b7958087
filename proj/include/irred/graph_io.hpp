#ifndef IRRED_GRAPH_IO_HPP
#define IRRED_GRAPH_IO_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace irred {

enum class GraphFormat { EdgeList, Graph6 };

class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr long kMaxEncodableOrder = 1L << 18;

inline GraphFormat format_from_string(std::string_view s) {
  if (s == "edge-list")
    return GraphFormat::EdgeList;
  if (s == "graph6")
    return GraphFormat::Graph6;
  throw std::invalid_argument("unknown graph format: " + std::string(s));
}

namespace detail {

inline Graph parse_edge_list(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  long n = 0, m = 0, seen = 0;
  Graph g;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#')
      continue;
    if (tag == "p") {
      std::string kind;
      if (have_header || !(ls >> kind >> n >> m) || kind != "edge" || n < 0 ||
          m < 0)
        throw parse_error("malformed header");
      if (n > kMaxEncodableOrder)
        throw parse_error("graph too large");
      std::string extra;
      if (ls >> extra)
        throw parse_error("malformed header");
      have_header = true;
      g = Graph(static_cast<int>(n));
    } else if (tag == "e") {
      if (!have_header)
        throw parse_error("edge before header");
      long u, v;
      std::string extra;
      if (!(ls >> u >> v) || (ls >> extra))
        throw parse_error("malformed edge line: " + line);
      if (u < 1 || v < 1 || u > n || v > n)
        throw parse_error("vertex id out of range: " + line);
      if (u == v)
        throw parse_error("self-loop: " + line);
      if (g.has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)))
        throw parse_error("duplicate edge: " + line);
      g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
      ++seen;
    } else {
      throw parse_error("unexpected line: " + line);
    }
  }
  if (!have_header)
    throw parse_error("missing header");
  if (seen != m)
    throw parse_error("edge count does not match header");
  return g;
}

inline Graph parse_graph6(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.remove_suffix(1);
  if (s.rfind(">>graph6<<", 0) == 0)
    s.remove_prefix(10);
  for (char c : s)
    if (c < 63 || c > 126)
      throw parse_error("invalid graph6 character");
  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > s.size())
      throw parse_error("truncated graph6 header");
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < count; ++i)
      x = (x << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
    return x;
  };
  if (s.empty())
    throw parse_error("empty graph6 string");
  std::uint64_t n;
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n > static_cast<std::uint64_t>(kMaxEncodableOrder))
    throw parse_error("graph too large");
  const std::uint64_t bits = n * (n - (n > 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes)
    throw parse_error("graph6 body length mismatch");
  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1)
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  // padding bits must be zero
  if (bits % 6 != 0) {
    const int last = s.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw parse_error("nonzero graph6 padding");
  }
  return g;
}

inline std::string encode_graph6(const Graph &g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.n());
  std::string out;
  auto put = [&out](std::uint64_t x, int groups) {
    for (int i = groups - 1; i >= 0; --i)
      out.push_back(static_cast<char>(((x >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.append(2, 126);
    put(n, 6);
  }
  int acc = 0, fill = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) |
            (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = fill = 0;
      }
    }
  if (fill > 0)
    out.push_back(static_cast<char>((acc << (6 - fill)) + 63));
  return out;
}

} // namespace detail

/// Parses a graph; throws parse_error on malformed input.
inline Graph parse_graph(const std::string &text, GraphFormat fmt) {
  return fmt == GraphFormat::EdgeList ? detail::parse_edge_list(text)
                                      : detail::parse_graph6(text);
}

/// Encodes the alive part of g. Dead vertices keep their ids but lose edges.
inline std::string encode_graph(const Graph &g, GraphFormat fmt) {
  if (g.n() > kMaxEncodableOrder)
    throw std::length_error("unsupported graph size");
  if (fmt == GraphFormat::Graph6)
    return detail::encode_graph6(g);
  std::ostringstream os;
  os << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges())
    os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

} // namespace irred

#endif
