#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domcells/error.hpp"
#include "domcells/vertex_set.hpp"

namespace domcells {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..order-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list. Duplicate edges collapse; loops and
  // out-of-range endpoints are rejected.
  Graph(std::size_t order, std::span<const Edge> edges, std::string label = {})
      : adjacency_(order), label_(std::move(label)) {
    for (const auto& [u, v] : edges) {
      if (u >= order || v >= order)
        throw Error(ErrorKind::RangeError,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") outside vertex range [0," + std::to_string(order) + ")");
      if (u == v)
        throw Error(ErrorKind::LoopRejected, "loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
  }

  Graph(std::size_t order, std::initializer_list<Edge> edges, std::string label = {})
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size()), std::move(label)) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  const std::string& label() const noexcept { return label_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& nbrs : adjacency_) twice += nbrs.size();
    return twice / 2;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= order())
      throw Error(ErrorKind::InvalidArgument,
                  "vertex " + std::to_string(v) + " out of range for graph of order " +
                      std::to_string(order()));
  }

  // Same vertex count and edge set; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::string label_;
};

inline Graph path_graph(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "path graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex l = 0; l + 1 < n; ++l) edges.emplace_back(l, l + 1);
  return Graph(n, edges, "P" + std::to_string(n));
}

inline Graph complete_graph(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges, "K" + std::to_string(n));
}

inline Graph empty_graph(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "graph needs at least one vertex");
  return Graph(n, std::span<const Edge>{});
}

// K_{1,leaves} with the center at vertex 0.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges, "K1," + std::to_string(leaves));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex l = 0; l < n; ++l) edges.emplace_back(l, static_cast<Vertex>((l + 1) % n));
  return Graph(n, edges, "C" + std::to_string(n));
}

// True when the only edges are (l, l+1), i.e. vertex ids follow the path order.
inline bool is_canonical_path(const Graph& g) {
  if (g.order() == 0) return false;
  if (g.edge_count() + 1 != g.order()) return false;
  for (Vertex l = 0; l + 1 < g.order(); ++l)
    if (!g.adjacent(l, l + 1)) return false;
  return true;
}

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  g.check_vertex(v);
  VertexSet s(g.order());
  s.insert(v);
  for (Vertex w : g.neighbors(v)) s.insert(w);
  return s;
}

inline std::vector<VertexSet> closed_neighborhoods(const Graph& g) {
  std::vector<VertexSet> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(closed_neighborhood(g, v));
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list text format: first line "n", then one "u v" per line.

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  if (!(in >> n)) throw Error(ErrorKind::ParseError, "missing vertex count", 0);
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "vertex count must be positive");
  std::vector<Edge> edges;
  long long u = 0;
  long long v = 0;
  while (in >> u) {
    if (!(in >> v))
      throw Error(ErrorKind::ParseError, "dangling endpoint",
                  static_cast<std::size_t>(std::max<std::streamoff>(0, in.tellg())));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::RangeError, "edge (" + std::to_string(u) + "," +
                                             std::to_string(v) + ") outside [0," +
                                             std::to_string(n) + ")");
    if (u == v) throw Error(ErrorKind::LoopRejected, "loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!in.eof()) {
    in.clear();
    throw Error(ErrorKind::ParseError, "unexpected token",
                static_cast<std::size_t>(std::max<std::streamoff>(0, in.tellg())));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// graph6 (McKay's format). Short form for n <= 62, the 4-byte form up to
// 258047. Bits run over the upper triangle column by column.

namespace detail {
inline constexpr std::size_t kGraph6MaxOrder = 258047;
}

inline Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) pos = header.size();
  // Tolerate one trailing line terminator.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);

  auto take = [&](const char* what) -> unsigned {
    if (pos >= text.size())
      throw Error(ErrorKind::ParseError, std::string("truncated input while reading ") + what, pos);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw Error(ErrorKind::ParseError, "byte outside printable graph6 range", pos);
    ++pos;
    return c - 63U;
  };

  std::size_t n = 0;
  const unsigned first = take("order");
  if (first < 63) {
    n = first;
  } else {
    const std::size_t width_at = pos;
    unsigned b[3];
    for (auto& x : b) x = take("order");
    if (b[0] == 63)
      throw Error(ErrorKind::ParseError, "orders above 258047 are not supported", width_at);
    n = (std::size_t{b[0]} << 12) | (std::size_t{b[1]} << 6) | b[2];
    if (n < 63)
      throw Error(ErrorKind::ParseError, "non-canonical long-form order", width_at);
  }
  if (n == 0) throw Error(ErrorKind::ParseError, "graph6 order must be positive", 0);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  std::vector<Edge> edges;
  std::size_t bit = 0;
  std::size_t row = 0;
  std::size_t col = 1;
  for (std::size_t k = 0; k < bytes; ++k) {
    const std::size_t at = pos;
    const unsigned chunk = take("adjacency");
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = (chunk >> shift) & 1U;
      if (bit >= bits) {
        if (set) throw Error(ErrorKind::ParseError, "non-zero padding bits", at);
        continue;
      }
      if (set) edges.emplace_back(static_cast<Vertex>(row), static_cast<Vertex>(col));
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  if (pos != text.size()) throw Error(ErrorKind::ParseError, "trailing bytes", pos);
  return Graph(n, edges);
}

inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || n > detail::kGraph6MaxOrder)
    throw Error(ErrorKind::InvalidArgument, "graph6 supports orders 1..258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  unsigned chunk = 0;
  int filled = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row) {
      chunk = (chunk << 1) | (g.adjacent(row, col) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// Seeded G(n, p). The engine is std::mt19937_64, whose output sequence is
// fixed by the standard. Each unordered pair (u < v), visited in
// lexicographic order, consumes one draw r and is kept iff
// (r >> 11) * 2^-53 < p. No std distribution is involved, so the result is
// identical on every conforming platform.

inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "random graph needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "edge probability must lie in [0, 1]");
  std::mt19937_64 engine(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (unit < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace domcells
