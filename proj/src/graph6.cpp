#include "mcg/graph6.hpp"

#include <array>

namespace mcg {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("truncated graph6 string", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte " + std::to_string(c) + " outside 63..126", i);
    return c - kBias;
  };

  long n = 0;
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);
  if (byte_at(pos) < 63) {
    n = byte_at(pos);
    pos += 1;
  } else if (byte_at(pos + 1) < 63) {
    n = (long{byte_at(pos + 1)} << 12) | (long{byte_at(pos + 2)} << 6) | byte_at(pos + 3);
    pos += 4;
  } else {
    throw ParseError("graphs beyond 258047 vertices are not supported", pos);
  }
  if (n > Graph::kMaxVertices) {
    throw CapacityError("graph6 header declares " + std::to_string(n) +
                        " vertices, limit is " + std::to_string(Graph::kMaxVertices));
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t needed = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < needed) {
    throw ParseError("truncated bit field: expected " + std::to_string(needed) + " bytes", text.size());
  }
  if (text.size() - pos > needed) {
    throw ParseError("header mismatch: " + std::to_string(text.size() - pos - needed) +
                         " trailing bytes after bit field",
                     pos + needed);
  }

  std::vector<Edge> edges;
  long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((byte_at(at) >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  if (k % 6 != 0) {
    const std::size_t at = pos + static_cast<std::size_t>(k / 6);
    const int pad_mask = (1 << (6 - k % 6)) - 1;
    if (byte_at(at) & pad_mask) throw ParseError("nonzero padding bits", at);
  }
  for (std::size_t i = pos; i < text.size(); ++i) byte_at(i);
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  if (g.has_parallel_edges()) throw SerializationError("multigraph not representable in graph6");
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    const VertexMask nbrs = g.neighbors(v);
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | ((nbrs & vertex_bit(u)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace mcg
