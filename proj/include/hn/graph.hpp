#pragma once

// Immutable simple undirected graph in CSR form, plus the generic
// constructions used on it: line graph, maximal cliques, clique graph, BFS
// and deterministic text export.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hn/error.hpp"

namespace hn {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

class GraphData {
 public:
  GraphData() = default;

  // Builds from an undirected edge list. Loops and repeated edges are
  // rejected. Edge orientation in the input does not matter.
  static GraphData from_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
    GraphData g;
    g.offsets_.assign(vertex_count + 1, 0);
    for (const auto& [u, v] : edges) {
      if (u >= vertex_count || v >= vertex_count)
        throw ConsistencyError("edge endpoint out of range");
      if (u == v) throw ConsistencyError("loop at vertex " + std::to_string(u));
      ++g.offsets_[u + 1];
      ++g.offsets_[v + 1];
    }
    for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adj_.resize(g.offsets_.back());
    std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
      g.adj_[fill[u]++] = v;
      g.adj_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
      auto first = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
      auto last = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
      std::sort(first, last);
      if (std::adjacent_find(first, last) != last)
        throw ConsistencyError("repeated edge at vertex " + std::to_string(v));
    }
    g.edge_count_ = edges.size();
    return g;
  }

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::uint64_t offset(VertexId v) const { return offsets_[v]; }

  bool has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Edges as (u,v) with u < v, ascending. Position in this list is the
  // edge id used by line_graph.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u)
      for (VertexId v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Optional bipartition tag (0/1) per vertex; empty when not bipartite by
  // construction.
  std::vector<std::uint8_t> side;

  // Returns (min, max) degree.
  std::pair<std::size_t, std::size_t> degree_range() const {
    if (vertex_count() == 0) return {0, 0};
    std::size_t lo = degree(0), hi = lo;
    for (VertexId v = 1; v < vertex_count(); ++v) {
      lo = std::min(lo, degree(v));
      hi = std::max(hi, degree(v));
    }
    return {lo, hi};
  }

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> adj_;
  std::size_t edge_count_ = 0;
};

// Distances from `root`; unreachable vertices get kNoVertex.
inline std::vector<VertexId> bfs_distances(const GraphData& g, VertexId root) {
  std::vector<VertexId> dist(g.vertex_count(), kNoVertex);
  std::vector<VertexId> frontier{root}, next;
  dist[root] = 0;
  for (VertexId d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (VertexId u : frontier)
      for (VertexId v : g.neighbors(u))
        if (dist[v] == kNoVertex) {
          dist[v] = d;
          next.push_back(v);
        }
    frontier.swap(next);
  }
  return dist;
}

inline bool is_connected(const GraphData& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kNoVertex) == dist.end();
}

// Proper 2-colouring check; returns false on an odd cycle.
inline bool is_bipartite(const GraphData& g, std::vector<std::uint8_t>* colour_out = nullptr) {
  std::vector<std::uint8_t> colour(g.vertex_count(), 2);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != 2) continue;
    colour[s] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : g.neighbors(u)) {
        if (colour[v] == 2) {
          colour[v] = colour[u] ^ 1u;
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  if (colour_out) *colour_out = std::move(colour);
  return true;
}

// Vertex i of the result is edge i of g.edges().
inline GraphData line_graph(const GraphData& g) {
  const auto edges = g.edges();
  // Edge id for every CSR slot.
  std::vector<std::uint32_t> slot_edge(2 * g.edge_count());
  for (std::uint32_t id = 0; id < edges.size(); ++id) {
    const auto [u, v] = edges[id];
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    slot_edge[g.offset(u) + (std::lower_bound(nu.begin(), nu.end(), v) - nu.begin())] = id;
    slot_edge[g.offset(v) + (std::lower_bound(nv.begin(), nv.end(), u) - nv.begin())] = id;
  }
  std::vector<Edge> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t lo = g.offset(v), hi = lo + g.degree(v);
    for (std::uint64_t p = lo; p < hi; ++p)
      for (std::uint64_t q = p + 1; q < hi; ++q) out.emplace_back(slot_edge[p], slot_edge[q]);
  }
  return GraphData::from_edges(edges.size(), out);
}

inline constexpr std::size_t kDefaultCliqueCap = 4096;

namespace detail {

inline std::vector<VertexId> intersect_sorted(const std::vector<VertexId>& a,
                                              std::span<const VertexId> b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Bron-Kerbosch with Tomita pivoting.
inline void bron_kerbosch(const GraphData& g, std::vector<VertexId>& r, std::vector<VertexId> p,
                          std::vector<VertexId> x, std::vector<std::vector<VertexId>>& out) {
  if (p.empty()) {
    if (x.empty()) {
      auto clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  VertexId pivot = p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (VertexId u : *set) {
      const std::size_t hits = intersect_sorted(p, g.neighbors(u)).size();
      if (hits > best || (hits == best && u < pivot)) {
        best = hits;
        pivot = u;
      }
    }
  std::vector<VertexId> candidates;
  auto pn = g.neighbors(pivot);
  std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(candidates));
  for (VertexId v : candidates) {
    r.push_back(v);
    bron_kerbosch(g, r, intersect_sorted(p, g.neighbors(v)), intersect_sorted(x, g.neighbors(v)),
                  out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace detail

// All maximal cliques, each sorted, the list sorted lexicographically.
inline std::vector<std::vector<VertexId>> maximal_cliques(const GraphData& g,
                                                          std::size_t cap = kDefaultCliqueCap) {
  if (g.vertex_count() > cap)
    throw CapExceeded("maximal clique enumeration capped at " + std::to_string(cap) +
                      " vertices, graph has " + std::to_string(g.vertex_count()));
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> all(g.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  std::vector<VertexId> r;
  detail::bron_kerbosch(g, r, all, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Vertices are the given cliques (in order); two are adjacent when they
// share a vertex.
inline GraphData clique_graph(const GraphData& g, const std::vector<std::vector<VertexId>>& cliques) {
  std::vector<std::vector<std::uint32_t>> containing(g.vertex_count());
  for (std::uint32_t c = 0; c < cliques.size(); ++c)
    for (VertexId v : cliques[c]) containing[v].push_back(c);
  std::vector<Edge> out;
  for (const auto& list : containing)
    for (std::size_t p = 0; p < list.size(); ++p)
      for (std::size_t q = p + 1; q < list.size(); ++q) out.emplace_back(list[p], list[q]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return GraphData::from_edges(cliques.size(), out);
}

inline GraphData clique_graph(const GraphData& g, std::size_t cap = kDefaultCliqueCap) {
  return clique_graph(g, maximal_cliques(g, cap));
}

// ---------------------------------------------------------------------------
// Text formats.

struct EdgeListHeader {
  int n = 0;
  std::string kind;
};

inline void write_edgelist(std::ostream& os, const GraphData& g, const EdgeListHeader& header) {
  os << "# hn-graph n=" << header.n << " kind=" << header.kind
     << " vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline void write_dot(std::ostream& os, const GraphData& g) {
  os << "graph {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

using VertexLabeler = std::function<std::pair<std::string, std::string>(VertexId)>;

// "<id>\t<side>\t<element-encoding>" per vertex.
inline void write_labels(std::ostream& os, const GraphData& g, const VertexLabeler& label) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto [side, text] = label(v);
    os << v << '\t' << side << '\t' << text << '\n';
  }
}

// Reads a file produced by write_edgelist.
inline GraphData read_edgelist(std::istream& is, EdgeListHeader* header_out = nullptr) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# hn-graph", 0) != 0)
    throw ParseError("missing '# hn-graph' header");
  EdgeListHeader header;
  std::size_t vertices = 0, edges = 0;
  std::istringstream hs(line.substr(10));
  std::string field;
  bool have_v = false, have_e = false;
  while (hs >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("bad header field '" + field + "'");
    const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    if (key == "n") header.n = std::stoi(value);
    else if (key == "kind") header.kind = value;
    else if (key == "vertices") vertices = std::stoull(value), have_v = true;
    else if (key == "edges") edges = std::stoull(value), have_e = true;
  }
  if (!have_v || !have_e) throw ParseError("header lacks vertices= or edges=");
  std::vector<Edge> list;
  list.reserve(edges);
  std::uint64_t u, v;
  while (is >> u >> v) list.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  if (list.size() != edges)
    throw ParseError("header says " + std::to_string(edges) + " edges, read " +
                     std::to_string(list.size()));
  if (header_out) *header_out = header;
  return GraphData::from_edges(vertices, list);
}

}  // namespace hn
