#pragma once

// Automorphism group order by individualisation-refinement.
//
// Walk one path of the search tree to a discrete partition (the first leaf),
// then, from the deepest level up, compute the orbit of the individualised
// vertex under the pointwise stabiliser of the earlier choices. Every
// candidate not yet known to be in that orbit gets an exhaustive subtree
// search for a leaf that matches the first one; a match is an automorphism
// and is kept as a generator. |Aut| is the product of the orbit lengths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hn/error.hpp"
#include "hn/graph.hpp"
#include "hn/symmetry.hpp"

namespace hn {

inline constexpr std::size_t kDefaultAutSearchCap = 1024;

struct AutomorphismGroup {
  std::uint64_t order = 1;
  std::vector<VertexPermutation> generators;
  std::vector<std::uint64_t> orbit_lengths;  // per level of the first path, top first
  std::uint64_t nodes_visited = 0;
};

namespace detail {

struct SearchNode {
  std::vector<std::uint32_t> cell_of;
  std::uint32_t cells = 0;
  std::uint64_t invariant = 0;
};

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

inline SearchNode refine_node(const GraphData& g, std::vector<std::uint32_t> labels) {
  SearchNode node;
  node.cell_of = normalize_seed(labels);
  std::uint32_t count =
      node.cell_of.empty() ? 0 : *std::max_element(node.cell_of.begin(), node.cell_of.end()) + 1;
  std::vector<std::uint32_t> next;
  std::uint64_t trace = 0;
  while (true) {
    const std::uint32_t refined = refine_round(g, node.cell_of, next);
    node.cell_of.swap(next);
    trace = mix64(trace + refined);
    if (refined == count) break;
    count = refined;
  }
  node.cells = count;
  std::vector<std::uint64_t> sizes(count, 0);
  std::uint64_t edges = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    ++sizes[node.cell_of[v]];
    for (VertexId u : g.neighbors(v))
      edges += mix64((std::uint64_t{node.cell_of[v]} << 32) | node.cell_of[u]);
  }
  std::uint64_t h = trace;
  for (auto s : sizes) h = mix64(h ^ s);
  node.invariant = mix64(h ^ edges);
  return node;
}

inline SearchNode individualize(const GraphData& g, const SearchNode& node, VertexId v) {
  std::vector<std::uint32_t> labels(node.cell_of.size());
  for (VertexId u = 0; u < labels.size(); ++u) labels[u] = 2 * node.cell_of[u] + (u == v ? 0 : 1);
  return refine_node(g, std::move(labels));
}

// First smallest non-singleton cell.
inline std::optional<std::uint32_t> target_cell(const SearchNode& node) {
  std::vector<std::uint32_t> sizes(node.cells, 0);
  for (auto c : node.cell_of) ++sizes[c];
  std::optional<std::uint32_t> best;
  for (std::uint32_t c = 0; c < node.cells; ++c)
    if (sizes[c] > 1 && (!best || sizes[c] < sizes[*best])) best = c;
  return best;
}

inline std::vector<VertexId> members(const SearchNode& node, std::uint32_t cell) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < node.cell_of.size(); ++v)
    if (node.cell_of[v] == cell) out.push_back(v);
  return out;
}

struct FirstPath {
  std::vector<SearchNode> nodes;       // nodes[L] is the leaf
  std::vector<std::uint32_t> targets;  // target cell at nodes[k], k < L
  std::vector<VertexId> chosen;        // vertex individualised at nodes[k]
};

class Searcher {
 public:
  Searcher(const GraphData& g, const FirstPath& path, std::uint64_t& visited)
      : g_(g), path_(path), visited_(visited) {
    const auto& leaf = path.nodes.back();
    leaf_vertex_.resize(leaf.cells);
    for (VertexId v = 0; v < leaf.cell_of.size(); ++v) leaf_vertex_[leaf.cell_of[v]] = v;
  }

  std::optional<VertexPermutation> find(const SearchNode& node, std::size_t depth) {
    ++visited_;
    const SearchNode& ref = path_.nodes[depth];
    if (node.cells != ref.cells || node.invariant != ref.invariant) return std::nullopt;
    if (depth + 1 == path_.nodes.size()) {
      VertexPermutation p;
      p.image.resize(node.cell_of.size());
      for (VertexId v = 0; v < node.cell_of.size(); ++v) p.image[leaf_vertex_[node.cell_of[v]]] = v;
      if (p.is_automorphism_of(g_)) return p;
      return std::nullopt;
    }
    for (VertexId u : members(node, path_.targets[depth])) {
      auto found = find(individualize(g_, node, u), depth + 1);
      if (found) return found;
    }
    return std::nullopt;
  }

 private:
  const GraphData& g_;
  const FirstPath& path_;
  std::uint64_t& visited_;
  std::vector<VertexId> leaf_vertex_;
};

}  // namespace detail

// Order and generators of the group of automorphisms that preserve the
// ordered seed partition (all-zero seed: the full automorphism group).
inline AutomorphismGroup automorphism_group(const GraphData& g, std::vector<std::uint32_t> seed,
                                            std::size_t cap = kDefaultAutSearchCap) {
  if (g.vertex_count() > cap)
    throw CapExceeded("automorphism search capped at " + std::to_string(cap) + " vertices");
  if (seed.size() != g.vertex_count()) throw UnsupportedParameter("seed size mismatch");

  detail::FirstPath path;
  path.nodes.push_back(detail::refine_node(g, std::move(seed)));
  while (auto target = detail::target_cell(path.nodes.back())) {
    const VertexId v = detail::members(path.nodes.back(), *target).front();
    path.targets.push_back(*target);
    path.chosen.push_back(v);
    path.nodes.push_back(detail::individualize(g, path.nodes.back(), v));
  }

  AutomorphismGroup result;
  detail::Searcher searcher(g, path, result.nodes_visited);
  const std::size_t levels = path.chosen.size();
  result.orbit_lengths.assign(levels, 1);
  for (std::size_t k = levels; k-- > 0;) {
    const auto cell = detail::members(path.nodes[k], path.targets[k]);
    const VertexId v = path.chosen[k];
    std::vector<std::uint32_t> ids = orbit_ids(result.generators, g.vertex_count());
    for (VertexId w : cell) {
      if (ids[w] == ids[v]) continue;
      auto found = searcher.find(detail::individualize(g, path.nodes[k], w), k + 1);
      if (found) {
        result.generators.push_back(std::move(*found));
        ids = orbit_ids(result.generators, g.vertex_count());
      }
    }
    std::uint64_t length = 0;
    for (VertexId w : cell)
      if (ids[w] == ids[v]) ++length;
    result.orbit_lengths[k] = length;
    if (result.order > UINT64_MAX / length) throw CapExceeded("automorphism group order overflows 64 bits");
    result.order *= length;
  }
  return result;
}

inline AutomorphismGroup automorphism_group(const GraphData& g, std::size_t cap = kDefaultAutSearchCap) {
  return automorphism_group(g, std::vector<std::uint32_t>(g.vertex_count(), 0), cap);
}

// Seed that individualises `root`.
inline std::vector<std::uint32_t> point_seed(const GraphData& g, VertexId root) {
  std::vector<std::uint32_t> seed(g.vertex_count(), 1);
  seed[root] = 0;
  return seed;
}

}  // namespace hn
