#pragma once

#include <vector>

#include "hn/graph.hpp"
#include "oracles.hpp"

namespace testgraphs {

using hn::Edge;
using hn::GraphData;
using hn::VertexId;

inline GraphData cycle(VertexId n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return GraphData::from_edges(n, e);
}

inline GraphData path(VertexId n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return GraphData::from_edges(n, e);
}

inline GraphData complete(VertexId n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return GraphData::from_edges(n, e);
}

inline GraphData complete_bipartite(VertexId m, VertexId n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i < m; ++i)
    for (VertexId j = 0; j < n; ++j) e.emplace_back(i, m + j);
  return GraphData::from_edges(m + n, e);
}

inline GraphData star(VertexId leaves) {
  std::vector<Edge> e;
  for (VertexId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return GraphData::from_edges(leaves + 1, e);
}

inline GraphData petersen() {
  std::vector<Edge> e;
  for (VertexId i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return GraphData::from_edges(10, e);
}

inline oracle::AdjSet adj(const GraphData& g) { return oracle::adjacency(g.vertex_count(), g.edges()); }

}  // namespace testgraphs
