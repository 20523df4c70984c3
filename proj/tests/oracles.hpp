#pragma once

// Brute-force reference implementations used by the unit tests. Nothing here
// calls into the library algorithm it is checking.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using AdjSet = std::vector<std::set<std::uint32_t>>;

inline AdjSet adjacency(std::size_t vertices, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  AdjSet adj(vertices);
  for (auto [u, v] : edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return adj;
}

inline std::vector<int> bfs(const AdjSet& adj, std::uint32_t root) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<std::uint32_t> q{root};
  dist[root] = 0;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop_front();
    for (auto v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

inline std::vector<std::uint64_t> layer_sizes(const AdjSet& adj, std::uint32_t root) {
  std::vector<std::uint64_t> layers;
  for (int d : bfs(adj, root)) {
    if (d < 0) continue;
    if (static_cast<std::size_t>(d) >= layers.size()) layers.resize(d + 1);
    ++layers[d];
  }
  return layers;
}

// Every maximal clique through v lies in v's closed neighbourhood; enumerate
// its subsets. Only usable for small valency.
inline std::set<std::vector<std::uint32_t>> maximal_cliques_small_degree(const AdjSet& adj) {
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    const std::vector<std::uint32_t> nb(adj[v].begin(), adj[v].end());
    const std::size_t k = nb.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<std::uint32_t> c{v};
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1u) c.push_back(nb[i]);
      bool clique = true;
      for (std::size_t i = 0; i < c.size() && clique; ++i)
        for (std::size_t j = i + 1; j < c.size() && clique; ++j) clique = adj[c[i]].count(c[j]) > 0;
      if (!clique) continue;
      bool maximal = true;
      for (std::size_t i = 0; i < k && maximal; ++i) {
        if ((mask >> i) & 1u) continue;
        bool extends = true;
        for (auto u : c) extends = extends && adj[nb[i]].count(u) > 0;
        if (extends) maximal = false;
      }
      if (maximal) {
        std::sort(c.begin(), c.end());
        out.insert(c);
      }
    }
  }
  return out;
}

// |Aut| by trying every permutation. Tiny graphs only.
inline std::uint64_t automorphism_count(const AdjSet& adj) {
  std::vector<std::uint32_t> p(adj.size());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::uint32_t u = 0; u < adj.size() && ok; ++u)
      for (auto v : adj[u])
        if (!adj[p[u]].count(p[v])) {
          ok = false;
          break;
        }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Orbits of a set of permutations by repeated closure.
inline std::vector<int> orbit_labels(const std::vector<std::vector<std::uint32_t>>& perms, std::size_t points) {
  std::vector<int> label(points, -1);
  int next = 0;
  for (std::uint32_t p = 0; p < points; ++p) {
    if (label[p] >= 0) continue;
    std::vector<std::uint32_t> stack{p};
    label[p] = next;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (const auto& g : perms)
        if (label[g[u]] < 0) {
          label[g[u]] = next;
          stack.push_back(g[u]);
        }
    }
    ++next;
  }
  return label;
}

// Minimal DOT reader for `graph { a; a -- b; }` with numeric node names.
struct DotGraph {
  std::set<std::uint32_t> nodes;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  bool ok = false;
};

inline DotGraph read_dot(const std::string& text) {
  DotGraph g;
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "graph {") return g;
  bool closed = false;
  while (std::getline(is, line)) {
    if (line == "}") {
      closed = true;
      continue;
    }
    if (closed || line.empty() || line.back() != ';') return g;
    line.pop_back();
    const auto dash = line.find("--");
    if (dash == std::string::npos) {
      g.nodes.insert(static_cast<std::uint32_t>(std::stoul(line)));
    } else {
      const auto u = static_cast<std::uint32_t>(std::stoul(line.substr(0, dash)));
      const auto v = static_cast<std::uint32_t>(std::stoul(line.substr(dash + 2)));
      if (!g.nodes.count(u) || !g.nodes.count(v)) return g;
      g.edges.insert({std::min(u, v), std::max(u, v)});
    }
  }
  g.ok = closed;
  return g;
}

// ---------------------------------------------------------------------------
// Index sets from the counting lemmas (1-based, as written).

inline std::int64_t tuples_a(int n) {
  std::int64_t c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) c += (j < i);
  return c;
}

inline std::int64_t tuples_bcd(int n, char kind) {
  std::int64_t c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (!(j < i)) continue;
        if (kind == 'b' && j < k) ++c;
        if (kind == 'c' && j < k && k != i) ++c;
        if (kind == 'd' && j <= k) ++c;
      }
  return c;
}

// Weight-2/3 bracket arrangements over r letters that satisfy the basic
// commutator rules, as index tuples.
inline std::vector<std::tuple<int, int>> basic_weight2(int r) {
  std::vector<std::tuple<int, int>> out;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (j < i) out.emplace_back(i, j);
  return out;
}

inline std::vector<std::tuple<int, int, int>> basic_weight3(int r) {
  std::vector<std::tuple<int, int, int>> out;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k)
        if (j < i && j <= k) out.emplace_back(i, j, k);
  return out;
}

// Symbol sets from the proof of the order formula, over a_1..a_{2n}; letters
// 1..n are the x's (A_0), n+1..2n the y's (B_0).
struct SpecialSets {
  std::set<std::tuple<int, int, int>> d_k, b3, b3_prime;
  std::set<std::pair<int, int>> b2, bc2_cap_di;
};

inline SpecialSets special_sets(int n) {
  SpecialSets s;
  const int r = 2 * n;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k)
        if (j < i && j < k && k != i) s.d_k.insert({i, j, k});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (j < k) s.b3.insert({n + i, j, k});
  for (const auto& t : s.d_k)
    if (!s.b3.count(t)) s.b3_prime.insert(t);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j < i; ++j) {
      const bool mixed = i > n && j <= n;
      if (mixed) s.b2.insert({i, j});
      else s.bc2_cap_di.insert({i, j});
    }
  return s;
}

}  // namespace oracle
