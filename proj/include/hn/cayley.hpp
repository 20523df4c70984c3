#pragma once

// The two graphs attached to H(n) with X = <x_i>, Y = <y_j>:
//
//   Gamma = Cay(H, S),  S = (X u Y) \ {1},  edges {g, s*g}   (LEFT multiplication)
//   Sigma: vertices are the cosets Xh and Yh, Xh ~ Yg iff Xh n Yg != {}.
//
// Right multiplication is reserved for the automorphism action h: Xz -> Xzh
// (see symmetry.hpp). Using it for the Cayley edges builds a different graph
// and breaks every edge-regularity check downstream.
//
// Vertices are keyed by the packed element value (GroupContext::pack), so the
// builders need total_bits <= 64 and a vertex count under the caps below.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hn/error.hpp"
#include "hn/graph.hpp"
#include "hn/group.hpp"

namespace hn {

inline constexpr std::uint64_t kDefaultVertexCap = std::uint64_t{1} << 23;

enum class Side : std::uint8_t { X = 0, Y = 1 };

inline const char* side_name(Side s) { return s == Side::X ? "X" : "Y"; }

struct CosetVertex {
  Side side = Side::X;
  Element rep;
  friend bool operator==(const CosetVertex&, const CosetVertex&) = default;
};

// X-side: Xh has a unique member with a = 0 (left x-multiplication only
// touches the a-block). Y-side: left y-multiplication also changes M, so the
// representative is the encoding-minimal member of {y^b h}.
inline CosetVertex canonical_coset(const GroupContext& ctx, Side side, const Element& h) {
  if (side == Side::X) {
    Element rep = h;
    rep.a = 0;
    return {Side::X, rep};
  }
  Element best = h;
  const std::uint64_t count = std::uint64_t{1} << ctx.n();
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    const Element candidate = ctx.mul(ctx.y_vec(bits), h);
    if (candidate < best) best = candidate;
  }
  return {Side::Y, best};
}

namespace detail {
inline void check_vertex_cap(const GroupContext& ctx, std::uint64_t vertices, std::uint64_t cap,
                             const char* what) {
  if (!ctx.packable() || ctx.total_bits() > 40)
    throw CapExceeded(std::string(what) + ": H(" + std::to_string(ctx.n()) +
                      ") is too large to materialise");
  if (vertices > cap)
    throw CapExceeded(std::string(what) + " would have " + std::to_string(vertices) +
                      " vertices, cap is " + std::to_string(cap) + " (use force to override)");
}
}  // namespace detail

// Vertex id = packed element.
struct CayleyGraph {
  GraphData graph;
};

inline std::vector<Element> connection_set(const GroupContext& ctx) {
  std::vector<Element> s;
  const std::uint64_t count = std::uint64_t{1} << ctx.n();
  for (std::uint64_t bits = 1; bits < count; ++bits) s.push_back(ctx.x_vec(bits));
  for (std::uint64_t bits = 1; bits < count; ++bits) s.push_back(ctx.y_vec(bits));
  return s;
}

inline CayleyGraph build_gamma(const GroupContext& ctx, std::uint64_t cap = kDefaultVertexCap) {
  const std::uint64_t order = ctx.packable() ? std::uint64_t{1} << ctx.total_bits() : 0;
  detail::check_vertex_cap(ctx, order, cap, "Gamma");
  const auto s = connection_set(ctx);
  std::vector<Edge> edges;
  edges.reserve(order * s.size() / 2);
  for (std::uint64_t g = 0; g < order; ++g) {
    const Element h = ctx.unpack(g);
    for (const auto& gen : s) {
      const std::uint64_t sg = ctx.pack(ctx.mul(gen, h));
      // S is inverse-closed, so each edge shows up from both ends.
      if (g < sg) edges.emplace_back(static_cast<VertexId>(g), static_cast<VertexId>(sg));
    }
  }
  return {GraphData::from_edges(order, edges)};
}

// Sigma with the bookkeeping needed by the group actions:
//   X-side vertex ids 0..x_count-1 are (packed rep) >> n, in encoding order;
//   Y-side ids x_count.. follow in encoding order of the canonical rep.
//   Edge phi(z) = {Xz, Yz}; edge ids follow GraphData::edges().
class SigmaGraph {
 public:
  const GroupContext& context() const { return *ctx_; }
  const GraphData& graph() const { return graph_; }
  std::size_t x_count() const { return x_count_; }
  std::size_t y_count() const { return y_rep_.size(); }
  VertexId vertex_x() const { return 0; }
  VertexId vertex_y() const { return static_cast<VertexId>(x_count_); }

  Side side_of(VertexId v) const { return v < x_count_ ? Side::X : Side::Y; }

  // Canonical representative of vertex v.
  Element rep(VertexId v) const { return ctx_->unpack(rep_key(v)); }
  std::uint64_t rep_key(VertexId v) const {
    return v < x_count_ ? (std::uint64_t{v} << ctx_->n()) : y_rep_[v - x_count_];
  }

  // Vertex of the coset (side)·h.
  VertexId vertex_of(Side side, const Element& h) const { return vertex_of_key(side, ctx_->pack(h)); }
  VertexId vertex_of_key(Side side, std::uint64_t key) const {
    return side == Side::X ? static_cast<VertexId>(key >> ctx_->n()) : y_vertex_[key];
  }

  // phi: H -> E(Sigma) and its inverse.
  std::uint32_t edge_of(const Element& z) const { return edge_of_key_[ctx_->pack(z)]; }
  std::uint32_t edge_of_key(std::uint64_t key) const { return edge_of_key_[key]; }
  std::uint64_t element_key_of_edge(std::uint32_t e) const { return key_of_edge_[e]; }

  std::string label(VertexId v) const { return ctx_->format(rep(v)); }

  friend SigmaGraph build_sigma(const GroupContext& ctx, std::uint64_t cap);

 private:
  const GroupContext* ctx_ = nullptr;
  GraphData graph_;
  std::size_t x_count_ = 0;
  std::vector<std::uint64_t> y_rep_;
  std::vector<VertexId> y_vertex_;            // indexed by packed element
  std::vector<std::uint32_t> edge_of_key_;    // indexed by packed element
  std::vector<std::uint64_t> key_of_edge_;
};

inline SigmaGraph build_sigma(const GroupContext& ctx, std::uint64_t cap = kDefaultVertexCap) {
  const int n = ctx.n();
  const std::uint64_t order = ctx.packable() ? std::uint64_t{1} << ctx.total_bits() : 0;
  const std::uint64_t side_size = order >> n;
  detail::check_vertex_cap(ctx, 2 * side_size, cap, "Sigma");

  SigmaGraph s;
  s.ctx_ = &ctx;
  s.x_count_ = side_size;
  s.y_vertex_.assign(order, kNoVertex);
  s.y_rep_.reserve(side_size);
  const std::uint64_t ycount = std::uint64_t{1} << n;

  // Scanning in increasing key order meets each Y-coset first at its minimum.
  for (std::uint64_t z = 0; z < order; ++z) {
    if (s.y_vertex_[z] != kNoVertex) continue;
    const Element h = ctx.unpack(z);
    const auto id = static_cast<VertexId>(side_size + s.y_rep_.size());
    for (std::uint64_t bits = 0; bits < ycount; ++bits) {
      const std::uint64_t member = ctx.pack(ctx.mul(ctx.y_vec(bits), h));
      if (member < z || s.y_vertex_[member] != kNoVertex)
        throw ConsistencyError("Y-coset scan met a member below its minimum");
      s.y_vertex_[member] = id;
    }
    s.y_rep_.push_back(z);
  }
  if (s.y_rep_.size() != side_size) throw ConsistencyError("Y-side size mismatch");

  {
    std::vector<Edge> edges;
    edges.reserve(order);
    for (std::uint64_t z = 0; z < order; ++z)
      edges.emplace_back(static_cast<VertexId>(z >> n), s.y_vertex_[z]);
    s.graph_ = GraphData::from_edges(2 * side_size, edges);
  }
  s.graph_.side.assign(2 * side_size, 0);
  std::fill(s.graph_.side.begin() + static_cast<std::ptrdiff_t>(side_size), s.graph_.side.end(), 1);

  // X-side vertices only have larger neighbours, so edge id = CSR slot.
  s.edge_of_key_.assign(order, 0);
  s.key_of_edge_.assign(order, 0);
  for (std::uint64_t z = 0; z < order; ++z) {
    const auto u = static_cast<VertexId>(z >> n);
    auto nb = s.graph_.neighbors(u);
    const auto slot = s.graph_.offset(u) +
                      static_cast<std::uint64_t>(std::lower_bound(nb.begin(), nb.end(), s.y_vertex_[z]) - nb.begin());
    s.edge_of_key_[z] = static_cast<std::uint32_t>(slot);
    s.key_of_edge_[slot] = z;
  }
  return s;
}

// Sigma modulo the right action of H': the class of Xh is b(h), the class of
// Yh is a(h). Quotient ids: X-classes 0..2^n-1 by b, Y-classes 2^n + a.
struct DerivedQuotient {
  GraphData graph;
  std::vector<std::uint64_t> fiber_sizes;  // per quotient vertex
  bool valency_preserved = false;          // neighbours of each vertex lie in distinct fibres
};

inline DerivedQuotient quotient_by_derived(const SigmaGraph& sigma) {
  const GroupContext& ctx = sigma.context();
  const std::uint64_t classes = std::uint64_t{1} << ctx.n();
  const GraphData& g = sigma.graph();
  auto class_of = [&](VertexId v) -> VertexId {
    const Element rep = sigma.rep(v);
    return sigma.side_of(v) == Side::X ? static_cast<VertexId>(rep.b)
                                       : static_cast<VertexId>(classes + rep.a);
  };
  std::vector<VertexId> cls(g.vertex_count());
  DerivedQuotient q;
  q.fiber_sizes.assign(2 * classes, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    cls[v] = class_of(v);
    ++q.fiber_sizes[cls[v]];
  }
  std::vector<Edge> edges;
  q.valency_preserved = true;
  std::vector<VertexId> seen;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    seen.clear();
    for (VertexId v : g.neighbors(u)) {
      seen.push_back(cls[v]);
      if (u < v) edges.emplace_back(std::min(cls[u], cls[v]), std::max(cls[u], cls[v]));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) q.valency_preserved = false;
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  q.graph = GraphData::from_edges(2 * classes, edges);
  q.graph.side.assign(2 * classes, 0);
  std::fill(q.graph.side.begin() + static_cast<std::ptrdiff_t>(classes), q.graph.side.end(), 1);
  return q;
}

}  // namespace hn
