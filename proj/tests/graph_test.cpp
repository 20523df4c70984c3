#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "hn/cayley.hpp"
#include "hn/error.hpp"
#include "hn/graph.hpp"
#include "hn/random.hpp"
#include "oracles.hpp"
#include "test_graphs.hpp"

namespace {

using hn::Element;
using hn::GraphData;
using hn::GroupContext;
using hn::Side;
using hn::VertexId;
using namespace testgraphs;

// ---------------------------------------------------------------------------
// GraphData and the generic constructions.

TEST(GraphData, RejectsLoopsAndRepeats) {
  EXPECT_THROW(GraphData::from_edges(3, {{0, 0}}), hn::ConsistencyError);
  EXPECT_THROW(GraphData::from_edges(3, {{0, 1}, {1, 0}}), hn::ConsistencyError);
  EXPECT_THROW(GraphData::from_edges(3, {{0, 3}}), hn::ConsistencyError);
}

TEST(GraphData, SortedSymmetricAdjacency) {
  const auto g = GraphData::from_edges(4, {{3, 0}, {2, 1}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 3u);
  const auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<VertexId>(nb.begin(), nb.end()), (std::vector<VertexId>{1, 3}));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(2, 3));
  EXPECT_EQ(g.edges(), (std::vector<hn::Edge>{{0, 1}, {0, 3}, {1, 2}}));
}

TEST(Traversal, BfsMatchesOracle) {
  for (const auto& g : {petersen(), cycle(9), complete_bipartite(3, 5), path(6)}) {
    const auto dist = hn::bfs_distances(g, 0);
    const auto ref = oracle::bfs(adj(g), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(static_cast<int>(dist[v]), ref[v]);
  }
  const auto two = GraphData::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(hn::bfs_distances(two, 0)[2], hn::kNoVertex);
  EXPECT_FALSE(hn::is_connected(two));
  EXPECT_TRUE(hn::is_bipartite(cycle(6)));
  EXPECT_FALSE(hn::is_bipartite(cycle(5)));
}

TEST(LineGraph, SmallCases) {
  const auto c4 = hn::line_graph(cycle(4));
  EXPECT_EQ(c4.vertex_count(), 4u);
  EXPECT_EQ(c4.edge_count(), 4u);
  EXPECT_EQ(c4.degree_range(), (std::pair<std::size_t, std::size_t>{2, 2}));
  const auto tri = hn::line_graph(star(3));
  EXPECT_EQ(tri.vertex_count(), 3u);
  EXPECT_EQ(tri.edge_count(), 3u);
  // Petersen's line graph: 15 vertices, valency 4.
  const auto lp = hn::line_graph(petersen());
  EXPECT_EQ(lp.vertex_count(), 15u);
  EXPECT_EQ(lp.degree_range(), (std::pair<std::size_t, std::size_t>{4, 4}));
}

TEST(LineGraph, AdjacencyIsSharedEndpoint) {
  const auto g = petersen();
  const auto lg = hn::line_graph(g);
  const auto e = g.edges();
  for (VertexId a = 0; a < e.size(); ++a)
    for (VertexId b = a + 1; b < e.size(); ++b) {
      const bool share = e[a].first == e[b].first || e[a].first == e[b].second || e[a].second == e[b].first ||
                         e[a].second == e[b].second;
      EXPECT_EQ(lg.has_edge(a, b), share);
    }
}

TEST(Cliques, SmallCases) {
  EXPECT_EQ(hn::maximal_cliques(complete(4)), (std::vector<std::vector<VertexId>>{{0, 1, 2, 3}}));
  const auto c4 = hn::maximal_cliques(cycle(4));
  EXPECT_EQ(c4.size(), 4u);
  for (const auto& c : c4) EXPECT_EQ(c.size(), 2u);
  const auto k4 = hn::clique_graph(complete(4));
  EXPECT_EQ(k4.vertex_count(), 1u);
  EXPECT_EQ(k4.edge_count(), 0u);
  const auto p3 = hn::clique_graph(path(3));
  EXPECT_EQ(p3.vertex_count(), 2u);
  EXPECT_EQ(p3.edge_count(), 1u);
  EXPECT_THROW(hn::maximal_cliques(path(10), 5), hn::CapExceeded);
}

TEST(Cliques, MatchSubsetOracle) {
  for (const auto& g : {petersen(), hn::line_graph(petersen()), complete_bipartite(2, 3), cycle(3)}) {
    const auto found = hn::maximal_cliques(g);
    const std::set<std::vector<VertexId>> got(found.begin(), found.end());
    EXPECT_EQ(got.size(), found.size());
    EXPECT_EQ(got, oracle::maximal_cliques_small_degree(adj(g)));
  }
}

// ---------------------------------------------------------------------------
// File formats.

TEST(Export, EdgeListHeaderAndLines) {
  std::ostringstream os;
  hn::write_edgelist(os, complete_bipartite(2, 2), {2, "quotient"});
  EXPECT_EQ(os.str(), "# hn-graph n=2 kind=quotient vertices=4 edges=4\n0 2\n0 3\n1 2\n1 3\n");
}

TEST(Export, EdgeListRoundTrip) {
  const auto g = petersen();
  std::stringstream ss;
  hn::write_edgelist(ss, g, {3, "gamma"});
  hn::EdgeListHeader h;
  const auto back = hn::read_edgelist(ss, &h);
  EXPECT_EQ(h.n, 3);
  EXPECT_EQ(h.kind, "gamma");
  EXPECT_EQ(back.edges(), g.edges());
  std::istringstream broken("# hn-graph n=2 kind=sigma vertices=3 edges=2\n0 1\n");
  EXPECT_THROW(hn::read_edgelist(broken), hn::ParseError);
  std::istringstream headless("0 1\n");
  EXPECT_THROW(hn::read_edgelist(headless), hn::ParseError);
}

TEST(Export, DotParses) {
  const auto g = petersen();
  std::ostringstream os;
  hn::write_dot(os, g);
  const auto dot = oracle::read_dot(os.str());
  ASSERT_TRUE(dot.ok);
  EXPECT_EQ(dot.nodes.size(), 10u);
  const auto e = g.edges();
  EXPECT_EQ(dot.edges, std::set<hn::Edge>(e.begin(), e.end()));
}

TEST(Export, Labels) {
  std::ostringstream os;
  hn::write_labels(os, path(2), [](VertexId v) { return std::pair<std::string, std::string>{"X", std::to_string(v)}; });
  EXPECT_EQ(os.str(), "0\tX\t0\n1\tX\t1\n");
}

// ---------------------------------------------------------------------------
// Gamma and Sigma.

TEST(Gamma, ParametersAtTwo) {
  const GroupContext ctx(2);
  const auto gamma = hn::build_gamma(ctx);
  const auto& g = gamma.graph;
  EXPECT_EQ(g.vertex_count(), 1024u);
  EXPECT_EQ(g.edge_count(), 3072u);
  EXPECT_EQ(g.degree_range(), (std::pair<std::size_t, std::size_t>{6, 6}));
  EXPECT_TRUE(hn::is_connected(g));
  // Neighbours of the identity are S.
  std::set<VertexId> s;
  for (const auto& e : hn::connection_set(ctx)) s.insert(static_cast<VertexId>(ctx.pack(e)));
  const auto nb = g.neighbors(0);
  EXPECT_EQ(std::set<VertexId>(nb.begin(), nb.end()), s);
}

TEST(Gamma, EdgesAreLeftMultiples) {
  const GroupContext ctx(2);
  const auto g = hn::build_gamma(ctx).graph;
  for (const auto& [u, v] : g.edges()) {
    const Element q = ctx.mul(ctx.unpack(v), ctx.inv(ctx.unpack(u)));  // v u^-1 must lie in S
    const bool in_x = q.b == 0 && q.w == 0 && q.t_zero();
    const bool in_y = q.a == 0 && q.w == 0 && q.t_zero();
    EXPECT_TRUE((in_x || in_y) && !q.is_identity());
  }
}

TEST(Gamma, CapIsEnforced) {
  EXPECT_THROW(hn::build_gamma(GroupContext(3), 1000), hn::CapExceeded);
  EXPECT_THROW(hn::build_sigma(GroupContext(4)), hn::CapExceeded);
}

TEST(Coset, CanonicalRepresentatives) {
  const GroupContext ctx(2);
  Element h;
  h.a = 3;
  h.b = 2;
  h.w = 9;
  const auto xc = hn::canonical_coset(ctx, Side::X, h);
  EXPECT_EQ(xc.rep.a, 0u);
  EXPECT_EQ(xc.rep.b, 2u);
  EXPECT_EQ(xc.rep.w, 9u);
  EXPECT_EQ(hn::canonical_coset(ctx, Side::Y, ctx.x(0)).rep, ctx.x(0));
}

TEST(Coset, ConstantOnCosets) {
  for (int n : {2, 3}) {
    const GroupContext ctx(n);
    std::mt19937_64 rng(n);
    for (int s = 0; s < 10000; ++s) {
      const Element h = hn::random_element(ctx, rng);
      const std::uint64_t bits = rng() & ctx.row_mask();
      EXPECT_EQ(hn::canonical_coset(ctx, Side::X, ctx.mul(ctx.x_vec(bits), h)),
                hn::canonical_coset(ctx, Side::X, h));
      EXPECT_EQ(hn::canonical_coset(ctx, Side::Y, ctx.mul(ctx.y_vec(bits), h)),
                hn::canonical_coset(ctx, Side::Y, h));
    }
  }
}

TEST(Coset, YRepresentativeIsMinimalMember) {
  const GroupContext ctx(2);
  for (const auto& h : hn::enumerate_elements(ctx)) {
    const Element rep = hn::canonical_coset(ctx, Side::Y, h).rep;
    for (std::uint64_t b = 0; b < 4; ++b) EXPECT_FALSE(ctx.mul(ctx.y_vec(b), h) < rep);
  }
}

class SigmaAtTwo : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    ctx_ = new GroupContext(2);
    sigma_ = new hn::SigmaGraph(hn::build_sigma(*ctx_));
  }
  static void TearDownTestSuite() {
    delete sigma_;
    delete ctx_;
  }
  static GroupContext* ctx_;
  static hn::SigmaGraph* sigma_;
};
GroupContext* SigmaAtTwo::ctx_ = nullptr;
hn::SigmaGraph* SigmaAtTwo::sigma_ = nullptr;

TEST_F(SigmaAtTwo, Parameters) {
  const auto& g = sigma_->graph();
  EXPECT_EQ(g.vertex_count(), 512u);
  EXPECT_EQ(g.edge_count(), 1024u);
  EXPECT_EQ(g.degree_range(), (std::pair<std::size_t, std::size_t>{4, 4}));
  EXPECT_EQ(sigma_->x_count(), 256u);
  EXPECT_EQ(sigma_->y_count(), 256u);
  EXPECT_TRUE(hn::is_connected(g));
  std::vector<std::uint8_t> colour;
  ASSERT_TRUE(hn::is_bipartite(g, &colour));
  for (const auto& [u, v] : g.edges()) EXPECT_NE(g.side[u], g.side[v]);
}

// Adjacency from the coset definition: Xh ~ Yg iff the cosets meet.
TEST_F(SigmaAtTwo, AdjacencyIsCosetIntersection) {
  const auto& ctx = *ctx_;
  const auto& g = sigma_->graph();
  std::vector<std::set<std::uint64_t>> members(g.vertex_count());
  for (const auto& h : hn::enumerate_elements(ctx)) {
    members[sigma_->vertex_of(Side::X, h)].insert(ctx.pack(h));
    members[sigma_->vertex_of(Side::Y, h)].insert(ctx.pack(h));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) ASSERT_EQ(members[v].size(), 4u);
  for (VertexId u = 0; u < sigma_->x_count(); ++u)
    for (VertexId v = static_cast<VertexId>(sigma_->x_count()); v < g.vertex_count(); ++v) {
      bool meet = false;
      for (auto z : members[u]) meet = meet || members[v].count(z);
      EXPECT_EQ(g.has_edge(u, v), meet);
    }
}

TEST_F(SigmaAtTwo, PhiIsABijection) {
  const auto& ctx = *ctx_;
  const auto& g = sigma_->graph();
  const auto edges = g.edges();
  std::set<std::uint32_t> ids;
  for (const auto& h : hn::enumerate_elements(ctx)) {
    const auto e = sigma_->edge_of(h);
    ids.insert(e);
    EXPECT_EQ(edges[e], (hn::Edge{sigma_->vertex_of(Side::X, h), sigma_->vertex_of(Side::Y, h)}));
    EXPECT_EQ(sigma_->element_key_of_edge(e), ctx.pack(h));
  }
  EXPECT_EQ(ids.size(), 1024u);
}

TEST_F(SigmaAtTwo, CliquesOfGammaAreCosets) {
  const auto& ctx = *ctx_;
  const auto gamma = hn::build_gamma(ctx).graph;
  const auto ref = oracle::maximal_cliques_small_degree(adj(gamma));
  const auto found = hn::maximal_cliques(gamma);
  EXPECT_EQ(found.size(), 512u);
  EXPECT_EQ(std::set<std::vector<VertexId>>(found.begin(), found.end()), ref);
  std::set<VertexId> vertices;
  for (const auto& c : found) {
    ASSERT_EQ(c.size(), 4u);
    const Element h = ctx.unpack(c[0]);
    const Side side = sigma_->vertex_of(Side::X, h) == sigma_->vertex_of(Side::X, ctx.unpack(c[1])) ? Side::X : Side::Y;
    for (auto m : c) EXPECT_EQ(sigma_->vertex_of(side, ctx.unpack(m)), sigma_->vertex_of(side, h));
    vertices.insert(sigma_->vertex_of(side, h));
  }
  EXPECT_EQ(vertices.size(), 512u);
}

TEST_F(SigmaAtTwo, LineGraphIsGammaThroughPhi) {
  const auto& ctx = *ctx_;
  const auto gamma = hn::build_gamma(ctx).graph;
  const auto lg = hn::line_graph(sigma_->graph());
  ASSERT_EQ(lg.vertex_count(), gamma.vertex_count());
  ASSERT_EQ(lg.edge_count(), gamma.edge_count());
  for (const auto& [a, b] : lg.edges())
    EXPECT_TRUE(gamma.has_edge(static_cast<VertexId>(sigma_->element_key_of_edge(a)),
                               static_cast<VertexId>(sigma_->element_key_of_edge(b))));
}

TEST_F(SigmaAtTwo, QuotientIsCompleteBipartiteCover) {
  const auto q = hn::quotient_by_derived(*sigma_);
  EXPECT_EQ(q.graph.vertex_count(), 8u);
  EXPECT_EQ(q.graph.edge_count(), 16u);
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = 4; v < 8; ++v) EXPECT_TRUE(q.graph.has_edge(u, v));
  for (auto f : q.fiber_sizes) EXPECT_EQ(f, 64u);
  EXPECT_TRUE(q.valency_preserved);
}

TEST(SigmaAtThree, ParametersAndQuotient) {
  const GroupContext ctx(3);
  const auto sigma = hn::build_sigma(ctx);
  const auto& g = sigma.graph();
  EXPECT_EQ(g.vertex_count(), std::size_t{1} << 22);
  EXPECT_EQ(g.edge_count(), std::size_t{1} << 24);
  EXPECT_EQ(g.degree_range(), (std::pair<std::size_t, std::size_t>{8, 8}));
  const auto q = hn::quotient_by_derived(sigma);
  EXPECT_EQ(q.graph.vertex_count(), 16u);
  EXPECT_EQ(q.graph.edge_count(), 64u);
  EXPECT_TRUE(q.valency_preserved);

  // Line graph vs Gamma, sampled: phi(z) and phi(s z) share an end.
  std::mt19937_64 rng(9);
  const auto s = hn::connection_set(ctx);
  const auto edges = g.edges();
  for (int i = 0; i < 2000; ++i) {
    const Element z = hn::random_element(ctx, rng);
    const auto e1 = edges[sigma.edge_of(z)];
    for (const auto& gen : s) {
      const auto e2 = edges[sigma.edge_of(ctx.mul(gen, z))];
      EXPECT_TRUE(e1.first == e2.first || e1.second == e2.second);
    }
  }
}

}  // namespace
