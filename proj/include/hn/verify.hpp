#pragma once

// Verification batteries behind `hn verify`: group identities, graph
// parameters and symmetry checks, collected into a deterministic report.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "hn/autsearch.hpp"
#include "hn/automorphism.hpp"
#include "hn/cayley.hpp"
#include "hn/graph.hpp"
#include "hn/group.hpp"
#include "hn/hall.hpp"
#include "hn/presentation.hpp"
#include "hn/random.hpp"
#include "hn/symmetry.hpp"

namespace hn {

enum class CheckStatus { kPass, kFail, kSkip, kInconclusive };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkip: return "skip";
    case CheckStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  nlohmann::json expected;
  nlohmann::json actual;
  std::int64_t runtime_ms = 0;
};

struct VerificationReport {
  int n = 0;
  std::string suite;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::kFail) return false;
    return true;
  }

  // runtime_ms is reported as 0 unless `timings` is set, so that identical
  // runs serialise to identical bytes.
  nlohmann::ordered_json to_json(bool timings = false) const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["suite"] = suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json cj;
      cj["name"] = c.name;
      cj["status"] = status_name(c.status);
      cj["expected"] = c.expected;
      cj["actual"] = c.actual;
      cj["runtime_ms"] = timings ? c.runtime_ms : 0;
      j["checks"].push_back(std::move(cj));
    }
    j["overall"] = passed() ? "pass" : "fail";
    return j;
  }
};

struct VerifyOptions {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::uint64_t vertex_cap = kDefaultVertexCap;
  bool run_aut_search = true;
};

struct Outcome {
  CheckStatus status;
  nlohmann::json expected;
  nlohmann::json actual;
};

inline Outcome compare(const nlohmann::json& expected, const nlohmann::json& actual) {
  return {expected == actual ? CheckStatus::kPass : CheckStatus::kFail, expected, actual};
}

inline Outcome skipped(const std::string& why) { return {CheckStatus::kSkip, nullptr, why}; }

class CheckRunner {
 public:
  explicit CheckRunner(VerificationReport& report) : report_(report) {}

  void operator()(const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    c.name = name;
    try {
      Outcome o = body();
      c.status = o.status;
      c.expected = std::move(o.expected);
      c.actual = std::move(o.actual);
    } catch (const CapExceeded& e) {
      c.status = CheckStatus::kSkip;
      c.actual = std::string("resource cap: ") + e.what();
    } catch (const std::exception& e) {
      c.status = CheckStatus::kFail;
      c.actual = std::string("exception: ") + e.what();
    }
    c.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    report_.checks.push_back(std::move(c));
  }

 private:
  VerificationReport& report_;
};

// ---------------------------------------------------------------------------
// Reusable group-level batteries. Each returns the number of failing samples.

namespace battery {

// Subgroup generated by `gens`, by closure under right multiplication.
inline std::vector<Element> generated_subgroup(const GroupContext& ctx, const std::vector<Element>& gens,
                                               std::size_t limit) {
  std::vector<Element> out{ctx.identity()};
  std::set<Element> seen{ctx.identity()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      Element h = ctx.mul(out[i], g);
      if (seen.insert(h).second) {
        out.push_back(h);
        if (out.size() > limit) throw CapExceeded("subgroup closure exceeded its limit");
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Commutator-defined generators of H': [x_i,y_j] and [[x_i,y_j],x_k], i<k.
inline std::vector<Element> derived_generators(const GroupContext& ctx) {
  std::vector<Element> gens;
  for (int i = 0; i < ctx.n(); ++i)
    for (int j = 0; j < ctx.n(); ++j) {
      const Element c = ctx.comm(ctx.x(i), ctx.y(j));
      gens.push_back(c);
      for (int k = i + 1; k < ctx.n(); ++k) gens.push_back(ctx.comm(c, ctx.x(k)));
    }
  return gens;
}

template <class Rng>
std::uint64_t associativity(const GroupContext& ctx, Rng& rng, std::uint64_t samples) {
  std::uint64_t bad = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element g = random_element(ctx, rng), h = random_element(ctx, rng), k = random_element(ctx, rng);
    if (!(ctx.mul(ctx.mul(g, h), k) == ctx.mul(g, ctx.mul(h, k)))) ++bad;
  }
  return bad;
}

// Left fold of a random word vs the product of its two halves.
template <class Rng>
std::uint64_t strategy_independence(const GroupContext& ctx, Rng& rng, std::uint64_t samples) {
  std::uint64_t bad = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    Word word(20);
    for (auto& sym : word) sym = random_symbol(ctx, rng);
    const std::size_t cut = rng() % 21;
    const Word lhs(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(cut));
    const Word rhs(word.begin() + static_cast<std::ptrdiff_t>(cut), word.end());
    if (!(ctx.evaluate_word(word) == ctx.mul(ctx.evaluate_word(lhs), ctx.evaluate_word(rhs)))) ++bad;
  }
  return bad;
}

template <class Rng>
std::uint64_t inverse_law(const GroupContext& ctx, Rng& rng, std::uint64_t samples) {
  std::uint64_t bad = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element g = random_element(ctx, rng);
    const Element gi = ctx.inv(g);
    if (!ctx.mul(g, gi).is_identity() || !ctx.mul(gi, g).is_identity()) ++bad;
  }
  return bad;
}

// [[a,b],c] [[b,c],a] [[c,a],b] = 1
template <class Rng>
std::uint64_t jacobi(const GroupContext& ctx, Rng& rng, std::uint64_t samples) {
  std::uint64_t bad = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element a = random_element(ctx, rng), b = random_element(ctx, rng), c = random_element(ctx, rng);
    const Element p = ctx.mul(ctx.mul(ctx.comm(ctx.comm(a, b), c), ctx.comm(ctx.comm(b, c), a)),
                              ctx.comm(ctx.comm(c, a), b));
    if (!p.is_identity()) ++bad;
  }
  return bad;
}

// [[x,y^-1],z]^y [[y,z^-1],x]^z [[z,x^-1],y]^x = 1
template <class Rng>
std::uint64_t witt_hall(const GroupContext& ctx, Rng& rng, std::uint64_t samples) {
  std::uint64_t bad = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element x = random_element(ctx, rng), y = random_element(ctx, rng), z = random_element(ctx, rng);
    const Element t1 = ctx.conj(ctx.comm(ctx.comm(x, ctx.inv(y)), z), y);
    const Element t2 = ctx.conj(ctx.comm(ctx.comm(y, ctx.inv(z)), x), z);
    const Element t3 = ctx.conj(ctx.comm(ctx.comm(z, ctx.inv(x)), y), x);
    if (!ctx.mul(ctx.mul(t1, t2), t3).is_identity()) ++bad;
  }
  return bad;
}

// [[[g,h],k],l] = 1 and [[g,h],k] lands in H_3.
template <class Rng>
std::uint64_t class_three(const GroupContext& ctx, Rng& rng, std::uint64_t samples) {
  std::uint64_t bad = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element g = random_element(ctx, rng), h = random_element(ctx, rng), k = random_element(ctx, rng),
                  l = random_element(ctx, rng);
    const Element c3 = ctx.comm(ctx.comm(g, h), k);
    if (!c3.in_h3() || !ctx.comm(c3, l).is_identity()) ++bad;
  }
  return bad;
}

// Elements of H_3 commute with everything.
template <class Rng>
std::uint64_t h3_central(const GroupContext& ctx, Rng& rng, std::uint64_t samples) {
  std::uint64_t bad = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element z = random_h3(ctx, rng), g = random_element(ctx, rng);
    if (!(ctx.mul(z, g) == ctx.mul(g, z))) ++bad;
  }
  return bad;
}

// H' is elementary abelian: elements with a=b=0 square to 1 and commute.
template <class Rng>
std::uint64_t derived_elementary_abelian(const GroupContext& ctx, Rng& rng, std::uint64_t samples) {
  std::uint64_t bad = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element u = random_derived(ctx, rng), v = random_derived(ctx, rng);
    if (!ctx.mul(u, u).is_identity() || !(ctx.mul(u, v) == ctx.mul(v, u))) ++bad;
  }
  return bad;
}

// [[x,y],x'] = [[x',y],x] for generators.
inline std::uint64_t generator_symmetry(const GroupContext& ctx) {
  std::uint64_t bad = 0;
  for (int i = 0; i < ctx.n(); ++i)
    for (int k = 0; k < ctx.n(); ++k)
      for (int j = 0; j < ctx.n(); ++j)
        if (!(ctx.comm(ctx.comm(ctx.x(i), ctx.y(j)), ctx.x(k)) ==
              ctx.comm(ctx.comm(ctx.x(k), ctx.y(j)), ctx.x(i))))
          ++bad;
  return bad;
}

// [[b,a],b'] = [[a,b],b'] = 1 for random a and all b, b' in Y.
template <class Rng>
std::uint64_t y_absorption(const GroupContext& ctx, Rng& rng, std::uint64_t samples) {
  std::uint64_t bad = 0;
  const std::uint64_t count = std::uint64_t{1} << ctx.n();
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element a = random_element(ctx, rng);
    for (std::uint64_t b = 0; b < count; ++b) {
      const Element yb = ctx.y_vec(b);
      const Element ba = ctx.comm(yb, a), ab = ctx.comm(a, yb);
      for (std::uint64_t b2 = 0; b2 < count; ++b2) {
        const Element yb2 = ctx.y_vec(b2);
        if (!ctx.comm(ba, yb2).is_identity() || !ctx.comm(ab, yb2).is_identity()) ++bad;
      }
    }
  }
  return bad;
}

// M-part of [c,d] is the outer product supp(c) x supp(d), for all c in X,
// d in Y.
inline std::uint64_t product_formula(const GroupContext& ctx) {
  std::uint64_t bad = 0;
  const int n = ctx.n();
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < count; ++a)
    for (std::uint64_t b = 0; b < count; ++b) {
      const Element c = ctx.comm(ctx.x_vec(a), ctx.y_vec(b));
      std::uint64_t outer = 0;
      for (int i = 0; i < n; ++i)
        if ((a >> i) & 1u) outer |= b << (i * n);
      if (!c.in_derived() || c.w != outer) ++bad;
    }
  return bad;
}

template <class Rng>
std::uint64_t abelianization_homomorphism(const GroupContext& ctx, Rng& rng, std::uint64_t samples) {
  std::uint64_t bad = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element g = random_element(ctx, rng), h = random_element(ctx, rng);
    const auto p = ctx.abelianization(ctx.mul(g, h));
    const auto pg = ctx.abelianization(g), ph = ctx.abelianization(h);
    if (p.a != (pg.a ^ ph.a) || p.b != (pg.b ^ ph.b)) ++bad;
  }
  return bad;
}

template <class Rng>
std::uint64_t automorphism_multiplicative(const GroupContext& ctx, const InducedAutomorphism& aut, Rng& rng,
                                          std::uint64_t samples) {
  std::uint64_t bad = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element g = random_element(ctx, rng), h = random_element(ctx, rng);
    if (!(aut(ctx.mul(g, h)) == ctx.mul(aut(g), aut(h)))) ++bad;
  }
  return bad;
}

}  // namespace battery

// ---------------------------------------------------------------------------
// Suites.

inline void run_core_suite(const GroupContext& ctx, const VerifyOptions& opt, CheckRunner& run) {
  const int n = ctx.n();
  std::mt19937_64 rng(opt.seed);
  const std::uint64_t samples = opt.samples;

  run("order.formula-vs-normal-form-dimension", [&] {
    nlohmann::json exp = nlohmann::json::object(), act = nlohmann::json::object();
    for (int k = 2; k <= 6; ++k) {
      exp[std::to_string(k)] = (k * k * k + k * k + 4 * k) / 2;
      act[std::to_string(k)] = GroupContext(k).total_bits();
    }
    return compare(exp, act);
  });

  run("order.enumeration", [&] {
    if (ctx.total_bits() > kDefaultEnumerationCap) return skipped("2^total_bits exceeds enumeration cap");
    std::uint64_t count = 0, distinct = 0;
    Element prev;
    bool first = true;
    for_each_element(ctx, [&](const Element& e) {
      ++count;
      if (first || prev < e) ++distinct;
      prev = e;
      first = false;
    });
    return compare(nlohmann::json{{"elements", std::uint64_t{1} << ctx.total_bits()}},
                   nlohmann::json{{"elements", distinct}});
  });

  run("order.closure", [&] {
    // Products of normal forms are normal forms (every block inside its range)
    // and recover their factors: exhaustive pairs when small, else sampled.
    const bool exhaustive = ctx.total_bits() <= 10;
    std::uint64_t bad = 0, tested = 0;
    auto in_range = [&](const Element& e) {
      return ctx.pack(e) < (std::uint64_t{1} << ctx.total_bits()) && ctx.unpack(ctx.pack(e)) == e;
    };
    if (exhaustive) {
      const auto all = enumerate_elements(ctx);
      for (const auto& g : all)
        for (const auto& h : all) {
          ++tested;
          if (!in_range(ctx.mul(g, h))) ++bad;
        }
    } else {
      for (std::uint64_t s = 0; s < samples; ++s, ++tested)
        if (!in_range(ctx.mul(random_element(ctx, rng), random_element(ctx, rng)))) ++bad;
    }
    return compare(nlohmann::json{{"failures", 0}, {"pairs", tested}},
                   nlohmann::json{{"failures", bad}, {"pairs", tested}});
  });

  run("presentation.relators", [&] {
    const auto rep = verify_presentation(ctx);
    nlohmann::json exp = nlohmann::json::object(), act = nlohmann::json::object();
    for (const auto& f : rep.relators) {
      exp[f.name] = 0;
      act[f.name] = f.failures;
    }
    return compare(exp, act);
  });

  run("presentation.basis-definitions", [&] {
    const auto rep = verify_presentation(ctx);
    return compare(0, rep.definitions.failures);
  });

  run("structure.derived-subgroup", [&] {
    if (ctx.total_bits() > 24) return skipped("H' too large to close");
    const std::uint64_t expected = std::uint64_t{1} << (n * n * (n + 1) / 2);
    const auto sub = battery::generated_subgroup(ctx, battery::derived_generators(ctx), expected);
    bool all_derived = true;
    for (const auto& e : sub) all_derived = all_derived && e.in_derived();
    return compare(nlohmann::json{{"order", expected}, {"equals_ab_zero_set", true}},
                   nlohmann::json{{"order", sub.size()}, {"equals_ab_zero_set", all_derived && sub.size() == expected}});
  });

  run("structure.abelianization-kernel", [&] {
    if (ctx.total_bits() > 10) {
      return compare(0, battery::abelianization_homomorphism(ctx, rng, samples));
    }
    std::set<std::pair<std::uint64_t, std::uint64_t>> images;
    std::uint64_t kernel = 0;
    for_each_element(ctx, [&](const Element& e) {
      const auto ab = ctx.abelianization(e);
      images.insert({ab.a, ab.b});
      if (ab.a == 0 && ab.b == 0) ++kernel;
    });
    const std::uint64_t hom_bad = battery::abelianization_homomorphism(ctx, rng, samples);
    return compare(nlohmann::json{{"image", std::uint64_t{1} << (2 * n)},
                                  {"kernel", std::uint64_t{1} << (n * n * (n + 1) / 2)},
                                  {"homomorphism_failures", 0}},
                   nlohmann::json{{"image", images.size()}, {"kernel", kernel}, {"homomorphism_failures", hom_bad}});
  });

  run("structure.exponent", [&] {
    if (ctx.total_bits() > 10) return skipped("exhaustive order scan only at n=2");
    std::uint64_t exponent = 1;
    for_each_element(ctx, [&](const Element& e) {
      std::uint64_t order = 1;
      for (Element p = e; !p.is_identity(); p = ctx.mul(p, e)) ++order;
      exponent = std::max(exponent, order);
    });
    return Outcome{CheckStatus::kPass, nullptr, exponent};
  });

  run("identity.associativity", [&] { return compare(0, battery::associativity(ctx, rng, samples)); });
  run("identity.collection-strategy", [&] { return compare(0, battery::strategy_independence(ctx, rng, samples)); });
  run("identity.inverse", [&] { return compare(0, battery::inverse_law(ctx, rng, samples)); });
  run("identity.jacobi", [&] { return compare(0, battery::jacobi(ctx, rng, samples)); });
  run("identity.witt-hall", [&] { return compare(0, battery::witt_hall(ctx, rng, samples)); });
  run("identity.class-3", [&] { return compare(0, battery::class_three(ctx, rng, samples)); });
  run("identity.h3-central", [&] { return compare(0, battery::h3_central(ctx, rng, samples)); });
  run("identity.derived-elementary-abelian",
      [&] { return compare(0, battery::derived_elementary_abelian(ctx, rng, samples)); });
  run("identity.generator-symmetry", [&] { return compare(0, battery::generator_symmetry(ctx)); });
  run("identity.y-absorption", [&] { return compare(0, battery::y_absorption(ctx, rng, samples / 10 + 1)); });
  run("identity.product-formula", [&] { return compare(0, battery::product_formula(ctx)); });

  run("automorphism.induced-multiplicative", [&] {
    std::vector<InducedAutomorphism> auts;
    if (n <= 2) {
      for (const auto& g1 : general_linear_group(n))
        for (const auto& g2 : general_linear_group(n)) auts.emplace_back(ctx, g1, g2);
    } else {
      auts = gl_pair_generators(ctx);
    }
    const std::uint64_t per = std::max<std::uint64_t>(1, samples / auts.size());
    std::uint64_t bad = 0;
    for (const auto& aut : auts) bad += battery::automorphism_multiplicative(ctx, aut, rng, per);
    return compare(nlohmann::json{{"failures", 0}}, nlohmann::json{{"failures", bad}});
  });

  run("hall.basic-commutator-counts", [&] {
    nlohmann::json exp = nlohmann::json::array(), act = nlohmann::json::array();
    for (int r = 1; r <= 10; ++r) {
      exp.push_back({hall::bc2_size(r), hall::bc3_size(r)});
      act.push_back({hall::enumerate_basic_commutators(r, 2).size(), hall::enumerate_basic_commutators(r, 3).size()});
    }
    return compare(exp, act);
  });

  run("hall.dimension-identity", [&] {
    std::uint64_t bad = 0;
    for (int k = 2; k <= 10; ++k) {
      try {
        const auto t = hall::dimension_table(k);
        if (t.u + t.v != t.m_fk) ++bad;
      } catch (const ConsistencyError&) {
        ++bad;
      }
    }
    return compare(0, bad);
  });
}

inline void run_graph_suite(const GroupContext& ctx, const VerifyOptions& opt, CheckRunner& run,
                            const SigmaGraph* sigma) {
  const int n = ctx.n();
  const std::uint64_t order = ctx.packable() ? std::uint64_t{1} << ctx.total_bits() : 0;
  const std::uint64_t valency = std::uint64_t{1} << n;

  run("graphs.sigma", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    const auto& g = sigma->graph();
    const auto [lo, hi] = g.degree_range();
    std::uint64_t xs = 0;
    for (auto s : g.side) xs += (s == 0);
    return compare(nlohmann::json{{"vertices", 2 * order / valency},
                                  {"edges", order},
                                  {"valency", valency},
                                  {"bipartite", true},
                                  {"parts", {order / valency, order / valency}},
                                  {"connected", true}},
                   nlohmann::json{{"vertices", g.vertex_count()},
                                  {"edges", g.edge_count()},
                                  {"valency", lo == hi ? lo : 0},
                                  {"bipartite", is_bipartite(g)},
                                  {"parts", {xs, g.vertex_count() - xs}},
                                  {"connected", is_connected(g)}});
  });

  run("graphs.gamma", [&] {
    const auto gamma = build_gamma(ctx, opt.vertex_cap);
    const auto& g = gamma.graph;
    const auto [lo, hi] = g.degree_range();
    const std::uint64_t val = 2 * (valency - 1);
    return compare(nlohmann::json{{"vertices", order}, {"edges", order * val / 2}, {"valency", val}, {"connected", true}},
                   nlohmann::json{{"vertices", g.vertex_count()},
                                  {"edges", g.edge_count()},
                                  {"valency", lo == hi ? lo : 0},
                                  {"connected", is_connected(g)}});
  });

  run("graphs.clique-line-duality", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    if (order > kDefaultCliqueCap) return skipped("clique enumeration only up to 4096 vertices");
    const auto gamma = build_gamma(ctx, opt.vertex_cap);
    const auto cliques = maximal_cliques(gamma.graph);
    // Map each clique to a coset vertex of Sigma.
    std::uint64_t non_coset = 0, wrong_size = 0;
    std::vector<VertexId> clique_vertex;
    for (const auto& c : cliques) {
      if (c.size() != valency) ++wrong_size;
      const Element first = ctx.unpack(c.front());
      VertexId target = kNoVertex;
      for (Side side : {Side::X, Side::Y}) {
        const VertexId v = sigma->vertex_of(side, first);
        bool all = true;
        for (VertexId m : c) all = all && sigma->vertex_of(side, ctx.unpack(m)) == v;
        if (all) target = v;
      }
      if (target == kNoVertex) ++non_coset;
      clique_vertex.push_back(target);
    }
    bool clique_iso = non_coset == 0;
    if (clique_iso) {
      const auto cg = clique_graph(gamma.graph, cliques);
      std::set<Edge> mapped;
      for (const auto& [a, b] : cg.edges())
        mapped.insert({std::min(clique_vertex[a], clique_vertex[b]), std::max(clique_vertex[a], clique_vertex[b])});
      const auto se = sigma->graph().edges();
      clique_iso = mapped == std::set<Edge>(se.begin(), se.end()) &&
                   std::set<VertexId>(clique_vertex.begin(), clique_vertex.end()).size() == cliques.size();
    }
    // line_graph(Sigma) vs Gamma through phi.
    const auto lg = line_graph(sigma->graph());
    std::set<Edge> mapped;
    for (const auto& [a, b] : lg.edges()) {
      const auto ka = static_cast<VertexId>(sigma->element_key_of_edge(a));
      const auto kb = static_cast<VertexId>(sigma->element_key_of_edge(b));
      mapped.insert({std::min(ka, kb), std::max(ka, kb)});
    }
    const auto ge = gamma.graph.edges();
    const bool line_iso = mapped == std::set<Edge>(ge.begin(), ge.end());
    return compare(nlohmann::json{{"cliques", order * 2 / valency}, {"wrong_size", 0}, {"non_coset", 0},
                                  {"clique_graph_iso_sigma", true}, {"line_graph_iso_gamma", true}},
                   nlohmann::json{{"cliques", cliques.size()}, {"wrong_size", wrong_size}, {"non_coset", non_coset},
                                  {"clique_graph_iso_sigma", clique_iso}, {"line_graph_iso_gamma", line_iso}});
  });

  run("graphs.derived-quotient", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    const auto q = quotient_by_derived(*sigma);
    const auto [lo, hi] = q.graph.degree_range();
    const std::uint64_t fiber = order / valency / valency;
    bool uniform = true;
    for (auto f : q.fiber_sizes) uniform = uniform && f == fiber;
    return compare(nlohmann::json{{"vertices", 2 * valency}, {"edges", valency * valency}, {"valency", valency},
                                  {"fiber", fiber}, {"uniform_fibers", true}, {"valency_preserved", true}},
                   nlohmann::json{{"vertices", q.graph.vertex_count()}, {"edges", q.graph.edge_count()},
                                  {"valency", lo == hi ? lo : 0}, {"fiber", q.fiber_sizes.front()},
                                  {"uniform_fibers", uniform}, {"valency_preserved", q.valency_preserved}});
  });
}

// Layer sizes of the two distance diagrams at n=2.
inline const std::vector<std::uint64_t> kLayersFromX2 = {1, 4, 12, 36, 54, 108, 108, 108, 81};
inline const std::vector<std::uint64_t> kLayersFromY2 = {1, 4, 12, 36, 81, 108, 135, 108, 27};
// Cell sizes per distance (node values of the published diagrams, n=2).
inline const std::vector<std::vector<std::uint64_t>> kCellsFromX2 = {{1}, {4}, {12}, {36}, {54}, {108}, {108}, {108}, {81}};
inline const std::vector<std::vector<std::uint64_t>> kCellsFromY2 = {{1}, {4}, {12}, {36}, {9, 72}, {108}, {27, 108}, {108}, {27}};

inline std::vector<std::vector<std::uint64_t>> cell_sizes_by_distance(const GraphData& g, VertexId root,
                                                                      const std::vector<std::uint32_t>& cell_of) {
  const auto dist = bfs_distances(g, root);
  std::map<std::uint32_t, std::pair<std::uint32_t, std::uint64_t>> cells;  // cell -> (distance, size)
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& c = cells[cell_of[v]];
    c.first = dist[v];
    ++c.second;
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& [id, c] : cells) {
    if (c.first >= out.size()) out.resize(c.first + 1);
    out[c.first].push_back(c.second);
  }
  for (auto& layer : out) std::sort(layer.begin(), layer.end());
  return out;
}

inline void run_symmetry_suite(const GroupContext& ctx, const VerifyOptions& opt, CheckRunner& run,
                               const SigmaGraph* sigma) {
  const int n = ctx.n();
  std::mt19937_64 rng(opt.seed ^ 0x5eedULL);
  const std::uint64_t valency = std::uint64_t{1} << n;
  const bool small = ctx.total_bits() <= 10;

  run("symmetry.right-action", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    const auto& g = sigma->graph();
    std::uint64_t non_aut = 0, hom_bad = 0;
    std::vector<VertexPermutation> gens;
    for (int i = 0; i < n; ++i)
      for (const Element& h : {ctx.x(i), ctx.y(i)}) {
        gens.push_back(right_action(*sigma, h));
        if (!gens.back().is_automorphism_of(g)) ++non_aut;
      }
    const std::uint64_t pairs = small ? 1000 : 3;
    for (std::uint64_t s = 0; s < pairs; ++s) {
      const Element a = random_element(ctx, rng), b = random_element(ctx, rng);
      const auto pa = right_action(*sigma, a), pb = right_action(*sigma, b);
      if (!(pa.then(pb) == right_action(*sigma, ctx.mul(a, b)))) ++hom_bad;
    }
    const auto orb = orbits(gens, g.vertex_count());
    return compare(nlohmann::json{{"non_automorphisms", 0}, {"homomorphism_failures", 0}, {"vertex_orbits", 2},
                                  {"orbit_sizes", {sigma->x_count(), sigma->y_count()}}},
                   nlohmann::json{{"non_automorphisms", non_aut}, {"homomorphism_failures", hom_bad},
                                  {"vertex_orbits", orb.size()},
                                  {"orbit_sizes", orb.size() == 2 ? nlohmann::json{orb[0].size(), orb[1].size()}
                                                                  : nlohmann::json(nullptr)}});
  });

  run("symmetry.edge-regular", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    // Image of the base edge {X, Y} under every h.
    const auto& g = sigma->graph();
    const std::uint64_t order = std::uint64_t{1} << ctx.total_bits();
    std::vector<bool> hit(g.edge_count(), false);
    std::uint64_t distinct = 0, not_edge = 0;
    for (std::uint64_t z = 0; z < order; ++z) {
      const Element h = ctx.unpack(z);
      // X·h and Y·h: the images of the base edge's ends.
      const VertexId u = sigma->vertex_of(Side::X, h);
      const VertexId v = sigma->vertex_of(Side::Y, h);
      if (!g.has_edge(u, v)) {
        ++not_edge;
        continue;
      }
      auto nb = g.neighbors(u);
      const auto e = g.offset(u) + static_cast<std::uint64_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
      if (!hit[e]) {
        hit[e] = true;
        ++distinct;
      }
    }
    return compare(nlohmann::json{{"edge_orbit", g.edge_count()}, {"not_edges", 0}},
                   nlohmann::json{{"edge_orbit", distinct}, {"not_edges", not_edge}});
  });

  run("symmetry.gl-action", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    const auto& g = sigma->graph();
    std::vector<InducedAutomorphism> auts;
    if (n <= 2) {
      for (const auto& g1 : general_linear_group(n))
        for (const auto& g2 : general_linear_group(n)) auts.emplace_back(ctx, g1, g2);
    } else {
      auts = gl_pair_generators(ctx);
    }
    std::uint64_t bad = 0;
    std::vector<PointMap> maps;
    for (const auto& aut : auts) {
      if (small) {
        const auto p = gl_action(*sigma, aut);
        if (!p.is_automorphism_of(g) || p(sigma->vertex_x()) != sigma->vertex_x() ||
            p(sigma->vertex_y()) != sigma->vertex_y())
          ++bad;
      } else {
        const auto m = gl_action_map(*sigma, aut);
        if (m(sigma->vertex_x()) != sigma->vertex_x() || m(sigma->vertex_y()) != sigma->vertex_y()) ++bad;
      }
      maps.push_back(gl_action_map(*sigma, aut));
    }
    // Orbits on the neighbourhood of X: Y fixed, the other 2^n - 1 in one orbit.
    std::set<std::size_t> orbit_sizes;
    std::vector<std::uint64_t> sizes;
    std::set<VertexId> done;
    for (VertexId v : g.neighbors(sigma->vertex_x())) {
      if (done.count(v)) continue;
      const auto o = orbit_of(v, maps);
      done.insert(o.begin(), o.end());
      sizes.push_back(o.size());
    }
    std::sort(sizes.begin(), sizes.end());
    return compare(nlohmann::json{{"failures", 0}, {"neighbourhood_orbits", {1, valency - 1}}},
                   nlohmann::json{{"failures", bad}, {"neighbourhood_orbits", sizes}});
  });

  run("symmetry.local-2-arc-transitive", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    const auto r = check_local_2at(*sigma);
    const std::uint64_t arcs = valency * (valency - 1);
    return compare(nlohmann::json{{"arcs_at_X", arcs}, {"orbits_at_X", 1}, {"arcs_at_Y", arcs}, {"orbits_at_Y", 1}},
                   nlohmann::json{{"arcs_at_X", r.x_arcs}, {"orbits_at_X", r.x_orbits},
                                  {"arcs_at_Y", r.y_arcs}, {"orbits_at_Y", r.y_orbits}});
  });

  run("symmetry.local-2-arc-without-gl-is-intransitive", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    const auto r = check_local_2at(*sigma, false);
    return compare(nlohmann::json{{"passes", false}}, nlohmann::json{{"passes", r.passed()}});
  });

  run("symmetry.distance-layers", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    const auto lx = distance_layers(sigma->graph(), sigma->vertex_x());
    const auto ly = distance_layers(sigma->graph(), sigma->vertex_y());
    nlohmann::json actual{{"X", lx.layers}, {"Y", ly.layers}};
    if (n != 2) return Outcome{CheckStatus::kPass, nullptr, actual};
    return compare(nlohmann::json{{"X", kLayersFromX2}, {"Y", kLayersFromY2}}, actual);
  });

  run("symmetry.equitable-diagram", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    if (n != 2) return skipped("reference cell values only exist for n=2");
    const auto& g = sigma->graph();
    nlohmann::json actual = nlohmann::json::object();
    for (auto [name, root] : {std::pair{"X", sigma->vertex_x()}, std::pair{"Y", sigma->vertex_y()}}) {
      const auto p = equitable_refinement(g, distance_seed(g, root));
      actual[name] = cell_sizes_by_distance(g, root, p.cell_of);
    }
    return compare(nlohmann::json{{"X", kCellsFromX2}, {"Y", kCellsFromY2}}, actual);
  });

  run("symmetry.ball-4-meets-derived", [&] {
    const auto ball = ball_intersect_derived(ctx, 4);
    auto s_prime = mixed_commutators(ctx);
    const std::size_t raw = s_prime.size();
    s_prime.erase(std::unique(s_prime.begin(), s_prime.end()), s_prime.end());
    std::vector<Element> expected = s_prime;
    expected.push_back(ctx.identity());
    std::sort(expected.begin(), expected.end());
    return compare(nlohmann::json{{"s_prime", (valency - 1) * (valency - 1)}, {"s_prime_distinct", true},
                                  {"ball_equals_identity_and_s_prime", true}},
                   nlohmann::json{{"s_prime", s_prime.size()}, {"s_prime_distinct", raw == s_prime.size()},
                                  {"ball_equals_identity_and_s_prime", ball == expected}});
  });

  run("symmetry.semisymmetry-certificate", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    const auto r = semisymmetry_certificate(*sigma);
    nlohmann::json actual{{"edge_transitive", r.edge_transitive},
                          {"intransitivity_certificate", certificate_name(r.certificate)},
                          {"first_difference", r.first_difference},
                          {"layers_X", r.layers_x},
                          {"layers_Y", r.layers_y}};
    if (r.certificate == IntransitivityCertificate::kInconclusive)
      return Outcome{CheckStatus::kInconclusive, nullptr, actual};
    nlohmann::json expected{{"edge_transitive", true}, {"intransitivity_certificate", "layer-profile"}};
    if (n == 2) {
      expected["first_difference"] = 4;
      expected["layers_X"] = kLayersFromX2;
      expected["layers_Y"] = kLayersFromY2;
    } else {
      expected["first_difference"] = r.first_difference;
      expected["layers_X"] = r.layers_x;
      expected["layers_Y"] = r.layers_y;
    }
    return compare(expected, actual);
  });

  run("symmetry.automorphism-group-order", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    if (!opt.run_aut_search) return skipped("automorphism search disabled");
    if (sigma->graph().vertex_count() > kDefaultAutSearchCap) return skipped("graph above automorphism search cap");
    const auto& g = sigma->graph();
    const auto full = automorphism_group(g);
    const auto stab_x = automorphism_group(g, point_seed(g, sigma->vertex_x()));
    const auto stab_y = automorphism_group(g, point_seed(g, sigma->vertex_y()));
    nlohmann::json actual{{"order", full.order}, {"stabiliser_X", stab_x.order}, {"stabiliser_Y", stab_y.order},
                          {"vertex_orbits", orbits(full.generators, g.vertex_count()).size()}};
    if (n != 2) return Outcome{CheckStatus::kPass, nullptr, actual};
    return compare(nlohmann::json{{"order", 7962624}, {"stabiliser_X", 31104}, {"stabiliser_Y", 31104},
                                  {"vertex_orbits", 2}},
                   actual);
  });

  run("symmetry.stabiliser-orbits-vs-diagram", [&] {
    if (!sigma) return skipped("Sigma not built (cap)");
    if (n != 2 || !opt.run_aut_search) return skipped("only at n=2 with automorphism search");
    const auto& g = sigma->graph();
    nlohmann::json actual = nlohmann::json::object();
    for (auto [name, root] : {std::pair{"X", sigma->vertex_x()}, std::pair{"Y", sigma->vertex_y()}}) {
      const auto stab = automorphism_group(g, point_seed(g, root));
      actual[name] = cell_sizes_by_distance(g, root, orbit_ids(stab.generators, g.vertex_count()));
    }
    return compare(nlohmann::json{{"X", kCellsFromX2}, {"Y", kCellsFromY2}}, actual);
  });
}

enum class Suite { kCore, kGraphs, kSymmetry, kAll };

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::kCore: return "core";
    case Suite::kGraphs: return "graphs";
    case Suite::kSymmetry: return "symmetry";
    case Suite::kAll: return "all";
  }
  return "?";
}

inline VerificationReport run_verification(int n, Suite suite, const VerifyOptions& opt = {}) {
  const GroupContext ctx(n);
  VerificationReport report;
  report.n = n;
  report.suite = suite_name(suite);
  CheckRunner run(report);
  if (suite == Suite::kCore || suite == Suite::kAll) run_core_suite(ctx, opt, run);
  if (suite == Suite::kCore) return report;

  std::optional<SigmaGraph> sigma;
  run("build.sigma", [&] {
    sigma.emplace(build_sigma(ctx, opt.vertex_cap));
    return Outcome{CheckStatus::kPass, nullptr, sigma->graph().vertex_count()};
  });
  const SigmaGraph* sp = sigma ? &*sigma : nullptr;
  if (suite == Suite::kGraphs || suite == Suite::kAll) run_graph_suite(ctx, opt, run, sp);
  if (suite == Suite::kSymmetry || suite == Suite::kAll) run_symmetry_suite(ctx, opt, run, sp);
  return report;
}

}  // namespace hn
