// One line per acceptance criterion. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "hn/hall.hpp"
#include "hn/verify.hpp"

namespace {

constexpr std::uint64_t kSamples = 10000;  // per randomized identity, per n
constexpr std::uint64_t kSeed = 0;
constexpr double kBudgetN2Seconds = 60.0;
constexpr double kBudgetN3Seconds = 600.0;

struct Criterion {
  bool ok = true;
  std::string detail;

  void need(const hn::VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
      if (c.name == name) {
        if (c.status != hn::CheckStatus::kPass) {
          ok = false;
          detail += " [n=" + std::to_string(r.n) + " " + name + " " + hn::status_name(c.status) +
                    " expected=" + c.expected.dump() + " actual=" + c.actual.dump() + "]";
        }
        return;
      }
    ok = false;
    detail += " [n=" + std::to_string(r.n) + " " + name + " missing]";
  }

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += " [" + what + "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Independent count of weight-2 and weight-3 basic commutators by rule filtering.
std::pair<std::uint64_t, std::uint64_t> brute_bc(int r) {
  std::uint64_t two = 0, three = 0;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      if (!(j < i)) continue;
      ++two;
      for (int k = 1; k <= r; ++k)
        if (j <= k) ++three;
    }
  return {two, three};
}

}  // namespace

int main() {
  hn::VerifyOptions opt;
  opt.samples = kSamples;
  opt.seed = kSeed;

  auto t0 = std::chrono::steady_clock::now();
  const auto r2 = hn::run_verification(2, hn::Suite::kAll, opt);
  const double n2_seconds = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto r3core = hn::run_verification(3, hn::Suite::kCore, opt);
  const double n3_core_seconds = seconds_since(t0);

  // Graph and symmetry checks at n=3 without the core battery.
  opt.run_aut_search = false;
  const auto r3 = hn::run_verification(3, hn::Suite::kAll, [&] {
    auto o = opt;
    o.samples = 100;
    return o;
  }());

  std::vector<Criterion> crit(12);

  {  // 1
    auto& c = crit[0];
    c.need(r2, "order.enumeration");
    c.need(r2, "order.closure");
    c.need(r2, "order.formula-vs-normal-form-dimension");
    for (int n = 2; n <= 6; ++n)
      c.expect(hn::GroupContext(n).total_bits() == (n * n * n + n * n + 4 * n) / 2,
               "order exponent at n=" + std::to_string(n));
    c.expect(hn::enumerate_elements(hn::GroupContext(2)).size() == 1024, "1024 elements at n=2");
  }
  {  // 2
    auto& c = crit[1];
    for (const auto* r : {&r2, &r3core}) {
      c.need(*r, "presentation.relators");
      c.need(*r, "presentation.basis-definitions");
    }
  }
  {  // 3
    auto& c = crit[2];
    c.need(r2, "structure.derived-subgroup");
    c.need(r2, "structure.abelianization-kernel");
    c.need(r3core, "structure.abelianization-kernel");
  }
  {  // 4
    auto& c = crit[3];
    for (const auto* r : {&r2, &r3core})
      for (const char* name : {"identity.associativity", "identity.jacobi", "identity.witt-hall", "identity.class-3",
                               "identity.h3-central", "identity.derived-elementary-abelian",
                               "identity.generator-symmetry", "identity.y-absorption", "identity.product-formula"})
        c.need(*r, name);
  }
  {  // 5
    auto& c = crit[4];
    c.need(r2, "graphs.sigma");
    c.need(r2, "graphs.gamma");
  }
  crit[5].need(r2, "graphs.clique-line-duality");  // 6
  {                                                 // 7
    auto& c = crit[6];
    c.need(r2, "graphs.derived-quotient");
    c.need(r3, "graphs.derived-quotient");
  }
  {  // 8
    auto& c = crit[7];
    c.need(r2, "symmetry.local-2-arc-transitive");
    c.need(r3, "symmetry.local-2-arc-transitive");
  }
  {  // 9
    auto& c = crit[8];
    c.need(r2, "symmetry.distance-layers");
    c.need(r2, "symmetry.edge-regular");
    c.need(r2, "symmetry.semisymmetry-certificate");
  }
  {  // 10
    auto& c = crit[9];
    c.need(r2, "symmetry.ball-4-meets-derived");
    c.need(r3, "symmetry.ball-4-meets-derived");
  }
  {  // 11
    auto& c = crit[10];
    c.need(r2, "hall.basic-commutator-counts");
    c.need(r2, "hall.dimension-identity");
    c.expect(hn::hall::enumerate_basic_commutators(4, 2).size() == 6, "|BC2|=6 at r=4");
    c.expect(hn::hall::enumerate_basic_commutators(4, 3).size() == 20, "|BC3|=20 at r=4");
    for (int r = 1; r <= 10; ++r) {
      const auto [two, three] = brute_bc(r);
      c.expect(static_cast<std::uint64_t>(hn::hall::bc2_size(r)) == two &&
                   static_cast<std::uint64_t>(hn::hall::bc3_size(r)) == three,
               "closed forms vs brute force at r=" + std::to_string(r));
    }
    for (int n = 2; n <= 10; ++n) {
      const auto t = hn::hall::dimension_table(n);
      const std::int64_t r = 2 * n;
      c.expect(t.u + t.v == r * (r - 1) * (2 * r - 1) / 6, "u+v at n=" + std::to_string(n));
    }
  }
  {  // 12
    auto& c = crit[11];
    c.need(r2, "symmetry.automorphism-group-order");
    c.need(r2, "symmetry.equitable-diagram");
    c.need(r2, "symmetry.stabiliser-orbits-vs-diagram");
  }

  const char* titles[12] = {
      "group order and closure",
      "presentation relators at n=2,3",
      "derived subgroup and abelianization",
      "commutator identities, 10^4 samples at n=2,3",
      "Sigma and Gamma parameters at n=2",
      "clique and line graph duality at n=2",
      "normal quotient K_{4,4} and K_{8,8}",
      "local 2-arc-transitivity at n=2,3",
      "layer profile certificate at n=2",
      "ball of radius 4 meets H' in 1+9 and 1+49",
      "Hall basis counts and dimension identity",
      "automorphism group order and diagram cells at n=2",
  };

  bool all = true;
  for (int i = 0; i < 12; ++i) {
    std::cout << "criterion " << (i + 1) << ": " << (crit[i].ok ? "PASS" : "FAIL") << "  " << titles[i]
              << crit[i].detail << '\n';
    all = all && crit[i].ok;
  }
  const bool budget = n2_seconds < kBudgetN2Seconds && n3_core_seconds < kBudgetN3Seconds;
  std::printf("budget: %s  n=2 all %.1fs (limit %.0fs), n=3 core %.1fs (limit %.0fs)\n", budget ? "PASS" : "FAIL",
              n2_seconds, kBudgetN2Seconds, n3_core_seconds, kBudgetN3Seconds);
  return all && budget ? 0 : 1;
}
