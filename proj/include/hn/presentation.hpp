#pragma once

// Checks the defining relators of H(n) against the collection arithmetic,
// plus the definitions of the normal-form basis commutators.

#include <cstdint>
#include <string>
#include <vector>

#include "hn/group.hpp"

namespace hn {

struct RelatorFamily {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;  // empty when none
  bool passed() const { return failures == 0; }
};

struct PresentationReport {
  int n = 0;
  std::vector<RelatorFamily> relators;
  // w_ij == [x_i,y_j] and t_ikj == [[x_i,y_j],x_k]: the normal-form symbols
  // mean what they claim to mean.
  RelatorFamily definitions;

  bool passed() const {
    for (const auto& f : relators)
      if (!f.passed()) return false;
    return definitions.passed();
  }
};

inline PresentationReport verify_presentation(const GroupContext& ctx) {
  const int n = ctx.n();
  std::vector<Element> xs, ys, zs;
  for (int i = 0; i < n; ++i) xs.push_back(ctx.x(i));
  for (int j = 0; j < n; ++j) ys.push_back(ctx.y(j));
  zs = xs;
  zs.insert(zs.end(), ys.begin(), ys.end());

  auto label = [n](int z) {
    return z < n ? "x" + std::to_string(z + 1) : "y" + std::to_string(z - n + 1);
  };

  PresentationReport report;
  report.n = n;
  auto record = [](RelatorFamily& fam, bool ok, const std::string& where) {
    ++fam.cases;
    if (!ok) {
      if (fam.failures == 0) fam.first_failure = where;
      ++fam.failures;
    }
  };

  RelatorFamily squares{"z^2 = 1", 0, 0, {}};
  for (int z = 0; z < 2 * n; ++z)
    record(squares, ctx.mul(zs[z], zs[z]).is_identity(), label(z));

  RelatorFamily same_side{"[x,x'] = [y,y'] = 1", 0, 0, {}};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      record(same_side, ctx.comm(xs[i], xs[k]).is_identity(), label(i) + "," + label(k));
      record(same_side, ctx.comm(ys[i], ys[k]).is_identity(),
             label(n + i) + "," + label(n + k));
    }

  RelatorFamily mixed_square{"[x,y]^2 = 1", 0, 0, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Element c = ctx.comm(xs[i], ys[j]);
      record(mixed_square, ctx.mul(c, c).is_identity(), label(i) + "," + label(n + j));
    }

  RelatorFamily y_absorb{"[[y,x],y'] = 1", 0, 0, {}};
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        record(y_absorb, ctx.comm(ctx.comm(ys[j], xs[i]), ys[l]).is_identity(),
               label(n + j) + "," + label(i) + "," + label(n + l));

  RelatorFamily triple_square{"[[x,y],z]^2 = 1", 0, 0, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int z = 0; z < 2 * n; ++z) {
        const Element c = ctx.comm(ctx.comm(xs[i], ys[j]), zs[z]);
        record(triple_square, ctx.mul(c, c).is_identity(),
               label(i) + "," + label(n + j) + "," + label(z));
      }

  RelatorFamily class3{"[[[z,z'],z''],z'''] = 1", 0, 0, {}};
  for (int z0 = 0; z0 < 2 * n; ++z0)
    for (int z1 = 0; z1 < 2 * n; ++z1) {
      const Element c01 = ctx.comm(zs[z0], zs[z1]);
      for (int z2 = 0; z2 < 2 * n; ++z2) {
        const Element c012 = ctx.comm(c01, zs[z2]);
        for (int z3 = 0; z3 < 2 * n; ++z3)
          record(class3, ctx.comm(c012, zs[z3]).is_identity(),
                 label(z0) + "," + label(z1) + "," + label(z2) + "," + label(z3));
      }
    }

  report.relators = {squares, same_side, mixed_square, y_absorb, triple_square, class3};

  RelatorFamily defs{"w_ij = [x_i,y_j], t_ikj = [[x_i,y_j],x_k]", 0, 0, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Element c = ctx.comm(xs[i], ys[j]);
      record(defs, c == ctx.w(i, j), "w" + std::to_string(i + 1) + std::to_string(j + 1));
      for (int k = i + 1; k < n; ++k)
        record(defs, ctx.comm(c, xs[k]) == ctx.t(i, k, j),
               "t" + std::to_string(i + 1) + std::to_string(k + 1) + std::to_string(j + 1));
    }
  report.definitions = defs;
  return report;
}

}  // namespace hn
