#pragma once

#include <cstdint>
#include <random>

#include "hn/group.hpp"

namespace hn {

// Uniform random normal form.
template <class Rng>
Element random_element(const GroupContext& ctx, Rng& rng) {
  Element e;
  e.a = rng() & ctx.row_mask();
  e.b = rng() & ctx.row_mask();
  const int nw = ctx.dim_w();
  e.w = nw == 64 ? rng() : rng() & ((std::uint64_t{1} << nw) - 1);
  int left = ctx.dim_t();
  for (int i = 0; i < kTWords && left > 0; ++i, left -= 64)
    e.t[i] = left >= 64 ? rng() : rng() & ((std::uint64_t{1} << left) - 1);
  return e;
}

template <class Rng>
Element random_derived(const GroupContext& ctx, Rng& rng) {
  Element e = random_element(ctx, rng);
  e.a = e.b = 0;
  return e;
}

template <class Rng>
Element random_h3(const GroupContext& ctx, Rng& rng) {
  Element e = random_derived(ctx, rng);
  e.w = 0;
  return e;
}

template <class Rng>
Symbol random_symbol(const GroupContext& ctx, Rng& rng) {
  const int n = ctx.n();
  std::uniform_int_distribution<int> idx(0, n - 1);
  switch (rng() % 4) {
    case 0: return Symbol::X(idx(rng));
    case 1: return Symbol::Y(idx(rng));
    case 2: return Symbol::W(idx(rng), idx(rng));
    default: {
      int i = idx(rng), k = idx(rng);
      while (k == i) k = idx(rng);
      if (i > k) std::swap(i, k);
      return Symbol::T(i, k, idx(rng));
    }
  }
}

}  // namespace hn
