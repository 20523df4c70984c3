#pragma once

// Automorphisms of H(n) induced by a pair (g1, g2) in GL_n(2) x GL_n(2)
// acting on the generator spaces of X and Y.

#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hn/error.hpp"
#include "hn/group.hpp"

namespace hn {

// n x n matrix over GF(2); bit j of rows[i] is entry (i,j). Acts on row
// vectors: v * M = XOR of rows selected by v.
struct Gf2Matrix {
  int n = 0;
  std::array<std::uint64_t, kMaxN> rows{};

  static Gf2Matrix identity(int n) {
    Gf2Matrix m{n, {}};
    for (int i = 0; i < n; ++i) m.rows[i] = std::uint64_t{1} << i;
    return m;
  }

  // Matrix with entries taken from `bits` row-major (bit i*n+j is (i,j)).
  static Gf2Matrix from_bits(int n, std::uint64_t bits) {
    Gf2Matrix m{n, {}};
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    for (int i = 0; i < n; ++i) m.rows[i] = (bits >> (i * n)) & mask;
    return m;
  }

  std::uint64_t apply_row_vector(std::uint64_t v) const {
    std::uint64_t out = 0;
    for (; v != 0; v &= v - 1) out ^= rows[std::countr_zero(v)];
    return out;
  }

  friend Gf2Matrix operator*(const Gf2Matrix& lhs, const Gf2Matrix& rhs) {
    Gf2Matrix out{lhs.n, {}};
    for (int i = 0; i < lhs.n; ++i) out.rows[i] = rhs.apply_row_vector(lhs.rows[i]);
    return out;
  }

  int rank() const {
    auto work = rows;
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
      int pivot = -1;
      for (int i = r; i < n; ++i)
        if ((work[i] >> col) & 1u) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      std::swap(work[r], work[pivot]);
      for (int i = 0; i < n; ++i)
        if (i != r && ((work[i] >> col) & 1u)) work[i] ^= work[r];
      ++r;
    }
    return r;
  }

  bool invertible() const { return rank() == n; }

  friend bool operator==(const Gf2Matrix& lhs, const Gf2Matrix& rhs) {
    if (lhs.n != rhs.n) return false;
    for (int i = 0; i < lhs.n; ++i)
      if (lhs.rows[i] != rhs.rows[i]) return false;
    return true;
  }
  friend bool operator<(const Gf2Matrix& lhs, const Gf2Matrix& rhs) {
    if (lhs.n != rhs.n) return lhs.n < rhs.n;
    return lhs.rows < rhs.rows;
  }
};

// All of GL_n(2) by brute force over the 2^(n^2) matrices; n <= 4.
inline std::vector<Gf2Matrix> general_linear_group(int n) {
  if (n < 1 || n > 4) throw UnsupportedParameter("GL_n(2) enumeration supports 1 <= n <= 4");
  std::vector<Gf2Matrix> out;
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Gf2Matrix m = Gf2Matrix::from_bits(n, bits);
    if (m.invertible()) out.push_back(m);
  }
  return out;
}

// Two generators of GL_n(2): the transvection e_1 -> e_1 + e_2 and the
// cyclic shift e_i -> e_{i+1}.
inline std::vector<Gf2Matrix> general_linear_generators(int n) {
  Gf2Matrix transvection = Gf2Matrix::identity(n);
  transvection.rows[0] |= std::uint64_t{1} << 1;
  Gf2Matrix shift{n, {}};
  for (int i = 0; i < n; ++i) shift.rows[i] = std::uint64_t{1} << ((i + 1) % n);
  return {transvection, shift};
}

// sigma(x_i) = x^{row i of g1}, sigma(y_j) = y^{row j of g2}, extended to
// the normal-form basis through the commutators defining w and t.
class InducedAutomorphism {
 public:
  InducedAutomorphism(const GroupContext& ctx, const Gf2Matrix& g1, const Gf2Matrix& g2)
      : ctx_(&ctx), g1_(g1), g2_(g2) {
    const int n = ctx.n();
    if (g1.n != n || g2.n != n) throw UnsupportedParameter("matrix size does not match n");
    if (!g1.invertible()) throw SingularMatrix("g1 is singular over GF(2)");
    if (!g2.invertible()) throw SingularMatrix("g2 is singular over GF(2)");
    for (int i = 0; i < n; ++i) {
      x_img_.push_back(ctx.x_vec(g1.rows[i]));
      y_img_.push_back(ctx.y_vec(g2.rows[i]));
    }
    w_img_.resize(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w_img_[ctx.w_index(i, j)] = ctx.comm(x_img_[i], y_img_[j]);
    t_img_.resize(ctx.dim_t());
    for (int idx = 0; idx < ctx.dim_t(); ++idx) {
      const auto [i, k, j] = ctx.t_triple(idx);
      t_img_[idx] = ctx.comm(w_img_[ctx.w_index(i, j)], x_img_[k]);
    }
  }

  const Gf2Matrix& g1() const { return g1_; }
  const Gf2Matrix& g2() const { return g2_; }
  const Element& x_image(int i) const { return x_img_[i]; }
  const Element& y_image(int j) const { return y_img_[j]; }

  Element operator()(const Element& h) const {
    const GroupContext& ctx = *ctx_;
    Element out;
    for (std::uint64_t bits = h.a; bits; bits &= bits - 1)
      out = ctx.mul(out, x_img_[std::countr_zero(bits)]);
    for (std::uint64_t bits = h.b; bits; bits &= bits - 1)
      out = ctx.mul(out, y_img_[std::countr_zero(bits)]);
    for (std::uint64_t bits = h.w; bits; bits &= bits - 1)
      out = ctx.mul(out, w_img_[std::countr_zero(bits)]);
    for (int idx = 0; idx < ctx.dim_t(); ++idx)
      if (h.t_bit(idx)) out = ctx.mul(out, t_img_[idx]);
    return out;
  }

 private:
  const GroupContext* ctx_;
  Gf2Matrix g1_, g2_;
  std::vector<Element> x_img_, y_img_, w_img_, t_img_;
};

}  // namespace hn
