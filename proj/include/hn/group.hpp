#pragma once

// Exact arithmetic in the class-3 2-group H(n) generated by two elementary
// abelian subgroups X = <x_1..x_n> and Y = <y_1..y_n>.
//
// Every element has a unique normal form
//
//     x^a  y^b  w^M  t^T
//
// where w_ij = [x_i, y_j] spans W ~ C2^(n^2), t_ikj = [[x_i, y_j], x_k] (i < k)
// spans the central subgroup H_3 ~ C2^(n^2(n-1)/2), and H' = W x H_3.
// Multiplication is collection: append one generator to a normal form and
// push it left into place (see GroupContext::mul_gen).
//
// All indices in this API are 0-based.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hn/error.hpp"

namespace hn {

inline constexpr int kMaxN = 8;
inline constexpr int kTWords = 4;  // 8*8*7/2 = 224 bits

// One group element in normal form. Bit i of `a` is the exponent of x_i, bit
// j of `b` that of y_j, bit (i*n + j) of `w` that of [x_i,y_j], and bit
// `t_index(i,k,j)` of `t` that of [[x_i,y_j],x_k].
struct Element {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t w = 0;
  std::array<std::uint64_t, kTWords> t{};

  bool is_identity() const { return a == 0 && b == 0 && w == 0 && t_zero(); }
  bool in_derived() const { return a == 0 && b == 0; }
  bool in_h3() const { return a == 0 && b == 0 && w == 0; }
  bool t_zero() const {
    for (auto word : t)
      if (word != 0) return false;
    return true;
  }
  bool t_bit(int idx) const { return (t[idx >> 6] >> (idx & 63)) & 1u; }
  void flip_t(int idx) { t[idx >> 6] ^= std::uint64_t{1} << (idx & 63); }

  friend bool operator==(const Element&, const Element&) = default;

  // Encoding order: compare the packed value with t most significant, then
  // w, b and finally a.
  friend bool operator<(const Element& lhs, const Element& rhs) {
    for (int i = kTWords - 1; i >= 0; --i)
      if (lhs.t[i] != rhs.t[i]) return lhs.t[i] < rhs.t[i];
    if (lhs.w != rhs.w) return lhs.w < rhs.w;
    if (lhs.b != rhs.b) return lhs.b < rhs.b;
    return lhs.a < rhs.a;
  }
};

enum class GenKind : std::uint8_t { X, Y, W, T };

// A generator symbol. X(i): i. Y(j): j stored in `i`. W(i,j): i, j.
// T(i,k,j) with i < k: i, k, j.
struct Symbol {
  GenKind kind = GenKind::X;
  int i = 0;
  int j = 0;
  int k = 0;

  static Symbol X(int i) { return {GenKind::X, i, 0, 0}; }
  static Symbol Y(int j) { return {GenKind::Y, j, 0, 0}; }
  static Symbol W(int i, int j) { return {GenKind::W, i, j, 0}; }
  static Symbol T(int i, int k, int j) { return {GenKind::T, i, j, k}; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

using Word = std::vector<Symbol>;

// Fault-injection switch for mutation tests. kFull is the only correct rule.
enum class CollectionRule : std::uint8_t { kFull, kWithoutTripleTerm };

class GroupContext {
 public:
  explicit GroupContext(int n, CollectionRule rule = CollectionRule::kFull) : n_(n), rule_(rule) {
    if (n < 2) throw UnsupportedParameter("H(n) needs n >= 2, got n=" + std::to_string(n));
    if (n > kMaxN)
      throw UnsupportedParameter("n=" + std::to_string(n) + " exceeds the supported maximum " +
                                 std::to_string(kMaxN));
    dim_t_ = n * n * (n - 1) / 2;
    pair_base_.assign(n * n, -1);
    int pair = 0;
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k) {
        pair_base_[i * n + k] = (pair++) * n;
        for (int j = 0; j < n; ++j) triples_.push_back({i, k, j});
      }
    // tau_[k][i*n+j] = T index of [[x_i,y_j],x_k], or -1 when k == i.
    tau_.assign(n * n * n, -1);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != k) tau_[k * n * n + i * n + j] = t_index(std::min(i, k), std::max(i, k), j);
    row_mask_ = (n == 8) ? 0xFFu : ((std::uint64_t{1} << n) - 1);
    w_mask_ = (n * n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n * n)) - 1);
  }

  int n() const { return n_; }
  int dim_x() const { return n_; }
  int dim_y() const { return n_; }
  int dim_w() const { return n_ * n_; }
  int dim_t() const { return dim_t_; }
  int total_bits() const { return 2 * n_ + n_ * n_ + dim_t_; }
  CollectionRule rule() const { return rule_; }

  int w_index(int i, int j) const { return i * n_ + j; }
  // Lexicographic on (i,k,j), i < k.
  int t_index(int i, int k, int j) const { return pair_base_[i * n_ + k] + j; }

  struct TTriple {
    int i, k, j;
  };
  TTriple t_triple(int idx) const {
    if (idx < 0 || idx >= dim_t_) throw UnsupportedParameter("T index out of range");
    return triples_[idx];
  }

  Element identity() const { return {}; }
  Element x(int i) const {
    check_index(i);
    Element e;
    e.a = std::uint64_t{1} << i;
    return e;
  }
  Element y(int j) const {
    check_index(j);
    Element e;
    e.b = std::uint64_t{1} << j;
    return e;
  }
  Element w(int i, int j) const {
    check_index(i);
    check_index(j);
    Element e;
    e.w = std::uint64_t{1} << w_index(i, j);
    return e;
  }
  Element t(int i, int k, int j) const {
    check_index(i);
    check_index(k);
    check_index(j);
    if (i >= k) throw UnsupportedParameter("T(i,k,j) needs i < k");
    Element e;
    e.flip_t(t_index(i, k, j));
    return e;
  }
  // x^bits and y^bits
  Element x_vec(std::uint64_t bits) const {
    Element e;
    e.a = bits & row_mask_;
    return e;
  }
  Element y_vec(std::uint64_t bits) const {
    Element e;
    e.b = bits & row_mask_;
    return e;
  }

  std::uint64_t row_mask() const { return row_mask_; }

  // Right-multiply a normal form by one generator.
  //   X(k): a ^= e_k, M_k* ^= b, and T gains [[x_i,y_j],x_k] for every set
  //         M_ij with i != k (moving x_k left past w^M, then past y^b).
  //   Y(j), W(i,j), T(i,k,j): toggle the matching bit (y commutes with W, H_3
  //         is central).
  Element mul_gen(Element h, const Symbol& g) const {
    switch (g.kind) {
      case GenKind::X:
        check_index(g.i);
        right_mul_x(h, g.i);
        break;
      case GenKind::Y:
        check_index(g.i);
        h.b ^= std::uint64_t{1} << g.i;
        break;
      case GenKind::W:
        check_index(g.i);
        check_index(g.j);
        h.w ^= std::uint64_t{1} << w_index(g.i, g.j);
        break;
      case GenKind::T:
        check_index(g.i);
        check_index(g.j);
        check_index(g.k);
        if (g.i >= g.k) throw UnsupportedParameter("T(i,k,j) needs i < k");
        h.flip_t(t_index(g.i, g.k, g.j));
        break;
    }
    return h;
  }

  // h1 * h2: folds mul_gen over the normal-form word of h2. Only the x-letters
  // need real collection; the rest are XORs.
  Element mul(Element h1, const Element& h2) const {
    for (std::uint64_t bits = h2.a; bits != 0; bits &= bits - 1)
      right_mul_x(h1, std::countr_zero(bits));
    h1.b ^= h2.b;
    h1.w ^= h2.w;
    for (int i = 0; i < kTWords; ++i) h1.t[i] ^= h2.t[i];
    return h1;
  }

  // x-letters ascending, then y, then w (row-major), then t.
  Word normal_word(const Element& h) const {
    Word word;
    for (int i = 0; i < n_; ++i)
      if ((h.a >> i) & 1u) word.push_back(Symbol::X(i));
    for (int j = 0; j < n_; ++j)
      if ((h.b >> j) & 1u) word.push_back(Symbol::Y(j));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if ((h.w >> w_index(i, j)) & 1u) word.push_back(Symbol::W(i, j));
    for (int idx = 0; idx < dim_t_; ++idx)
      if (h.t_bit(idx)) {
        const auto [i, k, j] = t_triple(idx);
        word.push_back(Symbol::T(i, k, j));
      }
    return word;
  }

  Element evaluate_word(const Word& word) const {
    Element h;
    for (const auto& s : word) h = mul_gen(h, s);
    return h;
  }

  // Every generator symbol is an involution, so the inverse is the reversed
  // normal-form word.
  Element inv(const Element& h) const {
    Word word = normal_word(h);
    Element out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = mul_gen(out, *it);
    return out;
  }

  // [g,h] = g^-1 h^-1 g h
  Element comm(const Element& g, const Element& h) const {
    return mul(mul(mul(inv(g), inv(h)), g), h);
  }

  // g^h = h^-1 g h
  Element conj(const Element& g, const Element& h) const { return mul(mul(inv(h), g), h); }

  struct Abelianization {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    friend bool operator==(const Abelianization&, const Abelianization&) = default;
  };
  Abelianization abelianization(const Element& h) const { return {h.a, h.b}; }

  // Packed value: a in the lowest n bits, then b, then w, then t. Only
  // available when the whole normal form fits in 64 bits (n <= 4).
  bool packable() const { return total_bits() <= 64; }

  std::uint64_t pack(const Element& h) const {
    require_packable();
    const int ob = n_, ow = 2 * n_, ot = 2 * n_ + n_ * n_;
    std::uint64_t v = h.a | (h.b << ob) | (h.w << ow);
    if (dim_t_ > 0) v |= h.t[0] << ot;
    return v;
  }

  Element unpack(std::uint64_t v) const {
    require_packable();
    const int ob = n_, ow = 2 * n_, ot = 2 * n_ + n_ * n_;
    Element h;
    h.a = v & row_mask_;
    h.b = (v >> ob) & row_mask_;
    h.w = (v >> ow) & w_mask_;
    h.t[0] = (ot < 64) ? (v >> ot) : 0;
    return h;
  }

  // "a:<hex>;b:<hex>;w:<hex>;t:<hex>", each block little-endian (bit 0 is
  // the lowest index).
  std::string format(const Element& h) const {
    std::string out = "a:" + hex(&h.a, 1) + ";b:" + hex(&h.b, 1) + ";w:" + hex(&h.w, 1) +
                      ";t:" + hex(h.t.data(), kTWords);
    return out;
  }

  Element parse(std::string_view text) const {
    Element h;
    static constexpr char kTags[4] = {'a', 'b', 'w', 't'};
    std::size_t pos = 0;
    for (int block = 0; block < 4; ++block) {
      if (pos + 2 > text.size() || text[pos] != kTags[block] || text[pos + 1] != ':')
        throw ParseError("expected '" + std::string(1, kTags[block]) + ":' at offset " +
                         std::to_string(pos) + " in \"" + std::string(text) + "\"");
      pos += 2;
      const std::size_t end = block == 3 ? text.size() : text.find(';', pos);
      if (end == std::string_view::npos)
        throw ParseError("missing ';' after block " + std::string(1, kTags[block]));
      const std::string_view digits = text.substr(pos, end - pos);
      std::array<std::uint64_t, kTWords> words{};
      parse_hex(digits, words);
      const int width = block < 2 ? n_ : block == 2 ? n_ * n_ : dim_t_;
      check_width(words, width, kTags[block]);
      switch (block) {
        case 0: h.a = words[0]; break;
        case 1: h.b = words[0]; break;
        case 2: h.w = words[0]; break;
        case 3: h.t = words; break;
      }
      pos = end + 1;
    }
    return h;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= n_)
      throw UnsupportedParameter("generator index " + std::to_string(i) + " out of range for n=" +
                                 std::to_string(n_));
  }

  void require_packable() const {
    if (!packable())
      throw UnsupportedParameter("normal form of H(" + std::to_string(n_) +
                                 ") does not fit a 64-bit key");
  }

  void right_mul_x(Element& h, int k) const {
    if (rule_ == CollectionRule::kFull) {
      const int* tau = &tau_[k * n_ * n_];
      const std::uint64_t crossing = h.w & ~(row_mask_ << (k * n_));
      for (std::uint64_t bits = crossing; bits != 0; bits &= bits - 1)
        h.flip_t(tau[std::countr_zero(bits)]);
    }
    h.w ^= h.b << (k * n_);
    h.a ^= std::uint64_t{1} << k;
  }

  static std::string hex(const std::uint64_t* words, int count) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    bool started = false;
    for (int wi = count - 1; wi >= 0; --wi)
      for (int nib = 15; nib >= 0; --nib) {
        const unsigned d = (words[wi] >> (4 * nib)) & 0xFu;
        if (d != 0) started = true;
        if (started) out.push_back(kDigits[d]);
      }
    return started ? out : "0";
  }

  static void parse_hex(std::string_view digits, std::array<std::uint64_t, kTWords>& words) {
    if (digits.empty()) throw ParseError("empty hex block");
    std::size_t nib = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it, ++nib) {
      const char c = *it;
      unsigned d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else throw ParseError(std::string("invalid hex digit '") + c + "'");
      if (d == 0) continue;
      if (nib >= 16 * kTWords) throw ParseError("hex block too long");
      words[nib / 16] |= std::uint64_t{d} << (4 * (nib % 16));
    }
  }

  static void check_width(const std::array<std::uint64_t, kTWords>& words, int width, char tag) {
    for (int wi = 0; wi < kTWords; ++wi) {
      const int lo = wi * 64;
      std::uint64_t allowed;
      if (width <= lo) allowed = 0;
      else if (width >= lo + 64) allowed = ~std::uint64_t{0};
      else allowed = (std::uint64_t{1} << (width - lo)) - 1;
      if (words[wi] & ~allowed)
        throw ParseError(std::string("block ") + tag + " sets a bit beyond index " +
                         std::to_string(width - 1));
    }
  }

  int n_;
  CollectionRule rule_;
  int dim_t_ = 0;
  std::vector<int> pair_base_;
  std::vector<TTriple> triples_;
  std::vector<int> tau_;
  std::uint64_t row_mask_ = 0;
  std::uint64_t w_mask_ = 0;
};

// Visits all 2^total_bits normal forms in increasing encoding order.
inline constexpr int kDefaultEnumerationCap = 24;

template <class Visitor>
void for_each_element(const GroupContext& ctx, Visitor&& visit,
                      int cap_bits = kDefaultEnumerationCap) {
  if (ctx.total_bits() > cap_bits)
    throw CapExceeded("H(" + std::to_string(ctx.n()) + ") has 2^" +
                      std::to_string(ctx.total_bits()) + " elements, cap is 2^" +
                      std::to_string(cap_bits));
  const std::uint64_t count = std::uint64_t{1} << ctx.total_bits();
  for (std::uint64_t v = 0; v < count; ++v) visit(ctx.unpack(v));
}

inline std::vector<Element> enumerate_elements(const GroupContext& ctx,
                                               int cap_bits = kDefaultEnumerationCap) {
  std::vector<Element> out;
  if (ctx.total_bits() <= cap_bits) out.reserve(std::size_t{1} << ctx.total_bits());
  for_each_element(ctx, [&](const Element& h) { out.push_back(h); }, cap_bits);
  return out;
}

}  // namespace hn
