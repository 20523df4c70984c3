#pragma once

// Basic commutators of weight <= 3 in a free group on r letters, and the
// closed-form counts used to size the quotients F'K/K, F'I/I and I/K.

#include <cstdint>
#include <string>
#include <vector>

#include "hn/error.hpp"

namespace hn::hall {

// A bracketed commutator. Leaves carry a 1-based generator index; internal
// nodes have exactly two children (left, right).
struct FormalCommutator {
  int leaf = 0;
  std::vector<FormalCommutator> children;

  static FormalCommutator generator(int index) { return {index, {}}; }
  static FormalCommutator bracket(FormalCommutator lhs, FormalCommutator rhs) {
    FormalCommutator c;
    c.children.push_back(std::move(lhs));
    c.children.push_back(std::move(rhs));
    return c;
  }

  bool is_leaf() const { return children.empty(); }
  int weight() const {
    if (is_leaf()) return 1;
    return children[0].weight() + children[1].weight();
  }

  // "a3", "[a2,a1]", "[[a2,a1],a3]"
  std::string to_string() const {
    if (is_leaf()) return "a" + std::to_string(leaf);
    return "[" + children[0].to_string() + "," + children[1].to_string() + "]";
  }

  friend bool operator==(const FormalCommutator&, const FormalCommutator&) = default;
};

// Basic commutators of exactly the given weight, lexicographic on the index
// tuple: a_i; [a_i,a_j] with j<i; [[a_i,a_j],a_k] with j<i, j<=k.
inline std::vector<FormalCommutator> enumerate_basic_commutators(int r, int weight) {
  if (r < 1) throw UnsupportedParameter("alphabet size must be >= 1");
  std::vector<FormalCommutator> out;
  using FC = FormalCommutator;
  switch (weight) {
    case 1:
      for (int i = 1; i <= r; ++i) out.push_back(FC::generator(i));
      break;
    case 2:
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j < i; ++j)
          out.push_back(FC::bracket(FC::generator(i), FC::generator(j)));
      break;
    case 3:
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j < i; ++j)
          for (int k = j; k <= r; ++k)
            out.push_back(FC::bracket(FC::bracket(FC::generator(i), FC::generator(j)),
                                      FC::generator(k)));
      break;
    default:
      throw UnsupportedParameter("basic commutators are only enumerated for weight 1..3, got " +
                                 std::to_string(weight));
  }
  return out;
}

struct BasisReport {
  int r = 0;
  std::vector<FormalCommutator> bc1, bc2, bc3;
  std::int64_t count(int weight) const {
    switch (weight) {
      case 1: return static_cast<std::int64_t>(bc1.size());
      case 2: return static_cast<std::int64_t>(bc2.size());
      case 3: return static_cast<std::int64_t>(bc3.size());
      default: throw UnsupportedParameter("weight out of range");
    }
  }
};

inline BasisReport basis_report(int r) {
  return {r, enumerate_basic_commutators(r, 1), enumerate_basic_commutators(r, 2),
          enumerate_basic_commutators(r, 3)};
}

inline std::int64_t bc2_size(std::int64_t r) { return r * (r - 1) / 2; }
inline std::int64_t bc3_size(std::int64_t r) { return (r * r * r - r) / 3; }

enum class TupleKind { a, b, c, d };

// Sizes of the index sets
//   a: {(i,j): 1<=j<i<=n}
//   b: {(i,j,k): j<i, j<k}
//   c: {(i,j,k): j<i, j<k, k!=i}
//   d: {(i,j,k): j<i, j<=k}
inline std::int64_t count_tuples(std::int64_t n, TupleKind kind) {
  if (n < 2) throw UnsupportedParameter("count_tuples requires n >= 2");
  switch (kind) {
    case TupleKind::a: return n * (n - 1) / 2;
    case TupleKind::b: return n * (n - 1) * (2 * n - 1) / 6;
    case TupleKind::c: return n * (n - 1) * (n - 2) / 3;
    case TupleKind::d: return (n * n * n - n) / 3;
  }
  return 0;
}

struct DimensionTable {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t m_fk = 0;       // F'K/K = C2^m_fk
  std::int64_t u = 0;          // F'I/I = C2^u
  std::int64_t v = 0;          // I/K  = C2^v
  std::int64_t order_exp = 0;  // |F/I| = 2^order_exp
};

namespace detail {
// Evaluates p/q and insists on exact divisibility.
inline std::int64_t exact_div(std::int64_t p, std::int64_t q, const char* what) {
  if (p % q != 0) throw ConsistencyError(std::string("non-integral closed form: ") + what);
  return p / q;
}
}  // namespace detail

inline DimensionTable dimension_table(std::int64_t n) {
  if (n < 2) throw UnsupportedParameter("dimension_table requires n >= 2");
  DimensionTable t;
  t.n = n;
  t.r = 2 * n;
  const std::int64_t r = t.r;
  t.m_fk = detail::exact_div(r * (r - 1) * (2 * r - 1), 6, "m");
  t.u = detail::exact_div(n * n * n + n * n, 2, "u");
  t.v = detail::exact_div(13 * n * n * n - 15 * n * n + 2 * n, 6, "v");
  t.order_exp = detail::exact_div(n * n * n + n * n + 4 * n, 2, "order exponent");
  if (t.u + t.v != t.m_fk)
    throw ConsistencyError("u + v = " + std::to_string(t.u + t.v) +
                           " but r(r-1)(2r-1)/6 = " + std::to_string(t.m_fk));
  if (t.order_exp != 2 * n + t.u) throw ConsistencyError("order exponent != 2n + u");
  return t;
}

struct SpecialSetSizes {
  std::int64_t d_k = 0;         // |D_K|, r = 2n
  std::int64_t b2 = 0;          // |B_2|
  std::int64_t b3 = 0;          // |B_3|
  std::int64_t b3_prime = 0;    // |D_K \ B_3|
  std::int64_t bc2_cap_di = 0;  // |BC_2 ∩ D_I|
};

inline SpecialSetSizes special_set_sizes(std::int64_t n) {
  if (n < 2) throw UnsupportedParameter("special_set_sizes requires n >= 2");
  const std::int64_t r = 2 * n;
  SpecialSetSizes s;
  s.d_k = detail::exact_div(r * (r - 1) * (r - 2), 3, "|D_K|");
  s.b2 = n * n;
  s.b3 = detail::exact_div(n * n * n - n * n, 2, "|B_3|");
  s.b3_prime = detail::exact_div(13 * n * n * n - 21 * n * n + 8 * n, 6, "|B_3'|");
  s.bc2_cap_di = n * n - n;
  if (s.b3 + s.b3_prime != s.d_k) throw ConsistencyError("|B_3| + |B_3'| != |D_K|");
  return s;
}

}  // namespace hn::hall
