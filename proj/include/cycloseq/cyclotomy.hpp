#pragma once

/**
 * @file cyclotomy.hpp
 * @brief Cyclotomic classes of order d over GF(q) and cyclotomic numbers.
 *
 * With alpha a primitive root of the prime q = d*f + 1, class 0 is the
 * subgroup <alpha^d> of the nonzero residues and class i = alpha^i * class 0.
 * The d classes partition {1, ..., q-1} into cosets of size f. The
 * cyclotomic number (i, j) counts |(C_i + 1) ∩ C_j|.
 *
 * Closed forms are provided for order 2 (both parities of f) and for order 6
 * at primes of the shape q = x^2 + 27, where the 6x6 table of cyclotomic
 * numbers is a fixed matrix over seven linear forms in (q, x). The order-6
 * table depends on how the classes are labelled, i.e. on the choice of
 * primitive root; derive_hall_x() recovers x from the brute-force (0,0)
 * entry (which is labelling-invariant) and then checks the full 6x6 table,
 * so an incompatible labelling is detected rather than silently accepted.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycloseq/errors.hpp"
#include "cycloseq/modular.hpp"

namespace cycloseq {

/// The integer x with q = x^2 + 27 that parametrises the order-6 table.
struct HallParameter {
  i64 x = 0;
  friend bool operator==(const HallParameter&, const HallParameter&) = default;
};

/// The partition of the nonzero residues mod q into the d cyclotomic
/// classes of order d, for a fixed primitive root. Immutable once built.
class CyclotomicSystem {
 public:
  u64 prime() const { return q_; }
  u64 order() const { return d_; }        // d
  u64 class_size() const { return f_; }   // f = (q-1)/d
  u64 generator() const { return alpha_; }

  /// Class index of the nonzero residue z; throws ZeroResidueError on z = 0 (mod q).
  std::size_t class_of(u64 z) const {
    z %= q_;
    if (z == 0) throw ZeroResidueError("class_of: zero has no cyclotomic class");
    return static_cast<std::size_t>(class_index_[z]);
  }

  /// Members of class i, ascending.
  const std::vector<u64>& cyclotomic_class(std::size_t i) const { return classes_.at(i); }

  const std::vector<std::vector<u64>>& classes() const { return classes_; }

 private:
  friend CyclotomicSystem build_cyclotomic_system(u64, u64, std::optional<u64>);
  CyclotomicSystem() = default;

  u64 q_ = 0, d_ = 0, f_ = 0, alpha_ = 0;
  std::vector<std::uint32_t> class_index_;  // size q, entry 0 unused
  std::vector<std::vector<u64>> classes_;
};

/// Builds the order-d system over GF(q). alpha defaults to the smallest
/// primitive root; an explicit alpha is checked for full multiplicative order.
inline CyclotomicSystem build_cyclotomic_system(u64 q, u64 d,
                                                std::optional<u64> alpha = std::nullopt) {
  if (!is_prime(q))
    throw NotPrimeError("build_cyclotomic_system: " + std::to_string(q) + " is not prime");
  if (d == 0 || (q - 1) % d != 0)
    throw OrderDoesNotDivideError("build_cyclotomic_system: order " + std::to_string(d) +
                                  " does not divide " + std::to_string(q - 1));
  u64 a;
  if (alpha) {
    a = *alpha % q;
    if (!is_primitive_root(a, q))
      throw NotPrimitiveRootError("build_cyclotomic_system: " + std::to_string(*alpha) +
                                  " is not a primitive root of " + std::to_string(q));
  } else {
    a = primitive_root(q);
  }

  CyclotomicSystem sys;
  sys.q_ = q;
  sys.d_ = d;
  sys.f_ = (q - 1) / d;
  sys.alpha_ = a;
  sys.class_index_.assign(q, 0);
  sys.classes_.assign(d, {});
  for (auto& cls : sys.classes_) cls.reserve(sys.f_);

  // alpha^m lands in class m mod d.
  u64 x = 1;
  for (u64 m = 0; m < q - 1; ++m) {
    const auto i = static_cast<std::size_t>(m % d);
    sys.class_index_[x] = static_cast<std::uint32_t>(i);
    sys.classes_[i].push_back(x);
    x = mul_mod(x, a, q);
  }
  for (auto& cls : sys.classes_) std::sort(cls.begin(), cls.end());
  return sys;
}

inline std::size_t class_of(const CyclotomicSystem& sys, u64 z) { return sys.class_of(z); }

/// (i, j) = |(C_i + 1) ∩ C_j| by direct counting.
inline u64 cyclotomic_number_bruteforce(const CyclotomicSystem& sys, std::size_t i,
                                        std::size_t j) {
  if (i >= sys.order() || j >= sys.order())
    throw std::out_of_range("cyclotomic_number_bruteforce: class index out of range");
  const u64 q = sys.prime();
  u64 count = 0;
  for (u64 z : sys.cyclotomic_class(i)) {
    const u64 succ = (z + 1) % q;
    if (succ != 0 && sys.class_of(succ) == j) ++count;
  }
  return count;
}

namespace detail {

/// The seven linear forms of the order-6 table, each (q + a*x + b)/36.
/// Order: A, B, C, D, E, F, G.
inline i64 sextic_table_entry(u64 q, i64 x, std::size_t i, std::size_t j) {
  static constexpr int kLayout[6][6] = {
      // indices into {A,B,C,D,E,F,G} = {0,...,6}
      {0, 1, 1, 2, 3, 3},
      {4, 5, 6, 3, 1, 6},
      {5, 6, 4, 3, 6, 1},
      {0, 4, 5, 0, 4, 5},
      {4, 3, 6, 1, 5, 6},
      {5, 6, 3, 1, 6, 4},
  };
  static constexpr i64 kXCoeff[7] = {-8, -2, 16, -2, 4, 4, -2};
  static constexpr i64 kConst[7] = {-11, 37, 1, -35, 13, -23, 1};
  const int form = kLayout[i][j];
  const i64 numerator = static_cast<i64>(q) + kXCoeff[form] * x + kConst[form];
  if (numerator % 36 != 0)
    throw NotHallPrimeError("sextic table entry is not an integer for q=" + std::to_string(q) +
                            ", x=" + std::to_string(x));
  return numerator / 36;
}

}  // namespace detail

/// Closed-form cyclotomic number. Supported orders:
///   d = 2: q an odd prime, both parities of f = (q-1)/2.
///   d = 6: q = x^2 + 27 with the Hall parameter supplied.
inline u64 cyclotomic_number_closed_form(u64 q, u64 d, std::size_t i, std::size_t j,
                                         std::optional<HallParameter> x = std::nullopt) {
  if (d == 2) {
    if (!is_prime(q) || q == 2)
      throw NotPrimeError("cyclotomic_number_closed_form: q must be an odd prime");
    if (i >= 2 || j >= 2)
      throw std::out_of_range("cyclotomic_number_closed_form: class index out of range");
    const u64 f = (q - 1) / 2;
    if (f % 2 == 0)  // q = 1 (mod 4)
      return (i == 0 && j == 0) ? (f - 2) / 2 : f / 2;
    // q = 3 (mod 4)
    return (i == 0 && j == 1) ? (f + 1) / 2 : (f - 1) / 2;
  }
  if (d == 6) {
    if (!x)
      throw MissingHallParameterError(
          "cyclotomic_number_closed_form: order 6 requires the Hall parameter x");
    if (i >= 6 || j >= 6)
      throw std::out_of_range("cyclotomic_number_closed_form: class index out of range");
    if (static_cast<i64>(q) != x->x * x->x + 27)
      throw NotHallPrimeError("cyclotomic_number_closed_form: q != x^2 + 27");
    const i64 value = detail::sextic_table_entry(q, x->x, i, j);
    if (value < 0)
      throw NotHallPrimeError("cyclotomic_number_closed_form: negative table entry");
    return static_cast<u64>(value);
  }
  throw UnsupportedOrderError("cyclotomic_number_closed_form: no closed form for order " +
                              std::to_string(d));
}

/// Recovers x with q = x^2 + 27 from the order-6 system and validates every
/// entry of the closed-form table against brute force. A failed validation
/// signals that the class labelling of `sys` is incompatible with the table
/// (TableMismatchError); q - 27 not being a perfect square is NotHallPrimeError.
inline HallParameter derive_hall_x(const CyclotomicSystem& sys) {
  if (sys.order() != 6)
    throw UnsupportedOrderError("derive_hall_x: system must have order 6");
  const u64 q = sys.prime();
  bool square = false;
  if (q >= 27) {
    const u64 diff = q - 27;
    u64 root = 0;
    while ((root + 1) * (root + 1) <= diff) ++root;
    square = (root * root == diff);
  }
  if (!square)
    throw NotHallPrimeError("derive_hall_x: " + std::to_string(q) +
                            " - 27 is not a perfect square");

  // The (0,0) entry does not depend on the choice of primitive root, so it
  // pins x, sign included: (0,0) = (q - 11 - 8x)/36.
  const i64 a00 = static_cast<i64>(cyclotomic_number_bruteforce(sys, 0, 0));
  const i64 numerator = static_cast<i64>(q) - 11 - 36 * a00;
  if (numerator % 8 != 0)
    throw TableMismatchError("derive_hall_x: (0,0) entry is inconsistent with the table");
  const i64 x = numerator / 8;
  if (x * x + 27 != static_cast<i64>(q))
    throw TableMismatchError("derive_hall_x: derived x does not satisfy x^2 + 27 = q");

  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const u64 brute = cyclotomic_number_bruteforce(sys, i, j);
      const u64 closed = cyclotomic_number_closed_form(q, 6, i, j, HallParameter{x});
      if (brute != closed)
        throw TableMismatchError("derive_hall_x: entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is " + std::to_string(brute) +
                                 " but the table gives " + std::to_string(closed) +
                                 " (class labelling mismatch)");
    }
  }
  return HallParameter{x};
}

}  // namespace cycloseq
