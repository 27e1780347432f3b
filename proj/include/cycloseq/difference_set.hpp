#pragma once

/**
 * @file difference_set.hpp
 * @brief Quadratic-residue, twin-prime and sextic-residue difference sets,
 *        multiplier groups and decimation orbits.
 *
 * The three families:
 *   paley      q = 3 (mod 4) prime: the quadratic residues mod q,
 *              parameters (q, (q-1)/2, (q-3)/4).
 *   twin_prime q, q+2 both prime: the product construction over
 *              GF(q) x GF(q+2) flattened into Z_{q(q+2)} by the CRT map
 *              z -> (z mod q, z mod q+2); parameters (v, (v-1)/2, (v-3)/4).
 *   hall       q = x^2 + 27, q = 1 (mod 6) prime: classes 0, 1, 3 of the
 *              order-6 cyclotomic system; parameters (q, (q-1)/2, (q-3)/4).
 *
 * A multiplier of a subset D of Z_N is a unit r with rD = D + g for some g,
 * equivalently: the r-decimation of the characteristic sequence is one of
 * its phases. Multipliers form a group M; the decimation orbit lists one
 * conjugate r^{-1}D per coset of M in the units of Z_N, and these conjugates
 * carry exactly the distinct decimations of the characteristic sequence.
 */

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycloseq/cyclotomy.hpp"
#include "cycloseq/errors.hpp"
#include "cycloseq/modular.hpp"
#include "cycloseq/sequence.hpp"

namespace cycloseq {

enum class Family { paley, twin_prime, hall };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::paley: return "paley";
    case Family::twin_prime: return "twinprime";
    default: return "hall";
  }
}

inline std::optional<Family> family_from_name(std::string_view name) {
  if (name == "paley") return Family::paley;
  if (name == "twinprime") return Family::twin_prime;
  if (name == "hall") return Family::hall;
  return std::nullopt;
}

/// The quadratic residues mod q; requires q prime with q = 3 (mod 4).
inline SupportSet paley_set(u64 q) {
  if (!is_prime(q)) throw NotPrimeError("paley_set: " + std::to_string(q) + " is not prime");
  if (q % 4 != 3)
    throw BadCongruenceError("paley_set: " + std::to_string(q) + " is not 3 (mod 4)");
  std::vector<std::uint8_t> mark(q, 0);
  for (u64 z = 1; z < q; ++z) mark[mul_mod(z, z, q)] = 1;
  std::vector<u64> members;
  members.reserve((q - 1) / 2);
  for (u64 z = 1; z < q; ++z)
    if (mark[z]) members.push_back(z);
  return SupportSet(q, std::move(members));
}

/// The non-residues mod q: the second conjugate of the quadratic-residue
/// set (a translate of the first only in the degenerate case q = 3).
inline SupportSet paley_conjugate(u64 q) {
  const SupportSet qr = paley_set(q);
  std::vector<u64> members;
  members.reserve((q - 1) / 2);
  for (u64 z = 1; z < q; ++z)
    if (!qr.contains(z)) members.push_back(z);
  return SupportSet(q, std::move(members));
}

namespace detail {

/// chi[z] = +1 / -1 for nonzero squares / non-squares mod p, 0 for z = 0.
inline std::vector<int> quadratic_character_table(u64 p) {
  std::vector<int> chi(p, -1);
  chi[0] = 0;
  for (u64 z = 1; z < p; ++z) chi[mul_mod(z, z, p)] = 1;
  return chi;
}

}  // namespace detail

/// True when q and q + 2 are both prime.
inline bool is_twin_prime_pair(u64 q) { return is_prime(q) && is_prime(q + 2); }

/// The twin-prime difference set in Z_{q(q+2)}: pairs whose two quadratic
/// characters agree, together with the full row over the second zero.
inline SupportSet twin_prime_set(u64 q) {
  if (!is_twin_prime_pair(q))
    throw NotTwinPrimeError("twin_prime_set: " + std::to_string(q) + ", " +
                            std::to_string(q + 2) + " is not a twin prime pair");
  const u64 p2 = q + 2;
  const u64 n = q * p2;
  const auto chi1 = detail::quadratic_character_table(q);
  const auto chi2 = detail::quadratic_character_table(p2);
  std::vector<u64> members;
  members.reserve((n - 1) / 2);
  for (u64 z = 0; z < n; ++z) {
    const int c1 = chi1[z % q];
    const int c2 = chi2[z % p2];
    if (c2 == 0 || (c1 != 0 && c1 == c2)) members.push_back(z);
  }
  return SupportSet(n, std::move(members));
}

/// The second twin-prime conjugate: pairs whose quadratic characters
/// disagree, together with the full row over the second zero.
inline SupportSet twin_prime_conjugate(u64 q) {
  if (!is_twin_prime_pair(q))
    throw NotTwinPrimeError("twin_prime_conjugate: " + std::to_string(q) + ", " +
                            std::to_string(q + 2) + " is not a twin prime pair");
  const u64 p2 = q + 2;
  const u64 n = q * p2;
  const auto chi1 = detail::quadratic_character_table(q);
  const auto chi2 = detail::quadratic_character_table(p2);
  std::vector<u64> members;
  members.reserve((n - 1) / 2);
  for (u64 z = 0; z < n; ++z) {
    const int c1 = chi1[z % q];
    const int c2 = chi2[z % p2];
    if (c2 == 0 || (c1 != 0 && c1 != c2)) members.push_back(z);
  }
  return SupportSet(n, std::move(members));
}

/// A constructed sextic-residue difference set plus the data that pins it:
/// the validated order-6 system and the derived parameter x.
struct HallConstruction {
  SupportSet set;
  HallParameter x;
  CyclotomicSystem system;
};

/// Classes 0, 1, 3 of the order-6 system over GF(q). The default primitive
/// root is the smallest one whose labelling validates the closed-form table;
/// an explicit alpha is used as given and a labelling mismatch propagates.
inline HallConstruction hall_set(u64 q, std::optional<u64> alpha = std::nullopt) {
  if (!is_prime(q)) throw NotHallPrimeError("hall_set: " + std::to_string(q) + " is not prime");
  if (q % 6 != 1 || q < 28)
    throw NotHallPrimeError("hall_set: " + std::to_string(q) + " is not 1 (mod 6) with q > 27");
  {
    const u64 diff = q - 27;
    u64 root = 0;
    while ((root + 1) * (root + 1) <= diff) ++root;
    if (root * root != diff)
      throw NotHallPrimeError("hall_set: " + std::to_string(q) + " - 27 is not a perfect square");
  }

  std::optional<CyclotomicSystem> sys;
  std::optional<HallParameter> x;
  if (alpha) {
    sys = build_cyclotomic_system(q, 6, alpha);
    x = derive_hall_x(*sys);  // TableMismatchError propagates for a bad labelling
  } else {
    // Smallest primitive root first; fall back to the next ones in the rare
    // case its labelling does not match the table.
    std::optional<TableMismatchError> last;
    for (u64 g = 2; g < q && !x; ++g) {
      if (!is_primitive_root(g, q)) continue;
      auto candidate = build_cyclotomic_system(q, 6, g);
      try {
        x = derive_hall_x(candidate);
        sys = std::move(candidate);
      } catch (const TableMismatchError& e) {
        last = e;
      }
    }
    if (!x) throw last ? *last : TableMismatchError("hall_set: no valid labelling found");
  }

  std::vector<u64> members;
  members.reserve(3 * sys->class_size());
  for (std::size_t i : {0, 1, 3})
    members.insert(members.end(), sys->cyclotomic_class(i).begin(),
                   sys->cyclotomic_class(i).end());
  return HallConstruction{SupportSet(q, std::move(members)), *x, std::move(*sys)};
}

/// (v, k, lambda) of a difference set.
struct DesignParameters {
  u64 v = 0, k = 0, lambda = 0;
  friend bool operator==(const DesignParameters&, const DesignParameters&) = default;
};

/// Checks the definition directly: every nonzero g must arise the same
/// number of times as an ordered difference of members. Returns the
/// parameters on success, nullopt otherwise.
inline std::optional<DesignParameters> verify_difference_set(const SupportSet& d) {
  const u64 n = d.modulus();
  if (n < 2) return std::nullopt;
  std::vector<u64> count(n, 0);
  const auto& m = d.members();
  for (u64 x : m)
    for (u64 y : m)
      if (x != y) ++count[(x + n - y) % n];
  for (u64 g = 2; g < n; ++g)
    if (count[g] != count[1]) return std::nullopt;
  return DesignParameters{n, d.size(), count[1]};
}

/// Which family, its prime, the derived design parameters, and (for the
/// sextic family) the parameter x.
struct FamilyDescriptor {
  Family family;
  u64 q = 0;
  std::optional<HallParameter> x;
  u64 v = 0, k = 0, lambda = 0;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

/// Validates admissibility of q for the family and fills in (v, k, lambda).
inline FamilyDescriptor describe_family(Family family, u64 q) {
  FamilyDescriptor d;
  d.family = family;
  d.q = q;
  switch (family) {
    case Family::paley: {
      paley_set(q);  // admissibility check
      d.v = q;
      break;
    }
    case Family::twin_prime: {
      if (!is_twin_prime_pair(q))
        throw NotTwinPrimeError("describe_family: " + std::to_string(q) + ", " +
                                std::to_string(q + 2) + " is not a twin prime pair");
      d.v = q * (q + 2);
      break;
    }
    case Family::hall: {
      d.x = hall_set(q).x;
      d.v = q;
      break;
    }
  }
  d.k = (d.v - 1) / 2;
  d.lambda = (d.v - 3) / 4;
  return d;
}

/// True when q is admissible for the family (no exception control flow).
inline bool is_family_admissible(Family family, u64 q) {
  switch (family) {
    case Family::paley:
      return is_prime(q) && q % 4 == 3;
    case Family::twin_prime:
      return is_twin_prime_pair(q);
    case Family::hall: {
      if (!is_prime(q) || q % 6 != 1 || q < 28) return false;
      const u64 diff = q - 27;
      u64 root = 0;
      while ((root + 1) * (root + 1) <= diff) ++root;
      return root * root == diff;
    }
  }
  return false;
}

/// The group of all multipliers of a subset of Z_N under multiplication mod N.
struct MultiplierGroup {
  u64 modulus = 0;
  std::vector<u64> members;  // ascending; always contains 1

  bool contains(u64 r) const {
    return std::binary_search(members.begin(), members.end(), r % modulus);
  }
  friend bool operator==(const MultiplierGroup&, const MultiplierGroup&) = default;
};

/// All units r with rD a cyclic translate of D. Works for arbitrary subsets,
/// not only difference sets. Candidates are tested by comparing canonical
/// rotations of the characteristic sequences, which is equivalent to the
/// translate condition and O(N) per candidate. When |D| is coprime to N the
/// translate amount is forced by element sums (rD = D + g implies
/// g = (r-1) * sum(D) / |D| mod N), so a single O(|D|) membership scan with
/// early exit decides each candidate instead.
inline MultiplierGroup multiplier_group(const SupportSet& d) {
  const u64 n = d.modulus();
  if (n < 2) throw std::invalid_argument("multiplier_group: modulus must be >= 2");

  MultiplierGroup group;
  group.modulus = n;

  const u64 k = d.size();
  if (k > 0 && std::gcd(k, n) == 1) {
    std::vector<std::uint8_t> in_d(n, 0);
    u64 sum = 0;
    for (u64 m : d.members()) {
      in_d[m] = 1;
      sum = (sum + m) % n;
    }
    const u64 k_inv = mod_inverse(k % n, n);
    for (u64 r = 1; r < n; ++r) {
      if (std::gcd(r, n) != 1) continue;
      const u64 g = mul_mod(mul_mod(r - 1, sum, n), k_inv, n);
      bool translate = true;
      for (u64 m : d.members()) {
        if (!in_d[(mul_mod(r, m, n) + n - g) % n]) {
          translate = false;
          break;
        }
      }
      if (translate) group.members.push_back(r);
    }
    return group;
  }

  const auto base_bits = characteristic_sequence(d).bits();
  const u64 base_start = least_rotation_index(base_bits);
  std::vector<std::uint8_t> bits(n);
  for (u64 r = 1; r < n; ++r) {
    if (std::gcd(r, n) != 1) continue;
    std::fill(bits.begin(), bits.end(), 0);
    for (u64 m : d.members()) bits[mul_mod(r, m, n)] = 1;
    const u64 start = least_rotation_index(bits);
    bool same = true;
    for (u64 i = 0; i < n && same; ++i)
      same = bits[(start + i) % n] == base_bits[(base_start + i) % n];
    if (same) group.members.push_back(r);
  }
  return group;
}

/// One coset of the multiplier group: its smallest representative r and the
/// conjugate set r^{-1}D, whose characteristic sequence is the r-decimation.
struct OrbitEntry {
  u64 representative;
  SupportSet conjugate;
};

/// One entry per coset of the multiplier group in the units of Z_N, ordered
/// by ascending representative (so r = 1 comes first). The conjugates carry
/// exactly the distinct decimations of the characteristic sequence of D.
inline std::vector<OrbitEntry> decimation_orbit(const SupportSet& d) {
  const u64 n = d.modulus();
  const MultiplierGroup m = multiplier_group(d);
  std::vector<std::uint8_t> covered(n, 0);
  std::vector<OrbitEntry> orbit;
  for (u64 r = 1; r < n; ++r) {
    if (std::gcd(r, n) != 1 || covered[r]) continue;
    for (u64 mm : m.members) covered[mul_mod(r, mm, n)] = 1;
    const u64 inv = mod_inverse(r, n);
    std::vector<u64> members;
    members.reserve(d.size());
    for (u64 x : d.members()) members.push_back(mul_mod(inv, x, n));
    orbit.push_back(OrbitEntry{r, SupportSet(n, std::move(members))});
  }
  return orbit;
}

/// The product-form multiplier set of the twin-prime construction (pairs of
/// agreeing quadratic characters), for cross-checking against the computed
/// multiplier group.
inline std::vector<u64> twin_prime_multiplier_set(u64 q) {
  if (!is_twin_prime_pair(q))
    throw NotTwinPrimeError("twin_prime_multiplier_set: not a twin prime pair");
  const u64 p2 = q + 2;
  const u64 n = q * p2;
  const auto chi1 = detail::quadratic_character_table(q);
  const auto chi2 = detail::quadratic_character_table(p2);
  std::vector<u64> members;
  for (u64 z = 1; z < n; ++z) {
    const int c1 = chi1[z % q];
    const int c2 = chi2[z % p2];
    if (c1 != 0 && c1 == c2) members.push_back(z);
  }
  return members;
}

}  // namespace cycloseq
