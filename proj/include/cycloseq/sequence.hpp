#pragma once

/**
 * @file sequence.hpp
 * @brief Periodic binary sequences: shifts, decimations, phases,
 *        difference functions and correlation spectra.
 *
 * A sequence of period N is a {0,1} vector indexed cyclically; its support
 * is the set of positions holding a 1. The periodic cross-correlation used
 * throughout compares s against t advanced by the shift:
 *
 *   C_{s,t}(w) = #{i : s_i = t_{i+w}} - #{i : s_i != t_{i+w}}
 *
 * which for supports B, C of equal size k satisfies
 *
 *   C_{s,t}(w) = N - 4*(k - d_{B,C}(w)),   d_{B,C}(w) = |(B + w) ∩ C|,
 *
 * so shift regions expressed through the difference function line up with
 * the correlation values. Both computation routes are exposed and are
 * cross-checked in the test suite.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cycloseq/errors.hpp"
#include "cycloseq/modular.hpp"

namespace cycloseq {

/// A subset of Z_N held as a strictly ascending member list.
class SupportSet {
 public:
  SupportSet(u64 modulus, std::vector<u64> members) : modulus_(modulus), members_(std::move(members)) {
    if (modulus_ == 0) throw std::invalid_argument("SupportSet: modulus must be positive");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw std::invalid_argument("SupportSet: duplicate member");
    if (!members_.empty() && members_.back() >= modulus_)
      throw std::invalid_argument("SupportSet: member out of range");
  }

  u64 modulus() const { return modulus_; }
  const std::vector<u64>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(u64 r) const { return std::binary_search(members_.begin(), members_.end(), r % modulus_); }

  /// Text form "N=15: 0,1,2,4,5,8,10" (members ascending; empty set is "N=15:").
  std::string str() const {
    std::string out = "N=" + std::to_string(modulus_) + ":";
    for (std::size_t i = 0; i < members_.size(); ++i)
      out += (i == 0 ? " " : ",") + std::to_string(members_[i]);
    return out;
  }

  /// Strict parser for str()'s format; members must be ascending and distinct.
  static SupportSet parse(std::string_view text);

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  u64 modulus_;
  std::vector<u64> members_;
};

/// A period-N sequence over {0,1} with cyclic indexing.
class BinarySequence {
 public:
  explicit BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw std::invalid_argument("BinarySequence: period must be positive");
    for (auto b : bits_)
      if (b > 1) throw std::invalid_argument("BinarySequence: entries must be 0 or 1");
  }

  static BinarySequence zeros(u64 n) { return BinarySequence(std::vector<std::uint8_t>(n, 0)); }

  u64 period() const { return bits_.size(); }
  std::uint8_t operator[](u64 i) const { return bits_[i % bits_.size()]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  /// Bitstring form, index 0 leftmost, e.g. "0100111101010000110".
  std::string str() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
  }

  /// Parses a bitstring; any character other than '0'/'1' is rejected.
  static BinarySequence parse(std::string_view text) {
    if (text.empty()) throw ParseError("bitstring: empty input");
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') throw ParseError(std::string("bitstring: invalid character '") + c + "'");
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinarySequence(std::move(bits));
  }

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

inline SupportSet SupportSet::parse(std::string_view text) {
  if (text.substr(0, 2) != "N=") throw ParseError("support set: expected leading \"N=\"");
  text.remove_prefix(2);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("support set: missing ':'");
  const auto parse_u64 = [](std::string_view tok) -> u64 {
    if (tok.empty()) throw ParseError("support set: empty number");
    u64 value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw ParseError(std::string("support set: invalid character '") + c + "'");
      value = value * 10 + static_cast<u64>(c - '0');
    }
    return value;
  };
  const u64 modulus = parse_u64(text.substr(0, colon));
  text.remove_prefix(colon + 1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\n')) text.remove_suffix(1);

  std::vector<u64> members;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    members.push_back(parse_u64(tok));
    if (members.size() > 1 && members[members.size() - 2] >= members.back())
      throw ParseError("support set: members must be strictly ascending");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw ParseError("support set: trailing comma");
  }
  if (!members.empty() && members.back() >= modulus)
    throw ParseError("support set: member exceeds modulus");
  return SupportSet(modulus, std::move(members));
}

/// Bit i of the result is 1 iff i lies in the support.
inline BinarySequence characteristic_sequence(const SupportSet& support) {
  std::vector<std::uint8_t> bits(support.modulus(), 0);
  for (u64 m : support.members()) bits[m] = 1;
  return BinarySequence(std::move(bits));
}

/// Exact inverse of characteristic_sequence.
inline SupportSet support(const BinarySequence& seq) {
  std::vector<u64> members;
  for (u64 i = 0; i < seq.period(); ++i)
    if (seq.bits()[i]) members.push_back(i);
  return SupportSet(seq.period(), std::move(members));
}

/// Cyclic left shift: bit i of the result is bit (i + k) of the input.
inline BinarySequence shift(const BinarySequence& seq, i64 k) {
  const u64 n = seq.period();
  const u64 offset = static_cast<u64>(((k % static_cast<i64>(n)) + static_cast<i64>(n))) % n;
  std::vector<std::uint8_t> bits(n);
  for (u64 i = 0; i < n; ++i) bits[i] = seq.bits()[(i + offset) % n];
  return BinarySequence(std::move(bits));
}

/// r-decimation: bit i of the result is bit (r * i mod N) of the input.
/// Requires gcd(r, N) = 1.
inline BinarySequence decimate(const BinarySequence& seq, u64 r) {
  const u64 n = seq.period();
  r %= n;
  if (std::gcd(r, n) != 1)
    throw NotCoprimeError("decimate: " + std::to_string(r) + " is not coprime to " + std::to_string(n));
  std::vector<std::uint8_t> bits(n);
  u64 idx = 0;
  for (u64 i = 0; i < n; ++i) {
    bits[i] = seq.bits()[idx];
    idx += r;
    if (idx >= n) idx -= n;
  }
  return BinarySequence(std::move(bits));
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
inline u64 least_rotation_index(std::span<const std::uint8_t> s) {
  const std::size_t n = s.size();
  if (n <= 1) return 0;
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const auto sj = s[j % n];
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return static_cast<u64>(k % n);
}

/// Lexicographically least rotation, the canonical phase representative.
inline BinarySequence canonical_rotation(const BinarySequence& seq) {
  return shift(seq, static_cast<i64>(least_rotation_index(seq.bits())));
}

/// Smallest p > 0 with shift(s, p) = s; always divides the period.
inline u64 minimal_period(const BinarySequence& seq) {
  const u64 n = seq.period();
  const auto& bits = seq.bits();
  for (u64 p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (u64 i = 0; i < n && ok; ++i) ok = bits[i] == bits[(i + p) % n];
    if (ok) return p;
  }
  return n;
}

/// Smallest y >= 0 with shift(s, y) = t, or nullopt when t is not a phase of s.
inline std::optional<u64> phase_equivalent(const BinarySequence& s, const BinarySequence& t) {
  if (s.period() != t.period())
    throw PeriodMismatchError("phase_equivalent: periods differ");
  const u64 n = s.period();
  const u64 a = least_rotation_index(s.bits());
  const u64 b = least_rotation_index(t.bits());
  for (u64 i = 0; i < n; ++i)
    if (s.bits()[(i + a) % n] != t.bits()[(i + b) % n]) return std::nullopt;
  const u64 y = (a + n - b) % n;
  return y % minimal_period(s);
}

/// d_{B,C}(w) = |(B + w) ∩ C|; supports must share a modulus.
inline u64 difference_function(const SupportSet& b, const SupportSet& c, u64 w) {
  if (b.modulus() != c.modulus())
    throw ModulusMismatchError("difference_function: moduli differ");
  const u64 n = b.modulus();
  w %= n;
  u64 count = 0;
  for (u64 m : b.members())
    if (c.contains((m + w) % n)) ++count;
  return count;
}

/// Direct-sum periodic cross-correlation at shift w (t advanced by w).
inline i64 cross_correlation(const BinarySequence& s, const BinarySequence& t, u64 w) {
  if (s.period() != t.period())
    throw PeriodMismatchError("cross_correlation: periods differ");
  const u64 n = s.period();
  const auto& a = s.bits();
  const auto& b = t.bits();
  w %= n;
  i64 agree = 0;
  for (u64 i = 0, j = w; i < n; ++i, ++j) {
    if (j == n) j = 0;
    agree += (a[i] == b[j]);
  }
  return 2 * agree - static_cast<i64>(n);
}

/// The difference-function route: N - 4*(|B| - d_{B,C}(w)). Requires |B| = |C|.
inline i64 cross_correlation_via_support(const SupportSet& b, const SupportSet& c, u64 w) {
  if (b.modulus() != c.modulus())
    throw ModulusMismatchError("cross_correlation_via_support: moduli differ");
  if (b.size() != c.size())
    throw std::invalid_argument("cross_correlation_via_support: supports must have equal size");
  return static_cast<i64>(b.modulus()) -
         4 * (static_cast<i64>(b.size()) - static_cast<i64>(difference_function(b, c, w)));
}

/// Per-shift correlation values together with their multiplicity histogram.
struct CorrelationSpectrum {
  std::vector<i64> values;       // values[w] for w = 0..N-1
  std::map<i64, u64> histogram;  // value -> multiplicity

  friend bool operator==(const CorrelationSpectrum&, const CorrelationSpectrum&) = default;
};

inline CorrelationSpectrum correlation_spectrum(const BinarySequence& s, const BinarySequence& t) {
  if (s.period() != t.period())
    throw PeriodMismatchError("correlation_spectrum: periods differ");
  CorrelationSpectrum spectrum;
  const u64 n = s.period();
  spectrum.values.reserve(n);
  for (u64 w = 0; w < n; ++w) {
    const i64 v = cross_correlation(s, t, w);
    spectrum.values.push_back(v);
    ++spectrum.histogram[v];
  }
  return spectrum;
}

inline CorrelationSpectrum autocorrelation_spectrum(const BinarySequence& s) {
  return correlation_spectrum(s, s);
}

/// True when the autocorrelation equals -1 at every nonzero shift.
/// A period-1 sequence has no nonzero shifts and counts as perfect.
inline bool is_perfect(const BinarySequence& s) {
  const u64 n = s.period();
  for (u64 w = 1; w < n; ++w)
    if (cross_correlation(s, s, w) != -1) return false;
  return true;
}

}  // namespace cycloseq
