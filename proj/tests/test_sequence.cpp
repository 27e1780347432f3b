#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "cycloseq/sequence.hpp"

using namespace cycloseq;

namespace {

// Period-19 quadratic-residue sequence and its 2-decimation.
const char* kS19 = "0100111101010000110";
const char* kT19 = "0011000010101111001";

// Period-15 twin-prime sequence and its 7-decimation.
const char* kS15 = "111011001010000";
const char* kT15 = "100001010011011";

BinarySequence random_sequence(std::mt19937_64& rng, u64 n) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = rng() & 1;
  return BinarySequence(std::move(bits));
}

SupportSet random_subset(std::mt19937_64& rng, u64 n, u64 k) {
  std::vector<u64> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return SupportSet(n, std::move(all));
}

}  // namespace

TEST_CASE("characteristic sequence and support", "[sequence]") {
  const SupportSet qr(19, {1, 4, 5, 6, 7, 9, 11, 16, 17});
  CHECK(characteristic_sequence(qr).str() == kS19);
  CHECK(characteristic_sequence(SupportSet(5, {})).str() == "00000");
  CHECK(characteristic_sequence(SupportSet(3, {0, 1, 2})).str() == "111");

  CHECK(support(BinarySequence::parse("011")) == SupportSet(3, {1, 2}));
  CHECK(support(BinarySequence::parse(kS19)) == qr);
  CHECK(support(BinarySequence::parse("0000")).size() == 0);
}

TEST_CASE("support round-trips through the characteristic sequence", "[sequence]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_sequence(rng, rng() % 64 + 1);
    CHECK(characteristic_sequence(support(s)) == s);
  }
}

TEST_CASE("shift", "[sequence]") {
  const auto s = BinarySequence::parse("010");
  CHECK(shift(s, 1).str() == "100");  // left cyclic shift
  CHECK(shift(s, 0) == s);
  CHECK(shift(s, 3) == s);
  CHECK(shift(s, -1).str() == "001");

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_sequence(rng, rng() % 40 + 2);
    const i64 a = static_cast<i64>(rng() % 200) - 100;
    const i64 b = static_cast<i64>(rng() % 200) - 100;
    CHECK(shift(shift(t, a), b) == shift(t, a + b));
    auto iterated = t;
    for (u64 i = 0; i < t.period(); ++i) iterated = shift(iterated, 1);
    CHECK(iterated == t);
  }
}

TEST_CASE("decimate", "[sequence]") {
  const auto s19 = BinarySequence::parse(kS19);
  CHECK(decimate(s19, 2).str() == kT19);
  const auto s15 = BinarySequence::parse(kS15);
  CHECK(decimate(s15, 7).str() == kT15);
  CHECK(decimate(s19, 1) == s19);
  CHECK_THROWS_AS(decimate(s15, 5), NotCoprimeError);
  CHECK_THROWS_AS(decimate(s15, 0), NotCoprimeError);
}

TEST_CASE("decimations compose multiplicatively", "[sequence]") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const u64 n = rng() % 60 + 2;
    const auto s = random_sequence(rng, n);
    const u64 a = rng() % n, b = rng() % n;
    if (std::gcd(a, n) != 1 || std::gcd(b, n) != 1) continue;
    CHECK(decimate(decimate(s, a), b) == decimate(s, a * b % n));
  }
}

TEST_CASE("phase equivalence", "[sequence]") {
  const auto s = BinarySequence::parse("0100111101010000110");  // aperiodic
  CHECK(phase_equivalent(s, shift(s, 3)) == 3);
  CHECK(phase_equivalent(s, s) == 0);
  CHECK_FALSE(phase_equivalent(s, decimate(s, 2)).has_value());
  CHECK_THROWS_AS(phase_equivalent(s, BinarySequence::parse("01")), PeriodMismatchError);

  // Periodic input: the smallest witness shift is reported.
  const auto p = BinarySequence::parse("0101");
  CHECK(minimal_period(p) == 2);
  CHECK(phase_equivalent(p, shift(p, 3)) == 1);
}

TEST_CASE("phase equivalence agrees with exhaustive search", "[sequence]") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const u64 n = rng() % 24 + 1;
    const auto s = random_sequence(rng, n);
    const auto t = (trial % 2 == 0) ? shift(s, static_cast<i64>(rng() % n))
                                    : random_sequence(rng, n);
    std::optional<u64> expected;
    for (u64 y = 0; y < n && !expected; ++y)
      if (shift(s, static_cast<i64>(y)) == t) expected = y;
    CHECK(phase_equivalent(s, t) == expected);
  }
}

TEST_CASE("least rotation matches the naive minimum", "[sequence]") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 400; ++trial) {
    const u64 n = rng() % 30 + 1;
    const auto s = random_sequence(rng, n);
    const auto rotated = shift(s, static_cast<i64>(least_rotation_index(s.bits())));
    auto best = s;
    for (u64 k = 1; k < n; ++k) {
      const auto candidate = shift(s, static_cast<i64>(k));
      if (candidate.bits() < best.bits()) best = candidate;
    }
    CHECK(rotated == best);
    CHECK(canonical_rotation(s) == best);
  }
}

TEST_CASE("difference function", "[sequence]") {
  const SupportSet qr(19, {1, 4, 5, 6, 7, 9, 11, 16, 17});
  for (u64 w = 1; w < 19; ++w) CHECK(difference_function(qr, qr, w) == 4);  // lambda
  CHECK(difference_function(qr, qr, 0) == qr.size());
  const SupportSet a(10, {0, 1}), b(10, {5, 6});
  CHECK(difference_function(a, b, 0) == 0);
  CHECK_THROWS_AS(difference_function(a, SupportSet(11, {1}), 0), ModulusMismatchError);
}

TEST_CASE("cross-correlation golden values", "[sequence]") {
  const auto s19 = BinarySequence::parse(kS19);
  const auto t19 = BinarySequence::parse(kT19);
  CHECK(cross_correlation(s19, t19, 0) == -17);
  CHECK(cross_correlation(s19, s19, 0) == 19);

  const auto s15 = BinarySequence::parse(kS15);
  const auto t15 = BinarySequence::parse(kT15);
  CHECK(cross_correlation(s15, t15, 5) == 7);
  const std::vector<i64> expected{-1, -5, -5, 3, -5, 7, 3, -1, -5, 3, 7, -1, 3, -1, -1};
  for (u64 w = 0; w < 15; ++w) CHECK(cross_correlation(s15, t15, w) == expected[w]);

  CHECK_THROWS_AS(cross_correlation(s15, t19, 0), PeriodMismatchError);
}

TEST_CASE("direct sum equals the difference-function route", "[sequence]") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const u64 n = rng() % 199 + 2;
    const u64 k = rng() % (n + 1);
    const auto b = random_subset(rng, n, k);
    const auto c = random_subset(rng, n, k);
    const auto s = characteristic_sequence(b);
    const auto t = characteristic_sequence(c);
    for (u64 w = 0; w < n; ++w)
      CHECK(cross_correlation(s, t, w) == cross_correlation_via_support(b, c, w));
  }
  CHECK_THROWS_AS(
      cross_correlation_via_support(SupportSet(5, {0}), SupportSet(5, {1, 2}), 0),
      std::invalid_argument);
}

TEST_CASE("correlation spectrum and histogram", "[sequence]") {
  const auto s15 = BinarySequence::parse(kS15);
  const auto t15 = BinarySequence::parse(kT15);
  const auto spectrum = correlation_spectrum(s15, t15);
  CHECK(spectrum.histogram ==
        std::map<i64, u64>{{-5, 4}, {-1, 5}, {3, 4}, {7, 2}});

  const auto s19 = BinarySequence::parse(kS19);
  CHECK(autocorrelation_spectrum(s19).histogram == std::map<i64, u64>{{19, 1}, {-1, 18}});

  const auto zeros = BinarySequence::zeros(4);
  CHECK(correlation_spectrum(zeros, zeros).histogram == std::map<i64, u64>{{4, 4}});
}

TEST_CASE("spectrum invariants", "[sequence]") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const u64 n = rng() % 80 + 1;
    const auto s = random_sequence(rng, n);
    const auto t = random_sequence(rng, n);
    const auto spectrum = correlation_spectrum(s, t);
    u64 total = 0;
    for (const auto& [value, count] : spectrum.histogram) {
      total += count;
      CHECK(static_cast<u64>(value < 0 ? -value : value) <= n);
      CHECK((value - static_cast<i64>(n)) % 2 == 0);  // value = N (mod 2)
    }
    CHECK(total == n);
  }
}

TEST_CASE("decimation preserves the autocorrelation spectrum", "[sequence]") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const u64 n = rng() % 199 + 2;
    const auto s = random_sequence(rng, n);
    const auto base = autocorrelation_spectrum(s);
    for (u64 r = 1; r < n; ++r) {
      if (std::gcd(r, n) != 1) continue;
      const auto decimated = decimate(s, r);
      const auto spec = autocorrelation_spectrum(decimated);
      CHECK(spec.histogram == base.histogram);
      // Pointwise: the decimated autocorrelation samples the original at rw.
      for (u64 w = 0; w < n; ++w) CHECK(spec.values[w] == base.values[r * w % n]);
    }
  }
}

TEST_CASE("correlation reversal symmetry", "[sequence]") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const u64 n = rng() % 99 + 2;
    const auto b = random_subset(rng, n, rng() % (n + 1));
    const auto c = random_subset(rng, n, rng() % (n + 1));
    const auto s = characteristic_sequence(b);
    const auto t = characteristic_sequence(c);
    for (u64 w = 0; w < n; ++w) {
      CHECK(difference_function(b, c, w) == difference_function(c, b, (n - w) % n));
      CHECK(cross_correlation(s, t, w) == cross_correlation(t, s, (n - w) % n));
    }
  }
}

TEST_CASE("is_perfect", "[sequence]") {
  CHECK(is_perfect(BinarySequence::parse(kS19)));
  CHECK(is_perfect(BinarySequence::parse(kS15)));
  CHECK_FALSE(is_perfect(BinarySequence::zeros(4)));
  CHECK(is_perfect(BinarySequence::parse("1")));  // no nonzero shifts
}

TEST_CASE("bitstring format", "[sequence]") {
  CHECK(BinarySequence::parse("0101").str() == "0101");
  CHECK_THROWS_AS(BinarySequence::parse(""), ParseError);
  CHECK_THROWS_AS(BinarySequence::parse("012"), ParseError);
  CHECK_THROWS_AS(BinarySequence::parse("0 1"), ParseError);
}

TEST_CASE("support set text format", "[sequence]") {
  const SupportSet d(15, {0, 1, 2, 4, 5, 8, 10});
  CHECK(d.str() == "N=15: 0,1,2,4,5,8,10");
  CHECK(SupportSet::parse("N=15: 0,1,2,4,5,8,10") == d);
  CHECK(SupportSet::parse(d.str()) == d);
  CHECK(SupportSet::parse("N=5:") == SupportSet(5, {}));
  CHECK(SupportSet::parse("N=5: 3") == SupportSet(5, {3}));
  CHECK_THROWS_AS(SupportSet::parse("5: 1,2"), ParseError);
  CHECK_THROWS_AS(SupportSet::parse("N=5: 3,1"), ParseError);   // not ascending
  CHECK_THROWS_AS(SupportSet::parse("N=5: 1,1"), ParseError);   // duplicate
  CHECK_THROWS_AS(SupportSet::parse("N=5: 1,7"), ParseError);   // out of range
  CHECK_THROWS_AS(SupportSet::parse("N=5: 1,"), ParseError);    // trailing comma
  CHECK_THROWS_AS(SupportSet::parse("N=5: a"), ParseError);
}

TEST_CASE("support set construction validates", "[sequence]") {
  CHECK_THROWS_AS(SupportSet(5, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SupportSet(5, {5}), std::invalid_argument);
  CHECK(SupportSet(5, {3, 1}).members() == std::vector<u64>{1, 3});  // sorted on entry
}
