#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goldbach/primes.hpp"
#include "oracles.hpp"

using namespace goldbach;

TEST_CASE("sieve_upto smallest limit") {
    auto t = primes::sieve_upto(2);
    CHECK(t.primes() == std::vector<std::uint64_t>{2});
    CHECK(t.contains(2));
}

TEST_CASE("sieve_upto(30) against trial division") {
    auto t = primes::sieve_upto(30);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t x = 2; x <= 30; ++x)
        if (oracle::trial_is_prime(x)) expected.push_back(x);
    CHECK(t.primes() == expected);
    CHECK(t.count() == 10);
}

TEST_CASE("pi(10^6) = 78498 and membership matches a naive sieve") {
    const std::uint64_t limit = 1'000'000;
    auto t = primes::sieve_upto(limit);
    CHECK(t.count() == 78498);

    auto flags = oracle::naive_sieve(limit);
    for (std::uint64_t x = 0; x <= limit; ++x) {
        if (t.limit() >= x && x >= 2) {
            REQUIRE(t.contains(x) == static_cast<bool>(flags[x]));
        }
    }
}

TEST_CASE("sieve_upto rejects bad limits") {
    CHECK_THROWS_AS(primes::sieve_upto(1), std::out_of_range);
    CHECK_THROWS_AS(primes::sieve_upto((1ull << 32) + 2), std::out_of_range);
}

TEST_CASE("sieve_upto is deterministic") {
    auto a = primes::sieve_upto(12345);
    auto b = primes::sieve_upto(12345);
    CHECK(a.primes() == b.primes());
}

TEST_CASE("segment_sieve small windows") {
    auto base = primes::sieve_upto(1000);

    auto seg = primes::segment_sieve(100, 120, base);
    std::vector<std::uint64_t> found;
    for (std::uint64_t x = 101; x < 120; x += 2)
        if (seg.flag(x)) found.push_back(x);
    CHECK(found == std::vector<std::uint64_t>{101, 103, 107, 109, 113});

    auto tiny = primes::segment_sieve(2, 4, base);
    CHECK(tiny.flag(3));
}

TEST_CASE("segment_sieve preconditions") {
    auto base = primes::sieve_upto(10);
    CHECK_THROWS(primes::segment_sieve(100, 100, base));       // empty window
    CHECK_THROWS(primes::segment_sieve(101, 120, base));       // odd lo
    CHECK_THROWS(primes::segment_sieve(100, 100000, base));    // base too small
}

TEST_CASE("segment_sieve at 10^8 agrees with is_prime pointwise") {
    auto base = primes::sieve_upto(1 << 14);
    const std::uint64_t lo = 100'000'000, hi = lo + (1 << 16);
    auto seg = primes::segment_sieve(lo, hi, base);
    std::uint64_t count = 0;
    for (std::uint64_t x = lo + 1; x < hi; x += 2) {
        REQUIRE(seg.flag(x) == primes::is_prime(x));
        if (seg.flag(x)) ++count;
    }
    CHECK(count > 0);
}

TEST_CASE("segment_sieve agrees with is_prime on random windows below 10^7") {
    auto base = primes::sieve_upto(4000);
    std::mt19937_64 rng(42);
    for (int round = 0; round < 20; ++round) {
        std::uint64_t lo = (rng() % 9'000'000) & ~1ull;
        std::uint64_t hi = lo + 2 + rng() % 5000;
        auto seg = primes::segment_sieve(lo, hi, base);
        for (std::uint64_t x = lo; x < hi; ++x)
            REQUIRE(seg.flag(x) == ((x & 1) && primes::is_prime(x)));
    }
}

TEST_CASE("is_prime edge cases") {
    CHECK_FALSE(primes::is_prime(0));
    CHECK_FALSE(primes::is_prime(1));
    CHECK(primes::is_prime(2));
    CHECK(primes::is_prime(3));
    CHECK_FALSE(primes::is_prime(4));
    CHECK(primes::is_prime(2147483647ull));  // 2^31 - 1
    CHECK_FALSE(primes::is_prime(2147483647ull * 2147483647ull));
    CHECK(primes::is_prime(18446744073709551557ull));  // largest 64-bit prime
    CHECK_FALSE(primes::is_prime(18446744073709551615ull));
    // strong pseudoprimes to small bases
    CHECK_FALSE(primes::is_prime(3215031751ull));
    CHECK_FALSE(primes::is_prime(341550071728320ull + 1));
}

TEST_CASE("is_prime agrees with the table over [0, 10^6]") {
    auto t = primes::sieve_upto(1'000'000);
    for (std::uint64_t x = 2; x <= 1'000'000; ++x)
        REQUIRE(primes::is_prime(x) == t.contains(x));
}

TEST_CASE("PrimeTable::contains rejects out-of-range queries") {
    auto t = primes::sieve_upto(100);
    CHECK_THROWS_AS(t.contains(101), std::out_of_range);
}
