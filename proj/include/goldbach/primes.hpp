#pragma once

#include <cstdint>
#include <vector>

namespace goldbach::primes {

// Precomputed primes up to an inclusive limit, with O(1) membership
// lookup. Storage is a bit-packed odd-only sieve; the prime list keeps
// 2 explicitly. Immutable after construction, safe to share across
// threads.
class PrimeTable {
public:
    // Sieves all primes <= limit. Requires 2 <= limit <= 2^32.
    explicit PrimeTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    std::size_t count() const { return primes_.size(); }

    // True iff x is prime. Requires x <= limit().
    bool contains(std::uint64_t x) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
    std::vector<std::uint64_t> odd_bits_;  // bit i <=> 2i+1 is prime
};

PrimeTable sieve_upto(std::uint64_t limit);

// Primality flags for the odd integers in a window [lo, hi).
// Even positions are never marked; 2 is the caller's problem.
class SegmentBitmap {
public:
    SegmentBitmap(std::uint64_t lo, std::uint64_t hi);

    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }

    // True iff x is an odd prime. Requires lo() <= x < hi().
    bool flag(std::uint64_t x) const;

    void clear(std::uint64_t x);

private:
    std::uint64_t lo_;  // even
    std::uint64_t hi_;
    std::vector<std::uint64_t> bits_;
};

// Sieves the window [lo, hi). Requires lo even, lo < hi, and
// base.limit() >= floor(sqrt(hi-1)).
SegmentBitmap segment_sieve(std::uint64_t lo, std::uint64_t hi,
                            const PrimeTable& base);

// Deterministic primality for the full 64-bit range (tiered
// strong-pseudoprime witness sets; no probabilistic error).
bool is_prime(std::uint64_t x);

}  // namespace goldbach::primes
