#include "goldbach/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace goldbach::primes {

namespace {

std::uint64_t isqrt64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool get_bit(const std::vector<std::uint64_t>& w, std::uint64_t i) {
    return (w[i >> 6] >> (i & 63)) & 1;
}

inline void clear_bit(std::vector<std::uint64_t>& w, std::uint64_t i) {
    w[i >> 6] &= ~(1ull << (i & 63));
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 2 || limit > (1ull << 32))
        throw std::out_of_range("PrimeTable: limit must be in [2, 2^32]");

    // bit i stands for the odd number 2i+1
    const std::uint64_t nbits = (limit + 1) / 2;
    odd_bits_.assign((nbits + 63) / 64, ~0ull);
    clear_bit(odd_bits_, 0);  // 1

    for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (!get_bit(odd_bits_, i)) continue;
        const std::uint64_t p = 2 * i + 1;
        for (std::uint64_t j = p * p; j <= limit; j += 2 * p)
            clear_bit(odd_bits_, j >> 1);
    }

    primes_.push_back(2);
    for (std::uint64_t i = 1; i < nbits; ++i)
        if (get_bit(odd_bits_, i)) primes_.push_back(2 * i + 1);
}

bool PrimeTable::contains(std::uint64_t x) const {
    if (x > limit_) throw std::out_of_range("PrimeTable::contains: x exceeds limit");
    if (x < 2) return false;
    if (x == 2) return true;
    if ((x & 1) == 0) return false;
    return get_bit(odd_bits_, x >> 1);
}

PrimeTable sieve_upto(std::uint64_t limit) { return PrimeTable(limit); }

SegmentBitmap::SegmentBitmap(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {
    if ((lo & 1) != 0 || lo >= hi)
        throw std::invalid_argument("SegmentBitmap: need even lo < hi");
    const std::uint64_t nbits = (hi - lo) / 2;  // odds in [lo, hi)
    bits_.assign((nbits + 63) / 64, ~0ull);
}

bool SegmentBitmap::flag(std::uint64_t x) const {
    if (x < lo_ || x >= hi_)
        throw std::out_of_range("SegmentBitmap::flag: x outside window");
    if ((x & 1) == 0) return false;
    return get_bit(bits_, (x - lo_) >> 1);
}

void SegmentBitmap::clear(std::uint64_t x) { clear_bit(bits_, (x - lo_) >> 1); }

SegmentBitmap segment_sieve(std::uint64_t lo, std::uint64_t hi, const PrimeTable& base) {
    if ((lo & 1) != 0 || lo >= hi)
        throw std::invalid_argument("segment_sieve: need even lo < hi");
    if (base.limit() < isqrt64(hi - 1))
        throw std::invalid_argument("segment_sieve: base table too small for window");

    SegmentBitmap seg(lo, hi);
    if (lo <= 1 && 1 < hi) seg.clear(1);

    for (std::uint64_t p : base.primes()) {
        if (p == 2) continue;
        if (p * p >= hi) break;
        // first odd multiple of p in the window, not p itself
        std::uint64_t start = ((lo + p - 1) / p) * p;
        if (start < p * p) start = p * p;
        if ((start & 1) == 0) start += p;
        for (std::uint64_t j = start; j < hi; j += 2 * p) seg.clear(j);
    }
    return seg;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Strong pseudoprime test for one witness; n odd, n-1 = d * 2^s.
bool strong_probable_prime(std::uint64_t n, std::uint64_t d, int s, std::uint64_t a) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (x == p) return true;
        if (x % p == 0) return false;
    }
    if (x < 41 * 41) return true;

    std::uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }

    // Verified deterministic witness sets per range (Jaeschke; Sinclair;
    // the 12-prime set covers everything below 2^64).
    static constexpr std::uint64_t full[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    struct Tier { std::uint64_t bound; const std::uint64_t* w; int k; };
    static constexpr std::uint64_t w1[] = {2};
    static constexpr std::uint64_t w2[] = {2, 3};
    static constexpr std::uint64_t w3[] = {31, 73};
    static constexpr std::uint64_t w4[] = {2, 3, 5};
    static constexpr std::uint64_t w5[] = {2, 3, 5, 7};
    static constexpr std::uint64_t w6[] = {2, 7, 61};
    static constexpr std::uint64_t w7[] = {2, 3, 5, 7, 11};
    static constexpr std::uint64_t w8[] = {2, 3, 5, 7, 11, 13};
    static constexpr std::uint64_t w9[] = {2, 3, 5, 7, 11, 13, 17};
    static constexpr Tier tiers[] = {
        {2047ull, w1, 1},
        {1373653ull, w2, 2},
        {9080191ull, w3, 2},
        {25326001ull, w4, 3},
        {3215031751ull, w5, 4},
        {4759123141ull, w6, 3},
        {2152302898747ull, w7, 5},
        {3474749660383ull, w8, 6},
        {341550071728321ull, w9, 7},
    };

    const std::uint64_t* witnesses = full;
    int k = 12;
    for (const Tier& t : tiers) {
        if (x < t.bound) { witnesses = t.w; k = t.k; break; }
    }
    for (int i = 0; i < k; ++i)
        if (!strong_probable_prime(x, d, s, witnesses[i])) return false;
    return true;
}

}  // namespace goldbach::primes
