#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "goldbach/partitions.hpp"
#include "goldbach/primes.hpp"

namespace goldbach::geometry {

using u128 = unsigned __int128;

std::string u128_str(u128 v);

// Exact-integer record of the circle construction for one instance:
// diameter AB = 2n split at E into AE = p1 and EB = p2, altitude DE,
// chords AD and BD, and EC from the foot to the center. All lengths
// that are irrational in general are carried squared, so every field
// is an exact integer.
struct GoldbachCertificate {
    std::uint64_t n;      // radius CD
    std::uint64_t e;      // diameter AB = 2n
    std::uint64_t p1;     // AE
    std::uint64_t p2;     // EB
    std::uint64_t ad_sq;  // AD^2 = p1 * 2n
    std::uint64_t bd_sq;  // BD^2 = p2 * 2n
    std::uint64_t de_sq;  // DE^2 = p1 * p2
    std::uint64_t ec;     // EC = (p2 - p1) / 2

    bool operator==(const GoldbachCertificate&) const = default;
};

// n^2 = g_sq + h^2 with g^2 = p1*p2 and h = (p2-p1)/2.
struct FermatLikeDecomposition {
    std::uint64_t n;
    std::uint64_t g_sq;
    std::uint64_t h;
    partitions::GoldbachPartition source;
};

// Outcome of one of the five identity checks; lhs and rhs are the two
// compared squared magnitudes (sums, for version 5).
struct VersionCheck {
    int version;
    bool holds;
    u128 lhs;
    u128 rhs;
};

using PrimalityFn = std::function<bool(std::uint64_t)>;

// Derives all certificate fields exactly. Requires n >= 3, n <= 2^31,
// p.e == 2n, p1 + p2 == 2n with both odd and p1 <= p2. Primality is
// not enforced here; version 5 checks it.
GoldbachCertificate build_certificate(std::uint64_t n,
                                      const partitions::GoldbachPartition& p);

// Exact identity per version, computed from the stored fields:
//   1: p1^2 + DE^2 = AD^2        (right angle at E in ADE)
//   2: p2^2 + DE^2 = BD^2        (right angle at E in BDE)
//   3: DE^2 + EC^2 = n^2         (right angle at E in DEC)
//   4: AD^2 + BD^2 = (2n)^2      (right angle at D, Thales)
//   5: versions 1-4 plus p1 + p2 = 2n with p1, p2 odd primes
VersionCheck check_version(const GoldbachCertificate& c, int k);
VersionCheck check_version(const GoldbachCertificate& c, int k,
                           const PrimalityFn& primality);

// True iff every version 1..5 holds.
bool verify_certificate(const GoldbachCertificate& c);
bool verify_certificate(const GoldbachCertificate& c, const PrimalityFn& primality);

// One decomposition per Goldbach partition of 2n, ascending in h.
// Requires n >= 3.
std::vector<FermatLikeDecomposition> fermat_like(std::uint64_t n);
std::vector<FermatLikeDecomposition> fermat_like(std::uint64_t n,
                                                 const primes::PrimeTable& table);

}  // namespace goldbach::geometry
