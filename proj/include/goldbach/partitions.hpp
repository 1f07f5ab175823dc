#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "goldbach/primes.hpp"

namespace goldbach::partitions {

// An even number e = p1 + p2 split into two odd primes, p1 <= p2.
struct GoldbachPartition {
    std::uint64_t e;
    std::uint64_t p1;
    std::uint64_t p2;

    bool operator==(const GoldbachPartition&) const = default;
};

// One point of the Goldbach comet: the even number and how many
// unordered partitions it has.
struct CometPoint {
    std::uint64_t e;
    std::uint64_t count;

    bool operator==(const CometPoint&) const = default;
};

// Partition of e with the smallest p1, searching odd primes ascending.
// `probe` supplies the p1 candidates; complements are tested with
// is_prime, and the search continues past probe.limit() if needed.
// Returns nullopt only when no partition exists at all (a conjecture
// counterexample, reported rather than thrown).
// Requires e even, e >= 6.
std::optional<GoldbachPartition> minimal_partition(std::uint64_t e,
                                                   const primes::PrimeTable& probe);
std::optional<GoldbachPartition> minimal_partition(std::uint64_t e);

// All partitions with p1 <= p2, ascending in p1.
// `table` must cover e (table.limit() >= e - 3).
std::vector<GoldbachPartition> all_partitions(std::uint64_t e,
                                              const primes::PrimeTable& table);
std::vector<GoldbachPartition> all_partitions(std::uint64_t e);

// |all_partitions(e)| without materializing the list.
std::uint64_t count_partitions(std::uint64_t e, const primes::PrimeTable& table);
std::uint64_t count_partitions(std::uint64_t e);

// One CometPoint per even e in [lo, hi), ascending. Requires lo, hi
// even and 6 <= lo < hi.
void comet(std::uint64_t lo, std::uint64_t hi,
           const std::function<void(const CometPoint&)>& sink);
std::vector<CometPoint> comet(std::uint64_t lo, std::uint64_t hi);

}  // namespace goldbach::partitions
