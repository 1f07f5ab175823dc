#include "goldbach/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace goldbach::partitions {

namespace {

void require_even(std::uint64_t e) {
    if (e < 6 || (e & 1) != 0)
        throw std::domain_error("partitions: e must be even and >= 6");
}

void require_covering(std::uint64_t e, const primes::PrimeTable& table) {
    if (table.limit() + 3 < e)
        throw std::invalid_argument("partitions: prime table does not cover e");
}

constexpr std::uint64_t kDefaultProbeLimit = 100'000;

}  // namespace

std::optional<GoldbachPartition> minimal_partition(std::uint64_t e,
                                                   const primes::PrimeTable& probe) {
    require_even(e);
    const std::uint64_t half = e / 2;
    for (std::uint64_t p1 : probe.primes()) {
        if (p1 == 2) continue;
        if (p1 > half) return std::nullopt;  // all candidates exhausted
        if (primes::is_prime(e - p1)) return GoldbachPartition{e, p1, e - p1};
    }
    // Probe table exhausted below e/2; continue over odd candidates.
    std::uint64_t start = probe.limit() + 1;
    if ((start & 1) == 0) ++start;
    for (std::uint64_t p1 = start; p1 <= half; p1 += 2) {
        if (primes::is_prime(p1) && primes::is_prime(e - p1))
            return GoldbachPartition{e, p1, e - p1};
    }
    return std::nullopt;
}

std::optional<GoldbachPartition> minimal_partition(std::uint64_t e) {
    require_even(e);
    static const primes::PrimeTable probe(kDefaultProbeLimit);
    return minimal_partition(e, probe);
}

std::vector<GoldbachPartition> all_partitions(std::uint64_t e,
                                              const primes::PrimeTable& table) {
    require_even(e);
    require_covering(e, table);
    std::vector<GoldbachPartition> out;
    for (std::uint64_t p1 : table.primes()) {
        if (p1 == 2) continue;
        if (p1 > e / 2) break;
        if (table.contains(e - p1)) out.push_back({e, p1, e - p1});
    }
    return out;
}

std::vector<GoldbachPartition> all_partitions(std::uint64_t e) {
    require_even(e);
    return all_partitions(e, primes::PrimeTable(e));
}

std::uint64_t count_partitions(std::uint64_t e, const primes::PrimeTable& table) {
    require_even(e);
    require_covering(e, table);
    std::uint64_t count = 0;
    for (std::uint64_t p1 : table.primes()) {
        if (p1 == 2) continue;
        if (p1 > e / 2) break;
        if (table.contains(e - p1)) ++count;
    }
    return count;
}

std::uint64_t count_partitions(std::uint64_t e) {
    require_even(e);
    return count_partitions(e, primes::PrimeTable(e));
}

void comet(std::uint64_t lo, std::uint64_t hi,
           const std::function<void(const CometPoint&)>& sink) {
    if ((lo & 1) != 0 || (hi & 1) != 0 || lo < 6 || lo >= hi)
        throw std::domain_error("comet: need even 6 <= lo < hi");
    const primes::PrimeTable table(hi);
    for (std::uint64_t e = lo; e < hi; e += 2)
        sink({e, count_partitions(e, table)});
}

std::vector<CometPoint> comet(std::uint64_t lo, std::uint64_t hi) {
    std::vector<CometPoint> out;
    comet(lo, hi, [&](const CometPoint& p) { out.push_back(p); });
    return out;
}

}  // namespace goldbach::partitions
