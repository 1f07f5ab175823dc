#include "goldbach/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace goldbach::geometry {

std::string u128_str(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

GoldbachCertificate build_certificate(std::uint64_t n,
                                      const partitions::GoldbachPartition& p) {
    if (n < 3) throw std::domain_error("build_certificate: n must be >= 3");
    if (n > (1ull << 31))
        throw std::out_of_range("build_certificate: n exceeds 2^31");
    if (p.e != 2 * n)
        throw std::invalid_argument("build_certificate: partition e != 2n");
    if (p.p1 + p.p2 != p.e || p.p1 > p.p2 || (p.p1 & 1) == 0 || (p.p2 & 1) == 0)
        throw std::invalid_argument("build_certificate: malformed partition");

    GoldbachCertificate c;
    c.n = n;
    c.e = 2 * n;
    c.p1 = p.p1;
    c.p2 = p.p2;
    c.ad_sq = p.p1 * c.e;
    c.bd_sq = p.p2 * c.e;
    c.de_sq = p.p1 * p.p2;
    c.ec = (p.p2 - p.p1) / 2;
    return c;
}

VersionCheck check_version(const GoldbachCertificate& c, int k) {
    return check_version(c, k, primes::is_prime);
}

VersionCheck check_version(const GoldbachCertificate& c, int k,
                           const PrimalityFn& primality) {
    VersionCheck v{k, false, 0, 0};
    switch (k) {
        case 1:
            v.lhs = static_cast<u128>(c.p1) * c.p1 + c.de_sq;
            v.rhs = c.ad_sq;
            break;
        case 2:
            v.lhs = static_cast<u128>(c.p2) * c.p2 + c.de_sq;
            v.rhs = c.bd_sq;
            break;
        case 3:
            v.lhs = static_cast<u128>(c.de_sq) + static_cast<u128>(c.ec) * c.ec;
            v.rhs = static_cast<u128>(c.n) * c.n;
            break;
        case 4:
            v.lhs = static_cast<u128>(c.ad_sq) + c.bd_sq;
            v.rhs = static_cast<u128>(c.e) * c.e;
            break;
        case 5: {
            v.lhs = static_cast<u128>(c.p1) + c.p2;
            v.rhs = c.e;
            bool triangles = true;
            for (int i = 1; i <= 4; ++i)
                triangles = triangles && check_version(c, i, primality).holds;
            v.holds = triangles && v.lhs == v.rhs && (c.p1 & 1) && (c.p2 & 1) &&
                      primality(c.p1) && primality(c.p2);
            return v;
        }
        default:
            throw std::domain_error("check_version: version must be in 1..5");
    }
    v.holds = v.lhs == v.rhs;
    return v;
}

bool verify_certificate(const GoldbachCertificate& c) {
    return verify_certificate(c, primes::is_prime);
}

bool verify_certificate(const GoldbachCertificate& c, const PrimalityFn& primality) {
    // Version 5 subsumes 1-4, but each is checked on its own so a
    // tampered field is pinned to every identity it breaks.
    for (int k = 1; k <= 5; ++k)
        if (!check_version(c, k, primality).holds) return false;
    return true;
}

std::vector<FermatLikeDecomposition> fermat_like(std::uint64_t n,
                                                 const primes::PrimeTable& table) {
    if (n < 3) throw std::domain_error("fermat_like: n must be >= 3");
    auto parts = partitions::all_partitions(2 * n, table);
    std::vector<FermatLikeDecomposition> out;
    out.reserve(parts.size());
    // ascending p1 means descending h; reverse for ascending h
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        out.push_back({n, it->p1 * it->p2, (it->p2 - it->p1) / 2, *it});
    return out;
}

std::vector<FermatLikeDecomposition> fermat_like(std::uint64_t n) {
    if (n < 3) throw std::domain_error("fermat_like: n must be >= 3");
    return fermat_like(n, primes::PrimeTable(2 * n));
}

}  // namespace goldbach::geometry
