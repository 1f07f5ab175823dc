#include "goldbach/engine.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "goldbach/geometry.hpp"
#include "goldbach/primes.hpp"

namespace goldbach::engine {

namespace {

constexpr std::uint64_t kProbeLimit = 100'000;  // shared small-prime table

std::uint64_t isqrt64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void validate(const SweepConfig& cfg) {
    if ((cfg.lo & 1) || (cfg.hi & 1) || cfg.lo < 6 || cfg.lo >= cfg.hi)
        throw std::domain_error("sweep: need even 6 <= lo < hi");
    if (cfg.segment_span < 2) throw std::domain_error("sweep: segment_span must be >= 2");
    if (cfg.workers < 1) throw std::domain_error("sweep: workers must be >= 1");
    if (cfg.certify && cfg.hi > (1ull << 32) + 2)
        throw std::domain_error("sweep: certification needs e <= 2^32; pass certify=false");
    if (cfg.collect_comet && cfg.hi > (1ull << 32))
        throw std::domain_error("sweep: comet collection needs hi <= 2^32");
}

struct ChunkResult {
    std::uint64_t lo = 0, hi = 0;
    std::uint64_t verified = 0;
    std::vector<std::uint64_t> failures;
    std::vector<RecordEntry> records;  // local strict maxima
    std::vector<partitions::CometPoint> comet;
};

// Appends only entries whose min_p1 strictly exceeds the current maximum.
void append_records(std::vector<RecordEntry>& dst, const std::vector<RecordEntry>& src) {
    for (const RecordEntry& r : src)
        if (dst.empty() || r.min_p1 > dst.back().min_p1) dst.push_back(r);
}

ChunkResult process_chunk(std::uint64_t clo, std::uint64_t chi,
                          const primes::PrimeTable& probe,
                          const primes::PrimeTable& base, bool certify,
                          const primes::PrimeTable* comet_table) {
    ChunkResult out;
    out.lo = clo;
    out.hi = chi;

    // The window also covers the complements e - p1 for probed p1.
    const std::uint64_t wlo =
        clo > probe.limit() + 2 ? (clo - probe.limit()) & ~1ull : 2;
    const primes::SegmentBitmap seg = primes::segment_sieve(wlo, chi, base);

    const auto& candidates = probe.primes();
    for (std::uint64_t e = clo; e < chi; e += 2) {
        const std::uint64_t half = e / 2;
        std::uint64_t p1 = 0, p2 = 0;
        bool found = false, exhausted = false;
        for (std::size_t i = 1; i < candidates.size(); ++i) {  // skip 2
            if (candidates[i] > half) { exhausted = true; break; }
            const std::uint64_t q = e - candidates[i];
            if (seg.flag(q)) {
                p1 = candidates[i];
                p2 = q;
                found = true;
                break;
            }
        }
        if (!found && !exhausted) {
            // probe table ran out below e/2; fall back to the generic search
            if (auto p = partitions::minimal_partition(e, probe)) {
                p1 = p->p1;
                p2 = p->p2;
                found = true;
            }
        }

        if (!found) {
            out.failures.push_back(e);
            continue;
        }
        if (certify) {
            const auto cert = geometry::build_certificate(
                half, partitions::GoldbachPartition{e, p1, p2});
            auto primality = [&](std::uint64_t x) {
                if (x <= probe.limit()) return probe.contains(x);
                if (x >= wlo && x < chi) return seg.flag(x);
                return primes::is_prime(x);
            };
            if (!geometry::verify_certificate(cert, primality))
                throw std::logic_error("sweep: certificate check failed for a valid partition");
        }
        ++out.verified;
        if (out.records.empty() || p1 > out.records.back().min_p1)
            out.records.push_back({e, p1});
        if (comet_table)
            out.comet.push_back({e, partitions::count_partitions(e, *comet_table)});
    }
    return out;
}

RangeReport run_sweep(const SweepConfig& cfg, std::uint64_t start_e,
                      const SweepProgress& prior) {
    const auto t0 = std::chrono::steady_clock::now();

    RangeReport report;
    report.lo = cfg.lo;
    report.hi = cfg.hi;
    report.verified_count = prior.verified;
    report.records = prior.records;
    if (cfg.collect_comet) report.comet.emplace();

    if (start_e >= cfg.hi) {
        report.wall_time = std::chrono::steady_clock::now() - t0;
        return report;
    }

    const primes::PrimeTable probe(std::max<std::uint64_t>(kProbeLimit, isqrt64(cfg.hi - 1)));
    const primes::PrimeTable& base = probe;
    std::optional<primes::PrimeTable> comet_table;
    if (cfg.collect_comet) comet_table.emplace(cfg.hi);

    const std::uint64_t span = std::max<std::uint64_t>(cfg.segment_span & ~1ull, 2);
    const std::uint64_t total = cfg.hi - start_e;
    const std::size_t num_chunks = static_cast<std::size_t>((total + span - 1) / span);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.workers, num_chunks));

    std::vector<std::optional<ChunkResult>> results(num_chunks);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next_chunk{0};
    std::atomic<bool> abort{false};
    std::exception_ptr worker_error;

    auto worker = [&]() {
        try {
            while (!abort.load(std::memory_order_relaxed)) {
                const std::size_t i = next_chunk.fetch_add(1);
                if (i >= num_chunks) break;
                const std::uint64_t clo = start_e + i * span;
                const std::uint64_t chi = std::min(clo + span, cfg.hi);
                ChunkResult r = process_chunk(clo, chi, probe, base, cfg.certify,
                                              comet_table ? &*comet_table : nullptr);
                std::lock_guard lock(mu);
                results[i] = std::move(r);
                cv.notify_all();
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!worker_error) worker_error = std::current_exception();
            abort = true;
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);

    std::uint64_t committed_hi = start_e;
    std::uint64_t since_checkpoint = 0;
    bool stopped = false;

    try {
    for (std::size_t i = 0; i < num_chunks && !stopped; ++i) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return results[i].has_value() || worker_error; });
        if (worker_error) break;
        ChunkResult r = std::move(*results[i]);
        results[i].reset();
        lock.unlock();

        report.verified_count += r.verified;
        report.failures.insert(report.failures.end(), r.failures.begin(),
                               r.failures.end());
        append_records(report.records, r.records);
        if (report.comet)
            report.comet->insert(report.comet->end(), r.comet.begin(), r.comet.end());
        committed_hi = r.hi;
        since_checkpoint += (r.hi - r.lo) / 2;

        const bool stop_here = cfg.stop_before_e && committed_hi >= *cfg.stop_before_e &&
                               committed_hi < cfg.hi;
        if (cfg.checkpoint_path && (since_checkpoint >= cfg.checkpoint_interval ||
                                    stop_here || committed_hi == cfg.hi)) {
            checkpoint_save({cfg.lo, cfg.hi, committed_hi, report.verified_count,
                             report.records},
                            *cfg.checkpoint_path);
            since_checkpoint = 0;
        }
        if (stop_here) {
            abort = true;
            stopped = true;
        }
    }
    } catch (...) {
        abort = true;
        for (auto& t : pool) t.join();
        throw;
    }

    for (auto& t : pool) t.join();
    if (worker_error) std::rethrow_exception(worker_error);

    if (stopped) report.hi = committed_hi;  // partial sweep, continued via resume
    report.wall_time = std::chrono::steady_clock::now() - t0;
    return report;
}

}  // namespace

RangeReport verify_range(const SweepConfig& cfg) {
    validate(cfg);
    return run_sweep(cfg, cfg.lo, {});
}

RangeReport resume_sweep(const std::string& checkpoint_path, const SweepConfig& cfg) {
    SweepProgress progress = checkpoint_resume(checkpoint_path);
    SweepConfig full = cfg;
    full.lo = progress.lo;
    full.hi = progress.hi;
    if (!full.checkpoint_path) full.checkpoint_path = checkpoint_path;
    validate(full);
    return run_sweep(full, progress.next_e, progress);
}

RangeReport merge_reports(const RangeReport& a, const RangeReport& b) {
    if (a.hi != b.lo) throw std::domain_error("merge_reports: ranges not adjacent");

    RangeReport m;
    m.lo = a.lo;
    m.hi = b.hi;
    m.verified_count = a.verified_count + b.verified_count;
    m.failures = a.failures;
    m.failures.insert(m.failures.end(), b.failures.begin(), b.failures.end());
    m.records = a.records;
    append_records(m.records, b.records);
    if (a.comet && b.comet) {
        m.comet = *a.comet;
        m.comet->insert(m.comet->end(), b.comet->begin(), b.comet->end());
    } else if (a.comet && b.lo == b.hi) {
        m.comet = a.comet;
    } else if (b.comet && a.lo == a.hi) {
        m.comet = b.comet;
    }
    m.wall_time = a.wall_time + b.wall_time;
    return m;
}

std::string format_report(const RangeReport& r) {
    std::ostringstream os;
    os << "lo=" << r.lo << '\n' << "hi=" << r.hi << '\n'
       << "verified=" << r.verified_count << '\n';
    os << "failures=";
    for (std::size_t i = 0; i < r.failures.size(); ++i)
        os << (i ? "," : "") << r.failures[i];
    os << '\n' << "records=";
    for (std::size_t i = 0; i < r.records.size(); ++i)
        os << (i ? "," : "") << r.records[i].e << ':' << r.records[i].min_p1;
    os << '\n';
    if (r.comet) {
        os << "comet=";
        for (std::size_t i = 0; i < r.comet->size(); ++i)
            os << (i ? "," : "") << (*r.comet)[i].e << ':' << (*r.comet)[i].count;
        os << '\n';
    }
    return os.str();
}

}  // namespace goldbach::engine
