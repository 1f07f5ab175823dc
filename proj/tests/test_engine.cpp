#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "goldbach/engine.hpp"
#include "oracles.hpp"

using namespace goldbach;
using engine::RangeReport;
using engine::SweepConfig;

namespace {

SweepConfig cfg_for(std::uint64_t lo, std::uint64_t hi) {
    SweepConfig cfg;
    cfg.lo = lo;
    cfg.hi = hi;
    return cfg;
}

std::string tmp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("verify_range over [6, 100)") {
    auto r = engine::verify_range(cfg_for(6, 100));
    CHECK(r.verified_count == 47);
    CHECK(r.failures.empty());
    CHECK(r.records == std::vector<engine::RecordEntry>{{6, 3}, {12, 5}, {30, 7}, {98, 19}});
}

TEST_CASE("verify_range over a single even") {
    auto r = engine::verify_range(cfg_for(6, 8));
    CHECK(r.verified_count == 1);
    CHECK(r.records == std::vector<engine::RecordEntry>{{6, 3}});
}

TEST_CASE("verify_range validates its config") {
    CHECK_THROWS_AS(engine::verify_range(cfg_for(7, 100)), std::domain_error);
    CHECK_THROWS_AS(engine::verify_range(cfg_for(4, 100)), std::domain_error);
    CHECK_THROWS_AS(engine::verify_range(cfg_for(100, 100)), std::domain_error);
    auto bad = cfg_for(6, 100);
    bad.workers = 0;
    CHECK_THROWS_AS(engine::verify_range(bad), std::domain_error);
}

TEST_CASE("records over [6, 10^5) match the brute-force oracle") {
    const std::uint64_t hi = 100'000;
    auto r = engine::verify_range(cfg_for(6, hi));
    auto flags = oracle::naive_sieve(hi);
    auto want = oracle::brute_records(6, hi, flags);
    REQUIRE(r.records.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(r.records[i].e == want[i].first);
        CHECK(r.records[i].min_p1 == want[i].second);
    }
    CHECK(r.failures.empty());
    CHECK(r.verified_count == (hi - 6) / 2);
}

TEST_CASE("chunking and workers do not change the report") {
    auto reference = engine::verify_range(cfg_for(6, 20000));
    for (std::uint64_t span : {64ull, 1000ull, 1ull << 14}) {
        for (unsigned workers : {1u, 4u}) {
            auto cfg = cfg_for(6, 20000);
            cfg.segment_span = span;
            cfg.workers = workers;
            auto r = engine::verify_range(cfg);
            CHECK(engine::format_report(r) == engine::format_report(reference));
        }
    }
}

TEST_CASE("certified and uncertified sweeps agree") {
    auto certified = cfg_for(6, 10000);
    auto plain = certified;
    plain.certify = false;
    auto a = engine::verify_range(certified);
    auto b = engine::verify_range(plain);
    CHECK(engine::format_report(a) == engine::format_report(b));
}

TEST_CASE("comet collection matches the partitions module") {
    auto cfg = cfg_for(6, 200);
    cfg.collect_comet = true;
    auto r = engine::verify_range(cfg);
    REQUIRE(r.comet);
    CHECK(*r.comet == partitions::comet(6, 200));
}

TEST_CASE("merge_reports examples") {
    auto whole = engine::verify_range(cfg_for(6, 100));
    auto left = engine::verify_range(cfg_for(6, 50));
    auto right = engine::verify_range(cfg_for(50, 100));
    auto merged = engine::merge_reports(left, right);
    CHECK(engine::format_report(merged) == engine::format_report(whole));

    RangeReport empty;
    empty.lo = empty.hi = 6;
    auto same = engine::merge_reports(empty, left);
    CHECK(engine::format_report(same) == engine::format_report(left));

    CHECK_THROWS_AS(engine::merge_reports(left, whole), std::domain_error);
}

TEST_CASE("merge_reports is associative") {
    auto r1 = engine::verify_range(cfg_for(6, 100));
    auto r2 = engine::verify_range(cfg_for(100, 200));
    auto r3 = engine::verify_range(cfg_for(200, 300));
    auto lhs = engine::merge_reports(engine::merge_reports(r1, r2), r3);
    auto rhs = engine::merge_reports(r1, engine::merge_reports(r2, r3));
    CHECK(engine::format_report(lhs) == engine::format_report(rhs));
}

TEST_CASE("checkpoint save/resume round-trips") {
    const auto path = tmp_path("goldbach_ckpt_roundtrip");
    engine::SweepProgress p{6, 10000, 5000, 2497, {{6, 3}, {12, 5}, {30, 7}, {98, 19}}};
    engine::checkpoint_save(p, path);
    auto q = engine::checkpoint_resume(path);
    CHECK(q.lo == p.lo);
    CHECK(q.hi == p.hi);
    CHECK(q.next_e == p.next_e);
    CHECK(q.verified == p.verified);
    CHECK(q.records == p.records);
    std::remove(path.c_str());
}

TEST_CASE("corrupt checkpoints name the offending field") {
    const auto path = tmp_path("goldbach_ckpt_corrupt");
    engine::checkpoint_save({6, 100, 50, 22, {{6, 3}}}, path);

    // flip a digit without updating the checksum
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    in.close();
    content.replace(content.find("verified=22"), 11, "verified=23");
    std::ofstream(path, std::ios::trunc) << content;

    try {
        engine::checkpoint_resume(path);
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("checksum") != std::string::npos);
    }
    std::remove(path.c_str());
}

TEST_CASE("interrupt and resume equals the uninterrupted sweep") {
    const auto path = tmp_path("goldbach_ckpt_resume");
    auto uninterrupted = engine::verify_range(cfg_for(6, 10000));

    auto cfg = cfg_for(6, 10000);
    cfg.checkpoint_path = path;
    cfg.segment_span = 512;
    cfg.stop_before_e = 5000;
    auto partial = engine::verify_range(cfg);
    CHECK(partial.hi >= 5000);
    CHECK(partial.hi < 10000);

    SweepConfig runtime;
    runtime.segment_span = 512;
    auto resumed = engine::resume_sweep(path, runtime);
    CHECK(engine::format_report(resumed) == engine::format_report(uninterrupted));

    // range already complete: report comes straight from the checkpoint
    auto again = engine::resume_sweep(path, runtime);
    CHECK(engine::format_report(again) == engine::format_report(uninterrupted));
    std::remove(path.c_str());
}

TEST_CASE("unwritable checkpoint path raises an I/O error") {
    auto cfg = cfg_for(6, 100);
    cfg.checkpoint_path = "/nonexistent-dir/ckpt";
    CHECK_THROWS_AS(engine::verify_range(cfg), std::runtime_error);
}
