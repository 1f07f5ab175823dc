#include "goldbach/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldbach/engine.hpp"
#include "goldbach/geometry.hpp"
#include "goldbach/partitions.hpp"
#include "goldbach/render.hpp"

namespace goldbach::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kMaxArg = 1ull << 63;

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "jsonl") return Format::jsonl;
    if (s == "csv") return Format::csv;
    throw CLI::ValidationError("--format", "expected text, jsonl or csv");
}

// Stream selected by --out; defaults to the session's stdout.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::trunc);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
            out_ = &file_;
        }
    }
    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

std::string float12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void print_partition(std::ostream& os, const partitions::GoldbachPartition& p,
                     Format fmt) {
    switch (fmt) {
        case Format::text:
            os << p.p1 << ' ' << p.p2 << '\n';
            break;
        case Format::csv:
            os << p.e << ',' << p.p1 << ',' << p.p2 << '\n';
            break;
        case Format::jsonl:
            os << json{{"e", p.e}, {"p1", p.p1}, {"p2", p.p2}}.dump() << '\n';
            break;
    }
}

void print_report(std::ostream& os, const engine::RangeReport& r, Format fmt) {
    if (fmt == Format::jsonl) {
        json j{{"lo", r.lo},
               {"hi", r.hi},
               {"verified", r.verified_count},
               {"failures", r.failures},
               {"wall_seconds", r.wall_time.count()}};
        json recs = json::array();
        for (const auto& rec : r.records) recs.push_back({{"e", rec.e}, {"min_p1", rec.min_p1}});
        j["records"] = recs;
        if (r.comet) {
            json c = json::array();
            for (const auto& p : *r.comet) c.push_back({{"e", p.e}, {"count", p.count}});
            j["comet"] = c;
        }
        os << j.dump() << '\n';
    } else {
        os << engine::format_report(r);
        char buf[48];
        std::snprintf(buf, sizeof buf, "wall_seconds=%.3f", r.wall_time.count());
        os << buf << '\n';
    }
}

int finish_sweep(const engine::RangeReport& report, std::ostream& target, Format fmt) {
    print_report(target, report, fmt);
    return report.failures.empty() ? 0 : 1;
}

geometry::GoldbachCertificate certificate_for(std::uint64_t e, bool* found) {
    auto p = partitions::minimal_partition(e);
    if (!p) {
        *found = false;
        return {};
    }
    *found = true;
    return geometry::build_certificate(e / 2, *p);
}

}  // namespace

std::string format_certificate(const geometry::GoldbachCertificate& c, Format fmt) {
    bool verdicts[6] = {};
    bool all = true;
    for (int k = 1; k <= 5; ++k) {
        verdicts[k] = geometry::check_version(c, k).holds;
        all = all && verdicts[k];
    }
    if (fmt == Format::jsonl) {
        json j{{"n", c.n},    {"e", c.e},         {"p1", c.p1},
               {"p2", c.p2},  {"ad_sq", c.ad_sq}, {"bd_sq", c.bd_sq},
               {"de_sq", c.de_sq}, {"ec", c.ec}};
        for (int k = 1; k <= 5; ++k) j["v" + std::to_string(k)] = verdicts[k];
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "n=" << c.n << '\n' << "e=" << c.e << '\n' << "p1=" << c.p1 << '\n'
       << "p2=" << c.p2 << '\n' << "ad_sq=" << c.ad_sq << '\n'
       << "bd_sq=" << c.bd_sq << '\n' << "de_sq=" << c.de_sq << '\n'
       << "ec=" << c.ec << '\n';
    for (int k = 1; k <= 5; ++k)
        os << 'V' << k << '=' << (verdicts[k] ? "PASS" : "FAIL") << '\n';
    os << "V1..V5 " << (all ? "PASS" : "FAIL") << '\n';
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Goldbach range verifier and circle-certificate toolkit"};
    app.require_subcommand(1);

    const auto hw = std::max(1u, std::thread::hardware_concurrency());

    // shared flag storage
    std::uint64_t from = 6, to = 0, e_arg = 0, n_arg = 0;
    std::uint64_t segment_span = 1u << 21, checkpoint_interval = 1'000'000;
    unsigned workers = hw;
    bool certify = true, all_flag = false, float_flag = false;
    std::string checkpoint, out_path, format_str = "text", version_str = "all";
    int canvas = 800;

    auto bounded = CLI::Range(std::uint64_t{0}, kMaxArg);

    auto add_sweep_flags = [&](CLI::App* cmd) {
        cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_option("--segment-span", segment_span, "window width per chunk");
        cmd->add_option("--checkpoint", checkpoint, "checkpoint file path");
        cmd->add_option("--checkpoint-interval", checkpoint_interval,
                        "evens between checkpoint saves");
        cmd->add_option("--certify", certify, "build and verify the certificate per even")
            ->default_str("true");
        cmd->add_option("--format", format_str)->check(CLI::IsMember({"text", "jsonl"}));
        cmd->add_option("--out", out_path, "write output to file");
    };

    auto* verify = app.add_subcommand("verify", "sweep an even range");
    verify->add_option("--from", from, "first even (inclusive)")->required()->check(bounded);
    verify->add_option("--to", to, "end of range (exclusive)")->required()->check(bounded);
    add_sweep_flags(verify);

    auto* resume = app.add_subcommand("resume", "continue a checkpointed sweep");
    resume->add_option("--checkpoint", checkpoint, "checkpoint file")->required();
    resume->add_option("--workers", workers)->check(CLI::PositiveNumber);
    resume->add_option("--segment-span", segment_span);
    resume->add_option("--checkpoint-interval", checkpoint_interval);
    resume->add_option("--certify", certify)->default_str("true");
    resume->add_option("--format", format_str)->check(CLI::IsMember({"text", "jsonl"}));
    resume->add_option("--out", out_path);

    auto* partition = app.add_subcommand("partition", "Goldbach partition(s) of an even number");
    partition->add_option("e", e_arg, "even number >= 6")->required()->check(bounded);
    partition->add_flag("--all", all_flag, "list every partition");
    partition->add_option("--format", format_str)
        ->check(CLI::IsMember({"text", "jsonl", "csv"}));
    partition->add_option("--out", out_path);

    auto* certificate = app.add_subcommand("certificate", "circle certificate for an even number");
    certificate->add_option("e", e_arg, "even number >= 6")->required()->check(bounded);
    certificate->add_option("--version", version_str, "1..5 or all")
        ->check(CLI::IsMember({"1", "2", "3", "4", "5", "all"}));
    certificate->add_option("--format", format_str)->check(CLI::IsMember({"text", "jsonl"}));
    certificate->add_option("--out", out_path);

    auto* fermat = app.add_subcommand("fermat", "n^2 = g^2 + h^2 decompositions");
    fermat->add_option("n", n_arg, "radius n >= 3")->required()->check(bounded);
    fermat->add_flag("--float", float_flag, "also print g to 12 significant digits");
    fermat->add_option("--out", out_path);

    auto* comet = app.add_subcommand("comet", "partition counts over an even range");
    comet->add_option("--from", from)->required()->check(bounded);
    comet->add_option("--to", to)->required()->check(bounded);
    comet->add_option("--out", out_path);

    auto* records = app.add_subcommand("records", "minimal-p1 records over an even range");
    records->add_option("--from", from)->required()->check(bounded);
    records->add_option("--to", to)->required()->check(bounded);
    records->add_option("--workers", workers)->check(CLI::PositiveNumber);
    records->add_option("--segment-span", segment_span);
    records->add_option("--out", out_path);

    auto* render_cmd = app.add_subcommand("render", "SVG drawing of the circle construction");
    render_cmd->add_option("e", e_arg, "even number >= 6")->required()->check(bounded);
    render_cmd->add_option("--canvas", canvas, "canvas size in user units");
    render_cmd->add_option("--out", out_path);

    std::vector<const char*> argv;
    argv.push_back("goldbach");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.get_name() << ": see --help for usage\n";
        return 2;
    }

    try {
        const Format fmt = parse_format(format_str);
        OutputTarget target(out_path, out);

        if (*verify || *resume) {
            engine::SweepConfig cfg;
            cfg.segment_span = segment_span;
            cfg.workers = workers;
            cfg.certify = certify;
            cfg.checkpoint_interval = checkpoint_interval;
            if (!checkpoint.empty()) cfg.checkpoint_path = checkpoint;
            if (*resume) return finish_sweep(engine::resume_sweep(checkpoint, cfg),
                                             target.stream(), fmt);
            cfg.lo = from;
            cfg.hi = to;
            return finish_sweep(engine::verify_range(cfg), target.stream(), fmt);
        }

        if (*partition) {
            if (all_flag) {
                for (const auto& p : partitions::all_partitions(e_arg))
                    print_partition(target.stream(), p, fmt);
                return 0;
            }
            auto p = partitions::minimal_partition(e_arg);
            if (!p) {
                target.stream() << "NOT FOUND " << e_arg << '\n';
                return 1;
            }
            print_partition(target.stream(), *p, fmt);
            return 0;
        }

        if (*certificate) {
            bool found = false;
            const auto cert = certificate_for(e_arg, &found);
            if (!found) {
                target.stream() << "NOT FOUND " << e_arg << '\n';
                return 1;
            }
            if (version_str == "all") {
                target.stream() << format_certificate(cert, fmt);
            } else {
                const auto v = geometry::check_version(cert, version_str[0] - '0');
                target.stream() << 'V' << v.version << ' '
                                << (v.holds ? "PASS" : "FAIL")
                                << " lhs=" << geometry::u128_str(v.lhs)
                                << " rhs=" << geometry::u128_str(v.rhs) << '\n';
            }
            return 0;
        }

        if (*fermat) {
            for (const auto& d : geometry::fermat_like(n_arg)) {
                target.stream() << d.n << ' ' << d.g_sq << ' ' << d.h;
                if (float_flag)
                    target.stream() << ' '
                                    << float12(std::sqrt(static_cast<double>(d.g_sq)));
                target.stream() << '\n';
            }
            return 0;
        }

        if (*comet) {
            partitions::comet(from, to, [&](const partitions::CometPoint& p) {
                target.stream() << p.e << ',' << p.count << '\n';
            });
            return 0;
        }

        if (*records) {
            engine::SweepConfig cfg;
            cfg.lo = from;
            cfg.hi = to;
            cfg.segment_span = segment_span;
            cfg.workers = workers;
            cfg.certify = false;
            const auto report = engine::verify_range(cfg);
            for (const auto& r : report.records)
                target.stream() << r.e << ' ' << r.min_p1 << '\n';
            return report.failures.empty() ? 0 : 1;
        }

        if (*render_cmd) {
            bool found = false;
            const auto cert = certificate_for(e_arg, &found);
            if (!found) {
                err << "no partition for " << e_arg << '\n';
                return 1;
            }
            render::StyleOptions style;
            style.canvas = canvas;
            target.stream() << render::emit_svg(render::layout(cert), style);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace goldbach::cli
