#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "goldbach/engine.hpp"

namespace goldbach::engine {

namespace {

constexpr int kSchemaVersion = 1;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string records_to_string(const std::vector<RecordEntry>& records) {
    std::ostringstream os;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i) os << ',';
        os << records[i].e << ':' << records[i].min_p1;
    }
    return os.str();
}

[[noreturn]] void bad_field(const std::string& key) {
    throw std::runtime_error("checkpoint: bad or missing field '" + key + "'");
}

std::uint64_t parse_u64(const std::map<std::string, std::string>& kv,
                        const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end() || it->second.empty()) bad_field(key);
    std::uint64_t v = 0;
    for (char c : it->second) {
        if (c < '0' || c > '9') bad_field(key);
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

std::vector<RecordEntry> parse_records(const std::string& s) {
    std::vector<RecordEntry> out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string pair;
    while (std::getline(is, pair, ',')) {
        auto colon = pair.find(':');
        if (colon == std::string::npos) bad_field("records");
        RecordEntry r{};
        try {
            r.e = std::stoull(pair.substr(0, colon));
            r.min_p1 = std::stoull(pair.substr(colon + 1));
        } catch (const std::exception&) {
            bad_field("records");
        }
        if (!out.empty() && (r.e <= out.back().e || r.min_p1 <= out.back().min_p1))
            bad_field("records");
        out.push_back(r);
    }
    return out;
}

}  // namespace

void checkpoint_save(const SweepProgress& state, const std::string& path) {
    std::ostringstream body;
    body << "schema=" << kSchemaVersion << '\n'
         << "lo=" << state.lo << '\n'
         << "hi=" << state.hi << '\n'
         << "next_e=" << state.next_e << '\n'
         << "verified=" << state.verified << '\n'
         << "records=" << records_to_string(state.records) << '\n';

    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(body.str())));

    // write-then-rename so a crash never leaves a torn checkpoint
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f) throw std::runtime_error("checkpoint: cannot write " + tmp);
        f << body.str() << "checksum=" << buf << '\n';
        if (!f.flush()) throw std::runtime_error("checkpoint: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("checkpoint: cannot replace " + path);
}

SweepProgress checkpoint_resume(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("checkpoint: cannot open " + path);

    std::map<std::string, std::string> kv;
    std::string line, body;
    while (std::getline(f, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) bad_field(line);
        const std::string key = line.substr(0, eq);
        kv[key] = line.substr(eq + 1);
        if (key != "checksum") body += line + '\n';
    }

    auto ck = kv.find("checksum");
    if (ck == kv.end()) bad_field("checksum");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(body)));
    if (ck->second != buf) bad_field("checksum");

    if (parse_u64(kv, "schema") != kSchemaVersion) bad_field("schema");

    SweepProgress p;
    p.lo = parse_u64(kv, "lo");
    p.hi = parse_u64(kv, "hi");
    p.next_e = parse_u64(kv, "next_e");
    p.verified = parse_u64(kv, "verified");
    auto rec = kv.find("records");
    if (rec == kv.end()) bad_field("records");
    p.records = parse_records(rec->second);

    if ((p.lo & 1) || (p.hi & 1) || (p.next_e & 1) || p.lo < 6 || p.next_e < p.lo ||
        p.next_e > p.hi)
        bad_field("next_e");
    return p;
}

}  // namespace goldbach::engine
