#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "goldbach/geometry.hpp"

namespace goldbach::cli {

// Exit codes: 0 success, 1 conjecture failure reported, 2 usage or
// domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Format { text, jsonl, csv };

// All certificate fields plus the five version verdicts, stable field
// order. fmt may be text or jsonl.
std::string format_certificate(const geometry::GoldbachCertificate& c, Format fmt);

}  // namespace goldbach::cli
