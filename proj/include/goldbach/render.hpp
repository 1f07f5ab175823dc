#pragma once

#include <cstdint>
#include <string>

#include "goldbach/geometry.hpp"

namespace goldbach::render {

// Figure coordinates: circle of radius n about the origin C, diameter
// on the x axis, D above it. All abscissas are exact integers; D's
// ordinate is carried squared (de_sq) and converted to a float only at
// emission.
struct SceneCoordinates {
    std::uint64_t n;
    std::int64_t ax;  // A = (-n, 0)
    std::int64_t bx;  // B = (n, 0)
    std::int64_t cx;  // C = (0, 0)
    std::int64_t ex;  // E = (p1 - n, 0); D shares this abscissa
    std::uint64_t de_sq;
    double dy;  // sqrt(de_sq), presentation only
};

struct StyleOptions {
    int canvas = 800;      // square canvas, user units
    double margin = 0.05;  // fraction of the canvas kept clear per side
};

// Places A, B, C, D, E for a certificate. Asserts D's circle
// membership ((p1-n)^2 + de_sq = n^2) in exact integers before any
// float conversion.
SceneCoordinates layout(const geometry::GoldbachCertificate& c);

// Standalone SVG 1.1 document: the circle, segments AB, AD, DB, DE,
// CD, and the five point labels. Byte-deterministic for fixed inputs.
// When E = C the segments DE and CD coincide and are drawn once.
std::string emit_svg(const SceneCoordinates& s, const StyleOptions& style = {});

}  // namespace goldbach::render
