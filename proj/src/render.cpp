#include "goldbach/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace goldbach::render {

SceneCoordinates layout(const geometry::GoldbachCertificate& c) {
    const auto n = static_cast<std::int64_t>(c.n);
    const auto p1 = static_cast<std::int64_t>(c.p1);

    // D on the circle, before any float enters: (p1-n)^2 + de_sq = n^2
    const std::int64_t dx = p1 - n;
    if (static_cast<std::uint64_t>(dx * dx) + c.de_sq !=
        static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n))
        throw std::invalid_argument("layout: certificate fails circle membership");
    if (static_cast<std::uint64_t>(-dx) != c.ec)
        throw std::invalid_argument("layout: EC does not match p1 - n");

    SceneCoordinates s;
    s.n = c.n;
    s.ax = -n;
    s.bx = n;
    s.cx = 0;
    s.ex = dx;
    s.de_sq = c.de_sq;
    s.dy = std::sqrt(static_cast<double>(c.de_sq));
    return s;
}

namespace {

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string emit_svg(const SceneCoordinates& s, const StyleOptions& style) {
    if (style.canvas <= 0 || style.margin < 0 || style.margin >= 0.5)
        throw std::domain_error("emit_svg: unusable canvas");

    const double canvas = style.canvas;
    const double scale = canvas * (1.0 - 2.0 * style.margin) /
                         (2.0 * static_cast<double>(s.n));
    const double half = canvas / 2.0;
    auto mx = [&](double x) { return half + x * scale; };
    auto my = [&](double y) { return half - y * scale; };

    const double ax = mx(static_cast<double>(s.ax)), bx = mx(static_cast<double>(s.bx));
    const double cx = mx(static_cast<double>(s.cx)), ex = mx(static_cast<double>(s.ex));
    const double y0 = my(0.0);
    const double dy = my(s.dy);
    const bool degenerate = s.ex == s.cx;  // E = C, altitude is the radius

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.canvas
        << "\" height=\"" << style.canvas << "\" viewBox=\"0 0 " << style.canvas
        << " " << style.canvas << "\">\n";
    svg << "  <circle cx=\"" << px(cx) << "\" cy=\"" << px(y0) << "\" r=\""
        << px(static_cast<double>(s.n) * scale)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    auto line = [&](double x1, double y1, double x2, double y2) {
        svg << "  <line x1=\"" << px(x1) << "\" y1=\"" << px(y1) << "\" x2=\""
            << px(x2) << "\" y2=\"" << px(y2)
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    };
    line(ax, y0, bx, y0);  // AB
    line(ax, y0, ex, dy);  // AD
    line(ex, dy, bx, y0);  // DB
    line(ex, dy, ex, y0);  // DE
    if (!degenerate) line(ex, dy, cx, y0);  // CD

    auto label = [&](const char* name, double x, double y) {
        svg << "  <text x=\"" << px(x) << "\" y=\"" << px(y)
            << "\" font-family=\"serif\" font-size=\"16\">" << name << "</text>\n";
    };
    label("A", ax - 16.0, y0 + 6.0);
    label("B", bx + 6.0, y0 + 6.0);
    label("D", ex - 5.0, dy - 8.0);
    if (degenerate) {
        label("C", cx + 6.0, y0 + 20.0);
        label("E", ex - 16.0, y0 + 20.0);
    } else {
        label("C", cx - 5.0, y0 + 20.0);
        label("E", ex - 5.0, y0 + 20.0);
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace goldbach::render
