#include "explograph/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "explograph/error.hpp"

namespace explograph {

namespace {

constexpr double kCanvas = 480;
constexpr double kMargin = 16;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
    return buf;
}

struct Frame {
    double x0, y0, x1, y1, scale;
    double px(double x) const { return kMargin + (x - x0) * scale; }
    double py(double y) const { return kMargin + (y1 - y) * scale; }
};

// Largest t ≥ 0 with p + t·d inside the frame.
double exit_time(const Frame& f, double x, double y, double dx, double dy) {
    double t = std::numeric_limits<double>::infinity();
    if (dx > 0) t = std::min(t, (f.x1 - x) / dx);
    if (dx < 0) t = std::min(t, (f.x0 - x) / dx);
    if (dy > 0) t = std::min(t, (f.y1 - y) / dy);
    if (dy < 0) t = std::min(t, (f.y0 - y) / dy);
    return std::max(t, 0.0);
}

}  // namespace

std::string render_svg(const TropicalCurve& c, const std::vector<RVec>& points) {
    if (c.dim != 2) throw NotPlanar("only plane curves can be rendered");
    std::vector<std::array<double, 2>> pos;
    for (const auto& v : c.vertices) {
        if (v.pos.size() != 2) throw NotPlanar("vertex position is not planar");
        pos.push_back({v.pos[0].get_d(), v.pos[1].get_d()});
    }
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    if (!pos.empty()) {
        x0 = x1 = pos[0][0];
        y0 = y1 = pos[0][1];
    }
    for (const auto& p : pos) {
        x0 = std::min(x0, p[0]);
        x1 = std::max(x1, p[0]);
        y0 = std::min(y0, p[1]);
        y1 = std::max(y1, p[1]);
    }
    std::int64_t reach = 1;
    for (const auto& e : c.edges) reach = std::max({reach, std::abs(e.d[0]), std::abs(e.d[1])});
    for (const auto& e : c.ends) reach = std::max({reach, std::abs(e.d[0]), std::abs(e.d[1])});
    const double extent = std::max(x1 - x0, y1 - y0);
    const double pad = static_cast<double>(reach) * std::max(1.0, extent / 2);
    Frame f{x0 - pad, y0 - pad, x1 + pad, y1 + pad, 0};
    f.scale = (kCanvas - 2 * kMargin) / std::max(f.x1 - f.x0, f.y1 - f.y0);
    const double w = (f.x1 - f.x0) * f.scale + 2 * kMargin, h = (f.y1 - f.y0) * f.scale + 2 * kMargin;

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
                      "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    out += "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
    auto segment = [&](double ax, double ay, double bx, double by, const char* cls) {
        out += "<line class=\"" + std::string(cls) + "\" x1=\"" + num(f.px(ax)) + "\" y1=\"" + num(f.py(ay)) +
               "\" x2=\"" + num(f.px(bx)) + "\" y2=\"" + num(f.py(by)) + "\"/>\n";
    };
    std::string labels;
    auto label = [&](double x, double y, std::int64_t m) {
        labels += "<text x=\"" + num(f.px(x) + 4) + "\" y=\"" + num(f.py(y) - 4) + "\">" + std::to_string(m) + "</text>\n";
    };
    for (const auto& e : c.edges) {
        const auto &a = pos[e.tail], &b = pos[e.head];
        segment(a[0], a[1], b[0], b[1], "edge");
        if (auto m = edge_multiplicity(e.d); m > 1) label((a[0] + b[0]) / 2, (a[1] + b[1]) / 2, m);
    }
    for (const auto& e : c.ends) {
        const auto& a = pos[e.vertex];
        double dx = static_cast<double>(e.d[0]), dy = static_cast<double>(e.d[1]);
        double t = exit_time(f, a[0], a[1], dx, dy);
        segment(a[0], a[1], a[0] + t * dx, a[1] + t * dy, "end");
        if (auto m = edge_multiplicity(e.d); m > 1) label(a[0] + t * dx / 2, a[1] + t * dy / 2, m);
    }
    out += "</g>\n<g fill=\"black\">\n";
    for (const auto& p : pos)
        out += "<circle class=\"vertex\" cx=\"" + num(f.px(p[0])) + "\" cy=\"" + num(f.py(p[1])) + "\" r=\"3\"/>\n";
    for (const auto& q : points)
        out += "<circle class=\"point\" cx=\"" + num(f.px(q[0].get_d())) + "\" cy=\"" + num(f.py(q[1].get_d())) +
               "\" r=\"4\" fill=\"red\"/>\n";
    out += "</g>\n<g font-family=\"monospace\" font-size=\"12\">\n" + labels + "</g>\n</svg>\n";
    return out;
}

}  // namespace explograph
