#include "isoweave/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

namespace isoweave {

namespace {

// All geometry is emitted in quarter-cell integer units via the viewBox, so
// the output is byte-stable across platforms.
void marker_svg(std::ostream& os, const MarkedCentre& mc, bool quarter, int vb) {
    int x = 2 * mc.p.dx, y = vb - 2 * mc.p.dy;
    if (quarter) {
        if (mc.tau)
            os << "<polygon points=\"" << x << "," << y - 2 << " " << x + 2 << "," << y
               << " " << x << "," << y + 2 << " " << x - 2 << "," << y
               << "\" fill=\"#d4500f\"/>\n";
        else
            os << "<rect x=\"" << x - 1 << "\" y=\"" << y - 1
               << "\" width=\"2\" height=\"2\" fill=\"none\" stroke=\"#d4500f\" "
                  "stroke-width=\"0.5\"/>\n";
    } else {
        if (mc.tau)
            os << "<circle cx=\"" << x << "\" cy=\"" << y
               << "\" r=\"1\" fill=\"#1f77d0\"/>\n";
        else
            os << "<circle cx=\"" << x << "\" cy=\"" << y
               << "\" r=\"1\" fill=\"none\" stroke=\"#1f77d0\" stroke-width=\"0.5\"/>\n";
    }
}

}  // namespace

std::string render_svg(const Design& d, const RenderSpec& spec) {
    if (spec.show_markers || spec.show_lattice) return render_svg(d, spec, survey(d));
    SymmetrySurvey empty;
    RenderSpec plain = spec;
    plain.show_markers = false;
    plain.show_lattice = false;
    return render_svg(d, plain, empty);
}

std::string render_svg(const Design& d, const RenderSpec& spec, const SymmetrySurvey& s) {
    const int t = d.torus_side;
    const int vb = 4 * t;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << t * spec.cell_size
       << "\" height=\"" << t * spec.cell_size << "\" viewBox=\"0 0 " << vb << " " << vb
       << "\">\n";
    for (int y = 0; y < t; ++y)
        for (int x = 0; x < t; ++x)
            os << "<rect x=\"" << 4 * x << "\" y=\"" << vb - 4 * (y + 1)
               << "\" width=\"4\" height=\"4\" fill=\""
               << (d.at(x, y) ? "#20242b" : "#e9e4d8") << "\"/>\n";
    for (int i = 0; i <= t; ++i) {
        os << "<line x1=\"" << 4 * i << "\" y1=\"0\" x2=\"" << 4 * i << "\" y2=\"" << vb
           << "\" stroke=\"#808080\" stroke-width=\"0.25\"/>\n";
        os << "<line x1=\"0\" y1=\"" << 4 * i << "\" x2=\"" << vb << "\" y2=\"" << 4 * i
           << "\" stroke=\"#808080\" stroke-width=\"0.25\"/>\n";
    }
    if (spec.show_lattice) {
        auto draw = [&](long long vx, long long vy, const char* colour) {
            os << "<line x1=\"0\" y1=\"" << vb << "\" x2=\"" << 4 * vx << "\" y2=\""
               << vb - 4 * vy << "\" stroke=\"" << colour << "\" stroke-width=\"0.75\"/>\n";
        };
        draw(s.translations.v1, s.translations.v2, "#2f9e44");
        draw(s.translations.w1, s.translations.w2, "#2f9e44");
        if (s.has_tau_translations) {
            draw(s.full_translations.v1, s.full_translations.v2, "#7048b6");
            draw(s.full_translations.w1, s.full_translations.w2, "#7048b6");
        }
    }
    if (spec.show_markers) {
        for (const auto& mc : s.quarter_centres) marker_svg(os, mc, true, vb);
        for (const auto& mc : s.half_centres) marker_svg(os, mc, false, vb);
    }
    os << "</svg>\n";
    return os.str();
}

namespace {

using FPoint = std::pair<double, double>;

// Clip a convex polygon against the half-plane left of a->b.
std::vector<FPoint> clip_edge(const std::vector<FPoint>& poly, FPoint a, FPoint b) {
    auto side = [&](FPoint p) {
        return (b.first - a.first) * (p.second - a.second) -
               (b.second - a.second) * (p.first - a.first);
    };
    std::vector<FPoint> out;
    for (size_t i = 0; i < poly.size(); ++i) {
        FPoint p = poly[i], q = poly[(i + 1) % poly.size()];
        double sp = side(p), sq = side(q);
        if (sp >= 0) out.push_back(p);
        if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
            double t = sp / (sp - sq);
            out.emplace_back(p.first + t * (q.first - p.first),
                             p.second + t * (q.second - p.second));
        }
    }
    return out;
}

std::string fnum(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string render_net_svg(const CubeNet& net, int cell_size) {
    const Design& d = net.design;
    const long long vdx = 2 * net.vx, vdy = 2 * net.vy;
    const long long wdx = -2 * net.vy, wdy = 2 * net.vx;
    auto plane = [&](long long u, long long v) {
        return std::pair<long long, long long>{net.corner_base.dx + u * vdx + v * wdx,
                                               net.corner_base.dy + u * vdy + v * wdy};
    };
    long long minx = 1 << 30, maxx = -(1LL << 30), miny = 1 << 30, maxy = -(1LL << 30);
    std::array<std::array<std::pair<long long, long long>, 4>, 6> quads;
    constexpr std::pair<int, int> offs[6] = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, -1}};
    constexpr std::pair<int, int> corner[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    for (int si = 0; si < 6; ++si)
        for (int ci = 0; ci < 4; ++ci) {
            quads[si][ci] = plane(offs[si].first + corner[ci].first,
                                  offs[si].second + corner[ci].second);
            minx = std::min(minx, quads[si][ci].first);
            maxx = std::max(maxx, quads[si][ci].first);
            miny = std::min(miny, quads[si][ci].second);
            maxy = std::max(maxy, quads[si][ci].second);
        }
    auto sx = [&](double x) { return x - static_cast<double>(minx); };
    auto sy = [&](double y) { return static_cast<double>(maxy) - y; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
       << (maxx - minx) * cell_size / 2 << "\" height=\"" << (maxy - miny) * cell_size / 2
       << "\" viewBox=\"0 0 " << (maxx - minx) << " " << (maxy - miny) << "\">\n";
    for (int si = 0; si < 6; ++si) {
        std::vector<FPoint> quad;
        long long qminx = 1 << 30, qmaxx = -(1LL << 30), qminy = 1 << 30,
                  qmaxy = -(1LL << 30);
        for (int ci = 0; ci < 4; ++ci) {
            quad.emplace_back(static_cast<double>(quads[si][ci].first),
                              static_cast<double>(quads[si][ci].second));
            qminx = std::min(qminx, quads[si][ci].first);
            qmaxx = std::max(qmaxx, quads[si][ci].first);
            qminy = std::min(qminy, quads[si][ci].second);
            qmaxy = std::max(qmaxy, quads[si][ci].second);
        }
        for (long long y = qminy / 2 - 1; 2 * y < qmaxy; ++y)
            for (long long x = qminx / 2 - 1; 2 * x < qmaxx; ++x) {
                std::vector<FPoint> cell{{2.0 * x, 2.0 * y},
                                         {2.0 * x + 2, 2.0 * y},
                                         {2.0 * x + 2, 2.0 * y + 2},
                                         {2.0 * x, 2.0 * y + 2}};
                for (int ci = 0; ci < 4 && !cell.empty(); ++ci)
                    cell = clip_edge(cell, quad[ci], quad[(ci + 1) % 4]);
                double area = 0;
                for (size_t i = 0; i < cell.size(); ++i) {
                    auto& p = cell[i];
                    auto& q = cell[(i + 1) % cell.size()];
                    area += p.first * q.second - q.first * p.second;
                }
                if (area < 1e-9) continue;
                os << "<polygon points=\"";
                for (size_t i = 0; i < cell.size(); ++i)
                    os << (i ? " " : "") << fnum(sx(cell[i].first)) << ","
                       << fnum(sy(cell[i].second));
                os << "\" fill=\"" << (d.at(x, y) ? "#20242b" : "#e9e4d8") << "\"/>\n";
            }
    }
    for (int si = 0; si < 6; ++si) {
        os << "<polygon points=\"";
        for (int ci = 0; ci < 4; ++ci)
            os << (ci ? " " : "")
               << fnum(sx(static_cast<double>(quads[si][ci].first))) << ","
               << fnum(sy(static_cast<double>(quads[si][ci].second)));
        os << "\" fill=\"none\" stroke=\"#b3331e\" stroke-width=\"0.5\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace isoweave
