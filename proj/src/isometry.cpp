#include "isoweave/isometry.hpp"

#include <stdexcept>

namespace isoweave {

PointParity point_parity(HalfPoint p) {
    bool xe = (p.dx & 1) == 0, ye = (p.dy & 1) == 0;
    if (xe && ye) return PointParity::Corner;
    if (!xe && !ye) return PointParity::Centre;
    return PointParity::EdgeMid;
}

Isometry translation(int vx, int vy, bool tau) {
    Isometry iso;
    iso.kind = IsoKind::Translation;
    iso.vx = vx;
    iso.vy = vy;
    iso.tau = tau;
    return iso;
}

Isometry quarter_turn(HalfPoint centre, int direction, bool tau) {
    if (point_parity(centre) == PointParity::EdgeMid)
        throw std::invalid_argument("quarter-turn pivot on an edge midpoint");
    Isometry iso;
    iso.kind = IsoKind::QuarterTurn;
    iso.centre = centre;
    iso.direction = direction;
    iso.tau = tau;
    return iso;
}

Isometry half_turn(HalfPoint centre, bool tau) {
    Isometry iso;
    iso.kind = IsoKind::HalfTurn;
    iso.centre = centre;
    iso.tau = tau;
    return iso;
}

namespace {

// Rotate doubled offset a quarter turn anticlockwise, r times.
void rot(int r, long long& x, long long& y) {
    r &= 3;
    while (r--) {
        long long nx = -y, ny = x;
        x = nx;
        y = ny;
    }
}

}  // namespace

Cell map_cell(const Isometry& iso, Cell c) {
    switch (iso.kind) {
        case IsoKind::Translation:
            return {c.x + iso.vx, c.y + iso.vy};
        case IsoKind::QuarterTurn: {
            if (point_parity(iso.centre) == PointParity::EdgeMid)
                throw std::invalid_argument("quarter-turn pivot on an edge midpoint");
            long long ox = 2LL * c.x + 1 - iso.centre.dx;
            long long oy = 2LL * c.y + 1 - iso.centre.dy;
            rot(iso.direction > 0 ? 1 : 3, ox, oy);
            long long dx = iso.centre.dx + ox, dy = iso.centre.dy + oy;
            return {static_cast<int>((dx - 1) / 2), static_cast<int>((dy - 1) / 2)};
        }
        case IsoKind::HalfTurn: {
            long long dx = 2LL * iso.centre.dx - (2LL * c.x + 1);
            long long dy = 2LL * iso.centre.dy - (2LL * c.y + 1);
            return {static_cast<int>((dx - 1) / 2), static_cast<int>((dy - 1) / 2)};
        }
    }
    throw std::logic_error("unreachable");
}

bool expected_complement(const Isometry& iso) {
    return iso.kind == IsoKind::QuarterTurn ? !iso.tau : iso.tau;
}

bool is_symmetry(const Design& d, const Isometry& iso) {
    const int t = d.torus_side;
    const bool comp = expected_complement(iso);
    for (int y = 0; y < t; ++y)
        for (int x = 0; x < t; ++x) {
            Cell m = map_cell(iso, {x, y});
            if (d.at(m.x, m.y) != (d.at(x, y) ^ comp)) return false;
        }
    return true;
}

Design transform_design(const Design& d, const Isometry& iso) {
    const int t = d.torus_side;
    const bool comp = expected_complement(iso);
    Design out(t);
    out.label = d.label;
    for (int y = 0; y < t; ++y)
        for (int x = 0; x < t; ++x) {
            Cell m = map_cell(iso, {x, y});
            out.set(floor_mod(m.x, t), floor_mod(m.y, t), d.at(x, y) ^ comp);
        }
    return out;
}

HalfPoint map_point(const PlanarMap& m, HalfPoint p) {
    long long x = p.dx, y = p.dy;
    rot(m.r, x, y);
    return {static_cast<int>(x + m.tx), static_cast<int>(y + m.ty)};
}

Cell map_cell(const PlanarMap& m, Cell c) {
    HalfPoint img = map_point(m, {2 * c.x + 1, 2 * c.y + 1});
    return {(img.dx - 1) / 2, (img.dy - 1) / 2};
}

PlanarMap compose(const PlanarMap& a, const PlanarMap& b) {
    long long tx = b.tx, ty = b.ty;
    rot(a.r, tx, ty);
    return {(a.r + b.r) & 3, static_cast<int>(tx + a.tx), static_cast<int>(ty + a.ty)};
}

PlanarMap planar_inverse(const PlanarMap& m) {
    int r = (4 - m.r) & 3;
    long long tx = -m.tx, ty = -m.ty;
    rot(r, tx, ty);
    return {r, static_cast<int>(tx), static_cast<int>(ty)};
}

PlanarMap planar_from(const Isometry& iso) {
    switch (iso.kind) {
        case IsoKind::Translation:
            return {0, 2 * iso.vx, 2 * iso.vy};
        case IsoKind::QuarterTurn: {
            if (point_parity(iso.centre) == PointParity::EdgeMid)
                throw std::invalid_argument("quarter-turn pivot on an edge midpoint");
            int r = iso.direction > 0 ? 1 : 3;
            long long cx = iso.centre.dx, cy = iso.centre.dy;
            rot(r, cx, cy);
            return {r, static_cast<int>(iso.centre.dx - cx),
                    static_cast<int>(iso.centre.dy - cy)};
        }
        case IsoKind::HalfTurn:
            return {2, 2 * iso.centre.dx, 2 * iso.centre.dy};
    }
    throw std::logic_error("unreachable");
}

bool planar_expected_complement(const PlanarMap& m, bool tau) {
    return (m.r & 1) ? !tau : tau;
}

bool is_symmetry(const Design& d, const PlanarMap& m, bool tau) {
    const int t = d.torus_side;
    const bool comp = planar_expected_complement(m, tau);
    for (int y = 0; y < t; ++y)
        for (int x = 0; x < t; ++x) {
            Cell img = map_cell(m, {x, y});
            if (d.at(img.x, img.y) != (d.at(x, y) ^ comp)) return false;
        }
    return true;
}

}  // namespace isoweave
