#include "isoweave/cube.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace isoweave {

namespace {

struct Vec3 {
    int x = 0, y = 0, z = 0;
    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
    auto operator<=>(const Vec3&) const = default;
};

struct FoldFrame {
    Vec3 Q, X, Y;  // image of the square's low corner and of the frame axes
};

// Fold across the given side of the current square: 0 +x, 1 -x, 2 +y, 3 -y.
// N = X x Y is the outward normal; folding turns the next square onto the
// adjacent cube face.
FoldFrame fold_step(const FoldFrame& f, int side) {
    Vec3 n{f.X.y * f.Y.z - f.X.z * f.Y.y, f.X.z * f.Y.x - f.X.x * f.Y.z,
           f.X.x * f.Y.y - f.X.y * f.Y.x};
    switch (side) {
        case 0: return {f.Q + f.X, n, f.Y};
        case 1: return {f.Q + n, -n, f.Y};
        case 2: return {f.Q + f.Y, f.X, n};
        case 3: return {f.Q + n, f.X, -n};
    }
    throw std::logic_error("bad fold side");
}

constexpr std::pair<int, int> kFrameOffsets[6] = {{0, 0}, {1, 0}, {2, 0},
                                                  {3, 0}, {0, 1}, {0, -1}};
constexpr std::pair<int, int> kCornerOffsets[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};

struct NetGeometry {
    HalfPoint P;        // corner_base doubled
    HalfPoint vd, wd;   // doubled side vectors
    HalfPoint plane_point(int u, int v) const {
        return {P.dx + u * vd.dx + v * wd.dx, P.dy + u * vd.dy + v * wd.dy};
    }
    // Design-plane map realising a frame map u -> R^r u + t.
    PlanarMap design_map(int r, int tfx, int tfy) const {
        long long px = P.dx, py = P.dy;
        for (int i = 0; i < r; ++i) {
            long long nx = -py, ny = px;
            px = nx;
            py = ny;
        }
        return {r,
                static_cast<int>(P.dx - px + tfx * vd.dx + tfy * wd.dx),
                static_cast<int>(P.dy - py + tfx * vd.dy + tfy * wd.dy)};
    }
};

NetGeometry geometry_of(const CubeNet& net) {
    NetGeometry g;
    g.P = net.corner_base;
    g.vd = {2 * net.vx, 2 * net.vy};
    g.wd = {-2 * net.vy, 2 * net.vx};
    return g;
}

int rotation_matching(std::pair<int, int> d, std::pair<int, int> e) {
    auto [x, y] = d;
    for (int r = 0; r < 4; ++r) {
        if (std::make_pair(x, y) == e) return r;
        int nx = -y, ny = x;
        x = nx;
        y = ny;
    }
    return -1;
}

// Frame map (r, t) carrying the ordered point list ps onto qs, or r = -1.
std::tuple<int, int, int> fit_frame_map(const std::vector<std::pair<int, int>>& ps,
                                        const std::vector<std::pair<int, int>>& qs) {
    int r = rotation_matching({ps[1].first - ps[0].first, ps[1].second - ps[0].second},
                              {qs[1].first - qs[0].first, qs[1].second - qs[0].second});
    if (r < 0) return {-1, 0, 0};
    auto rot = [&](std::pair<int, int> p) {
        for (int i = 0; i < r; ++i) p = {-p.second, p.first};
        return p;
    };
    auto rp0 = rot(ps[0]);
    int tx = qs[0].first - rp0.first, ty = qs[0].second - rp0.second;
    for (size_t i = 0; i < ps.size(); ++i) {
        auto rp = rot(ps[i]);
        if (rp.first + tx != qs[i].first || rp.second + ty != qs[i].second)
            return {-1, 0, 0};
    }
    return {r, tx, ty};
}

bool passes_with_flips(const Design& d, const PlanarMap& m, int flip_xor) {
    const int t = d.torus_side;
    int comp = ((m.r & 1) ^ flip_xor) & 1;
    for (int y = 0; y < t; ++y)
        for (int x = 0; x < t; ++x) {
            Cell img = map_cell(m, {x, y});
            if (d.at(img.x, img.y) != (d.at(x, y) ^ comp)) return false;
        }
    return true;
}

struct Segment {
    int square, dir, k;  // dir 0 warp strip (x), 1 weft strip (y)
    auto operator<=>(const Segment&) const = default;
};

struct TraceContext {
    NetGeometry geo;
    std::array<std::array<HalfPoint, 4>, 6> plane_corners;
    std::map<Segment, int> index;
    std::vector<Segment> segments;

    bool strip_overlaps(int s, int dir, int k) const {
        int lo = 1 << 30, hi = -(1 << 30);
        for (const auto& c : plane_corners[s]) {
            int v = dir == 0 ? c.dx : c.dy;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return 2 * k < hi && 2 * k + 2 > lo;
    }
};

Segment map_segment(const NetGeometry&, const PlanarMap& m, int target_square,
                    const Segment& seg) {
    HalfPoint on_line = seg.dir == 0 ? HalfPoint{2 * seg.k + 1, 0}
                                     : HalfPoint{1, 2 * seg.k + 1};
    HalfPoint img = map_point(m, on_line);
    Segment out;
    out.square = target_square;
    if ((m.r & 1) == 0) {
        out.dir = seg.dir;
        out.k = ((seg.dir == 0 ? img.dx : img.dy) - 1) / 2;
    } else {
        out.dir = 1 - seg.dir;
        out.k = ((seg.dir == 0 ? img.dy : img.dx) - 1) / 2;
    }
    return out;
}

}  // namespace

CubeWeavability cube_weavable(const SpeciesReport& r) {
    CubeWeavability w;
    switch (r.species) {
        case Species::S33_3:
        case Species::S33_4:
        case Species::S34:
        case Species::S37:
        case Species::S38:
        case Species::S39:
            w.verdict = true;
            w.reason = "plain quarter turns sit at cell corners, so cube vertex "
                       "rotations act without tau";
            break;
        case Species::S36_1:
            w.reason = "corner quarter turns carry tau, but cube vertex rotations "
                       "are tau-free (tau parity obstruction)";
            break;
        case Species::S36_s:
            w.reason = "level-2 unit centred on a cell centre leaves no quarter "
                       "centres at cell corners";
            break;
        default:
            w.reason = "every quarter turn carries tau, but cube vertex rotations "
                       "are tau-free";
            break;
    }
    return w;
}

CubeNet cube_net(const Design& d) {
    Classification c = classify(d);
    if (!c.ok)
        throw std::invalid_argument(std::string("not an isonemal quarter-turn design: ") +
                                    c.detail);
    CubeWeavability w = cube_weavable(c.report);
    if (!w.verdict)
        throw std::invalid_argument(std::string("species ") + species_name(c.report.species) +
                                    " yields no woven cube: " + w.reason);

    SymmetrySurvey s = survey(d);
    CubeNet net;
    net.design = d;
    net.species = c.report.species;

    // Base corner: least plain quarter centre; it sits at a cell corner.
    bool found = false;
    for (const auto& mc : s.quarter_centres)
        if (!mc.tau && !found) {
            net.corner_base = mc.p;
            found = true;
        }
    if (!found || point_parity(net.corner_base) != PointParity::Corner)
        throw std::logic_error("expected a plain quarter centre at a cell corner");

    // Face side: shortest full-lattice vector in the open first quadrant.
    Lattice2 red = gauss_reduce(s.full_translations);
    long long a = red.v1, b = red.v2;
    while (!(a > 0 && b > 0)) {
        long long na = -b, nb = a;
        a = na;
        b = nb;
    }
    net.vx = static_cast<int>(a);
    net.vy = static_cast<int>(b);

    // Fold the cross.
    std::array<FoldFrame, 6> frames;
    frames[0] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    frames[1] = fold_step(frames[0], 0);
    frames[2] = fold_step(frames[1], 0);
    frames[3] = fold_step(frames[2], 0);
    frames[4] = fold_step(frames[0], 2);
    frames[5] = fold_step(frames[0], 3);

    std::map<Vec3, int> corner_uses;
    for (int si = 0; si < 6; ++si) {
        auto [fx, fy] = kFrameOffsets[si];
        net.squares[si].fx = fx;
        net.squares[si].fy = fy;
        for (int ci = 0; ci < 4; ++ci) {
            Vec3 p = frames[si].Q;
            if (kCornerOffsets[ci].first) p = p + frames[si].X;
            if (kCornerOffsets[ci].second) p = p + frames[si].Y;
            net.squares[si].fold_corners[ci] = {p.x, p.y, p.z};
            ++corner_uses[p];
        }
    }
    if (corner_uses.size() != 8)
        throw std::logic_error("folded net does not close into a cube");
    for (auto& [p, uses] : corner_uses)
        if (uses != 3 || p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1 || p.z < 0 || p.z > 1)
            throw std::logic_error("folded net does not close into a cube");

    // Pair boundary edges by their folded position.
    NetGeometry geo;
    geo.P = net.corner_base;
    geo.vd = {2 * net.vx, 2 * net.vy};
    geo.wd = {-2 * net.vy, 2 * net.vx};

    auto frame_corner = [&](int si, int ci) {
        return std::make_pair(net.squares[si].fx + kCornerOffsets[ci].first,
                              net.squares[si].fy + kCornerOffsets[ci].second);
    };
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, std::vector<std::pair<int, int>>>
        in_plane;
    std::map<std::pair<Vec3, Vec3>, std::vector<std::pair<int, int>>> folded;
    for (int si = 0; si < 6; ++si)
        for (int ei = 0; ei < 4; ++ei) {
            auto p0 = frame_corner(si, ei), p1 = frame_corner(si, (ei + 1) % 4);
            auto key = p0 < p1 ? std::make_pair(p0, p1) : std::make_pair(p1, p0);
            in_plane[key].emplace_back(si, ei);
            auto f0 = net.squares[si].fold_corners[ei];
            auto f1 = net.squares[si].fold_corners[(ei + 1) % 4];
            Vec3 v0{f0[0], f0[1], f0[2]}, v1{f1[0], f1[1], f1[2]};
            auto fkey = v0 < v1 ? std::make_pair(v0, v1) : std::make_pair(v1, v0);
            folded[fkey].emplace_back(si, ei);
        }
    std::set<std::pair<int, int>> interior;
    for (auto& [key, es] : in_plane)
        if (es.size() == 2)
            for (auto& e : es) interior.insert(e);

    for (auto& [key, es] : folded) {
        if (es.size() != 2) throw std::logic_error("folded edge not shared by two squares");
        auto ea = es[0], eb = es[1];
        if (interior.count(ea)) continue;
        // Map side a onto side b by matching folded endpoints.
        std::vector<std::pair<int, int>> ps, qs;
        std::array<Vec3, 2> fa{}, fb{};
        for (int j = 0; j < 2; ++j) {
            int ci = (ea.second + j) % 4;
            ps.push_back(frame_corner(ea.first, ci));
            auto f = net.squares[ea.first].fold_corners[ci];
            fa[j] = {f[0], f[1], f[2]};
        }
        for (int j = 0; j < 2; ++j) {
            int ci = (eb.second + j) % 4;
            auto f = net.squares[eb.first].fold_corners[ci];
            fb[j] = {f[0], f[1], f[2]};
        }
        for (int j = 0; j < 2; ++j) {
            int ci = (eb.second + (fa[0] == fb[0] ? j : 1 - j)) % 4;
            qs.push_back(frame_corner(eb.first, ci));
        }
        if (!(fa[0] == fb[0] || fa[0] == fb[1]))
            throw std::logic_error("folded edges do not share endpoints");
        auto [r, tx, ty] = fit_frame_map(ps, qs);
        if (r < 0) throw std::logic_error("boundary gluing is not a plane rotation");
        CubeGluing gl;
        gl.square_a = ea.first;
        gl.edge_a = ea.second;
        gl.square_b = eb.first;
        gl.edge_b = eb.second;
        gl.design_map = geo.design_map(r, tx, ty);
        gl.swaps_direction = (r & 1) != 0;
        net.gluings.push_back(gl);
    }
    if (net.gluings.size() != 7) throw std::logic_error("expected seven boundary gluings");
    for (const auto& gl : net.gluings)
        if (!is_symmetry(d, gl.design_map, false))
            throw std::logic_error("boundary gluing is not a plain symmetry of the design");
    return net;
}

CubeVerification verify_cube_isonemal(const CubeNet& net) {
    CubeVerification out;
    const Design& d = net.design;
    NetGeometry geo = geometry_of(net);

    // Seam consistency, honouring per-face colour flips.
    out.gluings_consistent = true;
    for (const auto& gl : net.gluings) {
        int fx = net.face_flip[gl.square_a] ^ net.face_flip[gl.square_b];
        if (!passes_with_flips(d, gl.design_map, fx)) out.gluings_consistent = false;
    }

    // Strand universe.
    TraceContext tc;
    tc.geo = geo;
    for (int si = 0; si < 6; ++si)
        for (int ci = 0; ci < 4; ++ci) {
            auto [fx, fy] = kFrameOffsets[si];
            tc.plane_corners[si][ci] =
                geo.plane_point(fx + kCornerOffsets[ci].first, fy + kCornerOffsets[ci].second);
        }
    for (int si = 0; si < 6; ++si)
        for (int dir = 0; dir < 2; ++dir) {
            int lo = 1 << 30, hi = -(1 << 30);
            for (const auto& c : tc.plane_corners[si]) {
                int v = dir == 0 ? c.dx : c.dy;
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            for (int k = lo / 2 - 1; 2 * k < hi; ++k) {
                if (2 * k < hi && 2 * k + 2 > lo) {
                    Segment seg{si, dir, k};
                    tc.index.emplace(seg, static_cast<int>(tc.segments.size()));
                    tc.segments.push_back(seg);
                }
            }
        }

    // Edge-crossing links.
    auto edge_of = [&](int si, int ei) {
        return std::make_pair(tc.plane_corners[si][ei], tc.plane_corners[si][(ei + 1) % 4]);
    };
    std::map<std::pair<int, int>, std::pair<int, int>> interior_partner;
    {
        std::map<std::pair<std::pair<int, int>, std::pair<int, int>>,
                 std::vector<std::pair<int, int>>>
            in_plane;
        auto frame_corner = [&](int si, int ci) {
            return std::make_pair(net.squares[si].fx + kCornerOffsets[ci].first,
                                  net.squares[si].fy + kCornerOffsets[ci].second);
        };
        for (int si = 0; si < 6; ++si)
            for (int ei = 0; ei < 4; ++ei) {
                auto p0 = frame_corner(si, ei), p1 = frame_corner(si, (ei + 1) % 4);
                auto key = p0 < p1 ? std::make_pair(p0, p1) : std::make_pair(p1, p0);
                in_plane[key].emplace_back(si, ei);
            }
        for (auto& [key, es] : in_plane)
            if (es.size() == 2) {
                interior_partner[es[0]] = es[1];
                interior_partner[es[1]] = es[0];
            }
    }
    std::map<std::pair<int, int>, std::pair<const CubeGluing*, bool>> seam_of;
    for (const auto& gl : net.gluings) {
        seam_of[{gl.square_a, gl.edge_a}] = {&gl, false};
        seam_of[{gl.square_b, gl.edge_b}] = {&gl, true};
    }

    auto links_of = [&](const Segment& seg) {
        std::vector<int> ls;
        for (int ei = 0; ei < 4; ++ei) {
            auto [c0, c1] = edge_of(seg.square, ei);
            int a0 = seg.dir == 0 ? c0.dx : c0.dy;
            int a1 = seg.dir == 0 ? c1.dx : c1.dy;
            int lo = std::min(a0, a1), hi = std::max(a0, a1);
            if (!(2 * seg.k < hi && 2 * seg.k + 2 > lo)) continue;
            Segment nxt;
            if (auto it = interior_partner.find({seg.square, ei});
                it != interior_partner.end()) {
                nxt = {it->second.first, seg.dir, seg.k};
            } else {
                auto [gl, reverse] = seam_of.at({seg.square, ei});
                PlanarMap m = reverse ? planar_inverse(gl->design_map) : gl->design_map;
                int target = reverse ? gl->square_a : gl->square_b;
                nxt = map_segment(geo, m, target, seg);
            }
            auto it2 = tc.index.find(nxt);
            if (it2 == tc.index.end()) {
                out.detail = "strand leaves the net";
                return std::vector<int>{};
            }
            ls.push_back(it2->second);
        }
        return ls;
    };

    const int nseg = static_cast<int>(tc.segments.size());
    std::vector<std::array<int, 2>> links(nseg, {-1, -1});
    for (int i = 0; i < nseg; ++i) {
        auto ls = links_of(tc.segments[i]);
        if (ls.size() != 2) {
            out.detail = out.detail.empty() ? "segment does not cross exactly two edges"
                                            : out.detail;
            return out;
        }
        links[i] = {ls[0], ls[1]};
    }

    std::vector<int> strand(nseg, -1);
    int strands = 0;
    for (int i = 0; i < nseg; ++i) {
        if (strand[i] != -1) continue;
        std::vector<int> todo{i};
        strand[i] = strands;
        while (!todo.empty()) {
            int v = todo.back();
            todo.pop_back();
            for (int w : links[v])
                if (strand[w] == -1) {
                    strand[w] = strands;
                    todo.push_back(w);
                }
        }
        ++strands;
    }
    out.strand_count = strands;

    // All 24 rotations of the cube.
    std::vector<std::array<std::array<int, 3>, 3>> rotations;
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int psign[6] = {1, -1, -1, 1, 1, -1};
    for (int pi = 0; pi < 6; ++pi)
        for (int sgn = 0; sgn < 8; ++sgn) {
            int s0 = (sgn & 1) ? -1 : 1, s1 = (sgn & 2) ? -1 : 1, s2 = (sgn & 4) ? -1 : 1;
            if (psign[pi] * s0 * s1 * s2 != 1) continue;
            std::array<std::array<int, 3>, 3> m{};
            m[0][perms[pi][0]] = s0;
            m[1][perms[pi][1]] = s1;
            m[2][perms[pi][2]] = s2;
            rotations.push_back(m);
        }

    auto rotate_corner = [&](const std::array<std::array<int, 3>, 3>& m,
                             const std::array<int, 3>& q) {
        std::array<int, 3> dbl{2 * q[0] - 1, 2 * q[1] - 1, 2 * q[2] - 1};
        std::array<int, 3> r{};
        for (int i = 0; i < 3; ++i)
            r[i] = m[i][0] * dbl[0] + m[i][1] * dbl[1] + m[i][2] * dbl[2];
        return std::array<int, 3>{(r[0] + 1) / 2, (r[1] + 1) / 2, (r[2] + 1) / 2};
    };

    out.rotations_consistent = true;
    out.adjacent_swaps_ok = true;
    std::vector<std::vector<int>> strand_perms;
    for (const auto& rot : rotations) {
        // Identify the image square and corner correspondence for each square.
        std::vector<PlanarMap> maps(6);
        std::vector<int> target(6, -1);
        bool geometry_ok = true;
        for (int si = 0; si < 6 && geometry_ok; ++si) {
            std::array<std::array<int, 3>, 4> img{};
            for (int ci = 0; ci < 4; ++ci)
                img[ci] = rotate_corner(rot, net.squares[si].fold_corners[ci]);
            int found = -1;
            std::array<int, 4> corr{};
            for (int sj = 0; sj < 6 && found == -1; ++sj) {
                bool all = true;
                std::array<int, 4> c{};
                for (int ci = 0; ci < 4 && all; ++ci) {
                    int where = -1;
                    for (int cj = 0; cj < 4; ++cj)
                        if (net.squares[sj].fold_corners[cj] == img[ci]) where = cj;
                    if (where == -1)
                        all = false;
                    else
                        c[ci] = where;
                }
                if (all) {
                    found = sj;
                    corr = c;
                }
            }
            if (found == -1) {
                geometry_ok = false;
                break;
            }
            target[si] = found;
            std::vector<std::pair<int, int>> ps, qs;
            for (int ci = 0; ci < 4; ++ci) {
                ps.emplace_back(net.squares[si].fx + kCornerOffsets[ci].first,
                                net.squares[si].fy + kCornerOffsets[ci].second);
                qs.emplace_back(net.squares[found].fx + kCornerOffsets[corr[ci]].first,
                                net.squares[found].fy + kCornerOffsets[corr[ci]].second);
            }
            auto [r, tx, ty] = fit_frame_map(ps, qs);
            if (r < 0) {
                geometry_ok = false;
                break;
            }
            maps[si] = geo.design_map(r, tx, ty);
        }
        if (!geometry_ok) {
            out.rotations_consistent = false;
            out.detail = "cube rotation does not permute the net squares";
            continue;
        }
        // A single tau must make every per-square map a symmetry.
        bool works = false;
        for (int eps = 0; eps < 2 && !works; ++eps) {
            bool all = true;
            for (int si = 0; si < 6 && all; ++si) {
                int fxor = (net.face_flip[si] ^ net.face_flip[target[si]] ^ eps) & 1;
                if (!passes_with_flips(d, maps[si], fxor)) all = false;
            }
            works = all;
        }
        if (!works) {
            out.rotations_consistent = false;
            if (out.detail.empty()) out.detail = "cube rotation breaks the weave";
        }
        // Induced strand permutation.
        std::vector<int> sp(strands, -1);
        bool perm_ok = true;
        for (int i = 0; i < nseg && perm_ok; ++i) {
            const Segment& seg = tc.segments[i];
            Segment img = map_segment(geo, maps[seg.square], target[seg.square], seg);
            auto it = tc.index.find(img);
            if (it == tc.index.end()) {
                perm_ok = false;
                break;
            }
            int from = strand[i], to = strand[it->second];
            if (sp[from] == -1)
                sp[from] = to;
            else if (sp[from] != to)
                perm_ok = false;
        }
        if (!perm_ok) {
            out.rotations_consistent = false;
            if (out.detail.empty()) out.detail = "cube rotation splits a strand";
            continue;
        }
        strand_perms.push_back(sp);
    }

    // Transitivity of the strand set under the rotation action.
    std::vector<int> comp(strands);
    for (int i = 0; i < strands; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int i) {
        while (comp[i] != i) i = comp[i] = comp[comp[i]];
        return i;
    };
    for (const auto& sp : strand_perms)
        for (int i = 0; i < strands; ++i) comp[find(i)] = find(sp[i]);
    int classes = 0;
    for (int i = 0; i < strands; ++i)
        if (find(i) == i) ++classes;
    out.transitive = classes == 1;

    // Every adjacent parallel pair must be exchanged by some rotation.
    for (int i = 0; i < nseg; ++i) {
        const Segment& seg = tc.segments[i];
        Segment nxt{seg.square, seg.dir, seg.k + 1};
        auto it = tc.index.find(nxt);
        if (it == tc.index.end()) continue;
        int a = strand[i], b = strand[it->second];
        bool swapped = false;
        for (const auto& sp : strand_perms)
            if (sp[a] == b && sp[b] == a) {
                swapped = true;
                break;
            }
        if (!swapped) {
            out.adjacent_swaps_ok = false;
            if (out.detail.empty()) out.detail = "adjacent strands never exchanged";
            break;
        }
    }

    out.ok = out.gluings_consistent && out.rotations_consistent && out.transitive &&
             out.adjacent_swaps_ok;
    return out;
}

}  // namespace isoweave
