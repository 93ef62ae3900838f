#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "isoweave/cube.hpp"
#include "util.hpp"

using namespace isoweave;

namespace {

// Exact rational scalar; everything in this oracle is integer geometry, so
// the denominators stay tiny and long long never gets close to overflow.
struct Frac {
    long long n = 0, d = 1;
    Frac() = default;
    Frac(long long v) : n(v) {}
    Frac(long long nn, long long dd) : n(nn), d(dd) { norm(); }
    void norm() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
    }
};
Frac operator+(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
Frac operator-(Frac a, Frac b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
Frac operator*(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }
bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
bool operator<(Frac a, Frac b) { return a.n * b.d < b.n * a.d; }
bool operator<=(Frac a, Frac b) { return a.n * b.d <= b.n * a.d; }

struct Vec3 {
    Frac x, y, z;
};
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(Frac s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
Frac dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
bool is_zero(const Vec3& v) { return v.x.n == 0 && v.y.n == 0 && v.z.n == 0; }

using Key = std::array<long long, 6>;
Key key_of(const Vec3& p) {
    return {p.x.n, p.x.d, p.y.n, p.y.d, p.z.n, p.z.d};
}

// Rotation by +/-90 degrees about the unit axis e: v -> e(e.v) +/- e x v.
Vec3 quarter_about(const Vec3& e, const Vec3& v, int sign) {
    Vec3 par = dot(e, v) * e;
    Vec3 swing = cross(e, v);
    if (sign < 0) swing = Frac(-1) * swing;
    return par + swing;
}

// A strip centre line clipped to one face, carried onto the cube surface.
struct Chord {
    int face = 0, dir = 0, strip = 0;  // dir 0: strip along y at x=strip+1/2
    std::array<Vec3, 2> end;
};

struct TraceResult {
    bool geometry_ok = true;    // chords link pairwise into closed loops
    bool rotations_ok = true;   // all 24 rotations act colour-consistently
    bool transitive = false;    // and generate one orbit of strands
    int strand_count = 0;
};

// Independent retracing of the woven cube: strips are clipped against the
// plane squares, folded to 3D through the published corner images, relinked
// purely by shared surface points (with unfolding to settle four-way meets),
// and the 24 rotations are applied directly to the 3D chords.  Nothing here
// touches the gluing maps or the plane-map machinery under test.
TraceResult trace_cube(const CubeNet& net) {
    TraceResult out;
    const Design& d = net.design;
    const int T = d.torus_side;
    const int ox[4] = {0, 1, 1, 0}, oy[4] = {0, 0, 1, 1};
    const long long vdx = 2 * net.vx, vdy = 2 * net.vy;
    const long long wdx = -2 * net.vy, wdy = 2 * net.vx;
    const long long nrm = vdx * vdx + vdy * vdy;

    // doubled plane corners per face, all even
    long long pc[6][4][2];
    for (int si = 0; si < 6; ++si)
        for (int k = 0; k < 4; ++k) {
            long long u = net.squares[si].fx + ox[k];
            long long v = net.squares[si].fy + oy[k];
            pc[si][k][0] = net.corner_base.dx + u * vdx + v * wdx;
            pc[si][k][1] = net.corner_base.dy + u * vdy + v * wdy;
        }
    auto corner3 = [&](int si, int k) {
        const auto& f = net.squares[si].fold_corners[k];
        return Vec3{Frac(f[0]), Frac(f[1]), Frac(f[2])};
    };
    // barycentric split along the two sides, then fold to 3D
    auto to_cube = [&](int si, Frac px, Frac py) {
        Frac rx = px - Frac(pc[si][0][0]), ry = py - Frac(pc[si][0][1]);
        Frac s = (rx * Frac(vdx) + ry * Frac(vdy)) * Frac(1, nrm);
        Frac t = (rx * Frac(wdx) + ry * Frac(wdy)) * Frac(1, nrm);
        Vec3 f0 = corner3(si, 0);
        return f0 + s * (corner3(si, 1) - f0) + t * (corner3(si, 3) - f0);
    };

    std::vector<Chord> chords;
    std::map<std::tuple<int, int, int>, int> chord_index;
    for (int si = 0; si < 6; ++si)
        for (int dir = 0; dir < 2; ++dir) {
            long long lo = pc[si][0][dir], hi = lo;
            for (int k = 1; k < 4; ++k) {
                lo = std::min(lo, pc[si][k][dir]);
                hi = std::max(hi, pc[si][k][dir]);
            }
            for (long long m = lo + 1; m < hi; m += 2) {
                // clip the line (coordinate dir) = m against the quad
                std::vector<Frac> hits;
                for (int e = 0; e < 4; ++e) {
                    long long a0 = pc[si][e][dir], a1 = pc[si][(e + 1) % 4][dir];
                    long long b0 = pc[si][e][1 - dir], b1 = pc[si][(e + 1) % 4][1 - dir];
                    if (a0 == a1) continue;  // sides are never axis-parallel
                    Frac t(m - a0, a1 - a0);
                    if (Frac(0) <= t && t <= Frac(1))
                        hits.push_back(Frac(b0) + t * Frac(b1 - b0));
                }
                std::sort(hits.begin(), hits.end());
                hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
                if (hits.empty()) continue;
                if (hits.size() != 2) {
                    out.geometry_ok = false;
                    continue;
                }
                Chord c;
                c.face = si;
                c.dir = dir;
                c.strip = static_cast<int>((m - 1) / 2);
                for (int i = 0; i < 2; ++i) {
                    Frac px = dir == 0 ? Frac(m) : hits[i];
                    Frac py = dir == 0 ? hits[i] : Frac(m);
                    c.end[i] = to_cube(si, px, py);
                }
                chord_index[{si, dir, static_cast<int>((m - 1) / 2)}] =
                    static_cast<int>(chords.size());
                chords.push_back(c);
            }
        }

    // outward unit normal of a face
    auto normal_of = [&](int si) {
        Vec3 n = cross(corner3(si, 1) - corner3(si, 0), corner3(si, 3) - corner3(si, 0));
        Vec3 centre_sum{Frac(0), Frac(0), Frac(0)};
        for (int k = 0; k < 4; ++k) centre_sum = centre_sum + corner3(si, k);
        Vec3 off = centre_sum - Vec3{Frac(2), Frac(2), Frac(2)};
        if (dot(off, n) < Frac(0)) n = Frac(-1) * n;
        return n;
    };
    // rotate a point of face sb into face sa's plane about their shared edge
    auto unfold = [&](int sa, int sb, const Vec3& p) {
        std::vector<Vec3> shared;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (net.squares[sa].fold_corners[i] == net.squares[sb].fold_corners[j])
                    shared.push_back(corner3(sa, i));
        REQUIRE(shared.size() == 2);
        Vec3 axis = shared[1] - shared[0];
        Vec3 na = normal_of(sa), nb = normal_of(sb);
        for (int sign : {1, -1})
            if (is_zero(quarter_about(axis, nb, sign) - na))
                return shared[0] + quarter_about(axis, p - shared[0], sign);
        REQUIRE(false);
        return p;
    };

    // link chord ends through shared surface points
    std::map<Key, std::vector<std::pair<int, int>>> at_point;
    for (int ci = 0; ci < static_cast<int>(chords.size()); ++ci)
        for (int e = 0; e < 2; ++e) at_point[key_of(chords[ci].end[e])].push_back({ci, e});
    std::vector<std::array<int, 2>> partner(chords.size(), {-1, -1});
    for (const auto& [key, recs] : at_point) {
        if (recs.size() == 2) {
            partner[recs[0].first][recs[0].second] = recs[1].first;
            partner[recs[1].first][recs[1].second] = recs[0].first;
            continue;
        }
        if (recs.size() != 4) {
            out.geometry_ok = false;
            continue;
        }
        // a crossing sitting exactly on a fold: settle who continues whom by
        // unfolding the two faces flat and demanding a straight line
        std::map<int, std::vector<std::pair<int, int>>> by_face;
        for (auto r : recs) by_face[chords[r.first].face].push_back(r);
        if (by_face.size() != 2) {
            out.geometry_ok = false;
            continue;
        }
        auto it = by_face.begin();
        auto& fa_recs = it->second;
        int sa = it->first;
        ++it;
        auto& fb_recs = it->second;
        int sb = it->first;
        if (fa_recs.size() != 2 || fb_recs.size() != 2) {
            out.geometry_ok = false;
            continue;
        }
        const Vec3& p = chords[fa_recs[0].first].end[fa_recs[0].second];
        for (auto [ca, ea] : fa_recs) {
            Vec3 away_a = chords[ca].end[1 - ea] - p;
            int found = -1;
            for (auto [cb, eb] : fb_recs) {
                Vec3 away_b = unfold(sa, sb, chords[cb].end[1 - eb]) - p;
                if (is_zero(cross(away_a, away_b)) && dot(away_a, away_b) < Frac(0))
                    found = found < 0 ? cb : -2;
            }
            if (found < 0) {
                out.geometry_ok = false;
                continue;
            }
            partner[ca][ea] = found;
        }
        for (auto [cb, eb] : fb_recs) {
            int found = -1;
            for (auto [ca, ea] : fa_recs)
                if (partner[ca][ea] == cb) found = ca;
            if (found < 0)
                out.geometry_ok = false;
            else
                partner[cb][eb] = found;
        }
    }
    for (const auto& pr : partner)
        if (pr[0] < 0 || pr[1] < 0) out.geometry_ok = false;
    if (!out.geometry_ok) return out;

    // strands = connected chord components
    std::vector<int> root(chords.size());
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int i) {
        return root[i] == i ? i : root[i] = find(root[i]);
    };
    for (int ci = 0; ci < static_cast<int>(chords.size()); ++ci)
        for (int e = 0; e < 2; ++e) root[find(ci)] = find(partner[ci][e]);
    std::set<int> strands;
    for (int ci = 0; ci < static_cast<int>(chords.size()); ++ci) strands.insert(find(ci));
    out.strand_count = static_cast<int>(strands.size());

    // crossings strictly inside a face, with who is on top
    struct Crossing {
        int warp_chord, weft_chord;
        bool warp_over;
    };
    std::map<Key, Crossing> crossing_at;
    for (int si = 0; si < 6; ++si) {
        long long xlo = pc[si][0][0], xhi = xlo, ylo = pc[si][0][1], yhi = ylo;
        for (int k = 1; k < 4; ++k) {
            xlo = std::min(xlo, pc[si][k][0]);
            xhi = std::max(xhi, pc[si][k][0]);
            ylo = std::min(ylo, pc[si][k][1]);
            yhi = std::max(yhi, pc[si][k][1]);
        }
        for (long long mx = xlo + 1; mx < xhi; mx += 2)
            for (long long my = ylo + 1; my < yhi; my += 2) {
                Frac rx = Frac(mx - pc[si][0][0]), ry = Frac(my - pc[si][0][1]);
                Frac s = (rx * Frac(vdx) + ry * Frac(vdy)) * Frac(1, nrm);
                Frac t = (rx * Frac(wdx) + ry * Frac(wdy)) * Frac(1, nrm);
                if (!(Frac(0) < s && s < Frac(1) && Frac(0) < t && t < Frac(1)))
                    continue;
                int cellx = static_cast<int>((mx - 1) / 2), celly = static_cast<int>((my - 1) / 2);
                Crossing cr;
                cr.warp_chord = chord_index.at({si, 0, cellx});
                cr.weft_chord = chord_index.at({si, 1, celly});
                cr.warp_over = (d.at(floor_mod(cellx, T), floor_mod(celly, T)) ^
                                net.face_flip[si]) != 0;
                crossing_at[key_of(to_cube(si, Frac(mx), Frac(my)))] = cr;
            }
    }

    // index chords by their unordered endpoint pair
    std::map<std::pair<Key, Key>, int> chord_by_ends;
    auto pair_key = [&](const Vec3& a, const Vec3& b) {
        Key ka = key_of(a), kb = key_of(b);
        return ka < kb ? std::make_pair(ka, kb) : std::make_pair(kb, ka);
    };
    for (int ci = 0; ci < static_cast<int>(chords.size()); ++ci)
        chord_by_ends[pair_key(chords[ci].end[0], chords[ci].end[1])] = ci;

    // all 24 rotations of the cube as signed permutations about the centre
    std::vector<std::array<std::array<int, 3>, 3>> rots;
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int psign[6] = {1, -1, -1, 1, 1, -1};
    for (int pi = 0; pi < 6; ++pi)
        for (int sm = 0; sm < 8; ++sm) {
            int s[3] = {(sm & 1) ? -1 : 1, (sm & 2) ? -1 : 1, (sm & 4) ? -1 : 1};
            if (psign[pi] * s[0] * s[1] * s[2] != 1) continue;
            std::array<std::array<int, 3>, 3> m{};
            for (int i = 0; i < 3; ++i) m[i][perms[pi][i]] = s[i];
            rots.push_back(m);
        }
    REQUIRE(rots.size() == 24);

    std::vector<int> sroot;
    for (int s : strands) sroot.push_back(s);
    std::map<int, int> strand_slot;
    for (size_t i = 0; i < sroot.size(); ++i) strand_slot[sroot[i]] = static_cast<int>(i);
    std::vector<int> sunion(sroot.size());
    std::iota(sunion.begin(), sunion.end(), 0);
    std::function<int(int)> sfind = [&](int i) {
        return sunion[i] == i ? i : sunion[i] = sfind(sunion[i]);
    };

    Frac half(1, 2);
    Vec3 centre{half, half, half};
    for (const auto& m : rots) {
        auto apply = [&](const Vec3& p) {
            Vec3 q = p - centre;
            Vec3 r{Frac(m[0][0]) * q.x + Frac(m[0][1]) * q.y + Frac(m[0][2]) * q.z,
                   Frac(m[1][0]) * q.x + Frac(m[1][1]) * q.y + Frac(m[1][2]) * q.z,
                   Frac(m[2][0]) * q.x + Frac(m[2][1]) * q.y + Frac(m[2][2]) * q.z};
            return r + centre;
        };
        std::vector<int> image(chords.size(), -1);
        bool geom = true;
        for (int ci = 0; ci < static_cast<int>(chords.size()) && geom; ++ci) {
            auto it = chord_by_ends.find(
                pair_key(apply(chords[ci].end[0]), apply(chords[ci].end[1])));
            if (it == chord_by_ends.end())
                geom = false;
            else
                image[ci] = it->second;
        }
        if (!geom) {
            out.rotations_ok = false;
            continue;
        }
        int eps = -1;
        bool colour = true;
        for (const auto& [key, cr] : crossing_at) {
            Vec3 p{Frac(key[0], key[1]), Frac(key[2], key[3]), Frac(key[4], key[5])};
            auto it = crossing_at.find(key_of(apply(p)));
            if (it == crossing_at.end()) {
                colour = false;
                break;
            }
            const Crossing& img = it->second;
            int mapped_top = cr.warp_over ? image[cr.warp_chord] : image[cr.weft_chord];
            int img_top = img.warp_over ? img.warp_chord : img.weft_chord;
            int bit = mapped_top == img_top ? 0 : 1;
            if (eps < 0)
                eps = bit;
            else if (eps != bit) {
                colour = false;
                break;
            }
        }
        if (!colour) {
            out.rotations_ok = false;
            continue;
        }
        for (int ci = 0; ci < static_cast<int>(chords.size()); ++ci) {
            int a = sfind(strand_slot.at(find(ci)));
            int b = sfind(strand_slot.at(find(image[ci])));
            if (a != b) sunion[a] = b;
        }
    }
    std::set<int> classes;
    for (size_t i = 0; i < sroot.size(); ++i) classes.insert(sfind(static_cast<int>(i)));
    out.transitive = classes.size() == 1;
    return out;
}

}  // namespace

TEST_CASE("weavability follows the plain-corner criterion") {
    const std::map<std::string, bool> expect = {
        {"33_3", true}, {"33_4", true}, {"34", true},   {"37", true},
        {"38", true},   {"39", true},   {"35_3", false}, {"35_4", false},
        {"36_1", false}, {"36_2", false}, {"36s", false},
    };
    const char* fixtures[] = {"5-1-1",   "10-93-1",  "10-107-1",       "10-27-1",
                              "10-85-1", "10-39-1",  "10-55-2",        "20-19437",
                              "20-3391", "order20-33_4", "10-85-1-doubled"};
    std::set<std::string> seen;
    for (const char* name : fixtures) {
        CAPTURE(name);
        auto c = classify(testutil::fixture(name));
        REQUIRE(c.ok);
        std::string sp = species_name(c.report.species);
        seen.insert(sp);
        CubeWeavability w = cube_weavable(c.report);
        CHECK(w.verdict == expect.at(sp));
        if (!w.verdict) CHECK_FALSE(w.reason.empty());
    }
    CHECK(seen.size() == 11);
}

TEST_CASE("cube_net refuses species without plain corner turns") {
    for (const char* name : {"5-1-1", "10-85-1", "10-27-1", "10-39-1"}) {
        CAPTURE(name);
        Design d = testutil::fixture(name);
        CHECK_THROWS_AS(cube_net(d), std::invalid_argument);
    }
}

TEST_CASE("the net folds onto a genuine cube") {
    Design d = testutil::fixture("10-93-1");
    CubeNet net = cube_net(d);
    CHECK(net.species == Species::S39);
    CHECK(point_parity(net.corner_base) == PointParity::Corner);
    // the fold side is the shortest full-lattice vector, drawn into the
    // open first quadrant
    CHECK(net.vx == 2);
    CHECK(net.vy == 1);
    // eight distinct 0/1 corners, each met by three faces
    std::map<std::array<int, 3>, int> uses;
    for (const auto& sq : net.squares)
        for (const auto& f : sq.fold_corners) {
            for (int c : f) CHECK((c == 0 || c == 1));
            ++uses[f];
        }
    CHECK(uses.size() == 8);
    for (const auto& [corner, n] : uses) CHECK(n == 3);
    // twelve cube edges, each covered by exactly two face sides
    std::map<std::pair<std::array<int, 3>, std::array<int, 3>>, int> edges;
    for (const auto& sq : net.squares)
        for (int e = 0; e < 4; ++e) {
            auto a = sq.fold_corners[e], b = sq.fold_corners[(e + 1) % 4];
            edges[a < b ? std::make_pair(a, b) : std::make_pair(b, a)]++;
        }
    CHECK(edges.size() == 12);
    for (const auto& [edge, n] : edges) CHECK(n == 2);
    // seven seams, each a plain symmetry of the design
    REQUIRE(net.gluings.size() == 7);
    for (const auto& gl : net.gluings) {
        CHECK(is_symmetry(d, gl.design_map, false));
        CHECK(gl.square_a != gl.square_b);
    }
}

TEST_CASE("verification and the independent tracer agree on the corpus") {
    const std::map<std::string, int> strands = {
        {"10-93-1", 6},  {"10-107-1", 4},     {"10-55-2", 12},
        {"20-19437", 12}, {"order20-33_4", 8}, {"20-3391", 8},
    };
    for (const auto& [name, expected] : strands) {
        CAPTURE(name);
        Design d = testutil::fixture(name);
        CubeNet net = cube_net(d);
        CubeVerification v = verify_cube_isonemal(net);
        CHECK(v.ok);
        CHECK(v.gluings_consistent);
        CHECK(v.rotations_consistent);
        CHECK(v.transitive);
        CHECK(v.adjacent_swaps_ok);
        CHECK(v.strand_count == expected);
        TraceResult tr = trace_cube(net);
        CHECK(tr.geometry_ok);
        CHECK(tr.strand_count == v.strand_count);
        CHECK(tr.rotations_ok == v.rotations_consistent);
        CHECK(tr.transitive == v.transitive);
    }
}

TEST_CASE("a flipped face breaks the seams and the rotations") {
    Design d = testutil::fixture("10-93-1");
    CubeNet net = cube_net(d);
    net.face_flip[2] = 1;
    CubeVerification v = verify_cube_isonemal(net);
    CHECK_FALSE(v.gluings_consistent);
    CHECK_FALSE(v.ok);
    TraceResult tr = trace_cube(net);
    CHECK(tr.geometry_ok);  // geometry unchanged, colours inconsistent
    CHECK_FALSE(tr.rotations_ok);
}

TEST_CASE("fold sides come from the full translation lattice") {
    // 33_3 has a level-3 full lattice at seed (2,1): shortest vector (4,2)
    Design d = testutil::fixture("10-55-2");
    CubeNet net = cube_net(d);
    CHECK(net.vx == 4);
    CHECK(net.vy == 2);
    CHECK(verify_cube_isonemal(net).strand_count == 12);
    // 34 keeps the level-2 side (1,3): its crossings sit right on the folds
    CubeNet net34 = cube_net(testutil::fixture("10-107-1"));
    CHECK(net34.vx == 1);
    CHECK(net34.vy == 3);
}
