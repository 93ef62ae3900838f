#include "isoweave/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace isoweave {

namespace {

Lattice2 lattice_at_level(int m, int n, int level) {
    switch (level) {
        case 1: return make_lattice(m, n, -n, m);
        case 2: return make_lattice(m - n, m + n, m + n, n - m);
        case 3: return make_lattice(2 * m, 2 * n, -2 * n, 2 * m);
        case 4: return make_lattice(2 * (m - n), 2 * (m + n), 2 * (m + n), 2 * (n - m));
        case 5: return make_lattice(4 * m, 4 * n, -4 * n, 4 * m);
    }
    throw std::invalid_argument("level out of range");
}

// Doubled offset from the unit centre to a unit corner, per level, in terms
// of the level-1 legs.
HalfPoint corner_offset(int m, int n, int level) {
    switch (level) {
        case 1: return {m - n, m + n};
        case 2: return {-2 * n, 2 * m};
        case 3: return {2 * (m - n), 2 * (m + n)};
        case 4: return {-4 * n, 4 * m};
    }
    throw std::invalid_argument("level out of range");
}

// Doubled offset from the unit centre to a side midpoint.
HalfPoint midside_offset(int m, int n, int level) {
    switch (level) {
        case 1: return {-n, m};
        case 2: return {-(m + n), m - n};
        case 3: return {-2 * n, 2 * m};
        case 4: return {-2 * (m + n), 2 * (m - n)};
    }
    throw std::invalid_argument("level out of range");
}

}  // namespace

GroupSpec build_group(Species sp, int m1, int n1) {
    if (!(m1 > n1 && n1 >= 1))
        throw std::invalid_argument("seed legs must satisfy M > N >= 1");
    if ((m1 & 1) == (n1 & 1))
        throw std::invalid_argument("seed legs must have opposite parity");
    if (std::gcd(m1, n1) != 1)
        throw std::invalid_argument("seed legs must be coprime");

    const SpeciesTraits& tr = species_traits(sp);
    GroupSpec g;
    g.species = sp;
    g.m1 = m1;
    g.n1 = n1;
    g.g_level = tr.g_level;
    g.h_level = tr.h_level;
    g.g_lattice = lattice_at_level(m1, n1, tr.g_level);
    g.h_lattice = lattice_at_level(m1, n1, tr.h_level);
    g.has_tau_translations = tr.h_level > tr.g_level;
    g.centre = tr.unit_centre == CentreSort::CellCentre ? HalfPoint{1, 1} : HalfPoint{0, 0};
    g.centre_tau = tr.centre_tau;
    HalfPoint co = corner_offset(m1, n1, tr.g_level);
    g.corner = {g.centre.dx + co.dx, g.centre.dy + co.dy};
    g.corner_tau = tr.corner_tau;
    HalfPoint mo = midside_offset(m1, n1, tr.g_level);
    g.midside = {g.centre.dx + mo.dx, g.centre.dy + mo.dy};
    g.midside_tau = tr.centre_tau != tr.corner_tau;

    long long sx = smallest_axis_period(g.h_lattice, false);
    long long sy = smallest_axis_period(g.h_lattice, true);
    long long torus = std::lcm(sx, sy);
    long long order = tr.order_mult * (1LL * m1 * m1 + 1LL * n1 * n1);
    if (torus != order) throw std::logic_error("torus side disagrees with the order");
    g.torus_side = static_cast<int>(torus);

    g.generators = {
        translation(static_cast<int>(g.h_lattice.v1), static_cast<int>(g.h_lattice.v2), false),
        translation(static_cast<int>(g.h_lattice.w1), static_cast<int>(g.h_lattice.w2), false),
        quarter_turn(g.centre, 1, g.centre_tau),
        quarter_turn(g.corner, 1, g.corner_tau),
        half_turn(g.midside, g.midside_tau),
    };
    return g;
}

namespace {

struct ParityUF {
    std::vector<int> parent;
    std::vector<std::uint8_t> rel;  // colour of i relative to parent[i]
    bool contradiction = false;

    explicit ParityUF(int n) : parent(n), rel(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<int, std::uint8_t> find(int i) {
        int root = i;
        while (parent[root] != root) root = parent[root];
        std::vector<int> path;
        for (int v = i; v != root; v = parent[v]) path.push_back(v);
        std::uint8_t cum = 0;
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            cum ^= rel[*it];
            parent[*it] = root;
            rel[*it] = cum;
        }
        return {root, path.empty() ? std::uint8_t(0) : rel[i]};
    }
    void unite(int a, int b, std::uint8_t d) {
        // constraint: colour(b) = colour(a) ^ d
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != d) contradiction = true;
            return;
        }
        parent[rb] = ra;
        rel[rb] = static_cast<std::uint8_t>(pa ^ pb ^ d);
    }
};

}  // namespace

OrbitPartition cell_orbits(const GroupSpec& g) {
    const int t = g.torus_side;
    ParityUF uf(t * t);
    for (const Isometry& iso : g.generators) {
        std::uint8_t d = expected_complement(iso) ? 1 : 0;
        for (int y = 0; y < t; ++y)
            for (int x = 0; x < t; ++x) {
                Cell img = map_cell(iso, {x, y});
                int a = y * t + x;
                int b = floor_mod(img.y, t) * t + floor_mod(img.x, t);
                uf.unite(a, b, d);
            }
    }
    OrbitPartition p;
    p.torus_side = t;
    p.contradiction = uf.contradiction;
    p.orbit_id.assign(t * t, -1);
    p.parity.assign(t * t, 0);
    std::map<int, int> root_ids;
    for (int i = 0; i < t * t; ++i) {
        auto [r, par] = uf.find(i);
        p.orbit_id[i] = root_ids.try_emplace(r, static_cast<int>(root_ids.size())).first->second;
        p.parity[i] = par;
    }
    p.orbit_count = static_cast<int>(root_ids.size());
    return p;
}

Design colour_orbits(const GroupSpec& g, const OrbitPartition& p, std::uint64_t mask) {
    Design d(p.torus_side);
    for (int i = 0; i < p.torus_side * p.torus_side; ++i)
        d.cells[i] = static_cast<std::uint8_t>(((mask >> p.orbit_id[i]) & 1) ^ p.parity[i]);
    return d;
}

namespace {

bool in_centre_class(HalfPoint p, HalfPoint base, const Lattice2& L) {
    int ddx = p.dx - base.dx, ddy = p.dy - base.dy;
    return ddx % 2 == 0 && ddy % 2 == 0 && lattice_contains(L, ddx / 2, ddy / 2);
}

bool any_reflection(const Design& d) {
    const int t = d.torus_side;
    for (int fam = 0; fam < 4; ++fam)
        for (int u = 0; u < t; ++u)
            for (int v = 0; v < t; ++v)
                for (int tau = 0; tau < 2; ++tau) {
                    bool comp = fam < 2 ? tau : !tau;
                    bool okay = true;
                    for (int y = 0; y < t && okay; ++y)
                        for (int x = 0; x < t && okay; ++x) {
                            int mx, my;
                            switch (fam) {
                                case 0: mx = u - 1 - x, my = y + v; break;
                                case 1: mx = x + u, my = v - 1 - y; break;
                                case 2: mx = y + u, my = x + v; break;
                                default: mx = u - 1 - y, my = v - 1 - x;
                            }
                            if (d.at(mx, my) != (d.at(x, y) ^ comp)) okay = false;
                        }
                    if (okay) return true;
                }
    return false;
}

}  // namespace

bool matches_group_exactly(const Design& d, const GroupSpec& g) {
    const int t = d.torus_side;
    if (!lattice_contains(g.h_lattice, t, 0) || !lattice_contains(g.h_lattice, 0, t))
        return false;

    for (int vy = 0; vy < t; ++vy)
        for (int vx = 0; vx < t; ++vx) {
            if (vx == 0 && vy == 0) continue;
            bool in_h = lattice_contains(g.h_lattice, vx, vy);
            bool in_g = lattice_contains(g.g_lattice, vx, vy);
            if (is_symmetry(d, translation(vx, vy, false)) != in_h) return false;
            if (is_symmetry(d, translation(vx, vy, true)) != (in_g && !in_h)) return false;
        }

    for (int dy = 0; dy < 2 * t; ++dy)
        for (int dx = 0; dx < 2 * t; ++dx) {
            HalfPoint p{dx, dy};
            if (point_parity(p) != PointParity::EdgeMid) {
                for (int tau = 0; tau < 2; ++tau) {
                    bool expect =
                        ((tau != 0) == g.centre_tau &&
                         in_centre_class(p, g.centre, g.g_lattice)) ||
                        ((tau != 0) == g.corner_tau &&
                         in_centre_class(p, g.corner, g.g_lattice));
                    if (is_symmetry(d, quarter_turn(p, 1, tau != 0)) != expect) return false;
                }
            }
            // Half-turn centres: both quarter classes squared, plus the two
            // midside classes (the second is the first rotated a quarter turn
            // about the unit centre).
            int mx = g.midside.dx - g.centre.dx, my = g.midside.dy - g.centre.dy;
            HalfPoint other{g.centre.dx - my, g.centre.dy + mx};
            for (int tau = 0; tau < 2; ++tau) {
                bool expect =
                    (tau == 0 && (in_centre_class(p, g.centre, g.g_lattice) ||
                                  in_centre_class(p, g.corner, g.g_lattice))) ||
                    ((tau != 0) == g.midside_tau &&
                     (in_centre_class(p, g.midside, g.g_lattice) ||
                      in_centre_class(p, other, g.g_lattice)));
                if (is_symmetry(d, half_turn(p, tau != 0)) != expect) return false;
            }
        }
    return !any_reflection(d);
}

std::string canonical_form(const Design& d, bool include_reflections) {
    const int t = d.torus_side;
    std::string best, cur;
    cur.resize(static_cast<size_t>(t) * (t + 1));
    for (int e = 0; e < (include_reflections ? 2 : 1); ++e)
        for (int r = 0; r < 4; ++r)
            for (int tau = 0; tau < 2; ++tau) {
                bool comp = (r & 1) ? tau == 0 : tau != 0;
                Design base(t);
                for (int y = 0; y < t; ++y)
                    for (int x = 0; x < t; ++x) {
                        int mx = e ? t - 1 - x : x, my = y;
                        for (int i = 0; i < r; ++i) {
                            int nx = -1 - my, ny = mx;
                            mx = nx;
                            my = ny;
                        }
                        base.set(floor_mod(mx, t), floor_mod(my, t),
                                 d.at(x, y) ^ (comp ? 1 : 0));
                    }
                for (int sy = 0; sy < t; ++sy)
                    for (int sx = 0; sx < t; ++sx) {
                        size_t i = 0;
                        for (int row = t - 1; row >= 0; --row) {
                            for (int col = 0; col < t; ++col)
                                cur[i++] = base.at(col + sx, row + sy) ? '1' : '0';
                            cur[i++] = '\n';
                        }
                        if (best.empty() || cur < best) best = cur;
                    }
            }
    return best;
}

FallsApartReport falls_apart(const Design& d) {
    const int t = d.torus_side;
    const int n = 2 * t;
    // Edge v -> u when u lies under v at some crossing: lifting v off the
    // top pulls nothing, but a set may be lifted only if nothing outside it
    // passes over a member, so witnesses are complements of sink components.
    std::vector<std::vector<int>> adj(n);
    for (int x = 0; x < t; ++x)
        for (int y = 0; y < t; ++y) {
            if (d.at(x, y))
                adj[x].push_back(t + y);  // warp over weft
            else
                adj[t + y].push_back(x);  // weft over warp
        }
    // Tarjan strongly connected components, iterative.
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<std::uint8_t> on_stack(n, 0);
    int next_index = 0, comp_count = 0;
    for (int s0 = 0; s0 < n; ++s0) {
        if (index[s0] != -1) continue;
        std::vector<std::pair<int, size_t>> call{{s0, 0}};
        while (!call.empty()) {
            auto& [v, ei] = call.back();
            if (ei == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            if (ei < adj[v].size()) {
                int w = adj[v][ei++];
                if (index[w] == -1)
                    call.emplace_back(w, 0);
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
            } else {
                int vc = v;
                if (low[vc] == index[vc]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = comp_count;
                        if (w == vc) break;
                    }
                    ++comp_count;
                }
                call.pop_back();
                if (!call.empty()) {
                    int parent = call.back().first;
                    low[parent] = std::min(low[parent], low[vc]);
                }
            }
        }
    }
    FallsApartReport rep;
    rep.verdict = comp_count > 1;
    if (!rep.verdict) return rep;
    // A sink component has no edges leaving it; everything else lies atop it.
    std::vector<std::uint8_t> has_out(comp_count, 0);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (comp[v] != comp[w]) has_out[comp[v]] = 1;
    int sink = -1;
    for (int c = 0; c < comp_count && sink == -1; ++c)
        if (!has_out[c]) sink = c;
    for (int v = 0; v < n; ++v)
        if (comp[v] != sink) rep.witness.push_back(v);
    return rep;
}

EnumerationResult enumerate_designs(int order, std::optional<Species> species_filter,
                                    bool include_falling_apart) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    EnumerationResult res;
    OrderDecomposition dec = decompose_order(order);
    if (dec.p > 2) {
        res.notices.push_back("no isonemal designs of order " + std::to_string(order) +
                              ": 2^" + std::to_string(dec.p) + " divides the order");
        return res;
    }
    if (dec.reps.empty()) {
        res.notices.push_back("no isonemal designs of order " + std::to_string(order) + ": " +
                              std::to_string(dec.f) +
                              " is not a sum of two coprime squares");
        return res;
    }
    if (order > max_torus_side()) {
        res.notices.push_back("order " + std::to_string(order) +
                              " exceeds the torus limit " +
                              std::to_string(max_torus_side()));
        return res;
    }

    std::vector<Species> pool;
    for (Species sp : all_species)
        if (species_traits(sp).order_mult == (1 << dec.p)) pool.push_back(sp);
    if (species_filter) {
        if (std::find(pool.begin(), pool.end(), *species_filter) == pool.end()) {
            res.notices.push_back(std::string("species ") + species_name(*species_filter) +
                                  " cannot occur at order " + std::to_string(order));
            return res;
        }
        pool = {*species_filter};
    }

    std::set<std::string> merged, handed;
    for (Species sp : pool)
        for (auto [a, b] : dec.reps) {
            GroupSpec g = build_group(sp, a, b);
            OrbitPartition part = cell_orbits(g);
            if (part.contradiction) {
                res.notices.push_back(std::string("species ") + species_name(sp) +
                                      " admits no colouring at this seed");
                continue;
            }
            if (part.orbit_count > 24)
                throw std::runtime_error("orbit count too large to enumerate");
            for (std::uint64_t mask = 0; mask < (1ULL << part.orbit_count); ++mask) {
                Design d = colour_orbits(g, part, mask);
                Classification c = classify(d);
                if (!c.ok || c.report.species != sp || c.report.m1 != a || c.report.n1 != b)
                    continue;
                FallsApartReport fa = falls_apart(d);
                if (fa.verdict && !include_falling_apart) continue;
                std::string key = canonical_form(d, true);
                if (!merged.insert(key).second) continue;
                handed.insert(canonical_form(d, false));
                Design mirror(d.torus_side);
                for (int y = 0; y < d.torus_side; ++y)
                    for (int x = 0; x < d.torus_side; ++x)
                        mirror.set(x, y, d.at(d.torus_side - 1 - x, y));
                handed.insert(canonical_form(mirror, false));
                res.designs.push_back({d, sp, a, b, fa.verdict});
            }
        }
    res.merged_count = static_cast<int>(res.designs.size());
    res.handed_count = static_cast<int>(handed.size());
    if (res.designs.empty())
        res.notices.push_back("no designs matched at order " + std::to_string(order));
    return res;
}

}  // namespace isoweave
