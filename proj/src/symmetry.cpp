#include "isoweave/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace isoweave {

const char* species_name(Species s) {
    switch (s) {
        case Species::S33_3: return "33_3";
        case Species::S33_4: return "33_4";
        case Species::S34: return "34";
        case Species::S35_3: return "35_3";
        case Species::S35_4: return "35_4";
        case Species::S36_1: return "36_1";
        case Species::S36_2: return "36_2";
        case Species::S36_s: return "36s";
        case Species::S37: return "37";
        case Species::S38: return "38";
        case Species::S39: return "39";
    }
    return "?";
}

std::optional<Species> species_from_name(std::string_view name) {
    for (Species s : all_species)
        if (name == species_name(s)) return s;
    return std::nullopt;
}

const SpeciesTraits& species_traits(Species s) {
    static const std::map<Species, SpeciesTraits> table = {
        //                 gl hl mult  unit centre              ctau  ktau  p4     h=g
        {Species::S36_1, {1, 1, 1, CentreSort::CellCentre, true, true, false, false}},
        {Species::S39,   {1, 2, 2, CentreSort::CellCentre, true, false, true, false}},
        {Species::S34,   {2, 2, 2, CentreSort::CellCorner, false, false, true, true}},
        {Species::S36_2, {2, 2, 2, CentreSort::CellCorner, true, true, false, false}},
        {Species::S36_s, {2, 2, 2, CentreSort::CellCentre, true, true, false, false}},
        {Species::S33_3, {3, 3, 2, CentreSort::CellCorner, false, false, true, true}},
        {Species::S35_3, {3, 3, 2, CentreSort::CellCorner, true, true, false, false}},
        {Species::S38,   {3, 4, 4, CentreSort::CellCorner, false, true, true, false}},
        {Species::S33_4, {4, 4, 4, CentreSort::CellCorner, false, false, true, true}},
        {Species::S35_4, {4, 4, 4, CentreSort::CellCorner, true, true, false, false}},
        {Species::S37,   {4, 5, 4, CentreSort::CellCorner, false, true, true, false}},
    };
    return table.at(s);
}

const char* reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::Reflective: return "reflective";
        case RejectReason::Exceptional: return "exceptional";
        case RejectReason::NoQuarterTurn: return "no-quarter-turn";
        case RejectReason::Inconsistent: return "inconsistent";
    }
    return "?";
}

namespace {

// Indirect cell maps: mirrors about vertical/horizontal lines and the two
// diagonal directions, composed with all torus glides.
bool any_reflection_or_glide(const Design& d) {
    const int t = d.torus_side;
    for (int fam = 0; fam < 4; ++fam)
        for (int u = 0; u < t; ++u)
            for (int v = 0; v < t; ++v)
                for (int tau = 0; tau < 2; ++tau) {
                    // Families V and H keep strand direction, D and A swap it.
                    bool comp = fam < 2 ? tau : !tau;
                    bool okay = true;
                    for (int y = 0; y < t && okay; ++y)
                        for (int x = 0; x < t && okay; ++x) {
                            int mx, my;
                            switch (fam) {
                                case 0: mx = u - 1 - x, my = y + v; break;   // V
                                case 1: mx = x + u, my = v - 1 - y; break;   // H
                                case 2: mx = y + u, my = x + v; break;       // D
                                default: mx = u - 1 - y, my = v - 1 - x;     // A
                            }
                            if (d.at(mx, my) != (d.at(x, y) ^ comp)) okay = false;
                        }
                    if (okay) return true;
                }
    return false;
}

std::vector<MarkedCentre> dedup_mod_lattice(std::vector<MarkedCentre> cs,
                                            const Lattice2& L, int t) {
    // Reduce each centre to the least equivalent position modulo 2L on the
    // doubled torus, then unique.
    std::set<std::pair<std::pair<int, int>, bool>> seen;
    std::vector<MarkedCentre> out;
    for (auto& mc : cs) {
        std::pair<int, int> best{mc.p.dx, mc.p.dy};
        // Orbit of the centre under doubled lattice translations mod 2t.
        std::set<std::pair<int, int>> orbit{best};
        std::vector<std::pair<int, int>> stack{best};
        while (!stack.empty()) {
            auto [cx, cy] = stack.back();
            stack.pop_back();
            const std::pair<long long, long long> gens[4] = {
                {L.v1, L.v2}, {-L.v1, -L.v2}, {L.w1, L.w2}, {-L.w1, -L.w2}};
            for (auto [gx, gy] : gens) {
                std::pair<int, int> nxt{floor_mod(cx + 2 * gx, 2 * t),
                                        floor_mod(cy + 2 * gy, 2 * t)};
                if (orbit.insert(nxt).second) stack.push_back(nxt);
            }
        }
        best = *orbit.begin();
        if (seen.insert({best, mc.tau}).second)
            out.push_back({{best.first, best.second}, mc.tau});
    }
    std::sort(out.begin(), out.end(), [](const MarkedCentre& a, const MarkedCentre& b) {
        return std::tie(a.p.dx, a.p.dy, a.tau) < std::tie(b.p.dx, b.p.dy, b.tau);
    });
    return out;
}

}  // namespace

SymmetrySurvey survey(const Design& d) {
    const int t = d.torus_side;
    if (t < 1) throw std::invalid_argument("empty design");
    if (t > max_torus_side())
        throw std::runtime_error("torus side exceeds ISOWEAVE_MAX_T");
    SymmetrySurvey s;
    s.torus_side = t;

    std::vector<std::pair<long long, long long>> plain{{t, 0}, {0, t}};
    std::vector<std::pair<long long, long long>> full{{t, 0}, {0, t}};
    bool tau_translation = false;
    for (int vy = 0; vy < t; ++vy)
        for (int vx = 0; vx < t; ++vx) {
            if (vx == 0 && vy == 0) continue;
            if (is_symmetry(d, translation(vx, vy, false))) {
                plain.emplace_back(vx, vy);
                full.emplace_back(vx, vy);
            } else if (is_symmetry(d, translation(vx, vy, true))) {
                tau_translation = true;
                full.emplace_back(vx, vy);
            }
        }
    s.translations = lattice_from_vectors(plain);
    s.full_translations = lattice_from_vectors(full);
    s.has_tau_translations = tau_translation;

    std::vector<MarkedCentre> quarters, halves;
    for (int dy = 0; dy < 2 * t; ++dy)
        for (int dx = 0; dx < 2 * t; ++dx) {
            HalfPoint p{dx, dy};
            bool mixed = point_parity(p) == PointParity::EdgeMid;
            for (int tau = 0; tau < 2; ++tau) {
                if (!mixed && is_symmetry(d, quarter_turn(p, 1, tau != 0)))
                    quarters.push_back({p, tau != 0});
                if (is_symmetry(d, half_turn(p, tau != 0)))
                    halves.push_back({p, tau != 0});
            }
        }
    s.quarter_centres = dedup_mod_lattice(std::move(quarters), s.translations, t);
    s.half_centres = dedup_mod_lattice(std::move(halves), s.translations, t);
    s.has_reflection_or_glide = any_reflection_or_glide(d);
    return s;
}

namespace {

Classification rejection(RejectReason r, std::string detail) {
    Classification c;
    c.ok = false;
    c.reason = r;
    c.detail = std::move(detail);
    return c;
}

}  // namespace

Classification classify(const Design& d, const SymmetrySurvey& s) {
    const bool quarters = !s.quarter_centres.empty();
    if (s.has_reflection_or_glide && quarters)
        return rejection(RejectReason::Exceptional,
                         "reflection or glide axes together with quarter turns");
    if (s.has_reflection_or_glide)
        return rejection(RejectReason::Reflective, "reflection or glide axes, no quarter turns");
    if (!quarters)
        return rejection(RejectReason::NoQuarterTurn, "no quarter-turn symmetry");

    // The full translation lattice of a quarter-turn design must be square.
    Lattice2 red = gauss_reduce(s.full_translations);
    long long a = red.v1, b = red.v2;
    if (a * a + b * b != s.full_translations.det() ||
        !lattice_contains(s.full_translations, -b, a))
        return rejection(RejectReason::Inconsistent, "translation lattice is not square");

    SquareClassification sq =
        classify_square(static_cast<int>(a), static_cast<int>(b), CentreSort::CellCorner);
    if (!sq.ok)
        return rejection(RejectReason::Inconsistent,
                         "translation lattice " + sq.reject_reason);
    if (!sq.isonemal_capable)
        return rejection(RejectReason::Inconsistent,
                         "translation lattice " + sq.incapable_reason);

    // Quarter centres fall in two classes modulo the full lattice.
    std::vector<std::vector<MarkedCentre>> classes;
    for (const auto& mc : s.quarter_centres) {
        bool placed = false;
        for (auto& cl : classes) {
            int ddx = mc.p.dx - cl.front().p.dx, ddy = mc.p.dy - cl.front().p.dy;
            if (ddx % 2 == 0 && ddy % 2 == 0 &&
                lattice_contains(s.full_translations, ddx / 2, ddy / 2)) {
                cl.push_back(mc);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({mc});
    }
    if (classes.size() != 2)
        return rejection(RejectReason::Inconsistent,
                         "expected two quarter-turn centre classes, found " +
                             std::to_string(classes.size()));
    for (const auto& cl : classes)
        for (const auto& mc : cl)
            if (mc.tau != cl.front().tau ||
                point_parity(mc.p) != point_parity(cl.front().p))
                return rejection(RejectReason::Inconsistent,
                                 "incoherent flags within a quarter-turn centre class");

    PointParity par0 = point_parity(classes[0].front().p);
    PointParity par1 = point_parity(classes[1].front().p);
    bool tau0 = classes[0].front().tau, tau1 = classes[1].front().tau;
    const int level = sq.unit.level;

    std::optional<Species> species;
    if (level == 1) {
        if (par0 == par1)
            return rejection(RejectReason::Inconsistent,
                             "level-1 lattice with same-parity centre classes");
        // Put the cell-centre class first.
        if (par0 != PointParity::Centre) {
            std::swap(par0, par1);
            std::swap(tau0, tau1);
        }
        if (!tau0)
            return rejection(RejectReason::Inconsistent, "plain quarter turn on a cell centre");
        species = tau1 ? Species::S36_1 : Species::S39;
    } else {
        if (par0 != par1)
            return rejection(RejectReason::Inconsistent,
                             "mixed-parity centre classes above level 1");
        bool on_centres = par0 == PointParity::Centre;
        if (on_centres && !(tau0 && tau1))
            return rejection(RejectReason::Inconsistent, "plain quarter turn on a cell centre");
        switch (level) {
            case 2:
                if (on_centres)
                    species = Species::S36_s;
                else if (tau0 && tau1)
                    species = Species::S36_2;
                else if (!tau0 && !tau1)
                    species = Species::S34;
                break;
            case 3:
                if (tau0 && tau1)
                    species = Species::S35_3;
                else if (!tau0 && !tau1)
                    species = Species::S33_3;
                else
                    species = Species::S38;
                break;
            case 4:
                if (tau0 && tau1)
                    species = Species::S35_4;
                else if (!tau0 && !tau1)
                    species = Species::S33_4;
                else
                    species = Species::S37;
                break;
            default:
                break;
        }
    }
    if (!species)
        return rejection(RejectReason::Inconsistent,
                         "no species matches level " + std::to_string(level) +
                             " with this quarter-turn placement");

    const SpeciesTraits& tr = species_traits(*species);
    if (tr.g_level != level)
        return rejection(RejectReason::Inconsistent, "species level mismatch");

    long long seed_area = 1LL * sq.m1 * sq.m1 + 1LL * sq.n1 * sq.n1;
    long long order = tr.order_mult * seed_area;
    long long period = (1LL << (tr.h_level - 1)) * seed_area;

    // The plain sublattice must realise the H1 level.
    if (s.translations.det() != period)
        return rejection(RejectReason::Inconsistent,
                         "plain translation lattice has the wrong covolume");
    if (!sublattice_of(s.translations, s.full_translations))
        return rejection(RejectReason::Inconsistent, "translation lattices disagree");
    if (s.has_tau_translations != (tr.h_level > tr.g_level))
        return rejection(RejectReason::Inconsistent,
                         "tau translations disagree with the species");
    if (smallest_axis_period(s.translations, false) != order ||
        smallest_axis_period(s.translations, true) != order)
        return rejection(RejectReason::Inconsistent,
                         "axis period of the plain lattice is not the order");
    if ((1LL * s.torus_side * s.torus_side) % period != 0)
        return rejection(RejectReason::Inconsistent,
                         "torus area is not a multiple of the repeat");

    Classification out;
    out.ok = true;
    out.report.species = *species;
    out.report.g1_unit = sq.unit;
    out.report.g1_unit.centre_sort = tr.unit_centre;
    out.report.h1_unit = out.report.g1_unit;
    for (int l = tr.g_level; l < tr.h_level; ++l)
        out.report.h1_unit = escribe(out.report.h1_unit);
    out.report.m1 = sq.m1;
    out.report.n1 = sq.n1;
    out.report.h1_is_p4 = tr.h1_is_p4;
    out.report.h1_equals_g1 = tr.h1_equals_g1;
    out.report.order = static_cast<int>(order);
    out.report.period = static_cast<int>(period);
    out.report.reflected = sq.reflected;
    return out;
}

Classification classify(const Design& d) { return classify(d, survey(d)); }

const char* strand_symmetry_name(StrandSymmetry s) {
    switch (s) {
        case StrandSymmetry::Trivial: return "trivial";
        case StrandSymmetry::HalfTurn: return "half_turn";
        case StrandSymmetry::Tau11_11: return "11/11";
        case StrandSymmetry::Tau12_12: return "12/12";
    }
    return "?";
}

StrandSymmetry strand_symmetry(const Design& d, const SpeciesReport& r) {
    SymmetrySurvey s = survey(d);
    bool tau_half_in_strand = false, plain_half_in_strand = false;
    for (const auto& mc : s.half_centres) {
        bool in_strand = (mc.p.dx & 1) || (mc.p.dy & 1);
        bool on_mid = ((mc.p.dx & 1) != (mc.p.dy & 1));
        if (mc.tau && on_mid) tau_half_in_strand = true;
        if (!mc.tau && in_strand) plain_half_in_strand = true;
    }
    if (tau_half_in_strand) return StrandSymmetry::Tau12_12;
    if (r.order % 2 == 0 &&
        (is_symmetry(d, translation(0, r.order / 2, true)) ||
         is_symmetry(d, translation(r.order / 2, 0, true))))
        return StrandSymmetry::Tau11_11;
    if (plain_half_in_strand) return StrandSymmetry::HalfTurn;
    return StrandSymmetry::Trivial;
}

}  // namespace isoweave
