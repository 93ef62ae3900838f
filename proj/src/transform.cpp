#include "isoweave/transform.hpp"

#include <stdexcept>

namespace isoweave {

Design double_design(const Design& d) {
    const int t = d.torus_side;
    if (2 * t > max_torus_side())
        throw std::runtime_error("doubled torus side exceeds ISOWEAVE_MAX_T");
    Design out(2 * t);
    for (int y = 0; y < 2 * t; ++y)
        for (int x = 0; x < 2 * t; ++x) out.set(x, y, d.at(x / 2, y / 2));
    return out;
}

DoublabilityReport check_doublable(Species s) {
    DoublabilityReport rep;
    switch (s) {
        case Species::S34: rep.image = Species::S33_4; break;
        case Species::S36_1: rep.image = Species::S35_3; break;
        case Species::S36_2: rep.image = Species::S35_4; break;
        case Species::S36_s: rep.image = Species::S35_4; break;
        case Species::S39: rep.image = Species::S38; break;
        default: break;
    }
    rep.doublable = rep.image.has_value();
    return rep;
}

Design halve_design(const Design& d, int a, int b) {
    const int t = d.torus_side;
    if (a < 0 || a > 1 || b < 0 || b > 1)
        throw std::invalid_argument("halving offsets must be 0 or 1");
    const int t2 = t % 2 == 0 ? t / 2 : t;
    Design out(t2);
    for (int y = 0; y < t2; ++y)
        for (int x = 0; x < t2; ++x) out.set(x, y, d.at(2 * x + a, 2 * y + b));
    return out;
}

HalvingReport check_halving_theorem(const Design& d) {
    Classification c = classify(d);
    HalvingReport rep;
    if (!c.ok) return rep;
    rep.input_species = c.report.species;
    rep.m1 = c.report.m1;
    rep.n1 = c.report.n1;
    if (c.report.species != Species::S36_1 && c.report.species != Species::S36_s &&
        c.report.species != Species::S39)
        return rep;
    rep.precondition_ok = true;

    const int m = rep.m1, n = rep.n1;
    bool all = true;
    int i = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            HalvingOffset& off = rep.offsets[i++];
            off.a = a;
            off.b = b;
            Design h = halve_design(d, a, b);
            off.trivial = true;
            for (auto v : h.cells)
                if (v != h.cells[0]) {
                    off.trivial = false;
                    break;
                }
            if (off.trivial) continue;
            // Search a cell centre carrying a level-1 tau-quarter group with
            // the parent's seed.
            const int t2 = h.torus_side;
            bool found = false;
            if (is_symmetry(h, translation(m, n, false)) &&
                is_symmetry(h, translation(-n, m, false))) {
                for (int dy = 1; dy < 2 * t2 && !found; dy += 2)
                    for (int dx = 1; dx < 2 * t2 && !found; dx += 2) {
                        HalfPoint centre{dx, dy};
                        if (!is_symmetry(h, quarter_turn(centre, 1, true))) continue;
                        HalfPoint corner{dx + m - n, dy + m + n};
                        if (!is_symmetry(h, quarter_turn(corner, 1, true))) continue;
                        off.contains_36_1 = true;
                        off.witness_centre = centre;
                        found = true;
                    }
            }
            if (!found) all = false;
        }
    rep.all_pass = all;
    return rep;
}

}  // namespace isoweave
