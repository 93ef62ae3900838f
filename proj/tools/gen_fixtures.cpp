// Regenerates the frozen design fixtures.  Run from the repository root:
//   gen_fixtures [fixtures-dir]
// Every fixture is produced by library calls, so a rerun must be byte-identical.
// Catalogue-style names (10-93-1 and so on) are opaque labels.

#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>

#include "isoweave/construct.hpp"
#include "isoweave/design.hpp"
#include "isoweave/symmetry.hpp"
#include "isoweave/transform.hpp"

using namespace isoweave;

namespace {

Design satin(int t, int s) {
    Design d;
    d.torus_side = t;
    d.cells.assign(static_cast<size_t>(t) * t, 0);
    for (int x = 0; x < t; ++x) d.set(x, (s * x) % t, 1);
    return d;
}

bool is_satin(const Design& d) {
    for (int y = 0; y < d.torus_side; ++y) {
        int w = 0;
        for (int x = 0; x < d.torus_side; ++x) w += d.at(x, y);
        if (w != 1) return false;
    }
    return true;
}

// Each row a shift of the one below it.
bool is_twillin(const Design& d) {
    const int t = d.torus_side;
    for (int s = 0; s < t; ++s) {
        bool ok = true;
        for (int y = 0; y + 1 < t && ok; ++y)
            for (int x = 0; x < t && ok; ++x)
                if (d.at(x + s, y) != d.at(x, y + 1)) ok = false;
        if (ok) return true;
    }
    return false;
}

struct Writer {
    std::string dir;
    int failures = 0;

    void put(const std::string& name, Design d, Species expect) {
        d.label = name;
        Classification c = classify(d);
        if (!c.ok || c.report.species != expect) {
            std::fprintf(stderr, "FIXTURE %s: expected %s, got %s\n", name.c_str(),
                         species_name(expect),
                         c.ok ? species_name(c.report.species) : c.detail.c_str());
            ++failures;
            return;
        }
        save_design(d, dir + "/" + name + ".txt");
        std::printf("wrote %-24s %s order %d\n", (name + ".txt").c_str(),
                    species_name(expect), c.report.order);
    }

    void put_raw(const std::string& name, Design d, const char* note) {
        d.label = name;
        save_design(d, dir + "/" + name + ".txt");
        std::printf("wrote %-24s %s\n", (name + ".txt").c_str(), note);
    }
};

Design pick(int order, Species sp, bool want_falling, int skip = 0) {
    EnumerationResult res = enumerate_designs(order, sp, want_falling);
    for (const auto& e : res.designs) {
        if (e.falls_apart != want_falling) continue;
        if (skip-- > 0) continue;
        return e.design;
    }
    throw std::runtime_error("no matching design in enumeration");
}

// The one falling-apart design of order 4 with quarter turns and no
// reflections: the simple houndstooth.
Design houndstooth() {
    std::map<std::string, Design> classes;
    for (int mask = 0; mask < (1 << 16); ++mask) {
        Design d;
        d.torus_side = 4;
        d.cells.assign(16, 0);
        for (int i = 0; i < 16; ++i) d.cells[i] = static_cast<uint8_t>((mask >> i) & 1);
        int ones = __builtin_popcount(static_cast<unsigned>(mask));
        if (ones == 0 || ones == 16) continue;
        if (is_symmetry(d, translation(1, 0)) || is_symmetry(d, translation(0, 1)) ||
            is_symmetry(d, translation(2, 0)) || is_symmetry(d, translation(0, 2)))
            continue;
        SymmetrySurvey s = survey(d);
        if (s.quarter_centres.empty() || s.has_reflection_or_glide) continue;
        if (!falls_apart(d).verdict) continue;
        classes.emplace(canonical_form(d, true), d);
    }
    if (classes.size() != 1)
        throw std::runtime_error("expected exactly one order-4 rotational split design");
    return classes.begin()->second;
}

}  // namespace

int main(int argc, char** argv) {
    Writer w{argc > 1 ? argv[1] : "fixtures"};

    // Plain weave: the exceptional fully reflective design, kept for reject tests.
    // Its double is the box weave, also reflective; kept for the halving round trip.
    {
        Design plain;
        plain.torus_side = 2;
        plain.cells = {0, 1, 1, 0};
        w.put_raw("plain", plain, "(exceptional)");
        w.put_raw("box-weave", double_design(plain), "(reflective)");
    }

    w.put("5-1-1", satin(5, 3), Species::S36_1);
    w.put("10-85-1", satin(10, 3), Species::S36_s);

    // First order-13 twillin that is not a satin.
    {
        EnumerationResult res = enumerate_designs(13, Species::S36_1, false);
        bool found = false;
        for (const auto& e : res.designs)
            if (!is_satin(e.design) && is_twillin(e.design) && !found) {
                w.put("13-45-1", e.design, Species::S36_1);
                found = true;
            }
        if (!found) {
            std::fprintf(stderr, "FIXTURE 13-45-1: no non-satin twillin found\n");
            ++w.failures;
        }
    }

    w.put("10-93-1", pick(10, Species::S39, false), Species::S39);
    w.put("10-107-1", pick(10, Species::S34, false), Species::S34);
    w.put("10-27-1", pick(10, Species::S36_2, false), Species::S36_2);
    w.put("10-39-1", pick(10, Species::S35_3, false), Species::S35_3);
    w.put("10-55-2", pick(10, Species::S33_3, false), Species::S33_3);

    w.put("20-19437", pick(20, Species::S38, false), Species::S38);
    w.put("order20-33_4", pick(20, Species::S33_4, false), Species::S33_4);
    w.put("20-3391", pick(20, Species::S37, false), Species::S37);
    w.put("order20-37-falling", pick(20, Species::S37, true), Species::S37);

    w.put("10-85-1-doubled", double_design(satin(10, 3)), Species::S35_4);

    {
        Design h = houndstooth();
        if (!falls_apart(h).verdict) {
            std::fprintf(stderr, "FIXTURE 4-1-2: does not fall apart\n");
            ++w.failures;
        } else {
            w.put_raw("4-1-2", h, "(falls apart)");
        }
    }

    if (w.failures) {
        std::fprintf(stderr, "%d fixture(s) failed\n", w.failures);
        return 1;
    }
    return 0;
}
