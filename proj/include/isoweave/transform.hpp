#pragma once

#include <array>
#include <optional>

#include "isoweave/symmetry.hpp"

namespace isoweave {

// Each cell becomes a 2x2 block: d'(x, y) = d(floor(x/2), floor(y/2)).
Design double_design(const Design& d);

struct DoublabilityReport {
    bool doublable = false;
    std::optional<Species> image;  // species of the doubled design
};

// Doubling preserves isonemality exactly for species 34, 36_1, 36_2, 36s
// and 39; images are 33_4, 35_3, 35_4, 35_4 and 38.
DoublabilityReport check_doublable(Species s);

// Keep every second strand each way: d'(x, y) = d(2x + a, 2y + b).  Even
// torus sides halve; odd sides keep their side (2 is invertible there) and
// the sample is exact, not a resampling.
Design halve_design(const Design& d, int a, int b);

struct HalvingOffset {
    int a = 0, b = 0;
    bool trivial = false;         // halved design is all one colour
    bool contains_36_1 = false;   // a level-1 group with the parent seed acts
    HalfPoint witness_centre{};   // a tau-quarter centre of that group
};

struct HalvingReport {
    bool precondition_ok = false;  // parent is species 36_1, 36s or 39
    Species input_species{};
    int m1 = 0, n1 = 0;
    std::array<HalvingOffset, 4> offsets;
    bool all_pass = false;
};

// For species 36_1, 36s, 39: every halving either is trivial or retains a
// species-36_1 symmetry group with the parent's seed.
HalvingReport check_halving_theorem(const Design& d);

}  // namespace isoweave
