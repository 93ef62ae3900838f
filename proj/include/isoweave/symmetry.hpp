#pragma once

#include <optional>
#include <string_view>

#include "isoweave/design.hpp"
#include "isoweave/isometry.hpp"
#include "isoweave/lattice.hpp"

namespace isoweave {

// Refined species of the rotational symmetry groups pairs (G1, H1) with
// quarter turns and no axes.  Suffix is the level of the H1 translation
// lattice; 36s is the even-satin branch of 36 (level-2 unit centred on a
// cell centre).
enum class Species {
    S33_3, S33_4, S34, S35_3, S35_4, S36_1, S36_2, S36_s, S37, S38, S39
};

const char* species_name(Species s);
std::optional<Species> species_from_name(std::string_view name);

// Structural constants of a species.  Levels refer to the escription chain
// of the seed's level-1 unit; order = order_mult * (m1^2 + n1^2).  The two
// quarter-turn centre classes sit at the unit centre and unit corners, with
// tau flags as given (tau quarter turns keep colour, plain ones complement).
struct SpeciesTraits {
    int g_level = 1, h_level = 1;
    int order_mult = 1;
    CentreSort unit_centre = CentreSort::CellCorner;
    bool centre_tau = false, corner_tau = false;
    bool h1_is_p4 = false, h1_equals_g1 = false;
};
const SpeciesTraits& species_traits(Species s);

constexpr Species all_species[] = {
    Species::S36_1, Species::S39,   Species::S34,   Species::S36_2,
    Species::S36_s, Species::S33_3, Species::S35_3, Species::S38,
    Species::S33_4, Species::S35_4, Species::S37};

struct MarkedCentre {
    HalfPoint p;
    bool tau = false;
    bool operator==(const MarkedCentre&) const = default;
};

// Full symmetry inventory of a design on its torus.  Rotation centres are
// reduced modulo the plain translation lattice and listed with their tau
// flag; centres lie in [0, 2T) x [0, 2T) doubled coordinates, sorted.
struct SymmetrySurvey {
    int torus_side = 0;
    Lattice2 translations;        // plain (no tau) translation lattice
    bool has_tau_translations = false;
    Lattice2 full_translations;   // plain plus tau translations
    std::vector<MarkedCentre> quarter_centres;
    std::vector<MarkedCentre> half_centres;
    bool has_reflection_or_glide = false;
};

SymmetrySurvey survey(const Design& d);

enum class RejectReason { Reflective, Exceptional, NoQuarterTurn, Inconsistent };
const char* reject_reason_name(RejectReason r);

struct SpeciesReport {
    Species species{};
    LatticeUnit g1_unit;   // unit of the full-group translation lattice
    LatticeUnit h1_unit;   // unit of the plain-subgroup translation lattice
    int m1 = 0, n1 = 0;    // level-1 legs (the seed)
    bool h1_is_p4 = false;     // H1 keeps quarter turns (else p2)
    bool h1_equals_g1 = false; // no tau in the group at all
    int order = 0;             // strands of each direction per repeat
    int period = 0;            // cells per H1 unit
    bool reflected = false;    // left-handed
};

struct Classification {
    bool ok = false;
    SpeciesReport report;
    RejectReason reason{};
    std::string detail;
};

Classification classify(const Design& d);
Classification classify(const Design& d, const SymmetrySurvey& s);

// Symmetry of a single strand's crossing sequence induced by the design's
// group: trivial, half turns in the strand, tau-translation half a period
// along the strand (11/11), or tau-half-turns in the strand (12/12).
enum class StrandSymmetry { Trivial, HalfTurn, Tau11_11, Tau12_12 };
const char* strand_symmetry_name(StrandSymmetry s);
StrandSymmetry strand_symmetry(const Design& d, const SpeciesReport& r);

}  // namespace isoweave
