#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoweave/symmetry.hpp"

namespace isoweave {

// Concrete placement of a species' symmetry group for a level-1 seed
// (m1, n1): translation lattices, the two quarter-turn centres of the H1
// unit (centre and corner) with their tau flags, and a generating set.
struct GroupSpec {
    Species species{};
    int m1 = 0, n1 = 0;
    int g_level = 0, h_level = 0;
    Lattice2 g_lattice;         // full translation lattice
    Lattice2 h_lattice;         // plain translations
    bool has_tau_translations = false;
    int torus_side = 0;         // smallest torus carrying the group
    HalfPoint centre{};         // quarter centre at the G1 unit centre
    bool centre_tau = false;
    HalfPoint corner{};         // quarter centre at the G1 unit corner
    bool corner_tau = false;
    HalfPoint midside{};        // half-turn centre between the two
    bool midside_tau = false;
    std::vector<Isometry> generators;
};

GroupSpec build_group(Species sp, int m1, int n1);

// Orbits of the torus cells under the group, with the colour parity each
// cell takes relative to its orbit root.  contradiction is set when some
// group element forces a cell to disagree with itself (colouring impossible).
struct OrbitPartition {
    int torus_side = 0;
    int orbit_count = 0;
    bool contradiction = false;
    std::vector<int> orbit_id;
    std::vector<std::uint8_t> parity;
};

OrbitPartition cell_orbits(const GroupSpec& g);

Design colour_orbits(const GroupSpec& g, const OrbitPartition& p, std::uint64_t mask);

// Does the design's symmetry inventory match the group exactly (no extra
// translations, rotations, or any reflection)?  Independent of classify().
bool matches_group_exactly(const Design& d, const GroupSpec& g);

// Lexicographically least grid text over all torus translations, rotations,
// tau, and optionally reflections, of the design.
std::string canonical_form(const Design& d, bool include_reflections);

// Strand separation: the design falls apart when the warp/weft crossing
// order admits a proper set of strands lying wholly atop the rest.  Strand
// ids: 0..T-1 warps, T..2T-1 wefts.  witness is such a top set when the
// verdict is true.
struct FallsApartReport {
    bool verdict = false;
    std::vector<int> witness;
};

FallsApartReport falls_apart(const Design& d);

struct EnumeratedDesign {
    Design design;
    Species species{};
    int m1 = 0, n1 = 0;
    bool falls_apart = false;
};

struct EnumerationResult {
    std::vector<EnumeratedDesign> designs;  // one per merged class
    int handed_count = 0;   // classes counted without reflections
    int merged_count = 0;   // classes counted with reflections
    std::vector<std::string> notices;
};

// All isonemal designs of the given order whose symmetry group has quarter
// turns, one representative per equivalence class, deterministic order.
// Designs that fall apart are excluded unless requested.
EnumerationResult enumerate_designs(int order,
                                    std::optional<Species> species_filter,
                                    bool include_falling_apart);

}  // namespace isoweave
