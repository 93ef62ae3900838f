#pragma once

#include "isoweave/design.hpp"

namespace isoweave {

// Point of the grid plane in doubled coordinates: (dx, dy) is the point
// (dx/2, dy/2).  Cell corners are even/even, cell centres odd/odd, edge
// midpoints mixed parity.
struct HalfPoint {
    int dx = 0;
    int dy = 0;
    bool operator==(const HalfPoint&) const = default;
};

enum class PointParity { Corner, Centre, EdgeMid };
PointParity point_parity(HalfPoint p);

struct Cell {
    int x = 0;
    int y = 0;
    bool operator==(const Cell&) const = default;
};

enum class IsoKind { Translation, QuarterTurn, HalfTurn };

// Direct plane isometry mapping the cell grid to itself, optionally composed
// with the side interchange tau (lift everything, flip the fabric rule).
struct Isometry {
    IsoKind kind = IsoKind::Translation;
    int vx = 0, vy = 0;        // Translation
    HalfPoint centre{};        // QuarterTurn / HalfTurn
    int direction = 1;         // QuarterTurn: +1 anticlockwise, -1 clockwise
    bool tau = false;
};

Isometry translation(int vx, int vy, bool tau = false);
Isometry quarter_turn(HalfPoint centre, int direction, bool tau);
Isometry half_turn(HalfPoint centre, bool tau);

// Image of a cell under the point map (no torus reduction).  Quarter turns
// require a corner or centre pivot; an edge midpoint pivot is rejected.
Cell map_cell(const Isometry& iso, Cell c);

// Whether the isometry, as a candidate symmetry, must exchange dark and
// pale: quarter turns swap warp and weft roles, so the image cell shows the
// other colour unless tau flips it back; translations and half turns keep
// strand roles, so they exchange colours exactly when tau is present.
bool expected_complement(const Isometry& iso);

bool is_symmetry(const Design& d, const Isometry& iso);
Design transform_design(const Design& d, const Isometry& iso);

// General direct isometry p -> R^r p + t in doubled coordinates.
struct PlanarMap {
    int r = 0;           // quarter turns anticlockwise, 0..3
    int tx = 0, ty = 0;  // doubled translation, even components
    bool operator==(const PlanarMap&) const = default;
};

HalfPoint map_point(const PlanarMap& m, HalfPoint p);
Cell map_cell(const PlanarMap& m, Cell c);
PlanarMap compose(const PlanarMap& a, const PlanarMap& b);  // a after b
PlanarMap planar_inverse(const PlanarMap& m);
PlanarMap planar_from(const Isometry& iso);
bool planar_expected_complement(const PlanarMap& m, bool tau);
bool is_symmetry(const Design& d, const PlanarMap& m, bool tau);

}  // namespace isoweave
