#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "isoweave/symmetry.hpp"

namespace isoweave {

struct NetSquare {
    int fx = 0, fy = 0;  // offset of the square in net frame units
    // Cube corners reached by folding: images of the frame points
    // (fx, fy), (fx+1, fy), (fx+1, fy+1), (fx, fy+1), in cube coordinates.
    std::array<std::array<int, 3>, 4> fold_corners{};
};

struct CubeGluing {
    int square_a = 0, edge_a = 0;  // edges: 0 bottom, 1 right, 2 top, 3 left
    int square_b = 0, edge_b = 0;
    PlanarMap design_map;          // plane map carrying side a onto side b
    bool swaps_direction = false;  // odd rotation part exchanges warp/weft
};

// A cross-shaped net of six face squares cut from the design plane.  Faces
// are the translates of the square on corner_base with side v by
// fx*v + fy*w, w = rot90(v).  face_flip complements the colours shown on a
// face (used to probe corrupted nets; all zero for a proper net).
struct CubeNet {
    Design design;
    Species species{};
    HalfPoint corner_base{};
    int vx = 0, vy = 0;
    std::array<NetSquare, 6> squares{};
    std::vector<CubeGluing> gluings;
    std::array<std::uint8_t, 6> face_flip{};
};

struct CubeWeavability {
    bool verdict = false;
    std::string reason;
};

// A species yields an isonemal woven cube exactly when its plain quarter
// centres sit at cell corners: face corners must be fixed by the even
// (vertex) rotations of the cube, which cannot carry tau.
CubeWeavability cube_weavable(const SpeciesReport& r);

// Cross net of six squares on plain quarter centres, side the shortest
// full-lattice translation; requires a weavable species.
CubeNet cube_net(const Design& d);

struct CubeVerification {
    bool ok = false;
    bool gluings_consistent = false;    // seams match crossing for crossing
    bool rotations_consistent = false;  // all 24 cube rotations act on the weave
    bool transitive = false;            // one strand orbit under rotations
    bool adjacent_swaps_ok = false;     // neighbour strands exchanged by some rotation
    int strand_count = 0;
    std::string detail;
};

CubeVerification verify_cube_isonemal(const CubeNet& net);

}  // namespace isoweave
