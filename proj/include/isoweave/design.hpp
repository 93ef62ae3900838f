#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace isoweave {

// Largest accepted torus side; override with ISOWEAVE_MAX_T.
int max_torus_side();

int floor_mod(long long a, int m);

// A doubly periodic binary cell grid on a square torus.  cells[y*T + x] is 1
// when the warp (vertical strand x) passes over the weft (horizontal strand y)
// in cell (x, y); cell (x, y) covers [x, x+1) x [y, y+1).  Rows are stored
// bottom-up: y = 0 is the bottom row.
struct Design {
    int torus_side = 0;
    std::vector<std::uint8_t> cells;
    std::string label;

    Design() = default;
    explicit Design(int t, std::uint8_t fill = 0)
        : torus_side(t), cells(static_cast<size_t>(t) * t, fill) {}

    std::uint8_t at(long long x, long long y) const {
        int t = torus_side;
        return cells[static_cast<size_t>(floor_mod(y, t)) * t + floor_mod(x, t)];
    }
    void set(int x, int y, std::uint8_t v) {
        cells[static_cast<size_t>(y) * torus_side + x] = v;
    }

    bool same_cells(const Design& o) const {
        return torus_side == o.torus_side && cells == o.cells;
    }
    bool operator==(const Design& o) const { return same_cells(o); }
};

Design complement(const Design& d);

// Grid text: header "T=<n>", optional "# key: value" lines, then T rows of
// T characters from {0,1}, top row first (y = T-1).
Design parse_design(const std::string& text);
std::string format_design(const Design& d);
Design load_design(const std::string& path);
void save_design(const Design& d, const std::string& path);

std::uint64_t fnv1a64(const std::string& s);
std::uint64_t design_hash(const Design& d);

}  // namespace isoweave
