#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isoweave {

// Which sort of point sits at the centre of a lattice unit.
enum class CentreSort { CellCorner, CellCentre };
CentreSort opposite(CentreSort s);

// Square lattice unit with legs M > N >= 1 at escription level 1..5.
// Level k+1 is escribed about level k: concentric, rotated an eighth turn,
// doubled in area, so centre_sort never changes along a chain.
struct LatticeUnit {
    int M = 0, N = 0;
    int level = 1;
    CentreSort centre_sort = CentreSort::CellCorner;
    long long area() const { return 1LL * M * M + 1LL * N * N; }
};

struct Level1Entry {
    int M, N, area;
};

// All level-1 legs M > N >= 1, M, N of opposite parity, gcd 1, with
// M^2 + N^2 <= max_area, ordered by (area, M).
std::vector<Level1Entry> level1_units_up_to(int max_area);

struct SquareClassification {
    bool ok = false;
    std::string reject_reason;   // set when !ok (forbidden line, zero vector)
    LatticeUnit unit;
    int m1 = 0, n1 = 0;          // level-1 legs under the escription chain
    bool reflected = false;      // true when the input square is left-handed
    bool isonemal_capable = false;
    std::string incapable_reason;
};

// Classify the square spanned by side vector (a, b) whose corners lie on
// points of the given sort.  Sides on forbidden lines (axis-parallel or
// diagonal) are rejected.
SquareClassification classify_square(int a, int b, CentreSort corner_sort);

// Side vector of a unit drawn right-handed (or left-handed when reflected):
// odd levels lead with the long leg, even levels with the short one.
std::pair<int, int> unit_side_vector(const LatticeUnit& u, bool reflected);

// The next level up; rejects level-5 input.
LatticeUnit escribe(const LatticeUnit& u);

// (m, n) with m*M + n*N == 1, or nothing when gcd(M, N) != 1.
std::optional<std::pair<long long, long long>> coprime_witness(long long M, long long N);

// Order n = f * 2^p with f odd; designs of order n exist exactly when f is a
// sum of two coprime squares and p <= 2.  reps lists (a, b), a > b >= 1,
// a^2 + b^2 = f, gcd(a, b) = 1, in decreasing a.
struct OrderDecomposition {
    int n = 0, f = 0, p = 0;
    std::vector<std::pair<int, int>> reps;
    bool feasible() const { return p <= 2 && !reps.empty(); }
};
OrderDecomposition decompose_order(int n);

// Full-rank planar integer lattice given by a basis (in cell units).
struct Lattice2 {
    long long v1 = 0, v2 = 0;  // first basis vector (v1, v2)
    long long w1 = 0, w2 = 0;  // second basis vector (w1, w2)
    long long det() const;     // covolume, >= 0 after normalisation
};

Lattice2 make_lattice(long long v1, long long v2, long long w1, long long w2);
bool lattice_contains(const Lattice2& L, long long x, long long y);
bool sublattice_of(const Lattice2& inner, const Lattice2& outer);
// Basis of the lattice generated by the given vectors; requires full rank.
Lattice2 lattice_from_vectors(const std::vector<std::pair<long long, long long>>& vs);
// Gauss-reduced basis; first vector is a shortest nonzero lattice vector.
Lattice2 gauss_reduce(const Lattice2& L);
// Canonical basis (a, b), (0, c) with a, c > 0 and 0 <= b < c.
Lattice2 hermite(const Lattice2& L);
// Smallest s > 0 with (s, 0) in L (equivalently (0, s) by symmetry of use).
long long smallest_axis_period(const Lattice2& L, bool y_axis);

}  // namespace isoweave
