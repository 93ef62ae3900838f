#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "isoweave/lattice.hpp"

using namespace isoweave;

TEST_CASE("level-1 units up to 17") {
    auto v = level1_units_up_to(17);
    REQUIRE(v.size() == 3);
    CHECK(v[0].M == 2);
    CHECK(v[0].N == 1);
    CHECK(v[0].area == 5);
    CHECK(v[1].M == 3);
    CHECK(v[1].N == 2);
    CHECK(v[1].area == 13);
    CHECK(v[2].M == 4);
    CHECK(v[2].N == 1);
    CHECK(v[2].area == 17);
}

TEST_CASE("level-1 legs are coprime, of opposite parity, ordered") {
    auto v = level1_units_up_to(500);
    long long prev_area = 0;
    int prev_m = 0;
    for (const auto& e : v) {
        CHECK(e.M > e.N);
        CHECK(e.N >= 1);
        CHECK(std::gcd(e.M, e.N) == 1);
        CHECK((e.M + e.N) % 2 == 1);
        CHECK(e.area == e.M * e.M + e.N * e.N);
        CHECK((e.area > prev_area || (e.area == prev_area && e.M > prev_m)));
        prev_area = e.area;
        prev_m = e.M;
    }
    // 325 = 18^2+1 = 17^2+6^2 = 15^2+10^2 (last has a common factor)
    int count325 = 0;
    for (const auto& e : v)
        if (e.area == 325) ++count325;
    CHECK(count325 == 2);
}

// The triangular array of unit areas: entry (i,j), 1 <= i <= j, has legs
// M = i+j and N = j-i+1.  Dropping entries with a common leg factor prunes
// (2,4), (2,7), (3,7) and (5,7) from the 8x8 corner and nothing else.
TEST_CASE("leg array and its coprime pruning") {
    std::set<std::pair<int, int>> removed;
    for (int i = 1; i <= 8; ++i)
        for (int j = i; j <= 8; ++j) {
            int m = i + j, n = j - i + 1;
            CHECK(m > n);
            CHECK((m + n) % 2 == 1);
            // (i,j) recoverable from the legs: the array covers each pair once
            CHECK(i == (m - n + 1) / 2);
            CHECK(j == (m + n - 1) / 2);
            if (std::gcd(m, n) != 1) removed.insert({i, j});
        }
    CHECK(removed == std::set<std::pair<int, int>>{{2, 4}, {2, 7}, {3, 7}, {5, 7}});
    // spot values: (2,4) is 36+9, (2,7) is 81+36, (3,7) is 100+25, (5,7) 144+9
    CHECK(6 * 6 + 3 * 3 == 45);
    CHECK(9 * 9 + 6 * 6 == 117);
    CHECK(10 * 10 + 5 * 5 == 125);
    CHECK(12 * 12 + 3 * 3 == 153);
}

TEST_CASE("escription chain from (2,1)") {
    LatticeUnit u{2, 1, 1, CentreSort::CellCorner};
    LatticeUnit u2 = escribe(u);
    CHECK(u2.M == 3);
    CHECK(u2.N == 1);
    CHECK(u2.level == 2);
    CHECK(u2.centre_sort == CentreSort::CellCorner);
    LatticeUnit u3 = escribe(u2);
    CHECK(u3.M == 4);  // 2*M1
    CHECK(u3.N == 2);  // 2*N1
    CHECK(u3.level == 3);
    LatticeUnit u4 = escribe(u3);
    CHECK(u4.M == 6);  // 2*M2
    CHECK(u4.N == 2);  // 2*N2
    LatticeUnit u5 = escribe(u4);
    CHECK(u5.M == 8);  // 4*M1
    CHECK(u5.N == 4);  // 4*N1
    CHECK(u5.level == 5);
    CHECK_THROWS_AS(escribe(u5), std::invalid_argument);
    // area doubles at each level
    CHECK(u2.area() == 2 * u.area());
    CHECK(u3.area() == 4 * u.area());
    CHECK(u5.area() == 16 * u.area());
}

TEST_CASE("classify_square levels by leg parity") {
    auto s1 = classify_square(2, 1, CentreSort::CellCorner);
    REQUIRE(s1.ok);
    CHECK(s1.unit.level == 1);
    CHECK(s1.m1 == 2);
    CHECK(s1.n1 == 1);
    CHECK_FALSE(s1.reflected);
    CHECK(s1.isonemal_capable);

    auto s2 = classify_square(1, 3, CentreSort::CellCorner);  // both odd
    REQUIRE(s2.ok);
    CHECK(s2.unit.level == 2);
    CHECK(s2.m1 == 2);
    CHECK(s2.n1 == 1);
    CHECK(s2.isonemal_capable);

    auto s3 = classify_square(4, 2, CentreSort::CellCorner);  // 2*(2,1)
    REQUIRE(s3.ok);
    CHECK(s3.unit.level == 3);
    CHECK(s3.m1 == 2);
    CHECK(s3.n1 == 1);

    auto s4 = classify_square(2, 6, CentreSort::CellCorner);  // 2*(1,3)
    REQUIRE(s4.ok);
    CHECK(s4.unit.level == 4);
    CHECK(s4.m1 == 2);
    CHECK(s4.n1 == 1);

    auto s5 = classify_square(8, 4, CentreSort::CellCorner);
    REQUIRE(s5.ok);
    CHECK(s5.unit.level == 5);
    CHECK_FALSE(s5.isonemal_capable);  // level 5 cannot serve
}

TEST_CASE("classify_square rejects forbidden lines") {
    CHECK_FALSE(classify_square(0, 0, CentreSort::CellCorner).ok);
    CHECK_FALSE(classify_square(3, 0, CentreSort::CellCorner).ok);
    CHECK_FALSE(classify_square(0, 2, CentreSort::CellCentre).ok);
    CHECK_FALSE(classify_square(3, 3, CentreSort::CellCorner).ok);
    CHECK_FALSE(classify_square(-4, 4, CentreSort::CellCorner).ok);
}

TEST_CASE("classify_square capability gates") {
    // common leg factor
    auto s = classify_square(6, 3, CentreSort::CellCorner);
    REQUIRE(s.ok);
    CHECK_FALSE(s.isonemal_capable);
    // level 3 on a cell-centre-centred unit cannot be used
    auto c2 = classify_square(1, 3, CentreSort::CellCentre);
    REQUIRE(c2.ok);
    CHECK(c2.isonemal_capable);
    auto c3 = classify_square(4, 2, CentreSort::CellCentre);
    REQUIRE(c3.ok);
    CHECK(c3.unit.level == 3);
    CHECK_FALSE(c3.isonemal_capable);
}

TEST_CASE("classify_square is rotation invariant and tracks handedness") {
    auto base = classify_square(2, 1, CentreSort::CellCorner);
    for (auto [a, b] : {std::pair{-1, 2}, {-2, -1}, {1, -2}}) {
        auto s = classify_square(a, b, CentreSort::CellCorner);
        REQUIRE(s.ok);
        CHECK(s.unit.M == base.unit.M);
        CHECK(s.unit.N == base.unit.N);
        CHECK(s.reflected == base.reflected);
    }
    // the mirror seed
    auto m = classify_square(1, 2, CentreSort::CellCorner);
    REQUIRE(m.ok);
    CHECK(m.unit.M == 2);
    CHECK(m.unit.N == 1);
    CHECK(m.reflected);
}

TEST_CASE("unit_side_vector leads with the long leg at odd levels") {
    CHECK(unit_side_vector({2, 1, 1, CentreSort::CellCorner}, false) ==
          std::pair<int, int>{2, 1});
    CHECK(unit_side_vector({3, 1, 2, CentreSort::CellCorner}, false) ==
          std::pair<int, int>{1, 3});
    CHECK(unit_side_vector({4, 2, 3, CentreSort::CellCorner}, false) ==
          std::pair<int, int>{4, 2});
    // mirrored orientation swaps the lead
    CHECK(unit_side_vector({2, 1, 1, CentreSort::CellCorner}, true) ==
          std::pair<int, int>{1, 2});
}

TEST_CASE("coprime witness certifies reachability") {
    auto w = coprime_witness(2, 1);
    REQUIRE(w.has_value());
    CHECK(w->first * 2 + w->second * 1 == 1);
    auto w2 = coprime_witness(16, 9);
    REQUIRE(w2.has_value());
    CHECK(w2->first * 16 + w2->second * 9 == 1);
    CHECK_FALSE(coprime_witness(6, 3).has_value());
}

TEST_CASE("order decomposition") {
    auto d5 = decompose_order(5);
    CHECK(d5.f == 5);
    CHECK(d5.p == 0);
    REQUIRE(d5.reps.size() == 1);
    CHECK(d5.reps[0] == std::pair<int, int>{2, 1});
    CHECK(d5.feasible());

    auto d20 = decompose_order(20);
    CHECK(d20.f == 5);
    CHECK(d20.p == 2);
    CHECK(d20.feasible());

    auto d65 = decompose_order(65);
    REQUIRE(d65.reps.size() == 2);  // 64+1 and 49+16
    CHECK(d65.reps[0] == std::pair<int, int>{8, 1});
    CHECK(d65.reps[1] == std::pair<int, int>{7, 4});

    CHECK_FALSE(decompose_order(15).feasible());  // 15 is not a sum of two squares
    CHECK_FALSE(decompose_order(40).feasible());  // 8 divides 40
    CHECK_FALSE(decompose_order(25).reps.empty());  // (4,3)
    CHECK(decompose_order(25).reps[0] == std::pair<int, int>{4, 3});
    CHECK_FALSE(decompose_order(9).feasible());
    CHECK(decompose_order(50).f == 25);
    CHECK(decompose_order(50).p == 1);
}

TEST_CASE("lattice arithmetic") {
    Lattice2 L = make_lattice(2, 1, -1, 2);
    CHECK(L.det() == 5);
    CHECK(lattice_contains(L, 2, 1));
    CHECK(lattice_contains(L, 1, 3));   // (2,1)+(-1,2)
    CHECK(lattice_contains(L, 5, 0));
    CHECK(lattice_contains(L, 0, 5));
    CHECK_FALSE(lattice_contains(L, 1, 0));
    CHECK_FALSE(lattice_contains(L, 2, 2));
    CHECK(smallest_axis_period(L, false) == 5);
    CHECK(smallest_axis_period(L, true) == 5);

    Lattice2 dbl = make_lattice(4, 2, -2, 4);
    CHECK(sublattice_of(dbl, L));
    CHECK_FALSE(sublattice_of(L, dbl));
    CHECK(sublattice_of(L, L));
}

TEST_CASE("hermite canonical form") {
    Lattice2 h = hermite(make_lattice(2, 1, -1, 2));
    CHECK(h.v1 == 1);
    CHECK(h.v2 == 3);
    CHECK(h.w1 == 0);
    CHECK(h.w2 == 5);
    // same lattice from a different basis
    Lattice2 h2 = hermite(make_lattice(1, 3, 2, 1));
    CHECK(h2.v1 == h.v1);
    CHECK(h2.v2 == h.v2);
    CHECK(h2.w2 == h.w2);
}

TEST_CASE("lattice_from_vectors spans the generated lattice") {
    // (5,0) = 2*(4,2) - 3*(1,3) + (0,5) refines the det-10 pair down to det 5
    Lattice2 L = lattice_from_vectors({{4, 2}, {1, 3}, {5, 0}});
    CHECK(L.det() == 5);
    CHECK(lattice_contains(L, 4, 2));
    CHECK(lattice_contains(L, 1, 3));
    CHECK(lattice_contains(L, 5, 0));
    CHECK(lattice_contains(L, 2, 1));
    CHECK_FALSE(lattice_contains(L, 1, 0));

    Lattice2 pair_only = lattice_from_vectors({{4, 2}, {1, 3}});
    CHECK(pair_only.det() == 10);
    CHECK_FALSE(lattice_contains(pair_only, 5, 0));
    CHECK(sublattice_of(pair_only, L));
}

TEST_CASE("gauss reduction finds a shortest vector") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        long long a = static_cast<int>(rng() % 9) - 4, b = static_cast<int>(rng() % 9) - 4;
        long long c = static_cast<int>(rng() % 9) - 4, d = static_cast<int>(rng() % 9) - 4;
        if (a * d - b * c == 0) continue;
        Lattice2 L = make_lattice(a, b, c, d);
        Lattice2 R = gauss_reduce(L);
        CHECK(R.det() == L.det());
        CHECK(sublattice_of(R, L));
        CHECK(sublattice_of(L, R));
        long long n1 = R.v1 * R.v1 + R.v2 * R.v2;
        // no shorter nonzero vector in a generous search box
        for (long long x = -8; x <= 8; ++x)
            for (long long y = -8; y <= 8; ++y)
                if ((x || y) && lattice_contains(L, x, y))
                    CHECK(x * x + y * y >= n1);
    }
}
