#include "isoweave/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace isoweave {

CentreSort opposite(CentreSort s) {
    return s == CentreSort::CellCorner ? CentreSort::CellCentre : CentreSort::CellCorner;
}

std::vector<Level1Entry> level1_units_up_to(int max_area) {
    std::vector<Level1Entry> out;
    for (int m = 2; 1LL * m * m + 1 <= max_area; ++m)
        for (int n = 1 + (m % 2 == 1); n < m; n += 2) {
            int area = m * m + n * n;
            if (area > max_area) break;
            if (std::gcd(m, n) != 1) continue;
            out.push_back({m, n, area});
        }
    std::sort(out.begin(), out.end(), [](const Level1Entry& a, const Level1Entry& b) {
        return a.area != b.area ? a.area < b.area : a.M < b.M;
    });
    return out;
}

SquareClassification classify_square(int a, int b, CentreSort corner_sort) {
    SquareClassification res;
    if (a == 0 && b == 0) {
        res.reject_reason = "zero vector";
        return res;
    }
    if (a == 0 || b == 0) {
        res.reject_reason = "forbidden line: axis-parallel side";
        return res;
    }
    if (std::abs(a) == std::abs(b)) {
        res.reject_reason = "forbidden line: diagonal side";
        return res;
    }
    // Rotate into the open first quadrant.
    while (!(a > 0 && b > 0)) {
        int na = -b, nb = a;
        a = na;
        b = nb;
    }
    int M = std::max(a, b), N = std::min(a, b);
    int level = 1, m1 = M, n1 = N;
    while (true) {
        if ((m1 & 1) != (n1 & 1)) break;
        if ((m1 & 1) && (n1 & 1)) {
            int s = (m1 + n1) / 2, d = (m1 - n1) / 2;
            level += 1;
            m1 = std::max(s, d);
            n1 = std::min(s, d);
            break;
        }
        m1 /= 2;
        n1 /= 2;
        level += 2;
    }
    res.ok = true;
    res.m1 = m1;
    res.n1 = n1;
    // Right-handed units lead with the long leg at odd levels and with the
    // short one at even levels (escription rotates an eighth turn each step).
    res.reflected = (level % 2 == 1) ? (a < b) : (a > b);
    res.unit.M = M;
    res.unit.N = N;
    res.unit.level = level;
    res.unit.centre_sort = level == 1 ? opposite(corner_sort) : corner_sort;
    if (std::gcd(m1, n1) != 1) {
        res.incapable_reason = "level-1 legs share a factor " +
                               std::to_string(std::gcd(m1, n1));
    } else if (level >= 5) {
        res.incapable_reason = "level 5 or higher";
    } else if (level >= 3 && res.unit.centre_sort == CentreSort::CellCentre) {
        res.incapable_reason = "level >= 3 unit centred on a cell centre";
    } else {
        res.isonemal_capable = true;
    }
    return res;
}

std::pair<int, int> unit_side_vector(const LatticeUnit& u, bool reflected) {
    bool lead_long = (u.level % 2 == 1) != reflected;
    return lead_long ? std::make_pair(u.M, u.N) : std::make_pair(u.N, u.M);
}

LatticeUnit escribe(const LatticeUnit& u) {
    if (u.level >= 5) throw std::invalid_argument("cannot escribe a level-5 unit");
    LatticeUnit out;
    out.M = u.M + u.N;
    out.N = u.M - u.N;
    if (out.M < out.N) std::swap(out.M, out.N);
    out.level = u.level + 1;
    out.centre_sort = u.centre_sort;
    return out;
}

std::optional<std::pair<long long, long long>> coprime_witness(long long M, long long N) {
    long long old_r = M, r = N, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long long q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r != 1 && old_r != -1) return std::nullopt;
    long long sign = old_r < 0 ? -1 : 1;
    return std::make_pair(sign * old_s, sign * old_t);
}

OrderDecomposition decompose_order(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    OrderDecomposition out;
    out.n = n;
    out.f = n;
    while (out.f % 2 == 0) {
        out.f /= 2;
        ++out.p;
    }
    for (int a = out.f; a >= 1; --a) {
        long long bb = out.f - 1LL * a * a;
        if (bb < 1) continue;
        int b = static_cast<int>(std::llround(std::sqrt(static_cast<double>(bb))));
        if (1LL * b * b != bb) continue;
        if (b >= a) break;
        if (std::gcd(a, b) != 1) continue;
        out.reps.emplace_back(a, b);
    }
    return out;
}

long long Lattice2::det() const { return std::llabs(v1 * w2 - v2 * w1); }

Lattice2 make_lattice(long long v1, long long v2, long long w1, long long w2) {
    Lattice2 L{v1, v2, w1, w2};
    if (L.det() == 0) throw std::invalid_argument("degenerate lattice basis");
    return L;
}

bool lattice_contains(const Lattice2& L, long long x, long long y) {
    long long d = L.det();
    long long a = x * L.w2 - y * L.w1;
    long long b = L.v1 * y - L.v2 * x;
    return a % d == 0 && b % d == 0;
}

bool sublattice_of(const Lattice2& inner, const Lattice2& outer) {
    return lattice_contains(outer, inner.v1, inner.v2) &&
           lattice_contains(outer, inner.w1, inner.w2);
}

Lattice2 lattice_from_vectors(const std::vector<std::pair<long long, long long>>& vs) {
    // Integer row echelon by gcd elimination on the x components.
    std::vector<std::pair<long long, long long>> rows;
    for (auto [x, y] : vs)
        if (x != 0 || y != 0) rows.emplace_back(x, y);
    if (rows.empty()) throw std::invalid_argument("no nonzero generators");
    auto by_abs_x = [](const auto& a, const auto& b) {
        long long ax = std::llabs(a.first), bx = std::llabs(b.first);
        if ((ax != 0) != (bx != 0)) return ax != 0;
        return ax < bx;
    };
    while (true) {
        std::sort(rows.begin(), rows.end(), by_abs_x);
        if (rows[0].first == 0 || rows.size() < 2 || rows[1].first == 0) break;
        for (size_t i = 1; i < rows.size() && rows[i].first != 0; ++i) {
            long long q = rows[i].first / rows[0].first;
            rows[i].first -= q * rows[0].first;
            rows[i].second -= q * rows[0].second;
        }
    }
    long long g = 0;
    for (auto& [x, y] : rows)
        if (x == 0) g = std::gcd(g, std::llabs(y));
    if (rows[0].first == 0 || g == 0)
        throw std::invalid_argument("generators do not span the plane");
    long long a = rows[0].first, b = rows[0].second;
    if (a < 0) {
        a = -a;
        b = -b;
    }
    b %= g;
    if (b < 0) b += g;
    return {a, b, 0, g};
}

Lattice2 gauss_reduce(const Lattice2& L) {
    long long b1x = L.v1, b1y = L.v2, b2x = L.w1, b2y = L.w2;
    auto n1 = [&] { return b1x * b1x + b1y * b1y; };
    auto n2 = [&] { return b2x * b2x + b2y * b2y; };
    if (n1() > n2()) {
        std::swap(b1x, b2x);
        std::swap(b1y, b2y);
    }
    while (true) {
        long long dot = b1x * b2x + b1y * b2y;
        long long q = std::llround(static_cast<double>(dot) / static_cast<double>(n1()));
        b2x -= q * b1x;
        b2y -= q * b1y;
        if (n2() >= n1()) break;
        std::swap(b1x, b2x);
        std::swap(b1y, b2y);
    }
    return {b1x, b1y, b2x, b2y};
}

Lattice2 hermite(const Lattice2& L) {
    long long d = L.det();
    if (d == 0) throw std::invalid_argument("degenerate lattice");
    // Smallest positive x among lattice vectors is gcd of basis x-components.
    long long a = std::gcd(std::llabs(L.v1), std::llabs(L.w1));
    if (a == 0) throw std::invalid_argument("lattice misses the x direction");
    long long c = d / a;  // vectors with x = 0 form (0, c)Z
    long long b = 0;
    if (L.v1 == 0)
        b = L.w2 % c;
    else if (L.w1 == 0)
        b = L.v2 % c;
    else {
        auto [p, q] = *coprime_witness(L.v1 / a, L.w1 / a);
        b = (p * L.v2 + q * L.w2) % c;
    }
    if (b < 0) b += c;
    return {a, b, 0, c};
}

long long smallest_axis_period(const Lattice2& L, bool y_axis) {
    long long d = L.det();
    for (long long s = 1; s <= d; ++s) {
        if (y_axis ? lattice_contains(L, 0, s) : lattice_contains(L, s, 0)) return s;
    }
    throw std::logic_error("no axis period below the covolume");
}

}  // namespace isoweave
