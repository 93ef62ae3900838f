#pragma once

#include <random>
#include <string>

#include "isoweave/design.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(ISOWEAVE_FIXTURE_DIR) + "/" + name + ".txt";
}

inline isoweave::Design fixture(const std::string& name) {
    return isoweave::load_design(fixture_path(name));
}

inline isoweave::Design random_design(int t, std::mt19937& rng) {
    isoweave::Design d;
    d.torus_side = t;
    d.cells.resize(static_cast<size_t>(t) * t);
    for (auto& c : d.cells) c = static_cast<uint8_t>(rng() & 1);
    return d;
}

inline isoweave::Design satin(int t, int s) {
    isoweave::Design d;
    d.torus_side = t;
    d.cells.assign(static_cast<size_t>(t) * t, 0);
    for (int x = 0; x < t; ++x) d.set(x, (s * x) % t, 1);
    return d;
}

}  // namespace testutil
