#include "isoweave/design.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isoweave {

int max_torus_side() {
    static const int value = [] {
        const char* env = std::getenv("ISOWEAVE_MAX_T");
        if (!env || !*env) return 64;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (!end || *end != '\0' || v < 1 || v > 4096)
            throw std::runtime_error("ISOWEAVE_MAX_T must be an integer in [1, 4096]");
        return static_cast<int>(v);
    }();
    return value;
}

int floor_mod(long long a, int m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

Design complement(const Design& d) {
    Design out = d;
    for (auto& c : out.cells) c ^= 1;
    return out;
}

Design parse_design(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty design text");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("T=", 0) != 0)
        throw std::invalid_argument("malformed header: expected T=<side>");
    int t = 0;
    try {
        size_t pos = 0;
        t = std::stoi(line.substr(2), &pos);
        if (pos != line.size() - 2) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed header: bad torus side in \"" + line + "\"");
    }
    if (t < 1) throw std::invalid_argument("torus side must be positive");
    if (t > max_torus_side())
        throw std::invalid_argument("torus side " + std::to_string(t) +
                                 " exceeds limit " + std::to_string(max_torus_side()));

    Design d(t);
    bool rows_started = false;
    int rows_read = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') {
            if (rows_started)
                throw std::invalid_argument("metadata line after grid rows");
            std::string meta = line.substr(1);
            size_t start = meta.find_first_not_of(' ');
            if (start != std::string::npos && meta.rfind("label:", start) == start) {
                std::string v = meta.substr(start + 6);
                size_t vs = v.find_first_not_of(' ');
                d.label = vs == std::string::npos ? "" : v.substr(vs);
            }
            continue;
        }
        if (line.empty()) {
            if (rows_read == t) continue;  // allow trailing blank line
            throw std::invalid_argument("unexpected blank line in grid");
        }
        rows_started = true;
        if (rows_read >= t) throw std::invalid_argument("too many grid rows");
        if (static_cast<int>(line.size()) != t)
            throw std::invalid_argument("ragged row: expected " + std::to_string(t) +
                                     " characters, got " + std::to_string(line.size()));
        int y = t - 1 - rows_read;
        for (int x = 0; x < t; ++x) {
            char ch = line[x];
            if (ch != '0' && ch != '1')
                throw std::invalid_argument(std::string("bad grid character '") + ch + "'");
            d.set(x, y, ch == '1');
        }
        ++rows_read;
    }
    if (rows_read != t)
        throw std::invalid_argument("expected " + std::to_string(t) + " grid rows, got " +
                                 std::to_string(rows_read));
    return d;
}

std::string format_design(const Design& d) {
    std::string out = "T=" + std::to_string(d.torus_side) + "\n";
    if (!d.label.empty()) out += "# label: " + d.label + "\n";
    for (int y = d.torus_side - 1; y >= 0; --y) {
        for (int x = 0; x < d.torus_side; ++x) out += d.at(x, y) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Design load_design(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_design(buf.str());
}

void save_design(const Design& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << format_design(d);
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t design_hash(const Design& d) {
    Design bare = d;
    bare.label.clear();
    return fnv1a64(format_design(bare));
}

}  // namespace isoweave
