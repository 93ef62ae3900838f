#include "isoweave/cli.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isoweave/construct.hpp"
#include "isoweave/cube.hpp"
#include "isoweave/design.hpp"
#include "isoweave/lattice.hpp"
#include "isoweave/render.hpp"
#include "isoweave/symmetry.hpp"
#include "isoweave/transform.hpp"

namespace isoweave {

namespace {

using nlohmann::json;

std::string hex_id(uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
}

json grid_json(const Design& d) {
    json rows = json::array();
    for (int y = d.torus_side - 1; y >= 0; --y) {
        std::string row;
        for (int x = 0; x < d.torus_side; ++x) row += d.at(x, y) ? '1' : '0';
        rows.push_back(row);
    }
    return rows;
}

json report_json(const SpeciesReport& r, const Design& d) {
    json j;
    j["ok"] = true;
    j["species"] = species_name(r.species);
    j["m1"] = r.m1;
    j["n1"] = r.n1;
    j["level"] = r.g1_unit.level;
    j["order"] = r.order;
    j["period"] = r.period;
    j["h1_type"] = r.h1_is_p4 ? "p4" : "p2";
    j["h1_equals_g1"] = r.h1_equals_g1;
    j["reflected"] = r.reflected;
    j["strand_symmetry"] = strand_symmetry_name(strand_symmetry(d, r));
    return j;
}

int run_classify(const std::string& path, bool as_json) {
    Design d = load_design(path);
    Classification c = classify(d);
    if (!c.ok) {
        if (as_json) {
            json j{{"ok", false}, {"reason", reject_reason_name(c.reason)}, {"detail", c.detail}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << "rejected: " << reject_reason_name(c.reason) << " (" << c.detail
                      << ")\n";
        }
        return 1;
    }
    if (as_json) {
        std::cout << report_json(c.report, d).dump(2) << "\n";
    } else {
        const SpeciesReport& r = c.report;
        std::cout << "species   " << species_name(r.species) << "\n"
                  << "unit      M1=" << r.m1 << " N1=" << r.n1 << " level="
                  << r.g1_unit.level << "\n"
                  << "order     " << r.order << "\n"
                  << "period    " << r.period << "\n"
                  << "h1        " << (r.h1_is_p4 ? "p4" : "p2")
                  << (r.h1_equals_g1 ? " (equals g1)" : "") << "\n"
                  << "handed    " << (r.reflected ? "reflected" : "standard") << "\n"
                  << "strands   " << strand_symmetry_name(strand_symmetry(d, r)) << "\n";
    }
    return 0;
}

int run_enumerate(int order, const std::string& species, bool include_falling,
                  const std::string& out) {
    std::optional<Species> filter;
    if (!species.empty()) filter = species_from_name(species);
    EnumerationResult res = enumerate_designs(order, filter, include_falling);
    json j;
    j["schema"] = 1;
    j["order"] = order;
    j["merged_count"] = res.merged_count;
    j["handed_count"] = res.handed_count;
    j["notices"] = res.notices;
    json designs = json::array();
    for (const auto& e : res.designs) {
        json dj;
        dj["id"] = hex_id(design_hash(e.design));
        dj["order"] = order;
        dj["species"] = species_name(e.species);
        dj["m1"] = e.m1;
        dj["n1"] = e.n1;
        dj["falls_apart"] = e.falls_apart;
        dj["grid"] = grid_json(e.design);
        designs.push_back(dj);
    }
    j["designs"] = designs;
    emit(j.dump(2) + "\n", out);
    for (const auto& n : res.notices) std::cerr << "notice: " << n << "\n";
    return 0;
}

int run_double(const std::string& path, const std::string& out) {
    Design d = load_design(path);
    Classification c = classify(d);
    if (!c.ok) {
        std::cerr << "rejected: " << c.detail << "\n";
        return 1;
    }
    DoublabilityReport rep = check_doublable(c.report.species);
    if (!rep.doublable) {
        std::cerr << "species " << species_name(c.report.species)
                  << " does not double within the quarter-turn species\n";
        return 1;
    }
    Design dd = double_design(d);
    emit(format_design(dd), out);
    return 0;
}

int run_halve(const std::string& path, int ax, int ay, bool report,
              const std::string& out) {
    Design d = load_design(path);
    if (report) {
        HalvingReport hr = check_halving_theorem(d);
        json j;
        j["precondition_ok"] = hr.precondition_ok;
        if (hr.precondition_ok) {
            j["species"] = species_name(hr.input_species);
            j["m1"] = hr.m1;
            j["n1"] = hr.n1;
            json offs = json::array();
            for (const auto& o : hr.offsets) {
                json oj;
                oj["a"] = o.a;
                oj["b"] = o.b;
                oj["trivial"] = o.trivial;
                oj["contains_36_1"] = o.contains_36_1;
                offs.push_back(oj);
            }
            j["offsets"] = offs;
            j["all_pass"] = hr.all_pass;
        }
        std::cout << j.dump(2) << "\n";
        return hr.precondition_ok ? 0 : 1;
    }
    Design h = halve_design(d, ax, ay);
    emit(format_design(h), out);
    return 0;
}

int run_cube(const std::string& path, const std::string& svg, bool as_json) {
    Design d = load_design(path);
    Classification c = classify(d);
    if (!c.ok) {
        std::cerr << "rejected: " << c.detail << "\n";
        return 1;
    }
    CubeWeavability w = cube_weavable(c.report);
    json j;
    j["species"] = species_name(c.report.species);
    j["weavable"] = w.verdict;
    j["reason"] = w.reason;
    if (!w.verdict) {
        if (as_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cerr << "no woven cube: " << w.reason << "\n";
        return 1;
    }
    CubeNet net = cube_net(d);
    CubeVerification v = verify_cube_isonemal(net);
    j["ok"] = v.ok;
    j["strand_count"] = v.strand_count;
    j["gluings"] = net.gluings.size();
    j["verified"] = {{"gluings_consistent", v.gluings_consistent},
                     {"rotations_consistent", v.rotations_consistent},
                     {"transitive", v.transitive},
                     {"adjacent_swaps_ok", v.adjacent_swaps_ok}};
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (!svg.empty()) emit(render_net_svg(net, 24), svg);
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << "woven cube: " << (v.ok ? "isonemal" : "NOT isonemal") << ", "
                  << v.strand_count << " strands\n";
    return 0;
}

int run_lattice(long long max_area) {
    struct Row {
        long long area;
        int m, n;
        std::string reason;
    };
    std::vector<Row> rows;
    for (int m = 2; 1LL * m * m + 1 <= max_area; ++m)
        for (int n = 1; n < m; ++n) {
            long long area = 1LL * m * m + 1LL * n * n;
            if (area > max_area) break;
            Row r{area, m, n, ""};
            if (std::gcd(m, n) != 1)
                r.reason = "common factor";
            else if ((m + n) % 2 == 0)
                r.reason = "legs of equal parity";
            rows.push_back(r);
        }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.area, a.m) < std::tie(b.area, b.m);
    });
    std::cout << "area\tM\tN\tadmissible\treason\n";
    for (const auto& r : rows)
        std::cout << r.area << "\t" << r.m << "\t" << r.n << "\t"
                  << (r.reason.empty() ? "Y" : "N") << "\t"
                  << (r.reason.empty() ? "-" : r.reason) << "\n";
    return 0;
}

int run_render(const std::string& path, const std::string& out, bool markers,
               bool lattice, int cell) {
    Design d = load_design(path);
    RenderSpec spec;
    spec.cell_size = cell;
    spec.show_markers = markers;
    spec.show_lattice = lattice;
    emit(render_svg(d, spec), out);
    return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"isonemal weaving designs with quarter-turn symmetry"};
    app.require_subcommand(1);

    std::string design_path, out_path, species, svg_path;
    bool as_json = false, include_falling = false, halve_report = false;
    bool markers = true, lattice_overlay = false;
    int order = 0, ax = 0, ay = 0, cell = 24;
    long long max_area = 100;

    auto* cls = app.add_subcommand("classify", "identify the symmetry species of a design");
    cls->add_option("design,--design", design_path, "design file")->required();
    cls->add_flag("--json", as_json, "emit JSON");

    auto* enu = app.add_subcommand("enumerate", "list all designs of a given order");
    enu->add_option("--order", order, "design order")->required();
    enu->add_option("--species", species, "restrict to one species");
    enu->add_flag("--include-falling-apart", include_falling,
                  "keep designs that separate into layers");
    enu->add_option("--out", out_path, "output file (default stdout)");

    auto* dbl = app.add_subcommand("double", "double a design cell-wise");
    dbl->add_option("design,--design", design_path, "design file")->required();
    dbl->add_option("--out", out_path, "output file (default stdout)");

    auto* hlv = app.add_subcommand("halve", "sample a design on the doubled grid");
    hlv->add_option("design,--design", design_path, "design file")->required();
    hlv->add_option("--a", ax, "x offset (0 or 1)");
    hlv->add_option("--b", ay, "y offset (0 or 1)");
    hlv->add_flag("--report", halve_report, "check all four halvings instead");
    hlv->add_option("--out", out_path, "output file (default stdout)");

    auto* cub = app.add_subcommand("cube", "fold a design onto a woven cube");
    cub->add_option("design,--design", design_path, "design file")->required();
    cub->add_option("--svg", svg_path, "write the cross net as SVG");
    cub->add_flag("--json", as_json, "emit JSON");

    auto* lat = app.add_subcommand("lattice", "tabulate square lattice units by area");
    lat->add_option("--max-area", max_area, "largest unit area to list");
    lat->add_subcommand("table", "print the table (the default)")
        ->add_option("--max-area", max_area, "largest unit area to list");

    auto* ren = app.add_subcommand("render", "draw a design as SVG");
    ren->add_option("design,--design", design_path, "design file")->required();
    ren->add_option("--out", out_path, "output file (default stdout)");
    ren->add_flag("--markers,!--no-markers", markers, "mark rotation centres");
    ren->add_flag("--lattice", lattice_overlay, "draw translation vectors");
    ren->add_option("--cell-size", cell, "pixels per cell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cls)) return run_classify(design_path, as_json);
        if (app.got_subcommand(enu))
            return run_enumerate(order, species, include_falling, out_path);
        if (app.got_subcommand(dbl)) return run_double(design_path, out_path);
        if (app.got_subcommand(hlv))
            return run_halve(design_path, ax, ay, halve_report, out_path);
        if (app.got_subcommand(cub)) return run_cube(design_path, svg_path, as_json);
        if (app.got_subcommand(lat)) return run_lattice(max_area);
        if (app.got_subcommand(ren))
            return run_render(design_path, out_path, markers, lattice_overlay, cell);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace isoweave
