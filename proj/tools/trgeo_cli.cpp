// trgeo: command-line front end for the totally-real geometry toolkit.
// Subcommands emit one JSON document on stdout; inputs plus seeds fully
// determine the bytes. Exit codes: 0 ok, 2 validation error, 3 numerical
// error.

#include "trgeo/accretivity.hpp"
#include "trgeo/cauchy.hpp"
#include "trgeo/gradient_graph.hpp"
#include "trgeo/json_io.hpp"
#include "trgeo/subspace.hpp"
#include "trgeo/surface.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace trgeo;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return j;
}

json read_json_stdin() {
    json j;
    try {
        std::cin >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("stdin: ") + e.what());
    }
    return j;
}

Complex parse_complex(const std::string& text, const char* what) {
    std::istringstream is(text);
    double re, im;
    char comma;
    if (!(is >> re >> comma >> im) || comma != ',')
        throw ConfigError(std::string(what) + ": expected 're,im', got '" + text + "'");
    return Complex(re, im);
}

std::vector<double> parse_doubles(const std::string& text, const char* what) {
    std::vector<double> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError(std::string(what) + ": bad number '" + item + "'");
        }
    }
    if (out.empty()) throw ConfigError(std::string(what) + ": empty list");
    return out;
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    for (double d : parse_doubles(text, what)) {
        if (d != static_cast<int>(d))
            throw ConfigError(std::string(what) + ": expected integers");
        out.push_back(static_cast<int>(d));
    }
    return out;
}

std::vector<Complex> parse_complex_list(const std::string& text, const char* what) {
    std::vector<Complex> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ';')) out.push_back(parse_complex(item, what));
    if (out.empty()) throw ConfigError(std::string(what) + ": empty list");
    return out;
}

// `circle`, `circle:r`, `ellipse:a,b`, or a JSON curve file.
ClosedCurve load_curve(const std::string& spec, int n, int orientation) {
    if (spec == "circle") {
        ClosedCurve c = make_circle(n);
        c.orientation = orientation;
        return c;
    }
    if (spec.rfind("circle:", 0) == 0) {
        ClosedCurve c = make_circle(n, std::stod(spec.substr(7)));
        c.orientation = orientation;
        return c;
    }
    if (spec.rfind("ellipse:", 0) == 0) {
        const std::vector<double> ab = parse_doubles(spec.substr(8), "ellipse");
        if (ab.size() != 2) throw ConfigError("ellipse spec needs two semi-axes");
        ClosedCurve c = make_ellipse(ab[0], ab[1], n);
        c.orientation = orientation;
        return c;
    }
    return curve_from_json(read_json_file(spec));
}

// Named data (`one`, `z`, `z2`) or a JSON file of [re,im] samples.
Eigen::VectorXcd load_boundary_data(const std::string& spec, const ClosedCurve& curve) {
    const int n = curve.size();
    Eigen::VectorXcd f(n);
    if (spec == "one") {
        f.setOnes();
    } else if (spec == "z") {
        f = curve.nodes;
    } else if (spec == "z2") {
        for (int k = 0; k < n; ++k) f[k] = curve.nodes[k] * curve.nodes[k];
    } else {
        const json j = read_json_file(spec);
        if (!j.is_array() || static_cast<int>(j.size()) != n)
            throw ConfigError("boundary data file must list N complex samples");
        for (int k = 0; k < n; ++k) f[k] = complex_from_json(j[k], "boundary sample");
    }
    return f;
}

struct PlaneAnalyzeArgs {
    std::string input;
    bool use_stdin = false;
    ToleranceConfig tol;
};

json run_plane_analyze(const PlaneAnalyzeArgs& a) {
    if (a.use_stdin == !a.input.empty())
        throw ConfigError("pass exactly one of --input FILE or --stdin");
    const json doc = a.use_stdin ? read_json_stdin() : read_json_file(a.input);
    const RealSubspace L = plane_from_json(doc);
    return classification_to_json(classify(L, a.tol));
}

struct PlaneRandomArgs {
    int m = 0;
    std::uint64_t seed = 0;
    bool lagrangian = false;
    bool special = false;
};

json run_plane_random(const PlaneRandomArgs& a) {
    if (a.special && !a.lagrangian)
        throw ConfigError("--special requires --lagrangian");
    const RealSubspace L = a.lagrangian ? random_lagrangian(a.m, a.seed, a.special)
                                        : random_subspace(a.m, a.seed);
    return plane_to_json(L);
}

struct SurfaceAnalyzeArgs {
    std::string mesh;
    std::string canonical_out;
    bool ahlfors = false;
    bool doubling = false;
    SampleSpec centers{16, 0};
    RadiusSpec radii{0.1, 2.0, 2};
};

json run_surface_analyze(const SurfaceAnalyzeArgs& a) {
    const TriangulatedSurface M = read_trmesh_file(a.mesh);
    if (!a.canonical_out.empty()) {
        std::ofstream out(a.canonical_out);
        if (!out) throw ConfigError("cannot write " + a.canonical_out);
        write_trmesh(out, M);
    }
    const SurfaceCheck check = check_surface(M);

    double cmin = 1.0, cmean = 0.0, mass = 0.0;
    if (!M.simplices.empty()) {
        // Skip degenerate simplices in the summary; they are already
        // listed in the check block.
        std::vector<double> field(M.simplices.size(), 0.0);
        for (int s = 0; s < static_cast<int>(M.simplices.size()); ++s) {
            try {
                field[s] = totally_real_coefficient(tangent_plane(M, s));
            } catch (const DegenerateSubspaceError&) {
                field[s] = 0.0;
            }
            mass += M.simplices[s].density * simplex_volume(M, s);
        }
        cmin = *std::min_element(field.begin(), field.end());
        for (double c : field) cmean += c;
        cmean /= static_cast<double>(field.size());
    }
    const Complex integral = integrate_restricted_form(
        M, [](const ComplexVector&) { return Complex(1.0, 0.0); });

    json out{{"ambient_m", M.ambient_m},
             {"num_vertices", M.vertices.size()},
             {"num_simplices", M.simplices.size()},
             {"check", surface_check_to_json(check)},
             {"coefficient_min", cmin},
             {"coefficient_mean", cmean},
             {"integral_one", complex_to_json(integral)},
             {"total_mass", mass}};
    out["ahlfors"] = a.ahlfors ? ahlfors_to_json(ahlfors_report(M, a.centers, a.radii),
                                                 a.centers, a.radii)
                               : json(nullptr);
    out["doubling"] = a.doubling ? doubling_to_json(doubling_report(M, a.centers, a.radii),
                                                    a.centers, a.radii)
                                 : json(nullptr);
    return out;
}

struct SurfaceGenArgs {
    std::string potential;
    std::string grid;
    std::string box = "0,1";
    std::string out;
};

json run_surface_gen(const SurfaceGenArgs& a) {
    const json pj = read_json_file(a.potential);
    const int m = pj.contains("m") && pj["m"].is_number_integer() ? pj["m"].get<int>() : 0;
    if (m < 1) throw ConfigError("potential: missing or invalid 'm'");
    const std::vector<double> lohi = parse_doubles(a.box, "--box");
    if (lohi.size() != 2 || !(lohi[0] < lohi[1]))
        throw ConfigError("--box needs 'lo,hi' with lo < hi");
    Box domain;
    domain.lo = RealVector::Constant(m, lohi[0]);
    domain.hi = RealVector::Constant(m, lohi[1]);
    const Potential phi = potential_from_json(pj, domain);
    const std::vector<int> grid = parse_ints(a.grid, "--grid");
    const TriangulatedSurface M = gradient_graph(phi, grid);

    std::ofstream out(a.out);
    if (!out) throw ConfigError("cannot write " + a.out);
    write_trmesh(out, M);
    return json{{"mesh", a.out},
                {"ambient_m", M.ambient_m},
                {"num_vertices", M.vertices.size()},
                {"num_simplices", M.simplices.size()}};
}

struct CauchyArgs {
    std::string curve = "circle";
    int n = 256;
    int orientation = 1;
    std::string f = "one";
    std::string z;
    int node = 0;
    std::string offsets = "0.4,0.3,0.2,0.12";
    std::string probes;
    double loop_radius = 0.1;
};

json run_cauchy_eval(const CauchyArgs& a) {
    const ClosedCurve curve = load_curve(a.curve, a.n, a.orientation);
    const Eigen::VectorXcd f = load_boundary_data(a.f, curve);
    const Complex z = parse_complex(a.z, "--z");
    const Complex value = cauchy_transform(curve, f, z);
    json out{{"value", complex_to_json(value)}, {"z", complex_to_json(z)}};
    out["winding"] = a.f == "one" ? json(winding_indicator(curve, z)) : json(nullptr);
    return out;
}

json run_cauchy_jump(const CauchyArgs& a) {
    const ClosedCurve curve = load_curve(a.curve, a.n, a.orientation);
    const Eigen::VectorXcd f = load_boundary_data(a.f, curve);
    const std::vector<double> offsets = parse_doubles(a.offsets, "--offsets");
    const Complex jump = plemelj_jump(curve, f, a.node, offsets);
    if (a.node < 0 || a.node >= curve.size()) throw ConfigError("node out of range");
    return json{{"jump", complex_to_json(jump)},
                {"node", a.node},
                {"boundary_value", complex_to_json(f[a.node])}};
}

json run_cauchy_holomorphy(const CauchyArgs& a) {
    const ClosedCurve curve = load_curve(a.curve, a.n, a.orientation);
    const Eigen::VectorXcd f = load_boundary_data(a.f, curve);
    const std::vector<Complex> probes = parse_complex_list(a.probes, "--probes");
    const double residual = holomorphy_check(curve, f, probes, a.loop_radius);
    return json{{"max_residual", residual},
                {"probes", probes.size()},
                {"loop_radius", a.loop_radius}};
}

struct AccretivityArgs {
    std::string mesh;
    int depth = 3;
    double delta = 0.5;
};

json run_accretivity_report(const AccretivityArgs& a) {
    const TriangulatedSurface M = read_trmesh_file(a.mesh);
    const CellPartition P = build_dyadic_cells(M, a.depth);
    return accretivity_to_json(pseudo_accretivity_report(M, P, a.delta));
}

void add_tolerance_flags(CLI::App* cmd, ToleranceConfig& tol) {
    cmd->add_option("--tol-coefficient", tol.coefficient_tol, "totally-real cutoff");
    cmd->add_option("--tol-lagrangian", tol.lagrangian_tol, "max |Im| tolerance");
    cmd->add_option("--tol-unitary", tol.unitary_tol, "unitarity tolerance");
    cmd->add_option("--tol-rank", tol.rank_tol, "rank-deficiency threshold");
    cmd->add_option("--tol-phase", tol.phase_tol, "phase-defined threshold");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"totally-real and Lagrangian plane/surface diagnostics in C^m"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");

    std::function<json()> work;

    auto* plane = app.add_subcommand("plane", "real m-planes in C^m");
    plane->fallthrough();
    plane->require_subcommand(1);
    {
        auto args = std::make_shared<PlaneAnalyzeArgs>();
        auto* cmd = plane->add_subcommand("analyze", "classify a plane JSON file");
        cmd->fallthrough();
        cmd->add_option("--input", args->input, "plane JSON file");
        cmd->add_flag("--stdin", args->use_stdin, "read the plane JSON from stdin");
        add_tolerance_flags(cmd, args->tol);
        cmd->callback([&work, args] { work = [args] { return run_plane_analyze(*args); }; });
    }
    {
        auto args = std::make_shared<PlaneRandomArgs>();
        auto* cmd = plane->add_subcommand("random", "sample a seeded random plane");
        cmd->fallthrough();
        cmd->add_option("--m", args->m, "ambient dimension")->required();
        cmd->add_option("--seed", args->seed, "generator seed")->required();
        cmd->add_flag("--lagrangian", args->lagrangian, "sample a Lagrangian plane");
        cmd->add_flag("--special", args->special, "force determinant 1 (needs --lagrangian)");
        cmd->callback([&work, args] { work = [args] { return run_plane_random(*args); }; });
    }

    auto* surface = app.add_subcommand("surface", "triangulated m-surfaces in C^m");
    surface->fallthrough();
    surface->require_subcommand(1);
    {
        auto args = std::make_shared<SurfaceAnalyzeArgs>();
        auto* cmd = surface->add_subcommand("analyze", "validate and measure a trmesh file");
        cmd->fallthrough();
        cmd->add_option("--mesh", args->mesh, "trmesh file")->required();
        cmd->add_option("--canonical-out", args->canonical_out,
                        "write the canonical mesh form here");
        cmd->add_flag("--ahlfors", args->ahlfors, "emit Ahlfors regularity bounds");
        cmd->add_flag("--doubling", args->doubling, "emit the doubling ratio");
        cmd->add_option("--diag-centers", args->centers.count, "sample centers");
        cmd->add_option("--diag-seed", args->centers.seed, "center sampling seed");
        cmd->add_option("--diag-r0", args->radii.r0, "smallest radius");
        cmd->add_option("--diag-factor", args->radii.factor, "radius growth factor");
        cmd->add_option("--diag-count", args->radii.count, "number of radii");
        cmd->callback([&work, args] { work = [args] { return run_surface_analyze(*args); }; });
    }
    {
        auto args = std::make_shared<SurfaceGenArgs>();
        auto* cmd = surface->add_subcommand("gen-gradient-graph",
                                            "mesh the gradient graph of a potential");
        cmd->fallthrough();
        cmd->add_option("--potential", args->potential, "potential JSON file")->required();
        cmd->add_option("--grid", args->grid, "cells per axis, e.g. 8,8")->required();
        cmd->add_option("--box", args->box, "domain box lo,hi (all axes)");
        cmd->add_option("--out", args->out, "output trmesh path")->required();
        cmd->callback([&work, args] { work = [args] { return run_surface_gen(*args); }; });
    }

    auto* cauchy = app.add_subcommand("cauchy", "m = 1 Cauchy integral operator");
    cauchy->fallthrough();
    cauchy->require_subcommand(1);
    auto add_curve_flags = [](CLI::App* cmd, CauchyArgs& a) {
        cmd->add_option("--curve", a.curve, "circle | circle:r | ellipse:a,b | JSON file");
        cmd->add_option("--N", a.n, "nodes for generated curves");
        cmd->add_option("--orientation", a.orientation, "+1 or -1");
        cmd->add_option("--f", a.f, "one | z | z2 | JSON file of samples");
    };
    {
        auto args = std::make_shared<CauchyArgs>();
        auto* cmd = cauchy->add_subcommand("eval", "transform at an off-curve point");
        cmd->fallthrough();
        add_curve_flags(cmd, *args);
        cmd->add_option("--z", args->z, "evaluation point re,im")->required();
        cmd->callback([&work, args] { work = [args] { return run_cauchy_eval(*args); }; });
    }
    {
        auto args = std::make_shared<CauchyArgs>();
        auto* cmd = cauchy->add_subcommand("jump", "Plemelj jump at a node");
        cmd->fallthrough();
        add_curve_flags(cmd, *args);
        cmd->add_option("--node", args->node, "node index")->required();
        cmd->add_option("--offsets", args->offsets, "decreasing normal offsets");
        cmd->callback([&work, args] { work = [args] { return run_cauchy_jump(*args); }; });
    }
    {
        auto args = std::make_shared<CauchyArgs>();
        auto* cmd = cauchy->add_subcommand("holomorphy", "Morera residuals at probes");
        cmd->fallthrough();
        add_curve_flags(cmd, *args);
        cmd->add_option("--probes", args->probes, "probe list re,im;re,im;...")->required();
        cmd->add_option("--loop-radius", args->loop_radius, "probe loop radius");
        cmd->callback(
            [&work, args] { work = [args] { return run_cauchy_holomorphy(*args); }; });
    }

    auto* accretivity = app.add_subcommand("accretivity", "cell-average cancellation ratios");
    accretivity->fallthrough();
    {
        auto args = std::make_shared<AccretivityArgs>();
        auto* cmd = accretivity->add_subcommand("report", "pseudo-accretivity verdict");
        cmd->fallthrough();
        cmd->add_option("--mesh", args->mesh, "trmesh file")->required();
        cmd->add_option("--depth", args->depth, "dyadic levels");
        cmd->add_option("--delta", args->delta, "lower-bound threshold in (0,1]");
        cmd->callback(
            [&work, args] { work = [args] { return run_accretivity_report(*args); }; });
    }
    accretivity->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const json out = work();
        std::cout << (pretty ? out.dump(2) : out.dump()) << '\n';
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
