// casimir: point evaluations, distance sweeps and figure reproduction for
// the mass-dependent Casimir force between parallel plates.
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 I/O error.

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/casimir.hpp"

namespace {

using namespace casimir;

double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw DomainError("could not parse " + what + ": '" + text + "'");
    }
}

bool strip_suffix(std::string& text, const std::string& suffix) {
    if (text.size() < suffix.size()) return false;
    const std::string tail = text.substr(text.size() - suffix.size());
    std::string lower;
    for (char c : tail) lower.push_back(static_cast<char>(std::tolower(c)));
    if (lower != suffix) return false;
    text.resize(text.size() - suffix.size());
    return true;
}

/// Distance with unit suffix "fm" (default) or "nat" (MeV^-1), in fm.
double parse_distance_fm(std::string text) {
    if (strip_suffix(text, "nat")) return natural_to_fm(parse_double(text, "distance"));
    strip_suffix(text, "fm");
    const double v = parse_double(text, "distance");
    if (!(std::isfinite(v) && v > 0.0)) throw DomainError("distance must be positive");
    return v;
}

/// Mass in MeV, or with explicit "MeV"/"GeV" suffix.
double parse_mass_mev(std::string text) {
    if (strip_suffix(text, "gev")) return parse_double(text, "mass") * 1000.0;
    strip_suffix(text, "mev");
    return parse_double(text, "mass");
}

void check_species_name(const std::string& name) {
    if (name.empty()) throw DomainError("species name must not be empty");
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'))
            throw DomainError("species name may use letters, digits, '_' and '-' only: " + name);
}

/// Builtin names, or custom "name=massMeV" entries. Empty -> full registry.
Ensemble resolve_ensemble(const std::vector<std::string>& specs, bool precise) {
    const Ensemble registry = builtin_registry(precise);
    if (specs.empty()) return registry;
    std::vector<Species> out;
    for (const std::string& spec : specs) {
        const std::size_t eq = spec.find('=');
        if (eq == std::string::npos) {
            const Species* s = registry.find(spec);
            if (!s) throw DomainError("unknown species '" + spec + "' (try name=massMeV)");
            out.push_back(*s);
        } else {
            const std::string name = spec.substr(0, eq);
            check_species_name(name);
            out.push_back({name, ParticleMass(parse_mass_mev(spec.substr(eq + 1)))});
        }
    }
    return Ensemble(std::move(out));
}

ForceResult dispatch_force(const std::string& method, PlateSeparation a, ParticleMass m,
                           Tolerance tol) {
    if (method == "bessel") return force_bessel_series(a, m);
    if (method == "direct") return force_direct(a, m, tol);
    if (method == "integral") return force(a, m, tol);
    throw DomainError("unknown method '" + method + "' (integral|bessel|direct)");
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    return os;
}

struct PointArgs {
    std::string a_text;
    std::string mass_text;
    std::string species_name;
    bool precise = false;
    double tol_rel = 1e-10;

    PlateSeparation separation() const { return separation_from_fm(parse_distance_fm(a_text)); }

    ParticleMass mass() const {
        if (!mass_text.empty() && !species_name.empty())
            throw DomainError("give either --mass or --species, not both");
        if (!mass_text.empty()) return ParticleMass(parse_mass_mev(mass_text));
        if (!species_name.empty()) {
            const Ensemble reg = builtin_registry(precise);
            const Species* s = reg.find(species_name);
            if (!s) throw DomainError("unknown species '" + species_name + "'");
            return s->mass;
        }
        throw DomainError("one of --mass or --species is required");
    }

    Tolerance tolerance() const { return Tolerance{tol_rel, 1e-30}; }
};

void add_point_args(CLI::App* cmd, PointArgs& args) {
    cmd->add_option("--a", args.a_text, "plate distance, with unit suffix fm (default) or nat")
        ->required();
    cmd->add_option("--mass", args.mass_text, "species mass in MeV (suffix GeV accepted)");
    cmd->add_option("--species", args.species_name, "builtin species name");
    cmd->add_flag("--precise", args.precise, "use physical masses (1.022, 134.9768 MeV)");
    cmd->add_option("--tol", args.tol_rel, "relative quadrature tolerance")
        ->check(CLI::Range(1e-14, 0.1));
}

int cmd_force(const PointArgs& args, const std::string& method) {
    const double a_fm = parse_distance_fm(args.a_text);
    const PlateSeparation a = args.separation();
    const ParticleMass m = args.mass();
    const ForceResult r = dispatch_force(method, a, m, args.tolerance());
    std::printf("a_fm = %s\n", format_value(a_fm).c_str());
    std::printf("a_natural_mev_inv = %s\n", format_value(a.value).c_str());
    std::printf("mass_mev = %s\n", format_value(m.value).c_str());
    std::printf("two_a_m = %s\n", format_value(2.0 * a.value * m.value).c_str());
    std::printf("method = %s\n", to_string(r.method));
    std::printf("force_mev4 = %s\n", format_value(r.force.value).c_str());
    std::printf("magnitude_mev4 = %s\n", format_value(std::fabs(r.force.value)).c_str());
    std::printf("pressure_pa = %s\n", format_value(natural_force_to_pascal(r.force)).c_str());
    std::printf("error_estimate_mev4 = %s\n", format_value(r.error_estimate).c_str());
    std::printf("underflow = %d\n", r.underflow ? 1 : 0);
    std::printf("note = negative force denotes attraction between the plates\n");
    return 0;
}

int cmd_energy(const PointArgs& args) {
    const double a_fm = parse_distance_fm(args.a_text);
    const PlateSeparation a = args.separation();
    const ParticleMass m = args.mass();
    const EnergyPerArea e = energy_renormalized(a, m, args.tolerance());
    std::printf("a_fm = %s\n", format_value(a_fm).c_str());
    std::printf("mass_mev = %s\n", format_value(m.value).c_str());
    std::printf("energy_mev3 = %s\n", format_value(e.value).c_str());
    std::printf("magnitude_mev3 = %s\n", format_value(std::fabs(e.value)).c_str());
    std::printf("note = finite distance-dependent part; negative (binding)\n");
    return 0;
}

int cmd_species_list(bool precise) {
    const Ensemble reg = builtin_registry(precise);
    std::printf("%-14s %-12s %s\n", "name", "mass_mev", "compton_fm");
    for (const Species& s : reg.species()) {
        if (s.mass.value > 0.0)
            std::printf("%-14s %-12.6g %.10g\n", s.name.c_str(), s.mass.value,
                        hbar_c_mev_fm / s.mass.value);
        else
            std::printf("%-14s %-12.6g %s\n", s.name.c_str(), s.mass.value, "inf");
    }
    return 0;
}

std::vector<LineChart> sweep_charts(const Ensemble& ensemble, const std::vector<CurvePoint>& rows,
                                    const std::string& title, bool log_x) {
    LineChart forces;
    forces.title = title + ": force per unit area";
    forces.x = {"a [fm]", log_x};
    forces.y = {"|F|/S [MeV^4]", true};
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        SvgSeries s{ensemble.species()[i].name, {}};
        for (const CurvePoint& p : rows) s.points.emplace_back(p.a_fm, p.force_mev4[i]);
        forces.series.push_back(std::move(s));
    }
    SvgSeries tot{"total", {}};
    for (const CurvePoint& p : rows) tot.points.emplace_back(p.a_fm, p.total_mev4);
    forces.series.push_back(std::move(tot));

    LineChart ratios;
    ratios.title = title + ": contribution ratios";
    ratios.x = {"a [fm]", log_x};
    ratios.y = {"ratio", false};
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        SvgSeries s{ensemble.species()[i].name, {}};
        for (const CurvePoint& p : rows) s.points.emplace_back(p.a_fm, p.ratio[i]);
        ratios.series.push_back(std::move(s));
    }
    return {std::move(forces), std::move(ratios)};
}

int cmd_sweep(const SweepSpec& spec, const std::string& out, const std::string& svg_path) {
    const std::vector<CurvePoint> rows = run_sweep(spec);
    if (out == "-") {
        write_sweep_csv(std::cout, spec.ensemble, rows);
    } else {
        std::ofstream os = open_output(out);
        write_sweep_csv(os, spec.ensemble, rows);
    }
    if (!svg_path.empty()) {
        std::ofstream os = open_output(svg_path);
        write_svg(os, sweep_charts(spec.ensemble, rows, "sweep",
                                   spec.spacing == Spacing::logarithmic));
    }
    return 0;
}

struct FigureDef {
    const char* name;
    double a_min_fm;
    double a_max_fm;
    std::vector<Species> species;
    const char* blurb;
};

FigureDef figure_def(const std::string& figure) {
    if (figure == "fig1")
        return {"fig1",
                0.02,
                2.0,
                {{"m0gev", ParticleMass(0.0)},
                 {"m1gev", ParticleMass(1000.0)},
                 {"m2gev", ParticleMass(2000.0)},
                 {"m3gev", ParticleMass(3000.0)}},
                "force vs distance for masses 0, 1, 2, 3 GeV"};
    if (figure == "fig2")
        return {"fig2",
                10.0,
                1e5,
                {{"photon", ParticleMass(0.0)}, {"positronium", ParticleMass(1.0)}},
                "positronium force, photon+positronium total, and positronium ratio"};
    if (figure == "fig3")
        return {"fig3",
                1.0,
                1e3,
                {{"photon", ParticleMass(0.0)},
                 {"positronium", ParticleMass(1.0)},
                 {"pi0", ParticleMass(135.0)}},
                "pi0 force, three-species total, and pi0 ratio"};
    throw DomainError("unknown figure '" + figure + "' (fig1|fig2|fig3)");
}

int cmd_reproduce(const std::string& figure, const std::string& out_dir, int points) {
    const FigureDef def = figure_def(figure);
    SweepSpec spec{def.a_min_fm, def.a_max_fm, points, Spacing::logarithmic,
                   Ensemble(def.species), Tolerance{}};
    const std::vector<CurvePoint> rows = run_sweep(spec);

    std::vector<std::string> comments;
    comments.push_back(std::string(def.name) + ": " + def.blurb);
    if (figure == "fig1")
        comments.push_back(
            "mass set follows the figure caption {0,1,2,3} GeV; the accompanying text lists "
            "{1,2,3,4} GeV");
    if (figure == "fig2" || figure == "fig3") {
        const char* target = (figure == "fig2") ? "positronium" : "pi0";
        const double a_star = crossover_half_distance(target, spec.ensemble);
        comments.push_back(std::string("computed half-ratio crossover for ") + target + ": a* = " +
                           format_value(natural_to_fm(a_star)) +
                           " fm (ratio falls to half its small-a limit)");
    }
    if (figure == "fig3")
        comments.push_back(
            "pi0 ratio at the 1 fm end is ~0.288; the 1/3 small-distance limit is reached "
            "below ~0.4 fm");

    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory: " + dir.string());

    {
        std::ofstream os = open_output(dir / (figure + ".csv"));
        write_sweep_csv(os, spec.ensemble, rows, comments);
    }
    {
        std::ofstream os = open_output(dir / (figure + ".svg"));
        std::vector<LineChart> charts = sweep_charts(spec.ensemble, rows, figure, true);
        if (figure == "fig1") {
            // four standalone mass curves; no ratio panel, no total series
            charts.resize(1);
            charts[0].series.pop_back();
        }
        write_svg(os, charts);
    }
    std::printf("wrote %s and %s\n", (dir / (figure + ".csv")).string().c_str(),
                (dir / (figure + ".svg")).string().c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mass-dependent Casimir force between parallel plates"};
    app.require_subcommand(1);

    PointArgs force_args;
    std::string method = "integral";
    CLI::App* force_cmd = app.add_subcommand("force", "force per unit area at one distance");
    add_point_args(force_cmd, force_args);
    force_cmd->add_option("--method", method, "integral|bessel|direct");

    PointArgs energy_args;
    CLI::App* energy_cmd =
        app.add_subcommand("energy", "renormalized vacuum energy per unit area");
    add_point_args(energy_cmd, energy_args);

    std::string a_min_text, a_max_text, out = "-", svg_path;
    std::vector<std::string> species_specs;
    int points = 100;
    bool log_spacing = true, precise = false;
    double tol_rel = 1e-10;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "distance sweep to CSV (and SVG)");
    sweep_cmd->add_option("--a-min", a_min_text, "smallest distance (fm/nat suffix)")->required();
    sweep_cmd->add_option("--a-max", a_max_text, "largest distance (fm/nat suffix)")->required();
    sweep_cmd->add_option("--points", points, "grid size >= 2");
    sweep_cmd->add_option("--species", species_specs,
                          "species name or name=massMeV (repeatable; default: registry)");
    sweep_cmd->add_flag("--log,!--linear", log_spacing, "log (default) or linear grid");
    sweep_cmd->add_flag("--precise", precise, "physical masses for builtin species");
    sweep_cmd->add_option("--tol", tol_rel, "relative quadrature tolerance")
        ->check(CLI::Range(1e-14, 0.1));
    sweep_cmd->add_option("--out", out, "CSV path, '-' for stdout");
    sweep_cmd->add_option("--svg", svg_path, "also write an SVG line chart here");

    std::string figure, out_dir = ".";
    int fig_points = 120;
    CLI::App* repro_cmd = app.add_subcommand("reproduce", "rebuild the bundled figures");
    repro_cmd->add_option("figure", figure, "fig1|fig2|fig3")->required();
    repro_cmd->add_option("--out-dir", out_dir, "output directory");
    repro_cmd->add_option("--points", fig_points, "grid size >= 2");

    bool species_precise = false;
    CLI::App* species_cmd = app.add_subcommand("species", "list the builtin species registry");
    species_cmd->add_flag("--precise", species_precise, "physical masses");

    try {
        app.parse(argc, argv);
        if (force_cmd->parsed()) return cmd_force(force_args, method);
        if (energy_cmd->parsed()) return cmd_energy(energy_args);
        if (species_cmd->parsed()) return cmd_species_list(species_precise);
        if (repro_cmd->parsed()) return cmd_reproduce(figure, out_dir, fig_points);
        if (sweep_cmd->parsed()) {
            SweepSpec spec{parse_distance_fm(a_min_text),
                           parse_distance_fm(a_max_text),
                           points,
                           log_spacing ? Spacing::logarithmic : Spacing::linear,
                           resolve_ensemble(species_specs, precise),
                           Tolerance{tol_rel, 1e-30}};
            return cmd_sweep(spec, out, svg_path);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const ConvergenceError& e) {
        std::fprintf(stderr, "numerical failure: %s (best estimate %.17g +- %.2g)\n", e.what(),
                     e.value, e.error_estimate);
        return 3;
    } catch (const EvaluationError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 4;
    } catch (const std::filesystem::filesystem_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 4;
    }
}
