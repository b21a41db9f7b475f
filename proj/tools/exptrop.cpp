// Command-line entry point: JSON on stdout, SVG and CSV artifacts in files.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "exptrop/serialize.hpp"
#include "exptrop/svg.hpp"

#ifndef EXPTROP_VERSION
#define EXPTROP_VERSION "0.0.0"
#endif

using namespace exptrop;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitUsage = 64;

struct Common {
    std::string instance;
    std::string out;
    std::uint64_t seed = 0;
    bool pretty = false;
    bool timing = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, Common& c, bool needs_instance = true) {
    auto* opt = sub->add_option("--instance", c.instance, "instance JSON file");
    if (needs_instance) opt->required();
    sub->add_option("--out", c.out, "directory for CSV/SVG artifacts");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_flag("--pretty", c.pretty, "indented JSON");
    sub->add_flag("--timing", c.timing, "record wall-clock time in the manifest (breaks byte reproducibility)");
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path.string());
    f << text;
}

std::filesystem::path artifact(const Common& c, const std::string& name) {
    if (c.out.empty()) throw UsageError("--out DIR is required to write " + name);
    return std::filesystem::path(c.out) / name;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json check_cmd(const Instance& inst) {
    json out;
    out["additively_free"] = is_additively_free(inst.L, inst.n);
    const json report = to_json(is_rotund(inst));
    for (auto& [k, v] : report.items()) out[k] = v;
    if (inst.real_L() && inst.n <= 4) out["mixed_volume"] = to_json(mixed_volume_check(inst))["mixed_volume"];
    return out;
}

TropicalComplex trop_of(const Instance& inst) {
    if (inst.W.empty()) throw PreconditionError("instance has no W polynomials");
    return inst.W.size() == 1 ? trop_hypersurface(inst.W[0]) : trop_prevariety(inst.W);
}

json shortenings_json(const Instance& inst) {
    json list = json::array();
    for (const auto& s : enumerate_shortenings(attach_system(inst))) list.push_back(to_json(s));
    return list;
}

std::optional<FloatPoint> real_line(const Instance& inst) {
    if (inst.n != 2 || !inst.real_L() || inst.dim_L() != 1) return std::nullopt;
    const auto b = inst.basis()[0];
    return FloatPoint{b[0].re().to_double(), b[1].re().to_double()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical and amoeba tools for exponential sums on linear spaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", EXPTROP_VERSION);
    Common c;

    auto* check = app.add_subcommand("check", "additive freeness and rotundity");
    add_common(check, c);

    auto* trop = app.add_subcommand("trop", "tropicalization of W");
    add_common(trop, c);
    bool with_shortenings = false, with_collection = false, with_witness = false;
    std::string svg;
    double bound = 4.0;
    trop->add_flag("--shortenings", with_shortenings, "include the shortenings of the attached system");
    trop->add_flag("--collection", with_collection, "include the stable intersection of the complex collection");
    trop->add_flag("--witness", with_witness, "include the witness cells (non-real L)");
    trop->add_option("--svg", svg, "SVG file (n = 2)");
    trop->add_option("--bound", bound, "half width of the SVG box");

    auto* shortenings = app.add_subcommand("shortenings", "shortenings of the attached system");
    add_common(shortenings, c);

    auto* mixedvol = app.add_subcommand("mixedvol", "mixed volume");
    add_common(mixedvol, c);

    auto* amoeba = app.add_subcommand("amoeba", "Log_t samples of the amoeba of W");
    add_common(amoeba, c);
    std::vector<double> ts;
    std::size_t count = 2000;
    double radius = 5.0;
    amoeba->add_option("--t", ts, "bases t > 1")->delimiter(',');
    amoeba->add_option("--count", count, "samples per t");
    amoeba->add_option("--radius", radius, "Log_t sampling radius of the free coordinates");
    amoeba->add_option("--svg", svg, "SVG file (n = 2, first t)");
    amoeba->add_option("--bound", bound, "half width of the SVG box");

    auto* converge = app.add_subcommand("converge", "Hausdorff distance of Log_t amoebas to Trop(W)");
    add_common(converge, c);
    std::size_t converge_count = 5000;
    converge->add_option("--t", ts, "bases t > 1")->delimiter(',');
    converge->add_option("--count", converge_count, "samples per t");
    converge->add_option("--radius", radius, "sampling radius");

    auto* solve_cmd = app.add_subcommand("solve", "certified points of exp(L) and W");
    add_common(solve_cmd, c);
    SolveConfig cfg;
    std::vector<double> rect;
    solve_cmd->add_option("--tol", cfg.newton.tol, "residual tolerance");
    solve_cmd->add_option("--starts", cfg.starts, "number of Newton starts");
    solve_cmd->add_option("--rect", rect, "keep solutions with u in [a,b] x [c,d] (dim L = 1)")->expected(4);
    solve_cmd->add_option("--preview-q", cfg.preview_Q, "denominator bound of the rational-approximation preview");

    auto* render = app.add_subcommand("render", "SVG of Trop(W), an amoeba sample and Re(L)");
    add_common(render, c);
    double render_t = M_E;
    std::size_t render_count = 2000;
    render->add_option("--svg", svg, "SVG file (default OUT/render.svg)");
    render->add_option("--bound", bound, "half width of the box");
    render->add_option("--t", render_t, "Log base of the amoeba sample");
    render->add_option("--count", render_count, "amoeba sample size (0 to omit)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const auto start = std::chrono::steady_clock::now();
    json manifest{{"subcommand", sub->get_name()}, {"instance", c.instance}, {"seed", c.seed},
                  {"version", EXPTROP_VERSION}, {"schema_version", 1}};
    json config = json::object();
    json doc;

    auto emit = [&](json body) {
        if (c.timing)
            manifest["wall_clock_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        manifest["config"] = config;
        json out{{"manifest", manifest}};
        for (auto& [k, v] : body.items()) out[k] = v;
        std::cout << out.dump(c.pretty ? 2 : -1) << '\n';
    };
    auto fail = [&](const std::string& kind, const std::string& message, int code) {
        std::cerr << "error: " << message << '\n';
        emit({{"error", {{"kind", kind}, {"message", message}}}});
        return code;
    };

    try {
        const Instance inst = load_instance(c.instance);
        const std::string name = sub->get_name();
        if (name == "check") {
            doc = check_cmd(inst);
        } else if (name == "trop") {
            config = {{"shortenings", with_shortenings}, {"collection", with_collection}, {"witness", with_witness}};
            const TropicalComplex T = trop_of(inst);
            doc["tropical"] = to_json(T);
            if (with_shortenings) doc["shortenings"] = shortenings_json(inst);
            if (with_collection) doc["stable_intersection"] = to_json(collection_stable_intersection(inst));
            if (with_witness) {
                json cells = json::array();
                for (const auto& w : find_witness_cells(inst)) cells.push_back(to_json(w));
                doc["witness_cells"] = cells;
            }
            if (!svg.empty()) {
                config["bound"] = bound;
                write_file(svg, render_svg(SvgScene{bound, T.complex, {}, std::nullopt}));
                doc["svg"] = svg;
            }
        } else if (name == "shortenings") {
            doc["shortenings"] = shortenings_json(inst);
        } else if (name == "mixedvol") {
            if (inst.L.empty() && inst.W.size() == inst.n) {
                std::vector<Polytope> Ps;
                json polys = json::array();
                for (const auto& f : inst.W) {
                    Ps.push_back(newton_polytope(f));
                    polys.push_back(to_json(Ps.back()));
                }
                const ExactReal mv = mixed_volume(Ps);
                doc = {{"mode", "newton_polytopes"}, {"polytopes", polys},
                       {"mixed_volume", {{"exact", mv.to_string()}, {"value", mv.to_double()}}}};
            } else {
                const RotundityReport r = mixed_volume_check(inst);
                doc = {{"mode", "rotundity"}, {"rotund", r.rotund}, {"mixed_volume", to_json(r)["mixed_volume"]}};
            }
        } else if (name == "amoeba") {
            if (ts.empty()) ts = {M_E};
            config = {{"t", ts}, {"count", count}, {"radius", radius}};
            std::string csv = "t";
            for (std::size_t k = 0; k < inst.n; ++k) csv += ",x" + std::to_string(k + 1);
            csv += '\n';
            json samples = json::array();
            std::vector<FloatPoint> first;
            for (std::size_t k = 0; k < ts.size(); ++k) {
                const AmoebaSample s = sample_amoeba(inst, ts[k], count, c.seed + k, AmoebaOptions{radius});
                if (k == 0) first = s.points;
                for (const auto& p : s.points) {
                    csv += fmt(ts[k]);
                    for (double x : p) csv += "," + fmt(x);
                    csv += '\n';
                }
                samples.push_back({{"t", ts[k]}, {"count", s.points.size()}, {"max_residual", s.max_residual},
                                   {"source", s.source}, {"points", s.points}});
            }
            doc["samples"] = samples;
            if (!c.out.empty()) {
                write_file(artifact(c, "amoeba.csv"), csv);
                doc["csv"] = artifact(c, "amoeba.csv").string();
            }
            if (!svg.empty()) {
                config["bound"] = bound;
                write_file(svg, render_svg(SvgScene{bound, std::nullopt, first, real_line(inst)}));
                doc["svg"] = svg;
            }
        } else if (name == "converge") {
            if (ts.empty()) ts = {M_E, std::exp(2.0), std::exp(4.0), std::exp(8.0)};
            config = {{"t", ts}, {"count", converge_count}, {"radius", radius}};
            const auto table = convergence_experiment(inst, ts, converge_count, c.seed, AmoebaOptions{radius});
            json rows = json::array();
            std::string csv = "t,hausdorff\n";
            for (const auto& r : table) {
                rows.push_back({{"t", r.t}, {"hausdorff", r.hausdorff}});
                csv += fmt(r.t) + "," + fmt(r.hausdorff) + "\n";
            }
            doc["rows"] = rows;
            if (!c.out.empty()) {
                write_file(artifact(c, "converge.csv"), csv);
                doc["csv"] = artifact(c, "converge.csv").string();
            }
        } else if (name == "solve") {
            cfg.seed = c.seed;
            if (!rect.empty()) cfg.rect = Rect{rect[0], rect[1], rect[2], rect[3]};
            config = {{"tol", cfg.newton.tol}, {"starts", cfg.starts}, {"rect", rect}, {"preview_q", cfg.preview_Q}};
            const SolveResult res = solve(inst, cfg);
            json certs = json::array();
            for (const auto& cert : res.certificates) certs.push_back(to_json(cert));
            doc = {{"reduced", res.reduced}, {"census", to_json(res.census)}, {"certificates", certs}};
            if (res.reduced) doc["solved_instance"] = json::parse(instance_to_json(res.solved));
            if (res.preview) doc["preview"] = to_json(*res.preview);
        } else if (name == "render") {
            config = {{"bound", bound}, {"t", render_t}, {"count", render_count}};
            if (inst.n != 2) throw PreconditionError("render needs n = 2");
            SvgScene scene{bound, trop_of(inst).complex, {}, real_line(inst)};
            if (render_count > 0 && inst.W.size() == 1)
                scene.points = sample_amoeba(inst, render_t, render_count, c.seed, AmoebaOptions{bound}).points;
            const std::filesystem::path path = svg.empty() ? artifact(c, "render.svg") : std::filesystem::path(svg);
            write_file(path, render_svg(scene));
            doc["svg"] = path.string();
        }
        emit(doc);
        return 0;
    } catch (const UsageError& e) {
        return fail("usage", e.what(), kExitUsage);
    } catch (const NotFound& e) {
        return fail("not_found", e.what(), kExitNotFound);
    } catch (const ParseError& e) {
        return fail("parse", e.what(), kExitPrecondition);
    } catch (const Error& e) {
        return fail("precondition", e.what(), kExitPrecondition);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 1);
    }
}
