#include "cli.hpp"

#include "figures.hpp"

#include "dlv/errors.hpp"
#include "dlv/residual/residual.hpp"
#include "dlv/solutions/catalog.hpp"
#include "dlv/solver/solver.hpp"
#include "dlv/symmetry/classification.hpp"
#include "dlv/symmetry/generator.hpp"
#include "dlv/symmetry/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

namespace dlv::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int schema_version = 1;

// Inline JSON object or a path to a JSON file.
Json read_json(const std::string& text_or_path)
{
    if (text_or_path.empty()) return Json::object();
    std::string text = text_or_path;
    if (text.front() != '{' && text.front() != '[') {
        std::ifstream in(text_or_path);
        if (!in) throw ParameterError("cannot read JSON file '" + text_or_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    Json j = Json::parse(text);
    if (!j.is_object()) throw ParameterError("expected a JSON object");
    return j;
}

void check_schema(const Json& j, bool required)
{
    if (!j.contains("schema")) {
        if (required) throw ParameterError("missing field 'schema'");
        return;
    }
    if (j.at("schema") != schema_version) throw ParameterError("unsupported schema version");
}

const Json& field(const Json& j, const char* key)
{
    if (!j.contains(key)) throw ParameterError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::map<std::string, double> number_map(const Json& j)
{
    std::map<std::string, double> out;
    if (j.is_null()) return out;
    if (!j.is_object()) throw ParameterError("expected an object of numbers");
    for (const auto& [k, v] : j.items()) {
        if (!v.is_number()) throw ParameterError("value of '" + k + "' is not a number");
        out[k] = v.get<double>();
    }
    return out;
}

SystemParams system_params(const Json& j, SystemParams p)
{
    for (const auto& [k, v] : number_map(j)) {
        if (k == "d1") p.d1 = v;
        else if (k == "d2") p.d2 = v;
        else if (k == "d3") p.d3 = v;
        else if (k == "k") p.k = v;
        else if (k == "alpha") p.alpha = v;
        else throw ParameterError("unknown system parameter '" + k + "'");
    }
    p.validate();
    return p;
}

SolutionId parse_solution(const std::string& s)
{
    const auto id = solution_id_from_string(s);
    if (!id) throw ParameterError("unknown solution '" + s + "'");
    return *id;
}

ExactSolution build_solution(const std::string& name, const std::string& params, const std::string& constants)
{
    const SolutionId id = parse_solution(name);
    const auto p = system_params(read_json(params), default_params(id));
    return make_solution(id, p, number_map(read_json(constants)));
}

Json point_json(const Point& p) { return Json{{"t", p.t}, {"x", p.x}, {"y", p.y}}; }

Json to_json(const ResidualReport& r)
{
    return Json{{"schema", schema_version},
                {"solution", r.solution},
                {"system", r.system},
                {"samples", r.samples.count},
                {"seed", r.samples.seed},
                {"mode", r.mode},
                {"tolerance", r.tolerance},
                {"max_abs", r.max_abs},
                {"max_rel", r.max_rel},
                {"worst_point", point_json(r.worst_point)},
                {"fd_points", r.fd_points},
                {"fd_max_rel", r.fd_max_rel},
                {"fd_max_rel_half", r.fd_max_rel_half},
                {"fd_consistent", r.fd_consistent},
                {"pass", r.pass}};
}

Json to_json(const CaseReport& r)
{
    Json gens = Json::array();
    for (const auto& g : r.generators)
        gens.push_back({{"label", g.label},
                        {"max_de_residual", g.max_de_residual},
                        {"q_spread", g.q_spread},
                        {"template_diff", g.template_diff},
                        {"h_residual", g.h_residual},
                        {"d_relations", g.d_relations},
                        {"pass", g.pass}});
    return Json{{"case", to_string(r.id)},
                {"samples", r.samples},
                {"seed", r.seed},
                {"tolerance", de_tolerance},
                {"max_de_residual", r.max_de_residual},
                {"generators", gens},
                {"pass", r.pass}};
}

Json to_json(const ErrorNorms& e) { return Json{{"linf", e.linf}, {"l2", e.l2}}; }

void emit(const Json& j, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParameterError("cannot write '" + path + "'");
    f << j.dump(2) << '\n';
}

LieGenerator named_generator(const std::string& name)
{
    const auto a = case10_algebra();
    if (name == "P1") return a.P1;
    if (name == "P2") return a.P2;
    if (name == "J12") return a.J12;
    if (name == "Pt" || name == "d_t") return a.Pt;
    if (name == "D") return a.D;
    if (name == "Hw") {
        LieGenerator g;
        g.label = "(x sin 2t + y cos 2t) d_w";
        g.b[2] = coeff([](auto t, auto x, auto y) { return x * sin(2.0 * t) + y * cos(2.0 * t); });
        return g;
    }
    if (name == "1w") {
        LieGenerator g;
        g.label = "1 d_w";
        g.b[2] = coeff([](auto, auto, auto) { return 1.0; });
        return g;
    }
    throw ParameterError("unknown generator '" + name + "' (P1, P2, J12, Pt, D, Hw, 1w)");
}

// Options shared by the certifying commands.
struct SampleOptions {
    int samples = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;

    void add(CLI::App* app, double default_tol)
    {
        seed = default_seed();
        tol = default_tol;
        app->add_option("--samples", samples, "Number of sample points (default: the solution's)");
        app->add_option("--seed", seed, "Sampling seed (default 42 or DLV_SEED)");
        app->add_option("--tol", tol, "Relative residual tolerance");
    }
    SampleSpec apply(SampleSpec s) const
    {
        if (samples > 0) s.count = samples;
        s.seed = seed;
        return s;
    }
};

// ---------------------------------------------------------------------------

int cmd_catalog(std::ostream& out)
{
    Json sols = Json::array();
    for (const auto& s : list_solutions())
        sols.push_back({{"id", s.name},
                        {"frame", to_string(s.frame)},
                        {"target", s.target},
                        {"constants", s.constants},
                        {"conditions", s.conditions},
                        {"singular_set", s.singular_set}});
    Json kinds = Json::array();
    for (const auto& k : system_kinds())
        kinds.push_back({{"kind", k.name},
                         {"pde", k.is_pde},
                         {"components", k.components},
                         {"description", k.description},
                         {"constants", k.constants}});
    Json cases = Json::array();
    for (int i = 1; i <= 11; ++i) {
        const auto id = static_cast<StreamCase>(i);
        cases.push_back({{"case", to_string(id)},
                         {"psi", make_case(id, default_stream_params(id)).formula()},
                         {"default_params", default_stream_params(id)}});
    }
    Json profiles = Json::array();
    for (const auto& p : profile_catalog()) profiles.push_back({{"name", p.name}, {"system", to_string(p.target.kind)}});
    out << Json{{"schema", schema_version},
                {"solutions", sols},
                {"systems", kinds},
                {"streams", cases},
                {"profiles", profiles}}
               .dump(2)
        << '\n';
    return exit_pass;
}

struct CertifyArgs {
    std::string solution, profile, system, params, constants, out;
    SampleOptions s;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out)
{
    ResidualReport rep;
    if (!a.profile.empty()) {
        const auto all = profile_catalog();
        auto it = std::find_if(all.begin(), all.end(), [&](const NamedProfile& p) { return p.name == a.profile; });
        if (it == all.end()) throw ParameterError("unknown profile '" + a.profile + "'");
        SampleSpec spec;
        spec.seed = a.s.seed;
        spec.count = a.s.samples > 0 ? a.s.samples : 300;
        spec.x = it->z;
        spec.margin = 1e-2;
        rep = certify_profile(it->target, it->profile, spec, a.s.tol, it->name, it->valid);
    } else {
        if (a.solution.empty()) throw ParameterError("certify needs --solution or --profile");
        ExactSolution sol = build_solution(a.solution, a.params, a.constants);
        if (!a.system.empty()) {
            const auto kind = system_kind_from_string(a.system);
            if (!kind) throw ParameterError("unknown system kind '" + a.system + "'");
            if (*kind != sol.target.kind && *kind == SystemKind::pde_full) sol = to_lab_frame(sol);
            if (*kind != sol.target.kind && *kind == SystemKind::pde_rotated_free)
                sol = rotating_frame(FrameDirection::to_rotated, sol);
            if (*kind != sol.target.kind)
                throw ParameterError(a.solution + " is not a solution of " + a.system + " (target: " +
                                     to_string(sol.target.kind) + ")");
        }
        rep = certify(sol.target, *sol.field, a.s.apply(sol.domain), a.s.tol, sol.label, sol.margin);
    }
    emit(to_json(rep), a.out, out);
    return rep.pass ? exit_pass : exit_fail;
}

struct ClassifyArgs {
    std::string which = "all", params, system, f = "identity", out;
    std::vector<double> coeffs;
    int samples = 200;
    std::uint64_t seed = 0;
};

int cmd_verify_classification(const ClassifyArgs& a, std::ostream& out)
{
    std::vector<StreamCase> ids;
    if (a.which == "all") {
        for (int i = 1; i <= 11; ++i) ids.push_back(static_cast<StreamCase>(i));
    } else {
        const auto id = stream_case_from_string(a.which);
        if (!id || *id == StreamCase::custom) throw ParameterError("unknown case '" + a.which + "'");
        ids.push_back(*id);
    }
    const auto fk = f_kind_from_string(a.f);
    if (!fk) throw ParameterError("unknown F kind '" + a.f + "'");
    const FChoice f{*fk, a.coeffs};
    const StreamParams params = number_map(read_json(a.params));
    const SystemParams sys = system_params(read_json(a.system), {1.0, 2.0, 3.0, 1.0, 0.0});

    Json cases = Json::array();
    bool pass = true;
    for (auto id : ids) {
        const auto rep = verify_case(id, params, f, sys, a.samples, a.seed);
        pass = pass && rep.pass;
        cases.push_back(to_json(rep));
    }
    emit(Json{{"schema", schema_version}, {"cases", cases}, {"pass", pass}}, a.out, out);
    return pass ? exit_pass : exit_fail;
}

struct FlowArgs {
    std::string generator, solution, params, constants, out;
    double eps = 0.0;
    SampleOptions s;
};

int cmd_flow(const FlowArgs& a, std::ostream& out)
{
    const ExactSolution sol = to_lab_frame(build_solution(a.solution, a.params, a.constants));
    const LieGenerator g = named_generator(a.generator);
    const ExactSolution moved = transport_solution(g, a.eps, sol);
    const SampleSpec spec = a.s.apply(moved.domain);
    const auto rep = certify(moved.target, *moved.field, spec, a.s.tol, moved.label, moved.margin);

    // Largest change relative to the original at valid sample points.
    double change = 0.0;
    const auto pts = sample_points(spec, [&](const Point& p, double m) {
        return !moved.field->valid(p, m) || !sol.field->valid(p, m);
    });
    for (const Point& p : pts) {
        const auto x = sol.field->values(p), y = moved.field->values(p);
        for (int i = 0; i < 3; ++i) change = std::max(change, std::abs(x[i] - y[i]));
    }
    Json j = to_json(rep);
    j["generator"] = g.label;
    j["eps"] = a.eps;
    j["max_change"] = change;
    emit(j, a.out, out);
    return rep.pass ? exit_pass : exit_fail;
}

struct EquivArgs {
    std::string kind = "scaling_rotation", solution, params, constants, transform, out;
    SampleOptions s;
};

int cmd_equivalence(const EquivArgs& a, std::ostream& out)
{
    const auto kind = equivalence_kind_from_string(a.kind);
    if (!kind) throw ParameterError("unknown equivalence kind '" + a.kind + "'");
    EquivalenceParams e;
    for (const auto& [k, v] : number_map(read_json(a.transform))) {
        if (k == "alpha0") e.alpha0 = v;
        else if (k == "alpha1") e.alpha1 = v;
        else if (k == "alpha2") e.alpha2 = v;
        else if (k == "alpha3") e.alpha3 = v;
        else if (k == "t0") e.t0 = v;
        else if (k == "x0") e.x0 = v;
        else if (k == "y0") e.y0 = v;
        else if (k == "psi0") e.psi0 = v;
        else if (k == "sign") e.sign = static_cast<int>(v);
        else if (k == "H_const") {
            e.H = coeff([v](auto t, auto, auto) { return 0.0 * t + v; });
        } else throw ParameterError("unknown transform parameter '" + k + "'");
    }
    const auto sol = build_solution(a.solution, a.params, a.constants);
    const auto moved = equivalence_transform(*kind, e, sol);
    const auto rep = certify(moved.target, *moved.field, a.s.apply(moved.domain), a.s.tol, moved.label, moved.margin);
    Json j = to_json(rep);
    const auto& p = moved.target.params;
    j["transformed_params"] = {{"d1", p.d1}, {"d2", p.d2}, {"d3", p.d3}, {"k", p.k}};
    emit(j, a.out, out);
    return rep.pass ? exit_pass : exit_fail;
}

SimulationConfig simulation_config(const Json& j)
{
    check_schema(j, true);
    SimulationConfig c;
    const std::string name = field(j, "solution").get<std::string>();
    if (name == "heat_kernel") {
        const auto p = system_params(j.value("params", Json::object()), {1.0, 1.0, 1.0, 1.0, 0.0});
        c.exact = heat_kernel_solution(p, j.value("tau", 0.1));
    } else {
        const SolutionId id = parse_solution(name);
        const auto p = system_params(j.value("params", Json::object()), default_params(id));
        c.exact = make_solution(id, p, number_map(j.value("constants", Json::object())));
        if (c.exact.frame != Frame::radial) c.exact = to_lab_frame(c.exact);
    }
    const Json& g = field(j, "grid");
    c.grid.nx = field(g, "nx").get<int>();
    c.grid.ny = g.value("ny", c.exact.target.kind == SystemKind::pde_radial ? 1 : c.grid.nx);
    const auto x = field(g, "x").get<std::vector<double>>();
    if (x.size() != 2) throw ParameterError("grid.x must be [lo, hi]");
    c.grid.x = {x[0], x[1]};
    if (c.exact.target.kind != SystemKind::pde_radial) {
        const auto y = field(g, "y").get<std::vector<double>>();
        if (y.size() != 2) throw ParameterError("grid.y must be [lo, hi]");
        c.grid.y = {y[0], y[1]};
    }
    c.t_start = j.value("t_start", 0.0);
    c.t_end = field(j, "t_end").get<double>();
    c.cfl = j.value("cfl", 0.4);
    const auto scheme = convection_from_string(j.value("scheme", std::string("central")));
    if (!scheme) throw ParameterError("scheme must be central or upwind");
    c.scheme = *scheme;
    c.frames = j.value("frames", 1);
    const auto boundary = j.value("boundary", std::string("exact"));
    if (boundary != "exact" && boundary != "no_flux") throw ParameterError("boundary must be exact or no_flux");
    c.no_flux = boundary == "no_flux";
    return c;
}

struct SimulateArgs {
    std::string config, csv, out;
    int levels = 3;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out)
{
    const auto cfg = simulation_config(read_json(a.config));
    const auto res = simulate(cfg);
    if (!a.csv.empty()) {
        std::ofstream f(a.csv);
        if (!f) throw ParameterError("cannot write '" + a.csv + "'");
        write_csv(f, Discretization(cfg.exact.target, cfg.grid, cfg.scheme), res.frames);
    }
    emit(Json{{"schema", schema_version},
              {"solution", cfg.exact.label},
              {"system", to_string(cfg.exact.target.kind)},
              {"grid", {{"nx", res.grid.nx}, {"ny", res.radial ? 1 : res.grid.ny}}},
              {"scheme", to_string(cfg.scheme)},
              {"t_start", cfg.t_start},
              {"t_end", cfg.t_end},
              {"dt", res.dt},
              {"steps", res.steps},
              {"frames", res.frames.size()},
              {"error", to_json(res.error)}},
         a.out, out);
    return exit_pass;
}

int cmd_convergence(const SimulateArgs& a, std::ostream& out)
{
    const auto cfg = simulation_config(read_json(a.config));
    const auto rep = convergence_study(cfg, a.levels);
    Json levels = Json::array();
    for (const auto& l : rep.levels)
        levels.push_back({{"nx", l.nx}, {"ny", l.ny}, {"dt", l.dt}, {"steps", l.steps}, {"error", to_json(l.error)}});
    emit(Json{{"schema", schema_version},
              {"solution", cfg.exact.label},
              {"scheme", to_string(cfg.scheme)},
              {"levels", levels},
              {"orders_linf", rep.orders_linf},
              {"orders_l2", rep.orders_l2}},
         a.out, out);
    return exit_pass;
}

struct FigureArgs {
    std::string id, outdir = ".";
    int n = 101;
};

int cmd_figure(const FigureArgs& a, std::ostream& out)
{
    const FigureSpec spec = figure_spec(a.id);
    const ExactSolution sol = figure_solution(spec);
    namespace fs = std::filesystem;
    fs::create_directories(a.outdir);
    const fs::path csv = fs::path(a.outdir) / (a.id + ".csv");
    const fs::path gp = fs::path(a.outdir) / (a.id + ".gp");

    std::ofstream f(csv);
    if (!f) throw ParameterError("cannot write '" + csv.string() + "'");
    f << "t,x,y,u,v,w\n" << std::setprecision(15);
    int skipped = 0;
    for (double s : spec.slices) {
        for (int j = 0; j < a.n; ++j) {
            for (int i = 0; i < a.n; ++i) {
                const double a1 = -1.0 + 2.0 * i / (a.n - 1);
                const double a2 = spec.xy_surfaces ? -1.0 + 2.0 * j / (a.n - 1) : std::numbers::pi * j / (a.n - 1);
                const Point p = spec.xy_surfaces ? Point{s, a1, a2} : Point{a2, a1, s};
                if (!sol.field->valid(p, 0.0)) {
                    ++skipped;
                    f << p.t << ',' << p.x << ',' << p.y << ",nan,nan,nan\n";
                    continue;
                }
                const auto v = sol.field->values(p);
                f << p.t << ',' << p.x << ',' << p.y << ',' << v[0] << ',' << v[1] << ',' << v[2] << '\n';
            }
        }
    }

    std::ofstream g(gp);
    if (!g) throw ParameterError("cannot write '" + gp.string() + "'");
    g << "set datafile separator ','\nset key off\nset hidden3d\n";
    g << (spec.xy_surfaces ? "set xlabel 'x'\nset ylabel 'y'\n" : "set xlabel 'x'\nset ylabel 't'\n");
    g << "set multiplot layout 1," << spec.slices.size() << "\n";
    g << std::setprecision(15);
    const std::string file = "'" + csv.filename().string() + "'";
    const char* col = spec.xy_surfaces ? "$1" : "$3";
    const char* axis2 = spec.xy_surfaces ? "3" : "1";
    for (double s : spec.slices) {
        g << "set title '" << (spec.xy_surfaces ? "t = " : "y = ") << s << "'\n";
        g << "splot";
        const char* colours[] = {"blue", "gold", "dark-green"};
        for (int c = 0; c < 3; ++c)
            g << (c ? "," : "") << " " << file << " using 2:" << axis2 << ":(" << col << " == " << s << " ? $" << 4 + c
              << " : 1/0) with points pt 7 ps 0.2 lc rgb '" << colours[c] << "'";
        g << "\n";
    }
    g << "unset multiplot\n";

    const auto dom = dominance_check(sol, 101, dominance_times());
    Json consts = Json::object();
    for (const auto& [k, v] : spec.constants) consts[k] = v;
    Json j{{"schema", schema_version},
           {"figure", a.id},
           {"csv", csv.string()},
           {"script", gp.string()},
           {"constants", consts},
           {"slices", spec.slices},
           {"skipped_singular", skipped},
           {"dominance",
            {{"samples", dom.samples},
             {"valid", dom.valid},
             {"violations", dom.violations},
             {"min_gap", dom.min_gap},
             {"worst_point", point_json(dom.worst)},
             {"holds", dom.holds}}},
           {"notes", spec.notes}};
    emit(j, "", out);
    return exit_pass;
}

} // namespace

std::uint64_t default_seed()
{
    const char* env = std::getenv("DLV_SEED");
    if (!env || !*env) return 42;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw ParameterError("DLV_SEED must be an unsigned integer");
    return v;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    try {
        CLI::App app{"Exact solutions, symmetries and simulations of the diffusive Lotka-Volterra system with convection",
                     "dlv"};
        app.require_subcommand(1);

        auto* catalog = app.add_subcommand("catalog", "List solutions, systems, streams and profiles");

        CertifyArgs ca;
        auto* certify_cmd = app.add_subcommand("certify", "Certify a catalog solution or ODE profile");
        certify_cmd->add_option("--solution", ca.solution, "Solution id, e.g. S_RATIONAL");
        certify_cmd->add_option("--profile", ca.profile, "ODE profile name instead of a solution");
        certify_cmd->add_option("--system", ca.system, "Target system kind (default: the solution's)");
        certify_cmd->add_option("--params", ca.params, "System parameters as JSON or file");
        certify_cmd->add_option("--constants", ca.constants, "Solution constants as JSON or file");
        certify_cmd->add_option("--out", ca.out, "Report path (default stdout)");

        ClassifyArgs cl;
        auto* classify = app.add_subcommand("verify-classification", "Check the symmetry classification rows");
        classify->add_option("case", cl.which, "case1 ... case11 or all");
        classify->add_option("--params", cl.params, "Row parameters as JSON or file");
        classify->add_option("--system", cl.system, "Diffusivities as JSON (default d = 1, 2, 3)");
        classify->add_option("--f", cl.f, "F kind: identity, square, sin, ln, exp, poly");
        classify->add_option("--coeffs", cl.coeffs, "Polynomial coefficients for --f poly");
        classify->add_option("--samples", cl.samples, "Sample points per row");
        cl.seed = default_seed();
        classify->add_option("--seed", cl.seed, "Sampling seed");
        classify->add_option("--out", cl.out, "Report path (default stdout)");

        FlowArgs fa;
        auto* flow = app.add_subcommand("flow", "Transport a solution along a symmetry and certify it");
        flow->add_option("--generator", fa.generator, "P1, P2, J12, Pt, D, Hw or 1w")->required();
        flow->add_option("--eps", fa.eps, "Group parameter")->required();
        flow->add_option("--solution", fa.solution, "Solution id")->required();
        flow->add_option("--params", fa.params, "System parameters as JSON or file");
        flow->add_option("--constants", fa.constants, "Solution constants as JSON or file");
        flow->add_option("--out", fa.out, "Report path (default stdout)");

        EquivArgs ea;
        auto* equiv = app.add_subcommand("equivalence", "Apply an equivalence transformation and certify");
        equiv->add_option("--kind", ea.kind, "scaling_rotation or swap");
        equiv->add_option("--solution", ea.solution, "Solution id")->required();
        equiv->add_option("--transform", ea.transform,
                          "alpha0..alpha3, t0, x0, y0, psi0, sign, H_const as JSON or file");
        equiv->add_option("--params", ea.params, "System parameters as JSON or file");
        equiv->add_option("--constants", ea.constants, "Solution constants as JSON or file");
        equiv->add_option("--out", ea.out, "Report path (default stdout)");

        SimulateArgs sa;
        auto* sim = app.add_subcommand("simulate", "Run the method-of-lines solver against an exact solution");
        sim->add_option("--config", sa.config, "Run configuration JSON")->required();
        sim->add_option("--csv", sa.csv, "Field dump path");
        sim->add_option("--out", sa.out, "Report path (default stdout)");

        SimulateArgs va;
        auto* conv = app.add_subcommand("convergence", "Grid-refinement study");
        conv->add_option("--config", va.config, "Run configuration JSON")->required();
        conv->add_option("--levels", va.levels, "Number of grids (>= 3)");
        conv->add_option("--out", va.out, "Report path (default stdout)");

        FigureArgs fg;
        auto* fig = app.add_subcommand("figure", "Emit surface data, a gnuplot script and the dominance check");
        fig->add_option("id", fg.id, "fig1, fig2 or fig3")->required();
        fig->add_option("--outdir", fg.outdir, "Output directory");
        fig->add_option("--n", fg.n, "Nodes per axis");

        ca.s.add(certify_cmd, 1e-9);
        fa.s.add(flow, 1e-7);
        ea.s.add(equiv, 1e-9);

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            std::ostringstream o, r;
            const int code = app.exit(e, o, r);
            out << o.str();
            err << r.str();
            return code == 0 ? exit_pass : exit_config;
        }

        if (*catalog) return cmd_catalog(out);
        if (*certify_cmd) return cmd_certify(ca, out);
        if (*classify) return cmd_verify_classification(cl, out);
        if (*flow) return cmd_flow(fa, out);
        if (*equiv) return cmd_equivalence(ea, out);
        if (*sim) return cmd_simulate(sa, out);
        if (*conv) return cmd_convergence(va, out);
        if (*fig) return cmd_figure(fg, out);
        return exit_config;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const ParameterError& e) {
        err << "configuration error: " << e.what() << '\n';
        return exit_config;
    } catch (const nlohmann::json::exception& e) {
        err << "schema error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_fail;
    }
}

} // namespace dlv::cli
