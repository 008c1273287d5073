#include "qnogo/cli.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qnogo/ks_gleason.hpp"
#include "qnogo/nogo.hpp"
#include "qnogo/reconstruction.hpp"
#include "qnogo/serialization.hpp"

namespace qnogo::cli {

namespace {

// Verdict thresholds; `strict` halves every one of them.
struct Tolerances {
    double trace_form = 1e-8;
    double positivity = 1e-9;   // reconstruction min eigenvalue >= -positivity
    double unit_trace = 1e-9;
    double axiom = 1e-8;
    double conflict = 1e-9;
    double spin_gap = 1e-12;
    double relation = 1e-8;
    double gleason = 1e-9;

    static Tolerances strict() {
        Tolerances t;
        t.trace_form /= 2;
        t.positivity /= 2;
        t.unit_trace /= 2;
        t.axiom /= 2;
        t.conflict /= 2;
        t.spin_gap /= 2;
        t.relation /= 2;
        t.gleason /= 2;
        return t;
    }
};

// the toolkit's documented working range
constexpr int kMinDim = 2;
constexpr int kMaxDim = 64;

void check_dim_range(int dim, const std::string& origin) {
    if (dim < kMinDim || dim > kMaxDim)
        throw ParseError(origin + ": dimension " + std::to_string(dim) +
                         " outside supported range [2, 64]");
}

Json assignment_to_json(const ValueAssignment& a) {
    Json entries = Json::array();
    for (const auto& [label, value] : a.entries)
        entries.push_back(Json{{"observable", label}, {"value", value}});
    return entries;
}

Json violations_to_json(const std::vector<ViolationRecord>& records) {
    Json list = Json::array();
    for (const auto& r : records) {
        list.push_back(Json{{"assignment", assignment_to_json(r.assignment)},
                            {"lhs", r.lhs},
                            {"rhs", r.rhs},
                            {"gap", r.gap}});
    }
    return list;
}

std::string compact_cell(const Json& v) {
    if (v.is_array()) {
        // assignment arrays render as label=value pairs
        bool all_pairs = !v.empty();
        for (const auto& e : v)
            if (!e.is_object() || !e.contains("observable") || !e.contains("value"))
                all_pairs = false;
        if (all_pairs) {
            std::string out;
            for (const auto& e : v) {
                if (!out.empty()) out += " ";
                out += e["observable"].get<std::string>() + "=" + e["value"].dump();
            }
            return out;
        }
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_table(std::ostream& os, const Json& rows, const std::string& indent) {
    std::vector<std::string> columns;
    for (const auto& row : rows)
        for (const auto& [key, value] : row.items()) {
            (void)value;
            if (std::find(columns.begin(), columns.end(), key) == columns.end())
                columns.push_back(key);
        }
    std::vector<std::size_t> widths;
    for (const auto& c : columns) widths.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            std::string cell = row.contains(columns[c]) ? compact_cell(row[columns[c]]) : "";
            widths[c] = std::max(widths[c], cell.size());
            line.push_back(std::move(cell));
        }
        cells.push_back(std::move(line));
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    os << indent;
    for (std::size_t c = 0; c < columns.size(); ++c)
        os << pad(columns[c], widths[c]) << (c + 1 < columns.size() ? "  " : "");
    os << "\n";
    for (const auto& line : cells) {
        os << indent;
        for (std::size_t c = 0; c < columns.size(); ++c)
            os << pad(line[c], widths[c]) << (c + 1 < columns.size() ? "  " : "");
        os << "\n";
    }
}

bool is_table(const Json& v) {
    if (!v.is_array() || v.empty()) return false;
    for (const auto& row : v)
        if (!row.is_object()) return false;
    return true;
}

void render_section(std::ostream& os, const Json& obj, const std::string& indent) {
    for (const auto& [key, value] : obj.items()) {
        if (is_table(value)) {
            os << indent << key << ":\n";
            render_table(os, value, indent + "  ");
        } else if (value.is_object()) {
            os << indent << key << ":\n";
            render_section(os, value, indent + "  ");
        } else if (value.is_string()) {
            os << indent << key << ": " << value.get<std::string>() << "\n";
        } else {
            os << indent << key << ": " << value.dump() << "\n";
        }
    }
}

struct GlobalOptions {
    std::string format = "text";
    std::string profile = "default";

    Format parsed_format() const { return format == "json" ? Format::json : Format::text; }
    Tolerances tolerances() const {
        return profile == "strict" ? Tolerances::strict() : Tolerances();
    }
};

Json base_inputs(const GlobalOptions& global) {
    return Json{{"format", global.format}, {"tolerance_profile", global.profile}};
}

// ---- functional resolution shared by `reconstruct` and `axioms` ----------

struct FunctionalSpec {
    std::string kind;  // born | mixed | trace | maxeig
    std::string state_path;
    std::string density_path;
    int dim = 0;
};

struct ResolvedFunctional {
    ExpectationFunctional functional;
    Json inputs;
};

ResolvedFunctional resolve_functional(const FunctionalSpec& spec, bool allow_maxeig) {
    Json inputs{{"functional", spec.kind}};
    if (spec.kind == "born") {
        if (spec.state_path.empty()) throw ParseError("--functional born requires --state FILE");
        const StateVector psi = load_state_file(spec.state_path);
        check_dim_range(psi.dim(), spec.state_path);
        inputs["state"] = spec.state_path;
        inputs["dim"] = psi.dim();
        return {born_functional(psi), std::move(inputs)};
    }
    if (spec.kind == "mixed") {
        if (spec.density_path.empty())
            throw ParseError("--functional mixed requires --density FILE");
        Matrix m = load_matrix_file(spec.density_path);
        check_dim_range(static_cast<int>(m.rows()), spec.density_path);
        DensityOperator rho(std::move(m));
        inputs["density"] = spec.density_path;
        inputs["dim"] = rho.dim();
        return {mixed_functional(rho), std::move(inputs)};
    }
    if (spec.kind == "trace" || (allow_maxeig && spec.kind == "maxeig")) {
        if (spec.dim == 0) throw ParseError("--functional " + spec.kind + " requires --dim D");
        check_dim_range(spec.dim, "--dim");
        inputs["dim"] = spec.dim;
        return {spec.kind == "trace" ? trace_functional(spec.dim)
                                     : max_eigenvalue_functional(spec.dim),
                std::move(inputs)};
    }
    throw ParseError("unknown functional kind: " + spec.kind);
}

// ---- subcommand handlers --------------------------------------------------

RunReport run_reconstruct(const GlobalOptions& global, const FunctionalSpec& spec, int probes,
                          std::uint64_t seed) {
    const Tolerances tol = global.tolerances();
    auto [functional, inputs] = resolve_functional(spec, false);
    inputs.update(base_inputs(global));
    inputs["probes"] = probes;
    inputs["seed"] = seed;

    ReconstructionOptions options;
    options.trace_form_probes = probes;
    options.probe_seed = seed;
    const ReconstructionResult recon = reconstruct_density(functional, options);

    RunReport report;
    report.command = "reconstruct";
    report.inputs = std::move(inputs);
    report.result = Json{{"functional", functional.label},
                         {"trace_form_max_residual", recon.trace_form_max_residual},
                         {"min_eigenvalue", recon.min_eigenvalue},
                         {"trace_residual", recon.trace_residual},
                         {"anti_hermitian_residual", recon.anti_hermitian_residual},
                         {"trace_form_probes", recon.trace_form_probes},
                         {"candidate", matrix_to_json(recon.candidate)}};
    const bool ok = recon.trace_form_max_residual <= tol.trace_form &&
                    recon.min_eigenvalue >= -tol.positivity &&
                    recon.trace_residual <= tol.unit_trace;
    report.verdict = ok ? Verdict::confirmed : Verdict::refuted;
    return report;
}

RunReport run_axioms(const GlobalOptions& global, const FunctionalSpec& spec, int probes,
                     std::uint64_t seed) {
    const Tolerances tol = global.tolerances();
    auto [functional, inputs] = resolve_functional(spec, true);
    inputs.update(base_inputs(global));
    inputs["probes"] = probes;
    inputs["seed"] = seed;

    const AxiomReport axioms = verify_vn_axioms(functional, probes, seed);

    const bool normalization = axioms.normalization_residual <= tol.axiom;
    const bool linearity = axioms.linearity_max_residual <= tol.axiom;
    const bool positivity = axioms.projector_min_value >= -tol.axiom;

    RunReport report;
    report.command = "axioms";
    report.inputs = std::move(inputs);
    report.result =
        Json{{"functional", functional.label},
             {"normalization_residual", axioms.normalization_residual},
             {"linearity_max_residual", axioms.linearity_max_residual},
             {"linearity_max_residual_noncommuting", axioms.linearity_max_residual_noncommuting},
             {"noncommuting_pairs", axioms.noncommuting_pairs},
             {"projector_min_value", axioms.projector_min_value},
             {"normalization_pass", normalization},
             {"linearity_pass", linearity},
             {"positivity_pass", positivity}};
    report.verdict =
        normalization && linearity && positivity ? Verdict::confirmed : Verdict::refuted;
    return report;
}

RunReport run_vn_nogo(const GlobalOptions& global, int dim, const std::string& branch) {
    const Tolerances tol = global.tolerances();
    const ConstantBranch parsed = branch == "zero" ? ConstantBranch::zero : ConstantBranch::one;
    const ContradictionReport outcome = vn_contradiction(dim, parsed);

    const bool conflict = std::abs(outcome.implied_trace - outcome.required_trace) > tol.conflict;
    RunReport report;
    report.command = "vn-nogo";
    report.inputs = base_inputs(global);
    report.inputs["dim"] = dim;
    report.inputs["branch"] = branch;
    report.result = Json{{"branch", branch},
                         {"dim", dim},
                         {"implied_trace", outcome.implied_trace},
                         {"required_trace", outcome.required_trace},
                         {"conflict", conflict}};
    report.verdict = conflict ? Verdict::confirmed : Verdict::refuted;
    return report;
}

RunReport run_spin(const GlobalOptions& global) {
    const Tolerances tol = global.tolerances();
    const auto records = spin_additivity_counterexample();
    double min_gap = records.front().gap;
    for (const auto& r : records) min_gap = std::min(min_gap, r.gap);
    const double expected = 1.0 / std::sqrt(2.0) - 0.5;

    RunReport report;
    report.command = "spin-counterexample";
    report.inputs = base_inputs(global);
    // spin units carry eigenvalues +-1/2; the bare Pauli convention doubles them
    report.result = Json{{"relation", "sigma_b = (sigma_x + sigma_y)/sqrt(2)"},
                         {"eigenvalues_spin_units", Json::array({-0.5, 0.5})},
                         {"eigenvalues_pauli_units", Json::array({-1.0, 1.0})},
                         {"assignments", static_cast<int>(records.size())},
                         {"min_gap", min_gap},
                         {"expected_min_gap", expected},
                         {"records", violations_to_json(records)}};
    const bool ok = records.size() == 8 && std::abs(min_gap - expected) <= tol.spin_gap;
    report.verdict = ok ? Verdict::confirmed : Verdict::refuted;
    return report;
}

RunReport run_joint_search(const GlobalOptions& global, const std::string& observables_path,
                           const std::vector<double>& coefficients) {
    LabelledObservables loaded = load_observables_file(observables_path);
    check_dim_range(loaded.observables.front().dim(), observables_path);
    const JointSearchResult outcome =
        joint_assignment_search(loaded.observables, coefficients, loaded.labels);

    RunReport report;
    report.command = "joint-search";
    report.inputs = base_inputs(global);
    report.inputs["observables"] = observables_path;
    report.inputs["coefficients"] = coefficients;
    report.result = Json{{"observable_count", static_cast<int>(loaded.observables.size())},
                         {"tuples_searched", outcome.tuples_searched},
                         {"satisfying_assignment", outcome.satisfying
                                                       ? assignment_to_json(*outcome.satisfying)
                                                       : Json(nullptr)},
                         {"violations", violations_to_json(outcome.violations)}};
    report.verdict = outcome.found_satisfying() ? Verdict::refuted : Verdict::confirmed;
    return report;
}

RunReport run_ks(const GlobalOptions& global, const std::string& set_name) {
    const VectorSet set = set_name == "cabello18" ? cabello18() : load_vector_set_file(set_name);
    const ContextList contexts = build_contexts(set);
    if (contexts.contexts.empty())
        throw ParseError(set_name + ": vector set contains no complete orthogonal basis");
    const ColoringOutcome outcome = ks_search(contexts, set.size());

    RunReport report;
    report.command = "ks";
    report.inputs = base_inputs(global);
    report.inputs["set"] = set_name;
    Json context_list = Json::array();
    for (const auto& ctx : contexts.contexts) context_list.push_back(ctx);
    report.result =
        Json{{"dim", set.dim},
             {"vectors", set.size()},
             {"contexts", contexts.size()},
             {"context_members", std::move(context_list)},
             {"status",
              outcome.status == ColoringStatus::uncolorable ? "uncolorable" : "colorable"},
             {"coloring", outcome.coloring ? Json(*outcome.coloring) : Json(nullptr)},
             {"nodes_explored", outcome.nodes_explored}};
    if (outcome.status == ColoringStatus::colorable &&
        !coloring_satisfies(contexts, *outcome.coloring))
        throw Error("ks: search returned a coloring that fails re-validation");
    report.verdict =
        outcome.status == ColoringStatus::uncolorable ? Verdict::confirmed : Verdict::refuted;
    return report;
}

RunReport run_gleason(const GlobalOptions& global, const std::string& density_path, int bases,
                      std::uint64_t seed) {
    const Tolerances tol = global.tolerances();
    Matrix m = load_matrix_file(density_path);
    check_dim_range(static_cast<int>(m.rows()), density_path);
    const DensityOperator rho(std::move(m));
    const double deviation = gleason_frame_check(rho, bases, seed);

    RunReport report;
    report.command = "gleason";
    report.inputs = base_inputs(global);
    report.inputs["density"] = density_path;
    report.inputs["bases"] = bases;
    report.inputs["seed"] = seed;
    report.result = Json{{"dim", rho.dim()},
                         {"min_eigenvalue", rho.min_eigenvalue()},
                         {"max_frame_deviation", deviation},
                         {"tolerance", tol.gleason}};
    report.verdict = deviation <= tol.gleason ? Verdict::confirmed : Verdict::refuted;
    return report;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::confirmed: return "confirmed";
        case Verdict::refuted: return "refuted";
        case Verdict::error: return "error";
    }
    return "error";
}

std::string render_report(const RunReport& report, Format format) {
    Json j{{"command", report.command},
           {"inputs", report.inputs},
           {"result", report.result},
           {"verdict", to_string(report.verdict)}};
    if (format == Format::json) return j.dump(2) + "\n";

    std::ostringstream os;
    os << "command: " << report.command << "\n";
    os << "verdict: " << to_string(report.verdict) << "\n";
    os << "inputs:\n";
    render_section(os, report.inputs, "  ");
    os << "result:\n";
    render_section(os, report.result, "  ");
    return os.str();
}

int run(int argc, const char* const* argv) {
    CLI::App app{"finite-dimensional hidden-variable no-go checks"};
    app.require_subcommand(1);
    app.fallthrough(true);

    GlobalOptions global;
    app.add_option("--format", global.format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--tolerance-profile", global.profile,
                   "default, or strict (all verdict tolerances halved)")
        ->check(CLI::IsMember({"default", "strict"}))
        ->capture_default_str();

    FunctionalSpec functional;
    int recon_probes = 50;
    std::uint64_t recon_seed = 1932;
    auto* reconstruct =
        app.add_subcommand("reconstruct", "rebuild the density operator behind a functional");
    reconstruct->add_option("--functional", functional.kind, "born | mixed | trace")
        ->required()
        ->check(CLI::IsMember({"born", "mixed", "trace"}));
    reconstruct->add_option("--state", functional.state_path, "state JSON file (born)");
    reconstruct->add_option("--density", functional.density_path, "density JSON file (mixed)");
    reconstruct->add_option("--dim", functional.dim, "dimension (trace)");
    reconstruct->add_option("--probes", recon_probes, "trace-form probe observables")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    reconstruct->add_option("--seed", recon_seed, "probe seed")->capture_default_str();

    FunctionalSpec axiom_functional;
    int axiom_probes = 200;
    std::uint64_t axiom_seed = 7;
    auto* axioms = app.add_subcommand("axioms", "probe normalization, linearity, positivity");
    axioms->add_option("--functional", axiom_functional.kind, "born | mixed | trace | maxeig")
        ->required()
        ->check(CLI::IsMember({"born", "mixed", "trace", "maxeig"}));
    axioms->add_option("--state", axiom_functional.state_path, "state JSON file (born)");
    axioms->add_option("--density", axiom_functional.density_path, "density JSON file (mixed)");
    axioms->add_option("--dim", axiom_functional.dim, "dimension (trace, maxeig)");
    axioms->add_option("--probes", axiom_probes, "linearity/projector probes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    axioms->add_option("--seed", axiom_seed, "probe seed")->capture_default_str();

    int nogo_dim = 0;
    std::string nogo_branch;
    auto* vn_nogo = app.add_subcommand("vn-nogo", "constant projector valuation vs unit trace");
    vn_nogo->add_option("--dim", nogo_dim, "dimension")
        ->required()
        ->check(CLI::Range(kMinDim, kMaxDim));
    vn_nogo->add_option("--branch", nogo_branch, "constant value branch")
        ->required()
        ->check(CLI::IsMember({"zero", "one"}));

    auto* spin = app.add_subcommand("spin-counterexample",
                                    "additivity over non-commuting spin components");

    std::string observables_path;
    std::vector<double> coefficients;
    auto* joint = app.add_subcommand("joint-search",
                                     "eigenvalue assignments for a linear operator relation");
    joint->add_option("--observables", observables_path, "observables JSON file (target last)")
        ->required();
    joint->add_option("--coefficients", coefficients, "comma-separated coefficients")
        ->required()
        ->delimiter(',');

    std::string set_name;
    auto* ks = app.add_subcommand("ks", "Kochen-Specker 0/1 coloring search");
    ks->add_option("--set", set_name, "cabello18 or a vector-set JSON file")->required();

    std::string density_path;
    int gleason_bases = 1000;
    std::uint64_t gleason_seed = 11;
    auto* gleason = app.add_subcommand("gleason", "frame-function additivity sampling");
    gleason->add_option("--density", density_path, "density JSON file")->required();
    gleason->add_option("--bases", gleason_bases, "random bases to sample")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gleason->add_option("--seed", gleason_seed, "basis seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitConfirmed;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    RunReport report;
    int exit_code = kExitConfirmed;
    try {
        if (reconstruct->parsed())
            report = run_reconstruct(global, functional, recon_probes, recon_seed);
        else if (axioms->parsed())
            report = run_axioms(global, axiom_functional, axiom_probes, axiom_seed);
        else if (vn_nogo->parsed())
            report = run_vn_nogo(global, nogo_dim, nogo_branch);
        else if (spin->parsed())
            report = run_spin(global);
        else if (joint->parsed())
            report = run_joint_search(global, observables_path, coefficients);
        else if (ks->parsed())
            report = run_ks(global, set_name);
        else if (gleason->parsed())
            report = run_gleason(global, density_path, gleason_bases, gleason_seed);
        exit_code = report.verdict == Verdict::confirmed ? kExitConfirmed : kExitRefuted;
    } catch (const std::exception& e) {
        report.command = app.get_subcommands().empty()
                             ? "unknown"
                             : app.get_subcommands().front()->get_name();
        report.inputs = base_inputs(global);
        report.result = Json{{"message", e.what()}};
        report.verdict = Verdict::error;
        exit_code = kExitInput;
    }
    const auto finished = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(finished - started).count();

    std::cout << render_report(report, global.parsed_format());
    std::cerr << "elapsed_ms: " << report.elapsed_ms << "\n";
    return exit_code;
}

}  // namespace qnogo::cli
