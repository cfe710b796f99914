#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "CLI11.hpp"

#include "deltacol/canonical.hpp"
#include "deltacol/detect.hpp"
#include "deltacol/error.hpp"
#include "deltacol/json_io.hpp"
#include "deltacol/tasks.hpp"

namespace deltacol::cli {

namespace {

// Optional override of the cube cap, read once per invocation.
unsigned cube_cap()
{
    if (const char* env = std::getenv("DELTACOL_CUBE_CAP")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 64)
            return static_cast<unsigned>(v);
    }
    return kDefaultCubeCap;
}

struct Globals {
    std::uint64_t seed = 0;
    std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
    std::uint64_t budget_seconds = 0;
    bool deterministic = true;
    unsigned workers = 1;
    bool json = false;
    std::string output;

    RunOptions run_options() const
    {
        RunOptions o;
        o.seed = seed;
        o.budget.max_nodes = budget_nodes;
        o.budget.max_seconds = budget_seconds;
        o.budget.deterministic = deterministic;
        o.budget.workers = std::max(1u, workers);
        return o;
    }
};

struct GenArgs {
    unsigned n = 0;
    std::size_t s = 0;
    unsigned mu = 0;
    std::optional<unsigned> cube;
    std::optional<std::size_t> vertices;
    Colour palette = 2;
    std::string constraint = "none";
};

struct CheckArgs {
    std::string input;
    std::optional<Level> mu;
};

struct RunArgs {
    std::string input;
    std::string oracle = "backtracking";
    std::size_t length = 3;
    unsigned levels = 0;
    unsigned even_length = 4;
    unsigned odd_length = 3;
    unsigned palette = 1;
    std::size_t max_vertices = 0;
    bool no_isomorph_rejection = false;
    unsigned n = 0;
    Level mu = 0;
    std::uint64_t samples = OddBoundOptions{}.samples;
};

void emit(const Json& doc, const Globals& g, std::ostream& out)
{
    if (!g.output.empty()) {
        write_text(g.output, doc.dump(2) + "\n");
        if (!g.json)
            return;
    }
    out << doc.dump(2) << "\n";
}

int cmd_gen(const std::string& kind, const GenArgs& a, const Globals& g, std::ostream& out)
{
    const unsigned cap = cube_cap();
    std::optional<PairColouring> c;
    if (kind == "delta")
        c = make_delta_colouring(a.n, cap);
    else if (kind == "observation")
        c = make_observation_colouring(a.n, cap);
    else if (kind == "transport")
        c = transport_colouring(a.s, a.mu);
    else {
        Constraint constraint = NoConstraint{};
        if (a.constraint == "regressive")
            constraint = DeltaRegressive{};
        else if (a.constraint == "almost")
            constraint = AlmostRegressive{a.mu};
        else if (a.constraint == "injective")
            constraint = InjectiveFibers{};
        else if (a.constraint != "none")
            throw Error(ErrorCode::InvalidParams, "unknown constraint " + a.constraint);
        if (a.cube.has_value() == a.vertices.has_value())
            throw Error(ErrorCode::InvalidParams, "give exactly one of --cube and --vertices");
        const SizeSpec size = a.cube ? SizeSpec{CubeSize{*a.cube}} : SizeSpec{VertexCount{*a.vertices}};
        c = random_colouring(size, a.palette, constraint, g.seed, cap);
    }
    if (!g.output.empty())
        save_instance(g.output, *c);
    if (g.output.empty() || g.json)
        out << serialize_instance(*c) << "\n";
    return kExitHolds;
}

Json pairs_json(const std::vector<VertexPair>& pairs)
{
    Json arr = Json::array();
    for (const auto& [a, b] : pairs)
        arr.push_back(Json::array({a, b}));
    return arr;
}

int cmd_check(const std::string& property, const CheckArgs& a, std::ostream& out)
{
    const PairColouring c = load_instance(a.input);
    Json report{{"property", property}, {"instance_hash", instance_hash(c)}, {"witness", nullptr}};
    bool holds = true;
    if (property == "triangle-free") {
        if (c.size() >= 3)
            if (auto tri = find_mono_cycle(c, 3)) {
                holds = false;
                report["witness"] = cycle_to_json(*tri);
            }
    } else if (property == "odd-cycle-free") {
        auto result = check_odd_cycle_free(c);
        if (auto* cycle = std::get_if<CycleWitness>(&result)) {
            holds = false;
            report["witness"] = cycle_to_json(*cycle);
        } else {
            report["witness"] = Json{{"sides", std::get<SideAssignment>(result).sides}};
        }
    } else if (property == "delta-regressive") {
        const RegressivityReport r = regressivity_report(c);
        holds = r.is_delta_regressive;
        report["min_threshold"] = r.min_threshold ? Json(*r.min_threshold) : Json(nullptr);
        if (!holds)
            report["witness"] = Json{{"violations", pairs_json(r.violations)}};
    } else if (property == "almost-regressive") {
        const std::optional<Level> mu = a.mu ? a.mu : c.mu();
        if (!mu)
            throw Error(ErrorCode::InvalidParams, "almost-regressive needs --mu or an instance mu");
        const auto violations = almost_regressive_violations(c, *mu);
        report["mu"] = *mu;
        holds = violations.empty();
        if (!holds)
            report["witness"] = Json{{"violations", pairs_json(violations)}};
    } else {
        holds = is_delta_colouring(c);
        if (!holds)
            for (Vertex x = 0; x < c.size() && report["witness"].is_null(); ++x)
                for (Vertex y = x + 1; y < c.size(); ++y)
                    if (c.label(x)[c.colour(x, y)] == c.label(y)[c.colour(x, y)]) {
                        report["witness"] = Json{{"pair", Json::array({x, y})}, {"colour", c.colour(x, y)}};
                        break;
                    }
    }
    report["holds"] = holds;
    out << report.dump(2) << "\n";
    return holds ? kExitHolds : kExitRefuted;
}

int cmd_run(const std::string& task, const RunArgs& a, const Globals& g, std::ostream& out)
{
    const RunOptions options = g.run_options();
    if (task == "validate") {
        const Json cert = Json::parse(read_text(a.input), nullptr, false);
        if (cert.is_discarded())
            throw Error(ErrorCode::MalformedInput, "certificate is not valid JSON");
        const ValidationReport report = validate_certificate(cert);
        Json doc{{"valid", report.ok}, {"message", report.message}};
        emit(doc, g, out);
        return report.ok ? kExitHolds : kExitRefuted;
    }

    TaskOutput result;
    if (task == "min-maximal") {
        result = run_search_min_maximal(a.palette, a.max_vertices, !a.no_isomorph_rejection, options);
    } else if (task == "regressive-triangle-free") {
        result = run_search_constrained(RegressiveTriangleFree{a.n}, options);
    } else if (task == "almost-odd-cycle-free") {
        result = run_search_constrained(AlmostRegressiveOddCycleFree{a.n, a.mu}, options);
    } else if (task == "odd-bound") {
        result = run_search_odd_bound(a.palette, a.samples, options);
    } else {
        const PairColouring c = load_instance(a.input);
        if (task == "canon")
            result = run_canon(c, options);
        else if (task == "maximal")
            result = run_maximal(c, a.oracle == "exhaustive" ? MaximalityOracle::Exhaustive : MaximalityOracle::Backtracking,
                                 options);
        else if (task == "extend")
            result = run_extend(c, options);
        else if (task == "descent")
            result = run_descent(c, options);
        else if (task == "cycle")
            result = run_cycle(c, a.length, options);
        else if (task == "floor")
            result = run_floor(c, a.levels, a.even_length, a.odd_length, options);
        else
            result = run_fiber(c, options);
    }
    emit(result.certificate, g, out);
    return result.exit_code;
}

// Partial certificate emitted when a non-search task runs out of budget.
Json budget_certificate(const std::string& task, const Globals& g, const std::string& message)
{
    return Json{{"format", kCertificateFormat},
                {"claim", Json{{"task", task}}},
                {"verdict", "budget_exhausted"},
                {"witness", nullptr},
                {"message", message},
                {"stats", Json{{"seed", g.seed},
                               {"budget", Json{{"max_nodes", g.budget_nodes},
                                               {"max_seconds", g.budget_seconds},
                                               {"deterministic", g.deterministic}}}}},
                {"validated", false}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pair colourings of binary-word cubes: generation, checks and certificates", "deltacol"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "64-bit seed");
    app.add_option("--budget-nodes", g.budget_nodes, "search node cap");
    app.add_option("--budget-seconds", g.budget_seconds, "wall-clock cap (non-deterministic mode only)");
    app.add_flag("--deterministic,!--no-deterministic", g.deterministic, "reproducible search (default on)");
    app.add_option("--workers", g.workers, "search worker threads")->check(CLI::Range(1u, 256u));
    app.add_flag("--json", g.json, "also print the document on standard output");
    app.add_option("-o,--output", g.output, "output file");

    std::string leaf;
    auto* gen = app.add_subcommand("gen", "write an instance")->require_subcommand(1);
    GenArgs ga;
    auto* gen_delta = gen->add_subcommand("delta", "Delta colouring of the cube 2^n");
    gen_delta->add_option("--n", ga.n)->required();
    auto* gen_obs = gen->add_subcommand("observation", "observation colouring of 2^n");
    gen_obs->add_option("--n", ga.n)->required();
    auto* gen_tr = gen->add_subcommand("transport", "s vertices coloured through 2^mu");
    gen_tr->add_option("--s", ga.s)->required();
    gen_tr->add_option("--mu", ga.mu)->required();
    auto* gen_rand = gen->add_subcommand("random", "seeded random colouring");
    gen_rand->add_option("--cube", ga.cube, "cube dimension (labelled instance)");
    gen_rand->add_option("--vertices", ga.vertices, "vertex count (unlabelled instance)");
    gen_rand->add_option("--palette", ga.palette)->required();
    gen_rand->add_option("--constraint", ga.constraint, "none | regressive | almost | injective");
    gen_rand->add_option("--mu", ga.mu, "threshold for --constraint almost");

    auto* check = app.add_subcommand("check", "test a property; report on standard output")->require_subcommand(1);
    CheckArgs ca;
    for (const char* p : {"triangle-free", "odd-cycle-free", "delta-regressive", "almost-regressive", "delta-colouring"}) {
        auto* sub = check->add_subcommand(p);
        sub->add_option("input", ca.input)->required();
        if (std::string_view(p) == "almost-regressive")
            sub->add_option("--mu", ca.mu);
    }

    auto* run_cmd = app.add_subcommand("run", "produce a certificate")->require_subcommand(1);
    RunArgs ra;
    auto with_input = [&](const char* name, const char* about) {
        auto* sub = run_cmd->add_subcommand(name, about);
        sub->add_option("input", ra.input)->required();
        return sub;
    };
    with_input("canon", "canonical delta-colouring of an odd-cycle-free instance");
    with_input("maximal", "decide maximality of a triangle-free instance")
        ->add_option("--oracle", ra.oracle)
        ->check(CLI::IsMember({"exhaustive", "backtracking"}));
    with_input("extend", "extend an odd-cycle-free instance by one vertex");
    with_input("descent", "descent profiles of an almost Delta-regressive cube instance");
    with_input("cycle", "monochromatic cycle of a given length")->add_option("--length", ra.length);
    auto* floor = with_input("floor", "floor check with cycle construction");
    floor->add_option("--levels", ra.levels)->required();
    floor->add_option("--even-length", ra.even_length);
    floor->add_option("--odd-length", ra.odd_length);
    with_input("fiber", "non-maximality witness for injective fibers");
    with_input("validate", "replay a certificate");

    auto* search = run_cmd->add_subcommand("search", "bounded search")->require_subcommand(1);
    auto* mm = search->add_subcommand("min-maximal", "least maximal triangle-free size");
    mm->add_option("--palette", ra.palette)->required();
    mm->add_option("--max-vertices", ra.max_vertices)->required();
    mm->add_flag("--no-isomorph-rejection", ra.no_isomorph_rejection);
    search->add_subcommand("regressive-triangle-free", "Delta-regressive triangle-free cube colouring")
        ->add_option("--n", ra.n)
        ->required();
    auto* almost = search->add_subcommand("almost-odd-cycle-free", "almost Delta-regressive odd-cycle-free colouring");
    almost->add_option("--n", ra.n)->required();
    almost->add_option("--mu", ra.mu)->required();
    auto* ob = search->add_subcommand("odd-bound", "finite odd-cycle-free size bound");
    ob->add_option("--palette", ra.palette)->required();
    ob->add_option("--samples", ra.samples);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        err << "deltacol: " << e.what() << "\n";
        return kExitUsage;
    }

    // Deepest selected subcommand names the action.
    const CLI::App* top = app.get_subcommands().front();
    const CLI::App* node = top;
    while (!node->get_subcommands().empty())
        node = node->get_subcommands().front();
    leaf = node->get_name();

    try {
        if (top == gen)
            return cmd_gen(leaf, ga, g, out);
        if (top == check)
            return cmd_check(leaf, ca, out);
        try {
            return cmd_run(leaf, ra, g, out);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded)
                throw;
            err << "deltacol: " << e.what() << "\n";
            emit(budget_certificate(leaf, g, e.what()), g, out);
            return kExitBudget;
        }
    } catch (const Error& e) {
        err << "deltacol: " << e.what() << "\n";
        return e.code() == ErrorCode::IoError ? kExitIo : kExitUsage;
    } catch (const Json::exception& e) {
        err << "deltacol: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "deltacol: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace deltacol::cli
