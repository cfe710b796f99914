#include "deltacol/tasks.hpp"

#include <chrono>
#include <map>
#include <set>

#include "deltacol/canonical.hpp"
#include "deltacol/detect.hpp"
#include "deltacol/error.hpp"

namespace deltacol {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ms_since(Clock::time_point start)
{
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

Json budget_json(const SearchBudget& b)
{
    return Json{{"max_nodes", b.max_nodes}, {"max_seconds", b.max_seconds}, {"deterministic", b.deterministic}};
}

SearchBudget budget_from_json(const Json& j)
{
    SearchBudget b;
    b.max_nodes = j.at("max_nodes").get<std::uint64_t>();
    b.max_seconds = j.at("max_seconds").get<std::uint64_t>();
    b.deterministic = j.at("deterministic").get<bool>();
    return b;
}

std::string hash_for(const Json& claim, const Json& witness)
{
    if (claim.contains("instance"))
        return instance_hash(instance_from_json(claim["instance"]));
    if (witness.is_object() && witness.contains("colouring"))
        return instance_hash(instance_from_json(witness["colouring"]));
    return "sha256:" + sha256_hex(claim.dump());
}

Json make_certificate(Json claim, std::string_view verdict, Json witness, std::uint64_t nodes,
                      std::uint64_t elapsed, const RunOptions& options)
{
    Json cert;
    cert["format"] = kCertificateFormat;
    cert["instance_hash"] = hash_for(claim, witness);
    cert["claim"] = std::move(claim);
    cert["verdict"] = verdict;
    cert["witness"] = std::move(witness);
    cert["stats"] = Json{{"nodes", nodes},
                         {"seconds", elapsed / 1000},
                         {"elapsed_ms", elapsed},
                         {"seed", options.seed},
                         {"generator", kGeneratorName},
                         {"budget", budget_json(options.budget)}};
    cert["validated"] = false;
    return cert;
}

ValidationReport pass() { return {true, "ok"}; }
ValidationReport fail(std::string why) { return {false, std::move(why)}; }

// Instances agree on the pairs of the first `n` vertices.
bool restricts_to(const PairColouring& big, const PairColouring& small)
{
    if (big.size() < small.size())
        return false;
    for (Vertex a = 0; a < small.size(); ++a)
        for (Vertex b = a + 1; b < small.size(); ++b)
            if (big.colour(a, b) != small.colour(a, b))
                return false;
    return true;
}

bool injective(const std::vector<BinaryWord>& words)
{
    return std::set<BinaryWord>(words.begin(), words.end()).size() == words.size();
}

// A labelled copy is a delta-colouring: an odd-cycle-free certificate that
// does not depend on the BFS sides.
bool delta_labelled(const PairColouring& c, const std::vector<BinaryWord>& words)
{
    if (words.size() != c.size() || !injective(words))
        return false;
    for (const auto& w : words)
        if (w.size() != words.front().size())
            return false;
    try {
        return is_delta_colouring(c.with_labels(words));
    } catch (const Error&) {
        return false;
    }
}

bool triangle_free(const PairColouring& c)
{
    return !brute_force_triangle(c);
}

bool maximal_by_any_oracle(const PairColouring& c, MaximalityOracle preferred)
{
    try {
        return std::holds_alternative<Maximal>(decide_maximal_triangle_free(c, preferred, 20'000'000));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded || preferred == MaximalityOracle::Backtracking)
            throw;
    }
    return std::holds_alternative<Maximal>(decide_maximal_triangle_free(c, MaximalityOracle::Backtracking));
}

RunOptions options_from(const Json& cert)
{
    RunOptions o;
    o.budget = budget_from_json(cert.at("stats").at("budget"));
    o.seed = cert.at("stats").at("seed").get<std::uint64_t>();
    return o;
}

ValidationReport compare_rerun(const Json& cert, const TaskOutput& rerun)
{
    const Json a = without_elapsed(cert);
    Json b = without_elapsed(rerun.certificate);
    b["validated"] = a.value("validated", false);
    if (a != b)
        return fail("replayed search produced a different certificate");
    return pass();
}

ValidationReport validate_impl(const Json& cert, bool rerun_searches);

TaskOutput finish(Json cert, int exit_code)
{
    cert["validated"] = validate_impl(cert, false).ok;
    return TaskOutput{std::move(cert), exit_code};
}

// ---------------------------------------------------------------------------
// Validators, one per task

ValidationReport validate_canon(const Json& cert, const PairColouring& c)
{
    const auto& w = cert["witness"];
    if (cert["verdict"] == "refuted") {
        const CycleWitness cycle = cycle_from_json(w.at("odd_cycle"));
        return is_valid_cycle(c, cycle) && cycle.vertices.size() % 2 == 1 ? pass() : fail("odd cycle invalid");
    }
    const Embedding iota = embedding_from_json(w.at("embedding"));
    const PairColouring labelled = instance_from_json(w.at("colouring"));
    if (!std::equal(labelled.pairs().begin(), labelled.pairs().end(), c.pairs().begin(), c.pairs().end()))
        return fail("canonical colouring changed a pair colour");
    if (labelled.labels() != iota.words)
        return fail("canonical colouring is not labelled by the embedding");
    return delta_labelled(c, iota.words) ? pass() : fail("embedding does not give a delta-colouring");
}

ValidationReport validate_maximal(const Json& cert, const PairColouring& c)
{
    if (!triangle_free(c))
        return fail("instance has a monochromatic triangle");
    if (cert["verdict"] == "not_maximal") {
        const VertexColouring d = vertex_colouring_from_json(cert["witness"]);
        return !find_violation(c, d) ? pass() : fail("witness d has a violation");
    }
    const auto other = cert["claim"]["oracle"] == "exhaustive" ? MaximalityOracle::Backtracking : MaximalityOracle::Exhaustive;
    return maximal_by_any_oracle(c, other) ? pass() : fail("second oracle found a witness");
}

ValidationReport validate_extend(const Json& cert, const PairColouring& c)
{
    const auto& w = cert["witness"];
    if (cert["verdict"] == "refuted") {
        const CycleWitness cycle = cycle_from_json(w.at("odd_cycle"));
        return is_valid_cycle(c, cycle) && cycle.vertices.size() % 2 == 1 ? pass() : fail("odd cycle invalid");
    }
    const Embedding iota = embedding_from_json(w.at("embedding"));
    if (!delta_labelled(c, iota.words))
        return fail("embedding does not give a delta-colouring");
    if (cert["verdict"] == "maximal_proof") {
        const auto k = c.palette();
        const bool full = k < 64 && c.size() == (std::uint64_t{1} << k);
        return full ? pass() : fail("maximal proof needs N = 2^palette");
    }
    const PairColouring ext = instance_from_json(w.at("extended"));
    if (ext.size() != c.size() + 1 || !restricts_to(ext, c))
        return fail("extension does not restrict to the instance");
    std::vector<BinaryWord> words = iota.words;
    words.push_back(BinaryWord::parse(w.at("new_word").get<std::string>()));
    return delta_labelled(ext, words) ? pass() : fail("extension is not a delta-colouring under the embedding");
}

ValidationReport validate_descent(const Json& cert, const PairColouring& c)
{
    const auto& w = cert["witness"];
    const Embedding pi = embedding_from_json(w.at("pi"));
    if (!c.mu() || !c.has_labels() || pi.words.size() != c.size() || !injective(pi.words))
        return fail("pi must be an injective map on a labelled instance with mu");
    std::map<BinaryWord, Vertex> where;
    for (Vertex v = 0; v < c.size(); ++v)
        where.emplace(c.label(v), v);
    std::vector<Vertex> image(c.size());
    for (Vertex x = 0; x < c.size(); ++x) {
        auto it = where.find(pi.words[x]);
        if (it == where.end())
            return fail("pi leaves the cube");
        image[x] = it->second;
    }
    // Separation: a pair of colour xi is split at coordinate xi.
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b) {
            const Colour xi = c.colour(a, b);
            if (xi >= pi.words[a].size() || pi.words[a][xi] == pi.words[b][xi])
                return fail("pi does not separate a pair at its colour");
        }
    const Level mu = *c.mu();
    for (const auto& row : w.at("profiles")) {
        Vertex x = row.at(0).get<Vertex>();
        Vertex y = row.at(1).get<Vertex>();
        const auto n_xy = row.at(2).get<unsigned>();
        const auto xi_xy = row.at(3).get<Level>();
        unsigned steps = 0;
        while (delta(c.label(x), c.label(y)) >= mu && steps <= c.word_length()) {
            x = image[x];
            y = image[y];
            ++steps;
        }
        if (steps != n_xy || delta(c.label(x), c.label(y)) != xi_xy || xi_xy >= mu || n_xy > c.word_length())
            return fail("profile mismatch");
    }
    if (w.at("profiles").size() != PairColouring::pair_count(c.size()))
        return fail("profiles do not cover every pair");
    return pass();
}

ValidationReport validate_cycle(const Json& cert, const PairColouring& c)
{
    const auto length = cert["claim"].at("length").get<std::size_t>();
    if (cert["verdict"] == "found") {
        const CycleWitness cycle = cycle_from_json(cert["witness"]);
        return is_valid_cycle(c, cycle) && cycle.vertices.size() == length ? pass() : fail("cycle invalid");
    }
    if (length == 3)
        return triangle_free(c) ? pass() : fail("brute-force scan found a triangle");
    if (length % 2 == 1 && std::holds_alternative<SideAssignment>(check_odd_cycle_free(c)))
        return pass();
    return !find_mono_cycle(c, length) ? pass() : fail("cycle search found a cycle");
}

ValidationReport validate_floor(const Json& cert, const PairColouring& c)
{
    if (!regressivity_report(c).is_delta_regressive)
        return fail("instance is not Delta-regressive");
    const auto levels = cert["claim"].at("levels").get<unsigned>();
    if (cert["verdict"] == "pass") {
        for (Vertex a = 0; a < c.size(); ++a)
            for (Vertex b = a + 1; b < c.size(); ++b) {
                const Level d = delta(c.label(a), c.label(b));
                // The floor through M requires c >= min(d, M) - 1.
                if (d >= 1 && c.colour(a, b) + 1 < std::min<Level>(d, levels))
                    return fail("pair below the floor");
            }
        return pass();
    }
    const auto& w = cert["witness"];
    const auto m = w.at("m").get<unsigned>();
    const Vertex f = w.at("pair").at(0).get<Vertex>();
    const Vertex g = w.at("pair").at(1).get<Vertex>();
    if (delta(c.label(f), c.label(g)) < m || c.colour(f, g) + 1 >= m)
        return fail("reported pair does not violate the floor");
    for (const auto& entry : w.at("cycles")) {
        if (entry.contains("error"))
            continue;
        const CycleWitness cycle = cycle_from_json(entry);
        if (!is_valid_cycle(c, cycle) || cycle.colour != c.colour(f, g) ||
            cycle.vertices.size() != entry.at("length").get<std::size_t>())
            return fail("floor cycle invalid");
    }
    return pass();
}

ValidationReport validate_fiber(const Json& cert, const PairColouring& c)
{
    const VertexColouring d = vertex_colouring_from_json(cert["witness"]);
    if (find_violation(c, d))
        return fail("witness d has a violation");
    const PairColouring ext = instance_from_json(cert["witness"].at("extended"));
    if (ext.size() != c.size() + 1 || !restricts_to(ext, c))
        return fail("extension does not restrict to the instance");
    for (Vertex x = 0; x < c.size(); ++x)
        if (ext.colour(x, static_cast<Vertex>(c.size())) != d.d[x])
            return fail("extension does not follow d");
    return triangle_free(ext) ? pass() : fail("extension has a triangle");
}

ValidationReport validate_search(const Json& cert, bool rerun)
{
    const auto& claim = cert["claim"];
    const std::string target = claim.at("target").get<std::string>();
    const auto& w = cert["witness"];
    if (!w.is_null()) {
        const PairColouring col = instance_from_json(w.at("colouring"));
        if (target == "min-maximal") {
            if (w.at("value").get<std::size_t>() != col.size() || col.palette() != claim.at("palette").get<Colour>())
                return fail("witness size or palette mismatch");
            if (!triangle_free(col) || !maximal_by_any_oracle(col, MaximalityOracle::Exhaustive))
                return fail("witness is not a maximal triangle-free colouring");
        } else if (target == "regressive-triangle-free") {
            if (!regressivity_report(col).is_delta_regressive || !triangle_free(col))
                return fail("witness is not a Delta-regressive triangle-free colouring");
        } else if (target == "almost-odd-cycle-free") {
            const auto mu = claim.at("mu").get<Level>();
            if (!almost_regressive_violations(col, mu).empty())
                return fail("witness is not almost Delta-regressive");
            const auto canon = check_odd_cycle_free(col);
            if (!std::holds_alternative<SideAssignment>(canon))
                return fail("witness has a monochromatic odd cycle");
        } else if (target == "odd-bound") {
            const auto k = claim.at("palette").get<unsigned>();
            const bool ocf = std::holds_alternative<SideAssignment>(check_odd_cycle_free(col));
            if (!ocf)
                return fail("counterexample is not odd-cycle-free");
            if (col.size() <= (std::size_t{1} << k)) {
                const auto ext = extend_odd_cycle_free(col);
                const bool expected = col.size() < (std::size_t{1} << k) ? std::holds_alternative<Extension>(ext)
                                                                          : std::holds_alternative<MaximalProof>(ext);
                if (expected)
                    return fail("counterexample behaves as the bound predicts");
            }
        } else {
            return fail("unknown search target " + target);
        }
    }
    if (!rerun)
        return pass();

    const RunOptions options = options_from(cert);
    TaskOutput again;
    if (target == "min-maximal")
        again = run_search_min_maximal(claim.at("palette").get<unsigned>(), claim.at("max_vertices").get<std::size_t>(),
                                       claim.at("isomorph_rejection").get<bool>(), options);
    else if (target == "regressive-triangle-free")
        again = run_search_constrained(RegressiveTriangleFree{claim.at("n").get<unsigned>()}, options);
    else if (target == "almost-odd-cycle-free")
        again = run_search_constrained(
            AlmostRegressiveOddCycleFree{claim.at("n").get<unsigned>(), claim.at("mu").get<Level>()}, options);
    else
        again = run_search_odd_bound(claim.at("palette").get<unsigned>(), claim.at("samples").get<std::uint64_t>(),
                                     options);
    return compare_rerun(cert, again);
}

ValidationReport validate_impl(const Json& cert, bool rerun_searches)
{
    try {
        if (!cert.is_object() || cert.value("format", "") != kCertificateFormat)
            return fail("not a certificate/v1 document");
        const auto& claim = cert.at("claim");
        if (cert.at("instance_hash") != hash_for(claim, cert.at("witness")))
            return fail("instance hash mismatch");
        const std::string task = claim.at("task").get<std::string>();
        if (task == "search")
            return validate_search(cert, rerun_searches);
        const PairColouring c = instance_from_json(claim.at("instance"));
        if (task == "canon")
            return validate_canon(cert, c);
        if (task == "maximal")
            return validate_maximal(cert, c);
        if (task == "extend")
            return validate_extend(cert, c);
        if (task == "descent")
            return validate_descent(cert, c);
        if (task == "cycle")
            return validate_cycle(cert, c);
        if (task == "floor")
            return validate_floor(cert, c);
        if (task == "fiber")
            return validate_fiber(cert, c);
        return fail("unknown task " + task);
    } catch (const Error& e) {
        return fail(e.what());
    } catch (const Json::exception& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
}

Json claim_with(const char* task, const PairColouring& c)
{
    return Json{{"task", task}, {"instance", instance_to_json(c)}};
}

}  // namespace

std::optional<CycleWitness> brute_force_triangle(const PairColouring& c)
{
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b) {
            const Colour col = c.colour(a, b);
            for (Vertex d = b + 1; d < c.size(); ++d)
                if (c.colour(a, d) == col && c.colour(b, d) == col)
                    return CycleWitness{{a, b, d}, col};
        }
    return std::nullopt;
}

Json without_elapsed(Json certificate)
{
    if (certificate.contains("stats") && certificate["stats"].is_object()) {
        certificate["stats"].erase("seconds");
        certificate["stats"].erase("elapsed_ms");
    }
    return certificate;
}

ValidationReport validate_certificate(const Json& certificate)
{
    return validate_impl(certificate, true);
}

TaskOutput run_canon(const PairColouring& c, const RunOptions& options)
{
    const auto start = Clock::now();
    try {
        CanonicalForm canon = canonicalize(c);
        Json witness{{"embedding", embedding_to_json(canon.embedding)}, {"colouring", instance_to_json(canon.colouring)}};
        return finish(make_certificate(claim_with("canon", c), "embedded", std::move(witness), 0, ms_since(start), options),
                      kExitHolds);
    } catch (const NotOddCycleFreeError& e) {
        Json witness{{"odd_cycle", cycle_to_json(e.witness())}};
        return finish(make_certificate(claim_with("canon", c), "refuted", std::move(witness), 0, ms_since(start), options),
                      kExitRefuted);
    }
}

TaskOutput run_maximal(const PairColouring& c, MaximalityOracle oracle, const RunOptions& options)
{
    const auto start = Clock::now();
    Json claim = claim_with("maximal", c);
    claim["oracle"] = oracle == MaximalityOracle::Exhaustive ? "exhaustive" : "backtracking";
    const auto result = decide_maximal_triangle_free(c, oracle, options.budget.max_nodes);
    if (const auto* d = std::get_if<VertexColouring>(&result))
        return finish(make_certificate(std::move(claim), "not_maximal", vertex_colouring_to_json(*d), 0,
                                       ms_since(start), options),
                      kExitRefuted);
    return finish(make_certificate(std::move(claim), "maximal", nullptr, 0, ms_since(start), options), kExitHolds);
}

TaskOutput run_extend(const PairColouring& c, const RunOptions& options)
{
    const auto start = Clock::now();
    try {
        auto result = extend_odd_cycle_free(c);
        if (auto* ext = std::get_if<Extension>(&result)) {
            Json witness{{"embedding", embedding_to_json(ext->embedding)},
                         {"new_word", ext->new_word.str()},
                         {"new_colours", ext->new_colours},
                         {"extended", instance_to_json(ext->extended)}};
            return finish(make_certificate(claim_with("extend", c), "extension", std::move(witness), 0, ms_since(start),
                                           options),
                          kExitHolds);
        }
        const auto& proof = std::get<MaximalProof>(result);
        Json witness{{"embedding", embedding_to_json(proof.embedding)}, {"cube_size", proof.cube_size}};
        return finish(
            make_certificate(claim_with("extend", c), "maximal_proof", std::move(witness), 0, ms_since(start), options),
            kExitHolds);
    } catch (const NotOddCycleFreeError& e) {
        Json witness{{"odd_cycle", cycle_to_json(e.witness())}};
        return finish(make_certificate(claim_with("extend", c), "refuted", std::move(witness), 0, ms_since(start), options),
                      kExitRefuted);
    }
}

TaskOutput run_descent(const PairColouring& c, const RunOptions& options)
{
    const auto start = Clock::now();
    const Embedding pi = build_pi(c);
    const PairColouring g = descent_colouring(c);
    const Level mu = *c.mu();
    Json profiles = Json::array();
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b) {
            const Colour code = g.colour(a, b);
            profiles.push_back(Json::array({a, b, code / mu, code % mu}));
        }
    Json witness{{"pi", embedding_to_json(pi)}, {"profiles", std::move(profiles)}, {"descent_triangle", nullptr}};
    std::string verdict = "profiles";
    int exit_code = kExitHolds;
    if (c.size() >= 3)
        if (auto tri = find_mono_cycle(g, 3)) {
            const DescentTriangleCheck check = check_descent_triangle(c, *tri);
            Json images = Json::array();
            for (const auto& w : check.images)
                images.push_back(w.str());
            witness["descent_triangle"] = Json{{"triangle", cycle_to_json(*tri)},
                                               {"images", std::move(images)},
                                               {"deltas", check.deltas},
                                               {"consistent", check.consistent},
                                               {"contradiction", check.contradiction}};
            verdict = "contradiction";
            exit_code = kExitRefuted;
        }
    return finish(make_certificate(claim_with("descent", c), verdict, std::move(witness), 0, ms_since(start), options),
                  exit_code);
}

TaskOutput run_cycle(const PairColouring& c, std::size_t length, const RunOptions& options)
{
    const auto start = Clock::now();
    Json claim = claim_with("cycle", c);
    claim["length"] = length;
    if (auto found = find_mono_cycle(c, length))
        return finish(make_certificate(std::move(claim), "found", cycle_to_json(*found), 0, ms_since(start), options),
                      kExitRefuted);
    return finish(make_certificate(std::move(claim), "none", nullptr, 0, ms_since(start), options), kExitHolds);
}

TaskOutput run_floor(const PairColouring& c, unsigned levels, unsigned even_length, unsigned odd_length,
                     const RunOptions& options)
{
    const auto start = Clock::now();
    Json claim = claim_with("floor", c);
    claim["levels"] = levels;
    claim["even_length"] = even_length;
    claim["odd_length"] = odd_length;
    FloorSchedule schedule{levels, {}};
    const auto violation = regressive_floor_check(c, schedule);
    if (!violation)
        return finish(make_certificate(std::move(claim), "pass", nullptr, 0, ms_since(start), options), kExitHolds);

    const auto [f, g] = violation->pair;
    Json cycles = Json::array();
    for (unsigned k : {even_length, odd_length}) {
        try {
            Json entry = cycle_to_json(floor_violation_to_cycle(c, f, g, k));
            entry["length"] = k;
            cycles.push_back(std::move(entry));
        } catch (const Error& e) {
            cycles.push_back(Json{{"length", k}, {"error", std::string(error_name(e.code()))}});
        }
    }
    Json witness{{"m", violation->m}, {"pair", Json::array({f, g})}, {"cycles", std::move(cycles)}};
    return finish(make_certificate(std::move(claim), "violation", std::move(witness), 0, ms_since(start), options),
                  kExitRefuted);
}

TaskOutput run_fiber(const PairColouring& c, const RunOptions& options)
{
    const auto start = Clock::now();
    const VertexColouring d = injective_fiber_witness(c);
    const PairColouring ext = extend_by_witness(c, d);
    Json witness = vertex_colouring_to_json(d);
    witness["extended"] = instance_to_json(ext);
    return finish(make_certificate(claim_with("fiber", c), "not_maximal", std::move(witness), 0, ms_since(start), options),
                  kExitHolds);
}

TaskOutput run_search_min_maximal(unsigned k, std::size_t max_n, bool isomorph_rejection, const RunOptions& options)
{
    SearchBudget budget = options.budget;
    const MinMaximalResult r = min_maximal_triangle_free_size(k, max_n, budget, isomorph_rejection);
    Json claim{{"task", "search"},
               {"target", "min-maximal"},
               {"palette", k},
               {"max_vertices", max_n},
               {"isomorph_rejection", isomorph_rejection},
               {"searched_up_to", r.searched_up_to},
               {"vertex_cap", triangle_free_vertex_bound(k)}};
    Json witness = nullptr;
    if (r.value)
        witness = Json{{"value", *r.value}, {"colouring", instance_to_json(*r.outcome.witness)}};
    Json cert = make_certificate(std::move(claim), verdict_name(r.outcome.verdict), std::move(witness),
                                 r.outcome.stats.nodes, r.outcome.stats.elapsed_ms, options);
    const int exit_code = r.outcome.verdict == Verdict::BudgetExhausted ? kExitBudget : kExitHolds;
    cert["validated"] = r.outcome.validated && validate_impl(cert, false).ok;
    return TaskOutput{std::move(cert), exit_code};
}

TaskOutput run_search_constrained(const SearchTarget& target, const RunOptions& options)
{
    const SearchOutcome outcome = search_constrained_colouring(target, options.budget);
    Json claim;
    if (const auto* t = std::get_if<RegressiveTriangleFree>(&target))
        claim = Json{{"task", "search"}, {"target", "regressive-triangle-free"}, {"n", t->n}};
    else {
        const auto& a = std::get<AlmostRegressiveOddCycleFree>(target);
        claim = Json{{"task", "search"}, {"target", "almost-odd-cycle-free"}, {"n", a.n}, {"mu", a.mu}};
    }
    Json witness = nullptr;
    if (outcome.witness)
        witness = Json{{"colouring", instance_to_json(*outcome.witness)}};
    Json cert = make_certificate(std::move(claim), verdict_name(outcome.verdict), std::move(witness),
                                 outcome.stats.nodes, outcome.stats.elapsed_ms, options);
    const int exit_code = outcome.verdict == Verdict::BudgetExhausted ? kExitBudget : kExitHolds;
    cert["validated"] = outcome.validated && validate_impl(cert, false).ok;
    return TaskOutput{std::move(cert), exit_code};
}

TaskOutput run_search_odd_bound(unsigned k, std::uint64_t samples, const RunOptions& options)
{
    const SearchOutcome outcome = verify_odd_bound(k, options.budget, OddBoundOptions{samples, options.seed});
    Json claim{{"task", "search"}, {"target", "odd-bound"}, {"palette", k}, {"samples", samples},
               {"mode", k <= 2 ? "exhaustive" : "sampled"}};
    Json witness = nullptr;
    if (outcome.witness)
        witness = Json{{"colouring", instance_to_json(*outcome.witness)}};
    Json cert = make_certificate(std::move(claim), verdict_name(outcome.verdict), std::move(witness),
                                 outcome.stats.nodes, outcome.stats.elapsed_ms, options);
    const int exit_code = outcome.verdict == Verdict::BudgetExhausted ? kExitBudget : kExitHolds;
    cert["validated"] = outcome.validated && validate_impl(cert, false).ok;
    return TaskOutput{std::move(cert), exit_code};
}

}  // namespace deltacol
