#include "deltacol/canonical.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace deltacol {

namespace {

// Vertex of each cube index; NotFullCube unless the labels are a bijection
// onto 2^n for n = label length.
std::vector<Vertex> cube_positions(const PairColouring& c)
{
    const std::size_t n = c.word_length();
    if (n >= 32 || c.size() != (std::size_t{1} << n))
        throw Error(ErrorCode::NotFullCube, "vertex count is not 2^(label length)");
    std::vector<Vertex> at(c.size(), static_cast<Vertex>(c.size()));
    for (Vertex v = 0; v < c.size(); ++v)
        at[*c.label(v).index()] = v;
    return at;
}

struct PiMap {
    std::vector<Vertex> image;  // vertex -> vertex
    Embedding embedding;
};

PiMap compute_pi(const PairColouring& c)
{
    const auto at = cube_positions(c);
    const std::size_t n = c.word_length();
    if (c.palette() != n)
        throw Error(ErrorCode::NotFullCube, "pi needs palette equal to the cube dimension");
    const SideAssignment sides = require_odd_cycle_free(c);

    PiMap pi;
    pi.image.resize(c.size());
    pi.embedding.words.reserve(c.size());
    std::vector<bool> hit(c.size(), false);
    for (Vertex x = 0; x < c.size(); ++x) {
        BinaryWord w(n);
        for (Colour xi = 0; xi < n; ++xi)
            w.set(xi, sides.side(xi, x) != 0);
        const Vertex target = at[*w.index()];
        if (hit[target])
            throw std::logic_error("pi is not injective although every class is bipartite");
        hit[target] = true;
        pi.image[x] = target;
        pi.embedding.words.push_back(std::move(w));
    }
    return pi;
}

Level require_mu(const PairColouring& c)
{
    if (!c.mu())
        throw Error(ErrorCode::InvalidParams, "the descent needs the instance's mu");
    if (!almost_regressive_violations(c, *c.mu()).empty())
        throw Error(ErrorCode::NotAlmostRegressive,
                    "some pair has colour >= max(delta, " + std::to_string(*c.mu()) + ")");
    return *c.mu();
}

DescentProfile descend(const PairColouring& c, const PiMap& pi, Level mu, Vertex x, Vertex y)
{
    DescentProfile profile;
    Level d = delta(c.label(x), c.label(y));
    while (d >= mu) {
        if (profile.iterations > c.word_length())
            throw std::logic_error("pi descent did not terminate");
        x = pi.image[x];
        y = pi.image[y];
        ++profile.iterations;
        d = delta(c.label(x), c.label(y));
    }
    profile.xi = d;
    return profile;
}

}  // namespace

bool is_delta_colouring(const PairColouring& c)
{
    const std::size_t len = c.word_length();
    bool ok = true;
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b) {
            const Colour col = c.colour(a, b);
            if (col >= len)
                throw Error(ErrorCode::ColourOutOfRange,
                            "colour " + std::to_string(col) + " is not a coordinate of length-" +
                                std::to_string(len) + " labels");
            ok = ok && c.label(a)[col] != c.label(b)[col];
        }
    return ok;
}

CanonicalForm canonicalize(const PairColouring& c)
{
    const SideAssignment sides = require_odd_cycle_free(c);
    Embedding iota;
    iota.words.reserve(c.size());
    for (Vertex x = 0; x < c.size(); ++x) {
        BinaryWord w(c.palette());
        for (Colour xi = 0; xi < c.palette(); ++xi)
            w.set(xi, sides.side(xi, x) != 0);
        iota.words.push_back(std::move(w));
    }
    // The constructor rejects duplicate labels, so iota is checked injective here.
    PairColouring labelled(c.size(), c.palette(), std::vector<Colour>(c.pairs().begin(), c.pairs().end()),
                           iota.words);
    return CanonicalForm{std::move(iota), std::move(labelled)};
}

PairColouring extend_delta_colouring_to_cube(const PairColouring& c, unsigned cube_cap)
{
    if (!is_delta_colouring(c))
        throw Error(ErrorCode::NotDeltaColouring, "labels do not disagree at every pair's colour");
    const auto k = static_cast<unsigned>(c.word_length());
    auto cube = enumerate_cube(k, cube_cap);
    const std::size_t total = cube.size();
    if (PairColouring::pair_count(total) > kMaxPairs)
        throw Error(ErrorCode::BudgetExceeded, "cube too large to materialize");

    std::vector<Vertex> old_vertex(total, static_cast<Vertex>(total));
    for (Vertex v = 0; v < c.size(); ++v)
        old_vertex[*c.label(v).index()] = v;

    std::vector<Colour> pairs;
    pairs.reserve(PairColouring::pair_count(total));
    for (Vertex a = 0; a < total; ++a)
        for (Vertex b = a + 1; b < total; ++b) {
            const bool both_old = old_vertex[a] < total && old_vertex[b] < total;
            pairs.push_back(both_old ? c.colour(old_vertex[a], old_vertex[b]) : delta_index(k, a, b));
        }
    return PairColouring(total, std::max<Colour>(c.palette(), std::max(k, 1U)), std::move(pairs), std::move(cube));
}

std::variant<Extension, MaximalProof> extend_odd_cycle_free(const PairColouring& c)
{
    CanonicalForm canon = canonicalize(c);
    const Colour k = c.palette();
    const std::size_t n = c.size();
    if (k < 64 && n == (std::uint64_t{1} << k))
        return MaximalProof{std::move(canon.embedding), std::uint64_t{1} << k};

    const std::set<BinaryWord> image(canon.embedding.words.begin(), canon.embedding.words.end());
    BinaryWord fresh;
    for (std::uint64_t t = 0; t <= n; ++t) {
        fresh = BinaryWord::from_index(k, t);
        if (!image.contains(fresh))
            break;
    }

    Extension ext{.extended = c, .new_word = fresh, .new_colours = {}, .embedding = {}};
    ext.new_colours.reserve(n);
    for (Vertex x = 0; x < n; ++x)
        ext.new_colours.push_back(delta(canon.embedding.words[x], fresh));

    std::vector<Colour> pairs;
    pairs.reserve(PairColouring::pair_count(n + 1));
    for (Vertex a = 0; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b)
            pairs.push_back(b == n ? ext.new_colours[a] : c.colour(a, b));
    ext.extended = PairColouring(n + 1, k, std::move(pairs));
    ext.embedding = std::move(canon.embedding);
    return ext;
}

Embedding build_pi(const PairColouring& c)
{
    return compute_pi(c).embedding;
}

DescentProfile descent_profile(const PairColouring& c, Vertex x, Vertex y)
{
    if (x == y || x >= c.size() || y >= c.size())
        throw Error(ErrorCode::InvalidParams, "descent needs two distinct vertices");
    const Level mu = require_mu(c);
    const PiMap pi = compute_pi(c);
    return descend(c, pi, mu, x, y);
}

PairColouring descent_colouring(const PairColouring& c)
{
    const Level mu = require_mu(c);
    const PiMap pi = compute_pi(c);
    const auto n = static_cast<Colour>(c.word_length());
    std::vector<Colour> pairs;
    pairs.reserve(PairColouring::pair_count(c.size()));
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b) {
            const DescentProfile p = descend(c, pi, mu, a, b);
            pairs.push_back(p.iterations * mu + p.xi);
        }
    return PairColouring(c.size(), (n + 1) * mu, std::move(pairs), c.labels());
}

DescentTriangleCheck check_descent_triangle(const PairColouring& c, const CycleWitness& triple)
{
    if (triple.vertices.size() != 3)
        throw Error(ErrorCode::InvalidParams, "expected a triangle");
    const Level mu = require_mu(c);
    const PiMap pi = compute_pi(c);

    DescentTriangleCheck check;
    check.iterations = triple.colour / mu;
    check.xi = triple.colour % mu;
    std::array<Vertex, 3> v{triple.vertices[0], triple.vertices[1], triple.vertices[2]};
    for (unsigned step = 0; step < check.iterations; ++step)
        for (auto& x : v)
            x = pi.image[x];
    for (int i = 0; i < 3; ++i)
        check.images[i] = c.label(v[i]);
    check.deltas = {delta(check.images[0], check.images[1]), delta(check.images[0], check.images[2]),
                    delta(check.images[1], check.images[2])};
    check.consistent = check.deltas[0] == check.xi && check.deltas[1] == check.xi && check.deltas[2] == check.xi;
    check.contradiction = check.consistent;
    return check;
}

CycleWitness floor_violation_to_cycle(const PairColouring& c, Vertex f, Vertex g, unsigned k)
{
    if (k < 3)
        throw Error(ErrorCode::InvalidParams, "cycle length must be at least 3");
    if (f == g || f >= c.size() || g >= c.size())
        throw Error(ErrorCode::InvalidParams, "f and g must be distinct vertices");
    if (!c.has_labels())
        throw Error(ErrorCode::PreconditionFailed, "instance has no word labels");
    if (!regressivity_report(c).is_delta_regressive)
        throw Error(ErrorCode::PreconditionFailed, "colouring is not Delta-regressive");

    const Colour colour = c.colour(f, g);
    const Level m = colour + 1;
    const BinaryWord& fw = c.label(f);
    const BinaryWord& gw = c.label(g);
    if (delta(fw, gw) < m + 1)
        throw Error(ErrorCode::PreconditionFailed, "delta(f, g) < c(f, g) + 2");
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b)
            if (delta(c.label(a), c.label(b)) == m && c.colour(a, b) != colour)
                throw Error(ErrorCode::PreconditionFailed,
                            "a pair at delta " + std::to_string(m) + " is not coloured " + std::to_string(colour));

    const auto n = static_cast<unsigned>(c.word_length());
    std::vector<BinaryWord> words;
    if (k % 2 == 0) {
        words = build_cycle_witness(n, m, k);
        for (auto& w : words)
            for (Level t = 0; t < m; ++t)
                w.set(t, fw[t]);
    } else {
        words = build_cycle_witness(n, m, k, std::make_pair(fw, gw));
    }

    std::map<BinaryWord, Vertex> where;
    for (Vertex v = 0; v < c.size(); ++v)
        where.emplace(c.label(v), v);
    CycleWitness cycle;
    cycle.colour = colour;
    for (const auto& w : words) {
        auto it = where.find(w);
        if (it == where.end())
            throw Error(ErrorCode::NoRoom, "instance lacks the cycle word " + w.str());
        cycle.vertices.push_back(it->second);
    }
    if (!is_valid_cycle(c, cycle))
        throw std::logic_error("floor cycle failed re-validation");
    return cycle;
}

}  // namespace deltacol
