#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "deltacol/error.hpp"
#include "deltacol/extremal.hpp"
#include "oracles.hpp"

using namespace deltacol;

namespace {

SearchBudget budget(std::uint64_t nodes, unsigned workers = 1)
{
    SearchBudget b;
    b.max_nodes = nodes;
    b.workers = workers;
    return b;
}

// Any full-cube colouring into palette n with colour < bound(delta) passes `accept`.
bool exists_cube_colouring(unsigned n, const std::function<Colour(Level)>& bound,
                           const std::function<bool(const PairColouring&)>& accept)
{
    const auto cube = enumerate_cube(n);
    const std::size_t size = cube.size();
    std::vector<Colour> domain;
    for (Vertex a = 0; a < size; ++a)
        for (Vertex b = a + 1; b < size; ++b)
            domain.push_back(std::min<Colour>(n, bound(delta(cube[a], cube[b]))));
    std::vector<Colour> t(domain.size(), 0);
    if (std::any_of(domain.begin(), domain.end(), [](Colour d) { return d == 0; }))
        return false;
    while (true) {
        if (accept(PairColouring(size, n, t, cube)))
            return true;
        std::size_t i = 0;
        while (i < t.size() && t[i] + 1 == domain[i])
            t[i++] = 0;
        if (i == t.size())
            return false;
        ++t[i];
    }
}

}  // namespace

TEST_CASE("triangle_free_vertex_bound")
{
    CHECK(triangle_free_vertex_bound(1) == 2);
    CHECK(triangle_free_vertex_bound(2) == 5);
    CHECK(triangle_free_vertex_bound(3) == 16);
    CHECK(triangle_free_vertex_bound(4) == 61);
    CHECK(triangle_free_vertex_bound(5) == 326);
}

TEST_CASE("min_maximal_triangle_free_size")
{
    const auto one = min_maximal_triangle_free_size(1, 3, budget(1'000'000));
    CHECK(one.value == std::size_t{2});
    CHECK(one.outcome.verdict == Verdict::Found);
    CHECK(one.outcome.validated);
    CHECK(oracle::min_maximal(1, 3) == std::size_t{2});

    const auto two = min_maximal_triangle_free_size(2, 5, budget(10'000'000));
    CHECK(two.value == oracle::min_maximal(2, 5));
    CHECK(two.outcome.verdict == Verdict::Found);
    REQUIRE(two.outcome.witness);
    CHECK(oracle::count_triangles(*two.outcome.witness) == 0);
    CHECK_FALSE(oracle::free_vertex_colouring(*two.outcome.witness));

    const auto starved = min_maximal_triangle_free_size(2, 5, budget(1));
    CHECK(starved.outcome.verdict == Verdict::BudgetExhausted);
    CHECK_FALSE(starved.value);
}

TEST_CASE("isomorph rejection never changes verdicts")
{
    for (unsigned k = 1; k <= 2; ++k)
        for (std::size_t max_n = 1; max_n <= 4; ++max_n) {
            const auto with = min_maximal_triangle_free_size(k, max_n, budget(10'000'000), true);
            const auto without = min_maximal_triangle_free_size(k, max_n, budget(10'000'000), false);
            CHECK(with.value == without.value);
            CHECK(with.outcome.verdict == without.outcome.verdict);
            CHECK(with.value == oracle::min_maximal(k, std::min<std::size_t>(max_n, triangle_free_vertex_bound(k))));
        }
}

TEST_CASE("search_constrained_colouring matches exhaustive enumeration")
{
    const auto tf = search_constrained_colouring(RegressiveTriangleFree{2}, budget(1'000'000));
    const bool tf_exists = exists_cube_colouring(
        2, [](Level d) { return d == 0 ? Colour{2} : Colour{d}; },
        [](const PairColouring& c) { return oracle::count_triangles(c) == 0; });
    CHECK((tf.verdict == Verdict::Found) == tf_exists);
    if (tf.witness) {
        CHECK(oracle::count_triangles(*tf.witness) == 0);
        CHECK(regressivity_report(*tf.witness).is_delta_regressive);
    }

    for (Level mu = 1; mu < 2; ++mu) {
        const auto ocf = search_constrained_colouring(AlmostRegressiveOddCycleFree{2, mu}, budget(1'000'000));
        const bool ocf_exists = exists_cube_colouring(
            2, [mu](Level d) { return std::max<Colour>(d, mu); },
            [](const PairColouring& c) { return oracle::odd_cycle_free(c); });
        CHECK((ocf.verdict == Verdict::Found) == ocf_exists);
        CHECK(ocf.verdict != Verdict::BudgetExhausted);
    }

    const auto three = search_constrained_colouring(RegressiveTriangleFree{3}, budget(10'000'000));
    REQUIRE(three.verdict == Verdict::Found);
    CHECK(three.validated);
    CHECK(oracle::count_triangles(*three.witness) == 0);

    CHECK(search_constrained_colouring(RegressiveTriangleFree{2}, budget(0)).verdict == Verdict::BudgetExhausted);
    CHECK(search_constrained_colouring(AlmostRegressiveOddCycleFree{2, 1}, budget(0)).verdict ==
          Verdict::BudgetExhausted);
}

TEST_CASE("verify_odd_bound")
{
    for (unsigned k = 1; k <= 2; ++k) {
        const auto r = verify_odd_bound(k, budget(10'000'000));
        CHECK(r.verdict == Verdict::ExhaustedNone);
        CHECK_FALSE(r.witness);
    }
    const auto sampled = verify_odd_bound(3, budget(100'000'000), OddBoundOptions{200, 9});
    CHECK(sampled.verdict == Verdict::ExhaustedNone);
    CHECK(verify_odd_bound(2, budget(3)).verdict == Verdict::BudgetExhausted);
}

TEST_CASE("searches are identical across worker counts")
{
    for (unsigned workers : {2u, 4u, 8u}) {
        const auto a = min_maximal_triangle_free_size(2, 5, budget(10'000'000, 1));
        const auto b = min_maximal_triangle_free_size(2, 5, budget(10'000'000, workers));
        CHECK(a.value == b.value);
        CHECK(a.outcome.witness == b.outcome.witness);
        CHECK(a.outcome.stats.nodes == b.outcome.stats.nodes);

        const auto c = search_constrained_colouring(RegressiveTriangleFree{3}, budget(10'000'000, 1));
        const auto d = search_constrained_colouring(RegressiveTriangleFree{3}, budget(10'000'000, workers));
        CHECK(c.witness == d.witness);
        CHECK(c.stats.nodes == d.stats.nodes);

        // A cap that stops mid-search must stop at the same place.
        const auto e = search_constrained_colouring(AlmostRegressiveOddCycleFree{3, 2}, budget(5000, 1));
        const auto f = search_constrained_colouring(AlmostRegressiveOddCycleFree{3, 2}, budget(5000, workers));
        CHECK(e.verdict == Verdict::BudgetExhausted);
        CHECK(e.verdict == f.verdict);
        CHECK(e.stats.nodes == f.stats.nodes);
    }
}

TEST_CASE("canonical_pairs is invariant under vertex and colour relabelling")
{
    const auto c = random_colouring(VertexCount{6}, 3, NoConstraint{}, 31);
    const auto base = canonical_pairs(c);
    std::vector<Vertex> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    const std::vector<Colour> swap_colours{2, 0, 1};
    for (int trial = 0; trial < 30 && std::next_permutation(perm.begin(), perm.end()); ++trial) {
        std::vector<Colour> pairs;
        for (Vertex a = 0; a < 6; ++a)
            for (Vertex b = a + 1; b < 6; ++b)
                pairs.push_back(swap_colours[c.colour(perm[a], perm[b])]);
        CHECK(canonical_pairs(PairColouring(6, 3, pairs)) == base);
    }
}

TEST_CASE("search parameter validation")
{
    auto code = [](const auto& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::IoError;
    };
    CHECK(code([] { search_constrained_colouring(RegressiveTriangleFree{7}, SearchBudget{}); }) ==
          ErrorCode::InvalidParams);
    CHECK(code([] { verify_odd_bound(0, SearchBudget{}); }) == ErrorCode::InvalidParams);
}
