#include "doctest.h"

#include "deltacol/detect.hpp"
#include "deltacol/error.hpp"
#include "oracles.hpp"

using namespace deltacol;

namespace {

ErrorCode code_of(const auto& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::IoError;
}

PairColouring floor_instance()
{
    const auto cube = enumerate_cube(3);
    std::vector<Colour> pairs;
    for (Vertex a = 0; a < 8; ++a)
        for (Vertex b = a + 1; b < 8; ++b)
            pairs.push_back(delta(cube[a], cube[b]) == 2 ? 1 : 0);
    return PairColouring(8, 3, pairs, cube);
}

std::vector<std::string> words_of(const PairColouring& c, const CycleWitness& w)
{
    std::vector<std::string> out;
    for (Vertex v : w.vertices)
        out.push_back(c.label(v).str());
    return out;
}

}  // namespace

TEST_CASE("find_mono_cycle on the Delta colouring of 2^2")
{
    const auto d2 = make_delta_colouring(2);
    CHECK_FALSE(find_mono_cycle(d2, 3));
    const auto four = find_mono_cycle(d2, 4);
    REQUIRE(four);
    CHECK(four->colour == 0);
    CHECK(words_of(d2, *four) == std::vector<std::string>{"00", "10", "01", "11"});
    CHECK(is_valid_cycle(d2, *four));
    CHECK(code_of([&] { find_mono_cycle(d2, 2); }) == ErrorCode::InvalidParams);
    CHECK(code_of([&] { find_mono_cycle(d2, 5); }) == ErrorCode::InvalidParams);
}

TEST_CASE("observation colouring of 2^3 has a monochromatic triangle")
{
    const auto o3 = make_observation_colouring(3);
    const auto tri = find_mono_cycle(o3, 3);
    REQUIRE(tri);
    CHECK(tri->colour == 1);
    CHECK(words_of(o3, *tri) == std::vector<std::string>{"000", "001", "110"});
    CHECK(oracle::count_triangles(o3) > 0);
}

TEST_CASE("triangle search agrees with triple enumeration")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto c = random_colouring(VertexCount{3 + seed % 8}, 2 + seed % 3, NoConstraint{}, seed);
        const auto tri = find_mono_cycle(c, 3);
        CHECK(tri.has_value() == (oracle::count_triangles(c) > 0));
        if (tri)
            CHECK(is_valid_cycle(c, *tri));
    }
}

TEST_CASE("cycle search agrees with path enumeration for every length")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 4 + seed % 4;
        const auto c = random_colouring(VertexCount{n}, 2 + seed % 2, NoConstraint{}, 100 + seed);
        for (std::size_t len = 3; len <= n; ++len) {
            const auto found = find_mono_cycle(c, len);
            CHECK(found.has_value() == oracle::has_mono_cycle(c, len));
            if (found) {
                CHECK(found->vertices.size() == len);
                CHECK(is_valid_cycle(c, *found));
            }
        }
    }
}

TEST_CASE("check_odd_cycle_free")
{
    const auto d2 = make_delta_colouring(2);
    const auto sides = check_odd_cycle_free(d2);
    REQUIRE(std::holds_alternative<SideAssignment>(sides));
    const auto& s = std::get<SideAssignment>(sides);
    for (Colour xi = 0; xi < 2; ++xi)
        for (Vertex v = 0; v < 4; ++v)
            CHECK(s.side(xi, v) == static_cast<std::uint8_t>(d2.label(v)[xi]));

    const auto k3 = PairColouring::constant(3, 1, 0);
    const auto cyc = check_odd_cycle_free(k3);
    REQUIRE(std::holds_alternative<CycleWitness>(cyc));
    CHECK(std::get<CycleWitness>(cyc) == CycleWitness{{0, 1, 2}, 0});
    CHECK(code_of([&] { require_odd_cycle_free(k3); }) == ErrorCode::NotOddCycleFree);
}

TEST_CASE("side convention: least vertex of each component and isolated vertices get side 0")
{
    // Class 0 = {12, 34}; class 1 = star at 0; class 2 = K_{2,2} on {1,2} x {3,4}.
    std::vector<Colour> pairs(10, 0);
    auto set = [&](Vertex a, Vertex b, Colour x) { pairs[PairColouring::pair_index(5, a, b)] = x; };
    set(1, 2, 0);
    set(3, 4, 0);
    for (Vertex v = 1; v < 5; ++v)
        set(0, v, 1);
    for (Vertex a : {1u, 2u})
        for (Vertex b : {3u, 4u})
            set(a, b, 2);
    const PairColouring c(5, 3, pairs);
    const auto result = check_odd_cycle_free(c);
    REQUIRE(std::holds_alternative<SideAssignment>(result));
    const auto& s = std::get<SideAssignment>(result);
    CHECK(s.sides[0] == std::vector<std::uint8_t>{0, 0, 1, 0, 1});
    CHECK(s.sides[1] == std::vector<std::uint8_t>{0, 1, 1, 1, 1});
    CHECK(s.sides[2] == std::vector<std::uint8_t>{0, 0, 0, 1, 1});
}

TEST_CASE("odd-cycle-freeness agrees with the brute-force bipartiteness oracle")
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const std::size_t n = 3 + seed % 8;
        const auto c = random_colouring(VertexCount{n}, 2 + seed % 3, NoConstraint{}, seed * 7 + 1);
        const auto result = check_odd_cycle_free(c);
        const bool free = std::holds_alternative<SideAssignment>(result);
        CHECK(free == oracle::odd_cycle_free(c));
        bool any_odd = false;
        for (std::size_t len = 3; len <= n; len += 2)
            any_odd = any_odd || find_mono_cycle(c, len).has_value();
        CHECK(free == !any_odd);
        if (free) {
            CHECK(is_valid_side_assignment(c, std::get<SideAssignment>(result)));
        } else {
            const auto& w = std::get<CycleWitness>(result);
            CHECK(is_valid_cycle(c, w));
            CHECK(w.vertices.size() % 2 == 1);
        }
    }
}

TEST_CASE("largest_mono_set")
{
    CHECK(largest_mono_set(make_delta_colouring(3)).vertices.size() == 2);
    const auto all = largest_mono_set(PairColouring::constant(5, 1, 0));
    CHECK(all.vertices.size() == 5);
    CHECK(all.optimal);
    const auto r = random_colouring(VertexCount{8}, 2, NoConstraint{}, 1);
    CHECK(largest_mono_set(r).vertices.size() == oracle::max_mono_set(r));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto c = random_colouring(VertexCount{6 + seed % 8}, 2 + seed % 2, NoConstraint{}, 500 + seed);
        const auto m = largest_mono_set(c);
        CHECK(m.vertices.size() == oracle::max_mono_set(c));
        for (std::size_t i = 0; i < m.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < m.vertices.size(); ++j)
                CHECK(c.colour(m.vertices[i], m.vertices[j]) == m.colour);
    }
    const auto capped = largest_mono_set(random_colouring(VertexCount{40}, 2, NoConstraint{}, 3), 5);
    CHECK_FALSE(capped.optimal);
}

TEST_CASE("colour_class_chromatic_number")
{
    CHECK(colour_class_chromatic_number(make_delta_colouring(3), 0).value == 2);
    CHECK(colour_class_chromatic_number(PairColouring::constant(4, 2, 1), 0).value == 1);
    const auto r = random_colouring(VertexCount{7}, 2, NoConstraint{}, 2);
    CHECK(colour_class_chromatic_number(r, 0).value == oracle::chromatic_number(r, 0));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto c = random_colouring(VertexCount{4 + seed % 5}, 2, NoConstraint{}, 900 + seed);
        for (Colour k = 0; k < 2; ++k) {
            const auto res = colour_class_chromatic_number(c, k);
            CHECK(res.exact);
            CHECK(res.value == oracle::chromatic_number(c, k));
        }
    }
}

TEST_CASE("regressive_floor_check")
{
    const auto base = floor_instance();
    CHECK_FALSE(regressive_floor_check(base, FloorSchedule{2, {}}));

    std::vector<Colour> pairs(base.pairs().begin(), base.pairs().end());
    // (000, 001) has Delta 2; recolour it 0.
    pairs[PairColouring::pair_index(8, 0, 1)] = 0;
    const PairColouring broken(8, 3, pairs, base.labels());
    const auto v = regressive_floor_check(broken, FloorSchedule{2, {}});
    REQUIRE(v);
    CHECK(v->m == 2);
    CHECK(v->pair == VertexPair{0, 1});

    CHECK(code_of([] { regressive_floor_check(PairColouring(2, 1, {0}), FloorSchedule{1, {}}); }) ==
          ErrorCode::MissingLabels);
    CHECK(code_of([] { regressive_floor_check(make_delta_colouring(2), FloorSchedule{1, {}}); }) ==
          ErrorCode::NotRegressive);
    CHECK(code_of([&] { regressive_floor_check(base, FloorSchedule{1, {2u}}); }) == ErrorCode::InvalidParams);
}

TEST_CASE("deterministic witnesses repeat")
{
    const auto c = random_colouring(VertexCount{12}, 2, NoConstraint{}, 44);
    CHECK(find_mono_cycle(c, 5) == find_mono_cycle(c, 5));
    CHECK(check_odd_cycle_free(c) == check_odd_cycle_free(c));
}
