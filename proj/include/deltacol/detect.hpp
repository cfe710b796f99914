#pragma once

// Monochromatic structure detection. Everything here works one colour class
// at a time; results are deterministic (least colour first, then the
// lexicographically least witness under vertex-index order).

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "deltacol/colouring.hpp"
#include "deltacol/error.hpp"

namespace deltacol {

struct CycleWitness {
    std::vector<Vertex> vertices;
    Colour colour = 0;

    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// True iff the witness has >= 3 distinct in-range vertices and every
/// cyclically consecutive pair carries its colour.
bool is_valid_cycle(const PairColouring& c, const CycleWitness& w);

/// Per-colour bipartition: sides[colour][vertex] in {0, 1}.
struct SideAssignment {
    std::vector<std::vector<std::uint8_t>> sides;

    std::uint8_t side(Colour colour, Vertex v) const { return sides[colour][v]; }
    friend bool operator==(const SideAssignment&, const SideAssignment&) = default;
};

/// True iff no pair of any colour has both endpoints on one side of that colour.
bool is_valid_side_assignment(const PairColouring& c, const SideAssignment& s);

/// Raised by operations that require every colour class to be bipartite.
class NotOddCycleFreeError : public Error {
public:
    explicit NotOddCycleFreeError(CycleWitness witness)
        : Error(ErrorCode::NotOddCycleFree, "colour " + std::to_string(witness.colour) + " has an odd cycle of length " +
                                                std::to_string(witness.vertices.size())),
          witness_(std::move(witness))
    {
    }
    const CycleWitness& witness() const noexcept { return witness_; }

private:
    CycleWitness witness_;
};

/// Lexicographically least monochromatic cycle of exactly `length` vertices
/// (least colour first), or none. InvalidParams if length < 3 or > N.
/// Lengths >= 4 use a memoized path search limited to 512 vertices
/// (BudgetExceeded above that); triangles use bitset rows and have no limit.
std::optional<CycleWitness> find_mono_cycle(const PairColouring& c, std::size_t length);

/// BFS 2-colouring of every class. Within a class, components are taken in
/// order of least vertex, whose side is 0; isolated vertices get side 0.
/// Returns the first odd cycle met (least colour) when a class is not bipartite.
std::variant<SideAssignment, CycleWitness> check_odd_cycle_free(const PairColouring& c);

/// check_odd_cycle_free, throwing NotOddCycleFreeError instead of returning a cycle.
SideAssignment require_odd_cycle_free(const PairColouring& c);

struct MonoSet {
    Colour colour = 0;
    std::vector<Vertex> vertices;
    bool optimal = true;
    std::uint64_t nodes = 0;
};

/// Largest monochromatic set over all colours by branch and bound. When the
/// node cap is hit, returns the best found so far with optimal = false.
MonoSet largest_mono_set(const PairColouring& c, std::uint64_t node_cap = 10'000'000);

struct ChromaticResult {
    unsigned value = 1;  // exact value, or the lower bound when !exact
    unsigned lower = 1;
    unsigned upper = 1;
    bool exact = true;
};

/// Chromatic number of (vertices, class-`colour` edges) by DSATUR branch and bound.
ChromaticResult colour_class_chromatic_number(const PairColouring& c, Colour colour,
                                              std::uint64_t node_cap = 10'000'000);

/// Avoided cycle length per colour m < M; informational for the floor check.
struct FloorSchedule {
    unsigned levels = 0;  // M
    std::vector<std::optional<unsigned>> avoided_lengths;
};

struct FloorViolation {
    unsigned m = 0;
    VertexPair pair;
    friend bool operator==(const FloorViolation&, const FloorViolation&) = default;
};

/// First (m, {f, g}) for m = 1..M, in pair order, with delta(f, g) >= m and
/// c(f, g) < m - 1; none means the floor holds through M.
/// Errors: MissingLabels, NotRegressive, InvalidParams (a k_m < 3).
std::optional<FloorViolation> regressive_floor_check(const PairColouring& c, const FloorSchedule& schedule);

}  // namespace deltacol
