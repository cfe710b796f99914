#pragma once

// Maximality of triangle-free colourings, decided through witness functions
// d: a triangle-free c is maximal iff every d : X -> palette has a pair with
// d(x) = d(y) = c(x, y).

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "deltacol/colouring.hpp"
#include "deltacol/error.hpp"

namespace deltacol {

struct VertexColouring {
    std::vector<Colour> d;

    friend bool operator==(const VertexColouring&, const VertexColouring&) = default;
};

struct Violation {
    Vertex x = 0;
    Vertex y = 0;
    Colour colour = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

class ViolationExistsError : public Error {
public:
    explicit ViolationExistsError(Violation v)
        : Error(ErrorCode::ViolationExists, "d(" + std::to_string(v.x) + ") = d(" + std::to_string(v.y) +
                                                ") = c(x, y) = " + std::to_string(v.colour)),
          violation_(v)
    {
    }
    const Violation& violation() const noexcept { return violation_; }

private:
    Violation violation_;
};

/// Least violating pair (x < y, pair order), or none.
/// PaletteMismatch if d has the wrong size or a value outside the palette.
std::optional<Violation> find_violation(const PairColouring& c, const VertexColouring& d);

struct Maximal {
    friend bool operator==(const Maximal&, const Maximal&) = default;
};

enum class MaximalityOracle { Exhaustive, Backtracking };

/// Both oracles return the lexicographically least violation-free d when one
/// exists. Exhaustive enumeration needs palette^N <= max_nodes; backtracking
/// throws BudgetExceeded after max_nodes search nodes.
/// Errors: NotTriangleFree, BudgetExceeded.
std::variant<Maximal, VertexColouring> decide_maximal_triangle_free(const PairColouring& c, MaximalityOracle oracle,
                                                                    std::uint64_t max_nodes = 50'000'000);

/// Same decision without the triangle-freeness precondition check, reporting
/// the node count. Used by the extremal searches.
std::variant<Maximal, VertexColouring> decide_maximal_unchecked(const PairColouring& c, std::uint64_t max_nodes,
                                                                std::uint64_t& nodes);

/// Diagonal walk against the Delta colouring of 2^n: descends through the
/// prefixes of z, returning the first level alpha where both halves of the
/// current prefix contain a vertex with d = alpha. Vertices are cube indices.
/// Errors: InvalidParams (size != 2^n), RangeOutOfPalette (a value >= n).
Violation diagonal_violation(const VertexColouring& d, unsigned n);

/// d(0) = d(1) = least colour i != c(0, 1); d(a) = c(e, a) for the least
/// e in {0, 1} with c(e, a) != i.
/// Errors: InvalidParams (N < 3), PaletteTooSmall, FiberNotInjective.
VertexColouring injective_fiber_witness(const PairColouring& c);

/// True iff every fiber c(., b), b >= 2, is injective on {0..b-1}.
bool has_injective_fibers(const PairColouring& c);

/// One new vertex (index N) with c(x, new) = d(x).
/// Errors: NotTriangleFree, ViolationExistsError, PaletteMismatch.
PairColouring extend_by_witness(const PairColouring& c, const VertexColouring& d);

}  // namespace deltacol
