#pragma once

// delta-colourings: recognition, the side-word embedding of odd-cycle-free
// colourings, extension to the full cube, the cube self-map pi with its
// descent profile, and the cycle built from a floor violation.

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "deltacol/colouring.hpp"
#include "deltacol/detect.hpp"

namespace deltacol {

/// An injective vertex -> word map (iota, or pi read on a cube).
struct Embedding {
    std::vector<BinaryWord> words;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Labels of every pair disagree at the coordinate equal to its colour.
/// Errors: MissingLabels, ColourOutOfRange (a colour >= label length).
bool is_delta_colouring(const PairColouring& c);

struct CanonicalForm {
    Embedding embedding;
    PairColouring colouring;  // same pairs, labelled by the embedding
};

/// iota(x)(xi) = side of x in colour class xi (detect's BFS convention).
/// Throws NotOddCycleFreeError.
CanonicalForm canonicalize(const PairColouring& c);

/// Full cube 2^k (k = label length) in cube order; old pairs keep their
/// colour, all other pairs are coloured by delta.
/// Errors: NotDeltaColouring, BudgetExceeded.
PairColouring extend_delta_colouring_to_cube(const PairColouring& c, unsigned cube_cap = kDefaultCubeCap);

struct Extension {
    PairColouring extended;            // N + 1 vertices, new vertex last, unlabelled
    BinaryWord new_word;               // least word outside the embedding's image
    std::vector<Colour> new_colours;   // colour of (x, new) for x < N
    Embedding embedding;
};

/// No odd-cycle-free one-vertex extension exists: the embedding already
/// covers all 2^k words.
struct MaximalProof {
    Embedding embedding;
    std::uint64_t cube_size = 0;
};

std::variant<Extension, MaximalProof> extend_odd_cycle_free(const PairColouring& c);

/// pi(x) = word of x's sides over all colour classes. Requires the instance
/// to be the full cube 2^n (labels a bijection onto it) with palette n.
/// Errors: NotOddCycleFree (as NotOddCycleFreeError), NotFullCube, MissingLabels.
Embedding build_pi(const PairColouring& c);

struct DescentProfile {
    unsigned iterations = 0;  // n_xy
    Level xi = 0;             // delta(pi^n x, pi^n y) < mu

    friend bool operator==(const DescentProfile&, const DescentProfile&) = default;
};

/// Least n with delta(pi^n(x), pi^n(y)) < mu, using the instance's mu.
/// Errors: InvalidParams (no mu, x == y), NotAlmostRegressive, build_pi's.
DescentProfile descent_profile(const PairColouring& c, Vertex x, Vertex y);

/// Pair colour n_xy * mu + xi_xy; palette (n + 1) * mu, same labels, no mu.
PairColouring descent_colouring(const PairColouring& c);

/// Recomputation of the images behind a triangle of the descent colouring.
struct DescentTriangleCheck {
    unsigned iterations = 0;
    Level xi = 0;
    std::array<BinaryWord, 3> images;
    std::array<Level, 3> deltas{};  // pairs (0,1), (0,2), (1,2) of images
    bool consistent = false;        // recomputed deltas all equal xi
    bool contradiction = false;     // consistent: three words with constant delta
};

/// `triple` is a monochromatic triangle of descent_colouring(c).
DescentTriangleCheck check_descent_triangle(const PairColouring& c, const CycleWitness& triple);

/// Monochromatic cycle of colour c(f, g) and length k, built from a floor
/// violation at m = c(f, g) + 1: even k alternates at level m below f's
/// prefix; odd k is <f, g, h_0, ..., h_{k-3}>.
/// Errors: PreconditionFailed, InvalidParams, NoRoom.
CycleWitness floor_violation_to_cycle(const PairColouring& c, Vertex f, Vertex g, unsigned k);

}  // namespace deltacol
