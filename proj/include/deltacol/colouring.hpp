#pragma once

// Total symmetric pair colourings of a finite vertex set, the named
// generators (Delta, observation, transported, random) and the
// regressivity report.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "deltacol/words.hpp"

namespace deltacol {

using Vertex = std::uint32_t;
using Colour = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

/// Upper bound on stored pairs for any materialized instance (~2^27).
inline constexpr std::uint64_t kMaxPairs = std::uint64_t{1} << 27;

class PairColouring {
public:
    /// `pairs` lists colours in the order (0,1),(0,2),...,(0,N-1),(1,2),...
    /// Labels may be empty (unlabelled); otherwise one distinct word per
    /// vertex, all of one length. Throws InvalidParams on any violation.
    PairColouring(std::size_t n_vertices, Colour palette, std::vector<Colour> pairs,
                  std::vector<BinaryWord> labels = {}, std::optional<Level> mu = std::nullopt);

    static PairColouring constant(std::size_t n_vertices, Colour palette, Colour colour);

    static std::size_t pair_count(std::size_t n_vertices) noexcept { return n_vertices * (n_vertices - 1) / 2; }
    static std::size_t pair_index(std::size_t n_vertices, Vertex a, Vertex b) noexcept
    {
        if (a > b)
            std::swap(a, b);
        return static_cast<std::size_t>(a) * n_vertices - static_cast<std::size_t>(a) * (a + 1) / 2 + (b - a - 1);
    }

    std::size_t size() const noexcept { return n_; }
    Colour palette() const noexcept { return palette_; }
    Colour colour(Vertex a, Vertex b) const { return pairs_[pair_index(n_, a, b)]; }
    std::span<const Colour> pairs() const noexcept { return pairs_; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<BinaryWord>& labels() const noexcept { return labels_; }
    /// Label of v; MissingLabels if unlabelled.
    const BinaryWord& label(Vertex v) const;
    /// Common label length; MissingLabels if unlabelled.
    std::size_t word_length() const;

    std::optional<Level> mu() const noexcept { return mu_; }

    PairColouring with_mu(std::optional<Level> mu) const;
    PairColouring with_labels(std::vector<BinaryWord> labels) const;

    friend bool operator==(const PairColouring&, const PairColouring&) = default;

private:
    std::size_t n_;
    Colour palette_;
    std::vector<Colour> pairs_;
    std::vector<BinaryWord> labels_;
    std::optional<Level> mu_;
};

/// Edges of one colour, with sorted adjacency lists.
struct ColourClassView {
    Colour colour = 0;
    std::vector<VertexPair> edges;
    std::vector<std::vector<Vertex>> adjacency;
};

ColourClassView colour_class(const PairColouring& c, Colour colour);
/// All classes 0..palette-1 in one pass.
std::vector<ColourClassView> colour_classes(const PairColouring& c);

/// Delta colouring on the full cube 2^n, palette n, labels in cube order.
PairColouring make_delta_colouring(unsigned n, unsigned cube_cap = kDefaultCubeCap);

/// c(f,g) = delta - 1 when delta > 0, else f(1) + g(1) mod 2; palette max(n-1, 2).
PairColouring make_observation_colouring(unsigned n, unsigned cube_cap = kDefaultCubeCap);

/// s abstract vertices coloured by delta of their images under F in 2^mu.
/// F defaults to the first s words of the cube. The result is labelled by F
/// and carries mu.
PairColouring transport_colouring(std::size_t s, unsigned mu,
                                  const std::optional<std::vector<BinaryWord>>& embedding = std::nullopt);

struct RegressivityReport {
    bool is_delta_regressive = false;
    /// Least mu <= word length with c < max(delta, mu) everywhere.
    std::optional<Level> min_threshold;
    /// Pairs with delta > 0 and colour >= delta.
    std::vector<VertexPair> violations;
};

RegressivityReport regressivity_report(const PairColouring& c);

/// Pairs breaking c < max(delta, mu), in pair order. MissingLabels if unlabelled.
std::vector<VertexPair> almost_regressive_violations(const PairColouring& c, Level mu);

// ---------------------------------------------------------------------------
// Seeded generation

struct CubeSize {
    unsigned n;
};
struct VertexCount {
    std::size_t n_vertices;
};
using SizeSpec = std::variant<CubeSize, VertexCount>;

struct NoConstraint {};
struct DeltaRegressive {};
struct AlmostRegressive {
    Level mu;
};
struct InjectiveFibers {};
using Constraint = std::variant<NoConstraint, DeltaRegressive, AlmostRegressive, InjectiveFibers>;

/// Name recorded in certificates for the PRNG behind random_colouring.
inline constexpr std::string_view kGeneratorName = "mt19937_64/rejection-v1";

/// Deterministic for a given seed. Cube sizes are labelled in cube order;
/// regressive constraints need a cube size. Colours drawn for a constrained
/// pair are uniform on [0, min(bound, k)) where bound is delta (regressive)
/// or max(delta, mu) (almost); delta = 0 pairs of the regressive constraint
/// draw from the whole palette.
PairColouring random_colouring(const SizeSpec& size, Colour palette, const Constraint& constraint,
                               std::uint64_t seed, unsigned cube_cap = kDefaultCubeCap);

}  // namespace deltacol
