#pragma once

// Budgeted searches over colouring space.
//
// Every search walks pair colourings in serialization order with colours
// ascending, so the first witness found is canonical. The tree is split at a
// fixed prefix depth (independent of the worker count) and subtrees are
// reduced in order; node counts and witnesses are therefore identical for
// any number of workers.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "deltacol/colouring.hpp"

namespace deltacol {

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    /// Wall-clock limit in seconds, 0 for none. Ignored in deterministic mode.
    std::uint64_t max_seconds = 0;
    bool deterministic = true;
    /// Not part of the result contract; any value yields identical outcomes.
    unsigned workers = 1;
};

enum class Verdict { Found, ExhaustedNone, BudgetExhausted };

std::string_view verdict_name(Verdict v) noexcept;

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t elapsed_ms = 0;
    std::uint64_t seed = 0;
};

struct SearchOutcome {
    Verdict verdict = Verdict::ExhaustedNone;
    std::optional<PairColouring> witness;
    SearchStats stats;
    /// Witness re-checked by the detect/colouring predicates.
    bool validated = false;
};

/// Largest N for which a triangle-free colouring of K_N into k colours can
/// exist: R(3; k) - 1 with R known for k <= 3, the best upper bound for
/// k = 4, and floor(e * k!) beyond.
std::uint64_t triangle_free_vertex_bound(unsigned k);

struct MinMaximalResult {
    std::optional<std::size_t> value;
    SearchOutcome outcome;
    std::size_t searched_up_to = 0;  // min(max_N, Ramsey cap)
    bool isomorph_rejection = true;
};

/// Least N <= max_N with a maximal triangle-free colouring of K_N into k
/// colours. Isomorph rejection (vertex x colour permutations) applies for
/// N <= 8 when enabled.
MinMaximalResult min_maximal_triangle_free_size(unsigned k, std::size_t max_n, const SearchBudget& budget,
                                                bool isomorph_rejection = true);

struct RegressiveTriangleFree {
    unsigned n;
};
struct AlmostRegressiveOddCycleFree {
    unsigned n;
    Level mu;
};
using SearchTarget = std::variant<RegressiveTriangleFree, AlmostRegressiveOddCycleFree>;

/// Full-cube colourings into palette n meeting the target. Cube dimension is
/// limited to 6. Errors: InvalidParams.
SearchOutcome search_constrained_colouring(const SearchTarget& target, const SearchBudget& budget);

struct OddBoundOptions {
    std::uint64_t samples = 500;  // used for k >= 3
    std::uint64_t seed = 0;
};

/// Checks the finite form of the odd-cycle-free size bound for palette k:
/// below 2^k every odd-cycle-free colouring extends, at 2^k none does, and
/// beyond 2^k none exists. Exhaustive for k <= 2, sampled for 3 <= k <= 5.
/// Found means a counterexample (returned as witness).
SearchOutcome verify_odd_bound(unsigned k, const SearchBudget& budget, const OddBoundOptions& options = {});

/// Lexicographically least serialization over vertex and colour permutations.
std::vector<Colour> canonical_pairs(const PairColouring& c);

}  // namespace deltacol
