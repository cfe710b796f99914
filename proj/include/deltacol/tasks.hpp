#pragma once

// Certificate-producing drivers behind `deltacol run`, and the replay
// validator behind `deltacol run validate`.

#include <cstdint>
#include <optional>
#include <string>

#include "deltacol/extremal.hpp"
#include "deltacol/json_io.hpp"
#include "deltacol/maximality.hpp"

namespace deltacol {

inline constexpr std::string_view kCertificateFormat = "certificate/v1";

/// Exit-code contract shared by `check` and `run`.
enum ExitCode : int {
    kExitHolds = 0,
    kExitRefuted = 1,
    kExitUsage = 2,
    kExitIo = 3,
    kExitBudget = 4,
};

struct TaskOutput {
    Json certificate;
    int exit_code = kExitHolds;
};

struct RunOptions {
    SearchBudget budget;
    std::uint64_t seed = 0;
};

TaskOutput run_canon(const PairColouring& c, const RunOptions& options = {});
TaskOutput run_maximal(const PairColouring& c, MaximalityOracle oracle, const RunOptions& options = {});
TaskOutput run_extend(const PairColouring& c, const RunOptions& options = {});
TaskOutput run_descent(const PairColouring& c, const RunOptions& options = {});
TaskOutput run_cycle(const PairColouring& c, std::size_t length, const RunOptions& options = {});
TaskOutput run_floor(const PairColouring& c, unsigned levels, unsigned even_length, unsigned odd_length,
                     const RunOptions& options = {});
TaskOutput run_fiber(const PairColouring& c, const RunOptions& options = {});
TaskOutput run_search_min_maximal(unsigned k, std::size_t max_n, bool isomorph_rejection, const RunOptions& options);
TaskOutput run_search_constrained(const SearchTarget& target, const RunOptions& options);
TaskOutput run_search_odd_bound(unsigned k, std::uint64_t samples, const RunOptions& options);

struct ValidationReport {
    bool ok = false;
    std::string message;
};

/// Replays a certificate's claim through predicates independent of the code
/// path that produced it (and re-runs searches whose verdict has no witness).
ValidationReport validate_certificate(const Json& certificate);

/// Certificate with time fields removed, for reproducibility comparisons.
Json without_elapsed(Json certificate);

/// Every unordered triple scanned directly; used as an independent triangle oracle.
std::optional<CycleWitness> brute_force_triangle(const PairColouring& c);

}  // namespace deltacol
