#pragma once

#include "kleshchev/bipartition.hpp"

#include <string>
#include <vector>

namespace kleshchev {

/// Verdicts of the three oracles on one shape. `error` is non-empty when an
/// oracle threw; the sweep records it and moves on.
struct ShapeVerdict {
    Bipartition shape;
    bool kleshchev_akt = false;
    bool kleshchev_recursive = false;
    bool restricted = false;
    std::string error;

    bool agrees() const noexcept {
        return error.empty() && kleshchev_akt == kleshchev_recursive && kleshchev_akt == restricted;
    }
};

struct ExpansionFailure {
    Bipartition shape;
    std::string reason;
};

struct RankReport {
    int n = 0;
    int shapes = 0;
    int kleshchev_akt = 0;
    int kleshchev_recursive = 0;
    int restricted = 0;
    std::vector<ShapeVerdict> discrepancies;
    std::vector<ExpansionFailure> prop42_failures;
};

/// Summed wall time spent in each oracle, in milliseconds.
struct PhaseTiming {
    double enumerate_ms = 0;
    double akt_ms = 0;
    double recursive_ms = 0;
    double restricted_ms = 0;
    double expansion_ms = 0;
    double total_ms = 0;
};

struct VerificationReport {
    int e = 2;
    int m = 0;
    int max_rank = 0;
    std::vector<RankReport> ranks;
    PhaseTiming timing;

    bool pass() const noexcept;
};

/// For every rank up to max_rank: compares the abacus criterion, the
/// good-node recursion and restrictedness on every bipartition, and checks
/// the optimal-sequence expansion of every Kleshchev one. The report does not
/// depend on `threads` (apart from timing).
VerificationReport verify_conjecture(const Params& params, int max_rank, unsigned threads = 1);

} // namespace kleshchev
