#pragma once

#include "kleshchev/bipartition.hpp"
#include "kleshchev/partition.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kleshchev {

enum class MoveKind { Up, Down };

/// One bead move of the up or down operation, with the sets it was chosen from.
///
/// Up:   U = {x in J : x-e not in J}, p = max U,
///       V = {x > p : x != p mod e, x-e in J, x not in J}, q = min V;
///       bead p is removed and q added.
/// Down: U as above, p' = min U,
///       W = {x > p'-e : x in J, x+e not in J} + {p'}, q' = min W;
///       bead q' is removed and p'-e added.
struct AbacusMove {
    MoveKind kind;
    int removed_bead;
    int added_bead;
    std::vector<int> candidates_u;     // increasing
    std::vector<int> candidates_other; // V or W, increasing
    int extremum;                      // p or p'
};

struct TauData {
    /// runner_maxima[i] is the largest bead congruent to i mod e.
    std::vector<int> runner_maxima;
    /// One bead M + e for each of the m largest runner maxima, decreasing.
    std::vector<int> added_beads;
};

/// Raw bead moves on a beta set. Return nullopt when beta is an e-core.
std::optional<AbacusMove> up_move(const BetaSet& beta, int e);
std::optional<AbacusMove> down_move(const BetaSet& beta, int e);

std::pair<Partition, std::optional<AbacusMove>> up_step(const Partition& lambda, const Params& params);
std::pair<Partition, std::optional<AbacusMove>> down_step(const Partition& lambda, int e);

struct AbacusTrace {
    Partition input;
    std::vector<AbacusMove> steps;
    Partition result;
};

/// Iterates up_step (charge m) to its e-core fixed point.
AbacusTrace roof_trace(const Partition& lambda, const Params& params);
Partition roof(const Partition& lambda, const Params& params);

/// Iterates down_step (charge 0) to its e-core fixed point.
AbacusTrace base_trace(const Partition& lambda, int e);
Partition base(const Partition& lambda, int e);

/// Adds e to the m largest runner maxima of a charge-0 e-core and reads the
/// result as a charge-m beta set.
std::pair<Partition, TauData> tau_trace(const Partition& core, const Params& params);
TauData tau_data(const BetaSet& core_beta, int e, int m);
Partition tau(const Partition& core, const Params& params);

/// Non-recursive Kleshchev test: both components e-restricted and
/// roof_m(first) contained in tau_m(base_0(second)).
bool akt_is_kleshchev(const Bipartition& bp, const Params& params);

} // namespace kleshchev
