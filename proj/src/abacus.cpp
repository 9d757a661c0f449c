#include "kleshchev/abacus.hpp"

#include "kleshchev/error.hpp"

#include <algorithm>
#include <numeric>

namespace kleshchev {

namespace {

// Tail beads never lie in U: their e-predecessor is always a member.
std::vector<int> u_set(const BetaSet& beta, int e) {
    std::vector<int> u;
    for (int x : beta.window()) {
        if (!beta.contains(x - e)) u.push_back(x);
    }
    std::reverse(u.begin(), u.end());
    return u;
}

int window_top(const BetaSet& beta) {
    return beta.window().empty() ? beta.tail_bound() : beta.window().front();
}

void require_restricted(const Partition& lambda, int e) {
    if (!is_e_restricted(lambda, e)) {
        throw PreconditionError("partition " + lambda.to_string() + " is not " + std::to_string(e) +
                                "-restricted");
    }
}

void ensure_restricted_result(const Partition& from, const Partition& to, int e, const char* op) {
    if (!is_e_restricted(to, e)) {
        throw InvariantViolation(std::string(op) + " of " + from.to_string() + " gave non-restricted " +
                                 to.to_string());
    }
}

std::size_t iteration_fuse(const Partition& lambda, int e) {
    return static_cast<std::size_t>(lambda.rank()) * static_cast<std::size_t>(1 + e);
}

} // namespace

std::optional<AbacusMove> up_move(const BetaSet& beta, int e) {
    std::vector<int> u = u_set(beta, e);
    if (u.empty()) return std::nullopt;
    int p = u.back();
    std::vector<int> v;
    for (int x = p + 1; x <= window_top(beta) + e; ++x) {
        if (floor_mod(x, e) != floor_mod(p, e) && beta.contains(x - e) && !beta.contains(x)) {
            v.push_back(x);
        }
    }
    if (v.empty()) {
        throw PreconditionError("up move has no target bead; the partition is not e-restricted");
    }
    return AbacusMove{MoveKind::Up, p, v.front(), std::move(u), std::move(v), p};
}

std::optional<AbacusMove> down_move(const BetaSet& beta, int e) {
    std::vector<int> u = u_set(beta, e);
    if (u.empty()) return std::nullopt;
    int p = u.front();
    std::vector<int> w;
    for (auto it = beta.window().rbegin(); it != beta.window().rend(); ++it) {
        int x = *it;
        if (x > p - e && (x == p || !beta.contains(x + e))) w.push_back(x);
    }
    return AbacusMove{MoveKind::Down, w.front(), p - e, std::move(u), std::move(w), p};
}

std::pair<Partition, std::optional<AbacusMove>> up_step(const Partition& lambda, const Params& params) {
    require_restricted(lambda, params.e());
    BetaSet beta = beta_set(lambda, params.m(), default_window(lambda, params.e()));
    auto move = up_move(beta, params.e());
    if (!move) return {lambda, std::nullopt};
    Partition out = partition_of_beta(beta.moved(move->removed_bead, move->added_bead));
    ensure_restricted_result(lambda, out, params.e(), "up");
    return {std::move(out), std::move(move)};
}

std::pair<Partition, std::optional<AbacusMove>> down_step(const Partition& lambda, int e) {
    require_restricted(lambda, e);
    BetaSet beta = beta_set(lambda, 0, default_window(lambda, e));
    auto move = down_move(beta, e);
    if (!move) return {lambda, std::nullopt};
    Partition out = partition_of_beta(beta.moved(move->removed_bead, move->added_bead));
    ensure_restricted_result(lambda, out, e, "down");
    return {std::move(out), std::move(move)};
}

AbacusTrace roof_trace(const Partition& lambda, const Params& params) {
    AbacusTrace trace{lambda, {}, lambda};
    const std::size_t fuse = iteration_fuse(lambda, params.e());
    while (true) {
        auto [next, move] = up_step(trace.result, params);
        if (!move) break;
        trace.steps.push_back(std::move(*move));
        trace.result = std::move(next);
        if (trace.steps.size() > fuse) {
            throw InvariantViolation("roof of " + lambda.to_string() + " did not terminate within " +
                                     std::to_string(fuse) + " steps");
        }
    }
    return trace;
}

Partition roof(const Partition& lambda, const Params& params) {
    return roof_trace(lambda, params).result;
}

AbacusTrace base_trace(const Partition& lambda, int e) {
    AbacusTrace trace{lambda, {}, lambda};
    const std::size_t fuse = iteration_fuse(lambda, e);
    while (true) {
        auto [next, move] = down_step(trace.result, e);
        if (!move) break;
        trace.steps.push_back(std::move(*move));
        trace.result = std::move(next);
        if (trace.steps.size() > fuse) {
            throw InvariantViolation("base of " + lambda.to_string() + " did not terminate within " +
                                     std::to_string(fuse) + " steps");
        }
    }
    return trace;
}

Partition base(const Partition& lambda, int e) {
    return base_trace(lambda, e).result;
}

TauData tau_data(const BetaSet& core_beta, int e, int m) {
    TauData data;
    data.runner_maxima.resize(static_cast<std::size_t>(e));
    for (int r = 0; r < e; ++r) {
        data.runner_maxima[static_cast<std::size_t>(r)] = core_beta.runner_max(r, e);
    }
    std::vector<int> sorted = data.runner_maxima;
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});
    for (int k = 0; k < m; ++k) {
        data.added_beads.push_back(sorted[static_cast<std::size_t>(k)] + e);
    }
    return data;
}

std::pair<Partition, TauData> tau_trace(const Partition& core, const Params& params) {
    const int e = params.e();
    BetaSet beta = beta_set(core, 0, default_window(core, e));
    if (!is_e_core(beta, e)) {
        throw PreconditionError("tau requires an e-core, got " + core.to_string());
    }
    TauData data = tau_data(beta, e, params.m());
    Partition out = partition_of_beta(beta.adjoined(data.added_beads, params.m()));
    return {std::move(out), std::move(data)};
}

Partition tau(const Partition& core, const Params& params) {
    return tau_trace(core, params).first;
}

bool akt_is_kleshchev(const Bipartition& bp, const Params& params) {
    const int e = params.e();
    if (!is_e_restricted(bp.first, e) || !is_e_restricted(bp.second, e)) return false;
    return diagram_contains(roof(bp.first, params), tau(base(bp.second, e), params));
}

} // namespace kleshchev
