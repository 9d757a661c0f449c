#include "kleshchev/verify.hpp"

#include "kleshchev/abacus.hpp"
#include "kleshchev/crystal.hpp"
#include "kleshchev/error.hpp"
#include "kleshchev/fock.hpp"
#include "kleshchev/orders.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace kleshchev {

bool VerificationReport::pass() const noexcept {
    for (const auto& r : ranks) {
        if (!r.discrepancies.empty() || !r.prop42_failures.empty()) return false;
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct ShapeResult {
    ShapeVerdict verdict;
    std::string expansion_failure; // empty when the check passed or did not apply
    PhaseTiming timing;
};

template <typename F>
void guarded(ShapeResult& res, const char* oracle, F&& f) {
    try {
        f();
    } catch (const std::exception& ex) {
        if (!res.verdict.error.empty()) res.verdict.error += "; ";
        res.verdict.error += std::string(oracle) + ": " + ex.what();
    }
}

ShapeResult check_shape(const Bipartition& bp, const Params& params) {
    ShapeResult res;
    res.verdict.shape = bp;
    auto t = Clock::now();
    guarded(res, "akt", [&] { res.verdict.kleshchev_akt = akt_is_kleshchev(bp, params); });
    res.timing.akt_ms = ms_since(t);
    t = Clock::now();
    guarded(res, "recursive", [&] { res.verdict.kleshchev_recursive = is_kleshchev_recursive(bp, params); });
    res.timing.recursive_ms = ms_since(t);
    t = Clock::now();
    guarded(res, "restricted", [&] { res.verdict.restricted = is_restricted(bp, params); });
    res.timing.restricted_ms = ms_since(t);

    if (res.verdict.kleshchev_akt || res.verdict.kleshchev_recursive) {
        t = Clock::now();
        try {
            FockVector w = expand_optimal_unchecked(bp, params);
            ExpansionCheck check = check_expansion(w, bp);
            if (!check.ok()) res.expansion_failure = check.describe();
        } catch (const std::exception& ex) {
            res.expansion_failure = ex.what();
        }
        res.timing.expansion_ms = ms_since(t);
    }
    return res;
}

} // namespace

VerificationReport verify_conjecture(const Params& params, int max_rank, unsigned threads) {
    if (max_rank < 0) throw PreconditionError("max_rank must be nonnegative");
    if (threads == 0) threads = 1;
    const auto t_total = Clock::now();
    VerificationReport report;
    report.e = params.e();
    report.m = params.m();
    report.max_rank = max_rank;

    for (int n = 0; n <= max_rank; ++n) {
        auto t = Clock::now();
        const std::vector<Bipartition> shapes = enumerate_bipartitions(n);
        report.timing.enumerate_ms += ms_since(t);

        std::vector<ShapeResult> results(shapes.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t k = next++; k < shapes.size(); k = next++) {
                results[k] = check_shape(shapes[k], params);
            }
        };
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
        }

        // Aggregate in enumeration order so the report is independent of scheduling.
        RankReport rank;
        rank.n = n;
        rank.shapes = static_cast<int>(shapes.size());
        for (auto& res : results) {
            const auto& v = res.verdict;
            rank.kleshchev_akt += v.kleshchev_akt ? 1 : 0;
            rank.kleshchev_recursive += v.kleshchev_recursive ? 1 : 0;
            rank.restricted += v.restricted ? 1 : 0;
            if (!v.agrees()) rank.discrepancies.push_back(v);
            if (!res.expansion_failure.empty()) {
                rank.prop42_failures.push_back({v.shape, res.expansion_failure});
            }
            report.timing.akt_ms += res.timing.akt_ms;
            report.timing.recursive_ms += res.timing.recursive_ms;
            report.timing.restricted_ms += res.timing.restricted_ms;
            report.timing.expansion_ms += res.timing.expansion_ms;
        }
        report.ranks.push_back(std::move(rank));
    }
    report.timing.total_ms = ms_since(t_total);
    return report;
}

} // namespace kleshchev
