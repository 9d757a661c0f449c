#include "kleshchev/partition.hpp"

#include "kleshchev/error.hpp"

#include <algorithm>
#include <charconv>

namespace kleshchev {

Params::Params(int e, int m) : e_(e), m_(m) {
    if (e < 2) {
        throw PreconditionError("e must be at least 2, got " + std::to_string(e));
    }
    if (m < 0 || m >= e) {
        throw PreconditionError("m must satisfy 0 <= m < e, got m=" + std::to_string(m) +
                                " e=" + std::to_string(e));
    }
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) {
            throw ParseError(ParseErrorKind::NonPositivePart,
                             "partition parts must be positive, got " + std::to_string(parts_[k]));
        }
        if (k > 0 && parts_[k] > parts_[k - 1]) {
            throw ParseError(ParseErrorKind::IncreasingParts, "partition parts must be weakly decreasing");
        }
        rank_ += parts_[k];
    }
}

std::string Partition::to_string() const {
    if (parts_.empty()) {
        return "-";
    }
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts_[k]);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Partition parse_partition(std::string_view text) {
    text = trim(text);
    if (text.empty() || text == "-") {
        return {};
    }
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError(ParseErrorKind::NonInteger, "not an integer: '" + std::string(token) + "'");
        }
        if (value <= 0) {
            // An explicit zero is rejected here even though the constructor
            // would silently drop trailing zeros.
            throw ParseError(ParseErrorKind::NonPositivePart,
                             "partition parts must be positive, got " + std::to_string(value));
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

bool is_e_restricted(const Partition& lambda, int e) {
    for (std::size_t k = 0; k < lambda.length(); ++k) {
        if (lambda[k] - lambda[k + 1] >= e) return false;
    }
    return true;
}

int floor_mod(int x, int e) noexcept {
    int r = x % e;
    return r < 0 ? r + e : r;
}

BetaSet::BetaSet(int charge, std::vector<int> window, int tail_bound)
    : charge_(charge), window_(std::move(window)), tail_bound_(tail_bound) {
    for (std::size_t k = 1; k < window_.size(); ++k) {
        if (window_[k] >= window_[k - 1]) {
            throw PreconditionError("beta window must be strictly decreasing");
        }
    }
    if (!window_.empty() && window_.back() <= tail_bound_) {
        throw PreconditionError("beta window overlaps its tail");
    }
    if (tail_bound_ != charge_ - static_cast<int>(window_.size())) {
        throw PreconditionError("beta set tail bound inconsistent with charge and window length");
    }
}

bool BetaSet::contains(int x) const noexcept {
    if (x <= tail_bound_) return true;
    return std::binary_search(window_.begin(), window_.end(), x, std::greater<>{});
}

int BetaSet::runner_max(int residue, int e) const noexcept {
    for (int x : window_) {
        if (floor_mod(x, e) == residue) return x;
    }
    // Largest tail member on this runner.
    return tail_bound_ - floor_mod(tail_bound_ - residue, e);
}

BetaSet BetaSet::moved(int removed, int added) const {
    if (!contains(removed) || removed <= tail_bound_) {
        throw InvariantViolation("bead move removes a non-window bead " + std::to_string(removed));
    }
    if (contains(added)) {
        throw InvariantViolation("bead move adds an existing bead " + std::to_string(added));
    }
    std::vector<int> w;
    w.reserve(window_.size());
    for (int x : window_) {
        if (x != removed) w.push_back(x);
    }
    w.insert(std::upper_bound(w.begin(), w.end(), added, std::greater<>{}), added);
    return BetaSet(charge_, std::move(w), tail_bound_);
}

BetaSet BetaSet::adjoined(std::span<const int> beads, int new_charge) const {
    std::vector<int> w = window_;
    for (int b : beads) {
        if (contains(b)) {
            throw InvariantViolation("adjoined bead already present: " + std::to_string(b));
        }
        w.push_back(b);
    }
    std::sort(w.begin(), w.end(), std::greater<>{});
    return BetaSet(new_charge, std::move(w), tail_bound_);
}

std::size_t default_window(const Partition& lambda, int e) {
    return lambda.length() + static_cast<std::size_t>(e) + 1;
}

BetaSet beta_set(const Partition& lambda, int charge, std::size_t window_len) {
    if (window_len < lambda.length()) {
        throw PreconditionError("beta window of length " + std::to_string(window_len) +
                                " cannot hold " + std::to_string(lambda.length()) + " parts");
    }
    std::vector<int> w(window_len);
    for (std::size_t k = 0; k < window_len; ++k) {
        w[k] = lambda[k] + charge - static_cast<int>(k);
    }
    return BetaSet(charge, std::move(w), charge - static_cast<int>(window_len));
}

Partition partition_of_beta(const BetaSet& beta) {
    auto w = beta.window();
    std::vector<int> parts(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        parts[k] = w[k] - beta.charge() + static_cast<int>(k);
    }
    return Partition(std::move(parts));
}

bool is_e_core(const BetaSet& beta, int e) {
    for (int x : beta.window()) {
        if (!beta.contains(x - e)) return false;
    }
    return true;
}

bool is_e_core(const Partition& lambda, int e) {
    return is_e_core(beta_set(lambda, 0, default_window(lambda, e)), e);
}

bool diagram_contains(const Partition& inner, const Partition& outer) {
    for (std::size_t k = 0; k < inner.length(); ++k) {
        if (inner[k] > outer[k]) return false;
    }
    return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

} // namespace kleshchev
