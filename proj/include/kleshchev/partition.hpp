#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kleshchev {

/// Quantum characteristic e and the charge m of the first component.
class Params {
public:
    Params(int e, int m);

    int e() const noexcept { return e_; }
    int m() const noexcept { return m_; }

    bool operator==(const Params&) const = default;
    auto operator<=>(const Params&) const = default;

private:
    int e_;
    int m_;
};

/// Weakly decreasing sequence of positive parts; trailing zeros are implicit.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped. Throws ParseError on increasing or
    /// negative parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int rank() const noexcept { return rank_; }

    /// lambda_k, zero past the last stored part.
    int operator[](std::size_t k) const noexcept { return k < parts_.size() ? parts_[k] : 0; }
    std::span<const int> parts() const noexcept { return parts_; }

    /// "3,2,1"; empty partition prints as "-".
    std::string to_string() const;

    bool operator==(const Partition& o) const noexcept { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const noexcept { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int rank_ = 0;
};

/// Comma-separated positive integers, weakly decreasing. "" or "-" is empty.
Partition parse_partition(std::string_view text);

bool is_e_restricted(const Partition& lambda, int e);

/// Charged beta-number set: every integer <= tail_bound is a member, and the
/// members above tail_bound are exactly the window entries.
class BetaSet {
public:
    /// window must be strictly decreasing with min(window) > tail_bound.
    BetaSet(int charge, std::vector<int> window, int tail_bound);

    int charge() const noexcept { return charge_; }
    int tail_bound() const noexcept { return tail_bound_; }
    std::span<const int> window() const noexcept { return window_; }

    bool contains(int x) const noexcept;
    /// Largest member congruent to residue mod e.
    int runner_max(int residue, int e) const noexcept;

    /// Copy with `removed` taken out and `added` put in; window length kept.
    BetaSet moved(int removed, int added) const;
    /// Copy with extra beads adjoined and the charge reset.
    BetaSet adjoined(std::span<const int> beads, int new_charge) const;

    bool operator==(const BetaSet&) const = default;

private:
    int charge_;
    std::vector<int> window_;
    int tail_bound_;
};

/// Window length used when none is given: length + e + 1.
std::size_t default_window(const Partition& lambda, int e);

/// Beads lambda_k + charge - k for k < window_len; tail_bound = charge - window_len.
BetaSet beta_set(const Partition& lambda, int charge, std::size_t window_len);
Partition partition_of_beta(const BetaSet& beta);

bool is_e_core(const BetaSet& beta, int e);
bool is_e_core(const Partition& lambda, int e);

/// Young-diagram inclusion.
bool diagram_contains(const Partition& inner, const Partition& outer);

/// Every partition of n, largest first in lexicographic order.
std::vector<Partition> partitions_of(int n);

int floor_mod(int x, int e) noexcept;

} // namespace kleshchev

template <>
struct std::hash<kleshchev::Partition> {
    std::size_t operator()(const kleshchev::Partition& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};
