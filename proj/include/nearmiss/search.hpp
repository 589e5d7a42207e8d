#pragma once

// Exhaustive search for positive (x, y, z) with x <= y and
// |x^4 + y^4 - z^2| <= threshold, optionally keeping only one exact delta.
//
// For each pair the candidate z run over [ceil sqrt(s - T), floor sqrt(s + T)]
// with s = x^4 + y^4. Once s > T^2 that interval holds at most isqrt(s) and
// isqrt(s) + 1, so the inner loop is constant work except for tiny s.
//
// Pairs are evaluated in 128-bit arithmetic while max_x <= kFixedWidthMaxX and
// the threshold fits in 64 bits (s + T < 2^126); beyond that the scan runs on
// Integer. Both paths produce identical hits.

#include "nearmiss/integer.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace nearmiss {

inline constexpr std::uint64_t kFixedWidthMaxX = (std::uint64_t{1} << 31) - 1;

enum class SearchArithmetic {
    automatic,
    fixed_width,
    arbitrary,
};

struct SearchConfig {
    Integer min_x = 1;
    Integer max_x = 1;
    /// Bound on |delta|. Defaults to |exact_residual| when unset.
    std::optional<Integer> threshold;
    std::optional<Integer> exact_residual;
    std::size_t workers = 1;
    SearchArithmetic arithmetic = SearchArithmetic::automatic;

    Integer effective_threshold() const;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;

    /// True when the 128-bit path can represent every intermediate.
    bool fixed_width_eligible() const;
};

struct SearchHit {
    Integer x;
    Integer y;
    Integer z;
    /// x^4 + y^4 - z^2
    Integer delta;

    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

/// Output order: (y, x, z) ascending.
bool hit_order(const SearchHit& lhs, const SearchHit& rhs);

/// Called from the scanning thread with (rows finished, total rows); one row
/// is one value of x.
using SearchProgress = std::function<void(std::uint64_t, std::uint64_t)>;

/// Every qualifying hit exactly once, sorted by hit_order, independent of the
/// worker count. Throws std::invalid_argument for an invalid config.
std::vector<SearchHit> scan(const SearchConfig& cfg, const SearchProgress& progress = {});

/// Recomputes delta from x, y, z and compares it with the stored value.
bool verify_hit(const SearchHit& hit);

} // namespace nearmiss
