#include "nearmiss/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <future>
#include <stdexcept>
#include <tuple>

namespace nearmiss {

namespace {

__extension__ typedef __int128 int128_t;

// floor(sqrt(v)) for v < 2^126. The long double estimate is within a few
// units of the answer; the correction loops make the result exact.
std::uint64_t isqrt_u128(uint128_t v) {
    auto r = static_cast<uint128_t>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t ceil_sqrt_u128(uint128_t v) {
    std::uint64_t r = isqrt_u128(v);
    return uint128_t{r} * r < v ? r + 1 : r;
}

Integer ceil_sqrt(const Integer& v) {
    Integer r = isqrt(v);
    return r * r < v ? r + 1 : r;
}

Integer fourth(const Integer& v) {
    Integer sq = v * v;
    return sq * sq;
}

class FixedWidthScanner {
public:
    explicit FixedWidthScanner(const SearchConfig& cfg)
        : threshold_(*cfg.effective_threshold().to_uint64()) {
        if (cfg.exact_residual) {
            exact_ = true;
            const std::int64_t r = *cfg.exact_residual->to_int64();
            residual_ = r;
        }
    }

    void row(std::uint64_t x, std::uint64_t max_x, std::vector<SearchHit>& out) const {
        const uint128_t x2 = uint128_t{x} * x;
        const uint128_t x4 = x2 * x2;
        for (std::uint64_t y = x; y <= max_x; ++y) {
            const uint128_t y2 = uint128_t{y} * y;
            const uint128_t s = x4 + y2 * y2;
            if (exact_) {
                const int128_t target = static_cast<int128_t>(s) - residual_;
                if (target <= 0) continue;
                const std::uint64_t z = isqrt_u128(static_cast<uint128_t>(target));
                if (uint128_t{z} * z == static_cast<uint128_t>(target)) emit(x, y, z, residual_, out);
                continue;
            }
            const std::uint64_t lo = s > threshold_ ? std::max<std::uint64_t>(1, ceil_sqrt_u128(s - threshold_)) : 1;
            const std::uint64_t hi = isqrt_u128(s + threshold_);
            for (std::uint64_t z = lo; z <= hi; ++z) {
                emit(x, y, z, static_cast<int128_t>(s) - static_cast<int128_t>(uint128_t{z} * z), out);
            }
        }
    }

private:
    uint128_t threshold_;
    bool exact_ = false;
    int128_t residual_ = 0;

    static void emit(std::uint64_t x, std::uint64_t y, std::uint64_t z, int128_t delta,
                     std::vector<SearchHit>& out) {
        Integer d = Integer::from_uint128(static_cast<uint128_t>(delta < 0 ? -delta : delta));
        out.push_back(SearchHit{Integer(x), Integer(y), Integer(z), delta < 0 ? -d : d});
    }
};

class ArbitraryScanner {
public:
    explicit ArbitraryScanner(const SearchConfig& cfg)
        : threshold_(cfg.effective_threshold()), residual_(cfg.exact_residual) {}

    void row(std::uint64_t x_value, std::uint64_t max_x, std::vector<SearchHit>& out) const {
        const Integer x = x_value;
        const Integer x4 = fourth(x);
        for (std::uint64_t y_value = x_value; y_value <= max_x; ++y_value) {
            const Integer y = y_value;
            const Integer s = x4 + fourth(y);
            if (residual_) {
                const Integer target = s - *residual_;
                if (target.sign() <= 0) continue;
                Integer z = isqrt(target);
                if (z * z == target) out.push_back(SearchHit{x, y, std::move(z), *residual_});
                continue;
            }
            Integer z = s > threshold_ ? std::max(Integer(1), ceil_sqrt(s - threshold_)) : Integer(1);
            const Integer hi = isqrt(s + threshold_);
            for (; z <= hi; z += 1) out.push_back(SearchHit{x, y, z, s - z * z});
        }
    }

private:
    Integer threshold_;
    std::optional<Integer> residual_;
};

} // namespace

Integer SearchConfig::effective_threshold() const {
    if (threshold) return *threshold;
    if (exact_residual) return exact_residual->abs();
    return 0;
}

void SearchConfig::validate() const {
    if (min_x < Integer(1)) throw std::invalid_argument("min_x must be at least 1");
    if (max_x < min_x) throw std::invalid_argument("max_x must not be below min_x");
    if (!max_x.to_uint64() || *max_x.to_uint64() == UINT64_MAX) {
        throw std::invalid_argument("max_x is too large to enumerate");
    }
    if (!threshold && !exact_residual) {
        throw std::invalid_argument("either a threshold or an exact residual is required");
    }
    if (threshold && threshold->is_negative()) {
        throw std::invalid_argument("threshold must be non-negative");
    }
    if (threshold && exact_residual && exact_residual->abs() > *threshold) {
        throw std::invalid_argument("exact residual " + exact_residual->to_string() +
                                    " lies outside threshold " + threshold->to_string());
    }
    if (workers == 0) throw std::invalid_argument("workers must be at least 1");
    if (arithmetic == SearchArithmetic::fixed_width && !fixed_width_eligible()) {
        throw std::invalid_argument("range or threshold exceeds the fixed-width bound");
    }
}

bool SearchConfig::fixed_width_eligible() const {
    const auto hi = max_x.to_uint64();
    if (!hi || *hi > kFixedWidthMaxX) return false;
    if (!effective_threshold().to_uint64()) return false;
    if (exact_residual && !exact_residual->to_int64()) return false;
    return true;
}

bool hit_order(const SearchHit& lhs, const SearchHit& rhs) {
    return std::tie(lhs.y, lhs.x, lhs.z) < std::tie(rhs.y, rhs.x, rhs.z);
}

std::vector<SearchHit> scan(const SearchConfig& cfg, const SearchProgress& progress) {
    cfg.validate();

    const std::uint64_t min_x = *cfg.min_x.to_uint64();
    const std::uint64_t max_x = *cfg.max_x.to_uint64();
    const std::uint64_t rows = max_x - min_x + 1;
    const std::uint64_t workers = std::min<std::uint64_t>(cfg.workers, rows);

    const bool fixed = cfg.arithmetic == SearchArithmetic::fixed_width ||
                       (cfg.arithmetic == SearchArithmetic::automatic && cfg.fixed_width_eligible());

    std::atomic<std::uint64_t> rows_done{0};
    auto run = [&](auto scanner) {
        // Interleaved stripes balance the triangular row lengths.
        std::vector<std::future<std::vector<SearchHit>>> parts;
        for (std::uint64_t w = 0; w < workers; ++w) {
            parts.push_back(std::async(std::launch::async, [&, w, scanner] {
                std::vector<SearchHit> hits;
                for (std::uint64_t x = min_x + w; x <= max_x; x += workers) {
                    scanner.row(x, max_x, hits);
                    rows_done.fetch_add(1, std::memory_order_relaxed);
                    if (max_x - x < workers) break;
                }
                return hits;
            }));
        }
        if (progress) {
            for (auto& part : parts) {
                while (part.wait_for(std::chrono::milliseconds(200)) != std::future_status::ready) {
                    progress(rows_done.load(std::memory_order_relaxed), rows);
                }
            }
            progress(rows, rows);
        }
        std::vector<SearchHit> merged;
        for (auto& part : parts) {
            std::vector<SearchHit> hits = part.get();
            merged.insert(merged.end(), std::make_move_iterator(hits.begin()),
                          std::make_move_iterator(hits.end()));
        }
        return merged;
    };

    std::vector<SearchHit> hits = fixed ? run(FixedWidthScanner(cfg)) : run(ArbitraryScanner(cfg));
    std::sort(hits.begin(), hits.end(), hit_order);
    return hits;
}

bool verify_hit(const SearchHit& hit) {
    return fourth(hit.x) + fourth(hit.y) - hit.z * hit.z == hit.delta;
}

} // namespace nearmiss
