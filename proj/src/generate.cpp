#include "cvx/generate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace cvx {

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

SplitMix64 instance_rng(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

void validate(const FuzzConfig& cfg) {
    if (cfg.instances < 1) {
        throw PreconditionViolated("instances must be at least 1");
    }
    if (cfg.n_min < 3) {
        throw PreconditionViolated("n-min must be at least 3");
    }
    if (cfg.n_max < cfg.n_min) {
        throw PreconditionViolated("n-max must be at least n-min");
    }
    if (cfg.coord_range < 1) {
        throw PreconditionViolated("coord-range must be at least 1");
    }
    if (2 * cfg.coord_range + 1 < cfg.n_max) {
        throw PreconditionViolated("coord-range too small for n-max distinct x-values");
    }
}

namespace {

// k distinct integers from [-r, r], sorted ascending (partial Fisher-Yates).
std::vector<std::int64_t> distinct_sorted(SplitMix64& rng, int k, std::int64_t r) {
    std::vector<std::int64_t> pool(2 * r + 1);
    std::iota(pool.begin(), pool.end(), -r);
    for (int i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(rng.uniform(i, static_cast<std::int64_t>(pool.size()) - 1));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::vector<std::int64_t> sorted_draws(SplitMix64& rng, int k, std::int64_t lo, std::int64_t hi,
                                       bool ascending) {
    std::vector<std::int64_t> v(k);
    for (auto& d : v) d = rng.uniform(lo, hi);
    std::sort(v.begin(), v.end());
    if (!ascending) std::reverse(v.begin(), v.end());
    return v;
}

std::vector<Point> to_points(const std::vector<std::int64_t>& xs,
                             const std::vector<std::int64_t>& ys) {
    std::vector<Point> pts(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        pts[i] = Point{Scalar(xs[i]), Scalar(ys[i])};
    }
    return pts;
}

PointSeq gen_mixed(const FuzzConfig& cfg, SplitMix64& rng) {
    const int n = static_cast<int>(rng.uniform(cfg.n_min, cfg.n_max));
    const std::int64_t r = cfg.coord_range;

    bool dup_left = false;
    bool dup_right = false;
    if (cfg.relax_endpoints) {
        switch (rng.uniform(0, 2)) {
            case 0: dup_left = true; break;
            case 1: dup_right = true; break;
            default: dup_left = dup_right = true; break;
        }
        if (n == 3 && dup_left && dup_right) {
            dup_right = false;  // x1 = x2 = x3 would degenerate the chord
        }
    }
    const int distinct_n = n - (dup_left ? 1 : 0) - (dup_right ? 1 : 0);
    const std::vector<std::int64_t> base = distinct_sorted(rng, distinct_n, r);

    std::vector<std::int64_t> xs;
    xs.reserve(n);
    if (dup_left) xs.push_back(base.front());
    xs.insert(xs.end(), base.begin(), base.end());
    if (dup_right) xs.push_back(base.back());

    std::vector<std::int64_t> ys(n);
    for (auto& y : ys) y = rng.uniform(-r, r);
    if (dup_left) {
        while (ys[1] == ys[0]) ys[1] = rng.uniform(-r, r);
    }
    if (dup_right) {
        while (ys[n - 2] == ys[n - 1]) ys[n - 2] = rng.uniform(-r, r);
    }
    return PointSeq(to_points(xs, ys), cfg.relax_endpoints);
}

PointSeq gen_convex_only(const FuzzConfig& cfg, SplitMix64& rng) {
    const int n = static_cast<int>(rng.uniform(cfg.n_min, cfg.n_max));
    const std::int64_t r = cfg.coord_range;
    const std::vector<std::int64_t> xs = distinct_sorted(rng, n, r);
    const bool above = rng.uniform(0, 1) == 1;
    std::vector<std::int64_t> slopes = sorted_draws(rng, n - 1, -r, r, !above);

    std::vector<std::int64_t> ys(n);
    ys[0] = rng.uniform(-r, r);
    for (int i = 0; i + 1 < n; ++i) {
        ys[i + 1] = ys[i] + slopes[i] * (xs[i + 1] - xs[i]);
    }
    return PointSeq(to_points(xs, ys), false);
}

std::vector<std::int64_t> prefix_sums(std::int64_t first, const std::vector<std::int64_t>& diffs) {
    std::vector<std::int64_t> v;
    v.reserve(diffs.size() + 1);
    v.push_back(first);
    for (std::int64_t d : diffs) v.push_back(v.back() + d);
    return v;
}

PointSeq gen_hypothesis(const FuzzConfig& cfg, SplitMix64& rng) {
    const int n = static_cast<int>(rng.uniform(cfg.n_min, cfg.n_max));
    const std::int64_t r = cfg.coord_range;
    const std::int64_t b = std::max<std::int64_t>(1, r / 4);  // difference bound
    const std::int64_t x1 = rng.uniform(-r, r);
    const std::int64_t y1 = rng.uniform(-r, r);

    std::vector<std::int64_t> dx;
    std::vector<std::int64_t> dy;
    switch (cfg.mode) {
        case GenMode::HypThm15:
            // xs strictly increasing and concave; ys increasing and convex.
            dx = sorted_draws(rng, n - 1, 1, b, false);
            dy = sorted_draws(rng, n - 1, 0, b, true);
            break;
        case GenMode::HypThm16:
            // xs strictly increasing and convex; ys convex, nonincreasing.
            dx = sorted_draws(rng, n - 1, 1, b, true);
            dy = sorted_draws(rng, n - 1, -b, 0, true);
            break;
        case GenMode::HypThm17: {
            // ys convex with a unique minimum at position m; xs increasing,
            // convex up to m and concave from m on.
            const int m = static_cast<int>(rng.uniform(1, n));
            const auto dx_left = sorted_draws(rng, m - 1, 1, b, true);
            const auto dx_right = sorted_draws(rng, n - m, 1, b, false);
            dx = dx_left;
            dx.insert(dx.end(), dx_right.begin(), dx_right.end());
            const auto dy_left = sorted_draws(rng, m - 1, -b, -1, true);
            const auto dy_right = sorted_draws(rng, n - m, 1, b, true);
            dy = dy_left;
            dy.insert(dy.end(), dy_right.begin(), dy_right.end());
            break;
        }
        default:
            throw PreconditionViolated("not a hypothesis mode");
    }
    return PointSeq(to_points(prefix_sums(x1, dx), prefix_sums(y1, dy)), false);
}

}  // namespace

PointSeq generate_instance(const FuzzConfig& cfg, std::uint64_t index) {
    SplitMix64 rng = instance_rng(cfg.seed, index);
    switch (cfg.mode) {
        case GenMode::Mixed: return gen_mixed(cfg, rng);
        case GenMode::ConvexOnly: return gen_convex_only(cfg, rng);
        default: return gen_hypothesis(cfg, rng);
    }
}

}  // namespace cvx
