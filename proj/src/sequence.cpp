#include "cvx/sequence.hpp"

#include <utility>

namespace cvx {

RatioList::RatioList(std::vector<Ratio> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) {
        throw PreconditionViolated("ratio list must be nonempty");
    }
    for (const auto& r : pairs_) {
        if (r.den.sign() <= 0) {
            throw NonPositiveDenominator("ratio denominator must be positive, got " + r.den.str());
        }
    }
}

SeqReport analyze_sequence(const RealSeq& u) {
    if (u.empty()) {
        throw PreconditionViolated("sequence must be nonempty");
    }
    const std::size_t n = u.size();
    SeqReport report;
    report.is_convex = true;
    report.is_concave = true;
    report.is_increasing = true;
    report.is_strictly_increasing = true;
    report.is_decreasing = true;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (u[i] > u[i + 1]) report.is_increasing = false;
        if (u[i] >= u[i + 1]) report.is_strictly_increasing = false;
        if (u[i] < u[i + 1]) report.is_decreasing = false;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const Scalar twice = u[i] + u[i];
        const Scalar ends = u[i - 1] + u[i + 1];
        if (twice > ends) {
            report.is_convex = false;
            if (!report.first_violation_index) {
                report.first_violation_index = i + 1;  // 1-based
            }
        }
        if (twice < ends) {
            report.is_concave = false;
        }
    }
    return report;
}

MediantBounds mediant_bounds(const RatioList& ratios) {
    const auto& pairs = ratios.pairs();
    std::size_t lo_at = 0;
    std::size_t hi_at = 0;
    Scalar num_sum = pairs[0].num;
    Scalar den_sum = pairs[0].den;
    // a_i/b_i < a_j/b_j <=> a_i*b_j < a_j*b_i since every b is positive.
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        num_sum += pairs[i].num;
        den_sum += pairs[i].den;
        if (pairs[i].num * pairs[lo_at].den < pairs[lo_at].num * pairs[i].den) lo_at = i;
        if (pairs[i].num * pairs[hi_at].den > pairs[hi_at].num * pairs[i].den) hi_at = i;
    }
    return MediantBounds{
        pairs[lo_at].num / pairs[lo_at].den,
        num_sum / den_sum,
        pairs[hi_at].num / pairs[hi_at].den,
    };
}

MediantBounds mean_bounds(const RealSeq& x, MeanKind kind) {
    if (x.empty()) {
        throw PreconditionViolated("sequence must be nonempty");
    }
    std::vector<RatioList::Ratio> pairs;
    pairs.reserve(x.size());
    if (kind == MeanKind::Arithmetic) {
        for (const Scalar& v : x) {
            pairs.push_back({v, Scalar(1)});
        }
    } else {
        for (const Scalar& v : x) {
            if (v.sign() <= 0) {
                throw NonPositiveValue("harmonic mean requires positive values, got " + v.str());
            }
            pairs.push_back({Scalar(1), Scalar(1) / v});
        }
    }
    return mediant_bounds(RatioList(std::move(pairs)));
}

namespace {

void require_convex(const RealSeq& u) {
    if (!analyze_sequence(u).is_convex) {
        throw PreconditionViolated("sequence is not convex");
    }
}

bool pivot_clauses(const RealSeq& u, std::size_t m) {
    bool left = true;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (u[i] > u[m - 1]) {
            left = false;
            break;
        }
    }
    if (left) return true;
    for (std::size_t i = m; i < u.size(); ++i) {
        if (u[m - 1] > u[i]) return false;
    }
    return true;
}

}  // namespace

bool check_pivot(const RealSeq& u, std::size_t m) {
    require_convex(u);
    if (m < 1 || m > u.size()) {
        throw PreconditionViolated("pivot index out of range");
    }
    return pivot_clauses(u, m);
}

std::size_t find_pivot(const RealSeq& u) {
    require_convex(u);
    for (std::size_t m = 1; m <= u.size(); ++m) {
        if (pivot_clauses(u, m)) return m;
    }
    // Unreachable: the left clause is vacuous at m = 1.
    throw OracleInconsistency("no pivot found in a convex sequence");
}

}  // namespace cvx
