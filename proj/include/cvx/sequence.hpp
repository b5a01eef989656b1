#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cvx/scalar.hpp"

namespace cvx {

/// A finite sequence of exact scalars. Indices in reports are 1-based.
using RealSeq = std::vector<Scalar>;

/// A list of fractions a_i/b_i with positive denominators, kept as pairs so
/// the bounds can be computed without dividing.
class RatioList {
public:
    struct Ratio {
        Scalar num;
        Scalar den;
    };

    explicit RatioList(std::vector<Ratio> pairs);

    const std::vector<Ratio>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

private:
    std::vector<Ratio> pairs_;
};

struct SeqReport {
    bool is_convex = false;
    bool is_concave = false;
    bool is_increasing = false;
    bool is_strictly_increasing = false;
    bool is_decreasing = false;
    // First 1-based interior index where 2u_i <= u_{i-1} + u_{i+1} fails;
    // empty when the sequence is convex.
    std::optional<std::size_t> first_violation_index;
};

struct MediantBounds {
    Scalar lo;
    Scalar mid;
    Scalar hi;
};

enum class MeanKind { Arithmetic, Harmonic };

/// Convexity, concavity, and monotonicity flags for a sequence. The defining
/// inequality for convexity is 2u_i <= u_{i-1} + u_{i+1} over interior
/// indices; sequences of length <= 2 are vacuously convex and concave.
SeqReport analyze_sequence(const RealSeq& u);

/// min, mediant (sum of numerators over sum of denominators), and max of the
/// component ratios. The mediant always lies between the extremes.
MediantBounds mediant_bounds(const RatioList& ratios);

/// Arithmetic or harmonic mean of a sequence together with its min and max,
/// computed through mediant_bounds. Harmonic requires every value positive.
MediantBounds mean_bounds(const RealSeq& x, MeanKind kind);

/// True iff u_i <= u_m for all i < m, or u_m <= u_i for all i > m
/// (either clause vacuous at the ends). m is 1-based. Requires u convex.
bool check_pivot(const RealSeq& u, std::size_t m);

/// Smallest 1-based m for which check_pivot holds. Requires u convex.
std::size_t find_pivot(const RealSeq& u);

}  // namespace cvx
