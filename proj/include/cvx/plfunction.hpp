#pragma once

#include <cstddef>
#include <vector>

#include "cvx/polygon.hpp"
#include "cvx/scalar.hpp"

namespace cvx {

/// Piecewise-linear interpolant of a breakpoint list with strictly
/// increasing x, defined on [x1, xn]. Segment i (0-based) joins
/// breakpoints i and i+1.
class PLFunction {
public:
    explicit PLFunction(std::vector<Point> breakpoints);

    const std::vector<Point>& breakpoints() const { return breakpoints_; }
    std::size_t segment_count() const { return breakpoints_.size() - 1; }

    const Scalar& domain_min() const { return breakpoints_.front().x; }
    const Scalar& domain_max() const { return breakpoints_.back().x; }
    bool in_domain(const Scalar& x) const { return domain_min() <= x && x <= domain_max(); }

    /// Index of the segment used to evaluate at x; at a shared breakpoint
    /// this is the right segment (both agree on the value).
    std::size_t segment_index(const Scalar& x) const;

    /// Slope of segment i (one exact division).
    Scalar segment_slope(std::size_t i) const;

    /// Exact value at x in [x1, xn].
    Scalar eval(const Scalar& x) const;

private:
    std::vector<Point> breakpoints_;
};

/// True iff consecutive segment slopes are nondecreasing, which for a
/// piecewise-linear function is equivalent to the three-point
/// difference-quotient definition of convexity.
bool is_convex_function(const PLFunction& f);

/// Whether p lies on or above the graph: p.x in the domain and
/// f(p.x) <= p.y, decided without division.
bool epigraph_contains(const PLFunction& f, const Point& p);

/// Slope of the chord of f between x1 and x2 (x1 < x2, both in domain).
Scalar chord_slope(const PLFunction& f, const Scalar& x1, const Scalar& x2);

}  // namespace cvx
