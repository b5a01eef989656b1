#include "cvx/plfunction.hpp"

#include <utility>

namespace cvx {

PLFunction::PLFunction(std::vector<Point> breakpoints) : breakpoints_(std::move(breakpoints)) {
    if (breakpoints_.size() < 2) {
        throw PreconditionViolated("a piecewise-linear function needs at least 2 breakpoints");
    }
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (breakpoints_[i].x >= breakpoints_[i + 1].x) {
            throw PreconditionViolated("breakpoint x-values must be strictly increasing");
        }
    }
}

std::size_t PLFunction::segment_index(const Scalar& x) const {
    if (!in_domain(x)) {
        throw OutOfDomain("x = " + x.str() + " outside [" + domain_min().str() + ", " +
                          domain_max().str() + "]");
    }
    // Rightmost segment whose left breakpoint is <= x, except at the very
    // right end where only the last segment contains x.
    std::size_t lo = 0;
    std::size_t hi = segment_count() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi + 1) / 2;
        if (breakpoints_[mid].x <= x) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

Scalar PLFunction::segment_slope(std::size_t i) const {
    const Point& a = breakpoints_[i];
    const Point& b = breakpoints_[i + 1];
    return (b.y - a.y) / (b.x - a.x);
}

Scalar PLFunction::eval(const Scalar& x) const {
    const std::size_t i = segment_index(x);
    const Point& a = breakpoints_[i];
    const Point& b = breakpoints_[i + 1];
    const Scalar t = (b.x - x) / (b.x - a.x);
    return t * a.y + (Scalar(1) - t) * b.y;
}

bool is_convex_function(const PLFunction& f) {
    const auto& bp = f.breakpoints();
    for (std::size_t i = 1; i + 1 < bp.size(); ++i) {
        const Scalar left = (bp[i].y - bp[i - 1].y) * (bp[i + 1].x - bp[i].x);
        const Scalar right = (bp[i + 1].y - bp[i].y) * (bp[i].x - bp[i - 1].x);
        if (left > right) return false;
    }
    return true;
}

bool epigraph_contains(const PLFunction& f, const Point& p) {
    if (!f.in_domain(p.x)) return false;
    const std::size_t i = f.segment_index(p.x);
    const Point& a = f.breakpoints()[i];
    const Point& b = f.breakpoints()[i + 1];
    // f(p.x) <= p.y cross-multiplied by the positive segment width.
    return (p.y - a.y) * (b.x - a.x) >= (p.x - a.x) * (b.y - a.y);
}

Scalar chord_slope(const PLFunction& f, const Scalar& x1, const Scalar& x2) {
    if (x1 >= x2) {
        throw EmptyInterval("chord needs x1 < x2, got x1 = " + x1.str() + ", x2 = " + x2.str());
    }
    return (f.eval(x2) - f.eval(x1)) / (x2 - x1);
}

}  // namespace cvx
