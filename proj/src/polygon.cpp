#include "cvx/polygon.hpp"

#include <algorithm>
#include <utility>

namespace cvx {

PointSeq::PointSeq(std::vector<Point> points, bool endpoint_relaxation)
    : points_(std::move(points)), relaxed_(endpoint_relaxation) {
    const std::size_t n = points_.size();
    if (n < 3) {
        throw InvalidPointSeq("n must be at least 3");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const bool at_end = i == 0 || i + 2 == n;
        const auto& a = points_[i];
        const auto& b = points_[i + 1];
        if (a.x > b.x) {
            throw InvalidPointSeq("x-values must be sorted: x[" + std::to_string(i + 1) +
                                  "] > x[" + std::to_string(i + 2) + "]");
        }
        if (a.x == b.x) {
            if (!relaxed_ || !at_end) {
                throw InvalidPointSeq("duplicate x at positions " + std::to_string(i + 1) +
                                      " and " + std::to_string(i + 2) +
                                      (at_end ? " (use endpoint relaxation)" : ""));
            }
            if (a.y == b.y) {
                throw InvalidPointSeq("duplicate point at positions " + std::to_string(i + 1) +
                                      " and " + std::to_string(i + 2));
            }
        }
    }
    if (points_.front().x == points_.back().x) {
        throw InvalidPointSeq("chord endpoints must differ in x");
    }
}

const char* to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::ConvexBelowChord: return "ConvexBelowChord";
        case VerdictKind::ConvexAboveChord: return "ConvexAboveChord";
        case VerdictKind::NotConvex: return "NotConvex";
        case VerdictKind::DegenerateCollinear: return "DegenerateCollinear";
    }
    return "?";
}

SlopeProfile slope_profile(const PointSeq& p) {
    const auto& pts = p.points();
    const std::size_t n = pts.size();
    SlopeProfile profile;
    profile.slopes.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (pts[i].x == pts[i + 1].x) {
            profile.slopes.emplace_back();  // vertical
        } else {
            profile.slopes.emplace_back((pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x));
        }
    }
    profile.comparisons.reserve(n - 2);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!profile.slopes[i - 1] || !profile.slopes[i]) {
            profile.comparisons.emplace_back();
            continue;
        }
        const Scalar left = (pts[i].y - pts[i - 1].y) * (pts[i + 1].x - pts[i].x);
        const Scalar right = (pts[i + 1].y - pts[i].y) * (pts[i].x - pts[i - 1].x);
        profile.comparisons.emplace_back(cmp(left, right));
    }
    return profile;
}

PolygonVerdict classify(const PointSeq& p) {
    const auto& pts = p.points();
    const std::size_t n = pts.size();
    const SlopeProfile profile = slope_profile(p);
    const bool left_vertical = !profile.slopes.front().has_value();
    const bool right_vertical = !profile.slopes.back().has_value();

    bool below_ok = true;
    bool above_ok = true;
    bool any_equal = false;
    bool all_equal = !left_vertical && !right_vertical;
    std::optional<std::size_t> first_below_violation;
    std::optional<std::size_t> first_above_violation;

    // Constraints are indexed by interior vertex (1-based i in 2..n-1); a
    // vertical endpoint edge contributes its direction check at the
    // adjacent interior vertex.
    for (std::size_t i = 2; i + 1 <= n; ++i) {
        if (i == 2 && left_vertical) {
            // Below-chord needs the vertical edge to drop from P1 to P2.
            if (pts[1].y > pts[0].y && below_ok) {
                below_ok = false;
                first_below_violation = i;
            }
            if (pts[1].y < pts[0].y && above_ok) {
                above_ok = false;
                first_above_violation = i;
            }
        }
        if (i == n - 1 && right_vertical) {
            if (pts[n - 2].y > pts[n - 1].y && below_ok) {
                below_ok = false;
                first_below_violation = i;
            }
            if (pts[n - 2].y < pts[n - 1].y && above_ok) {
                above_ok = false;
                first_above_violation = i;
            }
        }
        const auto& c = profile.comparisons[i - 2];
        if (!c) continue;
        if (*c == Ordering::Equal) {
            any_equal = true;
            continue;
        }
        all_equal = false;
        if (*c == Ordering::Greater && below_ok) {
            below_ok = false;
            first_below_violation = i;
        }
        if (*c == Ordering::Less && above_ok) {
            above_ok = false;
            first_above_violation = i;
        }
    }

    PolygonVerdict verdict;
    if (all_equal) {
        verdict.kind = VerdictKind::DegenerateCollinear;
        verdict.strict = false;
    } else if (below_ok) {
        verdict.kind = VerdictKind::ConvexBelowChord;
        verdict.strict = !any_equal;
    } else if (above_ok) {
        verdict.kind = VerdictKind::ConvexAboveChord;
        verdict.strict = !any_equal;
    } else {
        verdict.kind = VerdictKind::NotConvex;
        verdict.strict = false;
        verdict.witness = std::min(*first_below_violation, *first_above_violation);
    }
    return verdict;
}

ChordSide chord_side(const Point& p, const Point& first, const Point& last) {
    if (first.x >= last.x) {
        throw DegenerateChord("chord endpoints must satisfy first.x < last.x");
    }
    const Scalar lhs = (p.y - first.y) * (last.x - first.x);
    const Scalar rhs = (p.x - first.x) * (last.y - first.y);
    switch (cmp(lhs, rhs)) {
        case Ordering::Less: return ChordSide::Below;
        case Ordering::Equal: return ChordSide::On;
        case Ordering::Greater: return ChordSide::Above;
    }
    return ChordSide::On;
}

namespace {

// Convexity/concavity of a contiguous 0-based slice [lo, hi] of u.
bool slice_convex(const RealSeq& u, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo + 1; i + 1 <= hi; ++i) {
        if (u[i] + u[i] > u[i - 1] + u[i + 1]) return false;
    }
    return true;
}

bool slice_concave(const RealSeq& u, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo + 1; i + 1 <= hi; ++i) {
        if (u[i] + u[i] < u[i - 1] + u[i + 1]) return false;
    }
    return true;
}

HypothesisReport fail(HypothesisReport report, const char* code) {
    report.satisfied = false;
    report.failed_condition = code;
    return report;
}

}  // namespace

HypothesisReport check_hypotheses(const RealSeq& xs, const RealSeq& ys, Theorem theorem) {
    if (xs.size() != ys.size()) {
        throw LengthMismatch("coordinate sequences differ in length: " +
                             std::to_string(xs.size()) + " vs " + std::to_string(ys.size()));
    }
    if (xs.size() < 3) {
        throw PreconditionViolated("hypothesis check needs at least 3 points");
    }
    HypothesisReport report;
    report.theorem = theorem;
    const SeqReport xr = analyze_sequence(xs);
    const SeqReport yr = analyze_sequence(ys);

    switch (theorem) {
        case Theorem::Prop1:
        case Theorem::Thm15:
            if (!xr.is_strictly_increasing) return fail(report, "xs_not_strictly_increasing");
            if (!xr.is_concave) return fail(report, "xs_not_concave");
            if (!yr.is_convex) return fail(report, "ys_not_convex");
            if (!yr.is_increasing) return fail(report, "ys_not_increasing");
            break;
        case Theorem::Prop2:
        case Theorem::Thm16:
            if (!xr.is_strictly_increasing) return fail(report, "xs_not_strictly_increasing");
            if (!xr.is_convex) return fail(report, "xs_not_convex");
            if (!yr.is_convex) return fail(report, "ys_not_convex");
            if (!yr.is_decreasing) return fail(report, "ys_not_decreasing");
            break;
        case Theorem::Thm17: {
            if (!yr.is_convex) return fail(report, "ys_not_convex");
            if (!xr.is_increasing) return fail(report, "xs_not_increasing");
            // The minimizers of a convex sequence form a contiguous plateau;
            // try the split at both plateau ends, leftmost first.
            std::size_t min_at = 0;
            for (std::size_t i = 1; i < ys.size(); ++i) {
                if (ys[i] < ys[min_at]) min_at = i;
            }
            std::size_t plateau_right = min_at;
            while (plateau_right + 1 < ys.size() && ys[plateau_right + 1] == ys[min_at]) {
                ++plateau_right;
            }
            for (std::size_t m : {min_at, plateau_right}) {
                if (slice_convex(xs, 0, m) && slice_concave(xs, m, xs.size() - 1)) {
                    report.pivot_m = m + 1;  // 1-based
                    break;
                }
                if (m == plateau_right) {
                    return fail(report, "x_split_not_convex_concave");
                }
            }
            break;
        }
    }
    report.satisfied = true;
    return report;
}

bool slope_inequality_from_hypotheses(const RealSeq& xs, const RealSeq& ys, Theorem which) {
    if (which != Theorem::Prop1 && which != Theorem::Prop2) {
        throw PreconditionViolated("slope inequality check applies to Prop1 or Prop2");
    }
    const HypothesisReport report = check_hypotheses(xs, ys, which);
    if (!report.satisfied) {
        throw PreconditionViolated("hypotheses not satisfied: " + *report.failed_condition);
    }
    // Widths are positive (xs strictly increasing), so cross-multiplying
    // preserves the inequality direction.
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const Scalar left = (ys[i] - ys[i - 1]) * (xs[i + 1] - xs[i]);
        const Scalar right = (ys[i + 1] - ys[i]) * (xs[i] - xs[i - 1]);
        if (left > right) return false;
    }
    return true;
}

}  // namespace cvx
