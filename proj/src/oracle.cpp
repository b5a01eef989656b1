#include "cvx/oracle.hpp"

#include <algorithm>
#include <utility>

namespace cvx {

Orientation orient(const Point& a, const Point& b, const Point& c) {
    const Scalar cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    switch (cross.sign()) {
        case 1: return Orientation::CounterClockwise;
        case -1: return Orientation::Clockwise;
        default: return Orientation::Collinear;
    }
}

PolygonVerdict oracle_classify(const PointSeq& p) {
    const auto& pts = p.points();
    const std::size_t n = pts.size();

    bool any_cw = false;
    bool any_ccw = false;
    bool any_collinear = false;
    std::optional<std::size_t> conflict_at;
    for (std::size_t i = 0; i < n; ++i) {
        const Orientation o = orient(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
        if (o == Orientation::Collinear) {
            any_collinear = true;
            continue;
        }
        if (o == Orientation::Clockwise) any_cw = true;
        if (o == Orientation::CounterClockwise) any_ccw = true;
        if (any_cw && any_ccw && !conflict_at) {
            conflict_at = (i + 1) % n + 1;  // 1-based middle vertex of the triple
        }
    }

    PolygonVerdict verdict;
    if (any_cw && any_ccw) {
        verdict.kind = VerdictKind::NotConvex;
        verdict.strict = false;
        verdict.witness = conflict_at;
        return verdict;
    }
    if (!any_cw && !any_ccw) {
        verdict.kind = VerdictKind::DegenerateCollinear;
        verdict.strict = false;
        return verdict;
    }

    // Convex. The chord P1Pn is an edge of the polygon, so every off-chord
    // vertex must sit on the same side of it.
    bool saw_below = false;
    bool saw_above = false;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        switch (chord_side(pts[i], pts.front(), pts.back())) {
            case ChordSide::Below: saw_below = true; break;
            case ChordSide::Above: saw_above = true; break;
            case ChordSide::On: break;
        }
    }
    if (saw_below == saw_above) {
        throw OracleInconsistency("convex cycle but chord sides disagree");
    }
    verdict.kind = saw_below ? VerdictKind::ConvexBelowChord : VerdictKind::ConvexAboveChord;
    verdict.strict = !any_collinear;
    return verdict;
}

namespace {

bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// Strict chain: collinear middle points are popped along with reflex ones.
std::vector<Point> build_chain(const std::vector<Point>& sorted, bool lower) {
    std::vector<Point> chain;
    auto turns_left = [&](const Point& o, const Point& a, const Point& b) {
        return orient(o, a, b) == Orientation::CounterClockwise;
    };
    if (lower) {
        for (const Point& p : sorted) {
            while (chain.size() >= 2 && !turns_left(chain[chain.size() - 2], chain.back(), p)) {
                chain.pop_back();
            }
            chain.push_back(p);
        }
    } else {
        for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
            while (chain.size() >= 2 && !turns_left(chain[chain.size() - 2], chain.back(), *it)) {
                chain.pop_back();
            }
            chain.push_back(*it);
        }
    }
    return chain;
}

// Whether q lies on the polyline (a chain edge or vertex).
bool on_chain(const std::vector<Point>& chain, const Point& q) {
    if (chain.size() == 1) return chain.front() == q;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const Point& a = chain[i];
        const Point& b = chain[i + 1];
        const Scalar& lo = a.x < b.x ? a.x : b.x;
        const Scalar& hi = a.x < b.x ? b.x : a.x;
        if (q.x < lo || hi < q.x) continue;
        if (orient(a, b, q) == Orientation::Collinear) return true;
    }
    return false;
}

}  // namespace

std::vector<Point> convex_hull(std::vector<Point> points) {
    if (points.empty()) {
        throw PreconditionViolated("convex hull needs at least one point");
    }
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) return points;

    std::vector<Point> lower = build_chain(points, true);
    std::vector<Point> upper = build_chain(points, false);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

bool hull_consistent(const PointSeq& p, const PolygonVerdict& verdict) {
    const auto& pts = p.points();
    const std::size_t n = pts.size();
    if (pts[0].x == pts[1].x || pts[n - 2].x == pts[n - 1].x) {
        return true;  // vertical endpoint edge: chains do not apply
    }

    std::vector<Point> sorted = pts;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    const std::vector<Point> lower = build_chain(sorted, true);
    const std::vector<Point> upper = build_chain(sorted, false);

    bool all_on_lower = true;
    bool all_on_upper = true;
    for (const Point& q : pts) {
        all_on_lower = all_on_lower && on_chain(lower, q);
        all_on_upper = all_on_upper && on_chain(upper, q);
    }
    const bool all_collinear = all_on_lower && all_on_upper;

    switch (verdict.kind) {
        case VerdictKind::DegenerateCollinear:
            if (!all_collinear) return false;
            break;
        case VerdictKind::ConvexBelowChord:
            if (!(all_on_lower && !all_collinear)) return false;
            break;
        case VerdictKind::ConvexAboveChord:
            if (!(all_on_upper && !all_collinear)) return false;
            break;
        case VerdictKind::NotConvex:
            if (all_on_lower || all_on_upper) return false;
            break;
    }

    const std::vector<Point> hull = convex_hull(pts);
    if (verdict.kind == VerdictKind::ConvexBelowChord ||
        verdict.kind == VerdictKind::ConvexAboveChord) {
        if (verdict.strict) {
            if (hull.size() != n) return false;
            std::vector<Point> hull_sorted = hull;
            std::sort(hull_sorted.begin(), hull_sorted.end(), lex_less);
            if (hull_sorted != sorted) return false;
        } else {
            if (hull.size() >= n) return false;
        }
    }
    if (verdict.kind == VerdictKind::DegenerateCollinear && hull.size() != 2) return false;
    return true;
}

}  // namespace cvx
