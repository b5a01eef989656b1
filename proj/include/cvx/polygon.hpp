#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cvx/scalar.hpp"
#include "cvx/sequence.hpp"

namespace cvx {

struct Point {
    Scalar x;
    Scalar y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

/// An x-sorted list of at least three distinct points. The interior
/// x-values must be strictly increasing; with endpoint relaxation enabled
/// the first and last edges may be vertical (x1 == x2 and/or
/// x_{n-1} == x_n), but the chord endpoints must still differ in x.
class PointSeq {
public:
    PointSeq(std::vector<Point> points, bool endpoint_relaxation = false);

    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    bool endpoint_relaxation() const { return relaxed_; }

private:
    std::vector<Point> points_;
    bool relaxed_;
};

/// Edge slopes in x-order plus the orderings between consecutive slopes.
/// A vertical edge (possible only at a relaxed endpoint) has no slope and
/// takes no part in any comparison; both are stored as empty optionals.
struct SlopeProfile {
    std::vector<std::optional<Scalar>> slopes;        // length n-1
    std::vector<std::optional<Ordering>> comparisons; // length n-2
};

enum class VerdictKind {
    ConvexBelowChord,
    ConvexAboveChord,
    NotConvex,
    DegenerateCollinear,
};

struct PolygonVerdict {
    VerdictKind kind = VerdictKind::NotConvex;
    // True when every defined slope comparison is strict; always false for
    // NotConvex and DegenerateCollinear.
    bool strict = false;
    // For NotConvex: the earliest interior index (1-based, in 2..n-1) at
    // which one of the two monotone directions is violated.
    std::optional<std::size_t> witness;
};

const char* to_string(VerdictKind kind);

enum class ChordSide { Below, On, Above };

enum class Theorem { Prop1, Prop2, Thm15, Thm16, Thm17 };

struct HypothesisReport {
    Theorem theorem;
    bool satisfied = false;
    std::optional<std::string> failed_condition;
    std::optional<std::size_t> pivot_m;  // Thm17 only: the split index that worked
};

/// Exact edge slopes and consecutive-slope orderings. Comparisons are
/// decided without division: (y_{i+1}-y_i)(x_i-x_{i-1}) against
/// (y_i-y_{i-1})(x_{i+1}-x_i), both widths positive.
SlopeProfile slope_profile(const PointSeq& p);

/// Classifies the x-sorted points as a convex polygon below or above the
/// chord P1Pn, all-collinear, or not convex. Nondecreasing slopes give
/// below-chord, nonincreasing give above-chord; a vertical endpoint edge
/// must point away from the polygon's side of the chord (y2 < y1 for
/// below-chord at a relaxed left end, mirrored on the right and for
/// above-chord).
PolygonVerdict classify(const PointSeq& p);

/// Which side of the chord through `first` and `last` the point lies on.
/// Below means strictly inside the lower half-space; On means exactly on
/// the chord's supporting line. Requires first.x < last.x.
ChordSide chord_side(const Point& p, const Point& first, const Point& last);

/// Evaluates the hypothesis list of the named result on coordinate
/// sequences xs, ys and reports the first failed condition, if any.
HypothesisReport check_hypotheses(const RealSeq& xs, const RealSeq& ys, Theorem theorem);

/// Whether the slope inequality holds at every interior index. Requires
/// the Prop1/Prop2 hypotheses to be satisfied, and must then always return
/// true; it is exposed so the property suite can assert that implication
/// on generated instances.
bool slope_inequality_from_hypotheses(const RealSeq& xs, const RealSeq& ys, Theorem which);

}  // namespace cvx
