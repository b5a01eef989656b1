#pragma once

#include <vector>

#include "cvx/polygon.hpp"

namespace cvx {

enum class Orientation { Clockwise, CounterClockwise, Collinear };

/// Sign of the cross product (b - a) x (c - a), exact.
Orientation orient(const Point& a, const Point& b, const Point& c);

/// Brute-force ground truth for classify, computed without any slope
/// comparison: walks the closed cycle P1...PnP1 and requires every triple
/// to turn the same way (collinear triples allowed), then picks the side
/// from chord_side of the off-chord vertices. Throws OracleInconsistency
/// if the off-chord vertices disagree about the side, which would be a bug.
PolygonVerdict oracle_classify(const PointSeq& p);

/// Strict convex hull (no collinear boundary points) in counterclockwise
/// order starting from the lexicographically smallest vertex. Duplicates
/// in the input are ignored.
std::vector<Point> convex_hull(std::vector<Point> points);

/// Second ground truth: checks a verdict against the hull's lower/upper
/// chains (a below-chord convex sequence is exactly one whose points all
/// lie on the lower hull boundary, mirrored for above). Instances with an
/// actual vertical endpoint edge are skipped (returns true); the
/// orientation cycle covers those.
bool hull_consistent(const PointSeq& p, const PolygonVerdict& verdict);

}  // namespace cvx
