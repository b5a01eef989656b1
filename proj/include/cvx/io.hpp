#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvx/polygon.hpp"
#include "cvx/sequence.hpp"
#include "cvx/verify.hpp"

namespace cvx {

enum class FileFormat { Infer, Csv, Json };

/// Point list as read from disk, plus the relaxation flag the file itself
/// declares (JSON only; CSV files rely on the command-line flag).
struct PointsFile {
    std::vector<Point> points;
    bool relax_endpoints = false;
};

// CSV: one "x,y" per line for points, one value per line for sequences.
// JSON: {"points": [["x","y"], ...]} / {"values": [...]}; values may be
// strings or bare numbers, and bare numbers are read from their source
// tokens so decimals stay exact. `origin` names the input in diagnostics.
PointsFile parse_points_csv(std::string_view text, const std::string& origin);
PointsFile parse_points_json(std::string_view text, const std::string& origin);
RealSeq parse_sequence_csv(std::string_view text, const std::string& origin);
RealSeq parse_sequence_json(std::string_view text, const std::string& origin);

PointsFile read_points_file(const std::string& path, FileFormat format);
RealSeq read_sequence_file(const std::string& path, FileFormat format);

/// Resolves Infer from the file extension (.csv or .json).
FileFormat resolve_format(const std::string& path, FileFormat format);

// JSON emission. All output is a single compact line ending in '\n' with
// fixed key order, so identical inputs give byte-identical output.
std::string verdict_json(const PolygonVerdict& verdict, const SlopeProfile& profile);
std::string sequence_report_json(const SeqReport& report, std::optional<std::size_t> pivot);
std::string verify_report_json(const VerifyReport& report);
std::string instance_json(const std::vector<Point>& points, bool relax_endpoints);

}  // namespace cvx
