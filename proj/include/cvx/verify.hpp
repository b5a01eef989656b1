#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cvx/generate.hpp"
#include "cvx/polygon.hpp"

namespace cvx {

/// Replayable record of a failed instance check.
struct Disagreement {
    std::uint64_t index = 0;
    std::vector<Point> points;
    bool relax_endpoints = false;
    std::string detail;
};

struct VerifyReport {
    std::uint64_t instances = 0;
    std::uint64_t agreements = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t seed = 0;
    // Per-instance outcome code (verdict kind, strict bit, agreement bit);
    // identical for the serial and parallel runners by construction.
    std::vector<std::uint8_t> outcomes;
    std::vector<Disagreement> dumps;

    friend bool operator==(const VerifyReport& a, const VerifyReport& b) {
        return a.instances == b.instances && a.agreements == b.agreements &&
               a.disagreements == b.disagreements && a.seed == b.seed && a.outcomes == b.outcomes;
    }
};

/// Override point for the classifier under test; tests inject faulty
/// classifiers to exercise the disagreement path.
using Classifier = std::function<PolygonVerdict(const PointSeq&)>;

/// Checks one generated instance: slope classification against the
/// orientation-cycle verdict and the hull chains, plus the hypothesis
/// assertions in the hypothesis modes. Returns an outcome code and fills
/// `detail` when the checks disagree.
std::uint8_t check_instance(const FuzzConfig& cfg, std::uint64_t index,
                            const Classifier& classifier, std::string* detail);

/// True when the outcome code records full agreement.
bool outcome_agreed(std::uint8_t outcome);

/// Serial reference runner: one instance at a time, in index order.
VerifyReport run_verification_serial(const FuzzConfig& cfg, const Classifier& classifier = {});

/// OpenMP runner; instances are independent streams, so the report is
/// identical to the serial one for any thread count.
VerifyReport run_verification_parallel(const FuzzConfig& cfg, const Classifier& classifier = {});

VerifyReport run_verification(const FuzzConfig& cfg, bool parallel = true,
                              const Classifier& classifier = {});

}  // namespace cvx
