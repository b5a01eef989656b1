#include "cvx/verify.hpp"

#include <utility>

#include "cvx/oracle.hpp"

namespace cvx {

namespace {

constexpr std::uint8_t kAgreedBit = 0x10;

std::uint8_t encode(VerdictKind kind, bool strict, bool agreed) {
    return static_cast<std::uint8_t>(static_cast<std::uint8_t>(kind) << 1 |
                                     static_cast<std::uint8_t>(strict)) |
           (agreed ? kAgreedBit : 0);
}

void append_detail(std::string* detail, const std::string& msg) {
    if (!detail) return;
    if (!detail->empty()) *detail += "; ";
    *detail += msg;
}

bool check_hypothesis_mode(const FuzzConfig& cfg, const PointSeq& seq,
                           const PolygonVerdict& main, std::string* detail) {
    bool ok = true;
    if (main.kind != VerdictKind::ConvexBelowChord &&
        main.kind != VerdictKind::DegenerateCollinear) {
        append_detail(detail, std::string("hypothesis instance classified ") + to_string(main.kind));
        ok = false;
    }
    RealSeq xs;
    RealSeq ys;
    for (const Point& pt : seq.points()) {
        xs.push_back(pt.x);
        ys.push_back(pt.y);
    }
    const Theorem theorem = cfg.mode == GenMode::HypThm15   ? Theorem::Thm15
                            : cfg.mode == GenMode::HypThm16 ? Theorem::Thm16
                                                            : Theorem::Thm17;
    const HypothesisReport report = check_hypotheses(xs, ys, theorem);
    if (!report.satisfied) {
        append_detail(detail, "generated instance fails hypotheses: " + *report.failed_condition);
        ok = false;
    }
    if (theorem != Theorem::Thm17) {
        const Theorem prop = theorem == Theorem::Thm15 ? Theorem::Prop1 : Theorem::Prop2;
        if (!slope_inequality_from_hypotheses(xs, ys, prop)) {
            append_detail(detail, "slope inequality fails under satisfied hypotheses");
            ok = false;
        }
    }
    return ok;
}

}  // namespace

bool outcome_agreed(std::uint8_t outcome) {
    return (outcome & kAgreedBit) != 0;
}

std::uint8_t check_instance(const FuzzConfig& cfg, std::uint64_t index,
                            const Classifier& classifier, std::string* detail) {
    const PointSeq seq = generate_instance(cfg, index);
    const PolygonVerdict main = classifier ? classifier(seq) : classify(seq);
    bool ok = true;

    const PolygonVerdict oracle = oracle_classify(seq);
    if (main.kind != oracle.kind || main.strict != oracle.strict) {
        append_detail(detail, std::string("slope verdict ") + to_string(main.kind) +
                                  (main.strict ? " (strict)" : " (weak)") + " vs orientation " +
                                  to_string(oracle.kind) + (oracle.strict ? " (strict)" : " (weak)"));
        ok = false;
    }
    if (main.kind == VerdictKind::NotConvex && !main.witness) {
        append_detail(detail, "NotConvex verdict without witness");
        ok = false;
    }
    if (!hull_consistent(seq, main)) {
        append_detail(detail, "hull chains contradict verdict");
        ok = false;
    }
    if (cfg.mode == GenMode::HypThm15 || cfg.mode == GenMode::HypThm16 ||
        cfg.mode == GenMode::HypThm17) {
        ok = check_hypothesis_mode(cfg, seq, main, detail) && ok;
    }
    return encode(main.kind, main.strict, ok);
}

namespace {

VerifyReport finalize(const FuzzConfig& cfg, std::vector<std::uint8_t> outcomes,
                      const Classifier& classifier) {
    VerifyReport report;
    report.instances = cfg.instances;
    report.seed = cfg.seed;
    report.outcomes = std::move(outcomes);
    for (std::uint64_t i = 0; i < cfg.instances; ++i) {
        if (outcome_agreed(report.outcomes[i])) {
            ++report.agreements;
            continue;
        }
        ++report.disagreements;
        // Disagreements are rare; regenerate serially to build the dump.
        Disagreement dump;
        dump.index = i;
        dump.relax_endpoints = cfg.relax_endpoints;
        dump.points = generate_instance(cfg, i).points();
        check_instance(cfg, i, classifier, &dump.detail);
        report.dumps.push_back(std::move(dump));
    }
    return report;
}

}  // namespace

VerifyReport run_verification_serial(const FuzzConfig& cfg, const Classifier& classifier) {
    validate(cfg);
    std::vector<std::uint8_t> outcomes(cfg.instances, 0);
    for (std::uint64_t i = 0; i < cfg.instances; ++i) {
        outcomes[i] = check_instance(cfg, i, classifier, nullptr);
    }
    return finalize(cfg, std::move(outcomes), classifier);
}

VerifyReport run_verification_parallel(const FuzzConfig& cfg, const Classifier& classifier) {
    validate(cfg);
    std::vector<std::uint8_t> outcomes(cfg.instances, 0);
    const auto count = static_cast<long long>(cfg.instances);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < count; ++i) {
        outcomes[i] = check_instance(cfg, static_cast<std::uint64_t>(i), classifier, nullptr);
    }
    return finalize(cfg, std::move(outcomes), classifier);
}

VerifyReport run_verification(const FuzzConfig& cfg, bool parallel, const Classifier& classifier) {
    return parallel ? run_verification_parallel(cfg, classifier)
                    : run_verification_serial(cfg, classifier);
}

}  // namespace cvx
