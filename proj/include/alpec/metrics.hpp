#pragma once

#include "alpec/config.hpp"
#include "alpec/core.hpp"

#include <optional>

namespace alpec {

struct MetricSet {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
};

/// Precision, recall, F1 and F2 from counts. Degenerate denominators give
/// 0, except tp = fp = fn = 0 which scores 1.0 everywhere: a correct
/// "no events" call is perfect agreement, not failure.
MetricSet compute_metrics(std::int64_t tp, std::int64_t fp, std::int64_t fn);

inline MetricSet compute_metrics(ConfusionCounts const& c) {
    return compute_metrics(c.tp, c.fp, c.fn);
}

/// Training-fold F2 values over the fixed threshold grid.
struct ThresholdSweep {
    std::vector<double> thresholds;
    std::vector<std::string> subject_ids;
    std::vector<std::vector<double>> per_subject_f2; // [subject][threshold]

    std::vector<double> mean_f2() const;
};

struct ThresholdChoice {
    int index = 0;
    double value = 0.0;
    bool operator==(ThresholdChoice const&) const = default;
};

/// Index of the maximum value; ties resolve to the smallest index.
std::size_t argmax_smallest(std::span<double const> values);

/// Grid threshold maximizing the subject-mean F2; ties resolve to the
/// smallest threshold.
ThresholdChoice select_threshold(ThresholdSweep const& sweep);

struct SubjectResult {
    std::string subject_id;
    MatchResult counts; // matched_pairs populated for the alpec scheme only
    MetricSet metrics;
};

struct Report {
    std::optional<ThresholdChoice> t_opt; // nullopt for binary window-label input
    std::vector<SubjectResult> per_subject;
    MetricSet aggregate; // arithmetic means over per_subject
    EvalConfig config;
};

/// Recomputes the aggregate from per_subject and raises ValidationError on
/// any mismatch.
void validate_report(Report const& report);

/// Counts for one subject at threshold t under cfg.scheme (t = nullopt for
/// binary window labels). matched_pairs are filled for alpec only.
MatchResult count_subject(SubjectRecord const& subject, std::optional<double> t,
                          EvalConfig const& cfg);

/// Per-(train-subject, threshold) F2 matrix over the full grid. Requires a
/// non-empty train fold and probability-score input.
ThresholdSweep run_sweep(std::span<SubjectRecord const> dataset, EvalConfig const& cfg,
                         int threads = 0);

/// Full evaluation: threshold selection on the train fold (skipped for
/// binary window-label input), then per-subject metrics on the validation
/// fold, aggregated by arithmetic mean. The (subject x threshold) sweep
/// runs on OpenMP worker threads; results are identical for any thread
/// count.
Report evaluate(std::span<SubjectRecord const> dataset, EvalConfig const& cfg, int threads = 0);

namespace reference {

/// Plain sequential re-implementation of evaluate(), kept as the oracle
/// for the parallel path; produces byte-identical reports.
Report evaluate(std::span<SubjectRecord const> dataset, EvalConfig const& cfg);

} // namespace reference

} // namespace alpec
