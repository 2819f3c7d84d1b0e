#pragma once

#include "alpec/core.hpp"

namespace alpec {

/// Event-count matching parameters for one subject.
struct MatchConfig {
    double buffer_before_s = 15.0;
    double buffer_after_s = 15.0;
    double max_duration_s = 60.0;   // d; ignored when duration_unbounded
    bool duration_unbounded = false;
    double sampling_rate_hz = 1.0;
    std::int64_t n_samples = 0;

    std::int64_t max_duration_samples() const;
};

/// Each ground-truth interval becomes
/// [max(0, start - round(b_before*f)), min(n, end + round(b_after*f))).
/// Input order is retained; extended intervals may overlap each other and
/// are deliberately not re-merged.
std::vector<Interval> extend_ground_truth(std::span<Interval const> gt, MatchConfig const& cfg);

/// Greedy one-to-one event counting: ground-truth intervals are visited in
/// ascending-start order and each one matches the first (smallest start)
/// predicted interval that overlaps, has length <= round(d*f), and is not
/// yet matched. Unmatched ground truth counts as FN; every unmatched
/// prediction counts as FP. Inputs must be sorted ascending by start.
MatchResult match_and_count(std::span<Interval const> gt_ext, std::span<Interval const> pred,
                            MatchConfig const& cfg);

} // namespace alpec
