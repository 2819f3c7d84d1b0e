#include "alpec/postproc.hpp"

#include "alpec/schemes.hpp"

#include <algorithm>
#include <cstdlib>

namespace alpec {

MergeMode merge_mode_for(Task task, Resolution resolution) {
    if (task != Task::fed && resolution == Resolution::pointwise) return MergeMode::onset_maxima;
    return MergeMode::endpoint_gap;
}

std::vector<double> smooth_scores(std::span<double const> values, double window_s, double f) {
    std::int64_t const n = static_cast<std::int64_t>(values.size());
    std::int64_t const len = window_s > 0.0 ? seconds_to_samples(window_s, f) : 0;
    std::vector<double> out(values.begin(), values.end());
    if (len <= 1 || n == 0) return out;

    // Prefix sums keep the windowed means exact for binary streams (sums
    // stay integral below 2^53) and O(n) for arbitrary window lengths.
    std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::int64_t i = 0; i < n; ++i) {
        prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + values[static_cast<std::size_t>(i)];
    }
    std::int64_t const left = (len - 1) / 2;
    std::int64_t const right = len / 2;
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t const lo = std::max<std::int64_t>(0, i - left);
        std::int64_t const hi = std::min<std::int64_t>(n, i + right + 1);
        double const mean = (prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo)]) /
                            static_cast<double>(hi - lo);
        out[static_cast<std::size_t>(i)] = std::clamp(mean, 0.0, 1.0);
    }
    return out;
}

ScoreSeries smooth_scores(ScoreSeries const& scores, double window_s, double f) {
    if (scores.resolution != Resolution::pointwise) {
        throw ValidationError("smooth_scores: smoothing applies only to pointwise scores");
    }
    ScoreSeries out = scores;
    out.values = smooth_scores(std::span<double const>(scores.values), window_s, f);
    return out;
}

std::vector<std::uint8_t> threshold_scores(std::span<double const> values, double t) {
    std::vector<std::uint8_t> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] >= t ? 1 : 0;
    return out;
}

std::vector<std::uint8_t> expand_window_labels(std::span<std::uint8_t const> labels,
                                               double window_s, double f, std::int64_t n) {
    std::int64_t const w = window_samples(window_s, f);
    std::int64_t const expected = window_count(n, window_s, f);
    if (static_cast<std::int64_t>(labels.size()) != expected) {
        throw ValidationError("expand_window_labels: got " + std::to_string(labels.size()) +
                              " window labels, expected " + std::to_string(expected) + " for n=" +
                              std::to_string(n));
    }
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = labels[static_cast<std::size_t>(i / w)];
    }
    return out;
}

namespace {

// Smallest index attaining the maximum score within [iv.start, iv.end).
std::int64_t score_argmax(Interval const& iv, std::span<double const> scores) {
    std::int64_t best = iv.start;
    double best_v = scores[static_cast<std::size_t>(iv.start)];
    for (std::int64_t i = iv.start + 1; i < iv.end; ++i) {
        double const v = scores[static_cast<std::size_t>(i)];
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    return best;
}

} // namespace

std::vector<Interval> merge_intervals(std::span<Interval const> intervals,
                                      std::span<double const> scores, double min_distance_s,
                                      double f, MergeMode mode) {
    if (intervals.empty()) return {};
    if (mode == MergeMode::onset_maxima &&
        (scores.empty() ||
         intervals.back().end > static_cast<std::int64_t>(scores.size()))) {
        throw ValidationError(
                "merge_intervals: onset_maxima mode requires pointwise scores covering all intervals");
    }
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].start < intervals[i - 1].end) {
            throw ValidationError("merge_intervals: input intervals not sorted/disjoint at index " +
                                  std::to_string(i));
        }
    }
    std::int64_t const min_dist = seconds_to_samples(min_distance_s, f);
    std::vector<Interval> out;
    out.reserve(intervals.size());
    Interval cur = intervals[0];
    std::int64_t rep = mode == MergeMode::onset_maxima ? score_argmax(cur, scores) : 0;
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        Interval const& next = intervals[i];
        bool merge;
        if (mode == MergeMode::endpoint_gap) {
            merge = next.start - cur.end < min_dist;
        } else {
            merge = std::abs(score_argmax(next, scores) - rep) < min_dist;
        }
        if (merge) {
            cur.end = next.end;
            if (mode == MergeMode::onset_maxima) rep = score_argmax(cur, scores);
        } else {
            out.push_back(cur);
            cur = next;
            if (mode == MergeMode::onset_maxima) rep = score_argmax(cur, scores);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<double> preprocess_scores(ScoreSeries const& scores, EvalConfig const& cfg) {
    if (scores.resolution == Resolution::pointwise && cfg.smooth_window_s > 0.0) {
        return smooth_scores(std::span<double const>(scores.values), cfg.smooth_window_s,
                             scores.sampling_rate_hz);
    }
    return scores.values;
}

std::vector<std::uint8_t> window_label_predictions(std::span<double const> windowed_values,
                                                   std::optional<double> t) {
    if (t.has_value()) return threshold_scores(windowed_values, *t);
    std::vector<std::uint8_t> labels(windowed_values.size());
    for (std::size_t i = 0; i < windowed_values.size(); ++i) {
        labels[i] = windowed_values[i] != 0.0 ? 1 : 0;
    }
    return labels;
}

std::vector<std::uint8_t> binary_predictions(ScoreSeries const& meta,
                                             std::span<double const> preprocessed,
                                             std::optional<double> t, EvalConfig const& cfg) {
    if (meta.resolution == Resolution::windowed) {
        auto const labels = window_label_predictions(preprocessed, t);
        return expand_window_labels(labels, cfg.window_s, meta.sampling_rate_hz, meta.n_samples);
    }
    if (!t.has_value()) {
        throw ValidationError("binary_predictions: a threshold is required for pointwise scores");
    }
    return threshold_scores(preprocessed, *t);
}

std::vector<Interval> predicted_intervals(ScoreSeries const& meta,
                                          std::span<double const> preprocessed,
                                          std::optional<double> t, EvalConfig const& cfg) {
    double const f = meta.sampling_rate_hz;
    auto const binary = binary_predictions(meta, preprocessed, t, cfg);
    auto const intervals = extract_intervals(binary);
    MergeMode const mode = merge_mode_for(cfg.task, meta.resolution);
    std::span<double const> merge_scores =
            mode == MergeMode::onset_maxima ? preprocessed : std::span<double const>();
    return merge_intervals(intervals, merge_scores, cfg.merge_distance_s, f, mode);
}

std::vector<Interval> post_process(SubjectRecord const& subject, std::optional<double> t,
                                   EvalConfig const& cfg) {
    auto const proc = preprocess_scores(subject.scores, cfg);
    return predicted_intervals(subject.scores, proc, t, cfg);
}

} // namespace alpec
