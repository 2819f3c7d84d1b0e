#pragma once

#include "alpec/config.hpp"
#include "alpec/core.hpp"

#include <optional>

namespace alpec {

/// How adjacent predicted intervals are fused: by the distance between
/// their score maxima (onset detection; needs pointwise scores) or by the
/// gap between interval endpoints (full event detection).
enum class MergeMode { onset_maxima, endpoint_gap };

/// Merge mode implied by the task and the input resolution. Onset tasks
/// merge on score maxima when pointwise scores exist; windowed inputs
/// carry no pointwise scores and fall back to endpoint gaps.
MergeMode merge_mode_for(Task task, Resolution resolution);

/// Centered moving average with window round(w*f) samples; at the edges
/// the window shrinks to the available samples. w = 0 (or a window of one
/// sample) is the identity. Output length equals input length.
std::vector<double> smooth_scores(std::span<double const> values, double window_s, double f);

/// ScoreSeries overload; rejects windowed-resolution input.
ScoreSeries smooth_scores(ScoreSeries const& scores, double window_s, double f);

/// Binary sequence with output[i] = 1 iff values[i] >= t.
std::vector<std::uint8_t> threshold_scores(std::span<double const> values, double t);

/// Per-window labels -> pointwise labels of length n; sample i receives
/// the label of window i / round(s*f). The label count must equal
/// ceil(n / round(s*f)).
std::vector<std::uint8_t> expand_window_labels(std::span<std::uint8_t const> labels,
                                               double window_s, double f, std::int64_t n);

/// Single left-to-right pass over consecutive intervals. endpoint_gap
/// merges when next.start - current.end < round(delta*f); onset_maxima
/// merges when the score argmaxes (smallest index attaining the maximum)
/// are closer than round(delta*f), recomputing the representative over
/// the merged extent before the next comparison. Input must be sorted and
/// disjoint; output is sorted and disjoint.
std::vector<Interval> merge_intervals(std::span<Interval const> intervals,
                                      std::span<double const> scores, double min_distance_s,
                                      double f, MergeMode mode);

/// Scores after the per-subject preprocessing step: smoothed copy for
/// pointwise streams (when w > 0), plain copy otherwise.
std::vector<double> preprocess_scores(ScoreSeries const& scores, EvalConfig const& cfg);

/// Per-window binary labels: thresholded at t, or taken verbatim when t is
/// nullopt (binary label input).
std::vector<std::uint8_t> window_label_predictions(std::span<double const> windowed_values,
                                                   std::optional<double> t);

/// Pointwise binary predictions from preprocessed scores: thresholding,
/// plus window expansion for windowed inputs. t may be nullopt only for
/// binary window labels.
std::vector<std::uint8_t> binary_predictions(ScoreSeries const& meta,
                                             std::span<double const> preprocessed,
                                             std::optional<double> t, EvalConfig const& cfg);

/// Predicted intervals from preprocessed scores at threshold t: binary
/// predictions, maximal-run extraction, interval merging. This is the
/// single interval-construction path shared by every evaluation entry
/// point.
std::vector<Interval> predicted_intervals(ScoreSeries const& meta,
                                          std::span<double const> preprocessed,
                                          std::optional<double> t, EvalConfig const& cfg);

/// Full post-processing chain for one subject: preprocess + thresholding
/// + resampling + interval merging.
std::vector<Interval> post_process(SubjectRecord const& subject, std::optional<double> t,
                                   EvalConfig const& cfg);

} // namespace alpec
