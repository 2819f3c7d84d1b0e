#pragma once

#include "alpec/core.hpp"

namespace alpec {

/// Target construction mode: full events, fixed-length intervals around
/// each onset, or single-sample onset points.
enum class Task { fed, iod, pod };

/// Evaluation scheme: interval-level event counting, pointwise confusion
/// counts, or window-based counts under the presence criterion.
enum class Scheme { alpec, pe, we };

/// Placement of the IOD interval relative to the onset.
enum class IodAlignment { centered, leading };

std::string to_string(Task t);
Task task_from_string(std::string const& s);
std::string to_string(Scheme s);
Scheme scheme_from_string(std::string const& s);
std::string to_string(IodAlignment a);
IodAlignment iod_alignment_from_string(std::string const& s);

/// Ground-truth intervals for the given task, clamped to [0, n), sorted.
/// fed: [onset, onset+duration); iod: length-l interval around the onset;
/// pod: one sample at the onset. Events must be sorted by onset and the
/// constructed intervals must be pairwise disjoint; violations raise
/// ValidationError listing the offending event pair.
std::vector<Interval> build_targets(std::span<EventAnnotation const> events, Task task,
                                    double iod_length_s, IodAlignment alignment, double f,
                                    std::int64_t n);

/// Consecutive non-overlapping windows of round(s*f) samples; a window is
/// labelled 1 iff it contains at least one positive sample. The trailing
/// partial window is kept.
std::vector<std::uint8_t> window_labels_presence(std::span<std::uint8_t const> binary,
                                                 double window_s, double f);

/// Number of samples per window (>= 1) for window size s at rate f.
std::int64_t window_samples(double window_s, double f);

/// Number of presence windows covering n samples.
std::int64_t window_count(std::int64_t n, double window_s, double f);

/// Per-sample confusion counts. Lengths must match.
ConfusionCounts evaluate_pointwise(std::span<std::uint8_t const> gt,
                                   std::span<std::uint8_t const> pred);

/// Window-level confusion counts under the presence criterion. gt is
/// pointwise; pred is pointwise (reduced here) or already per-window
/// (pred_windowed = true, count must match).
ConfusionCounts evaluate_windowed(std::span<std::uint8_t const> gt,
                                  std::span<std::uint8_t const> pred, bool pred_windowed,
                                  double window_s, double f);

} // namespace alpec
