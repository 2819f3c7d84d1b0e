#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace alpec {

/// Raised on any input that fails validation; the message carries the
/// offending file/line or index where one exists.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Half-open sample-index range [start, end). Point annotations occupy
/// exactly one sample (end == start + 1).
struct Interval {
    std::int64_t start = 0;
    std::int64_t end = 0;

    std::int64_t length() const { return end - start; }
    bool operator==(Interval const&) const = default;
};

/// True iff the intersection of a and b is non-empty. Touching half-open
/// intervals ([0,5) vs [5,9)) do not overlap.
inline bool overlaps(Interval const& a, Interval const& b) {
    return a.start < b.end && a.end > b.start;
}

/// Seconds -> sample index at rate f, rounded to nearest with ties away
/// from zero. This is the single conversion point for all duration and
/// buffer arithmetic.
inline std::int64_t seconds_to_samples(double seconds, double f) {
    return std::llround(seconds * f);
}

enum class Resolution { pointwise, windowed };

std::string to_string(Resolution r);
Resolution resolution_from_string(std::string const& s);

/// Per-subject score stream: pointwise probabilities, per-window
/// probabilities, or binary window labels. n_samples is always the
/// underlying pointwise length; a windowed stream holds
/// ceil(n_samples / window_samples) values.
struct ScoreSeries {
    std::vector<double> values;
    Resolution resolution = Resolution::pointwise;
    double sampling_rate_hz = 1.0;
    std::int64_t n_samples = 0;

    /// True when every value is exactly 0 or 1; windowed binary streams
    /// are treated as class labels and skip thresholding.
    bool is_binary() const;
};

/// Clinical annotation record. Onset is the only coordinate that matters
/// for onset-detection targets; duration defaults to the 3 s clinical
/// standard and is ignored by IOD/POD target construction.
struct EventAnnotation {
    std::string label;
    double onset_s = 0.0;
    double duration_s = 0.0;
};

enum class Fold { train, validation, test };

std::string to_string(Fold f);
Fold fold_from_string(std::string const& s);

struct SubjectRecord {
    std::string subject_id;
    ScoreSeries scores;
    std::vector<EventAnnotation> events;
    Fold fold = Fold::validation;
};

struct ConfusionCounts {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
};

/// Event-count comparison result: counts plus the matched
/// (ground-truth index, predicted index) pairs, in ground-truth order.
struct MatchResult : ConfusionCounts {
    std::vector<std::pair<std::int64_t, std::int64_t>> matched_pairs;
};

/// Maximal runs of 1s as sorted, disjoint half-open intervals.
/// Values other than 0/1 raise ValidationError naming the index.
std::vector<Interval> extract_intervals(std::span<std::uint8_t const> binary);

/// Inverse of extract_intervals: 1 inside any interval, 0 elsewhere.
std::vector<std::uint8_t> rasterize(std::span<Interval const> intervals, std::int64_t n);

} // namespace alpec
