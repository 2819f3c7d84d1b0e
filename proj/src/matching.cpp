#include "alpec/matching.hpp"

#include <algorithm>
#include <limits>

namespace alpec {

std::int64_t MatchConfig::max_duration_samples() const {
    if (duration_unbounded) return std::numeric_limits<std::int64_t>::max();
    return seconds_to_samples(max_duration_s, sampling_rate_hz);
}

std::vector<Interval> extend_ground_truth(std::span<Interval const> gt, MatchConfig const& cfg) {
    std::int64_t const before = seconds_to_samples(cfg.buffer_before_s, cfg.sampling_rate_hz);
    std::int64_t const after = seconds_to_samples(cfg.buffer_after_s, cfg.sampling_rate_hz);
    std::vector<Interval> out;
    out.reserve(gt.size());
    for (auto const& g : gt) {
        out.push_back({std::max<std::int64_t>(0, g.start - before),
                       std::min<std::int64_t>(cfg.n_samples, g.end + after)});
    }
    return out;
}

namespace {

void require_sorted(std::span<Interval const> intervals, char const* name) {
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].start < intervals[i - 1].start) {
            throw ValidationError(std::string("match_and_count: ") + name +
                                  " intervals not sorted ascending by start at index " +
                                  std::to_string(i));
        }
    }
}

} // namespace

MatchResult match_and_count(std::span<Interval const> gt_ext, std::span<Interval const> pred,
                            MatchConfig const& cfg) {
    require_sorted(gt_ext, "ground-truth");
    require_sorted(pred, "predicted");

    std::int64_t const max_len = cfg.max_duration_samples();
    std::vector<std::uint8_t> matched(pred.size(), 0);
    MatchResult result;
    for (std::size_t g = 0; g < gt_ext.size(); ++g) {
        bool found = false;
        for (std::size_t p = 0; p < pred.size(); ++p) {
            if (pred[p].start >= gt_ext[g].end) break;
            if (matched[p] || pred[p].length() > max_len) continue;
            if (overlaps(gt_ext[g], pred[p])) {
                matched[p] = 1;
                result.matched_pairs.emplace_back(static_cast<std::int64_t>(g),
                                                  static_cast<std::int64_t>(p));
                ++result.tp;
                found = true;
                break;
            }
        }
        if (!found) ++result.fn;
    }
    result.fp = static_cast<std::int64_t>(pred.size()) - result.tp;
    return result;
}

} // namespace alpec
