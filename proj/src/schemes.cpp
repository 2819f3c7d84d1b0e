#include "alpec/schemes.hpp"

#include <algorithm>

namespace alpec {

std::string to_string(Task t) {
    switch (t) {
        case Task::fed: return "fed";
        case Task::iod: return "iod";
        default: return "pod";
    }
}

Task task_from_string(std::string const& s) {
    if (s == "fed") return Task::fed;
    if (s == "iod") return Task::iod;
    if (s == "pod") return Task::pod;
    throw ValidationError("unknown task '" + s + "' (expected fed|iod|pod)");
}

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::alpec: return "alpec";
        case Scheme::pe: return "pe";
        default: return "we";
    }
}

Scheme scheme_from_string(std::string const& s) {
    if (s == "alpec") return Scheme::alpec;
    if (s == "pe") return Scheme::pe;
    if (s == "we") return Scheme::we;
    throw ValidationError("unknown scheme '" + s + "' (expected alpec|pe|we)");
}

std::string to_string(IodAlignment a) {
    return a == IodAlignment::centered ? "centered" : "leading";
}

IodAlignment iod_alignment_from_string(std::string const& s) {
    if (s == "centered") return IodAlignment::centered;
    if (s == "leading") return IodAlignment::leading;
    throw ValidationError("unknown iod_alignment '" + s + "' (expected centered|leading)");
}

std::vector<Interval> build_targets(std::span<EventAnnotation const> events, Task task,
                                    double iod_length_s, IodAlignment alignment, double f,
                                    std::int64_t n) {
    std::vector<Interval> out;
    out.reserve(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
        auto const& ev = events[i];
        if (i > 0 && ev.onset_s < events[i - 1].onset_s) {
            throw ValidationError("build_targets: events not sorted by onset at index " +
                                  std::to_string(i));
        }
        Interval iv;
        switch (task) {
            case Task::fed:
                iv.start = seconds_to_samples(ev.onset_s, f);
                iv.end = seconds_to_samples(ev.onset_s + ev.duration_s, f);
                break;
            case Task::iod:
                if (alignment == IodAlignment::centered) {
                    iv.start = seconds_to_samples(ev.onset_s - iod_length_s / 2.0, f);
                    iv.end = seconds_to_samples(ev.onset_s + iod_length_s / 2.0, f);
                } else {
                    iv.start = seconds_to_samples(ev.onset_s, f);
                    iv.end = seconds_to_samples(ev.onset_s + iod_length_s, f);
                }
                break;
            case Task::pod:
                iv.start = seconds_to_samples(ev.onset_s, f);
                iv.end = iv.start + 1;
                break;
        }
        iv.start = std::clamp<std::int64_t>(iv.start, 0, n - 1);
        iv.end = std::clamp<std::int64_t>(iv.end, 0, n);
        if (iv.end <= iv.start) iv.end = iv.start + 1; // zero-duration event -> point
        out.push_back(iv);
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].start < out[i - 1].end) {
            throw ValidationError("build_targets: constructed intervals overlap for events " +
                                  std::to_string(i - 1) + " ('" + events[i - 1].label + "', onset " +
                                  std::to_string(events[i - 1].onset_s) + " s) and " +
                                  std::to_string(i) + " ('" + events[i].label + "', onset " +
                                  std::to_string(events[i].onset_s) + " s)");
        }
    }
    return out;
}

std::int64_t window_samples(double window_s, double f) {
    return std::max<std::int64_t>(1, seconds_to_samples(window_s, f));
}

std::int64_t window_count(std::int64_t n, double window_s, double f) {
    std::int64_t const w = window_samples(window_s, f);
    return (n + w - 1) / w;
}

std::vector<std::uint8_t> window_labels_presence(std::span<std::uint8_t const> binary,
                                                 double window_s, double f) {
    std::int64_t const n = static_cast<std::int64_t>(binary.size());
    std::int64_t const w = window_samples(window_s, f);
    std::vector<std::uint8_t> out(static_cast<std::size_t>(window_count(n, window_s, f)), 0);
    for (std::int64_t i = 0; i < n; ++i) {
        if (binary[static_cast<std::size_t>(i)]) out[static_cast<std::size_t>(i / w)] = 1;
    }
    return out;
}

ConfusionCounts evaluate_pointwise(std::span<std::uint8_t const> gt,
                                   std::span<std::uint8_t const> pred) {
    if (gt.size() != pred.size()) {
        throw ValidationError("evaluate_pointwise: length mismatch (" +
                              std::to_string(gt.size()) + " vs " + std::to_string(pred.size()) +
                              ")");
    }
    ConfusionCounts c;
    for (std::size_t i = 0; i < gt.size(); ++i) {
        if (gt[i] && pred[i]) ++c.tp;
        else if (!gt[i] && pred[i]) ++c.fp;
        else if (gt[i] && !pred[i]) ++c.fn;
    }
    return c;
}

ConfusionCounts evaluate_windowed(std::span<std::uint8_t const> gt,
                                  std::span<std::uint8_t const> pred, bool pred_windowed,
                                  double window_s, double f) {
    auto const gt_win = window_labels_presence(gt, window_s, f);
    std::vector<std::uint8_t> pred_win;
    if (pred_windowed) {
        pred_win.assign(pred.begin(), pred.end());
    } else {
        pred_win = window_labels_presence(pred, window_s, f);
    }
    if (pred_win.size() != gt_win.size()) {
        throw ValidationError("evaluate_windowed: window count mismatch (" +
                              std::to_string(pred_win.size()) + " vs expected " +
                              std::to_string(gt_win.size()) + ")");
    }
    return evaluate_pointwise(gt_win, pred_win);
}

} // namespace alpec
