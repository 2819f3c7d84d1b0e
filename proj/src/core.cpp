#include "alpec/core.hpp"

#include <algorithm>

namespace alpec {

std::string to_string(Resolution r) {
    return r == Resolution::pointwise ? "pointwise" : "windowed";
}

Resolution resolution_from_string(std::string const& s) {
    if (s == "pointwise") return Resolution::pointwise;
    if (s == "windowed") return Resolution::windowed;
    throw ValidationError("unknown resolution '" + s + "' (expected pointwise|windowed)");
}

std::string to_string(Fold f) {
    switch (f) {
        case Fold::train: return "train";
        case Fold::validation: return "validation";
        default: return "test";
    }
}

Fold fold_from_string(std::string const& s) {
    if (s == "train") return Fold::train;
    if (s == "validation") return Fold::validation;
    if (s == "test") return Fold::test;
    throw ValidationError("unknown fold '" + s + "' (expected train|validation|test)");
}

bool ScoreSeries::is_binary() const {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return v == 0.0 || v == 1.0; });
}

std::vector<Interval> extract_intervals(std::span<std::uint8_t const> binary) {
    std::vector<Interval> out;
    std::int64_t run_start = -1;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(binary.size()); ++i) {
        std::uint8_t const v = binary[i];
        if (v > 1) {
            throw ValidationError("extract_intervals: non-binary value " +
                                  std::to_string(static_cast<int>(v)) + " at index " +
                                  std::to_string(i));
        }
        if (v == 1 && run_start < 0) {
            run_start = i;
        } else if (v == 0 && run_start >= 0) {
            out.push_back({run_start, i});
            run_start = -1;
        }
    }
    if (run_start >= 0) out.push_back({run_start, static_cast<std::int64_t>(binary.size())});
    return out;
}

std::vector<std::uint8_t> rasterize(std::span<Interval const> intervals, std::int64_t n) {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n), 0);
    for (auto const& iv : intervals) {
        std::int64_t const lo = std::max<std::int64_t>(iv.start, 0);
        std::int64_t const hi = std::min<std::int64_t>(iv.end, n);
        for (std::int64_t i = lo; i < hi; ++i) out[static_cast<std::size_t>(i)] = 1;
    }
    return out;
}

} // namespace alpec
