#include "alpec/synth.hpp"

#include "alpec/schemes.hpp"

#include <algorithm>
#include <cstdio>

namespace alpec {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x2545F4914F6CDD1DULL));
}

std::uint64_t fnv1a64(std::string const& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t const limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return x % n;
}

std::string to_string(PredictorKind k) {
    switch (k) {
        case PredictorKind::constant0: return "constant0";
        case PredictorKind::constant1: return "constant1";
        case PredictorKind::random_uniform: return "random_uniform";
        case PredictorKind::random_stratified: return "random_stratified";
        default: return "jittered_oracle";
    }
}

PredictorKind predictor_kind_from_string(std::string const& s) {
    if (s == "constant0") return PredictorKind::constant0;
    if (s == "constant1") return PredictorKind::constant1;
    if (s == "random_uniform") return PredictorKind::random_uniform;
    if (s == "random_stratified") return PredictorKind::random_stratified;
    if (s == "jittered_oracle") return PredictorKind::jittered_oracle;
    throw ValidationError("unknown predictor '" + s +
                          "' (expected constant0|constant1|random_uniform|random_stratified|"
                          "jittered_oracle)");
}

SubjectRecord generate_subject(SynthParams const& params, std::int64_t subject_index) {
    if (params.night_length_s <= 0 || params.sampling_rate_hz <= 0) {
        throw ValidationError("generate_subject: night length and sampling rate must be positive");
    }
    Rng rng(mix_seed(params.seed, static_cast<std::uint64_t>(subject_index)));

    std::int64_t count = params.arousals_min;
    if (params.arousals_max > params.arousals_min) {
        count += static_cast<std::int64_t>(
                rng.below(static_cast<std::uint64_t>(params.arousals_max - params.arousals_min + 1)));
    }
    std::int64_t const n_samples =
            seconds_to_samples(params.night_length_s, params.sampling_rate_hz);
    // place against the post-rounding horizon so every event fits in [0, n/f]
    double const horizon_s = static_cast<double>(n_samples) / params.sampling_rate_hz;
    double const gap = params.min_onset_gap_s;
    double const margin = gap; // arousals need preceding sleep; keep t=0 clear
    double const slack = horizon_s - margin -
                         static_cast<double>(std::max<std::int64_t>(0, count - 1)) * gap -
                         params.event_duration_s;
    if (count > 0 && slack <= 0.0) {
        throw ValidationError("generate_subject: cannot place " + std::to_string(count) +
                              " events with " + std::to_string(gap) + " s gaps in " +
                              std::to_string(params.night_length_s) + " s");
    }

    std::vector<double> u(static_cast<std::size_t>(count));
    for (auto& v : u) v = rng.uniform(0.0, slack);
    std::sort(u.begin(), u.end());

    SubjectRecord rec;
    char idbuf[32];
    std::snprintf(idbuf, sizeof(idbuf), "s%03lld", static_cast<long long>(subject_index));
    rec.subject_id = idbuf;
    rec.fold = Fold::validation;
    rec.events.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        EventAnnotation ev;
        ev.label = params.label;
        ev.onset_s = margin + u[i] + static_cast<double>(i) * gap;
        ev.duration_s = params.event_duration_s;
        rec.events.push_back(ev);
    }

    rec.scores.resolution = Resolution::pointwise;
    rec.scores.sampling_rate_hz = params.sampling_rate_hz;
    rec.scores.n_samples = n_samples;
    rec.scores.values.assign(static_cast<std::size_t>(n_samples), 0.0);
    return rec;
}

std::vector<SubjectRecord> generate_subjects(SynthParams const& params) {
    std::vector<SubjectRecord> out;
    out.reserve(static_cast<std::size_t>(params.n_subjects));
    for (std::int64_t i = 0; i < params.n_subjects; ++i) {
        out.push_back(generate_subject(params, i));
        out.back().fold = i % 2 == 0 ? Fold::train : Fold::validation;
    }
    return out;
}

ScoreSeries predict(Predictor const& predictor, SubjectRecord const& subject,
                    EvalConfig const& cfg, std::uint64_t seed) {
    double const f = subject.scores.sampling_rate_hz;
    std::int64_t const n = subject.scores.n_samples;
    Rng rng(mix_seed(seed, fnv1a64(subject.subject_id)));

    ScoreSeries out;
    out.sampling_rate_hz = f;
    out.n_samples = n;

    auto windowed = [&](auto fill) {
        out.resolution = Resolution::windowed;
        std::int64_t const windows = window_count(n, cfg.window_s, f);
        out.values.resize(static_cast<std::size_t>(windows));
        for (auto& v : out.values) v = fill();
        return out;
    };

    switch (predictor.kind) {
        case PredictorKind::constant0:
            return windowed([] { return 0.0; });
        case PredictorKind::constant1:
            return windowed([] { return 1.0; });
        case PredictorKind::random_uniform:
            return windowed([&] { return rng.bernoulli(0.5) ? 1.0 : 0.0; });
        case PredictorKind::random_stratified: {
            auto const targets = build_targets(subject.events, cfg.task, cfg.iod_length_s,
                                               cfg.iod_alignment, f, n);
            auto const gt_windows = window_labels_presence(rasterize(targets, n), cfg.window_s, f);
            std::int64_t const positives =
                    std::count(gt_windows.begin(), gt_windows.end(), std::uint8_t{1});
            double const prior = gt_windows.empty()
                                         ? 0.0
                                         : static_cast<double>(positives) /
                                                   static_cast<double>(gt_windows.size());
            return windowed([&] { return rng.bernoulli(prior) ? 1.0 : 0.0; });
        }
        case PredictorKind::jittered_oracle: {
            out.resolution = Resolution::pointwise;
            out.values.assign(static_cast<std::size_t>(n), 0.0);
            auto const targets = build_targets(subject.events, cfg.task, cfg.iod_length_s,
                                               cfg.iod_alignment, f, n);
            auto paint = [&](std::int64_t lo, std::int64_t hi) {
                lo = std::max<std::int64_t>(0, lo);
                hi = std::min<std::int64_t>(n, hi);
                for (std::int64_t i = lo; i < hi; ++i) out.values[static_cast<std::size_t>(i)] = 1.0;
            };
            for (auto const& target : targets) {
                // Fixed draw order keeps the stream stable across rates.
                double const u_miss = rng.uniform();
                double const jitter = rng.uniform(-predictor.jitter_s, predictor.jitter_s);
                double const u_extra = rng.uniform();
                double const u_extra_pos = rng.uniform();
                if (u_miss >= predictor.miss_rate) {
                    std::int64_t const shift = seconds_to_samples(jitter, f);
                    paint(target.start + shift, target.end + shift);
                }
                if (u_extra < predictor.extra_rate) {
                    std::int64_t const len = target.length();
                    std::int64_t const lo = static_cast<std::int64_t>(
                            u_extra_pos * static_cast<double>(std::max<std::int64_t>(1, n - len)));
                    paint(lo, lo + len);
                }
            }
            return out;
        }
    }
    throw ValidationError("predict: unhandled predictor kind");
}

std::vector<SubjectRecord> generate_dataset(SynthParams const& params, Predictor const& predictor,
                                            EvalConfig const& cfg) {
    auto subjects = generate_subjects(params);
    for (auto& s : subjects) s.scores = predict(predictor, s, cfg, params.seed);
    return subjects;
}

} // namespace alpec
